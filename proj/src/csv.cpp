#include "twoatom/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace twoatom {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    for (const auto& [key, value] : result.metadata)
        out << "# " << key << " = " << value << "\n";

    for (size_t c = 0; c < result.columns.size(); ++c) {
        if (c) out << ',';
        out << result.columns[c];
    }
    out << '\n';

    for (const auto& row : result.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_double(row[c]);
        }
        out << '\n';
    }
}

void write_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_csv(result, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const auto result =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size())
        throw std::runtime_error("malformed number in CSV: '" + text + "'");
    return value;
}

}  // namespace

SweepResult read_csv(std::istream& in) {
    SweepResult result;
    std::string line;
    bool have_header = false;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body.front() == ' ') body.erase(0, 1);
            const auto eq = body.find(" = ");
            if (eq == std::string::npos)
                result.metadata.emplace_back(body, "");
            else
                result.metadata.emplace_back(body.substr(0, eq),
                                             body.substr(eq + 3));
            continue;
        }
        if (!have_header) {
            result.columns = split(line, ',');
            have_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != result.columns.size())
            throw std::runtime_error("CSV row width mismatch");
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& field : fields) row.push_back(parse_double(field));
        result.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error("CSV has no header row");
    return result;
}

SweepResult read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_csv(in);
}

}  // namespace twoatom
