#include "twoatom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "twoatom/analytic.hpp"
#include "twoatom/coupling.hpp"
#include "twoatom/dynamics.hpp"
#include "twoatom/observables.hpp"

namespace twoatom {

std::string engine_name(Engine engine) {
    return engine == Engine::master ? "master" : "analytic";
}

std::string axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::theta: return "theta";
        case SweepAxis::detuning_l: return "detuning_l";
        case SweepAxis::delta: return "delta";
        case SweepAxis::separation: return "separation";
    }
    return "axis";
}

namespace {

std::string format_value(double value) {
    std::ostringstream out;
    out.precision(15);
    out << value;
    return out.str();
}

std::string observable_label(const ObservableSpec& obs) {
    if (!obs.label.empty()) return obs.label;
    switch (obs.kind) {
        case ObservableSpec::Kind::intensity: return "I";
        case ObservableSpec::Kind::intensity_at: {
            std::ostringstream out;
            out.precision(6);
            out << "I(theta=" << obs.theta << ")";
            return out.str();
        }
        case ObservableSpec::Kind::intensity_sum: {
            std::ostringstream out;
            out.precision(6);
            out << "I(" << obs.theta << ")+I(" << obs.theta2 << ")";
            return out.str();
        }
        case ObservableSpec::Kind::contrast_antisym: return "C_antisym";
        case ObservableSpec::Kind::contrast_sym: return "C_sym";
        case ObservableSpec::Kind::decomposition: return "";
    }
    return "value";
}

std::vector<std::string> value_columns(const SweepSpec& spec) {
    std::vector<std::string> columns;
    for (const auto& obs : spec.observables) {
        if (obs.kind == ObservableSpec::Kind::decomposition) {
            const std::string prefix =
                obs.label.empty() ? std::string() : obs.label + " ";
            for (const char* part : {"i0", "ic", "is", "ie", "psi"})
                columns.push_back(prefix + part);
        } else {
            columns.push_back(observable_label(obs));
        }
    }
    return columns;
}

void check_spec(const SweepSpec& spec) {
    if (spec.observables.empty())
        throw std::invalid_argument("no observables requested");
    if (spec.count < 2)
        throw std::invalid_argument("sweep needs at least two points");
    if (!(spec.start < spec.stop))
        throw std::invalid_argument("sweep range must satisfy start < stop");
    if (spec.engine == Engine::analytic &&
        spec.mode.kind != CouplingMode::Kind::independent)
        throw std::invalid_argument(
            "analytic engine is only defined for independent atoms");
    for (const auto& obs : spec.observables) {
        if (obs.kind == ObservableSpec::Kind::intensity &&
            spec.axis != SweepAxis::theta)
            throw std::invalid_argument(
                "profile intensity requires a theta axis; use intensity_at");
    }
}

// Everything needed to evaluate the observables at one axis point.
struct PointState {
    AtomPair pair;
    Drive drive;
    double theta_axis = 0.0;
    Engine engine = Engine::master;
    // master engine only
    CollectiveParams collective;
    DensityMatrix rho;

    double intensity_at(double theta) const {
        if (engine == Engine::master)
            return twoatom::intensity(rho, pair, theta);
        return intensity_independent(pair, drive, theta);
    }

    Decomposition parts() const {
        if (engine == Engine::master)
            return decompose(rho, pair, collective);
        const IndependentAmplitudes amplitudes =
            independent_amplitudes(pair, drive);
        Decomposition parts;
        parts.i0 = amplitudes.i0;
        parts.ic = amplitudes.ic;
        parts.is = amplitudes.is;
        if (parts.ic == 0.0 && parts.is == 0.0) {
            parts.ie = 0.0;
            parts.psi = 0.0;
        } else {
            parts.psi = std::atan2(parts.is, parts.ic);
            parts.ie = std::hypot(parts.ic, parts.is);
        }
        return parts;
    }

    double c_sym() const {
        if (engine == Engine::master) return contrast_symmetric(rho, pair);
        const Decomposition p = parts();
        if (p.i0 <= 0.0)
            throw std::domain_error(
                "symmetric contrast undefined: no emission");
        return p.ic / p.i0;
    }
};

PointState evaluate_point(const SweepSpec& spec, double x) {
    PointState state;
    state.pair = spec.pair;
    state.drive = spec.drive;
    state.engine = spec.engine;
    switch (spec.axis) {
        case SweepAxis::theta: state.theta_axis = x; break;
        case SweepAxis::detuning_l: state.drive.detuning_l = x; break;
        case SweepAxis::delta: state.pair.delta = x; break;
        case SweepAxis::separation: state.pair.separation = x; break;
    }

    if (spec.engine == Engine::master) {
        state.collective = resolve_coupling(state.pair, spec.mode);
        const Generator gen =
            build_generator(state.pair, state.drive, state.collective);
        state.rho = steady_state(gen);
    }
    return state;
}

std::vector<double> evaluate_row(const SweepSpec& spec, double x) {
    const PointState state = evaluate_point(spec, x);

    std::vector<double> row;
    row.push_back(x);
    for (const auto& obs : spec.observables) {
        switch (obs.kind) {
            case ObservableSpec::Kind::intensity:
                row.push_back(state.intensity_at(state.theta_axis));
                break;
            case ObservableSpec::Kind::intensity_at:
                row.push_back(state.intensity_at(obs.theta));
                break;
            case ObservableSpec::Kind::intensity_sum:
                row.push_back(state.intensity_at(obs.theta) +
                              state.intensity_at(obs.theta2));
                break;
            case ObservableSpec::Kind::contrast_antisym:
                row.push_back(contrast_antisymmetric(state.parts()));
                break;
            case ObservableSpec::Kind::contrast_sym:
                row.push_back(state.c_sym());
                break;
            case ObservableSpec::Kind::decomposition: {
                const Decomposition p = state.parts();
                row.insert(row.end(), {p.i0, p.ic, p.is, p.ie, p.psi});
                break;
            }
        }
    }
    for (double value : row) {
        if (!std::isfinite(value))
            throw std::runtime_error("non-finite observable value");
    }
    return row;
}

std::vector<std::pair<std::string, std::string>> config_metadata(
    const SweepSpec& spec) {
    std::vector<std::pair<std::string, std::string>> meta;
    const CollectiveParams collective = resolve_coupling(spec.pair, spec.mode);
    meta.emplace_back("gamma1", format_value(spec.pair.gamma1));
    meta.emplace_back("gamma2", format_value(spec.pair.gamma2));
    meta.emplace_back("delta", format_value(spec.pair.delta));
    meta.emplace_back("separation", format_value(spec.pair.separation));
    meta.emplace_back("dipole_axis_angle",
                      format_value(spec.pair.dipole_axis_angle));
    meta.emplace_back("rabi", format_value(spec.drive.rabi));
    meta.emplace_back("detuning_l", format_value(spec.drive.detuning_l));
    meta.emplace_back("propagation_angle",
                      format_value(spec.drive.propagation_angle));
    meta.emplace_back("initial_phase",
                      format_value(spec.drive.initial_phase));
    meta.emplace_back("coupling", spec.mode.name());
    meta.emplace_back("omega12", format_value(collective.omega12));
    meta.emplace_back("gamma12", format_value(collective.gamma12));
    meta.emplace_back("engine", engine_name(spec.engine));
    return meta;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    check_spec(spec);
    const Configuration config = validate(spec.pair, spec.drive, spec.mode);

    SweepSpec normalized = spec;
    normalized.pair = config.pair;
    normalized.drive = config.drive;

    const double step =
        (normalized.stop - normalized.start) / (normalized.count - 1);
    std::vector<std::vector<double>> rows(normalized.count);

    struct PointError {
        int index;
        std::string what;
    };
    std::optional<PointError> first_error;
    std::mutex error_mutex;

    auto worker_body = [&](int index) {
        const double x = normalized.start + index * step;
        try {
            rows[index] = evaluate_row(normalized, x);
        } catch (const std::exception& err) {
            std::ostringstream msg;
            msg << "sweep point " << axis_name(normalized.axis) << " = " << x
                << ": " << err.what();
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error || index < first_error->index)
                first_error = PointError{index, msg.str()};
        }
    };

    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        for (int i = 0; i < normalized.count; ++i) worker_body(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min(jobs, normalized.count);
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < normalized.count;
                     i = next.fetch_add(1))
                    worker_body(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    if (first_error) throw std::runtime_error(first_error->what);

    SweepResult result;
    result.columns.push_back(axis_name(normalized.axis));
    for (auto& name : value_columns(normalized))
        result.columns.push_back(std::move(name));
    result.rows = std::move(rows);

    result.metadata.emplace_back("version", kVersion);
    if (!normalized.label.empty())
        result.metadata.emplace_back("label", normalized.label);
    result.metadata.emplace_back("axis", axis_name(normalized.axis));
    result.metadata.emplace_back(
        "grid", format_value(normalized.start) + ":" +
                    format_value(normalized.stop) + ":" +
                    std::to_string(normalized.count));
    for (auto& entry : config_metadata(normalized))
        result.metadata.push_back(std::move(entry));
    for (const auto& note : normalized.notes)
        result.metadata.emplace_back("note", note);
    return result;
}

SweepResult run_preset(const Preset& figure, int jobs) {
    if (figure.curves.empty())
        throw std::invalid_argument("preset has no curves");

    SweepResult merged;
    bool first = true;
    for (const auto& curve : figure.curves) {
        SweepSpec spec = curve;
        spec.jobs = jobs;
        SweepResult result = run_sweep(spec);
        if (first) {
            merged.columns.push_back(result.columns.front());
            merged.rows.resize(result.rows.size());
            for (size_t i = 0; i < result.rows.size(); ++i)
                merged.rows[i].push_back(result.rows[i].front());
            merged.metadata.emplace_back("version", kVersion);
            merged.metadata.emplace_back("preset", figure.name);
            merged.metadata.emplace_back("axis", result.columns.front());
            first = false;
        } else if (merged.rows.size() != result.rows.size()) {
            throw std::logic_error("preset curves disagree on the axis grid");
        }

        const std::string prefix =
            curve.label.empty() ? std::string() : curve.label + " ";
        for (size_t c = 1; c < result.columns.size(); ++c) {
            merged.columns.push_back(prefix + result.columns[c]);
            for (size_t i = 0; i < result.rows.size(); ++i)
                merged.rows[i].push_back(result.rows[i][c]);
        }

        std::string echo;
        for (const auto& [key, value] : result.metadata) {
            if (key == "version" || key == "axis" || key == "note" ||
                key == "label")
                continue;
            if (!echo.empty()) echo += " ";
            echo += key + "=" + value;
        }
        merged.metadata.emplace_back(
            "curve " + (curve.label.empty() ? "?" : curve.label), echo);
    }
    for (const auto& note : figure.notes)
        merged.metadata.emplace_back("note", note);
    return merged;
}

}  // namespace twoatom
