#pragma once

#include <map>
#include <string>

namespace twoatom {

// Flat key=value configuration file: one pair per line, '#' comments and
// blank lines ignored.  Throws on unreadable files or malformed lines.
std::map<std::string, std::string> load_key_values(const std::string& path);

}  // namespace twoatom
