#include <fstream>
#include <sstream>
#include <stdexcept>

#include "scs/strings.hpp"

namespace scs {

Instance parse_instance(std::istream& in, NormalizeOptions options) {
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    raw.push_back(line);
  }
  return normalize(raw, options);
}

Instance parse_instance(std::string_view text, NormalizeOptions options) {
  std::istringstream in{std::string(text)};
  return parse_instance(in, options);
}

Instance load_instance(const std::string& path, NormalizeOptions options) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  return parse_instance(in, options);
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  for (const auto& s : inst.strings()) {
    if (s.front() == '#') {
      throw std::invalid_argument("a string starting with '#' cannot be written as a line");
    }
    out += s;
    out += '\n';
  }
  return out;
}

}  // namespace scs
