#include "laumon/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "laumon/poly.hpp"

namespace laumon {

Config Config::from_file(const std::string& path) {
  Config c;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "series_order")
      c.series_order = std::stoi(val);
    else if (key == "parallelism")
      c.parallelism = std::stoi(val);
    else if (key == "allow_n2")
      c.allow_n2 = (val == "1" || val == "true" || val == "yes");
    else if (!key.empty())
      throw std::runtime_error("unknown config key: " + key);
  }
  return c;
}

void Config::check_n(int n) const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (n == 2 && !allow_n2)
    throw std::invalid_argument(
        "n = 2 is outside the verified range; set allow_n2 = true to force");
  if (n > kMaxXVars)
    throw std::invalid_argument("n exceeds the compiled variable limit");
}

}  // namespace laumon
