#pragma once

#include <map>
#include <string>

namespace laumon {

// key = value configuration; flags override config values, config overrides
// the built-in defaults.
struct Config {
  int series_order = 6;
  int parallelism = 1;
  bool allow_n2 = false;

  static Config from_file(const std::string& path);
  void check_n(int n) const;  // enforces n > 2 unless allow_n2
};

}  // namespace laumon
