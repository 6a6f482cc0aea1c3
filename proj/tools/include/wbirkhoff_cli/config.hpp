#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wbirkhoff::cli {

// Flat "key = value" settings. '#' starts a comment; later assignments win.
// Malformed input raises ContractError (a usage error at the CLI).
class Config {
 public:
  static Config parse(std::string_view text, std::string_view origin = "config");
  static Config load(const std::string& path);

  // "key=value"
  void set(std::string_view assignment);
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void merge(const Config& other);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  std::vector<std::string> get_list(const std::string& key, const std::string& fallback = "") const;
  long long get_int(const std::string& key, long long fallback) const;
  std::vector<long long> get_int_list(const std::string& key, const std::string& fallback = "") const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Comma separated, whitespace trimmed, empty items dropped.
std::vector<std::string> split_list(std::string_view text);

// Integers accept a plain form or a power of ten like 1e6.
long long parse_integer(std::string_view text, std::string_view what);

}  // namespace wbirkhoff::cli
