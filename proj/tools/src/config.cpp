#include "wbirkhoff_cli/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wbirkhoff/errors.hpp"

namespace wbirkhoff::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')) return false;
  return true;
}

}  // namespace

Config Config::parse(std::string_view text, std::string_view origin) {
  Config cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ContractError(where + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    if (!valid_key(key)) throw ContractError(where + ": invalid key '" + std::string(key) + "'");
    cfg.values_[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

void Config::set(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ContractError("--set expects key=value, got '" + std::string(assignment) + "'");
  const auto key = trim(assignment.substr(0, eq));
  if (!valid_key(key)) throw ContractError("invalid key '" + std::string(key) + "'");
  values_[std::string(key)] = std::string(trim(assignment.substr(eq + 1)));
}

void Config::merge(const Config& other) {
  for (const auto& [k, v] : other.values_) values_[k] = v;
}

std::string Config::get(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::vector<std::string> Config::get_list(const std::string& key, const std::string& fallback) const {
  return split_list(get(key, fallback));
}

long long Config::get_int(const std::string& key, long long fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_integer(it->second, key);
}

std::vector<long long> Config::get_int_list(const std::string& key, const std::string& fallback) const {
  std::vector<long long> out;
  for (const auto& item : get_list(key, fallback)) out.push_back(parse_integer(item, key));
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

long long parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  const auto bad = [&] { return ContractError("'" + std::string(what) + "' expects an integer, got '" + std::string(text) + "'"); };
  long long mantissa = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, mantissa);
  if (ec != std::errc{}) throw bad();
  if (p == end) return mantissa;
  if (*p != 'e' && *p != 'E') throw bad();
  int exponent = 0;
  auto [q, ec2] = std::from_chars(p + 1, end, exponent);
  if (ec2 != std::errc{} || q != end || exponent < 0 || exponent > 18) throw bad();
  long long v = mantissa;
  for (int i = 0; i < exponent; ++i) {
    if (v > 922337203685477580LL || v < -922337203685477580LL) throw bad();
    v *= 10;
  }
  return v;
}

}  // namespace wbirkhoff::cli
