#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace deepmh {

/// Flat `section.key = value` experiment configuration. `#` starts a comment.
/// Relative paths resolve against the directory of the config file.
class Config {
 public:
  Config() = default;

  static Config parse(std::string_view text, std::filesystem::path base_dir = {});
  static Config load(const std::filesystem::path& path);

  void set(const std::string& key, std::string value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma- or whitespace-separated numbers.
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key, std::vector<int> fallback) const;
  std::vector<std::string> get_strings(const std::string& key) const;
  std::filesystem::path get_path(const std::string& key) const;
  std::optional<std::filesystem::path> find_path(const std::string& key) const;

  /// Keys that were set but never read.
  std::vector<std::string> unused_keys() const;
  const std::filesystem::path& base_dir() const { return base_dir_; }

 private:
  const std::string& raw(const std::string& key) const;

  std::map<std::string, std::string> values_;
  std::filesystem::path base_dir_;
  mutable std::set<std::string> used_;
};

}  // namespace deepmh
