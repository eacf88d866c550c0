#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace airseek {

/// Sectioned key-value configuration text:
///
///   # comment
///   [section]
///   key = value
///   key = another          # repeated keys accumulate
///
/// Lookups are exact-match on section and key names. Scalar getters read the
/// last occurrence of a repeated key; get_all returns every occurrence in
/// file order. Parse and conversion failures raise ConfigError with the
/// offending location.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text,
                             const std::string& name = "<string>");

  bool has(const std::string& section, const std::string& key) const;

  std::string get(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double_or(const std::string& section, const std::string& key,
                       double fallback) const;
  long long get_int(const std::string& section, const std::string& key) const;
  long long get_int_or(const std::string& section, const std::string& key,
                       long long fallback) const;
  bool get_bool_or(const std::string& section, const std::string& key,
                   bool fallback) const;

  /// Whitespace-separated list of doubles in one value.
  std::vector<double> get_doubles(const std::string& section,
                                  const std::string& key) const;

  /// Every occurrence of a repeated key, in file order.
  std::vector<std::string> get_all(const std::string& section,
                                   const std::string& key) const;

  /// Overwrite (or insert) a single-valued key, e.g. for CLI overrides.
  void set(const std::string& section, const std::string& key,
           const std::string& value);

  /// Sections in sorted order.
  std::vector<std::string> sections() const;

  /// Canonical text form: sorted sections and keys, normalized spacing.
  /// Repeated values keep their file order.
  std::string canonical() const;

  /// FNV-1a hash of the canonical form.
  std::uint64_t hash() const;

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::map<std::string, std::map<std::string, std::vector<std::string>>>
      data_;
};

/// 16-digit lowercase hex rendering used for config hashes.
std::string to_hex(std::uint64_t value);

}  // namespace airseek
