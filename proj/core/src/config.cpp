#include "airseek/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "airseek/errors.hpp"

namespace airseek {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string location(const std::string& name, int line) {
  return name + ":" + std::to_string(line);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& name) {
  Config cfg;
  cfg.name_ = name;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError(location(name, lineno) + ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError(location(name, lineno) + ": empty section name");
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(location(name, lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(location(name, lineno) + ": empty key");
    }
    if (section.empty()) {
      throw ConfigError(location(name, lineno) +
                        ": key outside of any [section]");
    }
    cfg.data_[section][key].push_back(value);
  }
  return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto sec = data_.find(section);
  if (sec == data_.end()) return false;
  return sec->second.find(key) != sec->second.end();
}

std::string Config::get(const std::string& section,
                        const std::string& key) const {
  const auto sec = data_.find(section);
  if (sec != data_.end()) {
    const auto it = sec->second.find(key);
    if (it != sec->second.end() && !it->second.empty()) {
      return it->second.back();
    }
  }
  throw ConfigError(name_ + ": missing required key '" + section + "." + key +
                    "'");
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double Config::get_double(const std::string& section,
                          const std::string& key) const {
  const std::string raw = get(section, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(name_ + ": key '" + section + "." + key +
                      "' is not a number: '" + raw + "'");
  }
}

double Config::get_double_or(const std::string& section,
                             const std::string& key, double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section,
                          const std::string& key) const {
  const std::string raw = get(section, key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(name_ + ": key '" + section + "." + key +
                      "' is not an integer: '" + raw + "'");
  }
}

long long Config::get_int_or(const std::string& section,
                             const std::string& key, long long fallback) const {
  return has(section, key) ? get_int(section, key) : fallback;
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
  if (!has(section, key)) return fallback;
  const std::string raw = get(section, key);
  if (raw == "true" || raw == "yes" || raw == "on" || raw == "1") return true;
  if (raw == "false" || raw == "no" || raw == "off" || raw == "0") {
    return false;
  }
  throw ConfigError(name_ + ": key '" + section + "." + key +
                    "' is not a boolean: '" + raw + "'");
}

std::vector<double> Config::get_doubles(const std::string& section,
                                        const std::string& key) const {
  const std::string raw = get(section, key);
  std::istringstream in(raw);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ConfigError(name_ + ": key '" + section + "." + key +
                        "' has a non-numeric entry: '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::string> Config::get_all(const std::string& section,
                                         const std::string& key) const {
  const auto sec = data_.find(section);
  if (sec == data_.end()) return {};
  const auto it = sec->second.find(key);
  if (it == sec->second.end()) return {};
  return it->second;
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
  data_[section][key] = {value};
}

std::vector<std::string> Config::sections() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const auto& [name, _] : data_) out.push_back(name);
  return out;
}

std::string Config::canonical() const {
  std::ostringstream out;
  for (const auto& [section, keys] : data_) {
    out << '[' << section << "]\n";
    for (const auto& [key, values] : keys) {
      for (const std::string& v : values) out << key << " = " << v << '\n';
    }
  }
  return out.str();
}

std::uint64_t Config::hash() const {
  const std::string text = canonical();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace airseek
