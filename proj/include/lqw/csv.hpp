#pragma once

#include <map>
#include <string>
#include <vector>

namespace lqw {

inline constexpr const char* kVersion = "0.1.0";

/// Fixed-format float serialization: 12 significant digits, '.' decimal
/// separator, "nan"/"inf" spelled out. Used for every CSV number so output
/// is byte-stable.
std::string format_double(double value);

/// CSV with '#' comment lines, ',' separators and LF line endings.
class CsvTable {
 public:
  void add_comment(const std::string& line);  // without the leading '#'
  void set_header(std::vector<std::string> columns);
  void add_row(std::vector<std::string> cells);  // must match the header width
  std::string to_string() const;
  /// Writes to the path, or to stdout when the path is empty.
  void write(const std::string& path) const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Comment line of the form "lqw <version> <command> k1=v1 k2=v2 ..." with
/// keys in the given order.
std::string config_comment(const std::string& command,
                           const std::vector<std::pair<std::string, std::string>>& entries);

// ---- flat key=value config files ----

/// Parses "key=value" lines; blank lines and '#' comments are skipped;
/// whitespace around keys and values is trimmed. Duplicate keys keep the
/// last value.
std::map<std::string, std::string> parse_key_value_text(const std::string& text);
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

// ---- parameter grids ----

/// "start:stop:points", logarithmically spaced, strictly positive bounds.
struct LogGrid {
  double start = 1.0;
  double stop = 1.0;
  int points = 1;
  std::vector<double> values() const;
};
LogGrid parse_log_grid(const std::string& text);

/// Comma-separated decimals.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace lqw
