#include "lqw/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace lqw {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void CsvTable::add_comment(const std::string& line) { comments_.push_back(line); }

void CsvTable::set_header(std::vector<std::string> columns) { header_ = std::move(columns); }

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("CSV row width does not match the header");
  }
  rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
  std::ostringstream out;
  for (const std::string& c : comments_) out << "# " << c << "\n";
  for (size_t i = 0; i < header_.size(); ++i) {
    if (i) out << ',';
    out << header_[i];
  }
  out << "\n";
  for (const auto& row : rows_) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

void CsvTable::write(const std::string& path) const {
  if (path.empty()) {
    std::cout << to_string();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << to_string();
}

std::string config_comment(const std::string& command,
                           const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ostringstream out;
  out << "lqw " << kVersion << " " << command;
  for (const auto& [key, value] : entries) out << " " << key << "=" << value;
  return out.str();
}

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

std::map<std::string, std::string> parse_key_value_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream stream(text);
  std::string line;
  int lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + " is not key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + " has an empty key");
    }
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> parse_key_value_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_key_value_text(text.str());
}

std::vector<double> LogGrid::values() const {
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(start);
    return out;
  }
  const double log_start = std::log(start);
  const double log_stop = std::log(stop);
  for (int i = 0; i < points; ++i) {
    out.push_back(std::exp(log_start + (log_stop - log_start) * i / (points - 1)));
  }
  return out;
}

LogGrid parse_log_grid(const std::string& text) {
  LogGrid grid;
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument("grid must be start:stop:points, got '" + text + "'");
  }
  try {
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    grid.points = std::stoi(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must be start:stop:points, got '" + text + "'");
  }
  if (!(grid.start > 0.0) || !(grid.stop > 0.0)) {
    throw std::invalid_argument("grid bounds must be strictly positive");
  }
  if (grid.points < 1) {
    throw std::invalid_argument("grid needs at least one point");
  }
  if (grid.points == 1 && grid.start != grid.stop) {
    throw std::invalid_argument("a one-point grid needs start == stop");
  }
  return grid;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    size_t pos = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse number '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("cannot parse number '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace lqw
