#include "pumsim/parse_util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pumsim {

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::int64_t parse_int64(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  if (t.empty()) {
    throw ParseError("empty value for " + std::string(what));
  }
  std::size_t consumed = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(t, &consumed);
  } catch (const std::exception&) {
    throw ParseError("invalid integer '" + t + "' for " + std::string(what));
  }
  if (consumed != t.size()) {
    throw ParseError("invalid integer '" + t + "' for " + std::string(what));
  }
  return value;
}

std::int64_t parse_size(std::string_view text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("empty workload size");
  std::int64_t scale = 1;
  const char last = t.back();
  if (last == 'K' || last == 'k') {
    scale = 1024;
    t.pop_back();
  } else if (last == 'M' || last == 'm') {
    scale = 1024 * 1024;
    t.pop_back();
  }
  return parse_int64(t, "workload size") * scale;
}

std::vector<KeyValueLine> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<KeyValueLine> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": expected key=value, got '" + t + "'");
    }
    lines.push_back(KeyValueLine{trim(t.substr(0, eq)), trim(t.substr(eq + 1)), number});
  }
  return lines;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace pumsim
