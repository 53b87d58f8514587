#ifndef PUMSIM_PARSE_UTIL_HPP
#define PUMSIM_PARSE_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pumsim {

// Malformed scalar value; file readers catch this to attach the
// offending line number.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

// Strict integer parse; `what` names the field in the error message.
// Throws ParseError.
std::int64_t parse_int64(std::string_view text, std::string_view what);

// Integer with an optional K/M suffix (1K = 1024), e.g. "64K" -> 65536.
std::int64_t parse_size(std::string_view text);

// key=value lines; '#' comments and blank lines are skipped. Throws
// std::runtime_error naming the file and 1-based line number on malformed
// input. Returns (key, value, line_number) triples in file order.
struct KeyValueLine {
  std::string key;
  std::string value;
  int line = 0;
};
std::vector<KeyValueLine> read_key_value_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace pumsim

#endif  // PUMSIM_PARSE_UTIL_HPP
