#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deepmh::text {

/// Full-precision decimal (`%.17g`); parses back to the identical double.
std::string format_double(double v);

/// Parses a whole token as a double. `where` is prefixed to the error message.
double parse_double(std::string_view token, std::string_view where);
long long parse_int(std::string_view token, std::string_view where);

std::vector<std::string_view> split_whitespace(std::string_view line);
std::vector<std::string_view> split(std::string_view line, char sep);
std::string_view trim(std::string_view s);

/// Splits text into lines, dropping a trailing '\r' on each.
std::vector<std::string_view> lines(std::string_view text);

std::string read_file(const std::string& path);
/// Writes atomically enough for our purposes: to `path.tmp`, then rename.
void write_file(const std::string& path, std::string_view contents);

}  // namespace deepmh::text
