#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge {

using Clock = std::chrono::system_clock;
using Timestamp = std::chrono::sys_seconds;

/// ISO-8601 UTC, second precision: "2024-05-01T12:00:00Z".
std::string format_timestamp(Timestamp t);
/// Inverse of format_timestamp. Throws Error(parse) on malformed input.
Timestamp parse_timestamp(std::string_view text);
Timestamp now_utc();

std::string ascii_lower(std::string_view s);
std::string trim(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

/// Decodes %XX escapes; malformed escapes are copied through.
std::string percent_decode(std::string_view s);

/// Lowercase, whitespace and underscore runs collapsed to one underscore,
/// leading/trailing separators dropped. Used for page and concept ids.
std::string slugify(std::string_view s);

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(std::string_view data);

/// Reads a whole file; throws Error(not_found) if it cannot be opened.
std::string read_file(const std::string& path);
/// Writes atomically enough for our purposes: truncate + write + flush.
void write_file(const std::string& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' on each line.
std::vector<std::string> split_lines(std::string_view text);

}  // namespace ontoforge
