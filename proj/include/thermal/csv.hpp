#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thermal::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, or nullopt.
    std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC-4180 parser: quoted fields, doubled quotes, embedded separators and
/// newlines, CRLF or LF line endings. A UTF-8 BOM on the first line is skipped.
/// Throws FormatError on unterminated quotes, an empty header, or rows whose
/// field count differs from the header.
Table parse(std::string_view text);
Table read_file(const std::filesystem::path& path);

std::string escape(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string format_double(double value);
// Fixed-point with the given number of decimals.
std::string format_fixed(double value, int decimals);

std::optional<double> parse_double(std::string_view text);

std::string trim(std::string_view text);
std::string to_lower(std::string_view text);

}  // namespace thermal::csv
