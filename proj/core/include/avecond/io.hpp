#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "avecond/matrix.hpp"

namespace avecond {

// Plain-text matrix format: a header line "rows cols" followed by rows*cols
// whitespace-separated decimal entries in row-major order. Vectors use a
// header "n" followed by n entries. Scientific notation is accepted.
// Missing entries raise ParseError (with line/column); surplus entries raise
// DimensionMismatch.
Matrix parse_matrix(std::string_view text);
Vector parse_vector(std::string_view text);
Matrix read_matrix(const std::filesystem::path& path);
Vector read_vector(const std::filesystem::path& path);

// Shortest round-trip decimal, one matrix row per line. parse(format(x)) == x
// bit for bit.
std::string format_matrix(const Matrix& a);
std::string format_vector(std::span<const double> x);
std::string format_double(double v);

// Whole file as a string; throws InvalidArgument when unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace avecond
