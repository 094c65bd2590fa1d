#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wfm/binary_matrix.hpp"
#include "wfm/weight_matrix.hpp"

namespace wfm {

// Text format: one matrix row per line, entries separated by whitespace,
// blank lines and lines starting with '#' ignored, all rows of equal length.

BinaryMatrix read_binary_matrix(std::istream& in, const std::string& source = "<stream>");
WeightMatrix read_weight_matrix(std::istream& in, const std::string& source = "<stream>");
BinaryMatrix load_binary_matrix(const std::filesystem::path& path);
WeightMatrix load_weight_matrix(const std::filesystem::path& path);

void write_binary_matrix(std::ostream& out, const BinaryMatrix& a);
void write_weight_matrix(std::ostream& out, const WeightMatrix& w);
void save_binary_matrix(const std::filesystem::path& path, const BinaryMatrix& a);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace wfm
