#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "svt2d/matrix.hpp"
#include "svt2d/sampling.hpp"

namespace svt2d {

// MTX (text, line oriented): header "MTX <rows> <cols> <real|complex>",
// then one matrix row per line, entries space-separated. Doubles are written
// in shortest round-trip form, complex entries as re:im. Write-then-read is
// bit-exact.
//
// MSK: header "MSK <rows> <cols> <count> <seed>", then "i j" lines, 0-based,
// sorted lexicographically.

void write_mtx(const std::filesystem::path& path, const Matrix& m);
void write_mtx(const std::filesystem::path& path, const CMatrix& m);

using AnyMatrix = std::variant<Matrix, CMatrix>;
AnyMatrix read_mtx(const std::filesystem::path& path);

/// Convenience for pipeline stages that require real data; throws IoError on
/// a complex file.
Matrix read_mtx_real(const std::filesystem::path& path);

void write_msk(const std::filesystem::path& path, const SampleMask& mask);
SampleMask read_msk(const std::filesystem::path& path);

/// Shortest decimal that round-trips to the same double (std::to_chars).
std::string format_double(double v);
double parse_double(std::string_view s);

}  // namespace svt2d
