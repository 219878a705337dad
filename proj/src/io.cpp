#include "svt2d/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "svt2d/errors.hpp"

namespace svt2d {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) {
    throw IoError("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw IoError("parse_double: invalid number '" + std::string(s) + "'");
  }
  return v;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  return in;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

[[noreturn]] void bad_file(const std::filesystem::path& path, int line,
                           const std::string& what) {
  throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

}  // namespace

void write_mtx(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out = open_out(path);
  out << "MTX " << m.rows() << ' ' << m.cols() << " real\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
  finish_write(out, path);
}

void write_mtx(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out = open_out(path);
  out << "MTX " << m.rows() << ' ' << m.cols() << " complex\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j).real()) << ':'
          << format_double(m(i, j).imag());
    }
    out << '\n';
  }
  finish_write(out, path);
}

AnyMatrix read_mtx(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) bad_file(path, 1, "empty file");
  std::istringstream header(line);
  std::string magic, kind;
  long rows = 0, cols = 0;
  header >> magic >> rows >> cols >> kind;
  if (magic != "MTX" || header.fail() || rows < 1 || cols < 1 ||
      (kind != "real" && kind != "complex")) {
    bad_file(path, 1, "expected header 'MTX <rows> <cols> <real|complex>'");
  }
  const bool complex = kind == "complex";

  Matrix real_m;
  CMatrix complex_m;
  if (complex) {
    complex_m.resize(rows, cols);
  } else {
    real_m.resize(rows, cols);
  }
  for (long i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) {
      bad_file(path, static_cast<int>(i) + 2, "missing matrix row");
    }
    const auto fields = split_fields(line);
    if (static_cast<long>(fields.size()) != cols) {
      bad_file(path, static_cast<int>(i) + 2,
               "expected " + std::to_string(cols) + " entries, got " +
                   std::to_string(fields.size()));
    }
    for (long j = 0; j < cols; ++j) {
      if (complex) {
        const std::string_view f = fields[j];
        const std::size_t sep = f.find(':');
        if (sep == std::string_view::npos) {
          bad_file(path, static_cast<int>(i) + 2,
                   "complex entry must be re:im");
        }
        complex_m(i, j) = {parse_double(f.substr(0, sep)),
                           parse_double(f.substr(sep + 1))};
      } else {
        real_m(i, j) = parse_double(fields[j]);
      }
    }
  }
  if (complex) return complex_m;
  return real_m;
}

Matrix read_mtx_real(const std::filesystem::path& path) {
  AnyMatrix any = read_mtx(path);
  if (!std::holds_alternative<Matrix>(any)) {
    throw IoError("'" + path.string() + "' holds a complex matrix where a "
                  "real one is required");
  }
  return std::get<Matrix>(std::move(any));
}

void write_msk(const std::filesystem::path& path, const SampleMask& mask) {
  mask.validate();
  std::ofstream out = open_out(path);
  out << "MSK " << mask.rows << ' ' << mask.cols << ' ' << mask.size() << ' '
      << mask.seed << '\n';
  for (std::int64_t f : mask.flat) {
    out << f / mask.cols << ' ' << f % mask.cols << '\n';
  }
  finish_write(out, path);
}

SampleMask read_msk(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) bad_file(path, 1, "empty file");
  std::istringstream header(line);
  std::string magic;
  long rows = 0, cols = 0, count = 0;
  std::uint64_t seed = 0;
  header >> magic >> rows >> cols >> count >> seed;
  if (magic != "MSK" || header.fail() || rows < 1 || cols < 1 || count < 1) {
    bad_file(path, 1, "expected header 'MSK <rows> <cols> <count> <seed>'");
  }
  SampleMask mask;
  mask.rows = static_cast<int>(rows);
  mask.cols = static_cast<int>(cols);
  mask.seed = seed;
  mask.flat.reserve(count);
  for (long k = 0; k < count; ++k) {
    if (!std::getline(in, line)) {
      bad_file(path, static_cast<int>(k) + 2, "missing index line");
    }
    std::istringstream entry(line);
    long i = 0, j = 0;
    entry >> i >> j;
    if (entry.fail()) {
      bad_file(path, static_cast<int>(k) + 2, "expected 'i j'");
    }
    mask.flat.push_back(i * cols + j);
  }
  try {
    mask.validate();
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  return mask;
}

}  // namespace svt2d
