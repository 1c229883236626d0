#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hankelff/ffield.hpp"

namespace hankelff {

/// Dense row-major matrix of element codes.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
  uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place; pivot search is leftmost column,
/// topmost row, so the result is canonical for a given row space.
/// Returns the rank; pivot column indices appended to *pivots when given.
size_t rref_in_place(const Field& f, Mat& m, std::vector<size_t>* pivots = nullptr);

size_t mat_rank(const Field& f, Mat m);
uint32_t mat_det(const Field& f, Mat m);  // square input

/// Right-kernel basis from the RREF, one vector per free column in ascending
/// free-column order; canonical for a given matrix.
std::vector<std::vector<uint32_t>> kernel_basis(const Field& f, Mat m);

/// Unique solution of m*x = b for invertible square m.
std::optional<std::vector<uint32_t>> solve_square(const Field& f, Mat m,
                                                  std::vector<uint32_t> b);

bool in_span(const Field& f, const std::vector<uint32_t>& v,
             const std::vector<std::vector<uint32_t>>& basis);
bool span_equal(const Field& f, const std::vector<std::vector<uint32_t>>& a,
                const std::vector<std::vector<uint32_t>>& b, size_t dim);

}  // namespace hankelff
