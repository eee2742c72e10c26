#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posettop/common.hpp"

namespace posettop {

// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseMatrix {
  using Entry = std::pair<std::size_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  std::size_t nonzeros() const;
  std::int64_t at(std::size_t r, std::size_t c) const;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

SparseMatrix transpose(const SparseMatrix& m);
// Exact product; throws Error on 64-bit overflow.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);
DenseMatrix to_dense(const SparseMatrix& m);
// "row col value" per line, zero-based.
std::string to_triplets(const SparseMatrix& m);
SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::string& text);

struct SmithForm {
  std::vector<Integer> invariant_factors;  // nonzero, each divides the next
  std::size_t rank = 0;
};

// Unit-pivot sparse elimination (64-bit, GMP on overflow), dense GMP
// diagonalization of the remainder.
SmithForm smith_normal_form(const SparseMatrix& m);
SmithForm smith_normal_form(const DenseMatrix& m);
// Same as smith_normal_form but never touches 64-bit arithmetic.
SmithForm smith_normal_form_gmp(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

// Fraction-free (Bareiss) rank over Q.
std::size_t rational_rank(DenseMatrix m);
// Basis of the rational null space {x : m x = 0}, each scaled to a primitive integer vector.
std::vector<std::vector<Integer>> integer_kernel_basis(const DenseMatrix& m, std::size_t cols);
// Coefficients c_0..c_n of det(X I - m), low degree first.
std::vector<Rational> characteristic_polynomial(const DenseMatrix& m);
// Integer roots in [lo, hi] with multiplicity.
std::vector<std::pair<Integer, std::size_t>> integer_roots(std::vector<Rational> poly, long lo, long hi);

}  // namespace posettop
