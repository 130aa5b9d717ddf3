#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "operadica/rational.hpp"

namespace operadica {

/// Dense row-major matrix of rationals.
struct QMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  QMat(std::initializer_list<std::initializer_list<Rational>> init);

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static QMat identity(std::size_t n);

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  bool operator==(const QMat& o) const = default;

  bool is_zero() const;
  /// Kronecker product, row-major block convention.
  static QMat kronecker(const QMat& x, const QMat& y);
  /// Stacks rows of x on top of rows of y (equal column counts).
  static QMat vstack(const QMat& x, const QMat& y);
};

/// Reduced row echelon form. Zero rows are dropped; if `pivots` is given it
/// receives the pivot column of each surviving row, strictly increasing.
QMat rref(QMat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMat& m);

Rational determinant(QMat m);

/// Rows span the right nullspace {x : m x = 0}.
QMat nullspace(const QMat& m);

/// A linear subspace of Q^ambient_dim in canonical (RREF) form.
/// Two subspaces are equal iff their basis matrices are identical.
struct Subspace {
  std::size_t ambient_dim = 0;
  QMat basis;  // RREF, basis.cols == ambient_dim

  std::size_t dim() const { return basis.rows; }
  bool operator==(const Subspace& o) const = default;
};

Subspace canonical_basis(const std::vector<std::vector<Rational>>& vectors,
                         std::size_t ambient_dim);
/// Same, taking the rows of a matrix as the spanning set.
Subspace canonical_basis(const QMat& row_vectors);

bool membership(const std::vector<Rational>& v, const Subspace& s);

/// {w : <w, x> = 0 for all x in s} with <w, x> = w^T pairing x.
/// Rejects degenerate pairings.
Subspace orthogonal_complement(const Subspace& s, const QMat& pairing);

/// {v : map v in s}. map is (s.ambient_dim x source_dim).
Subspace preimage(const QMat& map, const Subspace& s);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace operadica
