#include "operadica/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace operadica {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

QMat::QMat(std::initializer_list<std::initializer_list<Rational>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  a.reserve(rows * cols);
  for (const auto& row : init) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : row) a.push_back(x);
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::transpose() const {
  QMat t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  QMat p(rows, o.cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rational& x = at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < o.cols; ++c) p.at(r, c) += x * o.at(k, c);
    }
  return p;
}

bool QMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

QMat QMat::kronecker(const QMat& x, const QMat& y) {
  QMat k(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t r = 0; r < x.rows; ++r)
    for (std::size_t c = 0; c < x.cols; ++c)
      for (std::size_t r2 = 0; r2 < y.rows; ++r2)
        for (std::size_t c2 = 0; c2 < y.cols; ++c2)
          k.at(r * y.rows + r2, c * y.cols + c2) = x.at(r, c) * y.at(r2, c2);
  return k;
}

QMat QMat::vstack(const QMat& x, const QMat& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  if (x.cols != y.cols) throw std::invalid_argument("vstack column mismatch");
  QMat s(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), s.a.begin());
  std::copy(y.a.begin(), y.a.end(), s.a.begin() + static_cast<long>(x.a.size()));
  return s;
}

QMat rref(QMat m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rational f = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  QMat out(piv.size(), m.cols);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const QMat& m) { return rref(m).rows; }

Rational determinant(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  Rational det = 1;
  for (std::size_t col = 0; col < m.cols; ++col) {
    std::size_t sel = col;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    Rational inv = 1 / m.at(col, col);
    for (std::size_t r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rational f = m.at(r, col) * inv;
      for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

QMat nullspace(const QMat& m) {
  std::vector<std::size_t> pivots;
  QMat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat out(free_cols.size(), m.cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out.at(k, free_cols[k]) = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      out.at(k, pivots[row]) = -r.at(row, free_cols[k]);
  }
  return out;
}

Subspace canonical_basis(const QMat& row_vectors) {
  return Subspace{row_vectors.cols, rref(row_vectors)};
}

Subspace canonical_basis(const std::vector<std::vector<Rational>>& vectors,
                         std::size_t ambient_dim) {
  QMat m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw std::invalid_argument("vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) m.at(r, c) = vectors[r][c];
  }
  return canonical_basis(m);
}

bool membership(const std::vector<Rational>& v, const Subspace& s) {
  if (v.size() != s.ambient_dim)
    throw std::invalid_argument("vector length does not match ambient dimension");
  // Reduce v by the RREF basis rows and check the residue vanishes.
  std::vector<Rational> w = v;
  std::vector<std::size_t> pivots;
  QMat b = rref(s.basis, &pivots);
  for (std::size_t r = 0; r < b.rows; ++r) {
    Rational f = w[pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < s.ambient_dim; ++c) w[c] -= f * b.at(r, c);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

Subspace orthogonal_complement(const Subspace& s, const QMat& pairing) {
  if (pairing.rows != pairing.cols || pairing.rows != s.ambient_dim)
    throw std::invalid_argument("pairing shape does not match ambient dimension");
  if (determinant(pairing) == 0)
    throw std::invalid_argument("degenerate pairing");
  // <w, x> = w^T G x = 0 for all basis rows x means (basis G^T) w = 0.
  return canonical_basis(nullspace(s.basis * pairing.transpose()));
}

Subspace preimage(const QMat& map, const Subspace& s) {
  if (map.rows != s.ambient_dim)
    throw std::invalid_argument("map target does not match subspace ambient");
  QMat constraints = nullspace(s.basis);  // rows annihilate s
  return canonical_basis(nullspace(constraints * map));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("ambient dimension mismatch");
  // (A cap B) = (A^perp + B^perp)^perp for the standard dot product.
  QMat stacked = QMat::vstack(nullspace(a.basis), nullspace(b.basis));
  if (stacked.rows == 0) stacked = QMat(0, a.ambient_dim);
  return canonical_basis(nullspace(stacked));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("ambient dimension mismatch");
  return canonical_basis(QMat::vstack(a.basis, b.basis));
}

}  // namespace operadica
