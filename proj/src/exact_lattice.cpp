#include "tropkit/exact_lattice.hpp"

#include "tropkit/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace tropkit {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

QVector::QVector(const ZVector& v) : entries_(v.begin(), v.end()) {}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

bool QVector::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& x) { return denominator(x) == 1; });
}

ZVector QVector::to_integers() const {
  ZVector out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) {
    if (denominator(x) != 1) throw InvalidArgument("vector " + to_string(*this) + " is not integral");
    out.push_back(numerator(x));
  }
  return out;
}

QVector& QVector::operator+=(const QVector& other) {
  if (other.size() != size()) throw RankMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  if (other.size() != size()) throw RankMismatch("vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& scalar) {
  for (auto& x : entries_) x *= scalar;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const ZVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ']';
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string to_string(const ZVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Integer dot(const ZVector& a, const ZVector& b) {
  if (a.size() != b.size()) throw RankMismatch("dot product of vectors of different sizes");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw RankMismatch("dot product of vectors of different sizes");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const ZVector& a, const QVector& b) {
  if (a.size() != b.size()) throw RankMismatch("dot product of vectors of different sizes");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const ZVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

ZVector negate(ZVector v) {
  for (auto& x : v) x = -x;
  return v;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

ZVector make_primitive(ZVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

ZVector clear_denominators(const QVector& v) {
  Integer common = 1;
  for (const auto& x : v) common = lcm(common, denominator(x));
  ZVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (common / denominator(x)));
  return out;
}

ZVector primitive_integer_direction(const QVector& v) { return make_primitive(clear_denominators(v)); }

// ---------------------------------------------------------------------------
// ZMatrix

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_rows(const std::vector<ZVector>& rows, std::size_t cols) {
  ZMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw RankMismatch("row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<ZVector>& columns, std::size_t rows) {
  ZMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw RankMismatch("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ZVector ZMatrix::row(std::size_t r) const {
  return ZVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ZVector ZMatrix::column(std::size_t c) const {
  ZVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool ZMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void ZMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void ZMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void ZMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void ZMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols_ != b.rows_) throw RankMismatch("matrix product dimension mismatch");
  ZMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

ZVector operator*(const ZMatrix& a, const ZVector& x) {
  if (a.cols_ != x.size()) throw RankMismatch("matrix-vector dimension mismatch");
  ZVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
  return out;
}

std::ostream& operator<<(std::ostream& os, const ZMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << m.row(r);
  }
  return os << ']';
}

Integer determinant(const ZMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ZMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const ZMatrix& input) {
  if (input.rows() == 0 || input.cols() == 0) throw InvalidArgument("Smith normal form of an empty matrix");
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  ZMatrix a = input;
  ZMatrix u = ZMatrix::identity(m);
  ZMatrix v = ZMatrix::identity(n);

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool have_pivot = false;
    while (true) {
      // smallest |a_ij| over the active block, first in row-major order
      std::size_t pr = 0, pc = 0;
      have_pivot = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j) == 0) continue;
          if (!have_pivot || abs(a(i, j)) < abs(a(pr, pc))) {
            pr = i;
            pc = j;
            have_pivot = true;
          }
        }
      if (!have_pivot) break;
      a.swap_rows(t, pr);
      u.swap_rows(t, pr);
      a.swap_columns(t, pc);
      v.swap_columns(t, pc);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        a.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (a(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // divisibility: pull an offending row into row t and repeat
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!have_pivot) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithDecomposition{std::move(u), std::move(a), std::move(v), t};
}

std::optional<IntegerSolution> solve_integer_linear(const ZMatrix& a, const ZVector& b) {
  if (a.rows() != b.size()) throw RankMismatch("right-hand side length does not match matrix rows");
  const SmithDecomposition snf = smith_normal_form(a);
  const ZVector c = snf.U * b;
  ZVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      const Integer& d = snf.D(i, i);
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution out;
  out.solution = snf.V * y;
  for (std::size_t j = snf.rank; j < a.cols(); ++j) out.kernel_basis.push_back(snf.V.column(j));
  return out;
}

// ---------------------------------------------------------------------------
// Lattice context

LatticeContext::LatticeContext(std::size_t rank_, Integer scale_) : rank(rank_), scale(std::move(scale_)) {
  if (rank == 0) throw InvalidArgument("lattice rank must be at least 1");
  if (scale < 1) throw InvalidArgument("lattice scale must be at least 1");
}

bool LatticeContext::contains(const ZVector& v) const {
  return v.size() == rank && v.back() % scale == 0;
}

ZVector primitive_generator(const QVector& v, const LatticeContext& ctx) {
  if (v.size() != ctx.rank) throw RankMismatch("vector rank does not match lattice context");
  if (v.is_zero()) throw InvalidArgument("primitive generator of the zero vector");
  // work in the coordinates of the basis e_1, ..., e_{n-1}, d e_n
  QVector coords = v;
  coords[ctx.rank - 1] /= Rational(ctx.scale);
  ZVector out = primitive_integer_direction(coords);
  out[ctx.rank - 1] *= ctx.scale;
  return out;
}

// ---------------------------------------------------------------------------
// Rational linear algebra

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    rows[r] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void check_sizes(const std::vector<QVector>& rows, std::size_t n) {
  for (const auto& row : rows)
    if (row.size() != n) throw RankMismatch("vector of wrong rank in linear system");
}

ZMatrix inverse_unimodular(const ZMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<QVector> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QVector row(2 * n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(m(i, j));
    row[n + i] = 1;
    aug.push_back(std::move(row));
  }
  rref(aug, n);
  ZMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = aug[i][n + j];
      if (denominator(x) != 1) throw Error("matrix is not unimodular");
      inv(i, j) = numerator(x);
    }
  return inv;
}

}  // namespace

std::vector<ZVector> canonical_row_basis(const std::vector<QVector>& rows, std::size_t n) {
  check_sizes(rows, n);
  std::vector<QVector> work = rows;
  rref(work, n);
  std::vector<ZVector> out;
  out.reserve(work.size());
  for (const auto& row : work) out.push_back(primitive_integer_direction(row));
  return out;
}

std::size_t rank_of(const std::vector<QVector>& rows, std::size_t n) {
  check_sizes(rows, n);
  std::vector<QVector> work = rows;
  return rref(work, n).size();
}

std::size_t rank_of(const std::vector<ZVector>& rows, std::size_t n) {
  std::vector<QVector> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.emplace_back(r);
  return rank_of(q, n);
}

std::vector<ZVector> orthogonal_complement(const std::vector<QVector>& rows, std::size_t n) {
  check_sizes(rows, n);
  std::vector<QVector> work = rows;
  const auto pivots = rref(work, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector x(n);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -work[r][free];
    basis.push_back(std::move(x));
  }
  return canonical_row_basis(basis, n);
}

QVector project_away(const QVector& v, const std::vector<ZVector>& basis) {
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  // Gram system (B^T B) c = B^T v, augmented
  std::vector<QVector> system;
  system.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    QVector row(k + 1);
    for (std::size_t j = 0; j < k; ++j) row[j] = Rational(dot(basis[i], basis[j]));
    row[k] = dot(basis[i], v);
    system.push_back(std::move(row));
  }
  const auto pivots = rref(system, k);
  if (pivots.size() != k) throw Error("projection basis is linearly dependent");
  QVector out = v;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& c = system[i][k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out[j] -= c * basis[i][j];
  }
  return out;
}

bool in_span(const QVector& v, const std::vector<ZVector>& basis) {
  if (basis.empty()) return v.is_zero();
  std::vector<QVector> rows;
  for (const auto& b : basis) rows.emplace_back(b);
  const std::size_t r = rank_of(rows, v.size());
  rows.push_back(v);
  return rank_of(rows, v.size()) == r;
}

// ---------------------------------------------------------------------------
// Lattice quotients

ZVector LatticeQuotient::project(const ZVector& v) const { return projection * v; }

QVector LatticeQuotient::project(const QVector& v) const {
  QVector out(projection.rows());
  for (std::size_t i = 0; i < projection.rows(); ++i)
    for (std::size_t j = 0; j < projection.cols(); ++j) out[i] += projection(i, j) * v[j];
  return out;
}

QVector LatticeQuotient::lift(const QVector& v) const {
  QVector out(section.rows());
  for (std::size_t i = 0; i < section.rows(); ++i)
    for (std::size_t j = 0; j < section.cols(); ++j) out[i] += section(i, j) * v[j];
  return out;
}

LatticeQuotient lattice_quotient(const std::vector<ZVector>& generators, std::size_t n) {
  std::vector<ZVector> nonzero;
  for (const auto& g : generators) {
    if (g.size() != n) throw RankMismatch("generator of wrong rank in lattice quotient");
    if (!is_zero(g)) nonzero.push_back(g);
  }
  if (nonzero.empty()) return LatticeQuotient{ZMatrix::identity(n), ZMatrix::identity(n)};
  const SmithDecomposition snf = smith_normal_form(ZMatrix::from_columns(nonzero, n));
  const std::size_t r = snf.rank;
  const ZMatrix u_inv = inverse_unimodular(snf.U);
  ZMatrix projection(n - r, n);
  ZMatrix section(n, n - r);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      projection(i - r, j) = snf.U(i, j);
      section(j, i - r) = u_inv(j, i);
    }
  return LatticeQuotient{std::move(projection), std::move(section)};
}

}  // namespace tropkit
