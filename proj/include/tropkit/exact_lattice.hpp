#pragma once

/**
 * Exact integer and rational linear algebra.
 *
 * Everything in the toolkit is built on the two arbitrary-precision scalar
 * types below; there is no floating point anywhere.  Integer matrices carry
 * the lattice maps (Smith normal form, integer solving, lattice quotients),
 * rational vectors carry points of N_Q.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tropkit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using ZVector = std::vector<Integer>;

/** A vector with exact rational entries.  GMP keeps every entry in lowest terms. */
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t size) : entries_(size) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  explicit QVector(const ZVector& v);

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Converts to an integer vector; throws InvalidArgument if some entry is not integral.
  ZVector to_integers() const;

  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& scalar);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  friend QVector operator-(QVector a) { return a *= Rational(-1); }

  friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const QVector& a, const QVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const QVector& v);
std::ostream& operator<<(std::ostream& os, const ZVector& v);
std::string to_string(const QVector& v);
std::string to_string(const ZVector& v);

Integer dot(const ZVector& a, const ZVector& b);
Rational dot(const QVector& a, const QVector& b);
Rational dot(const ZVector& a, const QVector& b);

bool is_zero(const ZVector& v);
ZVector negate(ZVector v);
/// Divides by the gcd of the entries.  The zero vector is returned unchanged.
ZVector make_primitive(ZVector v);
/// The primitive integer vector on the ray through v (v != 0), or zero for zero.
ZVector primitive_integer_direction(const QVector& v);
/// Smallest positive integer multiple of v with integer entries (not divided by gcd).
ZVector clear_denominators(const QVector& v);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/** Dense integer matrix, row-major. */
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);
  ZMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static ZMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of length cols).
  static ZMatrix from_rows(const std::vector<ZVector>& rows, std::size_t cols);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static ZMatrix from_columns(const std::vector<ZVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  ZVector row(std::size_t r) const;
  ZVector column(std::size_t c) const;
  ZMatrix transpose() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  friend ZVector operator*(const ZMatrix& a, const ZVector& x);
  friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const ZMatrix& m);

/// Determinant by fraction-free elimination (Bareiss).  Square matrices only.
Integer determinant(const ZMatrix& m);

/**
 * U * A * V = D with U, V unimodular, D diagonal with d_1 | d_2 | ... >= 0.
 * `rank` is the number of nonzero diagonal entries.
 */
struct SmithDecomposition {
  ZMatrix U;
  ZMatrix D;
  ZMatrix V;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

/// Pivot rule: smallest absolute nonzero entry of the active block, row-major tiebreak.
SmithDecomposition smith_normal_form(const ZMatrix& a);

struct IntegerSolution {
  ZVector solution;
  /// A basis of ker_Z(A); it is saturated (extends to a basis of Z^n).
  std::vector<ZVector> kernel_basis;
};

/// Solves A x = b over the integers.  std::nullopt means no integer solution exists.
std::optional<IntegerSolution> solve_integer_linear(const ZMatrix& a, const ZVector& b);

/**
 * Working lattice N + d*Z inside N~ = Z^rank: the last coordinate is the
 * t-direction and is restricted to multiples of `scale`.  With scale 1 this
 * is the standard lattice Z^rank.
 */
struct LatticeContext {
  std::size_t rank = 1;
  Integer scale = 1;

  LatticeContext() = default;
  LatticeContext(std::size_t rank, Integer scale = 1);

  bool contains(const ZVector& v) const;
  friend bool operator==(const LatticeContext& a, const LatticeContext& b) {
    return a.rank == b.rank && a.scale == b.scale;
  }
};

/// First lattice point of the working lattice on the ray through v.
ZVector primitive_generator(const QVector& v, const LatticeContext& ctx);

/**
 * The surjection Z^n -> Z^(n-r) whose kernel is the saturation of the span of
 * the given generators, together with an integral section.
 */
struct LatticeQuotient {
  ZMatrix projection;  ///< (n - r) x n
  ZMatrix section;     ///< n x (n - r), projection * section = identity
  std::size_t quotient_rank() const { return projection.rows(); }
  ZVector project(const ZVector& v) const;
  QVector project(const QVector& v) const;
  QVector lift(const QVector& v) const;
};

LatticeQuotient lattice_quotient(const std::vector<ZVector>& generators, std::size_t ambient_rank);

// Rational linear algebra over Q^n.

/// Nonzero rows of the reduced row echelon form, each scaled to a primitive integer vector.
std::vector<ZVector> canonical_row_basis(const std::vector<QVector>& rows, std::size_t n);
std::size_t rank_of(const std::vector<QVector>& rows, std::size_t n);
std::size_t rank_of(const std::vector<ZVector>& rows, std::size_t n);
/// Basis of {x : <row, x> = 0 for every row}, canonicalised as in canonical_row_basis.
std::vector<ZVector> orthogonal_complement(const std::vector<QVector>& rows, std::size_t n);
/// Orthogonal projection of v onto the orthogonal complement of span(basis).
QVector project_away(const QVector& v, const std::vector<ZVector>& basis);
bool in_span(const QVector& v, const std::vector<ZVector>& basis);

}  // namespace tropkit
