#pragma once

#include "tropkit/exact_lattice.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tropkit {

/** Desk-scale caps.  The CLI fills these from the environment. */
struct Limits {
  std::size_t max_rank = 8;
  std::size_t max_hilbert_box = 100000;
  std::size_t max_hilbert_rank = 6;
};

/// Canonical H-representation: (facet normals, equations), both canonicalised.
using ConeKey = std::pair<std::vector<ZVector>, std::vector<ZVector>>;

/**
 * A rational polyhedral cone {sum l_i r_i + sum m_j v_j : l_i >= 0} in Q^n.
 *
 * Both representations are computed when the cone is built and stored in
 * canonical form:
 *  - rays: primitive integer extreme rays, orthogonal to the lineality space, sorted;
 *  - lineality: reduced echelon basis scaled to primitive integer rows;
 *  - facets: primitive inner normals inside span(C), sorted;
 *  - equations: reduced echelon basis of span(C)^perp.
 * The zero cone has no rays and no lineality.
 */
class Cone {
 public:
  static Cone from_generators(std::size_t rank, const std::vector<QVector>& rays,
                              const std::vector<QVector>& lineality = {});
  static Cone from_integer_generators(std::size_t rank, const std::vector<ZVector>& rays,
                                      const std::vector<ZVector>& lineality = {});
  /// {x : <h, x> >= 0 for h in inequalities, <e, x> = 0 for e in equations}
  static Cone from_halfspaces(std::size_t rank, const std::vector<QVector>& inequalities,
                              const std::vector<QVector>& equations = {});
  static Cone from_integer_halfspaces(std::size_t rank, const std::vector<ZVector>& inequalities,
                                      const std::vector<ZVector>& equations = {});
  static Cone zero(std::size_t rank);
  static Cone full(std::size_t rank);
  /// The linear subspace spanned by the given vectors, as a cone.
  static Cone subspace(std::size_t rank, const std::vector<ZVector>& basis);

  std::size_t ambient_rank() const { return rank_; }
  const std::vector<ZVector>& rays() const { return rays_; }
  const std::vector<ZVector>& lineality() const { return lineality_; }
  const std::vector<ZVector>& facets() const { return facets_; }
  const std::vector<ZVector>& equations() const { return equations_; }

  std::size_t dimension() const { return rank_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }
  bool is_linear_subspace() const { return rays_.empty(); }

  bool contains(const ZVector& x) const;
  bool contains(const QVector& x) const;
  bool contains(const Cone& other) const;
  /// Strict inequality on every facet.
  bool contains_in_relative_interior(const QVector& x) const;
  /// Set equality by mutual generator membership.
  bool set_equal(const Cone& other) const;

  const ConeKey& key() const { return key_; }
  /// Rays followed by lineality generators taken with both signs.
  std::vector<ZVector> generators() const;

  /// The face cut out by the facet with the given index.
  Cone facet_face(std::size_t facet_index) const;

 private:
  Cone() = default;
  static Cone build(std::size_t rank, std::vector<ZVector> rays, std::vector<ZVector> lineality,
                    std::vector<ZVector> facets, std::vector<ZVector> equations);

  std::size_t rank_ = 0;
  std::vector<ZVector> rays_;
  std::vector<ZVector> lineality_;
  std::vector<ZVector> facets_;
  std::vector<ZVector> equations_;
  ConeKey key_;
};

/// Structural equality of canonical forms; equivalent to set equality.
inline bool operator==(const Cone& a, const Cone& b) {
  return a.ambient_rank() == b.ambient_rank() && a.key() == b.key();
}

Cone negate(const Cone& c);

/// {u : <u, x> >= 0 for all x in C}
Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
/// F is a face of C: F is contained in C and equals C cut by the facets of C vanishing on F.
bool is_face(const Cone& f, const Cone& c);
/// Basis of C cut with -C.
std::vector<QVector> lineality_space(const Cone& c);
/// Sum of the ray generators plus the lineality generators; lies in relint(C).
QVector relative_interior_point(const Cone& c);
/// Every face of C, including C and its lineality space, sorted by (dimension, key).
std::vector<Cone> faces(const Cone& c);
/// Faces of C of codimension one in C.
std::vector<Cone> facet_faces(const Cone& c);
/// Cone generated by the union of the generators of a and b.
Cone cone_hull(const Cone& a, const Cone& b);

/// Minimal generating set of the monoid C cut with the working lattice (C pointed).
std::vector<ZVector> hilbert_basis(const Cone& c, const LatticeContext& ctx, const Limits& limits = {});

/**
 * Generators of the monoid C cut with the lattice Z^(n-1) + step*Z (last
 * coordinate restricted to multiples of `step`, which may be fractional).
 * When C is not pointed, a lattice basis of the lineality is included with
 * both signs and reported in `units`.
 */
struct MonoidGenerators {
  std::vector<QVector> generators;
  std::vector<QVector> units;
};
MonoidGenerators monoid_generators(const Cone& c, const Rational& last_step, const Limits& limits = {});

/**
 * Polyhedron conv(vertices) + cone(rays) + span(lineality) in Q^n, stored
 * through its homogenization: the cone in Q^(n+1) generated by (v, 1), (r, 0)
 * and +-(l, 0).
 */
class Polyhedron {
 public:
  static Polyhedron from_generators(std::size_t rank, const std::vector<QVector>& vertices,
                                    const std::vector<QVector>& rays = {},
                                    const std::vector<QVector>& lineality = {});
  /// Slice of a cone in Q^(n+1) with nonnegative last coordinate at height 1.
  static std::optional<Polyhedron> from_homogenization(const Cone& cone);

  std::size_t ambient_rank() const { return rank_; }
  const Cone& homogenization() const { return hom_; }
  std::vector<QVector> vertices() const;
  std::vector<ZVector> rays() const;
  std::vector<ZVector> lineality() const;
  std::size_t dimension() const { return hom_.dimension() - 1; }
  bool is_bounded() const;
  bool contains(const QVector& x) const;
  bool set_equal(const Polyhedron& other) const { return hom_.set_equal(other.hom_); }
  Cone recession_cone() const;
  QVector relative_interior_point() const;

 private:
  Polyhedron(std::size_t rank, Cone hom) : rank_(rank), hom_(std::move(hom)) {}
  std::size_t rank_ = 0;
  Cone hom_;
};

inline bool operator==(const Polyhedron& a, const Polyhedron& b) {
  return a.homogenization() == b.homogenization();
}

QVector homogenize(const QVector& x, const Rational& height);

}  // namespace tropkit
