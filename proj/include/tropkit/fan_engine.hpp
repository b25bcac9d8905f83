#pragma once

#include "tropkit/polyhedral_core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropkit {

/**
 * A rational polyhedral fan.  The face closure is computed when the fan is
 * validated and kept sorted by (dimension, canonical key); cone identity is
 * the canonical key, so indices into cones() are stable for a given fan.
 */
class Fan {
 public:
  std::size_t ambient_rank() const { return rank_; }
  /// Face closure, sorted by (dimension, key).
  const std::vector<Cone>& cones() const { return cones_; }
  /// Indices into cones() of the maximal cones, ascending.
  const std::vector<std::size_t>& maximal_indices() const { return maximal_; }
  std::vector<Cone> maximal_cones() const;
  std::optional<std::size_t> index_of(const Cone& c) const;
  /// No cones at all; the support is empty.
  bool is_empty() const { return cones_.empty(); }
  std::size_t dimension() const;
  /// Rays of the closure: one-dimensional cones modulo the common lineality.
  std::vector<std::size_t> ray_indices() const;

 private:
  friend struct FanBuilder;
  std::size_t rank_ = 0;
  std::vector<Cone> cones_;
  std::vector<std::size_t> maximal_;
  std::map<ConeKey, std::size_t> index_;
};

inline bool operator==(const Fan& a, const Fan& b) {
  return a.ambient_rank() == b.ambient_rank() && a.cones() == b.cones();
}

struct FanViolation {
  std::size_t first = 0;   ///< index into the input list
  std::size_t second = 0;  ///< index into the input list
  Cone intersection;
  std::string reason;
};

struct FanCheck {
  std::optional<Fan> fan;
  std::optional<FanViolation> violation;
  bool ok() const { return fan.has_value(); }
};

/// Checks that every pair of input cones meets in a common face.  The first
/// failing pair in lexicographic index order is reported.
FanCheck validate_fan(std::size_t rank, const std::vector<Cone>& cones);
/// validate_fan that throws InvalidArgument on a violation.
Fan make_fan(std::size_t rank, const std::vector<Cone>& cones);

struct SupportQuery {
  QVector point;
  /// Index into Fan::cones() of the smallest cone containing the point.
  std::optional<std::size_t> cone;
};

SupportQuery support_membership(const Fan& fan, const QVector& x);

/**
 * Exact covering test: is `target` contained in the union of `cover`?
 * The cover cones are expected to meet pairwise in common faces.  On failure
 * `witness` is a point of target outside every cover cone.
 */
struct CoverResult {
  bool covered = true;
  std::optional<QVector> witness;
};
CoverResult cover_check(const Cone& target, const std::vector<Cone>& cover);

/// |a| contained in |b|, with a witness point of |a| outside |b| otherwise.
CoverResult support_contained(const Fan& a, const Fan& b);
bool same_support(const Fan& a, const Fan& b);

/// |fine| = |coarse| and every cone of fine lies in some cone of coarse.
bool refines(const Fan& fine, const Fan& coarse);
/// Throws SupportMismatch when the supports differ.
Fan common_refinement(const Fan& a, const Fan& b);
/// Cones of the fan containing sigma, with their faces.  Throws InvalidArgument
/// if sigma is not a cone of the fan.
Fan star(const Fan& fan, const Cone& sigma);

/// Image of star(fan, tau) under a lattice quotient whose kernel is span(tau).
Fan projected_star(const Fan& fan, const Cone& tau, const LatticeQuotient& q);

/// Basis of the largest linear subspace L with |fan| + L = |fan|.
std::vector<ZVector> support_translation_space(const Fan& fan);

struct CoarsenResult {
  Fan fan;
  bool is_fixpoint = true;
  std::size_t merges = 0;
};
/// Greedy merging of adjacent maximal cones whose union is a cone.
CoarsenResult coarsen(const Fan& fan);

/**
 * Polyhedral complex in Q^n, stored by maximal cells sorted by the key of
 * their homogenizations.
 */
class PolyhedralComplex {
 public:
  std::size_t ambient_rank() const { return rank_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }
  std::size_t dimension() const;

 private:
  friend struct ComplexBuilder;
  std::size_t rank_ = 0;
  std::vector<Polyhedron> cells_;
};

inline bool operator==(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  return a.ambient_rank() == b.ambient_rank() && a.cells() == b.cells();
}

struct ComplexViolation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string reason;
};

struct ComplexCheck {
  std::optional<PolyhedralComplex> complex;
  std::optional<ComplexViolation> violation;
  bool ok() const { return complex.has_value(); }
};

/// Pairwise check that nonempty intersections are faces of both cells.
/// Cells contained in other cells are dropped.
ComplexCheck validate_complex(std::size_t rank, const std::vector<Polyhedron>& cells);
PolyhedralComplex make_complex(std::size_t rank, const std::vector<Polyhedron>& cells);

/// Slices of the cones at last coordinate 1, in the first rank-1 coordinates.
PolyhedralComplex slice_at_height_one(const Fan& fan);

/// Every ray generator has nonnegative last coordinate and the lineality lies at height 0.
bool is_nonnegative_in_last_coordinate(const Cone& c);

}  // namespace tropkit
