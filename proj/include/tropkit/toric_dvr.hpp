#pragma once

#include "tropkit/fan_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tropkit {

/**
 * A fan in N_Q + Q (last coordinate = t-direction) lying in the half-space
 * of nonnegative last coordinate, read in the working lattice N + dZ.
 */
class AdmissibleFan {
 public:
  /// Throws InvalidArgument if the fan reaches negative last coordinate.
  AdmissibleFan(Fan fan, Integer scale = 1);

  const Fan& fan() const { return fan_; }
  const LatticeContext& context() const { return ctx_; }
  const Integer& scale() const { return ctx_.scale; }

 private:
  Fan fan_;
  LatticeContext ctx_;
};

struct AdmissibilityCheck {
  bool admissible = true;
  std::optional<ZVector> witness;  ///< a generator with negative last coordinate
};

/// Requires ambient rank >= 2.
AdmissibilityCheck is_admissible(const Fan& fan);

/// Cones inside {last coordinate = 0}, with the last coordinate dropped.
Fan generic_fiber_subfan(const AdmissibleFan& fan);

struct SpecialFiberComponent {
  std::size_t cone_index = 0;  ///< index of the ray in Fan::cones()
  ZVector generator;           ///< first lattice point on the ray in the working lattice
  Integer multiplicity;        ///< last coordinate of the generator divided by the scale
};

struct SpecialFiberReport {
  std::vector<SpecialFiberComponent> components;
  bool reduced = true;
  Integer reduction_index = 1;
};

/// Rays with positive last coordinate.  The fan must be pointed.
SpecialFiberReport special_fiber_report(const AdmissibleFan& fan);

/// <m, v_rho> where v_rho is the first point of the working lattice on rho;
/// m must lie in the dual lattice M + (1/d)Z.
Integer divisorial_valuation(const QVector& m, const QVector& ray, const LatticeContext& ctx);

/// The character t of the base in the dual working lattice: (0, ..., 0, 1/d).
QVector uniformizer(const LatticeContext& ctx);

/// Same cones, working lattice N + (d * scale)Z.  Throws InvalidArgument for d <= 0.
AdmissibleFan rescale(const AdmissibleFan& fan, const Integer& d);

struct ChartPresentation {
  Cone sigma;
  Cone dual;
  std::vector<QVector> generators;  ///< monoid generators of dual cut with the dual lattice, sorted
  std::vector<QVector> units;       ///< generators that are invertible (both signs present)
  QVector uniformizer;
  bool uniformizer_in_monoid = false;
  std::optional<std::size_t> uniformizer_index;  ///< position among generators, if it is one
};

ChartPresentation chart_presentation(const Cone& sigma, const LatticeContext& ctx, const Limits& limits = {});

struct TConeFan {
  std::vector<Cone> cones;  ///< homogenizations of the cells, in cell order
  FanCheck fan_status;
};

TConeFan tcone_build(const PolyhedralComplex& complex);

struct ProperResult {
  bool proper = true;
  std::optional<QVector> witness;  ///< point of T outside the fan
  bool equal = true;
  std::optional<QVector> excess;   ///< point of the fan outside T
};

/// |fan| contains T(C), and whether equality holds.  Throws InvalidArgument if
/// the cells of C do not assemble into a fan.
ProperResult properness_support_check(const AdmissibleFan& fan, const PolyhedralComplex& complex);

}  // namespace tropkit
