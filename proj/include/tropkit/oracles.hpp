#pragma once

/**
 * Brute-force checks used by --oracle-check.  Each one recomputes a result by
 * exhaustive search, without going through the algorithm it checks.
 */

#include "tropkit/geomtrop_schoen.hpp"
#include "tropkit/toric_dvr.hpp"
#include "tropkit/tropical.hpp"

#include <optional>
#include <vector>

namespace tropkit {

struct OracleOutcome {
  std::size_t probes = 0;
  std::size_t disagreements = 0;
  std::optional<QVector> first_disagreement;
  bool agrees() const { return disagreements == 0; }
};

/// Grid points k * step with |k| <= half_width in every coordinate.  A point
/// is in the hypersurface iff the minimum of val + <w, m> is attained twice.
OracleOutcome hypersurface_grid_oracle(const ValuedLaurentPolynomial& f, const PolyhedralComplex& complex,
                                       long half_width = 10, const Rational& step = Rational(1, 2));

/// Exhaustive search for m with |m_i| <= bound, <m, v_pivot> = 1 and <m, v> = 0
/// for the other divisors of the stratum.
std::optional<ZVector> condition2_box_search(const BoundaryData& data, const std::vector<std::string>& stratum,
                                             const std::string& pivot, long bound = 6);

/// First point k * r (k = 1, 2, ...) of the ray through the primitive integer
/// vector r that lies in the working lattice.
ZVector ray_generator_scan(const ZVector& r, const LatticeContext& ctx);

}  // namespace tropkit
