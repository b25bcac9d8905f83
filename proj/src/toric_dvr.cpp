#include "tropkit/toric_dvr.hpp"

#include "tropkit/error.hpp"

#include <algorithm>

namespace tropkit {

AdmissibleFan::AdmissibleFan(Fan fan, Integer scale) : fan_(std::move(fan)), ctx_(fan_.ambient_rank(), scale) {
  const auto check = is_admissible(fan_);
  if (!check.admissible)
    throw InvalidArgument("fan is not admissible: generator " + to_string(*check.witness) +
                          " has negative last coordinate");
}

AdmissibilityCheck is_admissible(const Fan& fan) {
  if (fan.ambient_rank() < 2) throw InvalidArgument("admissibility needs ambient rank at least 2");
  for (const auto& c : fan.maximal_cones()) {
    for (const auto& r : c.rays())
      if (r.back() < 0) return AdmissibilityCheck{false, r};
    for (const auto& l : c.lineality())
      if (l.back() != 0) return AdmissibilityCheck{false, l.back() < 0 ? l : negate(l)};
  }
  return AdmissibilityCheck{};
}

Fan generic_fiber_subfan(const AdmissibleFan& af) {
  const Fan& fan = af.fan();
  const std::size_t n = fan.ambient_rank();
  std::vector<Cone> cones;
  auto drop = [&](const ZVector& v) { return ZVector(v.begin(), v.end() - 1); };
  for (const auto& c : fan.cones()) {
    if (!std::all_of(c.rays().begin(), c.rays().end(), [](const ZVector& r) { return r.back() == 0; })) continue;
    std::vector<ZVector> rays, lin;
    for (const auto& r : c.rays()) rays.push_back(drop(r));
    for (const auto& l : c.lineality()) lin.push_back(drop(l));
    cones.push_back(Cone::from_integer_generators(n - 1, rays, lin));
  }
  return make_fan(n - 1, cones);
}

SpecialFiberReport special_fiber_report(const AdmissibleFan& af) {
  const Fan& fan = af.fan();
  if (!fan.is_empty() && !fan.cones().front().is_pointed())
    throw InvalidArgument("special fiber analysis needs a pointed fan");
  SpecialFiberReport out;
  for (std::size_t i : fan.ray_indices()) {
    const ZVector& r = fan.cones()[i].rays().front();
    if (r.back() <= 0) continue;
    ZVector v = primitive_generator(QVector(r), af.context());
    Integer mult = v.back() / af.scale();
    if (mult != 1) out.reduced = false;
    out.reduction_index = lcm(out.reduction_index, mult);
    out.components.push_back(SpecialFiberComponent{i, std::move(v), std::move(mult)});
  }
  return out;
}

QVector uniformizer(const LatticeContext& ctx) {
  QVector e(ctx.rank);
  e[ctx.rank - 1] = Rational(Integer(1), ctx.scale);
  return e;
}

Integer divisorial_valuation(const QVector& m, const QVector& ray, const LatticeContext& ctx) {
  if (m.size() != ctx.rank || ray.size() != ctx.rank) throw RankMismatch("rank does not match lattice context");
  for (std::size_t i = 0; i + 1 < ctx.rank; ++i)
    if (denominator(m[i]) != 1) throw InvalidArgument("character is not in the dual working lattice");
  if (denominator(m[ctx.rank - 1] * Rational(ctx.scale)) != 1)
    throw InvalidArgument("character is not in the dual working lattice");
  const ZVector v = primitive_generator(ray, ctx);
  const Rational value = dot(v, m);
  return numerator(value);
}

AdmissibleFan rescale(const AdmissibleFan& af, const Integer& d) {
  if (d <= 0) throw InvalidArgument("rescaling factor must be positive");
  return AdmissibleFan(af.fan(), af.scale() * d);
}

ChartPresentation chart_presentation(const Cone& sigma, const LatticeContext& ctx, const Limits& limits) {
  if (sigma.ambient_rank() != ctx.rank) throw RankMismatch("cone rank does not match lattice context");
  if (ctx.rank < 2) throw InvalidArgument("chart presentation needs ambient rank at least 2");
  if (!is_nonnegative_in_last_coordinate(sigma)) throw InvalidArgument("cone is not admissible");
  Cone dual = dual_cone(sigma);
  MonoidGenerators g = monoid_generators(dual, Rational(Integer(1), ctx.scale), limits);
  std::sort(g.generators.begin(), g.generators.end());
  std::sort(g.units.begin(), g.units.end());
  ChartPresentation out{sigma, std::move(dual), std::move(g.generators), std::move(g.units), uniformizer(ctx)};
  out.uniformizer_in_monoid = out.dual.contains(out.uniformizer);
  auto it = std::find(out.generators.begin(), out.generators.end(), out.uniformizer);
  if (it != out.generators.end()) out.uniformizer_index = static_cast<std::size_t>(it - out.generators.begin());
  return out;
}

TConeFan tcone_build(const PolyhedralComplex& complex) {
  TConeFan out{{}, {}};
  for (const auto& cell : complex.cells()) out.cones.push_back(cell.homogenization());
  out.fan_status = validate_fan(complex.ambient_rank() + 1, out.cones);
  return out;
}

ProperResult properness_support_check(const AdmissibleFan& af, const PolyhedralComplex& complex) {
  if (af.fan().ambient_rank() != complex.ambient_rank() + 1)
    throw RankMismatch("fan rank must exceed the complex rank by one");
  TConeFan t = tcone_build(complex);
  if (!t.fan_status.ok()) throw InvalidArgument("cells of the complex do not assemble into a fan");
  const Fan& tfan = *t.fan_status.fan;
  ProperResult out;
  if (auto r = support_contained(tfan, af.fan()); !r.covered) {
    out.proper = false;
    out.witness = r.witness;
  }
  if (auto r = support_contained(af.fan(), tfan); !r.covered) {
    out.equal = false;
    out.excess = r.witness;
  }
  if (!out.proper) out.equal = false;
  return out;
}

}  // namespace tropkit
