#include "tropkit/tropical.hpp"

#include "tropkit/error.hpp"

#include <algorithm>

namespace tropkit {

ValuedLaurentPolynomial::ValuedLaurentPolynomial(std::size_t rank, std::map<ZVector, ValuedCoefficient> terms)
    : rank_(rank), terms_(std::move(terms)) {
  if (rank_ == 0) throw InvalidArgument("polynomial rank must be at least 1");
  if (terms_.empty()) throw InvalidArgument("polynomial has no terms");
  for (const auto& [m, c] : terms_)
    if (m.size() != rank_) throw RankMismatch("exponent " + to_string(m) + " in a polynomial of rank " +
                                              std::to_string(rank_));
}

bool ValuedLaurentPolynomial::is_constant_coefficient() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.valuation == 0; });
}

InitialForm initial_form(const ValuedLaurentPolynomial& f, const QVector& w) {
  if (w.size() != f.rank()) throw RankMismatch("weight rank does not match polynomial");
  InitialForm out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const Rational value = c.valuation + dot(m, w);
    if (first || value < out.value) {
      out.value = value;
      out.exponents.clear();
      out.tags.clear();
      first = false;
    }
    if (value == out.value) {
      out.exponents.push_back(m);
      out.tags.push_back(c.tag);
    }
  }
  return out;
}

TropicalCertificate is_in_tropicalization_certificate(const std::vector<ValuedLaurentPolynomial>& generators,
                                                      const QVector& w) {
  if (generators.empty()) throw InvalidArgument("certificate needs at least one generator");
  TropicalCertificate out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out.forms.push_back(initial_form(generators[i], w));
    if (!out.excluded && out.forms.back().is_monomial()) {
      out.excluded = true;
      out.witness = i;
    }
  }
  return out;
}

TropicalHypersurface tropical_hypersurface(const ValuedLaurentPolynomial& f) {
  const std::size_t n = f.rank();
  TropicalHypersurface out;
  if (f.term_count() < 2) {
    out.complex = make_complex(n, {});
    out.monomial_input = true;
    return out;
  }
  // Homogenized epigraph of w -> -min_m(val_m + <w, m>) in coordinates (w, a, b):
  // <w, m> + a val_m + b >= 0 for every term, and a >= 0.
  std::vector<ZVector> inequalities;
  for (const auto& [m, c] : f.terms()) {
    QVector h(n + 2);
    for (std::size_t i = 0; i < n; ++i) h[i] = m[i];
    h[n] = c.valuation;
    h[n + 1] = 1;
    inequalities.push_back(clear_denominators(h));
  }
  ZVector a_nonneg(n + 2);
  a_nonneg[n] = 1;
  inequalities.push_back(a_nonneg);
  const Cone lifted = Cone::from_integer_halfspaces(n + 2, inequalities);

  std::vector<Polyhedron> cells;
  for (const auto& face : faces(lifted)) {
    if (face.dimension() != n) continue;
    std::vector<QVector> vertices, rays, lineality;
    for (const auto& r : face.rays()) {
      QVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = r[i];
      if (r[n] > 0)
        vertices.push_back(Rational(1) / Rational(r[n]) * w);
      else
        rays.push_back(w);
    }
    for (const auto& l : face.lineality()) {
      QVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = l[i];
      lineality.push_back(w);
    }
    if (vertices.empty()) continue;
    cells.push_back(Polyhedron::from_generators(n, vertices, rays, lineality));
  }
  out.complex = make_complex(n, cells);
  for (const auto& cell : out.complex.cells())
    out.tied.push_back(initial_form(f, cell.relative_interior_point()).exponents);
  return out;
}

Fan constant_coefficient_fan(const ValuedLaurentPolynomial& f) {
  if (!f.is_constant_coefficient()) throw InvalidArgument("constant-coefficient fan needs all valuations zero");
  const TropicalHypersurface h = tropical_hypersurface(f);
  std::vector<Cone> cones;
  for (const auto& cell : h.complex.cells()) cones.push_back(cell.recession_cone());
  return make_fan(f.rank(), cones);
}

}  // namespace tropkit
