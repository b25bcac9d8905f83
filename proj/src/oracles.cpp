#include "tropkit/oracles.hpp"

#include <map>

namespace tropkit {

namespace {

bool min_attained_twice(const ValuedLaurentPolynomial& f, const QVector& w) {
  std::optional<Rational> best;
  int count = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational v = c.valuation;
    for (std::size_t i = 0; i < m.size(); ++i) v += w[i] * Rational(m[i]);
    if (!best || v < *best) {
      best = v;
      count = 1;
    } else if (v == *best) {
      ++count;
    }
  }
  return count >= 2;
}

bool in_complex(const PolyhedralComplex& c, const QVector& w) {
  for (const auto& cell : c.cells())
    if (cell.contains(w)) return true;
  return false;
}

}  // namespace

OracleOutcome hypersurface_grid_oracle(const ValuedLaurentPolynomial& f, const PolyhedralComplex& complex,
                                       long half_width, const Rational& step) {
  const std::size_t n = f.rank();
  OracleOutcome out;
  std::vector<long> k(n, -half_width);
  while (true) {
    QVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = step * Rational(k[i]);
    ++out.probes;
    if (min_attained_twice(f, w) != in_complex(complex, w)) {
      if (!out.first_disagreement) out.first_disagreement = w;
      ++out.disagreements;
    }
    std::size_t j = 0;
    while (j < n && k[j] == half_width) k[j++] = -half_width;
    if (j == n) break;
    ++k[j];
  }
  return out;
}

std::optional<ZVector> condition2_box_search(const BoundaryData& data, const std::vector<std::string>& stratum,
                                             const std::string& pivot, long bound) {
  std::map<std::string, ZVector> val;
  for (const auto& d : data.divisors) val[d.id] = d.val;
  const std::size_t n = data.rank;
  ZVector m(n, Integer(-bound));
  while (true) {
    bool ok = true;
    for (const auto& id : stratum) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += m[i] * val.at(id)[i];
      if (s != (id == pivot ? 1 : 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
    std::size_t j = 0;
    while (j < n && m[j] == bound) m[j++] = -bound;
    if (j == n) return std::nullopt;
    ++m[j];
  }
}

ZVector ray_generator_scan(const ZVector& r, const LatticeContext& ctx) {
  for (Integer k = 1;; ++k) {
    ZVector v = r;
    for (auto& x : v) x *= k;
    if (ctx.contains(v)) return v;
  }
}

}  // namespace tropkit
