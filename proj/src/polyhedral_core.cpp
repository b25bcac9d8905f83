#include "tropkit/polyhedral_core.hpp"

#include "tropkit/error.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace tropkit {

namespace {

using Bits = boost::dynamic_bitset<>;

struct GeneratorForm {
  std::vector<ZVector> rays;
  std::vector<ZVector> lineality;
};

ZVector scaled_difference(const Integer& a, const ZVector& x, const Integer& b, const ZVector& y) {
  ZVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return make_primitive(std::move(out));
}

/**
 * Double description: extreme rays and lineality of
 * {x in Q^n : <h, x> >= 0 (inequalities), <e, x> = 0 (equations)}.
 *
 * Lineality directions are eliminated first whenever a constraint is not
 * constant on them; otherwise rays are split by sign and adjacent
 * (positive, negative) pairs are combined.  Adjacency is the combinatorial
 * test on zero sets, which is exact because the ray list stays minimal.
 */
GeneratorForm double_description(std::size_t n, const std::vector<ZVector>& inequalities,
                                 const std::vector<ZVector>& equations) {
  struct Ray {
    ZVector v;
    Bits zeros;
  };
  const std::size_t m = inequalities.size();
  std::vector<ZVector> lineality;
  for (std::size_t i = 0; i < n; ++i) {
    ZVector e(n);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  // Removes a lineality direction not orthogonal to h, making every other
  // generator orthogonal to h.  Returns the removed direction oriented so <h,l> > 0.
  auto eliminate_lineality = [&](const ZVector& h) -> std::optional<ZVector> {
    auto it = std::find_if(lineality.begin(), lineality.end(), [&](const ZVector& l) { return dot(h, l) != 0; });
    if (it == lineality.end()) return std::nullopt;
    ZVector l = std::move(*it);
    lineality.erase(it);
    Integer hl = dot(h, l);
    if (hl < 0) {
      l = negate(std::move(l));
      hl = -hl;
    }
    for (auto& other : lineality) {
      Integer a = dot(h, other);
      if (a != 0) other = scaled_difference(hl, other, a, l);
    }
    for (auto& r : rays) {
      Integer a = dot(h, r.v);
      if (a != 0) r.v = scaled_difference(hl, r.v, a, l);
    }
    return l;
  };

  auto split = [&](const ZVector& h, bool equation, std::size_t bit) {
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(h, rays[i].v);
      if (value[i] > 0) {
        pos.push_back(i);
        if (!equation) next.push_back(rays[i]);
      } else if (value[i] < 0) {
        neg.push_back(i);
      } else {
        next.push_back(rays[i]);
        if (!equation) next.back().zeros.set(bit);
      }
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray combined{scaled_difference(value[p], rays[q].v, value[q], rays[p].v), std::move(common)};
        if (!equation) combined.zeros.set(bit);
        next.push_back(std::move(combined));
      }
    rays = std::move(next);
  };

  for (const auto& e : equations) {
    if (e.size() != n) throw RankMismatch("equation of wrong rank");
    if (eliminate_lineality(e)) continue;
    split(e, true, 0);
  }
  for (std::size_t k = 0; k < m; ++k) {
    const ZVector& h = inequalities[k];
    if (h.size() != n) throw RankMismatch("inequality of wrong rank");
    if (auto l = eliminate_lineality(h)) {
      for (auto& r : rays) r.zeros.set(k);
      Ray fresh{std::move(*l), Bits(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.zeros.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }
    split(h, false, k);
  }

  GeneratorForm out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

std::vector<ZVector> integral(const std::vector<QVector>& vs, std::size_t rank) {
  std::vector<ZVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.size() != rank) throw RankMismatch("vector of rank " + std::to_string(v.size()) +
                                             " in ambient rank " + std::to_string(rank));
    out.push_back(primitive_integer_direction(v));
  }
  return out;
}

std::vector<ZVector> drop_zero(std::vector<ZVector> vs) {
  vs.erase(std::remove_if(vs.begin(), vs.end(), [](const ZVector& v) { return is_zero(v); }), vs.end());
  return vs;
}

std::vector<QVector> as_rational(const std::vector<ZVector>& vs) {
  std::vector<QVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

// Canonical representatives of directions modulo a subspace: project away, make primitive, sort.
std::vector<ZVector> canonical_directions(const std::vector<ZVector>& vs, const std::vector<ZVector>& modulo) {
  std::vector<ZVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    ZVector p = modulo.empty() ? make_primitive(v) : primitive_integer_direction(project_away(QVector(v), modulo));
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cone

Cone Cone::build(std::size_t rank, std::vector<ZVector> rays, std::vector<ZVector> lineality,
                 std::vector<ZVector> facets, std::vector<ZVector> equations) {
  Cone c;
  c.rank_ = rank;
  c.lineality_ = canonical_row_basis(as_rational(lineality), rank);
  c.equations_ = canonical_row_basis(as_rational(equations), rank);
  c.rays_ = canonical_directions(rays, c.lineality_);
  c.facets_ = canonical_directions(facets, c.equations_);
  c.key_ = ConeKey{c.facets_, c.equations_};
  return c;
}

Cone Cone::from_integer_generators(std::size_t rank, const std::vector<ZVector>& rays,
                                   const std::vector<ZVector>& lineality) {
  for (const auto& v : rays)
    if (v.size() != rank) throw RankMismatch("ray generator of wrong rank");
  for (const auto& v : lineality)
    if (v.size() != rank) throw RankMismatch("lineality generator of wrong rank");
  const auto r = drop_zero(rays);
  const auto l = drop_zero(lineality);
  // dual constraints give facets and equations, then recover the minimal generators
  GeneratorForm h = double_description(rank, r, l);
  GeneratorForm v = double_description(rank, h.rays, h.lineality);
  return build(rank, std::move(v.rays), std::move(v.lineality), std::move(h.rays), std::move(h.lineality));
}

Cone Cone::from_generators(std::size_t rank, const std::vector<QVector>& rays, const std::vector<QVector>& lineality) {
  return from_integer_generators(rank, integral(rays, rank), integral(lineality, rank));
}

Cone Cone::from_integer_halfspaces(std::size_t rank, const std::vector<ZVector>& inequalities,
                                   const std::vector<ZVector>& equations) {
  for (const auto& v : inequalities)
    if (v.size() != rank) throw RankMismatch("inequality of wrong rank");
  for (const auto& v : equations)
    if (v.size() != rank) throw RankMismatch("equation of wrong rank");
  GeneratorForm v = double_description(rank, drop_zero(inequalities), drop_zero(equations));
  GeneratorForm h = double_description(rank, v.rays, v.lineality);
  return build(rank, std::move(v.rays), std::move(v.lineality), std::move(h.rays), std::move(h.lineality));
}

Cone Cone::from_halfspaces(std::size_t rank, const std::vector<QVector>& inequalities,
                           const std::vector<QVector>& equations) {
  return from_integer_halfspaces(rank, integral(inequalities, rank), integral(equations, rank));
}

Cone Cone::zero(std::size_t rank) {
  std::vector<ZVector> eqs;
  for (std::size_t i = 0; i < rank; ++i) {
    ZVector e(rank);
    e[i] = 1;
    eqs.push_back(std::move(e));
  }
  return build(rank, {}, {}, {}, std::move(eqs));
}

Cone Cone::full(std::size_t rank) {
  std::vector<ZVector> lin;
  for (std::size_t i = 0; i < rank; ++i) {
    ZVector e(rank);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  return build(rank, {}, std::move(lin), {}, {});
}

Cone Cone::subspace(std::size_t rank, const std::vector<ZVector>& basis) {
  return from_integer_generators(rank, {}, basis);
}

bool Cone::contains(const ZVector& x) const {
  if (x.size() != rank_) throw RankMismatch("point rank does not match cone");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const QVector& x) const {
  if (x.size() != rank_) throw RankMismatch("point rank does not match cone");
  return contains(clear_denominators(x));
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw RankMismatch("cones of different ambient rank");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(negate(l))) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const QVector& x) const {
  const ZVector z = clear_denominators(x);
  if (!contains(z)) return false;
  for (const auto& f : facets_)
    if (dot(f, z) == 0) return false;
  return true;
}

bool Cone::set_equal(const Cone& other) const { return contains(other) && other.contains(*this); }

std::vector<ZVector> Cone::generators() const {
  std::vector<ZVector> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

Cone Cone::facet_face(std::size_t facet_index) const {
  const ZVector& f = facets_.at(facet_index);
  std::vector<ZVector> tight;
  for (const auto& r : rays_)
    if (dot(f, r) == 0) tight.push_back(r);
  return from_integer_generators(rank_, tight, lineality_);
}

Cone negate(const Cone& c) {
  std::vector<ZVector> rays;
  for (const auto& r : c.rays()) rays.push_back(negate(r));
  return Cone::from_integer_generators(c.ambient_rank(), rays, c.lineality());
}

Cone dual_cone(const Cone& c) {
  return Cone::from_integer_generators(c.ambient_rank(), c.facets(), c.equations());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw RankMismatch("intersecting cones of different ambient rank");
  std::vector<ZVector> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  std::vector<ZVector> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return Cone::from_integer_halfspaces(a.ambient_rank(), ineqs, eqs);
}

Cone cone_hull(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw RankMismatch("cone hull of cones of different ambient rank");
  std::vector<ZVector> rays = a.rays();
  rays.insert(rays.end(), b.rays().begin(), b.rays().end());
  std::vector<ZVector> lin = a.lineality();
  lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
  return Cone::from_integer_generators(a.ambient_rank(), rays, lin);
}

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) throw RankMismatch("face test on cones of different ambient rank");
  if (!c.contains(f)) return false;
  const auto gens = f.generators();
  // supporting hyperplane: sum of the facets of C vanishing on F
  std::vector<const ZVector*> tight;
  for (const auto& h : c.facets())
    if (std::all_of(gens.begin(), gens.end(), [&](const ZVector& g) { return dot(h, g) == 0; }))
      tight.push_back(&h);
  for (const auto& r : c.rays()) {
    if (std::all_of(tight.begin(), tight.end(), [&](const ZVector* h) { return dot(*h, r) == 0; }) && !f.contains(r))
      return false;
  }
  for (const auto& l : c.lineality())
    if (!f.contains(l) || !f.contains(negate(l))) return false;
  return true;
}

std::vector<QVector> lineality_space(const Cone& c) { return as_rational(c.lineality()); }

QVector relative_interior_point(const Cone& c) {
  if (c.is_zero()) throw InvalidArgument("relative interior point of the zero cone");
  QVector p(c.ambient_rank());
  for (const auto& r : c.rays()) p += QVector(r);
  for (const auto& l : c.lineality()) p += QVector(l);
  return p;
}

std::vector<Cone> faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto& facets = c.facets();
  std::vector<Bits> incidence;
  for (const auto& f : facets) {
    Bits b(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(f, rays[i]) == 0) b.set(i);
    incidence.push_back(std::move(b));
  }
  Bits all(rays.size());
  all.set();
  std::set<Bits> seen{all};
  std::vector<Bits> frontier{all};
  while (!frontier.empty()) {
    std::vector<Bits> next;
    for (const auto& face : frontier)
      for (const auto& inc : incidence) {
        Bits sub = face & inc;
        if (sub == face) continue;
        if (seen.insert(sub).second) next.push_back(sub);
      }
    frontier = std::move(next);
  }
  std::vector<Cone> out;
  out.reserve(seen.size());
  for (const auto& s : seen) {
    if (s == all) {
      out.push_back(c);
      continue;
    }
    std::vector<ZVector> gens;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (s.test(i)) gens.push_back(rays[i]);
    out.push_back(Cone::from_integer_generators(c.ambient_rank(), gens, c.lineality()));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.key() < b.key();
  });
  return out;
}

std::vector<Cone> facet_faces(const Cone& c) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < c.facets().size(); ++i) out.push_back(c.facet_face(i));
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert bases

namespace {

using Wide = __int128;

long long to_ll(const Integer& x, const char* what) {
  if (x > std::numeric_limits<long long>::max() / 4 || x < std::numeric_limits<long long>::min() / 4)
    throw DeskScaleExceeded(std::string(what) + " too large for lattice point enumeration");
  return x.convert_to<long long>();
}

// Hilbert basis of a pointed cone with respect to Z^n, by enumeration of the
// bounding box of the zonotope sum [0,1] r_i, which contains every irreducible.
std::vector<ZVector> pointed_hilbert_basis(const Cone& c, const Limits& limits) {
  const std::size_t n = c.ambient_rank();
  if (c.is_zero()) return {};
  std::vector<long long> lo(n, 0), hi(n, 0);
  for (const auto& r : c.rays())
    for (std::size_t j = 0; j < n; ++j) {
      const long long x = to_ll(r[j], "ray entry");
      (x < 0 ? lo[j] : hi[j]) += x;
    }
  Wide points = 1;
  for (std::size_t j = 0; j < n; ++j) {
    points *= static_cast<Wide>(hi[j] - lo[j] + 1);
    if (points > static_cast<Wide>(limits.max_hilbert_box))
      throw DeskScaleExceeded("Hilbert basis enumeration box exceeds " + std::to_string(limits.max_hilbert_box) +
                              " points");
  }

  auto to_rows = [&](const std::vector<ZVector>& vs) {
    std::vector<std::vector<long long>> out;
    for (const auto& v : vs) {
      std::vector<long long> row;
      for (const auto& x : v) row.push_back(to_ll(x, "facet normal"));
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto facets = to_rows(c.facets());
  const auto equations = to_rows(c.equations());
  auto eval = [&](const std::vector<long long>& row, const std::vector<long long>& x) {
    Wide s = 0;
    for (std::size_t j = 0; j < n; ++j) s += static_cast<Wide>(row[j]) * x[j];
    return s;
  };
  auto inside = [&](const std::vector<long long>& x) {
    for (const auto& e : equations)
      if (eval(e, x) != 0) return false;
    for (const auto& f : facets)
      if (eval(f, x) < 0) return false;
    return true;
  };
  // positive grading on C \ {0}
  std::vector<long long> grading(n, 0);
  for (const auto& f : facets)
    for (std::size_t j = 0; j < n; ++j) grading[j] += f[j];

  std::vector<std::pair<Wide, std::vector<long long>>> candidates;
  std::vector<long long> x = lo;
  while (true) {
    if (!std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; }) && inside(x))
      candidates.emplace_back(eval(grading, x), x);
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<long long>> basis;
  std::vector<long long> diff(n);
  for (const auto& [degree, cand] : candidates) {
    bool reducible = false;
    for (const auto& h : basis) {
      for (std::size_t j = 0; j < n; ++j) diff[j] = cand[j] - h[j];
      if (inside(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(cand);
  }
  std::vector<ZVector> out;
  for (const auto& b : basis) {
    ZVector z;
    for (long long v : b) z.emplace_back(v);
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonoidGenerators monoid_generators(const Cone& c, const Rational& last_step, const Limits& limits) {
  const std::size_t n = c.ambient_rank();
  if (n > limits.max_hilbert_rank)
    throw DeskScaleExceeded("Hilbert basis enumeration supports ambient rank at most " +
                            std::to_string(limits.max_hilbert_rank));
  if (last_step <= 0) throw InvalidArgument("lattice step must be positive");
  // lattice coordinates: last coordinate divided by the step
  auto to_coords = [&](const ZVector& v) {
    QVector q(v);
    q[n - 1] /= last_step;
    return primitive_integer_direction(q);
  };
  auto from_coords = [&](const ZVector& v) {
    QVector q(v);
    q[n - 1] *= last_step;
    return q;
  };
  std::vector<ZVector> rays, lin;
  for (const auto& r : c.rays()) rays.push_back(to_coords(r));
  for (const auto& l : c.lineality()) lin.push_back(to_coords(l));
  const Cone coords = Cone::from_integer_generators(n, rays, lin);

  MonoidGenerators out;
  if (coords.is_pointed()) {
    for (const auto& h : pointed_hilbert_basis(coords, limits)) out.generators.push_back(from_coords(h));
    return out;
  }
  const LatticeQuotient q = lattice_quotient(coords.lineality(), n);
  // lattice basis of the lineality: integer kernel of its orthogonal complement
  std::vector<ZVector> unit_basis;
  const auto complement = orthogonal_complement(as_rational(coords.lineality()), n);
  if (complement.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      ZVector e(n);
      e[i] = 1;
      unit_basis.push_back(std::move(e));
    }
  } else {
    unit_basis = solve_integer_linear(ZMatrix::from_rows(complement, n), ZVector(complement.size()))->kernel_basis;
  }
  for (const auto& u : unit_basis) {
    out.units.push_back(from_coords(u));
    out.units.push_back(from_coords(negate(u)));
  }
  out.generators = out.units;
  if (q.quotient_rank() > 0) {
    std::vector<ZVector> projected;
    for (const auto& r : coords.rays()) projected.push_back(q.project(r));
    const Cone image = Cone::from_integer_generators(q.quotient_rank(), projected);
    for (const auto& h : pointed_hilbert_basis(image, limits)) {
      const QVector lifted = q.lift(QVector(h));
      out.generators.push_back(from_coords(lifted.to_integers()));
    }
  }
  return out;
}

std::vector<ZVector> hilbert_basis(const Cone& c, const LatticeContext& ctx, const Limits& limits) {
  if (ctx.rank != c.ambient_rank()) throw RankMismatch("lattice context rank does not match cone");
  if (!c.is_pointed()) throw InvalidArgument("Hilbert basis requires a pointed cone");
  const MonoidGenerators g = monoid_generators(c, Rational(ctx.scale), limits);
  std::vector<ZVector> out;
  for (const auto& v : g.generators) out.push_back(v.to_integers());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Polyhedra

QVector homogenize(const QVector& x, const Rational& height) {
  std::vector<Rational> e(x.begin(), x.end());
  e.push_back(height);
  return QVector(std::move(e));
}

namespace {

ZVector drop_last(const ZVector& v) { return ZVector(v.begin(), v.end() - 1); }

}  // namespace

Polyhedron Polyhedron::from_generators(std::size_t rank, const std::vector<QVector>& vertices,
                                       const std::vector<QVector>& rays, const std::vector<QVector>& lineality) {
  if (vertices.empty()) throw InvalidArgument("a polyhedron needs at least one vertex");
  std::vector<QVector> hom_rays, hom_lin;
  for (const auto& v : vertices) {
    if (v.size() != rank) throw RankMismatch("vertex of wrong rank");
    hom_rays.push_back(homogenize(v, 1));
  }
  for (const auto& r : rays) {
    if (r.size() != rank) throw RankMismatch("ray of wrong rank");
    hom_rays.push_back(homogenize(r, 0));
  }
  for (const auto& l : lineality) {
    if (l.size() != rank) throw RankMismatch("lineality generator of wrong rank");
    hom_lin.push_back(homogenize(l, 0));
  }
  return Polyhedron(rank, Cone::from_generators(rank + 1, hom_rays, hom_lin));
}

std::optional<Polyhedron> Polyhedron::from_homogenization(const Cone& cone) {
  const std::size_t n1 = cone.ambient_rank();
  if (n1 < 1) throw InvalidArgument("homogenization needs ambient rank at least 1");
  bool positive = false;
  for (const auto& r : cone.rays()) {
    if (r.back() < 0) throw InvalidArgument("cone has a generator with negative height");
    if (r.back() > 0) positive = true;
  }
  for (const auto& l : cone.lineality())
    if (l.back() != 0) throw InvalidArgument("cone has a lineality direction with nonzero height");
  if (!positive) return std::nullopt;
  return Polyhedron(n1 - 1, cone);
}

std::vector<QVector> Polyhedron::vertices() const {
  std::vector<QVector> out;
  for (const auto& r : hom_.rays()) {
    if (r.back() == 0) continue;
    QVector v(rank_);
    for (std::size_t i = 0; i < rank_; ++i) v[i] = Rational(r[i], r.back());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVector> Polyhedron::rays() const {
  std::vector<ZVector> out;
  for (const auto& r : hom_.rays())
    if (r.back() == 0) out.push_back(drop_last(r));
  return out;
}

std::vector<ZVector> Polyhedron::lineality() const {
  std::vector<ZVector> out;
  for (const auto& l : hom_.lineality()) out.push_back(drop_last(l));
  return out;
}

bool Polyhedron::is_bounded() const {
  if (!hom_.lineality().empty()) return false;
  return std::all_of(hom_.rays().begin(), hom_.rays().end(), [](const ZVector& r) { return r.back() != 0; });
}

bool Polyhedron::contains(const QVector& x) const {
  if (x.size() != rank_) throw RankMismatch("point rank does not match polyhedron");
  return hom_.contains(homogenize(x, 1));
}

Cone Polyhedron::recession_cone() const { return Cone::from_integer_generators(rank_, rays(), lineality()); }

QVector Polyhedron::relative_interior_point() const {
  QVector p = tropkit::relative_interior_point(hom_);
  const Rational h = p[rank_];
  std::vector<Rational> e;
  for (std::size_t i = 0; i < rank_; ++i) e.push_back(p[i] / h);
  return QVector(std::move(e));
}

}  // namespace tropkit
