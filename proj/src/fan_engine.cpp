#include "tropkit/fan_engine.hpp"

#include "tropkit/error.hpp"

#include <algorithm>
#include <set>

namespace tropkit {

namespace {

bool cone_order(const Cone& a, const Cone& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  return a.key() < b.key();
}

std::vector<QVector> as_rational(const std::vector<ZVector>& vs) {
  std::vector<QVector> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

// U cut with V for subspaces given by spanning sets.
std::vector<ZVector> subspace_intersection(const std::vector<ZVector>& u, const std::vector<ZVector>& v,
                                           std::size_t n) {
  std::vector<ZVector> perp = orthogonal_complement(as_rational(u), n);
  const auto pv = orthogonal_complement(as_rational(v), n);
  perp.insert(perp.end(), pv.begin(), pv.end());
  return orthogonal_complement(as_rational(perp), n);
}

std::vector<ZVector> full_basis(std::size_t n) {
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    ZVector e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

struct FanBuilder {
  static Fan build(std::size_t rank, const std::vector<Cone>& inputs) {
    Fan fan;
    fan.rank_ = rank;
    std::map<ConeKey, Cone> closure;
    std::vector<Cone> unique;
    for (const auto& c : inputs) {
      if (closure.count(c.key())) continue;
      for (auto& f : faces(c)) closure.emplace(f.key(), std::move(f));
      unique.push_back(c);
    }
    for (auto& [key, c] : closure) fan.cones_.push_back(std::move(c));
    std::sort(fan.cones_.begin(), fan.cones_.end(), cone_order);
    for (std::size_t i = 0; i < fan.cones_.size(); ++i) fan.index_.emplace(fan.cones_[i].key(), i);
    for (const auto& c : unique) {
      bool maximal = true;
      for (const auto& d : unique)
        if (d.dimension() > c.dimension() && d.contains(c)) maximal = false;
      if (maximal) fan.maximal_.push_back(fan.index_.at(c.key()));
    }
    std::sort(fan.maximal_.begin(), fan.maximal_.end());
    fan.maximal_.erase(std::unique(fan.maximal_.begin(), fan.maximal_.end()), fan.maximal_.end());
    return fan;
  }
};

std::vector<Cone> Fan::maximal_cones() const {
  std::vector<Cone> out;
  for (std::size_t i : maximal_) out.push_back(cones_[i]);
  return out;
}

std::optional<std::size_t> Fan::index_of(const Cone& c) const {
  if (c.ambient_rank() != rank_) return std::nullopt;
  auto it = index_.find(c.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Fan::dimension() const {
  std::size_t d = 0;
  for (std::size_t i : maximal_) d = std::max(d, cones_[i].dimension());
  return d;
}

std::vector<std::size_t> Fan::ray_indices() const {
  std::vector<std::size_t> out;
  if (cones_.empty()) return out;
  const std::size_t d0 = cones_.front().dimension();
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dimension() == d0 + 1) out.push_back(i);
  return out;
}

FanCheck validate_fan(std::size_t rank, const std::vector<Cone>& cones) {
  for (const auto& c : cones)
    if (c.ambient_rank() != rank)
      throw RankMismatch("cone of ambient rank " + std::to_string(c.ambient_rank()) + " in a fan of rank " +
                         std::to_string(rank));
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face(meet, cones[i]))
        return FanCheck{std::nullopt, FanViolation{i, j, std::move(meet), "intersection is not a face of cone " +
                                                                               std::to_string(i)}};
      if (!is_face(meet, cones[j]))
        return FanCheck{std::nullopt, FanViolation{i, j, std::move(meet), "intersection is not a face of cone " +
                                                                               std::to_string(j)}};
    }
  return FanCheck{FanBuilder::build(rank, cones), std::nullopt};
}

Fan make_fan(std::size_t rank, const std::vector<Cone>& cones) {
  FanCheck check = validate_fan(rank, cones);
  if (!check.ok()) {
    const auto& v = *check.violation;
    throw InvalidArgument("not a fan: cones " + std::to_string(v.first) + " and " + std::to_string(v.second) +
                          ": " + v.reason);
  }
  return std::move(*check.fan);
}

SupportQuery support_membership(const Fan& fan, const QVector& x) {
  if (x.size() != fan.ambient_rank()) throw RankMismatch("point rank does not match fan");
  const ZVector z = clear_denominators(x);
  for (std::size_t i = 0; i < fan.cones().size(); ++i)
    if (fan.cones()[i].contains(z)) return SupportQuery{x, i};
  return SupportQuery{x, std::nullopt};
}

CoverResult cover_check(const Cone& target, const std::vector<Cone>& cover) {
  const std::size_t n = target.ambient_rank();
  const std::size_t d = target.dimension();
  if (d == 0) {
    if (cover.empty()) return CoverResult{false, QVector(n)};
    return CoverResult{};
  }
  std::vector<Cone> pieces;
  for (const auto& c : cover) {
    Cone p = intersect(target, c);
    if (p.dimension() == d) pieces.push_back(std::move(p));
  }
  if (pieces.empty()) return CoverResult{false, relative_interior_point(target)};

  auto outside_all = [&](const QVector& p) {
    return std::none_of(pieces.begin(), pieces.end(), [&](const Cone& c) { return c.contains(p); });
  };

  // A wall of a piece that is not on the boundary of target must be covered
  // from the other side by some piece; otherwise the union has a boundary
  // inside relint(target).
  for (const auto& piece : pieces) {
    for (std::size_t k = 0; k < piece.facets().size(); ++k) {
      const ZVector& normal = piece.facets()[k];
      const Cone wall = piece.facet_face(k);
      const auto gens = wall.generators();
      const bool on_boundary = std::any_of(target.facets().begin(), target.facets().end(), [&](const ZVector& f) {
        return std::all_of(gens.begin(), gens.end(), [&](const ZVector& g) { return dot(f, g) == 0; });
      });
      if (on_boundary) continue;
      const QVector y = wall.is_zero() ? QVector(n) : relative_interior_point(wall);
      const ZVector yz = clear_denominators(y);
      const ZVector away = negate(normal);
      bool covered = false;
      for (const auto& other : pieces) {
        if (&other == &piece || !other.contains(yz)) continue;
        // tangent cone of `other` at y must contain span(wall) and -normal;
        // tight facets must vanish on the wall and be nonnegative on -normal
        bool ok = true;
        for (const auto& g : other.facets()) {
          if (dot(g, yz) != 0) continue;
          if (dot(g, away) < 0) ok = false;
          for (const auto& l : gens)
            if (dot(g, l) != 0) ok = false;
          if (!ok) break;
        }
        if (ok) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      Rational eps = 1;
      for (int step = 0; step < 200; ++step, eps /= 2) {
        QVector p = y - eps * QVector(normal);
        if (target.contains(p) && outside_all(p)) return CoverResult{false, p};
      }
      throw Error("covering test could not isolate a witness point");
    }
  }
  return CoverResult{};
}

CoverResult support_contained(const Fan& a, const Fan& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw RankMismatch("fans of different ambient rank");
  const auto cover = b.maximal_cones();
  for (const auto& c : a.maximal_cones()) {
    CoverResult r = cover_check(c, cover);
    if (!r.covered) return r;
  }
  return CoverResult{};
}

bool same_support(const Fan& a, const Fan& b) {
  return support_contained(a, b).covered && support_contained(b, a).covered;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank()) throw RankMismatch("fans of different ambient rank");
  const auto big = coarse.maximal_cones();
  for (const auto& c : fine.maximal_cones())
    if (std::none_of(big.begin(), big.end(), [&](const Cone& d) { return d.contains(c); })) return false;
  return support_contained(coarse, fine).covered;
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw RankMismatch("fans of different ambient rank");
  if (auto r = support_contained(a, b); !r.covered)
    throw SupportMismatch("supports differ: " + to_string(*r.witness) + " lies only in the first fan");
  if (auto r = support_contained(b, a); !r.covered)
    throw SupportMismatch("supports differ: " + to_string(*r.witness) + " lies only in the second fan");
  std::vector<Cone> pieces;
  for (const auto& x : a.maximal_cones())
    for (const auto& y : b.maximal_cones()) pieces.push_back(intersect(x, y));
  std::vector<Cone> maximal;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < pieces.size() && keep; ++j) {
      if (i == j || !pieces[j].contains(pieces[i])) continue;
      // strictly larger, or an equal piece seen earlier
      if (pieces[j].dimension() > pieces[i].dimension() || !(pieces[j] == pieces[i]) || j < i) keep = false;
    }
    if (keep) maximal.push_back(pieces[i]);
  }
  return make_fan(a.ambient_rank(), maximal);
}

Fan star(const Fan& fan, const Cone& sigma) {
  if (!fan.index_of(sigma)) throw InvalidArgument("cone is not a cone of the fan");
  std::vector<Cone> containing;
  for (const auto& m : fan.maximal_cones())
    if (m.contains(sigma)) containing.push_back(m);
  return make_fan(fan.ambient_rank(), containing);
}

// Projection of star(fan, tau) to N / span(tau).
Fan projected_star(const Fan& fan, const Cone& tau, const LatticeQuotient& q) {
  if (!fan.index_of(tau)) throw InvalidArgument("cone is not a cone of the fan");
  std::vector<Cone> cones;
  const std::size_t r = q.quotient_rank();
  for (const auto& m : fan.maximal_cones()) {
    if (!m.contains(tau)) continue;
    std::vector<ZVector> rays, lin;
    for (const auto& g : m.rays()) rays.push_back(q.project(g));
    for (const auto& g : m.lineality()) lin.push_back(q.project(g));
    cones.push_back(Cone::from_integer_generators(r, rays, lin));
  }
  return make_fan(r, cones);
}


std::vector<ZVector> support_translation_space(const Fan& fan) {
  const std::size_t n = fan.ambient_rank();
  if (fan.is_empty()) return full_basis(n);
  if (n == 0) return {};
  // Invariance of every local cone at the rays bounds L from above.
  std::vector<ZVector> local = full_basis(n);
  for (std::size_t idx : fan.ray_indices()) {
    const Cone& tau = fan.cones()[idx];
    const LatticeQuotient q = lattice_quotient(tau.generators(), n);
    std::vector<ZVector> pre = tau.generators();
    if (q.quotient_rank() > 0) {
      const Fan s = projected_star(fan, tau, q);
      for (const auto& w : support_translation_space(s)) {
        const QVector lifted = q.lift(QVector(w));
        pre.push_back(lifted.to_integers());
      }
    }
    local = subspace_intersection(local, pre, n);
  }
  // L = local cut with |fan| cut with -|fan|
  const Cone local_cone = Cone::subspace(n, local);
  std::vector<ZVector> gens;
  const auto maximal = fan.maximal_cones();
  for (const auto& s : maximal) {
    const Cone a = intersect(local_cone, s);
    for (const auto& t : maximal) {
      const Cone b = intersect(a, negate(t));
      const auto g = b.generators();
      gens.insert(gens.end(), g.begin(), g.end());
    }
  }
  return canonical_row_basis(as_rational(gens), n);
}

CoarsenResult coarsen(const Fan& fan) {
  std::vector<Cone> current = fan.maximal_cones();
  std::size_t merges = 0;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < current.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < current.size() && !merged; ++j) {
        const Cone& a = current[i];
        const Cone& b = current[j];
        if (a.dimension() != b.dimension() || a.dimension() == 0) continue;
        if (intersect(a, b).dimension() + 1 != a.dimension()) continue;
        Cone hull = cone_hull(a, b);
        if (hull.dimension() != a.dimension()) continue;
        if (!cover_check(hull, {a, b}).covered) continue;
        std::vector<Cone> next = current;
        next[i] = hull;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
        if (!validate_fan(fan.ambient_rank(), next).ok()) continue;
        current = std::move(next);
        ++merges;
        merged = true;
      }
  }
  return CoarsenResult{make_fan(fan.ambient_rank(), current), true, merges};
}

// ---------------------------------------------------------------------------
// Polyhedral complexes

struct ComplexBuilder {
  static PolyhedralComplex build(std::size_t rank, std::vector<Polyhedron> cells) {
    PolyhedralComplex c;
    c.rank_ = rank;
    std::sort(cells.begin(), cells.end(), [](const Polyhedron& a, const Polyhedron& b) {
      return a.homogenization().key() < b.homogenization().key();
    });
    c.cells_ = std::move(cells);
    return c;
  }
};

std::size_t PolyhedralComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& p : cells_) d = std::max(d, p.dimension());
  return d;
}

ComplexCheck validate_complex(std::size_t rank, const std::vector<Polyhedron>& cells) {
  for (const auto& p : cells)
    if (p.ambient_rank() != rank) throw RankMismatch("cell of wrong ambient rank");
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Cone& a = cells[i].homogenization();
      const Cone& b = cells[j].homogenization();
      const Cone meet = intersect(a, b);
      if (!Polyhedron::from_homogenization(meet)) continue;  // disjoint cells
      if (!is_face(meet, a))
        return ComplexCheck{std::nullopt,
                            ComplexViolation{i, j, "intersection is not a face of cell " + std::to_string(i)}};
      if (!is_face(meet, b))
        return ComplexCheck{std::nullopt,
                            ComplexViolation{i, j, "intersection is not a face of cell " + std::to_string(j)}};
    }
  std::vector<Polyhedron> maximal;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < cells.size() && keep; ++j) {
      if (i == j || !cells[j].homogenization().contains(cells[i].homogenization())) continue;
      if (!(cells[j] == cells[i]) || j < i) keep = false;
    }
    if (keep) maximal.push_back(cells[i]);
  }
  return ComplexCheck{ComplexBuilder::build(rank, std::move(maximal)), std::nullopt};
}

PolyhedralComplex make_complex(std::size_t rank, const std::vector<Polyhedron>& cells) {
  ComplexCheck check = validate_complex(rank, cells);
  if (!check.ok()) {
    const auto& v = *check.violation;
    throw InvalidArgument("not a polyhedral complex: cells " + std::to_string(v.first) + " and " +
                          std::to_string(v.second) + ": " + v.reason);
  }
  return std::move(*check.complex);
}

bool is_nonnegative_in_last_coordinate(const Cone& c) {
  if (c.ambient_rank() == 0) return false;
  for (const auto& r : c.rays())
    if (r.back() < 0) return false;
  for (const auto& l : c.lineality())
    if (l.back() != 0) return false;
  return true;
}

PolyhedralComplex slice_at_height_one(const Fan& fan) {
  const std::size_t n = fan.ambient_rank();
  if (n < 1) throw InvalidArgument("slicing needs ambient rank at least 1");
  std::vector<Polyhedron> cells;
  for (const auto& c : fan.maximal_cones()) {
    if (!is_nonnegative_in_last_coordinate(c))
      throw InvalidArgument("fan has a cone reaching negative last coordinate");
    if (auto p = Polyhedron::from_homogenization(c)) cells.push_back(std::move(*p));
  }
  return make_complex(n - 1, cells);
}

}  // namespace tropkit
