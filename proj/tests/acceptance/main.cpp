// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every check compares against ground truth built in this file (construction,
// brute force or exhaustive search), never against the routine under test.

#include "golden.hpp"
#include "tropkit/document.hpp"
#include "tropkit/fan_engine.hpp"
#include "tropkit/geomtrop_schoen.hpp"
#include "tropkit/polyhedral_core.hpp"
#include "tropkit/toric_dvr.hpp"
#include "tropkit/tropical.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace tropkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int rand_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

ZVector unit(std::size_t n, std::size_t i, int sign) {
  ZVector v(n, Integer(0));
  v[i] = sign;
  return v;
}

// --------------------------------------------------------------------------
// 1. fan axioms

// Orthant cones of a random nonempty set of orthants; some are split by a
// stellar subdivision through an interior ray.
std::vector<Cone> random_orthant_fan(std::mt19937& rng, std::size_t n) {
  std::vector<Cone> cones;
  const std::size_t orthants = std::size_t(1) << n;
  for (std::size_t mask = 0; mask < orthants; ++mask) {
    if (cones.size() > 0 && rand_int(rng, 0, 3) == 0) continue;
    std::vector<ZVector> rays;
    ZVector inner(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      const int s = (mask >> i) & 1 ? -1 : 1;
      rays.push_back(unit(n, i, s));
      inner[i] = s * rand_int(rng, 1, 3);
    }
    if (n >= 2 && rand_int(rng, 0, 1) == 0) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<ZVector> sub = rays;
        sub[j] = inner;
        cones.push_back(Cone::from_integer_generators(n, sub));
      }
    } else {
      cones.push_back(Cone::from_integer_generators(n, rays));
    }
  }
  return cones;
}

Outcome criterion_fan_axioms() {
  std::mt19937 rng(101);
  Outcome o;
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<Cone> cones;
    do cones = random_orthant_fan(rng, n);
    while (cones.size() < 2);
    if (validate_fan(n, cones).ok()) ++accepted;

    // replace cone i by the hull of cone i and an interior point of a
    // full-dimensional cone j: the new cone meets j in an interior point of j
    // but cannot contain j as a face
    const std::size_t i = rand_int(rng, 0, int(cones.size()) - 1);
    std::size_t j = rand_int(rng, 0, int(cones.size()) - 2);
    if (j >= i) ++j;
    std::vector<ZVector> gens = cones[i].rays();
    ZVector interior(n, Integer(0));
    for (const auto& r : cones[j].rays())
      for (std::size_t k = 0; k < n; ++k) interior[k] += r[k];
    gens.push_back(interior);
    std::vector<Cone> mutated = cones;
    mutated[i] = Cone::from_integer_generators(n, gens);
    if (!validate_fan(n, mutated).ok()) ++rejected;
  }
  o.ok = accepted == 50 && rejected == 50;
  o.detail = "accepted " + std::to_string(accepted) + "/50 valid, rejected " + std::to_string(rejected) + "/50 mutated";
  return o;
}

// --------------------------------------------------------------------------
// 2. tropical hypersurface against grid probes

Outcome criterion_hypersurface_grid() {
  std::mt19937 rng(202);
  const Rational vals[] = {Rational(0), Rational(1, 2), Rational(1)};
  std::size_t probes = 0, mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    // exponents in [-1, 2]^n; rank 1 has only four of them
    const int count = rand_int(rng, 1, n == 1 ? 4 : 6);
    std::map<ZVector, ValuedCoefficient> terms;
    while (int(terms.size()) < count) {
      ZVector e(n);
      for (auto& x : e) x = rand_int(rng, -1, 2);
      terms.emplace(e, ValuedCoefficient{vals[rand_int(rng, 0, 2)], "c"});
    }
    const ValuedLaurentPolynomial f(n, terms);
    const auto h = tropical_hypersurface(f);
    std::vector<long> k(n, -10);
    while (true) {
      QVector w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = Rational(k[i], 2);
      std::optional<Rational> best;
      int ties = 0;
      for (const auto& [m, c] : terms) {
        Rational v = c.valuation;
        for (std::size_t i = 0; i < n; ++i) v += w[i] * Rational(m[i]);
        if (!best || v < *best) {
          best = v;
          ties = 1;
        } else if (v == *best) {
          ++ties;
        }
      }
      bool in = false;
      for (const auto& cell : h.complex.cells()) in = in || cell.contains(w);
      ++probes;
      if (in != (ties >= 2)) ++mismatches;
      std::size_t j = 0;
      while (j < n && k[j] == 10) k[j++] = -10;
      if (j == n) break;
      ++k[j];
    }
  }
  Outcome o{mismatches == 0, std::to_string(probes) + " probes, " + std::to_string(mismatches) + " mismatches"};
  return o;
}

// --------------------------------------------------------------------------
// 3. cone over a complex, sliced back

Rational random_step(std::mt19937& rng) { return Rational(rand_int(rng, 1, 5), rand_int(rng, 1, 3)); }

std::vector<Rational> breakpoints(std::mt19937& rng, int count) {
  std::vector<Rational> out{Rational(rand_int(rng, -3, 3), rand_int(rng, 1, 3))};
  for (int i = 1; i < count; ++i) out.push_back(out.back() + random_step(rng));
  return out;
}

// Subdivision of the line: segments between breakpoints, optionally with the
// two outer half-lines.
std::vector<Polyhedron> line_complex(std::mt19937& rng) {
  const auto b = breakpoints(rng, rand_int(rng, 2, 5));
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) cells.push_back(Polyhedron::from_generators(1, {QVector{b[i]}, QVector{b[i + 1]}}));
  if (rand_int(rng, 0, 1)) cells.push_back(Polyhedron::from_generators(1, {QVector{b.front()}}, {QVector{-1}}));
  if (rand_int(rng, 0, 1)) cells.push_back(Polyhedron::from_generators(1, {QVector{b.back()}}, {QVector{1}}));
  return cells;
}

// Grid of rectangles with rational breakpoints.
std::vector<Polyhedron> box_complex(std::mt19937& rng) {
  const auto xs = breakpoints(rng, rand_int(rng, 2, 4));
  const auto ys = breakpoints(rng, rand_int(rng, 2, 3));
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j)
      cells.push_back(Polyhedron::from_generators(
          2, {QVector{xs[i], ys[j]}, QVector{xs[i + 1], ys[j]}, QVector{xs[i], ys[j + 1]}, QVector{xs[i + 1], ys[j + 1]}}));
  return cells;
}

// Tropical curve of a random plane polynomial with a bounded edge.
std::vector<Polyhedron> curve_complex(std::mt19937& rng) {
  while (true) {
    std::map<ZVector, ValuedCoefficient> terms;
    for (int i = 0; i < 5; ++i)
      terms.emplace(ZVector{Integer(rand_int(rng, 0, 2)), Integer(rand_int(rng, 0, 2))},
                    ValuedCoefficient{Rational(rand_int(rng, 0, 4), 2), "c"});
    const auto h = tropical_hypersurface(ValuedLaurentPolynomial(2, terms));
    for (const auto& c : h.complex.cells())
      if (c.is_bounded() && c.dimension() > 0) return h.complex.cells();
  }
}

bool has_bounded_positive_dim_cell(const PolyhedralComplex& c) {
  for (const auto& cell : c.cells())
    if (cell.is_bounded() && cell.dimension() > 0) return true;
  return false;
}

Outcome criterion_tcone_roundtrip() {
  std::mt19937 rng(303);
  int equal = 0, bounded = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polyhedron> cells;
    std::size_t n = 2;
    switch (trial % 3) {
      case 0:
        cells = line_complex(rng);
        n = 1;
        break;
      case 1:
        cells = box_complex(rng);
        break;
      default:
        cells = curve_complex(rng);
        break;
    }
    const PolyhedralComplex c = make_complex(n, cells);
    if (has_bounded_positive_dim_cell(c)) ++bounded;
    const auto t = tcone_build(c);
    if (t.fan_status.ok() && slice_at_height_one(*t.fan_status.fan) == c) ++equal;
  }
  return Outcome{equal == 50 && bounded == 50, std::to_string(equal) + "/50 exact roundtrips, " +
                                                   std::to_string(bounded) + "/50 with bounded cells"};
}

// --------------------------------------------------------------------------
// 4. semistable rescaling

Outcome criterion_rescaling() {
  std::mt19937 rng(404);
  int reduced = 0, valuations_ok = 0, nonreduced_inputs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polyhedron> cells;
    std::size_t n;
    if (trial % 2 == 0) {
      cells = line_complex(rng);
      n = 2;
    } else {
      cells = box_complex(rng);
      n = 3;
    }
    const Fan fan = *tcone_build(make_complex(n - 1, cells)).fan_status.fan;
    const Integer scale = rand_int(rng, 1, 3);
    const AdmissibleFan af(fan, scale);
    const auto rep = special_fiber_report(af);
    if (!rep.reduced) ++nonreduced_inputs;
    const AdmissibleFan scaled = rescale(af, rep.reduction_index);
    const auto after = special_fiber_report(scaled);
    if (after.reduced) ++reduced;

    // multiplicity of the ray through primitive r in Z^(n-1) x dZ is r_n / gcd(r_n, d)
    bool ok = !rep.components.empty();
    for (const auto* report : {&rep, &after}) {
      const AdmissibleFan& which = report == &rep ? af : scaled;
      for (const auto& comp : report->components) {
        const ZVector& r = which.fan().cones()[comp.cone_index].rays().front();
        const Integer expected = r.back() / gcd(r.back(), which.scale());
        const Integer v = divisorial_valuation(uniformizer(which.context()), QVector(r), which.context());
        ok = ok && v == comp.multiplicity && v == expected;
      }
    }
    if (ok) ++valuations_ok;
  }
  return Outcome{reduced == 50 && valuations_ok == 50,
                 std::to_string(reduced) + "/50 reduced after rescaling, " + std::to_string(valuations_ok) +
                     "/50 valuations match, " + std::to_string(nonreduced_inputs) + " inputs non-reduced"};
}

// --------------------------------------------------------------------------
// 5. condition (2) against a bounded search

Outcome criterion_condition2() {
  std::mt19937 rng(505);
  int agree = 0, feasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rand_int(rng, 1, 3);
    const int k = rand_int(rng, 1, 3);
    BoundaryData d{n, {}, {{}}};
    std::vector<std::string> all;
    for (int i = 0; i < k; ++i) {
      ZVector v(n);
      for (auto& x : v) x = rand_int(rng, -3, 3);
      const std::string id = "D" + std::to_string(i);
      d.divisors.push_back({id, v});
      all.push_back(id);
    }
    // full nerve on the divisors
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<std::string> s;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(all[i]);
      d.strata.push_back(s);
    }
    const std::size_t pivot = rand_int(rng, 0, k - 1);
    const auto fast = check_condition2(d, all, all[pivot]);

    auto satisfies = [&](const ZVector& m) {
      for (int i = 0; i < k; ++i)
        if (dot(m, d.divisors[i].val) != (std::size_t(i) == pivot ? 1 : 0)) return false;
      return true;
    };
    bool found = false;
    ZVector m(n, Integer(-6));
    while (!found) {
      found = satisfies(m);
      std::size_t j = 0;
      while (j < n && m[j] == 6) m[j++] = -6;
      if (j == n) break;
      ++m[j];
    }
    if (fast) ++feasible;
    const bool ok = fast ? satisfies(*fast) : !found;
    if (ok && (!found || fast)) ++agree;
  }
  return Outcome{agree == 100, std::to_string(agree) + "/100 agree, " + std::to_string(feasible) + " feasible"};
}

// --------------------------------------------------------------------------
// 6. rigidity smoke test

Outcome criterion_hubsch() {
  const Fan line = make_fan(2, {Cone::from_integer_generators(2, {{1, 0}}), Cone::from_integer_generators(2, {{0, 1}}),
                                Cone::from_integer_generators(2, {{-1, -1}})});
  const auto a = hubsch_check(line);
  const Fan q1 = make_fan(1, {Cone::from_integer_generators(1, {{1}}), Cone::from_integer_generators(1, {{-1}})});
  const auto b = hubsch_check(q1);
  bool zero_cone_rank1 = false;
  for (const auto& c : b.cones)
    if (q1.cones()[c.cone_index].is_zero()) zero_cone_rank1 = c.translation.size() == 1;
  const bool ok = a.verdict == HubschVerdict::Pass && b.verdict == HubschVerdict::Fail && zero_cone_rank1;
  return Outcome{ok, "tropical line " + to_string(a.verdict) + ", complete fan of Q^1 " + to_string(b.verdict) +
                         (zero_cone_rank1 ? " with rank-1 translation at the zero cone" : "")};
}

// --------------------------------------------------------------------------
// 7. double dual and Hilbert basis

Outcome criterion_cones() {
  std::mt19937 rng(707);
  int dual_ok = 0, hilbert_ok = 0, hilbert_runs = 0, skipped = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    std::vector<ZVector> gens(rand_int(rng, 1, n + 2), ZVector(n));
    for (auto& g : gens)
      for (auto& x : g) x = rand_int(rng, -2, 2);
    const Cone c = Cone::from_integer_generators(n, gens);
    if (dual_cone(dual_cone(c)) == c && c.set_equal(dual_cone(dual_cone(c)))) ++dual_ok;
    if (!c.is_pointed()) continue;

    std::vector<ZVector> hb;
    try {
      hb = hilbert_basis(c, LatticeContext(n, 1));
    } catch (const DeskScaleExceeded&) {
      ++skipped;
      continue;
    }
    ++hilbert_runs;
    // members, irreducible, contain the primitive ray generators, and
    // generate every lattice point of C in the box |x_i| <= 4
    bool ok = true;
    std::set<ZVector> basis(hb.begin(), hb.end());
    for (const auto& h : hb) {
      ok = ok && c.contains(h) && std::any_of(h.begin(), h.end(), [](const Integer& x) { return x != 0; });
      for (const auto& b : hb) {
        if (b == h) continue;
        ZVector d = h;
        for (std::size_t i = 0; i < n; ++i) d[i] -= b[i];
        ok = ok && !c.contains(d);
      }
    }
    for (const auto& r : c.rays()) ok = ok && basis.count(r) == 1;
    std::map<ZVector, bool> memo;
    std::function<bool(const ZVector&)> generated = [&](const ZVector& x) {
      if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return true;
      if (auto it = memo.find(x); it != memo.end()) return it->second;
      bool res = false;
      for (const auto& b : hb) {
        ZVector y = x;
        for (std::size_t i = 0; i < n; ++i) y[i] -= b[i];
        if (c.contains(y) && generated(y)) {
          res = true;
          break;
        }
      }
      memo[x] = res;
      return res;
    };
    ZVector x(n, Integer(-4));
    while (ok) {
      if (c.contains(x)) ok = generated(x);
      std::size_t j = 0;
      while (j < n && x[j] == 4) x[j++] = -4;
      if (j == n) break;
      ++x[j];
    }
    if (ok) ++hilbert_ok;
  }
  return Outcome{dual_ok == 200 && hilbert_ok == hilbert_runs,
                 std::to_string(dual_ok) + "/200 double duals, " + std::to_string(hilbert_ok) + "/" +
                     std::to_string(hilbert_runs) + " Hilbert bases, " + std::to_string(skipped) + " over the box cap"};
}

// --------------------------------------------------------------------------
// 8. golden files

Outcome criterion_golden() {
  const std::filesystem::path dir = GOLDEN_DIR;
  const auto cases = golden::load_cases(dir / "cases.txt");
  const std::set<std::string> commands = {
      "fan validate",         "fan refines",          "fan common-refinement", "fan star",
      "fan coarsen",          "fan translation-space", "trop hypersurface",    "trop initial-form",
      "trop certificate",     "geomtrop build",       "geomtrop schoen-check", "geomtrop hubsch-check",
      "toric admissible",     "toric analyze",        "toric rescale",         "toric chart",
      "toric generic-fiber",  "tcone build",          "tcone slice",           "tcone properness"};
  std::set<std::string> covered;
  int identical = 0;
  std::string first_bad;
  for (const auto& c : cases) {
    if (c.args.size() >= 2) covered.insert(c.args[0] + " " + c.args[1]);
    const std::string expected = golden::read_file(dir / "expected" / (c.name + ".txt"));
    if (golden::run_case(c, dir / "inputs") == expected)
      ++identical;
    else if (first_bad.empty())
      first_bad = c.name;
  }
  std::size_t missing = 0;
  for (const auto& cmd : commands) missing += covered.count(cmd) == 0;
  const bool ok = identical == int(cases.size()) && missing == 0;
  return Outcome{ok, std::to_string(identical) + "/" + std::to_string(cases.size()) + " identical, " +
                         std::to_string(commands.size() - missing) + "/" + std::to_string(commands.size()) +
                         " commands covered" + (first_bad.empty() ? "" : ", first difference in " + first_bad)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "fan axioms", 10, criterion_fan_axioms},
      {2, "hypersurface vs grid oracle", 60, criterion_hypersurface_grid},
      {3, "cone over complex roundtrip", 30, criterion_tcone_roundtrip},
      {4, "semistable rescaling", 30, criterion_rescaling},
      {5, "condition (2) vs exhaustive search", 0, criterion_condition2},
      {6, "rigidity smoke test", 0, criterion_hubsch},
      {7, "double dual and Hilbert basis", 60, criterion_cones},
      {8, "CLI golden files", 0, criterion_golden},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit_seconds > 0) t << " of " << c.limit_seconds << " s";
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << ": " << c.name << ": " << o.detail
              << " (" << t.str() << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
