#include <doctest.h>

#include "tropkit/error.hpp"
#include "tropkit/tropical.hpp"

#include <random>

using namespace tropkit;

namespace {

ZVector z(std::initializer_list<long> xs) { return ZVector(xs.begin(), xs.end()); }

ValuedLaurentPolynomial poly(std::size_t n, std::vector<std::pair<ZVector, Rational>> terms) {
  std::map<ZVector, ValuedCoefficient> t;
  int k = 0;
  for (auto& [m, v] : terms) t.emplace(m, ValuedCoefficient{v, "c" + std::to_string(k++)});
  return ValuedLaurentPolynomial(n, std::move(t));
}

// minimum attained at least twice, evaluated term by term
bool tie_oracle(const std::vector<std::pair<ZVector, Rational>>& terms, const QVector& w) {
  std::vector<Rational> values;
  for (const auto& [m, v] : terms) {
    Rational s = v;
    for (std::size_t i = 0; i < m.size(); ++i) s += Rational(m[i]) * w[i];
    values.push_back(s);
  }
  const Rational lo = *std::min_element(values.begin(), values.end());
  return std::count(values.begin(), values.end(), lo) >= 2;
}

bool in_complex(const PolyhedralComplex& c, const QVector& w) {
  return std::any_of(c.cells().begin(), c.cells().end(), [&](const Polyhedron& p) { return p.contains(w); });
}

void check_against_grid(const std::vector<std::pair<ZVector, Rational>>& terms, std::size_t n, int radius) {
  const auto h = tropical_hypersurface(poly(n, terms));
  std::vector<int> k(n, -radius);
  while (true) {
    QVector w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rational(k[i], 2);
    CHECK(in_complex(h.complex, w) == tie_oracle(terms, w));
    std::size_t j = 0;
    while (j < n && k[j] == radius) k[j++] = -radius;
    if (j == n) break;
    ++k[j];
  }
  for (const auto& cell : h.complex.cells()) CHECK(cell.dimension() + 1 == n);
}

}  // namespace

TEST_CASE("initial_form examples") {
  const auto f = poly(2, {{z({1, 0}), 0}, {z({0, 1}), 0}});
  CHECK(initial_form(f, QVector{0, 0}).exponents.size() == 2);
  const auto at = initial_form(f, QVector{1, 0});
  CHECK(at.is_monomial());
  CHECK(at.exponents[0] == z({0, 1}));
  const auto g = poly(2, {{z({1, 0}), 0}, {z({0, 1}), 0}, {z({0, 0}), 1}});
  const auto all = initial_form(g, QVector{1, 1});
  CHECK(all.exponents.size() == 3);
  CHECK(all.value == 1);
  CHECK_THROWS_AS(initial_form(f, QVector{1}), RankMismatch);
}

TEST_CASE("certificate examples") {
  const auto f = poly(2, {{z({1, 0}), 0}, {z({0, 1}), 0}});
  const auto ex = is_in_tropicalization_certificate({f}, QVector{1, 0});
  CHECK(ex.excluded);
  CHECK(ex.witness == 0);
  CHECK(ex.forms[0].is_monomial());
  CHECK_FALSE(is_in_tropicalization_certificate({f}, QVector{0, 0}).excluded);
  // x + y + 1 and x - y at (2,2): the constant of the first survives alone
  const auto g1 = poly(2, {{z({1, 0}), 0}, {z({0, 1}), 0}, {z({0, 0}), 0}});
  const auto g2 = poly(2, {{z({1, 0}), 0}, {z({0, 1}), 0}});
  const auto c = is_in_tropicalization_certificate({g1, g2}, QVector{2, 2});
  CHECK(c.excluded);
  CHECK(c.witness == 0);
  CHECK(c.forms[0].exponents == std::vector<ZVector>{z({0, 0})});
  CHECK(c.forms[1].exponents.size() == 2);
  CHECK_THROWS_AS(is_in_tropicalization_certificate({}, QVector{0, 0}), InvalidArgument);
}

TEST_CASE("tropical line and conic") {
  const std::vector<std::pair<ZVector, Rational>> line{{z({0, 0}), 0}, {z({1, 0}), 0}, {z({0, 1}), 0}};
  const auto h = tropical_hypersurface(poly(2, line));
  REQUIRE(h.complex.cells().size() == 3);
  // min-plus: rays leave the origin towards (1,0), (0,1), (-1,-1)
  std::vector<ZVector> dirs;
  for (const auto& c : h.complex.cells()) {
    CHECK(c.vertices() == std::vector<QVector>{QVector{0, 0}});
    REQUIRE(c.rays().size() == 1);
    dirs.push_back(c.rays()[0]);
  }
  std::sort(dirs.begin(), dirs.end());
  CHECK(dirs == std::vector<ZVector>{z({-1, -1}), z({0, 1}), z({1, 0})});
  check_against_grid(line, 2, 10);

  const std::vector<std::pair<ZVector, Rational>> conic{
      {z({0, 0}), 0}, {z({1, 0}), 0}, {z({0, 1}), 0}, {z({1, 1}), 1}};
  const auto c = tropical_hypersurface(poly(2, conic));
  std::size_t bounded = 0;
  for (const auto& cell : c.complex.cells())
    if (cell.is_bounded()) {
      ++bounded;
      const auto v = cell.vertices();
      REQUIRE(v.size() == 2);
      const QVector edge = v[1] - v[0];
      CHECK(primitive_integer_direction(edge) == clear_denominators(edge));
    }
  CHECK(bounded == 1);
  check_against_grid(conic, 2, 10);
}

TEST_CASE("monomial input") {
  const auto h = tropical_hypersurface(poly(2, {{z({1, 0}), 0}}));
  CHECK(h.monomial_input);
  CHECK(h.complex.is_empty());
}

TEST_CASE("constant_coefficient_fan") {
  const auto line = constant_coefficient_fan(poly(2, {{z({0, 0}), 0}, {z({1, 0}), 0}, {z({0, 1}), 0}}));
  CHECK(line.maximal_indices().size() == 3);
  CHECK(validate_fan(2, line.maximal_cones()).ok());
  const auto point = constant_coefficient_fan(poly(1, {{z({0}), 0}, {z({1}), 0}}));
  REQUIRE(point.maximal_indices().size() == 1);
  CHECK(point.maximal_cones()[0].is_zero());
  // (1 + x)(1 + y) = 1 + x + y + xy: the two coordinate axes
  const auto axes = constant_coefficient_fan(
      poly(2, {{z({0, 0}), 0}, {z({1, 0}), 0}, {z({0, 1}), 0}, {z({1, 1}), 0}}));
  CHECK(same_support(axes, make_fan(2, {Cone::from_integer_generators(2, {z({1, 0})}),
                                        Cone::from_integer_generators(2, {z({-1, 0})}),
                                        Cone::from_integer_generators(2, {z({0, 1})}),
                                        Cone::from_integer_generators(2, {z({0, -1})})})));
  CHECK(axes.maximal_indices().size() == 4);
  CHECK_THROWS_AS(constant_coefficient_fan(poly(2, {{z({0, 0}), 1}, {z({1, 0}), 0}})), InvalidArgument);
}

TEST_CASE("hypersurfaces agree with the tie oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-2, 2), val(0, 2), count(2, 6);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::map<ZVector, Rational> t;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      ZVector m(n);
      for (auto& x : m) x = entry(rng);
      t[m] = Rational(val(rng), 2);
    }
    if (t.size() < 2) continue;
    std::vector<std::pair<ZVector, Rational>> terms(t.begin(), t.end());
    check_against_grid(terms, n, n == 3 ? 4 : 8);
  }
}

TEST_CASE("constant-coefficient hypersurfaces are conical") {
  const auto f = poly(2, {{z({0, 0}), 0}, {z({2, 1}), 0}, {z({-1, 3}), 0}});
  const auto h = tropical_hypersurface(f);
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      const QVector w{x, y};
      CHECK(in_complex(h.complex, w) == in_complex(h.complex, Rational(5, 3) * w));
    }
}
