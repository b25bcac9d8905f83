#include <doctest.h>

#include "tropkit/error.hpp"
#include "tropkit/exact_lattice.hpp"

#include <random>

using namespace tropkit;

namespace {

void check_smith(const ZMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  CHECK(s.D.is_diagonal());
  const auto f = s.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f[i] > 0);
    if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
  }
  for (std::size_t i = s.rank; i < std::min(a.rows(), a.cols()); ++i) CHECK(s.D(i, i) == 0);
}

// every integer m in the box [-bound, bound]^n with A m = b
std::optional<ZVector> brute_solve(const ZMatrix& a, const ZVector& b, long bound) {
  const std::size_t n = a.cols();
  ZVector m(n, Integer(-bound));
  while (true) {
    if (a * m == b) return m;
    std::size_t j = 0;
    while (j < n && m[j] == bound) m[j++] = -bound;
    if (j == n) return std::nullopt;
    ++m[j];
  }
}

ZVector z(std::initializer_list<long> xs) { return ZVector(xs.begin(), xs.end()); }

}  // namespace

TEST_CASE("smith normal form on fixed matrices") {
  const SmithDecomposition id = smith_normal_form(ZMatrix::identity(2));
  CHECK(id.D == ZMatrix::identity(2));
  CHECK(id.U == ZMatrix::identity(2));
  CHECK(id.V == ZMatrix::identity(2));

  const SmithDecomposition d = smith_normal_form(ZMatrix{{2, 0}, {0, 3}});
  CHECK(d.D == ZMatrix{{1, 0}, {0, 6}});
  check_smith(ZMatrix{{2, 0}, {0, 3}});

  const SmithDecomposition e = smith_normal_form(ZMatrix{{2, 4}, {6, 8}});
  CHECK(e.D == ZMatrix{{2, 0}, {0, 4}});
  check_smith(ZMatrix{{2, 4}, {6, 8}});

  check_smith(ZMatrix{{0, 0, 0}, {0, 0, 0}});
  check_smith(ZMatrix{{6, 10, 15}});
  check_smith(ZMatrix{{4}, {6}});
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    ZMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    check_smith(a);
  }
}

TEST_CASE("smith normal form is deterministic") {
  const ZMatrix a{{3, 5, 7}, {2, 4, 6}, {1, 1, 9}};
  const auto s1 = smith_normal_form(a);
  const auto s2 = smith_normal_form(a);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
  CHECK(s1.D == s2.D);
}

TEST_CASE("solve_integer_linear small examples") {
  auto r = solve_integer_linear(ZMatrix::identity(2), z({1, 0}));
  REQUIRE(r);
  CHECK(r->solution == z({1, 0}));
  CHECK(r->kernel_basis.empty());

  CHECK_FALSE(solve_integer_linear(ZMatrix{{2}}, z({1})));

  // [[1,1],[0,2]] m = (1,0) has the integer solution (1,0)
  const ZMatrix a{{1, 1}, {0, 2}};
  auto s = solve_integer_linear(a, z({1, 0}));
  REQUIRE(s);
  CHECK(a * s->solution == z({1, 0}));
  CHECK(brute_solve(a, z({1, 0}), 3).has_value());
  // the transposed system needs m2 = -1/2
  const ZMatrix t{{1, 0}, {1, 2}};
  CHECK_FALSE(solve_integer_linear(t, z({1, 0})));
  CHECK_FALSE(brute_solve(t, z({1, 0}), 3).has_value());
}

TEST_CASE("solve_integer_linear agrees with brute force") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = trial % 2 ? 2 : 3;
    ZMatrix a(n, n);
    ZVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = entry(rng);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    const auto fast = solve_integer_linear(a, b);
    if (fast) {
      CHECK(a * fast->solution == b);
      for (const auto& k : fast->kernel_basis) CHECK(is_zero(a * k));
      CHECK(fast->kernel_basis.size() == n - rank_of(std::vector<QVector>{}, n) - smith_normal_form(a).rank);
    }
    // a solution inside the box implies feasibility; feasibility with a nonsingular
    // matrix puts the unique solution within reach of Cramer's bound
    const auto slow = brute_solve(a, b, 3);
    if (slow) CHECK(fast.has_value());
    if (determinant(a) != 0 && fast) {
      bool small = true;
      for (const auto& x : fast->solution) small = small && abs(x) <= 3;
      CHECK(slow.has_value() == small);
    }
  }
}

TEST_CASE("primitive_generator") {
  CHECK(primitive_generator(QVector{2, 4}, LatticeContext(2, 1)) == z({1, 2}));
  CHECK(primitive_generator(QVector{1, 2}, LatticeContext(2, 2)) == z({1, 2}));
  CHECK(primitive_generator(QVector{1, 1}, LatticeContext(2, 2)) == z({2, 2}));
  CHECK_THROWS_AS(primitive_generator(QVector{0, 0}, LatticeContext(2, 1)), InvalidArgument);
}

TEST_CASE("primitive_generator matches the multiple scan and is scale invariant") {
  // first lattice point among k/j * v, scanning small denominators
  auto scan = [](const QVector& v, const LatticeContext& ctx) {
    std::optional<QVector> best;
    for (int den = 1; den <= 60; ++den)
      for (int num = 1; num <= 60; ++num) {
        QVector w = Rational(num, den) * v;
        if (!w.is_integral() || !ctx.contains(w.to_integers())) continue;
        if (!best || dot(w, w) < dot(*best, *best)) best = w;
      }
    return best->to_integers();
  };
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4), den(1, 3), scale(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    QVector v{Rational(entry(rng), den(rng)), Rational(entry(rng), den(rng))};
    if (v.is_zero()) continue;
    const LatticeContext ctx(2, scale(rng));
    const ZVector g = primitive_generator(v, ctx);
    CHECK(g == scan(v, ctx));
    CHECK(primitive_generator(Rational(7, 3) * v, ctx) == g);
  }
}

TEST_CASE("lattice quotient") {
  const LatticeQuotient q = lattice_quotient({z({1, 1, 0})}, 3);
  CHECK(q.quotient_rank() == 2);
  CHECK(is_zero(q.project(z({1, 1, 0}))));
  CHECK(q.projection * q.section == ZMatrix::identity(2));
  // saturation: (2,2,0) has the same quotient
  const LatticeQuotient s = lattice_quotient({z({2, 2, 0})}, 3);
  CHECK(is_zero(s.project(z({1, 1, 0}))));
  // the kernel generator together with the section columns is a lattice basis
  CHECK(abs(determinant(ZMatrix::from_columns({z({1, 1, 0}), s.section.column(0), s.section.column(1)}, 3))) == 1);
}


TEST_CASE("rational linear algebra helpers") {
  const auto basis = canonical_row_basis({QVector{2, 4}, QVector{1, 2}}, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == z({1, 2}));
  CHECK(orthogonal_complement({QVector{1, 2}}, 2).size() == 1);
  CHECK(dot(orthogonal_complement({QVector{1, 2}}, 2)[0], z({1, 2})) == 0);
  CHECK(project_away(QVector{1, 1}, {z({1, 0})}) == QVector{0, 1});
  CHECK(in_span(QVector{3, 6}, {z({1, 2})}));
  CHECK_FALSE(in_span(QVector{3, 5}, {z({1, 2})}));
  CHECK(make_primitive(z({4, -6})) == z({2, -3}));
  CHECK(clear_denominators(QVector{Rational(1, 2), Rational(1, 3)}) == z({3, 2}));
}
