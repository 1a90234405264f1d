#include <random>

#include "doctest.h"
#include "orbimod/core.hpp"
#include "orbimod/errors.hpp"

using namespace orbimod;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("surface euler characteristic") {
  CHECK(make_surface(0, {2, 3, 7}).euler_characteristic() == q(-1, 42));
  CHECK(make_surface(1, {2}).euler_characteristic() == q(-1, 2));
  const auto flat = make_surface(0, {2, 2, 2, 2});
  CHECK(flat.euler_characteristic() == q(0));
  CHECK_FALSE(flat.hyperbolic());
  CHECK(make_surface(1, {2, 2, 2, 2}).euler_characteristic() == q(-2));
  CHECK(euler_characteristic(make_surface(0, {2, 2, 2, 2, 2, 2})) == q(-1));
  CHECK(euler_characteristic(make_surface(2, {2})) == q(-5, 2));
  CHECK(make_surface(0, {2, 3, 7}).hyperbolic());
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(make_surface(0, {}), DomainError);
  CHECK_THROWS_AS(make_surface(0, {1, 3}), DomainError);
  CHECK_THROWS_AS(make_surface(-1, {2}), DomainError);
}

TEST_CASE("canonical bundle") {
  const auto k = canonical_bundle(make_surface(0, {2, 3, 7}));
  CHECK(k.y() == std::vector<int>{1, 2, 6});
  CHECK(k.c1() == q(1, 42));
  const auto k1 = canonical_bundle(make_surface(1, {2}));
  CHECK(k1.y() == std::vector<int>{1});
  CHECK(k1.c1() == q(1, 2));
  const auto m = make_surface(3, {5, 6});
  CHECK(canonical_bundle(m).c1() == -m.euler_characteristic());
}

TEST_CASE("tensor and dual") {
  const auto m = make_surface(0, {3});
  const auto carry = tensor(point_bundle(m, 0), power(point_bundle(m, 0), 2));
  CHECK(carry.y() == std::vector<int>{0});
  CHECK(carry.b() == 1);

  const auto m2 = make_surface(1, {2});
  const LineVBundle half(m2, 0, {1});
  CHECK(tensor(LineVBundle::trivial(m2), half) == half);
  const auto sq = tensor(half, half);
  CHECK(sq.b() == 1);
  CHECK(sq.y() == std::vector<int>{0});
  CHECK(sq.c1() == q(1));

  const auto d = dual(half);
  CHECK(d.b() == -1);
  CHECK(d.y() == std::vector<int>{1});
  CHECK(dual(LineVBundle::trivial(m2)).is_trivial());
  CHECK(tensor(half, d).is_trivial());

  CHECK_THROWS_AS(tensor(half, LineVBundle::trivial(m)), DomainError);
}

TEST_CASE("tensor group laws on random bundles") {
  std::mt19937_64 rng(7);
  const auto m = make_surface(2, {3, 4, 6});
  auto random_line = [&] {
    std::uniform_int_distribution<std::int64_t> b(-20, 20);
    std::vector<int> y;
    for (int a : m.cone_orders()) y.push_back(std::uniform_int_distribution<int>(0, a - 1)(rng));
    return LineVBundle(m, b(rng), y);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_line(), b = random_line(), c = random_line();
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(dual(dual(a)) == a);
    CHECK(tensor(a, b).c1() == a.c1() + b.c1());
  }
}

TEST_CASE("point bundles") {
  const auto m = make_surface(0, {2, 3, 7});
  CHECK(point_bundle(m, 1).c1() == q(1, 3));
  CHECK(point_bundle(make_surface(1, {2}), 0).c1() == q(1, 2));
  auto all = LineVBundle::trivial(m);
  for (std::size_t i = 0; i < 3; ++i) all = tensor(all, point_bundle(m, i));
  CHECK(all.c1() == q(41, 42));
  CHECK_THROWS(point_bundle(m, 3));
}

TEST_CASE("divisors") {
  const auto m = make_surface(0, {2, 3});
  Divisor d(m);
  d.add_marked(0, 1);
  CHECK(divisor_to_bundle(d) == point_bundle(m, 0));

  const auto m1 = make_surface(0, {2});
  Divisor d3(m1);
  d3.add_marked(0, 3);
  const auto l3 = divisor_to_bundle(d3);
  CHECK(l3.b() == 1);
  CHECK(l3.y() == std::vector<int>{1});
  CHECK(l3.c1() == q(3, 2));

  Divisor ordinary(m1);
  ordinary.add_ordinary("q", 1);
  const auto lq = divisor_to_bundle(ordinary);
  CHECK(lq.b() == 1);
  CHECK(lq.y() == std::vector<int>{0});

  Divisor zero(m1);
  zero.add_marked(0, 2).add_marked(0, -2);
  CHECK(zero.marked().empty());

  const auto sum = d3 + ordinary;
  CHECK(sum.degree() == q(5, 2));
  CHECK(divisor_to_bundle(sum) == tensor(l3, lq));
}

TEST_CASE("smooth line bundle degree") {
  CHECK(smooth_line_bundle(canonical_bundle(make_surface(1, {2}))) == 0);
  const auto m = make_surface(0, {2, 3});
  CHECK(smooth_line_bundle(point_bundle(m, 0)) == 0);
  CHECK(smooth_line_bundle(LineVBundle(m, 3, {1, 2})) == 3);
  const LineVBundle top(m, 0, {1, 0});
  CHECK(smooth_line_bundle(tensor(top, point_bundle(m, 0))) - smooth_line_bundle(top) == 1);
  CHECK(smooth_line_bundle(tensor(top, point_bundle(m, 1))) - smooth_line_bundle(top) == 0);
}

TEST_CASE("riemann-roch") {
  const auto m = make_surface(2, {2});
  CHECK(chi_line(power(canonical_bundle(m), 2)) == 4);
  CHECK(chi_line(LineVBundle::trivial(m)) == -1);
  CHECK(chi_line(point_bundle(make_surface(0, {2, 3, 7}), 0)) == 1);
}

TEST_CASE("serre duality") {
  const auto m = make_surface(1, {2});
  const auto k = canonical_bundle(m);
  CHECK(serre_partner(k).is_trivial());
  CHECK(chi_line(k) == 0);
  CHECK(chi_line(serre_partner(k)) == 0);
  CHECK(serre_partner(LineVBundle::trivial(m)) == k);

  const auto m2 = make_surface(2, {3, 4});
  for (std::int64_t b = -6; b <= 6; ++b) {
    for (int y1 = 0; y1 < 3; ++y1) {
      for (int y2 = 0; y2 < 4; ++y2) {
        const LineVBundle l(m2, b, {y1, y2});
        CHECK(chi_line(l) + chi_line(serre_partner(l)) == 0);
      }
    }
  }
}

TEST_CASE("forced h0") {
  const auto m = make_surface(2, {2});
  CHECK(h0_forced(LineVBundle(m, -1, {0})) == ForcedH0::known(0));
  CHECK(h0_forced(power(canonical_bundle(m), 2)) == ForcedH0::known(4));
  CHECK(h0_forced(LineVBundle::trivial(m)).kind == ForcedH0::Kind::IndeterminateZeroOrOne);
  CHECK(h0_forced(LineVBundle(m, 1, {0})).kind == ForcedH0::Kind::Unknown);
  CHECK(to_string(ForcedH0::Kind::Known) == "known");
}

TEST_CASE("h0 of K squared on hyperbolic surfaces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 6)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<int> alphas;
    for (int i = 0; i < n; ++i) alphas.push_back(std::uniform_int_distribution<int>(2, 9)(rng));
    const auto m = make_surface(g, alphas);
    if (!m.hyperbolic()) continue;
    const auto h = h0_forced(power(canonical_bundle(m), 2));
    CHECK(h == ForcedH0::known(3 * g - 3 + n));
  }
}
