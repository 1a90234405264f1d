#include <algorithm>
#include <random>

#include "doctest.h"
#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"

using namespace orbimod;

namespace {

RankTwoVBundle uniform(int g, std::vector<int> alphas, IsotropyPair pair, std::int64_t l) {
  std::vector<IsotropyPair> pairs(alphas.size(), pair);
  return make_bundle(make_surface(g, std::move(alphas)), std::move(pairs), l);
}

const RankTwoVBundle kTorus = uniform(1, {2}, {0, 1}, 0);
const RankTwoVBundle kFive = uniform(0, {5, 5, 5, 5}, {0, 1}, 1);

}  // namespace

TEST_CASE("strata of the genus one example") {
  const auto strata = enumerate_strata(kTorus);
  REQUIRE(strata.size() == 1);
  CHECK(strata[0].spec.m == 0);
  CHECK(strata[0].spec.eps.values() == std::vector<int>{1});
  CHECK(strata[0].value_over_2pi == Rational(1, 2));
  CHECK(strata[0].index == 2);
  CHECK(strata[0].r == 0);
  CHECK(strata[0].cover_order == 4);
}

TEST_CASE("strata of the four-point sphere") {
  const auto strata = enumerate_strata(kFive);
  REQUIRE(strata.size() == 5);
  CHECK(strata[0].spec.eps.values() == std::vector<int>{-1, -1, -1, -1});
  CHECK(2 * strata[0].spec.m - kFive.l() == 1);
  CHECK(strata[0].index == 0);
  CHECK(strata[0].r == 1);
  for (std::size_t i = 1; i < 5; ++i) {
    CHECK(strata[i].index == 2);
    CHECK(strata[i].r == 0);
    CHECK(strata[i].spec.eps.n_minus() == 3);
  }
  for (std::size_t i = 1; i < strata.size(); ++i) {
    CHECK(strata[i - 1].value_over_2pi <= strata[i].value_over_2pi);
  }
}

TEST_CASE("triangle group strata") {
  for (std::int64_t l : {0, 1}) {
    const auto e = uniform(0, {2, 3, 7}, {0, 1}, l);
    const auto strata = enumerate_strata(e);
    REQUIRE(strata.size() == 1);
    CHECK(strata[0].index == 0);
    CHECK(strata[0].r == 0);
    CHECK(poincare_polynomial(e) == LaurentPoly({1}));
    CHECK(topology_report(e).compact);
    CHECK(euler_characteristic_moduli(e) == 1);
  }
  const auto odd = enumerate_strata(uniform(0, {2, 3, 7}, {0, 1}, 1));
  CHECK(odd[0].spec.eps.values() == std::vector<int>{-1, -1, -1});
  CHECK(2 * odd[0].spec.m - 1 == 1);
}

TEST_CASE("minimum stratum") {
  const auto torus = minimum_stratum(kTorus);
  CHECK(torus.kind == MinStratum::Kind::StableBundlesModuli);
  CHECK(torus.complex_dim == 1);

  const auto even = minimum_stratum(uniform(0, {2, 3, 7}, {0, 1}, 0));
  REQUIRE(even.kind == MinStratum::Kind::ProjectiveStratum);
  CHECK(even.stratum->spec.eps.values() == std::vector<int>{1, -1, -1});
  CHECK(2 * even.stratum->spec.m == 0);
  CHECK(even.stratum->r == 0);

  const auto five = minimum_stratum(kFive);
  REQUIRE(five.kind == MinStratum::Kind::ProjectiveStratum);
  CHECK(five.stratum->r == 1);
  CHECK(count_projective_minima(kFive) == 1);
  CHECK(stable_bundles_empty(kFive));
  CHECK_FALSE(stable_bundles_empty(kTorus));
}

TEST_CASE("poincare polynomial assembly") {
  CHECK(poincare_polynomial(kFive) == LaurentPoly({1, 0, 5}));
  CHECK(poincare_polynomial(kFive).to_string() == "1 + 5t^2");

  const auto torus = poincare_polynomial(kTorus);
  CHECK(torus.is_symbolic());
  CHECK(torus.coeffs() == std::vector<std::int64_t>{0, 0, 4});
  CHECK(torus.to_string() == "P(N0) + 4t^2");
  CHECK_FALSE(torus.at_one());

  const auto supplied = poincare_polynomial(kTorus, LaurentPoly({1, 0, 1}));
  CHECK_FALSE(supplied.is_symbolic());
  CHECK(supplied == LaurentPoly({1, 0, 5}));
}

TEST_CASE("symbolic covers for positive genus") {
  const auto e = uniform(1, {3, 3}, {0, 1}, 1);
  const auto strata = enumerate_strata(e);
  const bool has_positive_r = std::any_of(strata.begin(), strata.end(), [](const Stratum& s) { return s.r > 0; });
  const auto p = poincare_polynomial(e, LaurentPoly({1}));
  if (has_positive_r) {
    CHECK(p.is_symbolic());
    std::map<std::int64_t, LaurentPoly> covers;
    for (const auto& s : strata) covers[s.r] = LaurentPoly({1});
    CHECK_FALSE(poincare_polynomial(e, LaurentPoly({1}), covers).is_symbolic());
  } else {
    CHECK_FALSE(p.is_symbolic());
  }
}

TEST_CASE("laurent polynomial algebra") {
  CHECK(LaurentPoly::projective_space(2) == LaurentPoly({1, 0, 1, 0, 1}));
  CHECK(LaurentPoly({1, 1}) * LaurentPoly({1, 1}) == LaurentPoly({1, 2, 1}));
  CHECK(LaurentPoly({1, 0, 0}).coeffs() == std::vector<std::int64_t>{1});
  CHECK(LaurentPoly::monomial(3, 2).shifted(1) == LaurentPoly({0, 0, 0, 3}));
  CHECK((LaurentPoly::symbol("X") + LaurentPoly::symbol("X")).symbols()[0].coefficient == 2);
  CHECK_THROWS_AS(LaurentPoly::symbol("X") * LaurentPoly::symbol("Y"), DomainError);
  CHECK(LaurentPoly({2, 0, 3}).at_one() == 5);
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("euler characteristic of the moduli") {
  CHECK(euler_characteristic_moduli(kFive) == 6);
  CHECK_FALSE(euler_characteristic_moduli(kTorus));
  CHECK(euler_characteristic_moduli(kTorus, 3) == 7);
  CHECK(symmetric_power_euler_characteristic(0, 1) == 2);
  CHECK(symmetric_power_euler_characteristic(0, 4) == 5);
  CHECK(symmetric_power_euler_characteristic(1, 0) == 1);
  CHECK(symmetric_power_euler_characteristic(1, 3) == 0);
  CHECK(symmetric_power_euler_characteristic(2, 1) == -2);
  CHECK(symmetric_power_euler_characteristic(2, 2) == 1);
  CHECK(symmetric_power_euler_characteristic(2, 3) == 0);
}

TEST_CASE("topology report") {
  const auto point = topology_report(uniform(0, {2, 3, 7}, {0, 1}, 0));
  CHECK(point.compact);
  CHECK(point.isolated_point);
  CHECK(point.real_dim == 0);
  const auto torus = topology_report(kTorus);
  CHECK(torus.connected);
  CHECK(torus.simply_connected);
  CHECK_FALSE(torus.compact);
  CHECK(torus.real_dim == 4);
  const auto six = topology_report(uniform(0, {5, 5, 5, 5, 5, 5}, {0, 1}, 1));
  CHECK(six.real_dim == 12);
  CHECK_FALSE(six.compact);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(enumerate_strata(uniform(0, {2, 2, 2, 2, 2, 2}, {0, 1}, 0)), DomainError);
  CHECK_THROWS_AS(enumerate_strata(uniform(0, {3, 3}, {0, 1}, 0)), DomainError);
  CHECK_THROWS_AS(topology_report(uniform(0, {2, 2, 2, 2, 2, 2}, {0, 1}, 0)), DomainError);
}

TEST_CASE("stratum identities on random bundles") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 80; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<int> alphas;
    std::vector<IsotropyPair> pairs;
    for (int i = 0; i < n; ++i) {
      const int a = std::uniform_int_distribution<int>(2, 9)(rng);
      int x = std::uniform_int_distribution<int>(0, a - 1)(rng);
      int xp = std::uniform_int_distribution<int>(0, a - 1)(rng);
      if (x > xp) std::swap(x, xp);
      alphas.push_back(a);
      pairs.push_back({x, xp});
    }
    const auto e = make_bundle(make_surface(g, alphas), pairs, std::uniform_int_distribution<int>(-4, 4)(rng));
    if (!e.surface().hyperbolic() || reducible_exists(e) || (g == 0 && e.num_distinct() < 3)) continue;
    ++checked;
    const auto k = static_cast<std::int64_t>(e.num_distinct());
    int index_zero = 0;
    for (const auto& s : enumerate_strata(e)) {
      CHECK(2 * s.r + s.index == 6 * g - 6 + 2 * k);
      CHECK(s.index % 2 == 0);
      CHECK(s.r >= 0);
      CHECK(s.value_over_2pi > Rational(0));
      CHECK(s.cover_order == (std::int64_t{1} << (2 * g)));
      if (s.index == 0) ++index_zero;
    }
    const auto min = minimum_stratum(e);
    CHECK(index_zero == (min.kind == MinStratum::Kind::ProjectiveStratum ? 1 : 0));
    if (g == 0 && min.kind == MinStratum::Kind::ProjectiveStratum) {
      CHECK(poincare_polynomial(e).at_one() == euler_characteristic_moduli(e));
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("strata are invariant under relabeling") {
  const auto e = make_bundle(make_surface(0, {3, 5, 7, 4}), {{0, 1}, {1, 3}, {2, 6}, {0, 1}}, 1);
  const auto f = make_bundle(make_surface(0, {4, 7, 5, 3}), {{0, 1}, {2, 6}, {1, 3}, {0, 1}}, 1);
  const auto a = enumerate_strata(e);
  const auto b = enumerate_strata(f);
  REQUIRE(a.size() == b.size());
  auto key = [](const std::vector<Stratum>& v) {
    std::vector<std::tuple<Rational, std::int64_t, std::int64_t>> out;
    for (const auto& s : v) out.emplace_back(s.value_over_2pi, s.index, s.r);
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(key(a) == key(b));
}
