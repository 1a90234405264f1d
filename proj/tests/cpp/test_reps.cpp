#include <random>

#include "doctest.h"
#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"
#include "orbimod/reps.hpp"

using namespace orbimod;

namespace {

RankTwoVBundle uniform(int g, std::vector<int> alphas, IsotropyPair pair, std::int64_t l) {
  std::vector<IsotropyPair> pairs(alphas.size(), pair);
  return make_bundle(make_surface(g, std::move(alphas)), std::move(pairs), l);
}

Word word(std::initializer_list<std::pair<const char*, std::int64_t>> letters) {
  Word w;
  for (const auto& [g, e] : letters) w.push_back({g, e});
  return w;
}

std::vector<std::vector<int>> rs(const std::vector<RotationData>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& rd : v) out.push_back(rd.r());
  return out;
}

}  // namespace

TEST_CASE("fuchsian presentations") {
  const auto triangle = fuchsian_presentation(make_surface(0, {2, 3, 7}));
  CHECK(triangle.generators == std::vector<std::string>{"q1", "q2", "q3"});
  REQUIRE(triangle.relations.size() == 4);
  CHECK(triangle.relations[0] == word({{"q1", 2}}));
  CHECK(triangle.relations[2] == word({{"q3", 7}}));
  CHECK(triangle.relations[3] == word({{"q1", 1}, {"q2", 1}, {"q3", 1}}));
  CHECK(triangle.well_formed());
  CHECK(triangle.to_string() == "<q1, q2, q3 | q1^2, q2^3, q3^7, q1 q2 q3>");

  const auto torus = fuchsian_presentation(make_surface(1, {2}));
  CHECK(torus.generators == std::vector<std::string>{"a1", "b1", "q1"});
  REQUIRE(torus.relations.size() == 2);
  CHECK(torus.relations[1] == word({{"q1", 1}, {"a1", 1}, {"b1", 1}, {"a1", -1}, {"b1", -1}}));

  CHECK_THROWS_AS(make_surface(2, {}), DomainError);
}

TEST_CASE("circle group presentations") {
  const auto m = make_surface(1, {2});
  const auto p = circle_group_presentation(LineVBundle(m, 0, {1}));
  CHECK(p.generators.back() == "h");
  CHECK(p.relations[0] == word({{"q1", 2}, {"h", 1}}));
  CHECK(p.relations[1] == word({{"q1", 1}, {"a1", 1}, {"b1", 1}, {"a1", -1}, {"b1", -1}}));
  CHECK(p.well_formed());

  const auto trivial = circle_group_presentation(LineVBundle::trivial(m));
  CHECK(trivial.relations[0] == word({{"q1", 2}}));
  CHECK(trivial.relations[1] == word({{"q1", 1}, {"a1", 1}, {"b1", 1}, {"a1", -1}, {"b1", -1}}));

  const auto sphere = circle_group_presentation(LineVBundle(make_surface(0, {2, 3}), 2, {1, 0}));
  CHECK(sphere.relations[0] == word({{"q1", 2}, {"h", 1}}));
  CHECK(sphere.relations[1] == word({{"q2", 3}}));
  CHECK(sphere.relations[2] == word({{"q1", 1}, {"q2", 1}, {"h", -2}}));

  const auto z2 = circle_group_presentation(LineVBundle(m, 0, {1}), true);
  CHECK(z2.relations.back() == word({{"h", 2}}));
}

TEST_CASE("presentation parity sanity") {
  // With h of order two, q_i^alpha_i h^y_i = 1 forces q_i to rotate by r_i = y_i mod 2.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = std::uniform_int_distribution<int>(2, 9)(rng);
    const int y = std::uniform_int_distribution<int>(0, a - 1)(rng);
    const LineVBundle lambda(make_surface(1, {a}), 0, {y});
    const auto p = circle_group_presentation(lambda, true);
    const auto& rel = p.relations[0];
    const std::int64_t h_exp = rel.size() > 1 ? rel[1].exponent : 0;
    for (const auto& rd : compatible_rotation_numbers(lambda)) CHECK((rd[0] - h_exp) % 2 == 0);
  }
}

TEST_CASE("compatible rotation numbers") {
  CHECK(rs(compatible_rotation_numbers(LineVBundle(make_surface(0, {2}), 0, {1}))) ==
        std::vector<std::vector<int>>{{1}});
  CHECK(rs(compatible_rotation_numbers(LineVBundle(make_surface(0, {3}), 0, {0}))) ==
        std::vector<std::vector<int>>{{0}, {2}});
  CHECK(rs(compatible_rotation_numbers(LineVBundle(make_surface(0, {4}), 0, {1}))) ==
        std::vector<std::vector<int>>{{1}, {3}});
}

TEST_CASE("representation variety dimension") {
  CHECK(rep_variety_dimension(LineVBundle(make_surface(1, {2}), 0, {1}), RotationData(make_surface(1, {2}), {1})) == 2);
  CHECK(rep_variety_dimension(LineVBundle(make_surface(2, {3}), 0, {0}), RotationData(make_surface(2, {3}), {0})) == 6);
  const auto six = make_surface(0, {2, 2, 2, 2, 2, 2});
  const RotationData ones(six, {1, 1, 1, 1, 1, 1});
  CHECK(rep_variety_dimension(LineVBundle(six, 0, {1, 1, 1, 1, 1, 1}), ones) == 6);
  CHECK(rep_variety_dimension(LineVBundle(six, 0, {1, 1, 1, 1, 1, 1}), ones) ==
        moduli_dimension(uniform(0, {2, 2, 2, 2, 2, 2}, {0, 1}, 0)));
  CHECK_THROWS_AS(rep_variety_dimension(LineVBundle(make_surface(1, {2}), 0, {0}), RotationData(make_surface(1, {2}), {1})),
                  DomainError);
}

TEST_CASE("representation reducibility") {
  const auto m = make_surface(0, {2});
  for (std::int64_t b = -2; b <= 2; ++b) CHECK_FALSE(rep_reducible(LineVBundle(m, b, {1}), RotationData(m, {1})));
  const auto m2 = make_surface(0, {2, 2});
  const auto w = rep_reducible(LineVBundle(m2, 0, {1, 1}), RotationData(m2, {1, 1}));
  REQUIRE(w);
  CHECK(w->values() == std::vector<int>{1, -1});
  const auto m3 = make_surface(0, {3});
  CHECK_FALSE(rep_reducible(LineVBundle(m3, 1, {0}), RotationData(m3, {0})));
}

TEST_CASE("reducibility agrees with the bundle side") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    std::vector<int> alphas;
    std::vector<IsotropyPair> pairs;
    for (int i = 0; i < n; ++i) {
      const int a = std::uniform_int_distribution<int>(2, 8)(rng);
      int x = std::uniform_int_distribution<int>(0, a - 1)(rng);
      int xp = std::uniform_int_distribution<int>(0, a - 1)(rng);
      if (x > xp) std::swap(x, xp);
      alphas.push_back(a);
      pairs.push_back({x, xp});
    }
    const auto e = make_bundle(make_surface(g, alphas), pairs, std::uniform_int_distribution<int>(-5, 5)(rng));
    const auto [lambda, rd] = rotation_numbers_of(e);
    CHECK(rd.compatible_with(lambda));
    CHECK(rd.n0() == e.n0());
    CHECK(rep_variety_dimension(lambda, rd) == moduli_dimension(e));
    CHECK(rep_reducible(lambda, rd).has_value() == reducible_exists(e).has_value());
  }
}

TEST_CASE("sign twist orbits") {
  const auto m = make_surface(0, {2});
  CHECK(rs(sign_twist_orbit(LineVBundle(m, 0, {1}), RotationData(m, {1}))) == std::vector<std::vector<int>>{{1}});
  const auto m2 = make_surface(0, {2, 4});
  CHECK(rs(sign_twist_orbit(LineVBundle(m2, 0, {1, 1}), RotationData(m2, {1, 1}))) ==
        std::vector<std::vector<int>>{{1, 1}, {1, 3}});
  const auto m3 = make_surface(0, {3, 5});
  CHECK(rs(sign_twist_orbit(LineVBundle(m3, 0, {1, 2}), RotationData(m3, {1, 2}))) ==
        std::vector<std::vector<int>>{{1, 2}});

  const auto m4 = make_surface(1, {2, 4, 6, 3});
  const LineVBundle lambda(m4, 0, {1, 0, 1, 0});
  const RotationData rd(m4, {1, 2, 3, 0});
  for (const auto& o : sign_twist_orbit(lambda, rd)) {
    CHECK(o.compatible_with(lambda));
    CHECK(o.n0() == rd.n0());
  }
}

TEST_CASE("real fixed components") {
  const auto torus = real_fixed_components(uniform(1, {2}, {0, 1}, 0));
  REQUIRE(torus.size() == 2);
  CHECK(torus[0].kind == RealComponent::Kind::StableBundles);
  CHECK(torus[0].complex_dim == 1);
  CHECK(torus[1].kind == RealComponent::Kind::VectorBundleOverCover);
  CHECK(torus[1].rank == 1);
  CHECK(torus[1].base_sym_power == 0);
  CHECK(torus[1].cover_order == 4);

  const auto five = uniform(0, {5, 5, 5, 5}, {0, 1}, 1);
  const auto comps = real_fixed_components(five);
  CHECK(comps.size() == 1 + enumerate_strata(five).size());
  for (const auto& c : comps) {
    CHECK(c.complex_dim == 1);
    if (c.kind == RealComponent::Kind::VectorBundleOverCover) CHECK(c.rank + c.base_sym_power == c.complex_dim);
  }
  CHECK_THROWS_AS(real_fixed_components(uniform(0, {2, 2, 2, 2, 2, 2}, {0, 1}, 0)), DomainError);
  CHECK(to_string(RealComponent::Kind::VectorBundleOverCover) == "vector_bundle_over_cover");
}

TEST_CASE("psl2r components") {
  const auto m = make_surface(2, {2});
  const auto top = psl2r_component(m, 2, {1});
  CHECK(top.rank == 4);
  CHECK(top.base_sym_power == 0);
  CHECK(top.complex_dim == 4);
  const auto next = psl2r_component(m, 1, {1});
  CHECK(next.rank == 3);
  CHECK(next.base_sym_power == 1);
  CHECK(next.complex_dim == 4);
  CHECK_THROWS_AS(psl2r_component(make_surface(1, {2}), 1, {1}), DomainError);
  CHECK_THROWS_AS(psl2r_component(m, -1, {0}), DomainError);
  CHECK(teichmuller_dimension(m) == top.complex_dim);
}

TEST_CASE("milnor-wood") {
  const auto m = make_surface(2, {2});
  CHECK(milnor_wood(m, Rational(5, 2)));
  CHECK_FALSE(milnor_wood(m, Rational(3)));
  CHECK(milnor_wood(m, Rational(0)));
  CHECK(milnor_wood(m, Rational(-5, 2)));
  const auto k = canonical_bundle(m);
  CHECK(k.c1() == -m.euler_characteristic());
}

TEST_CASE("teichmuller dimension") {
  CHECK(teichmuller_dimension(make_surface(0, {2, 3, 7})) == 0);
  CHECK(teichmuller_dimension(make_surface(2, {2})) == 4);
  CHECK(teichmuller_dimension(make_surface(1, {2})) == 1);
  CHECK_THROWS_AS(teichmuller_dimension(make_surface(0, {2, 2, 2, 2})), DomainError);
}

TEST_CASE("conical metrics") {
  const auto t = conical_metric_report(make_surface(0, {2, 3, 7}));
  CHECK(t.exists_unique);
  CHECK(t.cone_angles_over_pi == std::vector<Rational>{Rational(1), Rational(2, 3), Rational(2, 7)});
  CHECK_FALSE(conical_metric_report(make_surface(0, {2, 2, 2, 2})).exists_unique);
  const auto g2 = conical_metric_report(make_surface(2, {2}));
  CHECK(g2.exists_unique);
  CHECK(g2.cone_angles_over_pi == std::vector<Rational>{Rational(1)});
}
