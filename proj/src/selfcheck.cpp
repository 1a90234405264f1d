#include "orbimod/selfcheck.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "orbimod/core.hpp"
#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"
#include "orbimod/ranktwo.hpp"
#include "orbimod/reps.hpp"
#include "orbimod/spectral.hpp"

namespace orbimod {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct Ctx {
  std::size_t cases = 0;
  std::string failure;

  template <typename Describe>
  void require(bool condition, Describe&& describe) {
    if (!condition && failure.empty()) failure = describe();
  }
  bool failed() const { return !failure.empty(); }
};

std::string describe(const OrbifoldSurface& m) {
  std::ostringstream out;
  out << "g=" << m.genus() << " alphas=(";
  for (std::size_t i = 0; i < m.num_points(); ++i) out << (i ? "," : "") << m.order(i);
  out << ")";
  return out.str();
}

std::string describe(const LineVBundle& line) {
  std::ostringstream out;
  out << describe(line.surface()) << " b=" << line.b() << " y=(";
  for (std::size_t i = 0; i < line.y().size(); ++i) out << (i ? "," : "") << line.y(i);
  out << ")";
  return out.str();
}

std::string describe(const RankTwoVBundle& e) {
  std::ostringstream out;
  out << describe(e.surface()) << " pairs=";
  for (const auto& p : e.pairs()) out << "(" << p.x << "," << p.x_prime << ")";
  out << " l=" << e.l();
  return out.str();
}

// --- random instances -------------------------------------------------------

std::vector<int> random_orders(Rng& rng, int n, int max_alpha) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (auto& v : a) {
    // Skew toward small orders so that reducible and edge cases appear.
    v = uniform(rng, 0, 2) == 0 ? 2 : uniform(rng, 2, max_alpha);
  }
  return a;
}

OrbifoldSurface random_hyperbolic_surface(Rng& rng, int max_genus, int max_points, int max_alpha) {
  while (true) {
    const int g = uniform(rng, 0, max_genus);
    const int n = uniform(rng, 1, max_points);
    OrbifoldSurface m(g, random_orders(rng, n, max_alpha));
    if (m.hyperbolic()) return m;
  }
}

LineVBundle random_line(Rng& rng, const OrbifoldSurface& m, int max_b = 20) {
  std::vector<int> y(m.num_points());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = uniform(rng, 0, m.order(i) - 1);
  return LineVBundle(m, uniform(rng, -max_b, max_b), std::move(y));
}

RankTwoVBundle random_bundle(Rng& rng, const OrbifoldSurface& m, int equal_pair_percent = 20,
                             int max_l = 8) {
  std::vector<IsotropyPair> pairs(m.num_points());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int alpha = m.order(i);
    if (uniform(rng, 1, 100) <= equal_pair_percent) {
      const int x = uniform(rng, 0, alpha - 1);
      pairs[i] = {x, x};
    } else {
      int x = uniform(rng, 0, alpha - 2);
      int xp = uniform(rng, x + 1, alpha - 1);
      pairs[i] = {x, xp};
    }
  }
  return RankTwoVBundle(m, std::move(pairs), uniform(rng, -max_l, max_l));
}

/// Irreducible bundle over a hyperbolic surface meeting the stratification
/// hypotheses (n - n0 >= 3 when g = 0).
RankTwoVBundle random_morse_bundle(Rng& rng, int max_genus, int max_points, int max_alpha,
                                   int min_points = 1) {
  while (true) {
    const int g = uniform(rng, 0, max_genus);
    const int n = uniform(rng, g == 0 ? std::max(3, min_points) : min_points, max_points);
    OrbifoldSurface m(g, random_orders(rng, n, max_alpha));
    if (!m.hyperbolic()) continue;
    auto e = random_bundle(rng, m, 15);
    if (g == 0 && e.num_distinct() < 3) continue;
    if (e.num_distinct() > 12) continue;
    if (reducible_exists(e)) continue;
    return e;
  }
}

SubBundleSpec random_spec(Rng& rng, const RankTwoVBundle& e) {
  std::vector<int> eps(e.num_points(), 0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (e.pair(i).x != e.pair(i).x_prime) eps[i] = uniform(rng, 0, 1) ? 1 : -1;
  }
  return {uniform(rng, -6, 6), IsotropyVector(std::move(eps))};
}

// --- independent oracles ----------------------------------------------------

/// All sign vectors in {+1,-1}^k by plain counting.
std::vector<std::vector<int>> all_signs(std::size_t k) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> s(k);
    for (std::size_t j = 0; j < k; ++j) s[j] = ((mask >> j) & 1U) ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

/// Sign vectors over the points with x != x', expanded to full length.
std::vector<std::vector<int>> full_signs(const RankTwoVBundle& e) {
  std::vector<std::size_t> free_points;
  for (std::size_t i = 0; i < e.num_points(); ++i) {
    if (e.pair(i).x != e.pair(i).x_prime) free_points.push_back(i);
  }
  std::vector<std::vector<int>> out;
  for (const auto& s : all_signs(free_points.size())) {
    std::vector<int> eps(e.num_points(), 0);
    for (std::size_t j = 0; j < free_points.size(); ++j) eps[free_points[j]] = s[j];
    out.push_back(std::move(eps));
  }
  return out;
}

Rational theta_of(const RankTwoVBundle& e, const std::vector<int>& eps) {
  Rational t(0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    t += Rational(eps[i] * (e.pair(i).x_prime - e.pair(i).x), e.surface().order(i));
  }
  return t;
}

struct OracleStratum {
  std::int64_t m;
  Rational value;
  std::int64_t index;
  std::int64_t r;
};

/// Strata by scanning a wide window of m against the double inequality directly.
std::vector<OracleStratum> oracle_strata(const RankTwoVBundle& e) {
  std::vector<OracleStratum> out;
  const std::int64_t g = e.genus();
  const Rational l(e.l());
  for (const auto& eps : full_signs(e)) {
    const Rational theta = theta_of(e, eps);
    const std::int64_t n_plus = std::count(eps.begin(), eps.end(), 1);
    const std::int64_t n_minus = std::count(eps.begin(), eps.end(), -1);
    for (std::int64_t m = -60; m <= 60; ++m) {
      const Rational middle = Rational(2 * m) + theta;
      if (!(l < middle && middle <= l + Rational(2 * g - 2 + n_minus) + theta)) continue;
      out.push_back({m, middle - l, 2 * (2 * m - e.l() + g - 1 + n_plus), e.l() - 2 * m + 2 * g - 2 + n_minus});
    }
  }
  return out;
}

/// Number of projective index-0 candidates, by brute force over {+-1}^k.
std::size_t oracle_count(const RankTwoVBundle& e, std::int64_t bound) {
  std::size_t count = 0;
  for (const auto& eps : full_signs(e)) {
    const std::int64_t n_plus = std::count(eps.begin(), eps.end(), 1);
    if ((n_plus + e.l()) % 2 == 0) continue;
    if (Rational(n_plus) - theta_of(e, eps) < Rational(bound)) ++count;
  }
  return count;
}

/// Is the line bundle the square of some line V-bundle? Brute force over half-isotropies.
bool is_square(const LineVBundle& d) {
  const auto& m = d.surface();
  std::vector<std::vector<int>> halves(m.num_points());
  for (std::size_t i = 0; i < halves.size(); ++i) {
    for (int z = 0; z < m.order(i); ++z) {
      if ((2 * z) % m.order(i) == d.y(i)) halves[i].push_back(z);
    }
    if (halves[i].empty()) return false;
  }
  std::vector<std::size_t> pos(halves.size(), 0);
  while (true) {
    std::int64_t carries = 0;
    for (std::size_t i = 0; i < halves.size(); ++i) carries += (2 * halves[i][pos[i]]) / m.order(i);
    if ((d.b() - carries) % 2 == 0) return true;
    std::size_t i = 0;
    while (i < pos.size() && ++pos[i] == halves[i].size()) pos[i++] = 0;
    if (i == pos.size()) return false;
  }
}

// --- suite plumbing ---------------------------------------------------------

using SuiteBody = std::function<void(Rng&, Ctx&)>;

SuiteResult run_suite(std::string id, std::string title, std::optional<double> limit, std::uint64_t seed,
                      const SuiteBody& body) {
  SuiteResult result;
  result.id = std::move(id);
  result.title = std::move(title);
  result.time_limit = limit;
  Rng rng(seed);
  Ctx ctx;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rng, ctx);
  } catch (const std::exception& ex) {
    if (ctx.failure.empty()) ctx.failure = std::string("unexpected exception: ") + ex.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.cases = ctx.cases;
  result.failure = ctx.failure;
  if (result.failure.empty() && limit && result.seconds > *limit) {
    std::ostringstream out;
    out << "time limit exceeded: " << result.seconds << " s > " << *limit << " s";
    result.failure = out.str();
  }
  result.passed = result.failure.empty();
  return result;
}

// --- acceptance suites ------------------------------------------------------

void riemann_roch_k2(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 200 && !ctx.failed(); ++trial) {
    const auto m = random_hyperbolic_surface(rng, 10, 8, 12);
    const auto k2 = power(canonical_bundle(m), 2);
    const std::int64_t expected = 3 * std::int64_t{m.genus()} - 3 + static_cast<std::int64_t>(m.num_points());
    ctx.require(chi_line(k2) == expected, [&] { return "chi(K^2) != 3g-3+n on " + describe(m); });
    const ForcedH0 h0 = h0_forced(k2);
    ctx.require(h0 == ForcedH0::known(expected), [&] { return "h0(K^2) not forced to 3g-3+n on " + describe(m); });
    ++ctx.cases;
  }
}

void serre_duality(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 1000 && !ctx.failed(); ++trial) {
    const auto m = OrbifoldSurface(uniform(rng, 0, 8), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto line = random_line(rng, m);
    ctx.require(chi_line(line) + chi_line(serre_partner(line)) == 0,
                [&] { return "chi(L) + chi(L* K) != 0 for " + describe(line); });
    ++ctx.cases;
  }
}

void stratum_identity(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 100 && !ctx.failed(); ++trial) {
    const auto e = random_morse_bundle(rng, 4, 8, 12);
    const std::int64_t half_dim =
        6 * std::int64_t{e.genus()} - 6 + 2 * static_cast<std::int64_t>(e.num_distinct());
    for (const auto& s : enumerate_strata(e)) {
      ctx.require(2 * s.r + s.index == half_dim, [&] { return "2r + index != 6g-6+2(n-n0) on " + describe(e); });
      ctx.require(s.index % 2 == 0 && s.index >= 0, [&] { return "odd or negative index on " + describe(e); });
      ctx.require(s.r >= 0, [&] { return "negative symmetric power on " + describe(e); });
      ctx.require(s.value_over_2pi > 0, [&] { return "non-positive critical value on " + describe(e); });
    }
    ++ctx.cases;
  }
}

void index_zero_uniqueness(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 100 && !ctx.failed(); ++trial) {
    const auto e = random_morse_bundle(rng, 0, 12, 12, 3);
    const auto strata = enumerate_strata(e);
    const auto index_zero = std::count_if(strata.begin(), strata.end(), [](const Stratum& s) { return s.index == 0; });
    // The stable-bundle moduli is non-empty iff the emptiness inequality has no solution.
    const bool stable_nonempty = oracle_count(e, 1 - e.genus()) == 0;
    ctx.require(index_zero + (stable_nonempty ? 1 : 0) == 1,
                [&] { return "index-0 critical manifolds != 1 on " + describe(e); });
    ctx.require(oracle_count(e, 1) <= 1, [&] { return "projective minimum count > 1 on " + describe(e); });
    ctx.require(count_projective_minima(e) == oracle_count(e, 1),
                [&] { return "count_projective_minima disagrees with brute force on " + describe(e); });
    ++ctx.cases;
  }
}

void point_case(Rng&, Ctx& ctx) {
  const OrbifoldSurface m(0, {2, 3, 7});
  for (std::int64_t l : {0, 1}) {
    const RankTwoVBundle e(m, {{0, 1}, {0, 1}, {0, 1}}, l);
    const auto strata = enumerate_strata(e);
    ctx.require(strata.size() == 1, [&] { return "expected a single stratum for " + describe(e); });
    ctx.require(oracle_strata(e).size() == 1, [&] { return "oracle disagrees for " + describe(e); });
    ctx.require(poincare_polynomial(e) == LaurentPoly({1}), [&] { return "P(t) != 1 for " + describe(e); });
    const auto topo = topology_report(e);
    ctx.require(topo.compact && topo.isolated_point && topo.real_dim == 0,
                [&] { return "expected a compact point for " + describe(e); });
    ctx.require(euler_characteristic_moduli(e) == std::optional<std::int64_t>(1),
                [&] { return "chi != 1 for " + describe(e); });
    ++ctx.cases;
  }
}

void genus_zero_assembly(Rng&, Ctx& ctx) {
  const RankTwoVBundle e(OrbifoldSurface(0, {5, 5, 5, 5}), {{0, 1}, {0, 1}, {0, 1}, {0, 1}}, 1);
  const auto p = poincare_polynomial(e);
  ctx.require(p == LaurentPoly({1, 0, 5}), [&] { return "P(t) = " + p.to_string() + ", expected 1 + 5t^2"; });
  ctx.require(euler_characteristic_moduli(e) == std::optional<std::int64_t>(6), [] { return std::string("chi != 6"); });

  // Oracle: scan the inequality directly and assemble sum t^index (1 + t^2 + ... + t^2r).
  std::vector<std::int64_t> coeffs;
  std::int64_t chi = 0;
  for (const auto& s : oracle_strata(e)) {
    for (std::int64_t j = 0; j <= s.r; ++j) {
      const auto power = static_cast<std::size_t>(s.index + 2 * j);
      if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
      ++coeffs[power];
    }
    chi += s.r + 1;
  }
  ctx.require(LaurentPoly(coeffs) == p, [] { return std::string("oracle assembly disagrees"); });
  ctx.require(chi == 6, [] { return std::string("oracle Euler characteristic != 6"); });
  ctx.require(oracle_strata(e).size() == 5, [] { return std::string("oracle stratum count != 5"); });
  ctx.cases = 1;
}

void hyperelliptic_dimension(Rng&, Ctx& ctx) {
  const RankTwoVBundle e(OrbifoldSurface(0, std::vector<int>(6, 2)), std::vector<IsotropyPair>(6, {0, 1}), 0);
  // Double cover of the sphere branched at 6 points: 2 g_hat - 2 = 2(-2) + 6.
  const std::int64_t g_hat = (2 * (-2) + 6 + 2) / 2;
  ctx.require(g_hat == 2, [] { return std::string("Riemann-Hurwitz genus != 2"); });
  ctx.require(moduli_dimension(e) == 6, [] { return std::string("moduli_dimension != 6"); });
  ctx.require(moduli_dimension(e) == 6 * (g_hat - 1), [] { return std::string("dimension != 6(g_hat - 1)"); });
  ctx.cases = 1;
}

void reducibility_double_check(Rng& rng, Ctx& ctx) {
  std::size_t reducible = 0;
  for (int trial = 0; trial < 500 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 3), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto e = random_bundle(rng, m, 25);
    const auto bundle_side = reducible_exists(e);
    const auto [lambda, rd] = rotation_numbers_of(e);
    const auto rep_side = rep_reducible(lambda, rd);
    ctx.require(bundle_side.has_value() == rep_side.has_value(),
                [&] { return "reducibility criteria disagree on " + describe(e); });
    if (bundle_side) ++reducible;
    ++ctx.cases;
  }
  ctx.require(reducible > 0 && reducible < ctx.cases,
              [] { return std::string("degenerate sample: all or none reducible"); });
}

void spectral_consistency(Rng& rng, Ctx& ctx) {
  while (ctx.cases < 200 && !ctx.failed()) {
    const OrbifoldSurface m(uniform(rng, 0, 6), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto e = random_bundle(rng, m);
    const std::int64_t g = e.genus();
    const auto k = static_cast<std::int64_t>(e.num_distinct());
    if (3 * g - 3 + k <= 0 || (g == 1 && k == 1)) continue;
    const auto data = spectral_data(e);
    ctx.require(data.fibre == FibreKind::Prym && data.spectral_genus && data.branch_points,
                [&] { return "expected a Prym fibre for " + describe(e); });
    if (ctx.failed()) break;
    ctx.require(*data.spectral_genus == 4 * g - 3 + k, [&] { return "spectral genus formula on " + describe(e); });
    // Riemann-Hurwitz for the double cover: 2 g_hat - 2 = 2(2g - 2) + branch points.
    const std::int64_t rh = 2 * (2 * g - 2) + *data.branch_points;
    ctx.require(rh % 2 == 0 && rh / 2 + 1 == *data.spectral_genus,
                [&] { return "Riemann-Hurwitz disagrees on " + describe(e); });
    ctx.require(data.fibre_dim == *data.spectral_genus - g && data.fibre_dim == hitchin_base_dim(e),
                [&] { return "Prym dimension != base dimension on " + describe(e); });
    ++ctx.cases;
  }
}

void milnor_wood_saturation(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 200 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 2, 8), random_orders(rng, uniform(rng, 1, 8), 12));
    const std::int64_t g = m.genus();
    std::vector<int> y(m.num_points());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = m.order(i) - 1;
    const LineVBundle teich(m, 2 * g - 2, y);
    const Rational e = teich.c1();
    const Rational bound = -m.euler_characteristic();
    ctx.require(e == bound, [&] { return "Euler class != -chi on " + describe(m); });
    ctx.require(milnor_wood(m, e), [&] { return "milnor_wood rejects the saturating class on " + describe(m); });
    ctx.require(!milnor_wood(m, bound + 1), [&] { return "milnor_wood accepts -chi + 1 on " + describe(m); });
    const auto component = psl2r_component(m, 2 * g - 2, y);
    ctx.require(component.base_sym_power == 0 && component.complex_dim == teichmuller_dimension(m),
                [&] { return "maximal component is not Teichmuller-dimensional on " + describe(m); });
    ++ctx.cases;
  }
}

void real_component_dimensions(Rng& rng, Ctx& ctx) {
  while (ctx.cases < 100 && !ctx.failed()) {
    const OrbifoldSurface m(uniform(rng, 0, 4), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto e = random_bundle(rng, m, 15);
    if (reducible_exists(e)) continue;
    const std::int64_t expected = 3 * std::int64_t{e.genus()} - 3 + static_cast<std::int64_t>(e.num_distinct());
    for (const auto& c : real_fixed_components(e)) {
      if (c.kind == RealComponent::Kind::VectorBundleOverCover) {
        ctx.require(c.rank + c.base_sym_power == expected, [&] { return "rank + r != 3g-3+n-n0 on " + describe(e); });
      }
      ctx.require(c.complex_dim == expected, [&] { return "complex_dim != 3g-3+n-n0 on " + describe(e); });
    }
    ++ctx.cases;
  }
}

void roots_count(Rng& rng, Ctx& ctx) {
  for (int n2 = 0; n2 <= 10 && !ctx.failed(); ++n2) {
    for (int rep = 0; rep < 3 && !ctx.failed(); ++rep) {
      std::vector<int> orders;
      for (int i = 0; i < n2; ++i) orders.push_back(2 * uniform(rng, 1, 6));
      for (int i = uniform(rng, n2 == 0 ? 1 : 0, 3); i > 0; --i) orders.push_back(2 * uniform(rng, 1, 5) + 1);
      std::shuffle(orders.begin(), orders.end(), rng);
      const OrbifoldSurface m(uniform(rng, 0, 3), orders);

      // Brute force: delta in {0,1}^{n2}; y = delta alpha / 2 needs b = -|delta| / 2 integral.
      std::vector<std::size_t> even;
      for (std::size_t i = 0; i < m.num_points(); ++i) {
        if (m.order(i) % 2 == 0) even.push_back(i);
      }
      std::set<std::pair<std::int64_t, std::vector<int>>> oracle;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << even.size()); ++mask) {
        const int weight = std::popcount(mask);
        if (weight % 2 != 0) continue;
        std::vector<int> y(m.num_points(), 0);
        for (std::size_t j = 0; j < even.size(); ++j) {
          if ((mask >> j) & 1U) y[even[j]] = m.order(even[j]) / 2;
        }
        oracle.insert({-weight / 2, y});
      }
      const auto roots = topological_roots(m);
      std::set<std::pair<std::int64_t, std::vector<int>>> got;
      for (const auto& root : roots) {
        got.insert({root.b(), root.y()});
        ctx.require(tensor(root, root).is_trivial() && root.c1() == Rational(0),
                    [&] { return "root does not square to the trivial class on " + describe(m); });
      }
      const std::size_t expected = std::size_t{1} << std::max(n2 - 1, 0);
      ctx.require(roots.size() == expected && oracle.size() == expected && got == oracle,
                  [&] { return "root count != 2^(n2-1) on " + describe(m); });
      ctx.require(roots.front().is_trivial(), [&] { return "trivial root not listed first on " + describe(m); });
      ++ctx.cases;
    }
  }
}

struct AcceptanceEntry {
  const char* title;
  std::optional<double> limit;
  void (*body)(Rng&, Ctx&);
};

const std::vector<AcceptanceEntry>& acceptance_table() {
  static const std::vector<AcceptanceEntry> table = {
      {"Riemann-Roch: chi(K^2) = 3g-3+n on 200 hyperbolic surfaces", 1.0, riemann_roch_k2},
      {"Serre duality: chi(L) + chi(L* K) = 0 on 1000 line V-bundles", 1.0, serre_duality},
      {"Stratum identity 2r + index = 6g-6+2(n-n0) on 100 bundles", 5.0, stratum_identity},
      {"Unique index-0 critical manifold on 100 genus-0 bundles", 10.0, index_zero_uniqueness},
      {"Point case (2,3,7): single stratum, P(t) = 1, compact", std::nullopt, point_case},
      {"Genus-0 assembly (5,5,5,5): P(t) = 1 + 5t^2, chi = 6", std::nullopt, genus_zero_assembly},
      {"Hyperelliptic dimension equality 6 = 6(g_hat - 1)", std::nullopt, hyperelliptic_dimension},
      {"Reducibility: bundle and representation criteria agree on 500 instances", 10.0,
       reducibility_double_check},
      {"Spectral genus, Riemann-Hurwitz and Prym dimension on 200 instances", std::nullopt,
       spectral_consistency},
      {"Milnor-Wood saturation by the maximal component", std::nullopt, milnor_wood_saturation},
      {"Real components: rank + r = 3g-3+n-n0 on 100 bundles", std::nullopt, real_component_dimensions},
      {"Topological roots: 2^(n2-1) against delta-vector enumeration", std::nullopt, roots_count},
  };
  return table;
}

// --- invariant suites ---------------------------------------------------------

void core_group_laws(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 6), random_orders(rng, uniform(rng, 1, 6), 12));
    const auto a = random_line(rng, m), b = random_line(rng, m), c = random_line(rng, m);
    ctx.require(tensor(a, b) == tensor(b, a), [&] { return "tensor not commutative on " + describe(m); });
    ctx.require(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)),
                [&] { return "tensor not associative on " + describe(m); });
    ctx.require(tensor(a, dual(a)).is_trivial(), [&] { return "dual is not an inverse for " + describe(a); });
    ctx.require(power(a, 2) == tensor(a, a) && power(a, -1) == dual(a),
                [&] { return "power disagrees with tensor for " + describe(a); });
    ctx.require(tensor(a, b).c1() == a.c1() + b.c1(), [&] { return "c1 not additive on " + describe(m); });
    ctx.require(canonical_bundle(m).c1() == -m.euler_characteristic(),
                [&] { return "deg K != -chi on " + describe(m); });

    Divisor d1(m), d2(m);
    for (std::size_t i = 0; i < m.num_points(); ++i) {
      d1.add_marked(i, uniform(rng, -15, 15));
      d2.add_marked(i, uniform(rng, -15, 15));
    }
    d1.add_ordinary("p", uniform(rng, -4, 4));
    d2.add_ordinary("q", uniform(rng, -4, 4));
    ctx.require(divisor_to_bundle(d1 + d2) == tensor(divisor_to_bundle(d1), divisor_to_bundle(d2)),
                [&] { return "divisor map not additive on " + describe(m); });
    ctx.require(divisor_to_bundle(d1).c1() == d1.degree(), [&] { return "deg D != c1 on " + describe(m); });
    ++ctx.cases;
  }
}

void chi_twist_paths(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 5), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto e = random_bundle(rng, m);
    const auto spec = random_spec(rng, e);
    const auto [lower, raise] = chi_twists(e, spec);
    ctx.require(lower + raise == 2 * e.genus() - 2 + static_cast<std::int64_t>(e.num_distinct()),
                [&] { return "twist Euler characteristics do not sum to 2g-2+n-n0 on " + describe(e); });
    ctx.require(lower == chi_line(twist_lowering(e, spec)) && raise == chi_line(twist_raising(e, spec)),
                [&] { return "closed-form twist chi disagrees with Riemann-Roch on " + describe(e); });
    ++ctx.cases;
  }
}

void reducibility_formulations(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 3), random_orders(rng, uniform(rng, 1, 12), 12));
    const auto e = random_bundle(rng, m, 25);
    const auto witness = reducible_exists(e);
    const auto parity = reduction_by_parity(e);
    ctx.require(witness.has_value() == parity.has_value(),
                [&] { return "degree and parity formulations disagree on " + describe(e); });
    if (witness) {
      ctx.require(Rational(2) * sub_bundle(e, *witness).c1() == e.det_degree(),
                  [&] { return "reducibility witness fails 2 c1(L) = c1(Lambda) on " + describe(e); });
    }
    if (!witness && (e.genus() > 0 || e.num_distinct() >= 3)) {
      const auto v = stable_pair_exists(e, {StabilityKind::Stable, std::nullopt, std::nullopt});
      ctx.require(v.kind == Verdict::Kind::Yes, [&] { return "stable class rejected for " + describe(e); });
    }
    ++ctx.cases;
  }
}

void squarefree_classes(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 4), random_orders(rng, uniform(rng, 1, 6), 12));
    const auto det = random_line(rng, m);
    const auto normal = squarefree_normalize(det);
    ctx.require(squarefree_normalize(normal) == normal, [&] { return "normalization not idempotent on " + describe(det); });
    ctx.require(is_square(tensor(det, dual(normal))),
                [&] { return "normalization changed the class modulo squares on " + describe(det); });
    const auto twisted = tensor(det, power(random_line(rng, m), 2));
    ctx.require(squarefree_normalize(twisted) == normal,
                [&] { return "normal form not constant on a square class of " + describe(det); });
    ++ctx.cases;
  }
}

void reduction_invariants(Rng& rng, Ctx& ctx) {
  while (ctx.cases < 200 && !ctx.failed()) {
    const OrbifoldSurface m(uniform(rng, 0, 4), random_orders(rng, uniform(rng, 2, 8), 12));
    const auto e = random_bundle(rng, m, 40);
    if (e.n0() == 0 || e.num_distinct() == 0) continue;
    const auto red = reduce_to_n0_zero(e);
    ctx.require(red.bundle.n0() == 0 && red.bundle.num_points() == e.num_distinct(),
                [&] { return "reduction left points with x = x' on " + describe(e); });
    ctx.require(moduli_dimension(red.bundle) == moduli_dimension(e),
                [&] { return "reduction changed the moduli dimension on " + describe(e); });
    ctx.require(red.bundle.l() == e.l(), [&] { return "reduction changed l on " + describe(e); });
    std::vector<std::int64_t> raw(red.twist_exponents.begin(), red.twist_exponents.end());
    const auto twisted = twist(e, LineVBundle::normalized(m, 0, raw));
    ctx.require(squarefree_normalize(twisted.determinant()) == squarefree_normalize(e.determinant()),
                [&] { return "reduction changed the square-free determinant class on " + describe(e); });
    ++ctx.cases;
  }
}

void morse_consistency(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 60 && !ctx.failed(); ++trial) {
    const auto e = random_morse_bundle(rng, 3, 7, 10);
    const auto strata = enumerate_strata(e);
    // Independent scan of the inequality.
    auto oracle = oracle_strata(e);
    std::vector<std::tuple<Rational, std::int64_t, std::int64_t, std::int64_t>> a, b;
    for (const auto& s : strata) a.emplace_back(s.value_over_2pi, s.index, s.r, s.spec.m);
    for (const auto& s : oracle) b.emplace_back(s.value, s.index, s.r, s.m);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ctx.require(a == b, [&] { return "enumeration disagrees with the direct scan on " + describe(e); });

    const auto minimum = minimum_stratum(e);
    if (e.genus() == 0 && minimum.kind == MinStratum::Kind::ProjectiveStratum) {
      ctx.require(poincare_polynomial(e).at_one() == euler_characteristic_moduli(e),
                  [&] { return "total Betti number != chi on " + describe(e); });
    }

    // Relabel the marked points together with their isotropy.
    std::vector<std::size_t> perm(e.num_points());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> orders;
    std::vector<IsotropyPair> pairs;
    for (auto i : perm) {
      orders.push_back(e.surface().order(i));
      pairs.push_back(e.pair(i));
    }
    const RankTwoVBundle relabeled(OrbifoldSurface(e.genus(), orders), pairs, e.l());
    std::vector<std::tuple<Rational, std::int64_t, std::int64_t, std::int64_t>> c;
    for (const auto& s : enumerate_strata(relabeled)) c.emplace_back(s.value_over_2pi, s.index, s.r, s.spec.m);
    std::sort(c.begin(), c.end());
    ctx.require(a == c, [&] { return "strata changed under relabeling on " + describe(e); });
    ++ctx.cases;
  }
}

void symmetric_power_series(Rng&, Ctx& ctx) {
  for (int g = 0; g <= 6 && !ctx.failed(); ++g) {
    // Power series of (1 - t)^(-(2 - 2g)) built by repeated multiplication.
    const int terms = 12;
    std::vector<std::int64_t> series(terms, 0);
    series[0] = 1;
    const int c = 2 - 2 * g;
    for (int step = 0; step < std::abs(c); ++step) {
      std::vector<std::int64_t> next(terms, 0);
      for (int i = 0; i < terms; ++i) {
        if (c > 0) {
          for (int j = 0; j <= i; ++j) next[i] += series[j];  // times 1/(1 - t)
        } else {
          next[i] = series[i] - (i > 0 ? series[i - 1] : 0);  // times (1 - t)
        }
      }
      series = next;
    }
    for (int r = 0; r < terms; ++r) {
      ctx.require(symmetric_power_euler_characteristic(g, r) == series[r],
                  [&] { return "chi(S^r) wrong at g=" + std::to_string(g) + " r=" + std::to_string(r); });
    }
    ++ctx.cases;
  }
}

void spectral_invariants(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 6), random_orders(rng, uniform(rng, 1, 8), 12));
    const auto e = random_bundle(rng, m);
    ctx.require(2 * hitchin_base_dim(e) == moduli_dimension(e),
                [&] { return "base dimension != half the moduli dimension on " + describe(e); });
    ++ctx.cases;
  }
  for (int trial = 0; trial < 100 && !ctx.failed(); ++trial) {
    // g = n - n0 = 1 with a random number of extra x = x' points.
    const int extra = uniform(rng, 0, 3);
    const auto orders = random_orders(rng, extra + 1, 12);
    std::vector<IsotropyPair> pairs;
    const int x = uniform(rng, 0, orders[0] - 2);
    pairs.push_back({x, uniform(rng, x + 1, orders[0] - 1)});
    for (int i = 1; i <= extra; ++i) {
      const int z = uniform(rng, 0, orders[static_cast<std::size_t>(i)] - 1);
      pairs.push_back({z, z});
    }
    const RankTwoVBundle e(OrbifoldSurface(1, orders), pairs, uniform(rng, -6, 6));
    const auto reduced = e.n0() > 0 ? reduce_to_n0_zero(e).bundle : e;
    const auto deg = special_case_subbundle_degrees(e);
    const Rational diff = Rational(2) * deg.c1 - reduced.det_degree();
    const Rational gap = reduced.gap(0);
    ctx.require(diff == -gap || diff == gap - 1, [&] { return "2 c1(L) - c1(Lambda) has the wrong pattern on " + describe(e); });
    ctx.require(diff > -1 && diff < 1, [&] { return "2 c1(L) - c1(Lambda) outside (-1, 1) on " + describe(e); });
    const auto data = spectral_data(e);
    ctx.require(data.fibre == FibreKind::Jacobian && data.fibre_dim == 1 && !data.spectral_genus,
                [&] { return "special case not reported as a Jacobian on " + describe(e); });
    ++ctx.cases;
  }
}

void reps_invariants(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 300 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 5), random_orders(rng, uniform(rng, 1, 7), 10));
    const auto e = random_bundle(rng, m);
    const auto [lambda, rd] = rotation_numbers_of(e);
    ctx.require(rd.compatible_with(lambda) && rd.n0() == e.n0(),
                [&] { return "rotation numbers lose parity or n0 on " + describe(e); });
    ctx.require(rep_variety_dimension(lambda, rd) == moduli_dimension(e),
                [&] { return "representation and moduli dimensions differ on " + describe(e); });

    for (const auto& twisted : sign_twist_orbit(lambda, rd)) {
      ctx.require(twisted.compatible_with(lambda) && twisted.n0() == rd.n0(),
                  [&] { return "sign twist broke parity or n0 on " + describe(e); });
    }

    // Send h to the central element -1 and q_i to rotation by pi r_i / alpha_i:
    // the relator q_i^alpha_i h^y_i is trivial iff its phase is in 2 pi Z.
    const auto pres = circle_group_presentation(lambda, true);
    ctx.require(pres.well_formed(), [&] { return "ill-formed circle presentation on " + describe(e); });
    for (std::size_t i = 0; i < m.num_points(); ++i) {
      for (int shift : {0, 1}) {
        const int r = rd[i] + shift <= m.order(i) ? rd[i] + shift : rd[i] - shift;
        Rational phase(0);
        for (const auto& letter : pres.relations[i]) {
          if (letter.generator == "h") phase += letter.exponent;
          if (letter.generator == "q" + std::to_string(i + 1)) phase += Rational(letter.exponent * r, m.order(i));
        }
        const bool trivial = is_integer(phase) && phase.numerator() % 2 == 0;
        ctx.require(trivial == ((r - lambda.y(i)) % 2 == 0),
                    [&] { return "relator parity test failed on " + describe(lambda); });
      }
    }
    const auto fuchsian = fuchsian_presentation(m);
    ctx.require(fuchsian.well_formed() && fuchsian.generators.size() == 2 * m.genus() + m.num_points() &&
                    fuchsian.relations.size() == m.num_points() + 1,
                [&] { return "Fuchsian presentation has the wrong shape on " + describe(m); });
    ++ctx.cases;
  }
}

void psl2r_and_metrics(Rng& rng, Ctx& ctx) {
  for (int trial = 0; trial < 200 && !ctx.failed(); ++trial) {
    const OrbifoldSurface m(uniform(rng, 0, 6), random_orders(rng, uniform(rng, 1, 7), 12));
    const auto report = conical_metric_report(m);
    ctx.require(report.exists_unique == (m.euler_characteristic() < 0),
                [&] { return "conical metric existence wrong on " + describe(m); });
    if (m.hyperbolic()) {
      ctx.require(milnor_wood(m, 0), [&] { return "zero Euler class rejected on " + describe(m); });
      ctx.require(teichmuller_dimension(m) == 3 * m.genus() - 3 + static_cast<std::int64_t>(m.num_points()),
                  [&] { return "Teichmuller dimension wrong on " + describe(m); });
    }
    const std::int64_t g = m.genus();
    std::vector<int> y(m.num_points());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = uniform(rng, 0, m.order(i) - 1);
    const auto n0 = static_cast<std::int64_t>(std::count(y.begin(), y.end(), 0));
    const std::int64_t k = static_cast<std::int64_t>(y.size()) - n0;
    for (std::int64_t b = -static_cast<std::int64_t>(y.size()) - 1; b <= 2 * g - 2; ++b) {
      if (LineVBundle(m, b, y).c1() <= 0) continue;
      const auto c = psl2r_component(m, b, y);
      ctx.require(c.rank + c.base_sym_power == 3 * g - 3 + k && c.complex_dim == 3 * g - 3 + k,
                  [&] { return "PSL2(R) component dimension depends on b on " + describe(m); });
    }
    ++ctx.cases;
  }
}

}  // namespace

SuiteResult acceptance_suite(int number, std::uint64_t seed) {
  const auto& table = acceptance_table();
  if (number < 1 || number > static_cast<int>(table.size())) {
    throw DomainError("acceptance suites are numbered 1 to " + std::to_string(table.size()));
  }
  const auto& entry = table[static_cast<std::size_t>(number - 1)];
  return run_suite(std::to_string(number), entry.title, entry.limit, seed + static_cast<std::uint64_t>(number),
                   entry.body);
}

std::vector<SuiteResult> acceptance_suites(std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (int i = 1; i <= static_cast<int>(acceptance_table().size()); ++i) out.push_back(acceptance_suite(i, seed));
  return out;
}

std::vector<SuiteResult> invariant_suites(std::uint64_t seed) {
  struct Entry {
    const char* id;
    const char* title;
    void (*body)(Rng&, Ctx&);
  };
  static const Entry entries[] = {
      {"core.group_laws", "Line V-bundle group laws, canonical degree, divisor additivity", core_group_laws},
      {"ranktwo.chi_twists", "Twist Euler characteristics: closed form vs Riemann-Roch", chi_twist_paths},
      {"ranktwo.reducibility", "Degree and parity reducibility tests agree; stable class accepted",
       reducibility_formulations},
      {"ranktwo.squarefree", "Square-free determinant normal form", squarefree_classes},
      {"ranktwo.reduction", "n0 = 0 reduction preserves dimension and determinant class", reduction_invariants},
      {"morse.consistency", "Strata vs direct scan, Betti sum vs chi, relabeling symmetry", morse_consistency},
      {"morse.symmetric_powers", "chi(S^r) against the power series of (1 - t)^(2g - 2)", symmetric_power_series},
      {"spectral.invariants", "Base dimension, special-case sub-bundle degrees", spectral_invariants},
      {"reps.rotation_numbers", "Rotation numbers: dimensions, sign twists, relator parity", reps_invariants},
      {"reps.psl2r", "PSL2(R) components, conical metrics, Teichmuller dimension", psl2r_and_metrics},
  };
  std::vector<SuiteResult> out;
  std::uint64_t offset = 100;
  for (const auto& entry : entries) out.push_back(run_suite(entry.id, entry.title, std::nullopt, seed + offset++, entry.body));
  return out;
}

}  // namespace orbimod
