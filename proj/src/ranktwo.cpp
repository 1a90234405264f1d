#include "orbimod/ranktwo.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbimod/errors.hpp"

namespace orbimod {

namespace {

LineVBundle determinant_of(const OrbifoldSurface& surface, const std::vector<IsotropyPair>& pairs,
                           std::int64_t l) {
  std::vector<std::int64_t> raw(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) raw[i] = pairs[i].x + pairs[i].x_prime;
  return LineVBundle::normalized(surface, l, raw);
}

void require_compatible(const RankTwoVBundle& bundle, const IsotropyVector& eps) {
  if (!eps.compatible_with(bundle)) {
    throw DomainError("isotropy vector must be 0 exactly where x = x' and +-1 elsewhere");
  }
}

int sign_rank(int e) { return e == 1 ? 0 : (e == 0 ? 1 : 2); }

bool is_even_integer(const Rational& q) { return is_integer(q) && q.numerator() % 2 == 0; }

std::int64_t mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

}  // namespace

// ---------------------------------------------------------------------------

RankTwoVBundle::RankTwoVBundle(OrbifoldSurface surface, std::vector<IsotropyPair> pairs,
                               std::int64_t l)
    : surface_(std::move(surface)),
      pairs_(std::move(pairs)),
      l_(l),
      det_(LineVBundle::trivial(surface_)) {
  if (pairs_.size() != surface_.num_points()) {
    throw DomainError("need one isotropy pair per marked point");
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& [x, xp] = pairs_[i];
    const int alpha = surface_.order(i);
    if (x < 0 || xp < 0 || x >= alpha || xp >= alpha) {
      throw DomainError("isotropy out of range [0, alpha) at point " + std::to_string(i));
    }
    if (x > xp) throw DomainError("isotropy pair must satisfy x <= x' at point " + std::to_string(i));
    if (x == xp) ++n0_;
  }
  det_ = determinant_of(surface_, pairs_, l_);
}

Rational RankTwoVBundle::gap(std::size_t i) const {
  return Rational(pairs_.at(i).x_prime - pairs_[i].x, surface_.order(i));
}

RankTwoVBundle make_bundle(const OrbifoldSurface& surface, std::vector<IsotropyPair> pairs,
                           std::int64_t l) {
  return RankTwoVBundle(surface, std::move(pairs), l);
}

// ---------------------------------------------------------------------------

IsotropyVector::IsotropyVector(std::vector<int> eps) : eps_(std::move(eps)) {
  for (int e : eps_) {
    if (e < -1 || e > 1) throw DomainError("isotropy vector entries must be -1, 0 or +1");
  }
}

std::size_t IsotropyVector::n_plus() const {
  return static_cast<std::size_t>(std::count(eps_.begin(), eps_.end(), 1));
}

std::size_t IsotropyVector::n_minus() const {
  return static_cast<std::size_t>(std::count(eps_.begin(), eps_.end(), -1));
}

bool IsotropyVector::compatible_with(const RankTwoVBundle& bundle) const {
  if (eps_.size() != bundle.num_points()) return false;
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    const bool equal = bundle.pair(i).x == bundle.pair(i).x_prime;
    if (equal != (eps_[i] == 0)) return false;
  }
  return true;
}

bool eps_before(const IsotropyVector& a, const IsotropyVector& b) {
  return std::lexicographical_compare(
      a.values().begin(), a.values().end(), b.values().begin(), b.values().end(),
      [](int u, int v) { return sign_rank(u) < sign_rank(v); });
}

bool witness_before(const SubBundleSpec& a, const SubBundleSpec& b) {
  if (a.m != b.m) return a.m > b.m;
  return eps_before(a.eps, b.eps);
}

std::vector<IsotropyVector> isotropy_vectors(const RankTwoVBundle& bundle) {
  std::vector<std::size_t> free_points;
  for (std::size_t i = 0; i < bundle.num_points(); ++i) {
    if (bundle.pair(i).x != bundle.pair(i).x_prime) free_points.push_back(i);
  }
  const std::size_t k = free_points.size();
  if (k > kMaxEnumeratedPoints) {
    throw DomainError("n - n0 exceeds the enumeration cap of " +
                      std::to_string(kMaxEnumeratedPoints));
  }
  std::vector<IsotropyVector> out;
  out.reserve(std::size_t{1} << k);
  // Counting upward with the first free point as the most significant bit and
  // bit 0 meaning +1 yields eps_before order.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> eps(bundle.num_points(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      const bool minus = (mask >> (k - 1 - j)) & 1U;
      eps[free_points[j]] = minus ? -1 : 1;
    }
    out.emplace_back(std::move(eps));
  }
  return out;
}

Rational epsilon_weight(const RankTwoVBundle& bundle, const IsotropyVector& eps) {
  Rational sum(0);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] != 0) sum += eps[i] * bundle.gap(i);
  }
  return sum;
}

// ---------------------------------------------------------------------------

LineVBundle sub_bundle(const RankTwoVBundle& bundle, const SubBundleSpec& spec) {
  require_compatible(bundle, spec.eps);
  std::vector<int> y(bundle.num_points());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = spec.eps[i] == 1 ? bundle.pair(i).x_prime : bundle.pair(i).x;
  }
  // c1(L) = m + sum (eps (x' - x) + x' + x) / 2 alpha = m + sum y / alpha.
  return LineVBundle(bundle.surface(), spec.m, std::move(y));
}

std::pair<std::int64_t, std::int64_t> chi_twists(const RankTwoVBundle& bundle,
                                                 const SubBundleSpec& spec) {
  require_compatible(bundle, spec.eps);
  const std::int64_t g = bundle.genus();
  const auto n_plus = static_cast<std::int64_t>(spec.eps.n_plus());
  const auto n_minus = static_cast<std::int64_t>(spec.eps.n_minus());
  return {bundle.l() - 2 * spec.m + g - 1 + n_minus, 2 * spec.m - bundle.l() + g - 1 + n_plus};
}

LineVBundle twist_lowering(const RankTwoVBundle& bundle, const SubBundleSpec& spec) {
  const LineVBundle line = sub_bundle(bundle, spec);
  return tensor(tensor(canonical_bundle(bundle.surface()), power(line, -2)),
                bundle.determinant());
}

LineVBundle twist_raising(const RankTwoVBundle& bundle, const SubBundleSpec& spec) {
  const LineVBundle line = sub_bundle(bundle, spec);
  return tensor(tensor(canonical_bundle(bundle.surface()), power(line, 2)),
                dual(bundle.determinant()));
}

// ---------------------------------------------------------------------------

bool bounds_attainable_surface(const OrbifoldSurface& surface, std::size_t k) {
  if (k < 1 || k > surface.num_points()) throw DomainError("k must lie in [1, n]");
  // The minimal sum of k reciprocals uses the k largest orders.
  std::vector<int> orders = surface.cone_orders();
  std::sort(orders.begin(), orders.end(), std::greater<>());
  Rational sum(0);
  for (std::size_t j = 0; j < k; ++j) sum += Rational(1, orders[j]);
  return sum <= 1;
}

bool bounds_attainable_bundle(const RankTwoVBundle& bundle) {
  if (bundle.num_distinct() == 0) return false;
  std::optional<Rational> best;
  for (const auto& eps : isotropy_vectors(bundle)) {
    const auto n_plus = static_cast<std::int64_t>(eps.n_plus());
    if (mod2(n_plus + bundle.l()) != 1) continue;
    const Rational value = Rational(n_plus) - epsilon_weight(bundle, eps);
    if (!best || value < *best) best = value;
  }
  return best && *best <= 1;
}

SemistableH0 semistable_h0(const RankTwoVBundle& bundle, const SubBundleSpec& spec) {
  require_compatible(bundle, spec.eps);
  const Rational theta = epsilon_weight(bundle, spec.eps);
  if (Rational(2 * spec.m) + theta != Rational(bundle.l())) {
    throw DomainError("sub-bundle is not on the semistable wall 2 c1(L) = c1(Lambda)");
  }
  // On the wall theta = l - 2m is an integer.
  const std::int64_t t = theta.numerator();
  const std::int64_t g = bundle.genus();
  const auto k = static_cast<std::int64_t>(bundle.num_distinct());
  const auto n_plus = static_cast<std::int64_t>(spec.eps.n_plus());
  const auto n_minus = static_cast<std::int64_t>(spec.eps.n_minus());
  SemistableH0 out;
  out.end0_nontrivial_ext = 3 * g - 3 + k;
  out.end0_trivial_ext = 3 * g - 2 + k;
  out.ekl = 2 * g - 1 - t + n_plus;
  out.klm2 = g - 1 + t + n_minus;
  out.kl2 = g - 1 - t + n_plus;
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::Stable: return "stable";
    case StabilityKind::SemistableIndecomposable: return "semistable_indecomposable";
    case StabilityKind::SemistableDecomposable: return "semistable_decomposable";
    case StabilityKind::NonSemistableIndecomposable: return "non_semistable_indecomposable";
    case StabilityKind::NonSemistableDecomposable: return "non_semistable_decomposable";
  }
  return "stable";
}

StabilityKind parse_stability_kind(const std::string& text) {
  for (auto kind : {StabilityKind::Stable, StabilityKind::SemistableIndecomposable,
                    StabilityKind::SemistableDecomposable,
                    StabilityKind::NonSemistableIndecomposable,
                    StabilityKind::NonSemistableDecomposable}) {
    if (to_string(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown stability class '" + text + "'");
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::Yes: return "yes";
    case Verdict::Kind::No: return "no";
    case Verdict::Kind::Conditional: return "conditional";
  }
  return "no";
}

namespace {

Verdict no(std::string condition) {
  Verdict v;
  v.kind = Verdict::Kind::No;
  v.conditions.push_back(std::move(condition));
  return v;
}

Verdict yes() {
  Verdict v;
  v.kind = Verdict::Kind::Yes;
  return v;
}

Verdict conditional(std::vector<std::string> needs) {
  Verdict v;
  v.kind = Verdict::Kind::Conditional;
  v.conditions = std::move(needs);
  return v;
}

const char* kLowering = "h0(K L_E^-2 Lambda)";
const char* kRaising = "h0(K L_E^2 Lambda*)";

}  // namespace

Verdict stable_pair_exists(const RankTwoVBundle& bundle, const StabilityClass& given,
                           const std::optional<SubBundleSpec>& destabilising) {
  for (const auto& h : {given.h0_klm2, given.h0_kl2}) {
    if (h && *h < 0) throw DomainError("supplied h0 values must be non-negative");
  }
  const std::int64_t g = bundle.genus();
  const auto k = static_cast<std::int64_t>(bundle.num_distinct());
  StabilityClass cls = given;

  const bool semistable = cls.kind == StabilityKind::SemistableIndecomposable ||
                          cls.kind == StabilityKind::SemistableDecomposable;
  if (semistable && destabilising) {
    const SemistableH0 h = semistable_h0(bundle, *destabilising);
    if ((cls.h0_klm2 && *cls.h0_klm2 != h.klm2) || (cls.h0_kl2 && *cls.h0_kl2 != h.kl2)) {
      throw DomainError("supplied h0 values disagree with the destabilising sub-bundle");
    }
    cls.h0_klm2 = h.klm2;
    cls.h0_kl2 = h.kl2;
  }

  switch (cls.kind) {
    case StabilityKind::Stable:
      if (g == 0 && k < 3) return no("stable V-bundles with g = 0 need n - n0 >= 3");
      return yes();

    case StabilityKind::SemistableIndecomposable: {
      if (k < 2) return no("strictly semistable V-bundles need n - n0 >= 2");
      if (g > 1) return yes();
      if (g + k < 4) return no("g + n - n0 >= 4 is necessary when g <= 1");
      if (!cls.h0_klm2) return conditional({std::string("needs ") + kLowering + " > 1"});
      return *cls.h0_klm2 > 1 ? yes() : no(std::string(kLowering) + " > 1 fails");
    }

    case StabilityKind::SemistableDecomposable: {
      if (k < 2) return no("strictly semistable V-bundles need n - n0 >= 2");
      if (g > 0) return yes();
      if (k < 4) return no("n - n0 >= 4 is necessary when g = 0");
      // Both destabilising summands must fail to be invariant. On the wall
      // the two h0 values sum to 2g - 2 + n - n0.
      auto lowering = cls.h0_klm2;
      auto raising = cls.h0_kl2;
      const std::int64_t total = 2 * g - 2 + k;
      if (lowering && raising && *lowering + *raising != total) {
        throw DomainError("semistable h0 values must sum to 2g - 2 + n - n0");
      }
      if (lowering && !raising) raising = total - *lowering;
      if (raising && !lowering) lowering = total - *raising;
      if (!lowering) {
        return conditional({std::string("needs ") + kLowering + " >= 1",
                            std::string("needs ") + kRaising + " >= 1"});
      }
      if (*lowering < 1) return no(std::string(kLowering) + " >= 1 fails");
      if (*raising < 1) return no(std::string(kRaising) + " >= 1 fails");
      return yes();
    }

    case StabilityKind::NonSemistableIndecomposable: {
      if (!(g >= 2 || g + k >= 4)) return no("g >= 2 or g + n - n0 >= 4 is necessary");
      Verdict v;
      if (!cls.h0_klm2) {
        v = conditional({std::string("needs ") + kLowering + " > 1"});
      } else if (*cls.h0_klm2 > 1) {
        v = yes();
      } else {
        return no(std::string(kLowering) + " > 1 fails");
      }
      if (g == 2 && k == 1) v.notes.push_back("smooth part of K L_E^-2 Lambda is necessarily canonical");
      return v;
    }

    case StabilityKind::NonSemistableDecomposable: {
      if (!(g >= 1 || k >= 3)) return no("g >= 1 or n - n0 >= 3 is necessary");
      Verdict v;
      if (!cls.h0_klm2) {
        v = conditional({std::string("needs ") + kLowering + " >= 1"});
      } else if (*cls.h0_klm2 >= 1) {
        v = yes();
      } else {
        return no(std::string(kLowering) + " >= 1 fails");
      }
      if (2 * g + k == 3) v.notes.push_back("smooth part of K L_E^-2 Lambda is necessarily trivial");
      if (g == 0 && k == 3 && v.kind == Verdict::Kind::Yes) {
        v.isolated_point = true;
        v.notes.push_back("the stable pair is an isolated point of the moduli space");
      }
      return v;
    }
  }
  return no("unknown stability class");
}

bool all_higgs_invariant(const RankTwoVBundle& bundle, const SubBundleSpec& spec) {
  require_compatible(bundle, spec.eps);
  if (bundle.genus() != 0) return false;
  if (bundle.num_distinct() < 3) return false;  // h0(K L^-2 Lambda) = n - n0 - 2 must be >= 1
  const Rational excess = Rational(2) * sub_bundle(bundle, spec).c1() - bundle.det_degree();
  if (excess <= 0) return false;
  return chi_twists(bundle, spec).second == 0;
}

// ---------------------------------------------------------------------------

std::optional<SubBundleSpec> reducible_exists(const RankTwoVBundle& bundle) {
  const Rational target = bundle.det_degree();
  std::optional<SubBundleSpec> best;
  for (const auto& eps : isotropy_vectors(bundle)) {
    // 2 c1(L) is affine in m with slope 2, so only m near (l - theta) / 2 can work.
    const Rational centre = (Rational(bundle.l()) - epsilon_weight(bundle, eps)) / 2;
    const std::int64_t base = floor_int(centre);
    for (std::int64_t m : {base, base + 1}) {
      SubBundleSpec spec{m, eps};
      if (Rational(2) * sub_bundle(bundle, spec).c1() != target) continue;
      if (!best || witness_before(spec, *best)) best = spec;
    }
  }
  return best;
}

std::optional<IsotropyVector> reduction_by_parity(const RankTwoVBundle& bundle) {
  for (const auto& eps : isotropy_vectors(bundle)) {
    if (is_even_integer(epsilon_weight(bundle, eps) - bundle.l())) return eps;
  }
  return std::nullopt;
}

std::int64_t moduli_dimension(const RankTwoVBundle& bundle) {
  return 6 * (std::int64_t{bundle.genus()} - 1) + 2 * static_cast<std::int64_t>(bundle.num_distinct());
}

std::int64_t real_moduli_dimension(const RankTwoVBundle& bundle) {
  return 2 * moduli_dimension(bundle);
}

std::vector<LineVBundle> topological_roots(const OrbifoldSurface& surface) {
  std::vector<std::size_t> even_points;
  for (std::size_t i = 0; i < surface.num_points(); ++i) {
    if (surface.order(i) % 2 == 0) even_points.push_back(i);
  }
  if (even_points.size() > kMaxEnumeratedPoints) {
    throw DomainError("too many even-order points to enumerate roots");
  }
  std::vector<LineVBundle> roots;
  const std::size_t n2 = even_points.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n2); ++mask) {
    std::vector<int> y(surface.num_points(), 0);
    std::int64_t half_count = 0;
    for (std::size_t j = 0; j < n2; ++j) {
      if ((mask >> j) & 1U) {
        y[even_points[j]] = surface.order(even_points[j]) / 2;
        ++half_count;
      }
    }
    if (half_count % 2 != 0) continue;  // c1 = half_count / 2 + b must vanish
    roots.emplace_back(surface, -half_count / 2, std::move(y));
  }
  return roots;
}

LineVBundle squarefree_normalize(const LineVBundle& det) {
  const auto& surface = det.surface();
  std::vector<int> y(surface.num_points(), 0);
  bool any_even = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (surface.order(i) % 2 == 0) {
      any_even = true;
      y[i] = det.y(i) % 2;
    }
  }
  // At an odd order, L_i^(alpha+1) = L_0 L_i is a square that moves y_i by one
  // and b by one, so with no even orders the class is b + sum y_i mod 2.
  std::int64_t b = 0;
  if (!any_even) {
    b = det.b();
    for (int v : det.y()) b += v;
    b = mod2(b);
  }
  return LineVBundle(surface, b, std::move(y));
}

RankTwoVBundle twist(const RankTwoVBundle& bundle, const LineVBundle& line) {
  if (!(bundle.surface() == line.surface())) throw DomainError("twist by a bundle on another surface");
  const auto& surface = bundle.surface();
  std::vector<IsotropyPair> pairs(bundle.num_points());
  Rational fractional(0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int alpha = surface.order(i);
    int a = (bundle.pair(i).x + line.y(i)) % alpha;
    int b = (bundle.pair(i).x_prime + line.y(i)) % alpha;
    if (a > b) std::swap(a, b);
    pairs[i] = {a, b};
    fractional += Rational(a + b, alpha);
  }
  const Rational det_degree = bundle.det_degree() + Rational(2) * line.c1();
  const Rational l = det_degree - fractional;
  if (!is_integer(l)) throw std::logic_error("twisted determinant has fractional integer part");
  return RankTwoVBundle(surface, std::move(pairs), l.numerator());
}

Reduction reduce_to_n0_zero(const RankTwoVBundle& bundle) {
  const auto& surface = bundle.surface();
  if (bundle.n0() == 0) {
    return {surface, bundle, {}, std::vector<std::int64_t>(bundle.num_points(), 0),
            "n0 = 0; bundle unchanged"};
  }
  if (bundle.num_distinct() == 0) {
    throw DomainError("every marked point has x = x'; nothing is left after the reduction");
  }
  std::vector<std::size_t> dropped;
  std::vector<std::int64_t> exponents(bundle.num_points(), 0);
  std::vector<std::int64_t> raw(bundle.num_points(), 0);
  for (std::size_t i = 0; i < bundle.num_points(); ++i) {
    if (bundle.pair(i).x == bundle.pair(i).x_prime) {
      dropped.push_back(i);
      exponents[i] = -bundle.pair(i).x;
      raw[i] = exponents[i];
    }
  }
  const RankTwoVBundle twisted = twist(bundle, LineVBundle::normalized(surface, 0, raw));

  std::vector<int> kept_orders;
  std::vector<IsotropyPair> kept_pairs;
  for (std::size_t i = 0; i < bundle.num_points(); ++i) {
    if (std::find(dropped.begin(), dropped.end(), i) != dropped.end()) continue;
    kept_orders.push_back(surface.order(i));
    kept_pairs.push_back(twisted.pair(i));
  }
  OrbifoldSurface reduced_surface(surface.genus(), std::move(kept_orders));
  // The twisted bundle has isotropy (0, 0) at the dropped points, so its l is
  // unaffected by forgetting them.
  RankTwoVBundle reduced(reduced_surface, std::move(kept_pairs), twisted.l());
  std::string note = "tensored by L_i^(-x_i) at " + std::to_string(dropped.size()) +
                     " point(s) with x = x'; c1(Lambda) lowered by sum 2 x_i / alpha_i; l kept at " +
                     std::to_string(twisted.l());
  return {std::move(reduced_surface), std::move(reduced), std::move(dropped), std::move(exponents),
          std::move(note)};
}

std::vector<ParabolicWeight> parabolic_weights(const RankTwoVBundle& bundle) {
  std::vector<ParabolicWeight> out;
  out.reserve(bundle.num_points());
  for (std::size_t i = 0; i < bundle.num_points(); ++i) {
    const auto& p = bundle.pair(i);
    const int alpha = bundle.surface().order(i);
    out.push_back({Rational(p.x, alpha), Rational(p.x_prime, alpha), p.x == p.x_prime});
  }
  return out;
}

}  // namespace orbimod
