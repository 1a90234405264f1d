#pragma once

// Rank-2 V-bundles: isotropy data, sub-bundle degrees, the Euler
// characteristics of the twists K L^-2 Lambda and K L^2 Lambda*, the
// stable-pair classifier, reducibility and the n0 = 0 reduction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbimod/core.hpp"
#include "orbimod/rational.hpp"

namespace orbimod {

struct IsotropyPair {
  int x = 0;
  int x_prime = 0;

  friend bool operator==(const IsotropyPair&, const IsotropyPair&) = default;
};

class RankTwoVBundle {
 public:
  /// Requires 0 <= x <= x' < alpha at every point. l is the integer part of
  /// c1(Lambda) = l + sum (x_i + x'_i) / alpha_i.
  RankTwoVBundle(OrbifoldSurface surface, std::vector<IsotropyPair> pairs, std::int64_t l);

  const OrbifoldSurface& surface() const noexcept { return surface_; }
  const std::vector<IsotropyPair>& pairs() const noexcept { return pairs_; }
  const IsotropyPair& pair(std::size_t i) const { return pairs_.at(i); }
  std::int64_t l() const noexcept { return l_; }
  int genus() const noexcept { return surface_.genus(); }
  std::size_t num_points() const noexcept { return pairs_.size(); }

  /// Number of points with x = x'.
  std::size_t n0() const noexcept { return n0_; }
  /// n - n0
  std::size_t num_distinct() const noexcept { return pairs_.size() - n0_; }

  /// (x'_i - x_i) / alpha_i
  Rational gap(std::size_t i) const;

  const LineVBundle& determinant() const noexcept { return det_; }
  Rational det_degree() const { return det_.c1(); }

  friend bool operator==(const RankTwoVBundle& a, const RankTwoVBundle& b) {
    return a.surface_ == b.surface_ && a.pairs_ == b.pairs_ && a.l_ == b.l_;
  }

 private:
  OrbifoldSurface surface_;
  std::vector<IsotropyPair> pairs_;
  std::int64_t l_;
  std::size_t n0_ = 0;
  LineVBundle det_;
};

RankTwoVBundle make_bundle(const OrbifoldSurface& surface, std::vector<IsotropyPair> pairs,
                           std::int64_t l);

/// Sign pattern (eps_i) in {-1, 0, +1}.
class IsotropyVector {
 public:
  IsotropyVector() = default;
  explicit IsotropyVector(std::vector<int> eps);

  const std::vector<int>& values() const noexcept { return eps_; }
  int operator[](std::size_t i) const { return eps_.at(i); }
  std::size_t size() const noexcept { return eps_.size(); }
  std::size_t n_plus() const;
  std::size_t n_minus() const;

  /// eps_i = 0 exactly at the points where x_i = x'_i.
  bool compatible_with(const RankTwoVBundle& bundle) const;

  friend bool operator==(const IsotropyVector&, const IsotropyVector&) = default;

 private:
  std::vector<int> eps_;
};

/// Topological sub-bundle L_(m, eps) of a rank-2 bundle.
struct SubBundleSpec {
  std::int64_t m = 0;
  IsotropyVector eps;

  friend bool operator==(const SubBundleSpec&, const SubBundleSpec&) = default;
};

/// Deterministic witness order: larger m first, then eps lexicographically
/// with +1 before 0 before -1.
bool witness_before(const SubBundleSpec& a, const SubBundleSpec& b);
bool eps_before(const IsotropyVector& a, const IsotropyVector& b);

/// Hard cap on n - n0 for the exhaustive 2^(n - n0) searches.
inline constexpr std::size_t kMaxEnumeratedPoints = 24;

/// Every isotropy vector compatible with the bundle, in eps_before order.
/// Throws DomainError when n - n0 exceeds kMaxEnumeratedPoints.
std::vector<IsotropyVector> isotropy_vectors(const RankTwoVBundle& bundle);

/// sum eps_i (x'_i - x_i) / alpha_i
Rational epsilon_weight(const RankTwoVBundle& bundle, const IsotropyVector& eps);

LineVBundle sub_bundle(const RankTwoVBundle& bundle, const SubBundleSpec& spec);

/// (chi(K L^-2 Lambda), chi(K L^2 Lambda*)) from the closed formulas.
std::pair<std::int64_t, std::int64_t> chi_twists(const RankTwoVBundle& bundle,
                                                 const SubBundleSpec& spec);
/// K L^-2 Lambda built by tensoring line bundles.
LineVBundle twist_lowering(const RankTwoVBundle& bundle, const SubBundleSpec& spec);
/// K L^2 Lambda* built by tensoring line bundles.
LineVBundle twist_raising(const RankTwoVBundle& bundle, const SubBundleSpec& spec);

/// Can some bundle with n - n0 = k over this surface attain the extreme
/// values of the twist Euler characteristics? Requires 1 <= k <= n.
bool bounds_attainable_surface(const OrbifoldSurface& surface, std::size_t k);
/// Same question for a fixed topological bundle. False when n0 = n.
bool bounds_attainable_bundle(const RankTwoVBundle& bundle);

struct SemistableH0 {
  std::int64_t end0_nontrivial_ext = 0;  // h0(End0 E (x) K), non-split extension
  std::int64_t end0_trivial_ext = 0;     // same, split extension
  std::int64_t ekl = 0;                  // h0(E* (x) K L)
  std::int64_t klm2 = 0;                 // h0(K L^-2 Lambda)
  std::int64_t kl2 = 0;                  // h0(K L^2 Lambda*)
};

/// h0 values for a sub-bundle sitting exactly on the wall 2 c1(L) = c1(Lambda).
/// Throws DomainError off the wall.
SemistableH0 semistable_h0(const RankTwoVBundle& bundle, const SubBundleSpec& spec);

enum class StabilityKind {
  Stable,
  SemistableIndecomposable,
  SemistableDecomposable,
  NonSemistableIndecomposable,
  NonSemistableDecomposable,
};

std::string to_string(StabilityKind kind);
/// Inverse of to_string; throws std::invalid_argument.
StabilityKind parse_stability_kind(const std::string& text);

struct StabilityClass {
  StabilityKind kind = StabilityKind::Stable;
  std::optional<std::int64_t> h0_klm2;  // h0(K L_E^-2 Lambda)
  std::optional<std::int64_t> h0_kl2;   // h0(K L_E^2 Lambda*)
};

struct Verdict {
  enum class Kind { Yes, No, Conditional };
  Kind kind = Kind::No;
  /// For No: the violated necessary condition. For Conditional: the unmet data.
  std::vector<std::string> conditions;
  std::vector<std::string> notes;
  bool isolated_point = false;
};

std::string to_string(Verdict::Kind kind);

/// Decides whether a holomorphic bundle of the given class occurs in a stable
/// Higgs pair. In the semistable classes a destabilising sub-bundle on the
/// wall may be supplied, in which case its h0 values are computed.
Verdict stable_pair_exists(const RankTwoVBundle& bundle, const StabilityClass& cls,
                           const std::optional<SubBundleSpec>& destabilising = std::nullopt);

/// Non-stable E = L + L* Lambda in a stable pair with L* Lambda fixed by every
/// Higgs field.
bool all_higgs_invariant(const RankTwoVBundle& bundle, const SubBundleSpec& spec);

/// Searches (m, eps) for 2 c1(L) = c1(Lambda); first witness in witness_before order.
std::optional<SubBundleSpec> reducible_exists(const RankTwoVBundle& bundle);
/// Equivalent test over eps alone: epsilon_weight integral and congruent to l mod 2.
std::optional<IsotropyVector> reduction_by_parity(const RankTwoVBundle& bundle);

/// Complex dimension 6(g - 1) + 2(n - n0).
std::int64_t moduli_dimension(const RankTwoVBundle& bundle);
std::int64_t real_moduli_dimension(const RankTwoVBundle& bundle);

/// Line bundles L with L^2 topologically trivial and c1(L) = 0, trivial first.
std::vector<LineVBundle> topological_roots(const OrbifoldSurface& surface);

/// Canonical representative of Lambda modulo squares of line V-bundles.
LineVBundle squarefree_normalize(const LineVBundle& det);

/// E (x) L.
RankTwoVBundle twist(const RankTwoVBundle& bundle, const LineVBundle& line);

struct Reduction {
  OrbifoldSurface surface;
  RankTwoVBundle bundle;
  std::vector<std::size_t> dropped;  // indices on the original surface
  /// twist_exponents[i] = -x_i for dropped i: E was tensored with prod L_i^{twist_exponents[i]}.
  std::vector<std::int64_t> twist_exponents;
  std::string note;
};

/// Twists away the isotropy at points with x = x' and forgets those points.
/// Throws DomainError when every point has x = x'.
Reduction reduce_to_n0_zero(const RankTwoVBundle& bundle);

struct ParabolicWeight {
  Rational lambda;
  Rational lambda_prime;
  bool degenerate = false;
};

std::vector<ParabolicWeight> parabolic_weights(const RankTwoVBundle& bundle);

}  // namespace orbimod
