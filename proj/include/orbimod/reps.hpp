#pragma once

// Orbifold fundamental groups, rotation numbers, representation varieties and
// their real loci, PSL2(R) components, Milnor-Wood and Teichmuller data.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbimod/core.hpp"
#include "orbimod/ranktwo.hpp"

namespace orbimod {

struct Letter {
  std::string generator;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// A finite presentation stored as data; no word problem is attempted.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relations;

  /// Every relation uses declared generators only.
  bool well_formed() const;
  std::string to_string() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// <a_j, b_j, q_i | q_i^alpha_i, q_1...q_n [a_1,b_1]...[a_g,b_g]>
Presentation fuchsian_presentation(const OrbifoldSurface& surface);

/// The circle-bundle group of L with central h. With z2_extension the
/// relation h^2 is appended.
Presentation circle_group_presentation(const LineVBundle& line, bool z2_extension = false);

class RotationData {
 public:
  /// Requires 0 <= r_i <= alpha_i.
  RotationData(OrbifoldSurface surface, std::vector<int> r);

  const OrbifoldSurface& surface() const noexcept { return surface_; }
  const std::vector<int>& r() const noexcept { return r_; }
  int operator[](std::size_t i) const { return r_.at(i); }
  /// #{r_i = 0 mod alpha_i}
  std::size_t n0() const noexcept { return n0_; }

  /// r_i and y_i have equal parity at every point.
  bool compatible_with(const LineVBundle& lambda) const;

  friend bool operator==(const RotationData& a, const RotationData& b) {
    return a.surface_ == b.surface_ && a.r_ == b.r_;
  }

 private:
  OrbifoldSurface surface_;
  std::vector<int> r_;
  std::size_t n0_ = 0;
};

/// All admissible rotation numbers for Lambda, lexicographic.
std::vector<RotationData> compatible_rotation_numbers(const LineVBundle& lambda);

/// Determinant and rotation numbers attached to a rank-2 bundle:
/// r_i = x'_i - x_i when x_i + x'_i < alpha_i, otherwise alpha_i - (x'_i - x_i).
std::pair<LineVBundle, RotationData> rotation_numbers_of(const RankTwoVBundle& bundle);

/// 6(g - 1) + 2(n - n0). Throws DomainError on a parity mismatch.
std::int64_t rep_variety_dimension(const LineVBundle& lambda, const RotationData& rd);

/// First eps (eps_i = 0 exactly where r_i = 0) with sum eps_i r_i / alpha_i = b mod 2.
std::optional<IsotropyVector> rep_reducible(const LineVBundle& lambda, const RotationData& rd);

/// Orbit under r_i -> alpha_i - r_i at an even number of even-order points; sorted.
std::vector<RotationData> sign_twist_orbit(const LineVBundle& lambda, const RotationData& rd);

struct RealComponent {
  enum class Kind { StableBundles, VectorBundleOverCover };
  Kind kind = Kind::StableBundles;
  std::int64_t rank = 0;
  std::int64_t base_sym_power = 0;
  std::int64_t cover_order = 1;
  std::int64_t complex_dim = 0;
  std::optional<SubBundleSpec> spec;
};

std::string to_string(RealComponent::Kind kind);

/// The stable-bundle moduli followed by one vector bundle per critical (m, eps).
/// Throws DomainError for bundles with reducible pairs.
std::vector<RealComponent> real_fixed_components(const RankTwoVBundle& bundle);

/// Component of PSL2(R) representations with Euler class b + sum y_i / alpha_i.
/// Requires a positive Euler class and b <= 2g - 2.
RealComponent psl2r_component(const OrbifoldSurface& surface, std::int64_t b, const std::vector<int>& y);

/// |e| <= -chi(M).
bool milnor_wood(const OrbifoldSurface& surface, const Rational& euler_class);

/// 3g - 3 + n; requires a hyperbolic surface.
std::int64_t teichmuller_dimension(const OrbifoldSurface& surface);

struct ConicalMetricReport {
  bool exists_unique = false;
  std::vector<Rational> cone_angles_over_pi;  // 2 / alpha_i
};

ConicalMetricReport conical_metric_report(const OrbifoldSurface& surface);

}  // namespace orbimod
