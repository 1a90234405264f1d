#pragma once

// Critical submanifolds of |phi|^2 on the moduli of stable Higgs V-bundles,
// the index-0 minimum, and Poincare-polynomial / Euler-characteristic assembly.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbimod/ranktwo.hpp"

namespace orbimod {

struct Stratum {
  SubBundleSpec spec;
  Rational value_over_2pi;  // 2m - l + epsilon_weight
  std::int64_t index = 0;   // 2(2m - l + g - 1 + n+)
  std::int64_t r = 0;       // l - 2m + 2g - 2 + n-
  std::int64_t cover_order = 1;
};

struct MinStratum {
  enum class Kind { StableBundlesModuli, ProjectiveStratum };
  Kind kind = Kind::StableBundlesModuli;
  std::int64_t complex_dim = 0;   // of the stable-bundle moduli, 3g - 3 + n - n0
  std::optional<Stratum> stratum;  // set for ProjectiveStratum
};

std::string to_string(MinStratum::Kind kind);

/// Integer polynomial in t plus named symbolic terms c . t^k . NAME.
class LaurentPoly {
 public:
  struct Symbol {
    std::int64_t power = 0;
    std::int64_t coefficient = 0;
    std::string name;

    friend bool operator==(const Symbol&, const Symbol&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::int64_t> coeffs);
  static LaurentPoly monomial(std::int64_t coefficient, std::int64_t power);
  static LaurentPoly symbol(std::string name, std::int64_t power = 0, std::int64_t coefficient = 1);
  /// 1 + t^2 + ... + t^(2r)
  static LaurentPoly projective_space(std::int64_t r);

  /// Numeric coefficients with trailing zeros stripped; index = power of t.
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  /// Sorted by (power, name); zero coefficients are dropped.
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  bool is_symbolic() const noexcept { return !symbols_.empty(); }
  std::int64_t coefficient(std::size_t power) const;

  LaurentPoly shifted(std::int64_t power) const;
  LaurentPoly scaled(std::int64_t factor) const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  /// Product of two polynomials; throws DomainError if both carry symbols.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Sum of the coefficients, none when symbolic terms remain.
  std::optional<std::int64_t> at_one() const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  std::vector<std::int64_t> coeffs_;
  std::vector<Symbol> symbols_;
};

/// Every (m, eps) with l < 2m + eps_weight <= l + 2g - 2 + eps_weight + n-,
/// without checking the preconditions of enumerate_strata. Sorted by value, index, witness order.
std::vector<Stratum> critical_submanifolds(const RankTwoVBundle& bundle);

/// Requires a hyperbolic surface, no reducible pairs and n - n0 >= 3 when g = 0.
std::vector<Stratum> enumerate_strata(const RankTwoVBundle& bundle);

/// Number of eps with n+ + l odd and n+ - eps_weight < 1.
std::size_t count_projective_minima(const RankTwoVBundle& bundle);
/// Some eps with n+ + l odd has n+ - eps_weight < 1 - g.
bool stable_bundles_empty(const RankTwoVBundle& bundle);

MinStratum minimum_stratum(const RankTwoVBundle& bundle);

/// P(t) = P_min(t) + sum over non-minimal strata of t^index P_stratum(t).
/// cover_polys maps r to the Poincare polynomial of the 2^{2g}-fold cover of S^r.
LaurentPoly poincare_polynomial(const RankTwoVBundle& bundle,
                                const std::optional<LaurentPoly>& min_poly = std::nullopt,
                                const std::map<std::int64_t, LaurentPoly>& cover_polys = {});

/// chi(S^r) of a closed genus-g surface: coefficient of t^r in (1 - t)^(2g - 2).
std::int64_t symmetric_power_euler_characteristic(int genus, std::int64_t r);

/// None when the minimum is the stable-bundle moduli and chi_min is not given.
std::optional<std::int64_t> euler_characteristic_moduli(
    const RankTwoVBundle& bundle, const std::optional<std::int64_t>& chi_min = std::nullopt);

struct TopologyReport {
  bool connected = true;
  bool simply_connected = true;
  bool compact = false;
  bool isolated_point = false;
  std::int64_t real_dim = 0;
};

TopologyReport topology_report(const RankTwoVBundle& bundle);

}  // namespace orbimod
