#pragma once

// Bookkeeping for the determinant map det: M -> H0(K^2): base dimension,
// spectral curve genus and branch points, and the generic fibre type.

#include <cstdint>
#include <optional>
#include <string>

#include "orbimod/ranktwo.hpp"

namespace orbimod {

enum class FibreKind { Prym, Jacobian, ZeroMap };

std::string to_string(FibreKind kind);

struct SpectralData {
  std::int64_t base_dim = 0;
  std::optional<std::int64_t> branch_points;
  std::optional<std::int64_t> spectral_genus;
  FibreKind fibre = FibreKind::Prym;
  std::int64_t fibre_dim = 0;
  /// The fibre type holds for generic q only; it is never tested against a specific q.
  bool generic_caveat = true;
  /// Present when points with x = x' were twisted away first.
  std::optional<Reduction> reduction;
};

/// 3g - 3 + (n - n0).
std::int64_t hitchin_base_dim(const RankTwoVBundle& bundle);

/// Throws DomainError when the base dimension is negative (empty moduli).
SpectralData spectral_data(const RankTwoVBundle& bundle);

struct SubBundleDegree {
  Rational c1;
  int isotropy = 0;
};

/// The invariant sub-bundles L+- for g = n - n0 = 1, after reduction to the single
/// point with x != x'. r is the integer part of c1(Lambda).
SubBundleDegree special_case_subbundle_degrees(const RankTwoVBundle& bundle);

}  // namespace orbimod
