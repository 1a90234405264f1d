#include "orbimod/spectral.hpp"

#include "orbimod/errors.hpp"

namespace orbimod {

std::string to_string(FibreKind kind) {
  switch (kind) {
    case FibreKind::Prym: return "prym";
    case FibreKind::Jacobian: return "jacobian";
    case FibreKind::ZeroMap: return "zero";
  }
  return "prym";
}

std::int64_t hitchin_base_dim(const RankTwoVBundle& bundle) {
  return 3 * std::int64_t{bundle.genus()} - 3 + static_cast<std::int64_t>(bundle.num_distinct());
}

SpectralData spectral_data(const RankTwoVBundle& bundle) {
  const std::int64_t g = bundle.genus();
  const auto k = static_cast<std::int64_t>(bundle.num_distinct());
  SpectralData out;
  out.base_dim = hitchin_base_dim(bundle);
  if (out.base_dim < 0) throw DomainError("3g - 3 + n - n0 < 0: the moduli space is empty");
  if (k >= 1 && bundle.n0() > 0) out.reduction = reduce_to_n0_zero(bundle);

  if (out.base_dim == 0) {
    out.fibre = FibreKind::ZeroMap;
    out.fibre_dim = 0;
    return out;
  }
  if (g == 1 && k == 1) {
    out.fibre = FibreKind::Jacobian;
    out.fibre_dim = g;
    return out;
  }
  out.branch_points = 4 * g - 4 + 2 * k;
  out.spectral_genus = 4 * g - 3 + k;
  out.fibre = FibreKind::Prym;
  out.fibre_dim = *out.spectral_genus - g;
  return out;
}

SubBundleDegree special_case_subbundle_degrees(const RankTwoVBundle& bundle) {
  if (bundle.genus() != 1 || bundle.num_distinct() != 1) {
    throw DomainError("the special case needs g = n - n0 = 1");
  }
  const RankTwoVBundle reduced = bundle.n0() > 0 ? reduce_to_n0_zero(bundle).bundle : bundle;
  const auto [x, x_prime] = reduced.pair(0);
  const int alpha = reduced.surface().order(0);
  const std::int64_t r = reduced.l();
  if (r % 2 == 0) return {Rational(r / 2) + Rational(x, alpha), x};
  return {Rational((r - 1) / 2) + Rational(x_prime, alpha), x_prime};
}

}  // namespace orbimod
