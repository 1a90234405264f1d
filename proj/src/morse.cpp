#include "orbimod/morse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "orbimod/errors.hpp"

namespace orbimod {

std::string to_string(MinStratum::Kind kind) {
  return kind == MinStratum::Kind::StableBundlesModuli ? "stable_bundles" : "projective";
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, std::int64_t power) {
  if (power < 0) throw DomainError("negative powers of t are not supported");
  std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = coefficient;
  return LaurentPoly(std::move(c));
}

LaurentPoly LaurentPoly::symbol(std::string name, std::int64_t power, std::int64_t coefficient) {
  if (power < 0) throw DomainError("negative powers of t are not supported");
  LaurentPoly p;
  p.symbols_.push_back({power, coefficient, std::move(name)});
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::projective_space(std::int64_t r) {
  if (r < 0) throw DomainError("symmetric power degree must be non-negative");
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * r) + 1, 0);
  for (std::int64_t j = 0; j <= r; ++j) c[static_cast<std::size_t>(2 * j)] = 1;
  return LaurentPoly(std::move(c));
}

std::int64_t LaurentPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : 0;
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::sort(symbols_.begin(), symbols_.end(), [](const Symbol& a, const Symbol& b) {
    return std::tie(a.power, a.name) < std::tie(b.power, b.name);
  });
  std::vector<Symbol> merged;
  for (auto& s : symbols_) {
    if (!merged.empty() && merged.back().power == s.power && merged.back().name == s.name) {
      merged.back().coefficient += s.coefficient;
    } else {
      merged.push_back(std::move(s));
    }
  }
  std::erase_if(merged, [](const Symbol& s) { return s.coefficient == 0; });
  symbols_ = std::move(merged);
}

LaurentPoly LaurentPoly::shifted(std::int64_t power) const {
  if (power < 0) throw DomainError("negative powers of t are not supported");
  LaurentPoly out;
  if (!coeffs_.empty()) {
    out.coeffs_.assign(static_cast<std::size_t>(power), 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  }
  out.symbols_ = symbols_;
  for (auto& s : out.symbols_) s.power += power;
  return out;
}

LaurentPoly LaurentPoly::scaled(std::int64_t factor) const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  for (auto& s : out.symbols_) s.coefficient *= factor;
  out.normalize();
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_symbolic() && b.is_symbolic()) {
    throw DomainError("cannot multiply two polynomials that both carry symbolic terms");
  }
  LaurentPoly out;
  if (!a.coeffs_.empty() && !b.coeffs_.empty()) {
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  const LaurentPoly& numeric = a.is_symbolic() ? b : a;
  const LaurentPoly& symbolic = a.is_symbolic() ? a : b;
  for (const auto& s : symbolic.symbols_) {
    for (std::size_t j = 0; j < numeric.coeffs_.size(); ++j) {
      if (numeric.coeffs_[j] == 0) continue;
      out.symbols_.push_back(
          {s.power + static_cast<std::int64_t>(j), s.coefficient * numeric.coeffs_[j], s.name});
    }
  }
  out.normalize();
  return out;
}

std::optional<std::int64_t> LaurentPoly::at_one() const {
  if (is_symbolic()) return std::nullopt;
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

std::string LaurentPoly::to_string() const {
  struct Term {
    std::int64_t power;
    std::int64_t coefficient;
    std::string name;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) terms.push_back({static_cast<std::int64_t>(i), coeffs_[i], ""});
  }
  for (const auto& s : symbols_) terms.push_back({s.power, s.coefficient, s.name});
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.power < b.power; });
  if (terms.empty()) return "0";

  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    std::int64_t c = t.coefficient;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    std::string monomial;
    if (t.power == 1) monomial = "t";
    if (t.power > 1) monomial = "t^" + std::to_string(t.power);
    if (!t.name.empty()) monomial += monomial.empty() ? t.name : " " + t.name;
    if (monomial.empty()) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << monomial;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

Stratum make_stratum(const RankTwoVBundle& bundle, SubBundleSpec spec, const Rational& theta) {
  const std::int64_t g = bundle.genus();
  const auto n_plus = static_cast<std::int64_t>(spec.eps.n_plus());
  const auto n_minus = static_cast<std::int64_t>(spec.eps.n_minus());
  Stratum s;
  s.value_over_2pi = Rational(2 * spec.m - bundle.l()) + theta;
  s.index = 2 * (2 * spec.m - bundle.l() + g - 1 + n_plus);
  s.r = bundle.l() - 2 * spec.m + 2 * g - 2 + n_minus;
  s.cover_order = std::int64_t{1} << (2 * g);
  s.spec = std::move(spec);
  return s;
}

void require_morse_hypotheses(const RankTwoVBundle& bundle) {
  if (!bundle.surface().hyperbolic()) {
    throw DomainError("the orbifold surface must be hyperbolic (negative Euler characteristic)");
  }
  if (bundle.genus() == 0 && bundle.num_distinct() < 3) {
    throw DomainError("the stratification needs n - n0 >= 3 when g = 0");
  }
  if (auto witness = reducible_exists(bundle)) {
    throw DomainError("bundle admits reducible pairs (2 c1(L) = c1(Lambda) at m = " +
                      std::to_string(witness->m) + ")");
  }
}

}  // namespace

std::vector<Stratum> critical_submanifolds(const RankTwoVBundle& bundle) {
  if (bundle.genus() > 30) throw DomainError("genus too large for the 2^{2g} cover order");
  const std::int64_t g = bundle.genus();
  std::vector<Stratum> out;
  for (const auto& eps : isotropy_vectors(bundle)) {
    const Rational theta = epsilon_weight(bundle, eps);
    const auto n_minus = static_cast<std::int64_t>(eps.n_minus());
    // 2m > l - theta and 2m <= l + 2g - 2 + n-.
    const std::int64_t m_min = floor_int((Rational(bundle.l()) - theta) / 2) + 1;
    const std::int64_t m_max = floor_int(Rational(bundle.l() + 2 * g - 2 + n_minus, 2));
    for (std::int64_t m = m_min; m <= m_max; ++m) out.push_back(make_stratum(bundle, {m, eps}, theta));
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.value_over_2pi != b.value_over_2pi) return a.value_over_2pi < b.value_over_2pi;
    if (a.index != b.index) return a.index < b.index;
    return witness_before(a.spec, b.spec);
  });
  return out;
}

std::vector<Stratum> enumerate_strata(const RankTwoVBundle& bundle) {
  require_morse_hypotheses(bundle);
  return critical_submanifolds(bundle);
}

std::size_t count_projective_minima(const RankTwoVBundle& bundle) {
  std::size_t count = 0;
  for (const auto& eps : isotropy_vectors(bundle)) {
    const auto n_plus = static_cast<std::int64_t>(eps.n_plus());
    if ((n_plus + bundle.l()) % 2 == 0) continue;
    if (Rational(n_plus) - epsilon_weight(bundle, eps) < 1) ++count;
  }
  return count;
}

bool stable_bundles_empty(const RankTwoVBundle& bundle) {
  const Rational bound(1 - std::int64_t{bundle.genus()});
  for (const auto& eps : isotropy_vectors(bundle)) {
    const auto n_plus = static_cast<std::int64_t>(eps.n_plus());
    if ((n_plus + bundle.l()) % 2 == 0) continue;
    if (Rational(n_plus) - epsilon_weight(bundle, eps) < bound) return true;
  }
  return false;
}

MinStratum minimum_stratum(const RankTwoVBundle& bundle) {
  const auto strata = enumerate_strata(bundle);
  std::vector<Stratum> index_zero;
  std::copy_if(strata.begin(), strata.end(), std::back_inserter(index_zero),
               [](const Stratum& s) { return s.index == 0; });
  if (index_zero.size() > 1) {
    throw std::logic_error("found more than one index-0 critical manifold");
  }
  const bool empty = stable_bundles_empty(bundle);
  if (empty != (index_zero.size() == 1)) {
    throw std::logic_error("index-0 stratum disagrees with the stable-bundle emptiness test");
  }
  if (bundle.genus() == 0 && count_projective_minima(bundle) > 1) {
    throw std::logic_error("projective minimum count exceeds 1");
  }
  MinStratum out;
  out.complex_dim = 3 * std::int64_t{bundle.genus()} - 3 + static_cast<std::int64_t>(bundle.num_distinct());
  if (empty) {
    out.kind = MinStratum::Kind::ProjectiveStratum;
    out.stratum = index_zero.front();
  }
  return out;
}

LaurentPoly poincare_polynomial(const RankTwoVBundle& bundle,
                                const std::optional<LaurentPoly>& min_poly,
                                const std::map<std::int64_t, LaurentPoly>& cover_polys) {
  const MinStratum minimum = minimum_stratum(bundle);
  const auto strata = enumerate_strata(bundle);
  const int g = bundle.genus();

  LaurentPoly total;
  if (minimum.kind == MinStratum::Kind::StableBundlesModuli) {
    total += min_poly ? *min_poly : LaurentPoly::symbol("P(N0)");
  }
  for (const auto& s : strata) {
    LaurentPoly piece;
    if (auto it = cover_polys.find(s.r); it != cover_polys.end()) {
      piece = it->second;
    } else if (g == 0) {
      piece = LaurentPoly::projective_space(s.r);
    } else if (s.r == 0) {
      piece = LaurentPoly::monomial(s.cover_order, 0);
    } else {
      piece = LaurentPoly::symbol("P(cover_{" + std::to_string(g) + "," + std::to_string(s.r) + "})");
    }
    total += piece.shifted(s.index);
  }
  return total;
}

std::int64_t symmetric_power_euler_characteristic(int genus, std::int64_t r) {
  if (r < 0) throw DomainError("symmetric power degree must be non-negative");
  // Generalized binomial coefficient binom(c + r - 1, r) with c = 2 - 2g.
  const std::int64_t c = 2 - 2 * std::int64_t{genus};
  std::int64_t a = 1;
  for (std::int64_t j = 0; j < r; ++j) a = a * (c + j) / (j + 1);
  return a;
}

std::optional<std::int64_t> euler_characteristic_moduli(const RankTwoVBundle& bundle,
                                                        const std::optional<std::int64_t>& chi_min) {
  const MinStratum minimum = minimum_stratum(bundle);
  std::int64_t chi = 0;
  if (minimum.kind == MinStratum::Kind::StableBundlesModuli) {
    if (!chi_min) return std::nullopt;
    chi += *chi_min;
  }
  for (const auto& s : enumerate_strata(bundle)) {
    chi += s.cover_order * symmetric_power_euler_characteristic(bundle.genus(), s.r);
  }
  return chi;
}

TopologyReport topology_report(const RankTwoVBundle& bundle) {
  if (auto witness = reducible_exists(bundle)) {
    throw DomainError("bundle admits reducible pairs; the moduli space is singular");
  }
  TopologyReport report;
  report.real_dim = real_moduli_dimension(bundle);
  if (report.real_dim < 0) throw DomainError("the moduli space is empty (negative dimension)");
  report.compact = report.isolated_point = bundle.genus() == 0 && bundle.num_distinct() == 3;
  return report;
}

}  // namespace orbimod
