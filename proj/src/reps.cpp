#include "orbimod/reps.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "orbimod/errors.hpp"
#include "orbimod/morse.hpp"

namespace orbimod {

namespace {

std::vector<std::string> surface_generators(const OrbifoldSurface& surface) {
  std::vector<std::string> gens;
  for (int j = 1; j <= surface.genus(); ++j) {
    gens.push_back("a" + std::to_string(j));
    gens.push_back("b" + std::to_string(j));
  }
  for (std::size_t i = 1; i <= surface.num_points(); ++i) gens.push_back("q" + std::to_string(i));
  return gens;
}

// q_1 ... q_n [a_1, b_1] ... [a_g, b_g]
Word long_relation(const OrbifoldSurface& surface) {
  Word w;
  for (std::size_t i = 1; i <= surface.num_points(); ++i) w.push_back({"q" + std::to_string(i), 1});
  for (int j = 1; j <= surface.genus(); ++j) {
    const auto a = "a" + std::to_string(j);
    const auto b = "b" + std::to_string(j);
    w.insert(w.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return w;
}

void require_compatible(const LineVBundle& lambda, const RotationData& rd) {
  if (!(lambda.surface() == rd.surface())) throw DomainError("rotation data live on another surface");
  if (!rd.compatible_with(lambda)) throw DomainError("rotation numbers must have the parity of y_i");
}

}  // namespace

bool Presentation::well_formed() const {
  const std::set<std::string> known(generators.begin(), generators.end());
  for (const auto& w : relations) {
    for (const auto& letter : w) {
      if (!known.contains(letter.generator)) return false;
    }
  }
  return true;
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) out << (i ? ", " : "") << generators[i];
  out << " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i) out << ", ";
    for (std::size_t j = 0; j < relations[i].size(); ++j) {
      const auto& [g, e] = relations[i][j];
      out << (j ? " " : "") << g;
      if (e != 1) out << "^" << e;
    }
  }
  out << ">";
  return out.str();
}

Presentation fuchsian_presentation(const OrbifoldSurface& surface) {
  Presentation p;
  p.generators = surface_generators(surface);
  for (std::size_t i = 0; i < surface.num_points(); ++i) {
    p.relations.push_back({{"q" + std::to_string(i + 1), surface.order(i)}});
  }
  p.relations.push_back(long_relation(surface));
  return p;
}

Presentation circle_group_presentation(const LineVBundle& line, bool z2_extension) {
  const auto& surface = line.surface();
  Presentation p;
  p.generators = surface_generators(surface);
  for (std::size_t i = 0; i < surface.num_points(); ++i) {
    Word w{{"q" + std::to_string(i + 1), surface.order(i)}};
    if (line.y(i) != 0) w.push_back({"h", line.y(i)});
    p.relations.push_back(std::move(w));
  }
  Word w = long_relation(surface);
  if (line.b() != 0) w.push_back({"h", -line.b()});
  p.relations.push_back(std::move(w));
  for (const auto& g : p.generators) p.relations.push_back({{g, 1}, {"h", 1}, {g, -1}, {"h", -1}});
  p.generators.push_back("h");
  if (z2_extension) p.relations.push_back({{"h", 2}});
  return p;
}

// ---------------------------------------------------------------------------

RotationData::RotationData(OrbifoldSurface surface, std::vector<int> r)
    : surface_(std::move(surface)), r_(std::move(r)) {
  if (r_.size() != surface_.num_points()) throw DomainError("need one rotation number per marked point");
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i] < 0 || r_[i] > surface_.order(i)) {
      throw DomainError("rotation number out of range [0, alpha] at point " + std::to_string(i));
    }
    if (r_[i] % surface_.order(i) == 0) ++n0_;
  }
}

bool RotationData::compatible_with(const LineVBundle& lambda) const {
  if (!(lambda.surface() == surface_)) return false;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if ((r_[i] - lambda.y(i)) % 2 != 0) return false;
  }
  return true;
}

std::vector<RotationData> compatible_rotation_numbers(const LineVBundle& lambda) {
  const auto& surface = lambda.surface();
  std::vector<std::vector<int>> choices(surface.num_points());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    for (int r = lambda.y(i) % 2; r <= surface.order(i); r += 2) choices[i].push_back(r);
    total *= choices[i].size();
    if (total > (std::uint64_t{1} << 20)) throw DomainError("too many rotation-number vectors to list");
  }
  std::vector<RotationData> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  while (true) {
    std::vector<int> r(choices.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = choices[i][pos[i]];
    out.emplace_back(surface, std::move(r));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::pair<LineVBundle, RotationData> rotation_numbers_of(const RankTwoVBundle& bundle) {
  std::vector<int> r(bundle.num_points());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto [x, xp] = bundle.pair(i);
    const int alpha = bundle.surface().order(i);
    r[i] = x + xp < alpha ? xp - x : alpha - (xp - x);
  }
  return {bundle.determinant(), RotationData(bundle.surface(), std::move(r))};
}

std::int64_t rep_variety_dimension(const LineVBundle& lambda, const RotationData& rd) {
  require_compatible(lambda, rd);
  const auto n = static_cast<std::int64_t>(rd.r().size());
  return 6 * (std::int64_t{rd.surface().genus()} - 1) + 2 * (n - static_cast<std::int64_t>(rd.n0()));
}

std::optional<IsotropyVector> rep_reducible(const LineVBundle& lambda, const RotationData& rd) {
  require_compatible(lambda, rd);
  const auto& surface = rd.surface();
  std::vector<std::size_t> free_points;
  for (std::size_t i = 0; i < rd.r().size(); ++i) {
    if (rd[i] != 0) free_points.push_back(i);
  }
  const std::size_t k = free_points.size();
  if (k > kMaxEnumeratedPoints) throw DomainError("too many non-zero rotation numbers to enumerate");
  // Most significant bit first with bit 0 meaning +1 gives +1 < -1 order.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> eps(rd.r().size(), 0);
    Rational sum(0);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t i = free_points[j];
      eps[i] = ((mask >> (k - 1 - j)) & 1U) ? -1 : 1;
      sum += Rational(eps[i] * rd[i], surface.order(i));
    }
    const Rational diff = sum - lambda.b();
    if (is_integer(diff) && diff.numerator() % 2 == 0) return IsotropyVector(std::move(eps));
  }
  return std::nullopt;
}

std::vector<RotationData> sign_twist_orbit(const LineVBundle& lambda, const RotationData& rd) {
  require_compatible(lambda, rd);
  const auto& surface = rd.surface();
  std::vector<std::size_t> even_points;
  for (std::size_t i = 0; i < rd.r().size(); ++i) {
    if (surface.order(i) % 2 == 0) even_points.push_back(i);
  }
  if (even_points.size() > kMaxEnumeratedPoints) throw DomainError("too many even-order points");
  std::set<std::vector<int>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << even_points.size()); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<int> r = rd.r();
    for (std::size_t j = 0; j < even_points.size(); ++j) {
      if ((mask >> j) & 1U) r[even_points[j]] = surface.order(even_points[j]) - r[even_points[j]];
    }
    seen.insert(std::move(r));
  }
  std::vector<RotationData> out;
  for (const auto& r : seen) out.emplace_back(surface, r);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(RealComponent::Kind kind) {
  return kind == RealComponent::Kind::StableBundles ? "stable_bundles" : "vector_bundle_over_cover";
}

std::vector<RealComponent> real_fixed_components(const RankTwoVBundle& bundle) {
  if (reducible_exists(bundle)) throw DomainError("bundle admits reducible pairs");
  const std::int64_t dim = 3 * std::int64_t{bundle.genus()} - 3 + static_cast<std::int64_t>(bundle.num_distinct());
  std::vector<RealComponent> out;
  out.push_back({RealComponent::Kind::StableBundles, 0, 0, 1, dim, std::nullopt});
  for (const auto& s : critical_submanifolds(bundle)) {
    out.push_back({RealComponent::Kind::VectorBundleOverCover, s.index / 2, s.r, s.cover_order, dim, s.spec});
  }
  return out;
}

RealComponent psl2r_component(const OrbifoldSurface& surface, std::int64_t b, const std::vector<int>& y) {
  const LineVBundle line(surface, b, y);
  if (line.c1() <= 0) throw DomainError("the Euler class b + sum y_i / alpha_i must be positive");
  const std::int64_t g = surface.genus();
  if (b > 2 * g - 2) throw DomainError("b <= 2g - 2 is required");
  const auto n0 = static_cast<std::int64_t>(std::count(y.begin(), y.end(), 0));
  const auto k = static_cast<std::int64_t>(y.size()) - n0;
  return {RealComponent::Kind::VectorBundleOverCover, g - 1 + b + k, 2 * g - 2 - b, 1, 3 * g - 3 + k,
          std::nullopt};
}

bool milnor_wood(const OrbifoldSurface& surface, const Rational& euler_class) {
  return abs(euler_class) <= -surface.euler_characteristic();
}

std::int64_t teichmuller_dimension(const OrbifoldSurface& surface) {
  if (!surface.hyperbolic()) throw DomainError("Teichmuller space needs a hyperbolic orbifold");
  return 3 * std::int64_t{surface.genus()} - 3 + static_cast<std::int64_t>(surface.num_points());
}

ConicalMetricReport conical_metric_report(const OrbifoldSurface& surface) {
  ConicalMetricReport out;
  out.exists_unique = surface.hyperbolic();
  for (int alpha : surface.cone_orders()) out.cone_angles_over_pi.emplace_back(2, alpha);
  return out;
}

}  // namespace orbimod
