#include "orbimod/core.hpp"

#include <numeric>
#include <utility>

#include "orbimod/errors.hpp"

namespace orbimod {

namespace {

// Euclidean split value = q * modulus + r with 0 <= r < modulus.
std::pair<std::int64_t, std::int64_t> split(std::int64_t value, std::int64_t modulus) {
  auto q = value / modulus;
  auto r = value % modulus;
  if (r < 0) {
    r += modulus;
    --q;
  }
  return {q, r};
}

void require_same_surface(const OrbifoldSurface& a, const OrbifoldSurface& b) {
  if (!(a == b)) throw DomainError("line V-bundles live on different orbifold surfaces");
}

}  // namespace

OrbifoldSurface::OrbifoldSurface(int genus, std::vector<int> cone_orders)
    : genus_(genus), orders_(std::move(cone_orders)) {
  if (genus_ < 0) throw DomainError("genus must be non-negative");
  if (orders_.empty()) throw DomainError("an orbifold surface needs at least one marked point");
  std::int64_t lcm = 1;
  for (int alpha : orders_) {
    if (alpha < 2) throw DomainError("isotropy orders must be at least 2");
    lcm = std::lcm(lcm, std::int64_t{alpha});
    if (lcm > kMaxOrderLcm) throw DomainError("lcm of the isotropy orders exceeds 2^24");
  }
  chi_ = Rational(2 - 2 * std::int64_t{genus_} - static_cast<std::int64_t>(orders_.size()));
  for (int alpha : orders_) chi_ += Rational(1, alpha);
}

OrbifoldSurface make_surface(int genus, std::vector<int> cone_orders) {
  return OrbifoldSurface(genus, std::move(cone_orders));
}

Rational euler_characteristic(const OrbifoldSurface& surface) {
  return surface.euler_characteristic();
}

// ---------------------------------------------------------------------------

LineVBundle::LineVBundle(OrbifoldSurface surface, std::int64_t b, std::vector<int> y)
    : surface_(std::move(surface)), b_(b), y_(std::move(y)) {
  if (y_.size() != surface_.num_points()) {
    throw DomainError("isotropy list length must equal the number of marked points");
  }
  for (std::size_t i = 0; i < y_.size(); ++i) {
    if (y_[i] < 0 || y_[i] >= surface_.order(i)) {
      throw DomainError("line isotropy must satisfy 0 <= y < alpha at point " +
                        std::to_string(i));
    }
  }
}

LineVBundle LineVBundle::normalized(OrbifoldSurface surface, std::int64_t b,
                                    const std::vector<std::int64_t>& raw_y) {
  if (raw_y.size() != surface.num_points()) {
    throw DomainError("isotropy list length must equal the number of marked points");
  }
  std::vector<int> y(raw_y.size());
  for (std::size_t i = 0; i < raw_y.size(); ++i) {
    const auto [carry, rest] = split(raw_y[i], surface.order(i));
    b += carry;
    y[i] = static_cast<int>(rest);
  }
  return LineVBundle(std::move(surface), b, std::move(y));
}

LineVBundle LineVBundle::trivial(const OrbifoldSurface& surface) {
  return LineVBundle(surface, 0, std::vector<int>(surface.num_points(), 0));
}

Rational LineVBundle::isotropy_sum() const {
  Rational sum(0);
  for (std::size_t i = 0; i < y_.size(); ++i) sum += Rational(y_[i], surface_.order(i));
  return sum;
}

Rational LineVBundle::c1() const { return Rational(b_) + isotropy_sum(); }

bool LineVBundle::has_isotropy() const {
  for (int v : y_) {
    if (v != 0) return true;
  }
  return false;
}

LineVBundle canonical_bundle(const OrbifoldSurface& surface) {
  std::vector<int> y(surface.num_points());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = surface.order(i) - 1;
  return LineVBundle(surface, 2 * std::int64_t{surface.genus()} - 2, std::move(y));
}

LineVBundle tensor(const LineVBundle& a, const LineVBundle& b) {
  require_same_surface(a.surface(), b.surface());
  std::vector<std::int64_t> raw(a.y().size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = std::int64_t{a.y(i)} + b.y(i);
  return LineVBundle::normalized(a.surface(), a.b() + b.b(), raw);
}

LineVBundle dual(const LineVBundle& line) {
  std::vector<std::int64_t> raw(line.y().size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = -std::int64_t{line.y(i)};
  return LineVBundle::normalized(line.surface(), -line.b(), raw);
}

LineVBundle power(const LineVBundle& line, std::int64_t k) {
  std::vector<std::int64_t> raw(line.y().size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = k * line.y(i);
  return LineVBundle::normalized(line.surface(), k * line.b(), raw);
}

LineVBundle point_bundle(const OrbifoldSurface& surface, std::size_t i) {
  if (i >= surface.num_points()) throw DomainError("marked point index out of range");
  std::vector<int> y(surface.num_points(), 0);
  y[i] = 1;
  return LineVBundle(surface, 0, std::move(y));
}

// ---------------------------------------------------------------------------

Divisor::Divisor(OrbifoldSurface surface) : surface_(std::move(surface)) {}

Divisor& Divisor::add_marked(std::size_t i, std::int64_t n) {
  if (i >= surface_.num_points()) throw DomainError("marked point index out of range");
  const auto total = (marked_[i] += n);
  if (total == 0) marked_.erase(i);
  return *this;
}

Divisor& Divisor::add_ordinary(const std::string& label, std::int64_t n) {
  const auto total = (ordinary_[label] += n);
  if (total == 0) ordinary_.erase(label);
  return *this;
}

Rational Divisor::degree() const {
  Rational d(0);
  for (const auto& [i, n] : marked_) d += Rational(n, surface_.order(i));
  for (const auto& [label, n] : ordinary_) d += n;
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  if (!(a.surface_ == b.surface_)) throw DomainError("divisors live on different surfaces");
  Divisor sum = a;
  for (const auto& [i, n] : b.marked_) sum.add_marked(i, n);
  for (const auto& [label, n] : b.ordinary_) sum.add_ordinary(label, n);
  return sum;
}

LineVBundle divisor_to_bundle(const Divisor& divisor) {
  const auto& surface = divisor.surface();
  std::int64_t b = 0;
  for (const auto& [label, n] : divisor.ordinary()) b += n;
  std::vector<std::int64_t> raw(surface.num_points(), 0);
  for (const auto& [i, n] : divisor.marked()) raw[i] = n;
  return LineVBundle::normalized(surface, b, raw);
}

// ---------------------------------------------------------------------------

std::int64_t smooth_line_bundle(const LineVBundle& line) {
  const Rational degree = line.c1() - line.isotropy_sum();
  if (!is_integer(degree)) throw std::logic_error("smooth part has fractional degree");
  return degree.numerator();
}

std::int64_t chi_line(const LineVBundle& line) {
  const Rational chi = Rational(1 - line.surface().genus()) + line.c1() - line.isotropy_sum();
  if (!is_integer(chi)) throw std::logic_error("Riemann-Roch returned a non-integer");
  return chi.numerator();
}

LineVBundle serre_partner(const LineVBundle& line) {
  return tensor(dual(line), canonical_bundle(line.surface()));
}

ForcedH0 h0_forced(const LineVBundle& line) {
  const Rational degree = line.c1();
  if (degree < 0 || (degree == Rational(0) && line.has_isotropy())) return ForcedH0::known(0);
  if (degree == Rational(0)) return {ForcedH0::Kind::IndeterminateZeroOrOne, 0};

  // h1(L) = h0(L* K); when that is forced to vanish, h0 = chi.
  const LineVBundle partner = serre_partner(line);
  const Rational partner_degree = partner.c1();
  if (partner_degree < 0 || (partner_degree == Rational(0) && partner.has_isotropy())) {
    return ForcedH0::known(chi_line(line));
  }
  return {ForcedH0::Kind::Unknown, 0};
}

std::string to_string(ForcedH0::Kind kind) {
  switch (kind) {
    case ForcedH0::Kind::Known: return "known";
    case ForcedH0::Kind::IndeterminateZeroOrOne: return "zero_or_one";
    case ForcedH0::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace orbimod
