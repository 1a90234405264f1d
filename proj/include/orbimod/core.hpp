#pragma once

// Orbifold Riemann surfaces, divisors and topological line V-bundles.
//
// Everything here is a pure function of immutable values. Marked points are
// indexed from 0 in the C++ and Python APIs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbimod/rational.hpp"

namespace orbimod {

/// Closed surface of genus g with n >= 1 marked points of isotropy order >= 2.
class OrbifoldSurface {
 public:
  /// Throws DomainError on negative genus, an empty order list, an order < 2,
  /// or cone orders whose lcm exceeds kMaxOrderLcm.
  OrbifoldSurface(int genus, std::vector<int> cone_orders);

  static constexpr std::int64_t kMaxOrderLcm = std::int64_t{1} << 24;

  int genus() const noexcept { return genus_; }
  const std::vector<int>& cone_orders() const noexcept { return orders_; }
  std::size_t num_points() const noexcept { return orders_.size(); }
  int order(std::size_t i) const { return orders_.at(i); }

  /// 2 - 2g - n + sum 1/alpha_i.
  const Rational& euler_characteristic() const noexcept { return chi_; }
  bool hyperbolic() const noexcept { return chi_ < 0; }

  friend bool operator==(const OrbifoldSurface& a, const OrbifoldSurface& b) {
    return a.genus_ == b.genus_ && a.orders_ == b.orders_;
  }

 private:
  int genus_;
  std::vector<int> orders_;
  Rational chi_;
};

OrbifoldSurface make_surface(int genus, std::vector<int> cone_orders);
Rational euler_characteristic(const OrbifoldSurface& surface);

/// Topological line V-bundle: c1 = b + sum y_i / alpha_i with 0 <= y_i < alpha_i.
class LineVBundle {
 public:
  /// Requires 0 <= y_i < alpha_i and one entry per marked point.
  LineVBundle(OrbifoldSurface surface, std::int64_t b, std::vector<int> y);

  /// Accepts any integer isotropy and pushes the carries into b.
  static LineVBundle normalized(OrbifoldSurface surface, std::int64_t b,
                                const std::vector<std::int64_t>& raw_y);
  static LineVBundle trivial(const OrbifoldSurface& surface);

  const OrbifoldSurface& surface() const noexcept { return surface_; }
  std::int64_t b() const noexcept { return b_; }
  const std::vector<int>& y() const noexcept { return y_; }
  int y(std::size_t i) const { return y_.at(i); }

  Rational c1() const;
  /// sum y_i / alpha_i
  Rational isotropy_sum() const;
  bool has_isotropy() const;
  bool is_trivial() const { return b_ == 0 && !has_isotropy(); }

  friend bool operator==(const LineVBundle& a, const LineVBundle& b) {
    return a.surface_ == b.surface_ && a.b_ == b.b_ && a.y_ == b.y_;
  }

 private:
  OrbifoldSurface surface_;
  std::int64_t b_;
  std::vector<int> y_;
};

LineVBundle canonical_bundle(const OrbifoldSurface& surface);
/// Throws DomainError when the surfaces differ.
LineVBundle tensor(const LineVBundle& a, const LineVBundle& b);
LineVBundle dual(const LineVBundle& line);
LineVBundle power(const LineVBundle& line, std::int64_t k);
/// L_i, the bundle of the divisor p_i / alpha_i. Throws on a bad index.
LineVBundle point_bundle(const OrbifoldSurface& surface, std::size_t i);

/// Divisor sum n_p / alpha_p . p, with alpha_p = 1 off the marked set.
/// Zero coefficients are never stored.
class Divisor {
 public:
  explicit Divisor(OrbifoldSurface surface);

  /// Adds n . p_i / alpha_i at marked point i.
  Divisor& add_marked(std::size_t i, std::int64_t n);
  /// Adds n . q at an ordinary (unmarked) point named by `label`.
  Divisor& add_ordinary(const std::string& label, std::int64_t n);

  const OrbifoldSurface& surface() const noexcept { return surface_; }
  const std::map<std::size_t, std::int64_t>& marked() const noexcept { return marked_; }
  const std::map<std::string, std::int64_t>& ordinary() const noexcept { return ordinary_; }

  Rational degree() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.surface_ == b.surface_ && a.marked_ == b.marked_ && a.ordinary_ == b.ordinary_;
  }

 private:
  OrbifoldSurface surface_;
  std::map<std::size_t, std::int64_t> marked_;
  std::map<std::string, std::int64_t> ordinary_;
};

LineVBundle divisor_to_bundle(const Divisor& divisor);

/// Degree of the underlying smooth line bundle L (x) L_1^{-y_1} ... ; always an integer.
std::int64_t smooth_line_bundle(const LineVBundle& line);

/// h0 - h1 = 1 - g + c1(L) - sum y_i / alpha_i.
std::int64_t chi_line(const LineVBundle& line);

/// L* K, the bundle whose sections compute H^1(L) by duality.
LineVBundle serre_partner(const LineVBundle& line);

/// What topology alone says about h0(L).
struct ForcedH0 {
  enum class Kind { Known, IndeterminateZeroOrOne, Unknown };
  Kind kind = Kind::Unknown;
  std::int64_t value = 0;  // meaningful for Known only

  static ForcedH0 known(std::int64_t v) { return {Kind::Known, v}; }
  friend bool operator==(const ForcedH0&, const ForcedH0&) = default;
};

ForcedH0 h0_forced(const LineVBundle& line);

std::string to_string(ForcedH0::Kind kind);

}  // namespace orbimod
