#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gromov/lattice.hpp"

namespace gromov {

/// Label (sign, i) of a regular embedded torus: the sign of the untwisted
/// determinant and the number i of negative twisted determinants.
class TorusLabel {
public:
  constexpr TorusLabel(bool positive, int twisted)
      : positive_(positive), twisted_(twisted) {}

  /// "+0" .. "+3", "-0" .. "-3"; the Unicode minus is also accepted.
  static TorusLabel parse(std::string_view text);
  static const std::array<TorusLabel, 8> &all();

  constexpr bool positive() const noexcept { return positive_; }
  constexpr int twisted() const noexcept { return twisted_; }
  constexpr TorusLabel opposite() const noexcept {
    return TorusLabel(!positive_, twisted_);
  }

  std::string str() const;

  friend constexpr bool operator==(TorusLabel, TorusLabel) = default;

private:
  bool positive_;
  int twisted_;
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N with exact integer
/// coefficients. Binary operations on series of different orders truncate to
/// the smaller order.
class TruncSeries {
public:
  /// The zero series of order N.
  explicit TruncSeries(std::size_t order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncSeries(std::vector<BigInt> coeffs, std::size_t order);

  static TruncSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<BigInt> &coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero above the order is not an answer, so k > order
  /// throws.
  const BigInt &coeff(std::size_t k) const;

  TruncSeries truncated(std::size_t order) const;

  friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
  friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
  friend bool operator==(const TruncSeries &a, const TruncSeries &b) = default;

  std::string str() const;

private:
  std::vector<BigInt> coeffs_;
};

TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b);
/// Multiplicative inverse; the constant term must be +1 or -1.
TruncSeries series_inverse(const TruncSeries &a);
/// sum c_k t^k  ->  sum c_k t^(k m), truncated to the same order; m >= 1.
TruncSeries substitute_power(const TruncSeries &a, int m);
BigInt coeff(const TruncSeries &a, std::size_t k);

/// Expansion of the generating function attached to a torus label, to order N:
///   f(+,0) = 1/(1-t),  f(+,1) = 1+t,  f(+,2) = (1+t)/(1+t^2),
///   f(+,3) = (1+t)(1-t^2)/(1+t^2),  f(-,i) = 1/f(+,i).
TruncSeries f_series(TorusLabel label, std::size_t order);

/// One embedded torus: its label and the multiple m of the primitive class
/// it represents.
struct TorusEntry {
  TorusLabel label{true, 0};
  Int cover = 1;

  friend bool operator==(const TorusEntry &, const TorusEntry &) = default;
};

/// Coefficient of t^k in the product over all listed tori of
/// f_label(t^cover). The empty list counts 1 at k = 0 and 0 otherwise.
BigInt gr_torus_class(const std::vector<TorusEntry> &tori, Int k);

/// "+0,+0,-1:2" style lists; an entry without ":m" has cover 1.
std::vector<TorusEntry> parse_torus_list(std::string_view text);

} // namespace gromov
