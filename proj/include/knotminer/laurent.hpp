#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace knotminer {

/// Exact Laurent polynomial with 64-bit integer coefficients.
///
/// Only nonzero coefficients are stored, so structural equality is
/// polynomial equality. Every arithmetic operation checks for overflow and
/// throws OverflowError rather than wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(Coeff c, int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const noexcept;
  int min_exponent() const;
  int max_exponent() const;
  /// max_exponent - min_exponent; zero for monomials and for the zero polynomial.
  int span() const noexcept;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly pow(unsigned n) const;

  /// Substitutes x -> x^-1.
  LaurentPoly inverted() const;

  /// Multiplies every exponent by `factor` (e.g. -4 for t = A^-4 bookkeeping).
  LaurentPoly scaled_exponents(int factor) const;

  /// Value at x = -1.
  Coeff evaluate_at_minus_one() const;

  /// Text form with ascending exponents, e.g. `t + t^3 - t^4`, `-t^-2 + 2t`.
  std::string to_string(std::string_view var = "t") const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Exact quotient p / q, or nullopt when q does not divide p in Z[x, x^-1].
/// Throws RangeError when q is zero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace knotminer
