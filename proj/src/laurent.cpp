#include "knotminer/laurent.hpp"

#include <cstdlib>
#include <limits>
#include <vector>

#include "knotminer/error.hpp"

namespace knotminer {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in addition");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Laurent coefficient overflow in multiplication");
  return r;
}

int checked_exp_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Laurent exponent overflow");
  return r;
}

void accumulate(LaurentPoly::Terms& terms, int e, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, c);
  }
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) { return LaurentPoly(Terms{{exponent, c}}); }

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw RangeError("zero polynomial has no minimum exponent");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw RangeError("zero polynomial has no maximum exponent");
  return terms_.rbegin()->first;
}

int LaurentPoly::span() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first - terms_.begin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, checked_mul(c, -1));
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      accumulate(out.terms_, checked_exp_add(ea, eb), checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::inverted() const { return scaled_exponents(-1); }

LaurentPoly LaurentPoly::scaled_exponents(int factor) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    int scaled;
    if (__builtin_mul_overflow(e, factor, &scaled)) throw OverflowError("Laurent exponent overflow");
    out.terms_.emplace(scaled, c);
  }
  return out;
}

LaurentPoly::Coeff LaurentPoly::evaluate_at_minus_one() const {
  Coeff sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, (e % 2 == 0) ? c : checked_mul(c, -1));
  return sum;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    // |c| is safe to print through unsigned arithmetic even for INT64_MIN.
    const auto magnitude = negative ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += var;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw RangeError("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly{};
  if (p.span() < q.span()) return std::nullopt;

  const int q_low = q.min_exponent();
  const Coeff q_lead = q.coeff(q_low);
  const int q_span = q.span();
  const int p_low = p.min_exponent();
  const int p_span = p.span();

  // Dense working copy, indexed from p's lowest exponent.
  std::vector<Coeff> rem(static_cast<std::size_t>(p_span) + 1, 0);
  for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - p_low)] = c;
  std::vector<std::pair<int, Coeff>> q_terms(q.terms().begin(), q.terms().end());

  LaurentPoly::Terms quotient;
  for (int k = 0; k + q_span <= p_span; ++k) {
    const Coeff c = rem[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (c % q_lead != 0) return std::nullopt;
    const Coeff factor = c / q_lead;
    quotient.emplace(p_low + k - q_low, factor);
    for (const auto& [e, qc] : q_terms) {
      auto& slot = rem[static_cast<std::size_t>(k + (e - q_low))];
      Coeff sub;
      if (__builtin_mul_overflow(factor, qc, &sub) || __builtin_sub_overflow(slot, sub, &slot)) {
        throw OverflowError("Laurent coefficient overflow in division");
      }
    }
  }
  for (const auto c : rem) {
    if (c != 0) return std::nullopt;
  }
  return LaurentPoly(std::move(quotient));
}

}  // namespace knotminer
