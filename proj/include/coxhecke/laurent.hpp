#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxhecke {

using Int = boost::multiprecision::cpp_int;

/*
  Integer Laurent polynomials in one indeterminate v.

  Terms are kept sparse, sorted by exponent ascending, with no zero
  coefficients stored. Values are immutable in spirit: every operation
  returns a fresh normalized value, so they can be shared freely.
*/
class LaurentPoly {
public:
  using Term = std::pair<int, Int>;  // (exponent, coefficient)

  LaurentPoly() = default;
  explicit LaurentPoly(Int constant) {
    if (constant != 0) terms_.emplace_back(0, std::move(constant));
  }
  LaurentPoly(Int coeff, int exp) {
    if (coeff != 0) terms_.emplace_back(exp, std::move(coeff));
  }
  // Takes arbitrary (exp, coeff) pairs, merges and normalizes.
  static LaurentPoly from_terms(std::vector<Term> terms);

  static const LaurentPoly& zero();
  static const LaurentPoly& one();
  // v^n
  static LaurentPoly monomial(int n) { return LaurentPoly(Int(1), n); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  const std::vector<Term>& terms() const { return terms_; }

  // Coefficient of v^n; 0 if absent.
  const Int& coeff(int n) const;

  // (min exponent, max exponent) with nonzero coefficient; nullopt for 0.
  std::optional<std::pair<int, int>> degree_window() const;
  // Max exponent; requires nonzero.
  int max_exp() const { return terms_.back().first; }
  int min_exp() const { return terms_.front().first; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  // Arbitrary total order, usable as a map key.
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // v^n -> v^-n (ring involution).
  LaurentPoly bar() const;
  // Multiply by v^n.
  LaurentPoly shifted(int n) const;
  LaurentPoly scaled(const Int& c) const;

  // Terms with exponent > 0 (resp. < 0, == 0 kept as constant).
  LaurentPoly positive_part() const;
  LaurentPoly negative_part() const;

  bool all_coeffs_nonnegative() const;
  // True iff every exponent is strictly negative (zero poly qualifies).
  bool in_A_neg() const { return terms_.empty() || max_exp() < 0; }
  // True iff every exponent is <= bound.
  bool bounded_above_by(int bound) const {
    return terms_.empty() || max_exp() <= bound;
  }

  // "a*v^n + ..." with exponents descending, e.g. "v^2 - 2*v^-1 + 3".
  std::string str() const;
  // Parses the same form. Throws Error(BadInput) on malformed text.
  static LaurentPoly parse(const std::string& text);

private:
  std::vector<Term> terms_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  return p.scaled(c);
}

/*
  Integer polynomials in two independent indeterminates v, v'. Just enough
  arithmetic for identities that genuinely need a second variable.
*/
class BiLaurentPoly {
public:
  using Key = std::pair<int, int>;  // (exponent of v, exponent of v')
  using Term = std::pair<Key, Int>;

  BiLaurentPoly() = default;

  static BiLaurentPoly from_v(const LaurentPoly& p);
  static BiLaurentPoly from_vprime(const LaurentPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  BiLaurentPoly operator+(const BiLaurentPoly& o) const;
  BiLaurentPoly operator-(const BiLaurentPoly& o) const;
  BiLaurentPoly operator*(const BiLaurentPoly& o) const;
  BiLaurentPoly& operator+=(const BiLaurentPoly& o) {
    return *this = *this + o;
  }
  BiLaurentPoly& operator-=(const BiLaurentPoly& o) {
    return *this = *this - o;
  }
  bool operator==(const BiLaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiLaurentPoly& o) const { return !(*this == o); }

  std::string str() const;

private:
  static BiLaurentPoly from_sorted(std::vector<Term> terms);
  std::vector<Term> terms_;
};

}  // namespace coxhecke
