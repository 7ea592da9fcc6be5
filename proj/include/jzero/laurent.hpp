#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jzero {

// Element of Z[v, v^-1] with v = q^{1/2}. Dense coefficient vector starting at
// exponent lo_; both ends nonzero, or empty for zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: implicit integer embedding

  static LaurentPoly monomial(std::int64_t coeff, int exp);
  static LaurentPoly v(int exp = 1) { return monomial(1, exp); }
  // Polynomial in q as a Laurent polynomial in v: q^i -> v^{2i}.
  static LaurentPoly from_q_coeffs(const std::vector<std::int64_t>& coeffs);

  bool is_zero() const { return c_.empty(); }
  // Precondition: nonzero.
  int min_exponent() const { return lo_; }
  int max_exponent() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient_of(int exp) const;
  std::map<int, std::int64_t> coeffs() const;
  std::size_t term_count() const;

  LaurentPoly bar() const;
  bool in_A_plus() const { return is_zero() || lo_ >= 0; }
  // Multiply by v^k.
  LaurentPoly shifted(int k) const;
  // Substitute v -> v^k (k may be negative).
  LaurentPoly substitute_power(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  // *this += a * b without a temporary.
  void add_mul(const LaurentPoly& a, const LaurentPoly& b);
  // *this += k * a * v^shift.
  void add_scaled(const LaurentPoly& a, std::int64_t k, int shift);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  // "3*v^-1 + 2 + v^4", ascending exponents; "0" for zero.
  std::string to_string(char var = 'v') const;
  // Accepts to_string output plus spaces, "v^1", explicit "1*", and repeated exponents.
  static LaurentPoly parse(std::string_view text, char var = 'v');

  const std::vector<std::int64_t>& raw() const { return c_; }

 private:
  void normalize();
  void reserve_range(int lo, int hi);

  int lo_ = 0;
  std::vector<std::int64_t> c_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar(const LaurentPoly& a);
bool in_A_plus(const LaurentPoly& a);
std::int64_t coefficient_of(const LaurentPoly& a, int exp);

}  // namespace jzero
