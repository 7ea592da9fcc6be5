#include "jzero/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "jzero/checked.hpp"

namespace jzero {

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) c_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) {
    p.lo_ = exp;
    p.c_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_q_coeffs(const std::vector<std::int64_t>& coeffs) {
  LaurentPoly p;
  if (coeffs.empty()) return p;
  p.c_.assign(2 * coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.c_[2 * i] = coeffs[i];
  p.normalize();
  return p;
}

std::int64_t LaurentPoly::coefficient_of(int exp) const {
  if (c_.empty() || exp < lo_ || exp > max_exponent()) return 0;
  return c_[static_cast<std::size_t>(exp - lo_)];
}

std::map<int, std::int64_t> LaurentPoly::coeffs() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace(lo_ + static_cast<int>(i), c_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](std::int64_t x) { return x != 0; }));
}

void LaurentPoly::normalize() {
  std::size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  if (b == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t e = c_.size();
  while (c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(e), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
  }
  lo_ += static_cast<int>(b);
}

void LaurentPoly::reserve_range(int lo, int hi) {
  if (c_.empty()) {
    lo_ = lo;
    c_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    return;
  }
  int cur_hi = max_exponent();
  if (lo < lo_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), 0);
    lo_ = lo;
  }
  if (hi > cur_hi) c_.resize(c_.size() + static_cast<std::size_t>(hi - cur_hi), 0);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (c_.empty()) return p;
  p.lo_ = -max_exponent();
  p.c_.assign(c_.rbegin(), c_.rend());
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.c_.empty()) p.lo_ += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) {
    std::int64_t s = 0;
    for (auto x : c_) s = checked_add(s, x);
    return LaurentPoly(s);
  }
  LaurentPoly p;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p += monomial(c_[i], k * (lo_ + static_cast<int>(i)));
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1, 0);
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& a, std::int64_t k, int shift) {
  if (a.c_.empty() || k == 0) return;
  int lo = a.lo_ + shift;
  reserve_range(lo, a.max_exponent() + shift);
  std::size_t off = static_cast<std::size_t>(lo - lo_);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c_[off + i] = checked_add(c_[off + i], checked_mul(k, a.c_[i]));
  normalize();
}

void LaurentPoly::add_mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  reserve_range(a.lo_ + b.lo_, a.max_exponent() + b.max_exponent());
  std::size_t off = static_cast<std::size_t>(a.lo_ + b.lo_ - lo_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c_[off + i + j] = checked_add(c_[off + i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.add_mul(a, b);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = checked_sub(0, x);
  return p;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
  return a.c_ < b.c_;
}

std::string LaurentPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    int e = lo_ + static_cast<int>(i);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const char* why) {
  throw std::invalid_argument("cannot parse Laurent polynomial '" + std::string(text) + "': " + why);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_fail(text, "empty");
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& val) {
    std::size_t start = i;
    std::int64_t r = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      r = checked_add(checked_mul(r, 10), s[i++] - '0');
    if (i > start) val = r;
    return i > start;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      parse_fail(text, "expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool has_coeff = read_int(coeff);
    int exp = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == var)) {
      if (s[i] == '*') {
        if (!has_coeff) parse_fail(text, "dangling '*'");
        ++i;
      }
      if (i >= s.size() || s[i] != var) parse_fail(text, "expected variable");
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
        std::int64_t e = 0;
        if (!read_int(e)) parse_fail(text, "missing exponent");
        exp = static_cast<int>(esign * e);
      }
    } else if (!has_coeff) {
      parse_fail(text, "empty term");
    }
    out += monomial(sign * coeff, exp);
  }
  return out;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }
bool in_A_plus(const LaurentPoly& a) { return a.in_A_plus(); }
std::int64_t coefficient_of(const LaurentPoly& a, int exp) { return a.coefficient_of(exp); }

}  // namespace jzero
