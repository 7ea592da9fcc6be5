#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "jzero/checked.hpp"
#include "jzero/laurent.hpp"
#include "jzero/rootdata.hpp"

namespace jzero {

// Full weight-multiplicity expansion.
struct FormalCharacter {
  std::map<Weight, std::int64_t> terms;

  void add(const Weight& w, std::int64_t c);
  std::int64_t total() const;
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;
};

namespace detail {
inline bool coeff_is_zero(std::int64_t c) { return c == 0; }
inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline std::int64_t coeff_mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline LaurentPoly coeff_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline std::int64_t coeff_add(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
inline LaurentPoly coeff_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
}  // namespace detail

// Combination of irreducible classes [V(lambda)], lambda dominant.
// Coeff = int64 gives R(G); Coeff = LaurentPoly gives R(G) ⊗ Z[v, v^-1].
template <class Coeff>
struct CharacterCombination {
  std::map<Weight, Coeff> terms;

  static CharacterCombination irreducible(const Weight& lambda, Coeff c = Coeff(1)) {
    if (!lambda.is_dominant()) throw std::invalid_argument("non-dominant highest weight " + lambda.to_string());
    CharacterCombination r;
    r.add(lambda, c);
    return r;
  }
  bool is_zero() const { return terms.empty(); }
  void add(const Weight& lambda, const Coeff& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, fresh] = terms.emplace(lambda, c);
    if (!fresh) {
      it->second = detail::coeff_add(it->second, c);
      if (detail::coeff_is_zero(it->second)) terms.erase(it);
    }
  }
  CharacterCombination& operator+=(const CharacterCombination& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  CharacterCombination& operator-=(const CharacterCombination& o) {
    for (const auto& [w, c] : o.terms) add(w, detail::coeff_mul(Coeff(-1), c));
    return *this;
  }
  friend CharacterCombination operator+(CharacterCombination a, const CharacterCombination& b) { return a += b; }
  friend CharacterCombination operator-(CharacterCombination a, const CharacterCombination& b) { return a -= b; }
  CharacterCombination scaled(const Coeff& k) const {
    CharacterCombination r;
    for (const auto& [w, c] : terms) r.add(w, detail::coeff_mul(k, c));
    return r;
  }
  Coeff coefficient(const Weight& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? Coeff(0) : it->second;
  }
  friend bool operator==(const CharacterCombination&, const CharacterCombination&) = default;
};

using VirtualCharacter = CharacterCombination<std::int64_t>;
using GradedCharacter = CharacterCombination<LaurentPoly>;

GradedCharacter to_graded(const VirtualCharacter& v);
GradedCharacter bar(const GradedCharacter& g);
std::string to_string(const VirtualCharacter& v);
std::string to_string(const GradedCharacter& g);

class RepresentationRing {
 public:
  explicit RepresentationRing(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }

  // Freudenthal; cached.
  const FormalCharacter& weyl_character(const Weight& lambda) const;
  // Weyl alternating sum divided exactly by the Weyl denominator.
  FormalCharacter weyl_character_alternating(const Weight& lambda) const;
  std::int64_t dim(const Weight& lambda) const;
  // Brauer-Klimyk; cached.
  const VirtualCharacter& tensor_decompose(const Weight& lambda, const Weight& nu) const;
  // Borel-Weil-Bott.
  VirtualCharacter euler_characteristic(const Weight& lambda) const;
  // Dot-action data: nullopt-like sign 0 if lambda + rho is singular; otherwise
  // (sign, mu) with chi(lambda) = sign [V(mu)].
  std::pair<int, Weight> bwb(const Weight& lambda) const;

  VirtualCharacter multiply(const VirtualCharacter& a, const VirtualCharacter& b) const;
  GradedCharacter multiply(const GradedCharacter& a, const GradedCharacter& b) const;
  // Greedy highest-weight peeling of a W-invariant formal character.
  VirtualCharacter decompose(FormalCharacter f) const;
  FormalCharacter character_of(const VirtualCharacter& v) const;
  // Dimension of a virtual character.
  std::int64_t dim(const VirtualCharacter& v) const;

  // Scaled invariant form: (a, b) = form(a, b) / form_scale().
  std::int64_t form(const Weight& a, const Weight& b) const;
  std::int64_t form_scale() const { return scale_; }
  // <lambda, 2 rho^vee>, strictly increasing along positive roots.
  int height(const Weight& lambda) const;

 private:
  FormalCharacter compute_character(const Weight& lambda) const;
  VirtualCharacter compute_tensor(const Weight& lambda, const Weight& nu) const;

  RootSystem rs_;
  IntMatrix gram_;  // scale * C^{-1}
  std::int64_t scale_ = 1;
  mutable std::mutex mu_;
  mutable std::map<Weight, FormalCharacter> char_cache_;
  mutable std::map<std::pair<Weight, Weight>, VirtualCharacter> tensor_cache_;
};

}  // namespace jzero
