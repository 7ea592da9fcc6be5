#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jzero/rootdata.hpp"

namespace jzero {

// t_lambda * w in W ⋉ P, P the weight lattice.
struct AffineElt {
  Weight translation;
  WeylElt finite;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.translation == b.translation && a.finite == b.finite;
  }
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.translation != b.translation) return a.translation < b.translation;
    return a.finite < b.finite;
  }
  // "t[1,0]·w[0,1]"
  std::string to_string() const;
  // Flat integer key: translation followed by the finite matrix.
  std::vector<int> key() const;
};

class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int needed_ball) : std::runtime_error(what), needed_ball_(needed_ball) {}
  int needed_ball() const { return needed_ball_; }

 private:
  int needed_ball_;
};

// Coxeter system on W ⋉ P. Generators 0..n-1 are the finite simple reflections;
// when affine, generator n is t_theta s_theta (theta the highest root).
class AffineWeyl {
 public:
  AffineWeyl(RootSystem rs, bool affine);
  // "A2~" affine, "A2" finite.
  static std::shared_ptr<const AffineWeyl> from_tag(const std::string& tag);

  const RootSystem& root_system() const { return rs_; }
  bool is_affine() const { return affine_; }
  std::string tag() const { return rs_.name() + (affine_ ? "~" : ""); }
  int num_generators() const { return rs_.rank() + (affine_ ? 1 : 0); }

  AffineElt identity() const;
  AffineElt generator(int i) const;
  AffineElt translation(const Weight& lambda) const;
  AffineElt from_finite(const WeylElt& w) const;

  AffineElt multiply(const AffineElt& a, const AffineElt& b) const;
  AffineElt inverse(const AffineElt& a) const;
  int length(const AffineElt& a) const;
  // Translation lies in the root lattice, i.e. a is in the Coxeter group.
  bool in_coxeter_part(const AffineElt& a) const;
  bool in_root_lattice(const Weight& lambda) const;

  AffineElt from_word(const std::vector<int>& word) const;
  // Canonical reduced word (strip smallest right descent). Throws for elements outside the Coxeter part.
  std::vector<int> reduced_word(const AffineElt& a) const;
  bool is_right_descent(const AffineElt& a, int s) const;
  bool is_left_descent(const AffineElt& a, int s) const;
  std::vector<int> descents_right(const AffineElt& a) const;
  std::vector<int> descents_left(const AffineElt& a) const;

  // Coxeter elements of length <= L sorted by (length, translation, finite word).
  std::vector<AffineElt> enumerate_ball(int L, std::size_t max_elements = 5'000'000) const;
  bool bruhat_leq(const AffineElt& y, const AffineElt& w) const;

  // Canonical form, "s0s1s0", "e", with '*' or '.' accepted in place of '·'.
  AffineElt parse(const std::string& text) const;
  std::string word_string(const AffineElt& a) const;

  // Deterministic order used by enumerate_ball (length first).
  bool canonical_less(const AffineElt& a, const AffineElt& b) const;

 private:
  RootSystem rs_;
  bool affine_;
  std::vector<AffineElt> gens_;
  IntMatrix root_lattice_inv_;  // scaled inverse Cartan for root-lattice test
  int root_lattice_scale_ = 1;
};

}  // namespace jzero
