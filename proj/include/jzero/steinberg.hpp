#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jzero/matrix.hpp"
#include "jzero/repring.hpp"

namespace jzero {

using PairingMatrix = RMatrix;

// x_w = w^{-1}(sum of fundamental weights w_i with w^{-1}(alpha_i) < 0).
Weight steinberg_weight(const RootSystem& rs, const WeylElt& w);

struct NondegeneracyReport {
  bool unit_pivots = false;  // elimination succeeded with ±triv pivots
  VirtualCharacter det;
  bool det_is_unit = false;
  bool is_identity = false;
};

struct DualCorrectionReport {
  std::vector<int> column_e_units;  // w with <F_w, G_e> = ±triv
  int sigma = -1;                   // weyl index, -1 if not found
  std::string sigma_word;
  std::vector<int> sigma_one_line;
  // Literal clause: <F_w, G_e> = triv for exactly two w.
  bool exactly_two_triv = false;
  std::vector<bool> per_w_pass;  // <F_w, G_e + G_sigma> = delta_{w,e} triv
  bool correction_holds = false;
};

// Steinberg's basis x_w, the candidate dual y_w (shift l(w)), and their pairing.
// Rows and columns follow RootSystem::enumerate_weyl().
class SteinbergBasis {
 public:
  explicit SteinbergBasis(std::shared_ptr<const RepresentationRing> rep);

  const RepresentationRing& rep() const { return *rep_; }
  const RootSystem& root_system() const { return rep_->root_system(); }
  int size() const { return root_system().weyl_size(); }

  Weight steinberg_weight(const WeylElt& w) const;
  std::pair<Weight, int> dual_weight(const WeylElt& w) const;
  const Weight& x(int i) const { return x_[static_cast<std::size_t>(i)]; }
  const Weight& y(int i) const { return y_[static_cast<std::size_t>(i)]; }
  int shift(int i) const { return shift_[static_cast<std::size_t>(i)]; }

  // (-1)^{l(v)} chi(x_w + y_v).
  VirtualCharacter pairing(const WeylElt& w, const WeylElt& v) const;
  VirtualCharacter pairing(int w, int v) const;
  const PairingMatrix& pairing_matrix() const { return matrix_; }
  // Inverse via unit pivots; throws if the elimination cannot be done with ±triv pivots.
  const PairingMatrix& inverse_pairing_matrix() const;

  NondegeneracyReport nondegeneracy_check() const;
  // Rank 3 only.
  DualCorrectionReport verify_dual_correction() const;

 private:
  std::shared_ptr<const RepresentationRing> rep_;
  std::vector<Weight> x_, y_;
  std::vector<int> shift_;
  PairingMatrix matrix_;
  mutable std::optional<PairingMatrix> inverse_;
};

}  // namespace jzero
