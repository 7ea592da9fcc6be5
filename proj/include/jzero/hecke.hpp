#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jzero/kl.hpp"
#include "jzero/laurent.hpp"

namespace jzero {

// Signed: C_w = sum_y (-1)^{l(w)-l(y)} v^{l(w)-2l(y)} P_{y,w}(v^-2) T_y.
// Positive: C'_w = v^{-l(w)} sum_y P_{y,w}(v^2) T_y. Debugging only.
enum class Convention { Signed, Positive };
enum class Basis { T, C };

std::string to_string(Convention c);

struct HeckeElt {
  Basis basis = Basis::T;
  std::map<AffineElt, LaurentPoly> terms;

  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;
};

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using DenseVec = std::vector<LaurentPoly>;
using SparseVec = std::vector<std::pair<int, LaurentPoly>>;

// Hecke algebra restricted to a finite Coxeter ball. Products that leave the
// ball throw TruncationError carrying the radius that would be needed.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const KLTable> kl, Convention conv = Convention::Signed);
  static std::shared_ptr<const HeckeAlgebra> build(const std::string& tag, int max_length,
                                                    Convention conv = Convention::Signed);

  const ElementTable& table() const { return kl_->table(); }
  const KLTable& kl() const { return *kl_; }
  const AffineWeyl& group() const { return table().group(); }
  Convention convention() const { return conv_; }
  int size() const { return table().size(); }

  // Dense vectors indexed by table id.
  DenseVec zero() const { return DenseVec(static_cast<std::size_t>(size())); }
  DenseVec unit_vector(int w, const LaurentPoly& c = LaurentPoly(1)) const;
  void right_mul_Ts(DenseVec& a, int s) const;
  void left_mul_Ts(DenseVec& a, int s) const;
  void right_mul_Ts_inverse(DenseVec& a, int s) const;
  DenseVec t_multiply(const DenseVec& a, const DenseVec& b) const;
  // C_w (or C'_w) in the T basis.
  const SparseVec& c_in_t(int w) const { return c_in_t_[static_cast<std::size_t>(w)]; }
  DenseVec c_to_t(const DenseVec& c) const;
  DenseVec t_to_c(DenseVec t) const;
  // T_w^{-1} in the T basis.
  DenseVec t_inverse(int w) const;
  DenseVec bar_t(const DenseVec& a) const;
  // {(z, h_{x,y,z})}: C_x C_y in the C basis via T multiplication.
  SparseVec h_constants(int x, int y) const;

  // Element-level API.
  DenseVec to_dense(const HeckeElt& h) const;
  HeckeElt from_dense(const DenseVec& d, Basis b) const;
  HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt c_basis(const AffineElt& w) const;
  HeckeElt to_c_basis(const HeckeElt& h) const;
  HeckeElt to_t_basis(const HeckeElt& h) const;
  HeckeElt bar(const HeckeElt& h) const;
  std::map<AffineElt, LaurentPoly> h_constants(const AffineElt& x, const AffineElt& y) const;
  LaurentPoly kl_polynomial(const AffineElt& y, const AffineElt& w) const { return kl_->kl_polynomial(y, w); }
  // Coefficient of v^{-a_z} in h_{x,y,z^{-1}}.
  std::int64_t gamma(const AffineElt& x, const AffineElt& y, const AffineElt& z, int a_z) const;

 private:
  void check_ball(int needed) const;

  std::shared_ptr<const KLTable> kl_;
  Convention conv_;
  std::vector<SparseVec> c_in_t_;
};

}  // namespace jzero
