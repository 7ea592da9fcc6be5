#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "jzero/hecke.hpp"
#include "jzero/j0.hpp"
#include "jzero/steinberg.hpp"

namespace jzero {

// Lusztig's map phi0: H -> J0 ⊗ A, phi0(C_w) = sum over d in D, z in c0 of h_{w,d,z} t_z.
// Only Coxeter-part elements are reachable; lengths are bounded by the table radius.
class Phi0 {
 public:
  Phi0(std::shared_ptr<const HeckeAlgebra> H, std::shared_ptr<const LowestCell> cell);

  const HeckeAlgebra& hecke() const { return *H_; }
  const LowestCell& cell() const { return *cell_; }
  // Largest l(w) for which phi0(C_w) fits in the table.
  int max_length() const { return H_->table().max_length() - max_d_length_; }

  // Throws TruncationError naming the radius needed when l(w) > max_length().
  const J0AElt& of_c_basis(int w) const;
  J0AElt of_element(const HeckeElt& h) const;
  GradedMatrix matrix(const HeckeElt& h) const { return cell_->matrix_realization(of_element(h)); }

 private:
  std::shared_ptr<const HeckeAlgebra> H_;
  std::shared_ptr<const LowestCell> cell_;
  std::vector<int> d_ids_;
  int max_d_length_ = 0;
  int z_bound_ = 0;
  mutable std::mutex mu_;
  mutable std::map<int, J0AElt> cache_;
};

// theta(lambda) for root-lattice lambda, in the T basis: v^{-l(t_mu)} T_{t_mu} for dominant mu,
// theta(mu) theta(nu)^{-1} with mu, nu dominant in general.
HeckeElt theta(const HeckeAlgebra& H, const Weight& lambda);

struct MultiplicativityReport {
  int max_length = 0;
  std::size_t pairs = 0;
  std::vector<std::string> failures;  // "x * y"
  bool pass() const { return pairs > 0 && failures.empty(); }
};

// phi0(C_x) phi0(C_y) == phi0(C_x C_y) for all x, y of length <= max_length.
MultiplicativityReport check_multiplicative(const Phi0& phi, int max_length);

struct Sl2Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Sl2Report {
  bool conjugator_found = false;
  LaurentPoly conjugator;  // A = diag(1, conjugator)
  std::vector<Sl2Check> checks;
  bool pass() const;
};

// Matrix-image checks for type A1: theta images against diagonal classes, the finite
// Coxeter generator, the quadratic and Bernstein relations, and multiplicativity.
Sl2Report sl2_check(const Phi0& phi, const SteinbergBasis& sb, int mult_max_length);

std::string to_string(const GradedMatrix& m);

}  // namespace jzero
