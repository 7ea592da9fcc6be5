#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jzero/affine_weyl.hpp"
#include "jzero/hconst_table.hpp"
#include "jzero/matrix.hpp"
#include "jzero/repring.hpp"
#include "jzero/steinberg.hpp"

namespace jzero {

// Lowest-cell index: the element f_u^{-1} w0 t_chi f_v with f_u = u t_{x_u}.
struct C0Index {
  WeylElt u;
  Weight chi;
  WeylElt v;

  friend bool operator==(const C0Index& a, const C0Index& b) { return a.u == b.u && a.chi == b.chi && a.v == b.v; }
  friend bool operator<(const C0Index& a, const C0Index& b) {
    if (!(a.u == b.u)) return a.u.word.size() != b.u.word.size() ? a.u.word.size() < b.u.word.size() : a.u.word < b.u.word;
    if (a.chi != b.chi) return a.chi < b.chi;
    if (!(a.v == b.v)) return a.v.word.size() != b.v.word.size() ? a.v.word.size() < b.v.word.size() : a.v.word < b.v.word;
    return false;
  }
  // "(s0s1,[1,0],e)"
  std::string to_string() const;
};

template <class Coeff>
struct J0Combination {
  std::map<C0Index, Coeff> terms;

  static J0Combination basis(const C0Index& i) {
    J0Combination r;
    r.add(i, Coeff(1));
    return r;
  }
  bool is_zero() const { return terms.empty(); }
  void add(const C0Index& i, const Coeff& c) {
    if (detail::coeff_is_zero(c)) return;
    auto [it, fresh] = terms.emplace(i, c);
    if (!fresh) {
      it->second = detail::coeff_add(it->second, c);
      if (detail::coeff_is_zero(it->second)) terms.erase(it);
    }
  }
  J0Combination& operator+=(const J0Combination& o) {
    for (const auto& [i, c] : o.terms) add(i, c);
    return *this;
  }
  J0Combination scaled(const Coeff& k) const {
    J0Combination r;
    for (const auto& [i, c] : terms) r.add(i, detail::coeff_mul(k, c));
    return r;
  }
  Coeff coefficient(const C0Index& i) const {
    auto it = terms.find(i);
    return it == terms.end() ? Coeff(0) : it->second;
  }
  friend bool operator==(const J0Combination&, const J0Combination&) = default;
};

using J0Elt = J0Combination<std::int64_t>;
using J0AElt = J0Combination<LaurentPoly>;

// Xi's parameterization of the lowest two-sided cell and the based ring J0.
class LowestCell {
 public:
  LowestCell(std::shared_ptr<const AffineWeyl> group, std::shared_ptr<const RepresentationRing> rep);
  // Affine group and representation ring for a tag such as "A2" or "A2~".
  static std::shared_ptr<const LowestCell> from_tag(const std::string& tag);

  const AffineWeyl& group() const { return *group_; }
  const RepresentationRing& rep() const { return *rep_; }
  std::shared_ptr<const RepresentationRing> rep_ptr() const { return rep_; }
  const RootSystem& root_system() const { return rep_->root_system(); }
  int weyl_size() const { return root_system().weyl_size(); }

  // f_u = u t_{x_u}.
  const AffineElt& f(int u) const { return f_[static_cast<std::size_t>(u)]; }
  AffineElt c0_element(const C0Index& idx) const;
  std::optional<C0Index> c0_parameterize(const AffineElt& w, int bound) const;
  C0Index inverse(const C0Index& idx) const;
  bool in_coxeter_part(const C0Index& idx) const { return group_->in_coxeter_part(c0_element(idx)); }
  // All indices with chi coordinates <= bound; optionally only Coxeter elements.
  std::vector<C0Index> grid(int bound, bool coxeter_only) const;

  J0Elt multiply(const J0Elt& a, const J0Elt& b) const { return multiply_impl(a, b); }
  J0AElt multiply(const J0AElt& a, const J0AElt& b) const { return multiply_impl(a, b); }
  std::vector<C0Index> distinguished_involutions() const;
  J0Elt unit() const;
  // Basis elements t with t * t = t on the grid.
  std::vector<C0Index> idempotent_scan(int bound) const;

  RMatrix matrix_realization(const J0Elt& a) const;
  GradedMatrix matrix_realization(const J0AElt& a) const;

  C0Index parse_index(const std::string& text) const;

 private:
  template <class C>
  J0Combination<C> multiply_impl(const J0Combination<C>& a, const J0Combination<C>& b) const {
    J0Combination<C> out;
    for (const auto& [ia, ca] : a.terms)
      for (const auto& [ib, cb] : b.terms) {
        if (!(ia.v == ib.u)) continue;
        C k = detail::coeff_mul(ca, cb);
        for (const auto& [mu, m] : rep_->tensor_decompose(ia.chi, ib.chi).terms)
          out.add(C0Index{ia.u, mu, ib.v}, detail::coeff_mul(k, C(m)));
      }
    return out;
  }

  std::shared_ptr<const AffineWeyl> group_;
  std::shared_ptr<const RepresentationRing> rep_;
  std::vector<AffineElt> f_, f_inv_;
  WeylElt w0_;
};

struct GammaTriple {
  AffineElt x, y, z;
  C0Index ix, iy;
  std::optional<C0Index> iz;
  std::int64_t hecke = 0;  // gamma(x, y, z^{-1}, a) = coeff of v^{-a} in h_{x,y,z}
  std::int64_t xi = 0;     // coefficient of t_z in t_x t_y
  bool pass = true;
};

struct GammaReport {
  std::string type;
  int ball = 0;
  int chi_bound = 0;
  int a = 0;     // l(w0)
  int sign = 1;  // global sign (-1)^{l(w0)} applied to the Hecke side
  std::size_t c0_in_ball = 0;
  std::size_t pairs = 0;
  std::size_t compared = 0;
  std::vector<GammaTriple> triples;  // nonzero on either side
  std::vector<GammaTriple> mismatches;
  // t_d t_d coefficient of t_d under the unsigned Hecke-side gamma, per d.
  std::vector<std::int64_t> literal_td_square;
  bool pass = false;
};

// Compares Hecke-side gamma constants from the table with the Xi product on all
// lowest-cell pairs x, y of the ball with chi coordinates <= chi_bound.
GammaReport gamma_oracle_check(const HConstantTable& table, const ElementTable& elements, const LowestCell& cell, int chi_bound);

// [O(a) ⊠ O(b)] = sum c_{u,v} [F_u ⊠ G_v], by pairing with the dual family.
RMatrix expand_in_steinberg_basis(const SteinbergBasis& sb, const Weight& a, const Weight& b);
// Delta_* O(lambda) = sum_u (-1)^{l(u)} [O(lambda + x_u) ⊠ O(y_u)].
RMatrix diagonal_class(const SteinbergBasis& sb, const Weight& lambda);

}  // namespace jzero
