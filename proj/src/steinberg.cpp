#include "jzero/steinberg.hpp"

#include <stdexcept>

namespace jzero {

VirtualCharacter triv(int rank) { return VirtualCharacter::irreducible(Weight::zero(rank)); }

RMatrix identity_rmatrix(int n, int rank) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = triv(rank);
  return m;
}

GradedMatrix identity_gmatrix(int n, int rank) { return to_graded(identity_rmatrix(n, rank)); }

GradedMatrix to_graded(const RMatrix& m) {
  GradedMatrix g(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g(i, j) = to_graded(m(i, j));
  return g;
}

int unit_sign(const VirtualCharacter& v) {
  if (v.terms.size() != 1) return 0;
  const auto& [w, c] = *v.terms.begin();
  if (!w.is_zero() || (c != 1 && c != -1)) return 0;
  return static_cast<int>(c);
}

UnitPivotResult unit_pivot_invert(const RepresentationRing& R, const RMatrix& m0) {
  int n = m0.rows();
  if (n != m0.cols()) throw std::invalid_argument("unit_pivot_invert needs a square matrix");
  int rank = R.rank();
  RMatrix m = m0, inv = identity_rmatrix(n, rank);
  UnitPivotResult res;
  std::int64_t det_sign = 1;
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n && p < 0; ++r)
      if (unit_sign(m(r, col)) != 0) p = r;
    if (p < 0) return res;
    if (p != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
      det_sign = -det_sign;
    }
    int s = unit_sign(m(col, col));
    det_sign *= s;
    // Normalize pivot row to triv.
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j).scaled(s);
      inv(col, j) = inv(col, j).scaled(s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      VirtualCharacter f = m(r, col);
      for (int j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= R.multiply(f, m(col, j));
        if (!inv(col, j).is_zero()) inv(r, j) -= R.multiply(f, inv(col, j));
      }
    }
  }
  res.ok = true;
  res.det = triv(rank).scaled(det_sign);
  res.inverse = std::move(inv);
  return res;
}

SteinbergBasis::SteinbergBasis(std::shared_ptr<const RepresentationRing> rep) : rep_(std::move(rep)) {
  const RootSystem& rs = root_system();
  for (const auto& w : rs.enumerate_weyl()) {
    x_.push_back(steinberg_weight(w));
    auto [y, s] = dual_weight(w);
    y_.push_back(y);
    shift_.push_back(s);
  }
  int n = size();
  matrix_ = PairingMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) matrix_(i, j) = pairing(i, j);
}

Weight SteinbergBasis::steinberg_weight(const WeylElt& w) const { return jzero::steinberg_weight(root_system(), w); }

Weight steinberg_weight(const RootSystem& rs, const WeylElt& w) {
  WeylElt wi = rs.inverse(w);
  Weight sum = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.root_sign(wi.act(rs.simple_root(i))) < 0) sum[i] += 1;
  return wi.act(sum);
}

std::pair<Weight, int> SteinbergBasis::dual_weight(const WeylElt& w) const {
  const RootSystem& rs = root_system();
  WeylElt wi = rs.inverse(w);
  Weight sum = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.root_sign(wi.act(rs.simple_root(i))) > 0) sum[i] += 1;
  return {wi.act(sum) - rs.rho(), w.length()};
}

VirtualCharacter SteinbergBasis::pairing(const WeylElt& w, const WeylElt& v) const {
  auto [y, shift] = dual_weight(v);
  return rep_->euler_characteristic(steinberg_weight(w) + y).scaled(shift % 2 ? -1 : 1);
}

VirtualCharacter SteinbergBasis::pairing(int w, int v) const {
  return rep_->euler_characteristic(x(w) + y(v)).scaled(shift(v) % 2 ? -1 : 1);
}

const PairingMatrix& SteinbergBasis::inverse_pairing_matrix() const {
  if (!inverse_) {
    auto r = unit_pivot_invert(*rep_, matrix_);
    if (!r.ok) throw std::logic_error("pairing matrix could not be inverted with unit pivots");
    inverse_ = std::move(r.inverse);
  }
  return *inverse_;
}

NondegeneracyReport SteinbergBasis::nondegeneracy_check() const {
  NondegeneracyReport rep;
  auto r = unit_pivot_invert(*rep_, matrix_);
  rep.unit_pivots = r.ok;
  if (r.ok) {
    rep.det = r.det;
    rep.det_is_unit = unit_sign(r.det) != 0;
  }
  rep.is_identity = matrix_ == identity_rmatrix(size(), root_system().rank());
  return rep;
}

DualCorrectionReport SteinbergBasis::verify_dual_correction() const {
  const RootSystem& rs = root_system();
  if (rs.rank() != 3) throw std::invalid_argument("verify_dual_correction applies to rank 3 only");
  DualCorrectionReport rep;
  int n = size();
  int triv_count = 0;
  for (int w = 0; w < n; ++w) {
    int s = unit_sign(matrix_(w, 0));
    if (s != 0) rep.column_e_units.push_back(w);
    if (s == 1) ++triv_count;
  }
  rep.exactly_two_triv = triv_count == 2;
  for (int w : rep.column_e_units)
    if (w != 0) {
      rep.sigma = w;
      break;
    }
  if (rep.sigma < 0) return rep;
  const WeylElt& sig = rs.enumerate_weyl()[static_cast<std::size_t>(rep.sigma)];
  rep.sigma_word = sig.word_string();
  rep.sigma_one_line = rs.one_line(sig);
  rep.correction_holds = true;
  VirtualCharacter one = triv(rs.rank());
  for (int w = 0; w < n; ++w) {
    VirtualCharacter v = matrix_(w, 0) + matrix_(w, rep.sigma);
    bool ok = w == 0 ? v == one : v.is_zero();
    rep.per_w_pass.push_back(ok);
    rep.correction_holds = rep.correction_holds && ok;
  }
  return rep;
}

}  // namespace jzero
