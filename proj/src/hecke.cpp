#include "jzero/hecke.hpp"

#include <algorithm>

namespace jzero {

std::string to_string(Convention c) { return c == Convention::Signed ? "signed" : "positive"; }

namespace {

const LaurentPoly kQ = LaurentPoly::v(2);
const LaurentPoly kQm1 = LaurentPoly::v(2) - LaurentPoly(1);
const LaurentPoly kQinv = LaurentPoly::v(-2);
const LaurentPoly kQinvM1 = LaurentPoly::v(-2) - LaurentPoly(1);

}  // namespace

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const KLTable> kl, Convention conv) : kl_(std::move(kl)), conv_(conv) {
  const ElementTable& t = table();
  c_in_t_.resize(static_cast<std::size_t>(t.size()));
  for (int w = 0; w < t.size(); ++w) {
    int lw = t.length(w);
    auto& out = c_in_t_[static_cast<std::size_t>(w)];
    for (int y = 0; y < t.count_up_to(lw); ++y) {
      const LaurentPoly& p = kl_->P(y, w);
      if (p.is_zero()) continue;
      int ly = t.length(y);
      LaurentPoly c;
      if (conv_ == Convention::Signed) {
        c = p.substitute_power(-2).shifted(lw - 2 * ly);
        if ((lw - ly) % 2) c = -c;
      } else {
        c = p.substitute_power(2).shifted(-lw);
      }
      out.emplace_back(y, std::move(c));
    }
  }
}

std::shared_ptr<const HeckeAlgebra> HeckeAlgebra::build(const std::string& tag, int max_length, Convention conv) {
  auto table = std::make_shared<const ElementTable>(AffineWeyl::from_tag(tag), max_length);
  auto kl = std::make_shared<const KLTable>(table);
  return std::make_shared<const HeckeAlgebra>(kl, conv);
}

void HeckeAlgebra::check_ball(int needed) const {
  if (needed > table().max_length())
    throw TruncationError("computation needs a ball of radius " + std::to_string(needed) + " but the table has radius " +
                              std::to_string(table().max_length()),
                          needed);
}

DenseVec HeckeAlgebra::unit_vector(int w, const LaurentPoly& c) const {
  DenseVec d = zero();
  d[static_cast<std::size_t>(w)] = c;
  return d;
}

namespace {

// Apply T_s on one side given the neighbour map nb (w -> ws or sw).
template <class Nb>
void mul_Ts(const ElementTable& t, DenseVec& a, Nb nb) {
  int n = t.size();
  for (int w = 0; w < n; ++w) {
    int ws = nb(w);
    auto& aw = a[static_cast<std::size_t>(w)];
    if (ws < 0) {
      if (!aw.is_zero())
        throw TruncationError("T-basis product leaves the table of radius " + std::to_string(t.max_length()),
                              t.length(w) + 1);
      continue;
    }
    if (t.length(ws) < t.length(w)) continue;
    // Pair (w, ws) with w < ws: new_ws = a_w + (q-1) a_ws, new_w = q a_ws.
    auto& aws = a[static_cast<std::size_t>(ws)];
    LaurentPoly new_ws = aw;
    new_ws.add_mul(kQm1, aws);
    aw = aws.shifted(2);
    aws = std::move(new_ws);
  }
}

}  // namespace

void HeckeAlgebra::right_mul_Ts(DenseVec& a, int s) const {
  const ElementTable& t = table();
  mul_Ts(t, a, [&](int w) { return t.right(w, s); });
}

void HeckeAlgebra::left_mul_Ts(DenseVec& a, int s) const {
  const ElementTable& t = table();
  mul_Ts(t, a, [&](int w) { return t.left(w, s); });
}

void HeckeAlgebra::right_mul_Ts_inverse(DenseVec& a, int s) const {
  // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1).
  DenseVec b = a;
  right_mul_Ts(b, s);
  for (std::size_t i = 0; i < a.size(); ++i) {
    LaurentPoly r = b[i].shifted(-2);
    r.add_mul(kQinvM1, a[i]);
    a[i] = std::move(r);
  }
}

DenseVec HeckeAlgebra::t_multiply(const DenseVec& a, const DenseVec& b) const {
  const ElementTable& t = table();
  int top = -1;
  for (int i = 0; i < size(); ++i)
    if (!b[static_cast<std::size_t>(i)].is_zero()) top = i;
  DenseVec out = zero();
  if (top < 0) return out;
  // prods[y] = a * T_y along first right descents.
  std::vector<DenseVec> prods(static_cast<std::size_t>(top + 1));
  prods[0] = a;
  for (int y = 1; y <= top; ++y) {
    int s = t.first_right_descent(y);
    prods[static_cast<std::size_t>(y)] = prods[static_cast<std::size_t>(t.right(y, s))];
    right_mul_Ts(prods[static_cast<std::size_t>(y)], s);
  }
  for (int y = 0; y <= top; ++y) {
    const auto& c = b[static_cast<std::size_t>(y)];
    if (c.is_zero()) continue;
    for (int z = 0; z < size(); ++z) {
      const auto& p = prods[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)];
      if (!p.is_zero()) out[static_cast<std::size_t>(z)].add_mul(c, p);
    }
  }
  return out;
}

DenseVec HeckeAlgebra::c_to_t(const DenseVec& c) const {
  DenseVec out = zero();
  for (int w = 0; w < size(); ++w) {
    const auto& cw = c[static_cast<std::size_t>(w)];
    if (cw.is_zero()) continue;
    for (const auto& [y, p] : c_in_t(w)) out[static_cast<std::size_t>(y)].add_mul(cw, p);
  }
  return out;
}

DenseVec HeckeAlgebra::t_to_c(DenseVec t) const {
  DenseVec out = zero();
  const ElementTable& tab = table();
  for (int w = size() - 1; w >= 0; --w) {
    if (t[static_cast<std::size_t>(w)].is_zero()) continue;
    // Leading T_w coefficient of C_w is v^{-l(w)} in both conventions.
    LaurentPoly h = t[static_cast<std::size_t>(w)].shifted(tab.length(w));
    for (const auto& [y, p] : c_in_t(w)) {
      LaurentPoly neg = -h;
      t[static_cast<std::size_t>(y)].add_mul(neg, p);
    }
    out[static_cast<std::size_t>(w)] = std::move(h);
  }
  return out;
}

DenseVec HeckeAlgebra::t_inverse(int w) const {
  // T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for w = s_1 ... s_k.
  const auto& word = table().reduced_word(w);
  DenseVec a = unit_vector(0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) right_mul_Ts_inverse(a, *it);
  return a;
}

DenseVec HeckeAlgebra::bar_t(const DenseVec& a) const {
  DenseVec out = zero();
  const ElementTable& t = table();
  for (int w = 0; w < size(); ++w) {
    const auto& c = a[static_cast<std::size_t>(w)];
    if (c.is_zero()) continue;
    DenseVec inv = t_inverse(t.inverse(w));
    LaurentPoly cb = c.bar();
    for (int z = 0; z < size(); ++z)
      if (!inv[static_cast<std::size_t>(z)].is_zero()) out[static_cast<std::size_t>(z)].add_mul(cb, inv[static_cast<std::size_t>(z)]);
  }
  return out;
}

SparseVec HeckeAlgebra::h_constants(int x, int y) const {
  const ElementTable& t = table();
  check_ball(t.length(x) + t.length(y));
  DenseVec cx = zero();
  for (const auto& [z, p] : c_in_t(x)) cx[static_cast<std::size_t>(z)] = p;
  DenseVec cy = zero();
  for (const auto& [z, p] : c_in_t(y)) cy[static_cast<std::size_t>(z)] = p;
  DenseVec c = t_to_c(t_multiply(cx, cy));
  SparseVec out;
  for (int z = 0; z < size(); ++z)
    if (!c[static_cast<std::size_t>(z)].is_zero()) out.emplace_back(z, std::move(c[static_cast<std::size_t>(z)]));
  return out;
}

DenseVec HeckeAlgebra::to_dense(const HeckeElt& h) const {
  DenseVec d = zero();
  for (const auto& [a, p] : h.terms) d[static_cast<std::size_t>(table().require(a))] += p;
  return d;
}

HeckeElt HeckeAlgebra::from_dense(const DenseVec& d, Basis b) const {
  HeckeElt h;
  h.basis = b;
  for (int i = 0; i < size(); ++i)
    if (!d[static_cast<std::size_t>(i)].is_zero()) h.terms.emplace(table().element(i), d[static_cast<std::size_t>(i)]);
  return h;
}

HeckeElt HeckeAlgebra::t_multiply(const HeckeElt& a, const HeckeElt& b) const {
  if (a.basis != Basis::T || b.basis != Basis::T) throw BasisMismatch("t_multiply requires T-basis operands");
  int need = 0, la = 0, lb = 0;
  for (const auto& [e, p] : a.terms) la = std::max(la, group().length(e));
  for (const auto& [e, p] : b.terms) lb = std::max(lb, group().length(e));
  need = la + lb;
  check_ball(need);
  return from_dense(t_multiply(to_dense(a), to_dense(b)), Basis::T);
}

HeckeElt HeckeAlgebra::c_basis(const AffineElt& w) const {
  DenseVec d = zero();
  for (const auto& [y, p] : c_in_t(table().require(w))) d[static_cast<std::size_t>(y)] = p;
  return from_dense(d, Basis::T);
}

HeckeElt HeckeAlgebra::to_c_basis(const HeckeElt& h) const {
  if (h.basis == Basis::C) return h;
  return from_dense(t_to_c(to_dense(h)), Basis::C);
}

HeckeElt HeckeAlgebra::to_t_basis(const HeckeElt& h) const {
  if (h.basis == Basis::T) return h;
  return from_dense(c_to_t(to_dense(h)), Basis::T);
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  HeckeElt t = to_t_basis(h);
  HeckeElt b = from_dense(bar_t(to_dense(t)), Basis::T);
  return h.basis == Basis::C ? to_c_basis(b) : b;
}

std::map<AffineElt, LaurentPoly> HeckeAlgebra::h_constants(const AffineElt& x, const AffineElt& y) const {
  int xi = table().require(x), yi = table().require(y);
  std::map<AffineElt, LaurentPoly> out;
  for (auto& [z, p] : h_constants(xi, yi)) out.emplace(table().element(z), std::move(p));
  return out;
}

std::int64_t HeckeAlgebra::gamma(const AffineElt& x, const AffineElt& y, const AffineElt& z, int a_z) const {
  auto h = h_constants(x, y);
  auto it = h.find(group().inverse(z));
  return it == h.end() ? 0 : it->second.coefficient_of(-a_z);
}

}  // namespace jzero
