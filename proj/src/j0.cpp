#include "jzero/j0.hpp"

#include <stdexcept>

namespace jzero {

std::string C0Index::to_string() const { return "(" + u.word_string() + "," + chi.to_string() + "," + v.word_string() + ")"; }

LowestCell::LowestCell(std::shared_ptr<const AffineWeyl> group, std::shared_ptr<const RepresentationRing> rep)
    : group_(std::move(group)), rep_(std::move(rep)) {
  const RootSystem& rs = root_system();
  if (group_->root_system().cartan_matrix() != rs.cartan_matrix()) throw std::invalid_argument("root system mismatch");
  w0_ = rs.longest_element();
  for (const auto& u : rs.enumerate_weyl()) {
    AffineElt fu{u.act(steinberg_weight(rs, u)), u};
    f_inv_.push_back(group_->inverse(fu));
    f_.push_back(std::move(fu));
  }
}

std::shared_ptr<const LowestCell> LowestCell::from_tag(const std::string& tag) {
  std::string base = !tag.empty() && tag.back() == '~' ? tag.substr(0, tag.size() - 1) : tag;
  RootSystem rs = RootSystem::from_tag(base);
  auto group = std::make_shared<const AffineWeyl>(rs, true);
  auto rep = std::make_shared<const RepresentationRing>(rs);
  return std::make_shared<const LowestCell>(group, rep);
}

AffineElt LowestCell::c0_element(const C0Index& idx) const {
  if (!idx.chi.is_dominant()) throw std::invalid_argument("C0Index needs a dominant weight, got " + idx.chi.to_string());
  const RootSystem& rs = root_system();
  int u = rs.weyl_index(idx.u), v = rs.weyl_index(idx.v);
  AffineElt w0chi{w0_.act(idx.chi), w0_};
  return group_->multiply(group_->multiply(f_inv_[static_cast<std::size_t>(u)], w0chi), f_[static_cast<std::size_t>(v)]);
}

std::optional<C0Index> LowestCell::c0_parameterize(const AffineElt& w, int bound) const {
  const auto& W = root_system().enumerate_weyl();
  std::optional<C0Index> found;
  for (std::size_t u = 0; u < W.size(); ++u) {
    AffineElt left = group_->multiply(f_[u], w);
    for (std::size_t v = 0; v < W.size(); ++v) {
      AffineElt g = group_->multiply(left, f_inv_[v]);
      if (!(g.finite == w0_)) continue;
      Weight chi = w0_.act(g.translation);
      if (!chi.is_dominant() || chi.sup_norm() > bound) continue;
      if (found) throw std::logic_error("lowest-cell parameterization is not unique for " + w.to_string());
      found = C0Index{W[u], chi, W[v]};
    }
  }
  return found;
}

C0Index LowestCell::inverse(const C0Index& idx) const { return C0Index{idx.v, -w0_.act(idx.chi), idx.u}; }

std::vector<C0Index> LowestCell::grid(int bound, bool coxeter_only) const {
  const RootSystem& rs = root_system();
  int n = rs.rank();
  std::vector<Weight> chis;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (;;) {
    chis.emplace_back(c);
    int i = 0;
    while (i < n && c[static_cast<std::size_t>(i)] == bound) c[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++c[static_cast<std::size_t>(i)];
  }
  std::vector<C0Index> out;
  for (const auto& u : rs.enumerate_weyl())
    for (const auto& chi : chis)
      for (const auto& v : rs.enumerate_weyl()) {
        C0Index idx{u, chi, v};
        if (!coxeter_only || in_coxeter_part(idx)) out.push_back(idx);
      }
  return out;
}

std::vector<C0Index> LowestCell::distinguished_involutions() const {
  std::vector<C0Index> out;
  for (const auto& u : root_system().enumerate_weyl()) out.push_back(C0Index{u, Weight::zero(root_system().rank()), u});
  return out;
}

J0Elt LowestCell::unit() const {
  J0Elt e;
  for (const auto& d : distinguished_involutions()) e.add(d, 1);
  return e;
}

std::vector<C0Index> LowestCell::idempotent_scan(int bound) const {
  std::vector<C0Index> out;
  for (const auto& idx : grid(bound, false)) {
    J0Elt t = J0Elt::basis(idx);
    if (multiply(t, t) == t) out.push_back(idx);
  }
  return out;
}

RMatrix LowestCell::matrix_realization(const J0Elt& a) const {
  const RootSystem& rs = root_system();
  RMatrix m(weyl_size(), weyl_size());
  for (const auto& [idx, c] : a.terms) m(rs.weyl_index(idx.u), rs.weyl_index(idx.v)).add(idx.chi, c);
  return m;
}

GradedMatrix LowestCell::matrix_realization(const J0AElt& a) const {
  const RootSystem& rs = root_system();
  GradedMatrix m(weyl_size(), weyl_size());
  for (const auto& [idx, c] : a.terms) m(rs.weyl_index(idx.u), rs.weyl_index(idx.v)).add(idx.chi, c);
  return m;
}

C0Index LowestCell::parse_index(const std::string& text0) const {
  std::string t;
  for (char ch : text0)
    if (ch != ' ') t += ch;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw std::invalid_argument("index must look like (u,[chi],v): '" + text0 + "'");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : t) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw std::invalid_argument("index must have three parts: '" + text0 + "'");
  const RootSystem& rs = root_system();
  auto word = [&](const std::string& s) {
    std::vector<int> w;
    if (s == "e" || s.empty()) return rs.from_word(w);
    std::size_t i = 0;
    while (i < s.size()) {
      if (s[i] != 's') throw std::invalid_argument("bad Weyl word '" + s + "'");
      std::size_t j = ++i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("bad Weyl word '" + s + "'");
      int g = std::stoi(s.substr(i, j - i));
      if (g >= rs.rank()) throw std::invalid_argument("generator out of range in '" + s + "'");
      w.push_back(g);
      i = j;
    }
    return rs.from_word(w);
  };
  C0Index idx{word(parts[0]), Weight::parse(parts[1]), word(parts[2])};
  if (idx.chi.rank() != rs.rank()) throw std::invalid_argument("rank mismatch in '" + text0 + "'");
  if (!idx.chi.is_dominant()) throw std::invalid_argument("non-dominant chi in '" + text0 + "'");
  return idx;
}

GammaReport gamma_oracle_check(const HConstantTable& table, const ElementTable& elements, const LowestCell& cell, int chi_bound) {
  GammaReport rep;
  rep.type = elements.group().tag();
  rep.ball = table.ball();
  rep.chi_bound = chi_bound;
  rep.a = cell.root_system().longest_element().length();
  rep.sign = rep.a % 2 ? -1 : 1;
  const AffineWeyl& g = elements.group();
  int z_bound = 4 * elements.max_length() + 4;

  std::vector<int> ids;
  std::vector<C0Index> idx;
  for (int x = 0; x < table.ball_size(); ++x) {
    auto p = cell.c0_parameterize(elements.element(x), chi_bound);
    if (!p) continue;
    ids.push_back(x);
    idx.push_back(*p);
  }
  rep.c0_in_ball = ids.size();
  std::map<int, std::optional<C0Index>> z_param;
  auto param_of = [&](int z) -> const std::optional<C0Index>& {
    auto it = z_param.find(z);
    if (it == z_param.end()) it = z_param.emplace(z, cell.c0_parameterize(elements.element(z), z_bound)).first;
    return it->second;
  };

  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = 0; j < ids.size(); ++j) {
      ++rep.pairs;
      J0Elt prod = cell.multiply(J0Elt::basis(idx[i]), J0Elt::basis(idx[j]));
      std::map<C0Index, GammaTriple> by_index;
      std::vector<GammaTriple> outside;
      auto [b, e] = table.row(ids[i], ids[j]);
      for (auto it = b; it != e; ++it) {
        std::int64_t c = table.poly(*it).coefficient_of(-rep.a);
        if (c == 0) continue;
        GammaTriple t{elements.element(ids[i]), elements.element(ids[j]), elements.element(it->z), idx[i], idx[j],
                      param_of(it->z), c, 0, true};
        if (t.iz) by_index.emplace(*t.iz, t);
        else outside.push_back(t);
      }
      for (const auto& [iz, c] : prod.terms) {
        auto it = by_index.find(iz);
        if (it != by_index.end()) {
          it->second.xi = c;
          continue;
        }
        AffineElt z = cell.c0_element(iz);
        by_index.emplace(iz, GammaTriple{elements.element(ids[i]), elements.element(ids[j]), z, idx[i], idx[j], iz, 0, c, true});
      }
      for (auto& t : outside) {
        t.pass = false;
        rep.triples.push_back(t);
        rep.mismatches.push_back(t);
      }
      for (auto& [iz, t] : by_index) {
        t.pass = rep.sign * t.hecke == t.xi;
        rep.triples.push_back(t);
        if (!t.pass) rep.mismatches.push_back(t);
      }
      rep.compared += by_index.size() + outside.size();
    }
  for (const auto& d : cell.distinguished_involutions()) {
    int id = elements.find(cell.c0_element(d));
    if (id < 0 || id >= table.ball_size()) continue;
    rep.literal_td_square.push_back(table.h(id, id, id).coefficient_of(-rep.a));
  }
  (void)g;
  rep.pass = rep.mismatches.empty() && rep.c0_in_ball > 0;
  return rep;
}

RMatrix expand_in_steinberg_basis(const SteinbergBasis& sb, const Weight& a, const Weight& b) {
  const RepresentationRing& R = sb.rep();
  int n = sb.size();
  bool identity = sb.pairing_matrix() == identity_rmatrix(n, R.rank());
  // beta_w = <O(a), G_w>, delta_u = <F_u, O(b)>.
  RMatrix beta(1, n), delta(n, 1);
  for (int w = 0; w < n; ++w) {
    beta(0, w) = R.euler_characteristic(a + sb.y(w)).scaled(sb.shift(w) % 2 ? -1 : 1);
    delta(w, 0) = R.euler_characteristic(sb.x(w) + b);
  }
  // O(a) = sum alpha_u F_u with alpha = beta M^{-1}; O(b) = sum gamma_v G_v with gamma = M^{-1} delta.
  RMatrix alpha = identity ? beta : mat_mul(R, beta, sb.inverse_pairing_matrix());
  RMatrix gamma = identity ? delta : mat_mul(R, sb.inverse_pairing_matrix(), delta);
  RMatrix out(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (!alpha(0, u).is_zero() && !gamma(v, 0).is_zero()) out(u, v) = R.multiply(alpha(0, u), gamma(v, 0));
  return out;
}

RMatrix diagonal_class(const SteinbergBasis& sb, const Weight& lambda) {
  int n = sb.size();
  RMatrix out(n, n);
  for (int u = 0; u < n; ++u) {
    RMatrix e = expand_in_steinberg_basis(sb, lambda + sb.x(u), sb.y(u));
    int s = sb.shift(u) % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += e(i, j).scaled(s);
  }
  return out;
}

}  // namespace jzero
