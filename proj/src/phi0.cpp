#include "jzero/phi0.hpp"

#include <sstream>
#include <stdexcept>

namespace jzero {

Phi0::Phi0(std::shared_ptr<const HeckeAlgebra> H, std::shared_ptr<const LowestCell> cell) : H_(std::move(H)), cell_(std::move(cell)) {
  const ElementTable& t = H_->table();
  for (const auto& d : cell_->distinguished_involutions()) {
    int id = t.require(cell_->c0_element(d));
    d_ids_.push_back(id);
    max_d_length_ = std::max(max_d_length_, t.length(id));
  }
  z_bound_ = 4 * t.max_length() + 4;
}

const J0AElt& Phi0::of_c_basis(int w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  const ElementTable& t = H_->table();
  int need = t.length(w) + max_d_length_;
  if (need > t.max_length())
    throw TruncationError("phi0(C_" + t.element(w).to_string() + ") needs a ball of radius " + std::to_string(need), need);
  J0AElt out;
  for (int d : d_ids_)
    for (const auto& [z, p] : H_->h_constants(w, d))
      if (auto idx = cell_->c0_parameterize(t.element(z), z_bound_)) out.add(*idx, p);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(w, std::move(out)).first->second;
}

J0AElt Phi0::of_element(const HeckeElt& h) const {
  HeckeElt c = H_->to_c_basis(h);
  J0AElt out;
  for (const auto& [w, p] : c.terms) out += of_c_basis(H_->table().require(w)).scaled(p);
  return out;
}

HeckeElt theta(const HeckeAlgebra& H, const Weight& lambda) {
  const AffineWeyl& G = H.group();
  const RootSystem& rs = G.root_system();
  if (!G.in_root_lattice(lambda)) throw std::invalid_argument("theta needs a root-lattice weight, got " + lambda.to_string());
  Weight two_rho = rs.rho() + rs.rho();
  Weight nu = Weight::zero(rs.rank());
  while (!(lambda + nu).is_dominant()) nu = nu + two_rho;
  Weight mu = lambda + nu;
  const ElementTable& t = H.table();
  int tm = t.require(G.translation(mu));
  DenseVec th = H.unit_vector(tm, LaurentPoly::v(-t.length(tm)));
  if (!nu.is_zero()) {
    int tn = t.require(G.translation(nu));
    DenseVec inv = H.t_inverse(tn);
    for (auto& p : inv) p = p.shifted(t.length(tn));
    th = H.t_multiply(th, inv);
  }
  return H.from_dense(th, Basis::T);
}

MultiplicativityReport check_multiplicative(const Phi0& phi, int max_length) {
  const HeckeAlgebra& H = phi.hecke();
  const ElementTable& t = H.table();
  MultiplicativityReport rep;
  rep.max_length = max_length;
  int n = t.count_up_to(max_length);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.pairs;
      J0AElt lhs = phi.cell().multiply(phi.of_c_basis(x), phi.of_c_basis(y));
      J0AElt rhs;
      for (const auto& [z, p] : H.h_constants(x, y)) rhs += phi.of_c_basis(z).scaled(p);
      if (!(lhs == rhs)) rep.failures.push_back(t.element(x).to_string() + " * " + t.element(y).to_string());
    }
  return rep;
}

bool Sl2Report::pass() const {
  if (!conjugator_found || checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string to_string(const GradedMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

namespace {

// c v^k with c = ±1 and a = c v^k b, if one exists.
std::optional<LaurentPoly> monomial_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  int k = a.min_exponent() - b.min_exponent();
  std::int64_t ca = a.coefficient_of(a.min_exponent()), cb = b.coefficient_of(b.min_exponent());
  if (ca != cb && ca != -cb) return std::nullopt;
  LaurentPoly r = LaurentPoly::monomial(ca == cb ? 1 : -1, k);
  if (!(r * b == a)) return std::nullopt;
  return r;
}

std::optional<LaurentPoly> solve_conjugator(const GradedMatrix& m, const GradedMatrix& target) {
  // (A M A^{-1})_{01} = M_{01} / a, (A M A^{-1})_{10} = a M_{10}.
  for (const auto& [w, tc] : target(0, 1).terms)
    if (auto r = monomial_ratio(m(0, 1).coefficient(w), tc)) return r;
  for (const auto& [w, tc] : target(1, 0).terms)
    if (auto r = monomial_ratio(tc, m(1, 0).coefficient(w))) return r;
  return std::nullopt;
}

GradedMatrix conjugate(const GradedMatrix& m, const LaurentPoly& a) {
  LaurentPoly ainv = a.shifted(-2 * a.min_exponent());  // a = ±v^k, so a^{-1} = ±v^{-k}
  GradedMatrix out = m;
  out(0, 1) = m(0, 1).scaled(ainv);
  out(1, 0) = m(1, 0).scaled(a);
  return out;
}

GradedMatrix bar(const GradedMatrix& m) {
  GradedMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = jzero::bar(m(i, j));
  return out;
}

bool is_zero(const GradedMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

HeckeElt hecke_add(const HeckeElt& a, const HeckeElt& b, const LaurentPoly& kb) {
  if (a.basis != b.basis) throw BasisMismatch("hecke_add: basis mismatch");
  HeckeElt out = a;
  for (const auto& [w, p] : b.terms) {
    LaurentPoly& c = out.terms[w];
    c.add_mul(kb, p);
    if (c.is_zero()) out.terms.erase(w);
  }
  return out;
}

}  // namespace

Sl2Report sl2_check(const Phi0& phi, const SteinbergBasis& sb, int mult_max_length) {
  const HeckeAlgebra& H = phi.hecke();
  const RepresentationRing& R = phi.cell().rep();
  if (R.rank() != 1) throw std::invalid_argument("sl2_check needs type A1");
  Sl2Report rep;
  Weight alpha = H.group().root_system().simple_root(0);
  auto theta_matrix = [&](const Weight& l) { return phi.matrix(theta(H, l)); };
  auto target = [&](const Weight& l) { return to_graded(diagonal_class(sb, -l)); };

  GradedMatrix m_alpha = theta_matrix(alpha);
  auto a = solve_conjugator(m_alpha, target(alpha));
  if (!a) {
    rep.checks.push_back({"conjugator", false, "no monomial conjugator matches " + to_string(m_alpha)});
    return rep;
  }
  rep.conjugator_found = true;
  rep.conjugator = *a;
  rep.checks.push_back({"conjugator", true, "A = diag(1, " + a->to_string() + ")"});

  for (int k : {1, -1, 2, -2}) {
    Weight l = k * alpha;
    GradedMatrix got = conjugate(theta_matrix(l), *a), want = target(l);
    rep.checks.push_back({"theta" + l.to_string(), got == want, "got " + to_string(got) + " want " + to_string(want)});
  }

  AffineElt s0 = H.group().generator(0);
  HeckeElt neg_cs = H.c_basis(s0);
  for (auto& [w, p] : neg_cs.terms) p = -p;
  GradedMatrix got = bar(conjugate(phi.matrix(neg_cs), *a));
  Weight zero = Weight::zero(1);
  GradedMatrix want = mat_add(mat_scale(to_graded(expand_in_steinberg_basis(sb, zero, -alpha)), LaurentPoly::monomial(-1, 1)),
                              mat_scale(to_graded(expand_in_steinberg_basis(sb, zero, zero)), LaurentPoly::monomial(1, -1)));
  rep.checks.push_back({"coxeter", got == want, "got " + to_string(got) + " want " + to_string(want)});

  HeckeElt ts{Basis::T, {{s0, LaurentPoly(1)}}};
  GradedMatrix mt = phi.matrix(ts);
  GradedMatrix id = identity_gmatrix(2, 1);
  LaurentPoly q = LaurentPoly::v(2);
  GradedMatrix quad = mat_mul(R, mat_add(mt, id), mat_add(mt, mat_scale(id, -q)));
  rep.checks.push_back({"quadratic", is_zero(quad), "(T+1)(T-q) = " + to_string(quad)});

  HeckeElt th_a = theta(H, alpha), th_m = theta(H, -alpha);
  HeckeElt one{Basis::T, {{H.group().identity(), LaurentPoly(1)}}};
  LaurentPoly qm1 = q - LaurentPoly(1);
  HeckeElt lhs = hecke_add(H.t_multiply(th_a, ts), H.t_multiply(ts, th_m), LaurentPoly(-1));
  HeckeElt rhs = hecke_add(th_a, one, LaurentPoly(1));
  for (auto& [w, p] : rhs.terms) p *= qm1;
  rep.checks.push_back({"bernstein-hecke", lhs == rhs, ""});

  GradedMatrix ma = phi.matrix(th_a), mm = phi.matrix(th_m);
  GradedMatrix blhs = mat_add(mat_mul(R, ma, mt), mat_scale(mat_mul(R, mt, mm), LaurentPoly(-1)));
  GradedMatrix brhs = mat_scale(mat_add(ma, id), qm1);
  rep.checks.push_back({"bernstein-matrix", blhs == brhs, "lhs " + to_string(blhs) + " rhs " + to_string(brhs)});

  MultiplicativityReport mr = check_multiplicative(phi, mult_max_length);
  rep.checks.push_back({"multiplicative", mr.pass(),
                        std::to_string(mr.pairs) + " pairs, " + std::to_string(mr.failures.size()) + " failures"});
  return rep;
}

}  // namespace jzero
