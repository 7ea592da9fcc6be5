#include "jzero/repring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace jzero {

void FormalCharacter::add(const Weight& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

std::int64_t FormalCharacter::total() const {
  std::int64_t s = 0;
  for (const auto& [w, c] : terms) s = checked_add(s, c);
  return s;
}

GradedCharacter to_graded(const VirtualCharacter& v) {
  GradedCharacter g;
  for (const auto& [w, c] : v.terms) g.add(w, LaurentPoly(c));
  return g;
}

GradedCharacter bar(const GradedCharacter& g) {
  GradedCharacter r;
  for (const auto& [w, c] : g.terms) r.add(w, c.bar());
  return r;
}

std::string to_string(const VirtualCharacter& v) {
  if (v.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : v.terms) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*V" + w.to_string();
  }
  return s;
}

std::string to_string(const GradedCharacter& g) {
  if (g.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : g.terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*V" + w.to_string();
  }
  return s;
}

namespace {

// Exact rational inverse of an integer matrix, returned as (scale * C^{-1}, scale).
std::pair<IntMatrix, std::int64_t> scaled_inverse(const IntMatrix& c) {
  int n = static_cast<int>(c.size());
  using Q = std::pair<long long, long long>;
  auto norm = [](Q q) {
    if (q.second < 0) q = {-q.first, -q.second};
    long long g = std::gcd(std::llabs(q.first), q.second);
    return g > 1 ? Q{q.first / g, q.second / g} : q;
  };
  std::vector<std::vector<Q>> m(static_cast<std::size_t>(n), std::vector<Q>(static_cast<std::size_t>(2 * n), Q{0, 1}));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = {c[i][j], 1};
    m[i][n + i] = {1, 1};
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (m[p][col].first == 0) ++p;
    std::swap(m[p], m[col]);
    Q piv = m[col][col];
    for (auto& x : m[col]) x = norm({x.first * piv.second, x.second * piv.first});
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].first == 0) continue;
      Q f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) {
        Q prod = norm({f.first * m[col][j].first, f.second * m[col][j].second});
        m[r][j] = norm({m[r][j].first * prod.second - prod.first * m[r][j].second, m[r][j].second * prod.second});
      }
    }
  }
  long long l = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l = std::lcm(l, m[i][n + j].second);
  IntMatrix out(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = static_cast<int>(m[i][n + j].first * (l / m[i][n + j].second));
  return {out, l};
}

}  // namespace

RepresentationRing::RepresentationRing(RootSystem rs) : rs_(std::move(rs)) {
  auto [g, s] = scaled_inverse(rs_.cartan_matrix());
  gram_ = std::move(g);
  scale_ = s;
}

std::int64_t RepresentationRing::form(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(a[i]) * gram_[i][j] * b[j];
  return s;
}

int RepresentationRing::height(const Weight& lambda) const {
  int h = 0;
  for (int k = 0; k < static_cast<int>(rs_.positive_roots().size()); ++k) h += rs_.pairing(lambda, k);
  return h;
}

const FormalCharacter& RepresentationRing::weyl_character(const Weight& lambda) const {
  if (lambda.rank() != rank()) throw std::invalid_argument("rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_character needs a dominant weight, got " + lambda.to_string());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = char_cache_.find(lambda);
    if (it != char_cache_.end()) return it->second;
  }
  FormalCharacter f = compute_character(lambda);
  std::lock_guard<std::mutex> lock(mu_);
  return char_cache_.emplace(lambda, std::move(f)).first->second;
}

FormalCharacter RepresentationRing::compute_character(const Weight& lambda) const {
  // Dominant weights mu <= lambda, by BFS subtracting simple roots within the
  // saturated set (mu in wt(V) iff its dominant conjugate is <= lambda).
  auto below = [&](const Weight& mu) {
    Weight d = rs_.dominant_representative(mu).first;
    Weight diff = lambda - d;
    // Simple-root coordinates of diff: C^{-1} diff scaled; must be nonneg integers.
    for (int i = 0; i < rank(); ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < rank(); ++j) s += static_cast<std::int64_t>(gram_[i][j]) * diff[j];
      if (s < 0 || s % scale_ != 0) return false;
    }
    return true;
  };
  std::set<Weight> weights{lambda};
  std::deque<Weight> q{lambda};
  while (!q.empty()) {
    Weight mu = q.front();
    q.pop_front();
    for (int i = 0; i < rank(); ++i) {
      Weight nu = mu - rs_.simple_root(i);
      if (weights.count(nu) || !below(nu)) continue;
      weights.insert(nu);
      q.push_back(nu);
    }
  }
  std::vector<Weight> dominant;
  for (const auto& w : weights)
    if (w.is_dominant()) dominant.push_back(w);
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha > hb : a < b;
  });
  std::map<Weight, std::int64_t> mult;
  Weight rho = rs_.rho();
  std::int64_t top = form(lambda + rho, lambda + rho);
  auto mult_of = [&](const Weight& mu) -> std::int64_t {
    if (!weights.count(mu)) return 0;
    auto it = mult.find(rs_.dominant_representative(mu).first);
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t rhs = 0;
    for (const auto& alpha : rs_.positive_roots()) {
      for (int k = 1;; ++k) {
        Weight nu = mu + k * alpha;
        if (!weights.count(nu)) break;
        rhs = checked_add(rhs, checked_mul(checked_mul(2, form(nu, alpha)), mult_of(nu)));
      }
    }
    std::int64_t lhs = top - form(mu + rho, mu + rho);
    if (lhs <= 0 || rhs % lhs != 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    mult[mu] = rhs / lhs;
  }
  FormalCharacter f;
  for (const auto& [mu, m] : mult) {
    std::set<Weight> orbit;
    for (const auto& w : rs_.enumerate_weyl()) orbit.insert(w.act(mu));
    for (const auto& o : orbit) f.add(o, m);
  }
  return f;
}

FormalCharacter RepresentationRing::weyl_character_alternating(const Weight& lambda) const {
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_character needs a dominant weight, got " + lambda.to_string());
  Weight lr = lambda + rs_.rho();
  std::map<Weight, std::int64_t> f;
  for (const auto& w : rs_.enumerate_weyl()) f[w.act(lr)] += (w.length() % 2) ? -1 : 1;
  // Divide by (1 - e^{-alpha}) for each positive root: g(mu) = sum_{k>=0} f(mu + k alpha).
  for (int k = 0; k < static_cast<int>(rs_.positive_roots().size()); ++k) {
    const Weight& alpha = rs_.positive_roots()[static_cast<std::size_t>(k)];
    // Group by alpha-line; position t = floor(<mu, alpha^vee> / 2).
    std::map<Weight, std::map<int, std::int64_t>> lines;
    for (const auto& [mu, c] : f) {
      if (c == 0) continue;
      int p = rs_.pairing(mu, k);
      int t = p >= 0 ? p / 2 : -((-p + 1) / 2);
      lines[mu - t * alpha][t] += c;
    }
    std::map<Weight, std::int64_t> g;
    for (const auto& [base, line] : lines) {
      std::int64_t run = 0;
      int lo = line.begin()->first, hi = line.rbegin()->first;
      for (int t = hi; t >= lo; --t) {
        auto it = line.find(t);
        if (it != line.end()) run = checked_add(run, it->second);
        if (run != 0) g[base + t * alpha] = run;
      }
      if (run != 0) throw std::logic_error("Weyl numerator is not divisible by the denominator");
    }
    f = std::move(g);
  }
  FormalCharacter out;
  Weight rho = rs_.rho();
  for (const auto& [mu, c] : f) out.add(mu - rho, c);
  return out;
}

std::int64_t RepresentationRing::dim(const Weight& lambda) const {
  if (!lambda.is_dominant()) throw std::invalid_argument("dim needs a dominant weight, got " + lambda.to_string());
  // Weyl dimension formula, exact: prod <lambda+rho, a^vee> / prod <rho, a^vee>.
  Weight lr = lambda + rs_.rho();
  std::int64_t num = 1, den = 1;
  for (int k = 0; k < static_cast<int>(rs_.positive_roots().size()); ++k) {
    num = checked_mul(num, rs_.pairing(lr, k));
    den = checked_mul(den, rs_.pairing(rs_.rho(), k));
    std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("Weyl dimension formula is not integral");
  return num;
}

std::int64_t RepresentationRing::dim(const VirtualCharacter& v) const {
  std::int64_t s = 0;
  for (const auto& [w, c] : v.terms) s = checked_add(s, checked_mul(c, dim(w)));
  return s;
}

std::pair<int, Weight> RepresentationRing::bwb(const Weight& lambda) const {
  Weight lr = lambda + rs_.rho();
  for (int k = 0; k < static_cast<int>(rs_.positive_roots().size()); ++k)
    if (rs_.pairing(lr, k) == 0) return {0, Weight::zero(rank())};
  auto [mu, w] = rs_.dominant_representative(lr);
  return {w.length() % 2 ? -1 : 1, mu - rs_.rho()};
}

VirtualCharacter RepresentationRing::euler_characteristic(const Weight& lambda) const {
  if (lambda.rank() != rank()) throw std::invalid_argument("rank mismatch");
  auto [sign, mu] = bwb(lambda);
  VirtualCharacter v;
  if (sign != 0) v.add(mu, sign);
  return v;
}

const VirtualCharacter& RepresentationRing::tensor_decompose(const Weight& lambda, const Weight& nu) const {
  if (!lambda.is_dominant() || !nu.is_dominant())
    throw std::invalid_argument("tensor_decompose needs dominant weights, got " + lambda.to_string() + " and " + nu.to_string());
  auto key = lambda < nu ? std::pair{lambda, nu} : std::pair{nu, lambda};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second;
  }
  VirtualCharacter v = compute_tensor(key.first, key.second);
  std::lock_guard<std::mutex> lock(mu_);
  return tensor_cache_.emplace(key, std::move(v)).first->second;
}

VirtualCharacter RepresentationRing::compute_tensor(const Weight& lambda, const Weight& nu) const {
  // Brauer-Klimyk: V(l) ⊗ V(n) = sum_{mu in wt V(small)} m(mu) chi(big + mu).
  const Weight& small = dim(lambda) <= dim(nu) ? lambda : nu;
  const Weight& big = dim(lambda) <= dim(nu) ? nu : lambda;
  VirtualCharacter out;
  for (const auto& [mu, m] : weyl_character(small).terms) {
    auto [sign, hw] = bwb(big + mu);
    if (sign != 0) out.add(hw, checked_mul(sign, m));
  }
  return out;
}

VirtualCharacter RepresentationRing::multiply(const VirtualCharacter& a, const VirtualCharacter& b) const {
  VirtualCharacter out;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) {
      std::int64_t k = checked_mul(ca, cb);
      for (const auto& [mu, m] : tensor_decompose(la, lb).terms) out.add(mu, checked_mul(k, m));
    }
  return out;
}

GradedCharacter RepresentationRing::multiply(const GradedCharacter& a, const GradedCharacter& b) const {
  GradedCharacter out;
  for (const auto& [la, ca] : a.terms)
    for (const auto& [lb, cb] : b.terms) {
      LaurentPoly k = ca * cb;
      for (const auto& [mu, m] : tensor_decompose(la, lb).terms) out.add(mu, k * LaurentPoly(m));
    }
  return out;
}

VirtualCharacter RepresentationRing::decompose(FormalCharacter f) const {
  VirtualCharacter out;
  while (!f.terms.empty()) {
    const Weight* best = nullptr;
    int bh = 0;
    for (const auto& [w, c] : f.terms) {
      if (!w.is_dominant()) continue;
      int h = height(w);
      if (!best || h > bh) {
        best = &w;
        bh = h;
      }
    }
    if (!best) throw std::invalid_argument("formal character is not W-invariant");
    Weight hw = *best;
    std::int64_t c = f.terms.at(hw);
    out.add(hw, c);
    for (const auto& [w, m] : weyl_character(hw).terms) f.add(w, checked_mul(-c, m));
  }
  return out;
}

FormalCharacter RepresentationRing::character_of(const VirtualCharacter& v) const {
  FormalCharacter f;
  for (const auto& [w, c] : v.terms)
    for (const auto& [mu, m] : weyl_character(w).terms) f.add(mu, checked_mul(c, m));
  return f;
}

}  // namespace jzero
