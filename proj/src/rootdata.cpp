#include "jzero/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace jzero {

bool Weight::is_dominant() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

int Weight::sup_norm() const {
  int m = 0;
  for (int x : c_) m = std::max(m, std::abs(x));
  return m;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Weight operator*(int k, Weight a) {
  for (auto& x : a.c_) x *= k;
  return a;
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

Weight Weight::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && ch != ' ') t += ch;
  std::vector<int> v;
  if (t.empty()) throw std::invalid_argument("empty weight '" + text + "'");
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw std::invalid_argument("bad weight '" + text + "'");
    v.push_back(x);
  }
  return Weight(std::move(v));
}

IntMatrix mat_identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      int x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += x * b[k][j];
    }
  return r;
}

namespace {

Weight mat_apply(const IntMatrix& m, const Weight& w) {
  if (static_cast<int>(m.size()) != w.rank()) throw std::invalid_argument("rank mismatch in Weyl action");
  std::vector<int> r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i] += m[i][j] * w[static_cast<int>(j)];
  return Weight(std::move(r));
}

}  // namespace

Weight WeylElt::act(const Weight& w) const { return mat_apply(matrix, w); }

std::string WeylElt::word_string() const {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

RootSystem RootSystem::from_tag(const std::string& tag) {
  if (tag.size() < 2 || tag[0] != 'A') throw std::invalid_argument("unknown root system tag '" + tag + "'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(tag.substr(1), &used);
    if (used != tag.size() - 1) n = 0;
  } catch (const std::exception&) {
    n = 0;
  }
  if (n < 1 || n > 8) throw std::invalid_argument("unknown root system tag '" + tag + "'");
  IntMatrix c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < n) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
      c[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
  }
  return from_cartan(c, tag);
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan, std::string name) {
  int n = static_cast<int>(cartan.size());
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[static_cast<std::size_t>(i)].size()) != n) throw std::invalid_argument("Cartan matrix not square");
    for (int j = 0; j < n; ++j) {
      int a = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j && a != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (i != j && a > 0) throw std::invalid_argument("Cartan off-diagonal must be <= 0");
      if (a != cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw std::invalid_argument("only simply-laced (symmetric) Cartan matrices are supported");
    }
  }
  RootSystem rs;
  rs.name_ = std::move(name);
  rs.rank_ = n;
  rs.cartan_ = cartan;
  rs.build();
  return rs;
}

void RootSystem::build() {
  for (int i = 0; i < rank_; ++i) simple_roots_.emplace_back(cartan_[static_cast<std::size_t>(i)]);

  // Positive roots by reflecting simple roots; track simple-root coordinates.
  std::map<Weight, std::vector<int>> found;
  std::deque<Weight> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> sc(static_cast<std::size_t>(rank_), 0);
    sc[static_cast<std::size_t>(i)] = 1;
    found.emplace(simple_roots_[static_cast<std::size_t>(i)], sc);
    queue.push_back(simple_roots_[static_cast<std::size_t>(i)]);
    pos_roots_.push_back(simple_roots_[static_cast<std::size_t>(i)]);
    pos_roots_simple_.push_back(sc);
  }
  while (!queue.empty()) {
    Weight r = queue.front();
    queue.pop_front();
    std::vector<int> sc = found.at(r);
    for (int i = 0; i < rank_; ++i) {
      int k = r[i];
      if (k == 0) continue;
      Weight nr = r - k * simple_roots_[static_cast<std::size_t>(i)];
      std::vector<int> nsc = sc;
      nsc[static_cast<std::size_t>(i)] -= k;
      if (std::any_of(nsc.begin(), nsc.end(), [](int x) { return x < 0; })) continue;
      if (found.count(nr)) continue;
      found.emplace(nr, nsc);
      queue.push_back(nr);
      pos_roots_.push_back(nr);
      pos_roots_simple_.push_back(nsc);
    }
  }
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) root_lookup_.emplace(pos_roots_[k], static_cast<int>(k));
  int best = -1;
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    int h = 0;
    for (int x : pos_roots_simple_[k]) h += x;
    if (h > best) {
      best = h;
      highest_ = static_cast<int>(k);
    }
  }

  // W by BFS over matrices, then sorted by (length, word).
  std::map<IntMatrix, bool> seen;
  std::deque<IntMatrix> q{mat_identity(rank_)};
  seen.emplace(q.front(), true);
  std::vector<IntMatrix> mats;
  while (!q.empty()) {
    IntMatrix m = q.front();
    q.pop_front();
    mats.push_back(m);
    for (int i = 0; i < rank_; ++i) {
      IntMatrix nm = mat_mul(m, simple_reflection(i).matrix);
      if (seen.emplace(nm, true).second) q.push_back(nm);
    }
  }
  for (auto& m : mats) weyl_.push_back(WeylElt{reduced_word(m), m});
  std::sort(weyl_.begin(), weyl_.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < weyl_.size(); ++i) weyl_lookup_.emplace(weyl_[i].matrix, static_cast<int>(i));
  for (auto& w : weyl_) {
    IntMatrix inv = inverse(w).matrix;
    std::vector<bool> neg;
    for (auto& a : pos_roots_) neg.push_back(root_sign(mat_apply(inv, a)) < 0);
    inv_neg_.push_back(std::move(neg));
  }
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = Weight::zero(rank_);
  w[i] = 1;
  return w;
}

int RootSystem::pairing(const Weight& lambda, int k) const {
  const auto& sc = pos_roots_simple_[static_cast<std::size_t>(k)];
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += sc[static_cast<std::size_t>(i)] * lambda[i];
  return s;
}

int RootSystem::root_sign(const Weight& w) const {
  if (root_lookup_.count(w)) return 1;
  if (root_lookup_.count(-w)) return -1;
  return 0;
}

int RootSystem::root_index(const Weight& w) const {
  auto it = root_lookup_.find(w);
  if (it != root_lookup_.end()) return it->second;
  it = root_lookup_.find(-w);
  return it == root_lookup_.end() ? -1 : it->second;
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1)); }

Weight RootSystem::reflect(int i, const Weight& lambda) const {
  return lambda - lambda[i] * simple_roots_[static_cast<std::size_t>(i)];
}

Weight RootSystem::act(const WeylElt& w, const Weight& lambda) const {
  if (lambda.rank() != rank_) throw std::invalid_argument("rank mismatch in Weyl action");
  return mat_apply(w.matrix, lambda);
}

WeylElt RootSystem::identity() const { return WeylElt{{}, mat_identity(rank_)}; }

WeylElt RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
  // Column j is s_i(e_j) = e_j - delta_{ij} alpha_i.
  IntMatrix m = mat_identity(rank_);
  for (int r = 0; r < rank_; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] -= cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
  return WeylElt{{i}, m};
}

WeylElt RootSystem::from_word(const std::vector<int>& word) const {
  IntMatrix m = mat_identity(rank_);
  for (int i : word) m = mat_mul(m, simple_reflection(i).matrix);
  return WeylElt{reduced_word(m), m};
}

WeylElt RootSystem::multiply(const WeylElt& a, const WeylElt& b) const {
  IntMatrix m = mat_mul(a.matrix, b.matrix);
  return WeylElt{reduced_word(m), m};
}

WeylElt RootSystem::inverse(const WeylElt& w) const {
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return from_word(word);
}

WeylElt RootSystem::longest_element() const {
  return weyl_.empty() ? identity() : weyl_.back();
}

int RootSystem::length(const IntMatrix& m) const {
  int l = 0;
  for (auto& a : pos_roots_)
    if (root_sign(mat_apply(m, a)) < 0) ++l;
  return l;
}

std::vector<int> RootSystem::reduced_word(const IntMatrix& m0) const {
  std::vector<int> rev;
  IntMatrix m = m0;
  for (;;) {
    int found = -1;
    for (int i = 0; i < rank_ && found < 0; ++i)
      if (root_sign(mat_apply(m, simple_roots_[static_cast<std::size_t>(i)])) < 0) found = i;
    if (found < 0) break;
    rev.push_back(found);
    m = mat_mul(m, simple_reflection(found).matrix);
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

bool RootSystem::is_right_descent(const WeylElt& w, int i) const {
  return root_sign(mat_apply(w.matrix, simple_root(i))) < 0;
}

bool RootSystem::is_left_descent(const WeylElt& w, int i) const {
  return root_sign(mat_apply(inverse(w).matrix, simple_root(i))) < 0;
}

int RootSystem::weyl_index(const WeylElt& w) const {
  auto it = weyl_lookup_.find(w.matrix);
  if (it == weyl_lookup_.end()) throw std::invalid_argument("matrix is not a Weyl group element");
  return it->second;
}

std::pair<Weight, WeylElt> RootSystem::dominant_representative(const Weight& lambda) const {
  Weight mu = lambda;
  IntMatrix m = mat_identity(rank_);
  for (;;) {
    int i = 0;
    while (i < rank_ && mu[i] >= 0) ++i;
    if (i == rank_) break;
    mu = reflect(i, mu);
    m = mat_mul(simple_reflection(i).matrix, m);
  }
  return {mu, WeylElt{reduced_word(m), m}};
}

std::vector<int> RootSystem::one_line(const WeylElt& w) const {
  std::vector<int> p(static_cast<std::size_t>(rank_ + 1));
  for (int i = 0; i <= rank_; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  // w = s_{i1} ... s_{ik} as functions; one-line notation lists w(1..n).
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    for (auto& x : p) {
      if (x == *it + 1) x = *it + 2;
      else if (x == *it + 2) x = *it + 1;
    }
  }
  return p;
}

}  // namespace jzero
