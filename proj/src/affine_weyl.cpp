#include "jzero/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace jzero {

std::string AffineElt::to_string() const {
  std::string s = "t" + translation.to_string() + "·w[";
  for (std::size_t i = 0; i < finite.word.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(finite.word[i]);
  }
  return s + "]";
}

std::vector<int> AffineElt::key() const {
  std::vector<int> k = translation.coords();
  for (auto& row : finite.matrix) k.insert(k.end(), row.begin(), row.end());
  return k;
}

namespace {

// Integer matrix A and scale d with C^{-1} = A / d, by fraction-free Gauss-Jordan.
void scaled_inverse(const IntMatrix& c, IntMatrix& out, int& scale) {
  int n = static_cast<int>(c.size());
  // Rational elimination with (num, den) pairs over int64.
  struct Frac {
    long long n, d;
  };
  auto norm = [](Frac f) {
    if (f.d < 0) f = {-f.n, -f.d};
    long long g = std::gcd(std::llabs(f.n), f.d);
    if (g > 1) f = {f.n / g, f.d / g};
    return f;
  };
  auto sub = [&](Frac a, Frac b) { return norm({a.n * b.d - b.n * a.d, a.d * b.d}); };
  auto mul = [&](Frac a, Frac b) { return norm({a.n * b.n, a.d * b.d}); };
  auto div = [&](Frac a, Frac b) { return norm({a.n * b.d, a.d * b.n}); };
  std::vector<std::vector<Frac>> m(static_cast<std::size_t>(n), std::vector<Frac>(static_cast<std::size_t>(2 * n), Frac{0, 1}));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = {c[i][j], 1};
    m[i][n + i] = {1, 1};
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (m[p][col].n == 0) ++p;
    std::swap(m[p], m[col]);
    Frac piv = m[col][col];
    for (auto& x : m[col]) x = div(x, piv);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].n == 0) continue;
      Frac f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] = sub(m[r][j], mul(f, m[col][j]));
    }
  }
  long long l = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) l = std::lcm(l, m[i][n + j].d);
  out.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = static_cast<int>(m[i][n + j].n * (l / m[i][n + j].d));
  scale = static_cast<int>(l);
}

}  // namespace

AffineWeyl::AffineWeyl(RootSystem rs, bool affine) : rs_(std::move(rs)), affine_(affine) {
  scaled_inverse(rs_.cartan_matrix(), root_lattice_inv_, root_lattice_scale_);
  for (int i = 0; i < rs_.rank(); ++i) gens_.push_back(from_finite(rs_.simple_reflection(i)));
  if (affine_) {
    const Weight& theta = rs_.highest_root();
    int n = rs_.rank();
    // s_theta(lambda) = lambda - <lambda, theta^vee> theta.
    IntMatrix m = mat_identity(n);
    const auto& sc = rs_.positive_root_simple_coords(rs_.highest_root_index());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] -= theta[r] * sc[c];
    gens_.push_back(AffineElt{theta, WeylElt{rs_.reduced_word(m), m}});
  }
}

std::shared_ptr<const AffineWeyl> AffineWeyl::from_tag(const std::string& tag) {
  bool aff = !tag.empty() && tag.back() == '~';
  std::string base = aff ? tag.substr(0, tag.size() - 1) : tag;
  return std::make_shared<const AffineWeyl>(RootSystem::from_tag(base), aff);
}

AffineElt AffineWeyl::identity() const { return AffineElt{Weight::zero(rs_.rank()), rs_.identity()}; }

AffineElt AffineWeyl::generator(int i) const {
  if (i < 0 || i >= num_generators()) throw std::out_of_range("generator index " + std::to_string(i) + " out of range");
  return gens_[static_cast<std::size_t>(i)];
}

AffineElt AffineWeyl::translation(const Weight& lambda) const {
  if (lambda.rank() != rs_.rank()) throw std::invalid_argument("rank mismatch");
  return AffineElt{lambda, rs_.identity()};
}

AffineElt AffineWeyl::from_finite(const WeylElt& w) const { return AffineElt{Weight::zero(rs_.rank()), w}; }

AffineElt AffineWeyl::multiply(const AffineElt& a, const AffineElt& b) const {
  if (a.translation.rank() != rs_.rank() || b.translation.rank() != rs_.rank())
    throw std::invalid_argument("rank mismatch in affine multiplication");
  return AffineElt{a.translation + a.finite.act(b.translation), rs_.multiply(a.finite, b.finite)};
}

AffineElt AffineWeyl::inverse(const AffineElt& a) const {
  // (t_l w)^{-1} = w^{-1} t_{-l} = t_{-w^{-1} l} w^{-1}.
  WeylElt wi = rs_.inverse(a.finite);
  return AffineElt{-wi.act(a.translation), wi};
}

int AffineWeyl::length(const AffineElt& a) const {
  const auto& neg = rs_.inverse_negated_roots(rs_.weyl_index(a.finite));
  int l = 0;
  int np = static_cast<int>(rs_.positive_roots().size());
  for (int k = 0; k < np; ++k) {
    int p = rs_.pairing(a.translation, k);
    l += neg[static_cast<std::size_t>(k)] ? std::abs(p - 1) : std::abs(p);
  }
  return l;
}

bool AffineWeyl::in_root_lattice(const Weight& lambda) const {
  int n = rs_.rank();
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long long>(root_lattice_inv_[i][j]) * lambda[j];
    if (s % root_lattice_scale_ != 0) return false;
  }
  return true;
}

bool AffineWeyl::in_coxeter_part(const AffineElt& a) const {
  return affine_ ? in_root_lattice(a.translation) : a.translation.is_zero();
}

AffineElt AffineWeyl::from_word(const std::vector<int>& word) const {
  AffineElt a = identity();
  for (int s : word) a = multiply(a, generator(s));
  return a;
}

bool AffineWeyl::is_right_descent(const AffineElt& a, int s) const {
  return length(multiply(a, generator(s))) < length(a);
}

bool AffineWeyl::is_left_descent(const AffineElt& a, int s) const {
  return length(multiply(generator(s), a)) < length(a);
}

std::vector<int> AffineWeyl::descents_right(const AffineElt& a) const {
  std::vector<int> d;
  for (int s = 0; s < num_generators(); ++s)
    if (is_right_descent(a, s)) d.push_back(s);
  return d;
}

std::vector<int> AffineWeyl::descents_left(const AffineElt& a) const {
  std::vector<int> d;
  for (int s = 0; s < num_generators(); ++s)
    if (is_left_descent(a, s)) d.push_back(s);
  return d;
}

std::vector<int> AffineWeyl::reduced_word(const AffineElt& a0) const {
  std::vector<int> rev;
  AffineElt a = a0;
  int l = length(a);
  while (l > 0) {
    int found = -1;
    for (int s = 0; s < num_generators() && found < 0; ++s) {
      AffineElt b = multiply(a, generator(s));
      if (length(b) < l) {
        found = s;
        a = b;
      }
    }
    if (found < 0) break;
    rev.push_back(found);
    --l;
  }
  if (!(a == identity())) throw std::invalid_argument("element " + a0.to_string() + " is outside the Coxeter group");
  return std::vector<int>(rev.rbegin(), rev.rend());
}

bool AffineWeyl::canonical_less(const AffineElt& a, const AffineElt& b) const {
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  if (a.translation != b.translation) return a.translation < b.translation;
  return a.finite.word < b.finite.word;
}

std::vector<AffineElt> AffineWeyl::enumerate_ball(int L, std::size_t max_elements) const {
  if (L < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::vector<AffineElt> all{identity()};
  std::vector<AffineElt> level{identity()};
  for (int k = 0; k < L; ++k) {
    std::set<std::vector<int>> seen;
    std::vector<AffineElt> next;
    for (const auto& x : level)
      for (int s = 0; s < num_generators(); ++s) {
        AffineElt y = multiply(x, generator(s));
        if (length(y) != k + 1) continue;
        if (seen.insert(y.key()).second) next.push_back(std::move(y));
      }
    if (next.empty()) break;
    if (all.size() + next.size() > max_elements)
      throw std::length_error("ball enumeration exceeds the element cap of " + std::to_string(max_elements));
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), [this](const AffineElt& a, const AffineElt& b) { return canonical_less(a, b); });
  return all;
}

bool AffineWeyl::bruhat_leq(const AffineElt& y0, const AffineElt& w0) const {
  // Property Z: for ws < w, y <= w iff min(y, ys) <= ws.
  AffineElt y = y0, w = w0;
  int ly = length(y), lw = length(w);
  while (true) {
    if (ly > lw) return false;
    if (lw == 0) return y == w;
    if (ly == lw) return y == w;
    int s = -1;
    AffineElt ws;
    for (int t = 0; t < num_generators() && s < 0; ++t) {
      AffineElt c = multiply(w, generator(t));
      if (length(c) < lw) {
        s = t;
        ws = std::move(c);
      }
    }
    if (s < 0) return y == w;  // length-zero element outside the Coxeter part
    AffineElt ys = multiply(y, generator(s));
    int lys = length(ys);
    if (lys < ly) {
      y = std::move(ys);
      ly = lys;
    }
    w = std::move(ws);
    --lw;
  }
}

std::string AffineWeyl::word_string(const AffineElt& a) const {
  auto word = reduced_word(a);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

AffineElt AffineWeyl::parse(const std::string& text0) const {
  std::string text;
  for (char ch : text0)
    if (ch != ' ') text += ch;
  if (text.empty()) throw std::invalid_argument("empty element");
  if (text == "e" || text == "1") return identity();
  if (text[0] == 't') {
    // t[..]<sep>w[..]; separator is U+00B7, '*' or '.'.
    auto close = text.find(']');
    auto wpos = text.find("w[", close == std::string::npos ? 0 : close);
    if (close == std::string::npos || wpos == std::string::npos || text.back() != ']')
      throw std::invalid_argument("bad element '" + text0 + "'");
    Weight lam = Weight::parse(text.substr(1, close));
    if (lam.rank() != rs_.rank()) throw std::invalid_argument("rank mismatch in '" + text0 + "'");
    std::string sep = text.substr(close + 1, wpos - close - 1);
    if (sep != "·" && sep != "*" && sep != ".") throw std::invalid_argument("bad separator in '" + text0 + "'");
    std::string inner = text.substr(wpos + 2, text.size() - wpos - 3);
    std::vector<int> word;
    if (!inner.empty()) word = Weight::parse(inner).coords();
    for (int i : word)
      if (i < 0 || i >= rs_.rank()) throw std::invalid_argument("finite word index out of range in '" + text0 + "'");
    return AffineElt{lam, rs_.from_word(word)};
  }
  // Word form: s0s1s2, optionally separated by '*' or '.'.
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '*' || text[i] == '.') {
      ++i;
      continue;
    }
    if (text[i] != 's') throw std::invalid_argument("bad element '" + text0 + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("bad element '" + text0 + "'");
    int g = std::stoi(text.substr(start, i - start));
    if (g >= num_generators()) throw std::invalid_argument("generator s" + std::to_string(g) + " out of range");
    word.push_back(g);
  }
  return from_word(word);
}

}  // namespace jzero
