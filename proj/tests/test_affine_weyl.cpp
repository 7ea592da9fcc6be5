#include "doctest.h"
#include "jzero/affine_weyl.hpp"
#include "jzero/element_table.hpp"

#include <map>
#include <random>
#include <set>

using jzero::AffineElt;
using jzero::AffineWeyl;
using jzero::Weight;

namespace {

// Coefficients of W(t) / prod_i (1 - t^{e_i}) for A_n (exponents 1..n), up to t^L.
std::vector<long long> bott_series(int n, int L) {
  std::vector<long long> p{1};
  for (int i = 2; i <= n + 1; ++i) {
    std::vector<long long> next(p.size() + static_cast<std::size_t>(i) - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += p[a];
    p = next;
  }
  p.resize(static_cast<std::size_t>(L) + 1, 0);
  for (int e = 1; e <= n; ++e)
    for (int k = e; k <= L; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - e)];
  return p;
}

// Minimal word length by breadth-first search over words.
std::map<std::vector<int>, int> word_lengths(const AffineWeyl& g, int L) {
  std::map<std::vector<int>, int> dist{{g.identity().key(), 0}};
  std::vector<AffineElt> frontier{g.identity()};
  for (int k = 1; k <= L; ++k) {
    std::vector<AffineElt> next;
    for (auto& x : frontier)
      for (int s = 0; s < g.num_generators(); ++s) {
        AffineElt y = g.multiply(x, g.generator(s));
        if (dist.emplace(y.key(), k).second) next.push_back(y);
      }
    frontier = next;
  }
  return dist;
}

// Subword property on a given reduced word.
bool subword_leq(const AffineWeyl& g, const AffineElt& y, const std::vector<int>& word) {
  std::set<std::vector<int>> reach{g.identity().key()};
  std::vector<AffineElt> elts{g.identity()};
  for (int s : word) {
    std::vector<AffineElt> add;
    for (auto& e : elts) {
      AffineElt f = g.multiply(e, g.generator(s));
      if (reach.insert(f.key()).second) add.push_back(f);
    }
    elts.insert(elts.end(), add.begin(), add.end());
  }
  return reach.count(y.key()) > 0;
}

// All reduced words of w (via left descents recursively).
void all_reduced_words(const AffineWeyl& g, const AffineElt& w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  if (g.length(w) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int s : g.descents_right(w)) {
    suffix.push_back(s);
    all_reduced_words(g, g.multiply(w, g.generator(s)), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

TEST_CASE("affine A1 basics") {
  auto g = AffineWeyl::from_tag("A1~");
  CHECK(g->num_generators() == 2);
  AffineElt s0 = g->generator(0), s1 = g->generator(1);
  CHECK(g->length(g->identity()) == 0);
  CHECK(g->length(s0) == 1);
  CHECK(g->length(s1) == 1);
  // s1 s0 is the translation by +alpha in the dominant-alcove convention.
  AffineElt s1s0 = g->multiply(s1, s0);
  CHECK(s1s0 == g->translation(Weight({2})));
  AffineElt p = g->identity();
  for (int n = 1; n <= 6; ++n) {
    p = g->multiply(p, s1s0);
    CHECK(g->length(p) == 2 * n);
    CHECK(p == g->translation(Weight({2 * n})));
  }
  auto ball = g->enumerate_ball(2);
  CHECK(ball.size() == 5);
  CHECK(g->enumerate_ball(12).size() == 25);
}

TEST_CASE("multiply and inverse") {
  auto g = AffineWeyl::from_tag("A2~");
  CHECK(g->multiply(g->translation(Weight({1, 0})), g->translation(Weight({0, 2}))) == g->translation(Weight({1, 2})));
  for (auto& a : g->enumerate_ball(4)) {
    CHECK(g->multiply(a, g->inverse(a)) == g->identity());
    CHECK(g->length(a) == g->length(g->inverse(a)));
    CHECK(g->from_word(g->reduced_word(a)) == a);
    CHECK(static_cast<int>(g->reduced_word(a).size()) == g->length(a));
    for (int s = 0; s < 3; ++s) {
      bool d = g->length(g->multiply(a, g->generator(s))) < g->length(a);
      CHECK(g->is_right_descent(a, s) == d);
    }
  }
  CHECK(g->reduced_word(g->identity()).empty());
  CHECK(g->enumerate_ball(1).size() == 4);
  CHECK_THROWS(g->multiply(g->identity(), AffineElt{Weight({1}), g->root_system().identity()}));
}

TEST_CASE("length formula agrees with word length and subadditivity") {
  for (const char* tag : {"A1~", "A2~", "A3~"}) {
    auto g = AffineWeyl::from_tag(tag);
    int L = std::string(tag) == "A3~" ? 5 : 7;
    auto dist = word_lengths(*g, L);
    for (auto& a : g->enumerate_ball(L)) CHECK(dist.at(a.key()) == g->length(a));
    std::size_t within = 0;
    for (auto& [k, d] : dist)
      if (d <= L) ++within;
    CHECK(within == g->enumerate_ball(L).size());
    auto ball = g->enumerate_ball(3);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    for (int i = 0; i < 100; ++i) {
      auto& a = ball[pick(rng)];
      auto& b = ball[pick(rng)];
      AffineElt ab = g->multiply(a, b);
      CHECK(g->length(ab) <= g->length(a) + g->length(b));
      auto wa = g->reduced_word(a), wb = g->reduced_word(b);
      std::vector<int> cat = wa;
      cat.insert(cat.end(), wb.begin(), wb.end());
      bool reduced = g->length(ab) == static_cast<int>(cat.size());
      CHECK(reduced == (g->length(g->from_word(cat)) == g->length(a) + g->length(b)));
    }
  }
}

TEST_CASE("ball sizes match the affine Poincare series") {
  for (int n = 1; n <= 3; ++n) {
    auto g = AffineWeyl::from_tag("A" + std::to_string(n) + "~");
    int L = n == 3 ? 6 : 10;
    auto series = bott_series(n, L);
    long long cum = 0;
    std::size_t prev = 0;
    for (int k = 0; k <= L; ++k) {
      cum += series[static_cast<std::size_t>(k)];
      auto ball = g->enumerate_ball(k);
      CHECK(static_cast<long long>(ball.size()) == cum);
      CHECK(ball.size() > prev);
      prev = ball.size();
    }
  }
}

TEST_CASE("Bruhat order: examples and the subword oracle") {
  auto g = AffineWeyl::from_tag("A1~");
  AffineElt s0 = g->generator(0), s1 = g->generator(1);
  AffineElt s0s1 = g->multiply(s0, s1);
  CHECK(g->bruhat_leq(s0, s0s1));
  CHECK(g->bruhat_leq(s1, s0s1));
  CHECK(g->bruhat_leq(g->identity(), s0s1));
  CHECK_FALSE(g->bruhat_leq(s0s1, s0));

  auto g2 = AffineWeyl::from_tag("A2~");
  auto ball = g2->enumerate_ball(5);
  jzero::ElementTable table(g2, 5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int i = 0; i < 120; ++i) {
    auto& w = ball[pick(rng)];
    std::vector<std::vector<int>> words;
    std::vector<int> suffix;
    all_reduced_words(*g2, w, suffix, words);
    for (int j = 0; j < 8; ++j) {
      auto& y = ball[pick(rng)];
      bool expect = subword_leq(*g2, y, words.front());
      for (auto& wd : words) CHECK(subword_leq(*g2, y, wd) == expect);
      CHECK(g2->bruhat_leq(y, w) == expect);
      CHECK(table.leq(table.require(y), table.require(w)) == expect);
    }
  }
}

TEST_CASE("element table") {
  auto g = AffineWeyl::from_tag("A2~");
  jzero::ElementTable t(g, 6);
  CHECK(t.size() == 1 + 3 + 6 + 9 + 12 + 15 + 18);
  for (int i = 0; i < t.size(); ++i) {
    CHECK(t.find(t.element(i)) == i);
    CHECK(t.element(t.inverse(i)) == g->inverse(t.element(i)));
    CHECK(g->from_word(t.reduced_word(i)) == t.element(i));
    for (int s = 0; s < 3; ++s) {
      int r = t.right(i, s);
      if (r >= 0) CHECK(t.element(r) == g->multiply(t.element(i), g->generator(s)));
      else CHECK(t.length(i) == 6);
    }
    if (i > 0) CHECK(t.length(i - 1) <= t.length(i));
  }
  CHECK_THROWS_AS(t.require(g->translation(Weight({6, 6}))), jzero::TruncationError);
}

TEST_CASE("canonical string round-trips") {
  auto g = AffineWeyl::from_tag("A2~");
  for (auto& a : g->enumerate_ball(4)) {
    CHECK(g->parse(a.to_string()) == a);
    CHECK(g->parse(g->word_string(a)) == a);
  }
  AffineElt x = g->parse("t[1,1]*w[0]");
  CHECK(x == g->parse("t[1,1].w[0]"));
  CHECK(g->parse("s2") == g->generator(2));
  CHECK(g->generator(2).to_string() == "t[1,1]·w[0,1,0]");
  CHECK_THROWS(g->parse("s3"));
  CHECK_THROWS(g->parse("t[1]·w[]"));
  CHECK_THROWS(g->parse("x0"));
  // Weight-lattice translations outside the root lattice are not Coxeter elements.
  AffineElt w1 = g->translation(Weight({1, 0}));
  CHECK_FALSE(g->in_coxeter_part(w1));
  CHECK_THROWS(g->reduced_word(w1));
}
