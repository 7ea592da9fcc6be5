#include "doctest.h"
#include "jzero/rootdata.hpp"

#include <random>
#include <set>

using jzero::RootSystem;
using jzero::Weight;

TEST_CASE("type A invariants") {
  for (auto [tag, nroots, order, lw0] : {std::tuple{"A1", 1, 2, 1}, {"A2", 3, 6, 3}, {"A3", 6, 24, 6}}) {
    RootSystem rs = RootSystem::from_tag(tag);
    CHECK(static_cast<int>(rs.positive_roots().size()) == nroots);
    CHECK(rs.weyl_size() == order);
    auto w0 = rs.longest_element();
    CHECK(w0.length() == lw0);
    CHECK(rs.multiply(w0, w0) == rs.identity());
    for (auto& w : rs.enumerate_weyl()) {
      CHECK(w.length() <= lw0);
      CHECK(rs.length(w.matrix) == w.length());
      CHECK(rs.from_word(w.word) == w);
    }
    // w0 maps dominant to antidominant.
    Weight lam = rs.rho();
    Weight img = rs.act(w0, lam);
    for (int i = 0; i < rs.rank(); ++i) CHECK(img[i] <= 0);
    CHECK(rs.rho() == Weight(std::vector<int>(static_cast<std::size_t>(rs.rank()), 1)));
  }
}

TEST_CASE("Poincare polynomial of S_n at 1 counts W") {
  // prod_{i=1}^{n} [i+1]_t, evaluated coefficientwise against length counts.
  for (int n = 1; n <= 3; ++n) {
    RootSystem rs = RootSystem::from_tag("A" + std::to_string(n));
    std::vector<long long> poly{1};
    for (int i = 2; i <= n + 1; ++i) {
      std::vector<long long> next(poly.size() + static_cast<std::size_t>(i) - 1, 0);
      for (std::size_t a = 0; a < poly.size(); ++a)
        for (int b = 0; b < i; ++b) next[a + static_cast<std::size_t>(b)] += poly[a];
      poly = next;
    }
    std::vector<long long> counts(poly.size(), 0);
    for (auto& w : rs.enumerate_weyl()) ++counts[static_cast<std::size_t>(w.length())];
    CHECK(counts == poly);
  }
}

TEST_CASE("act examples") {
  RootSystem a1 = RootSystem::from_tag("A1");
  CHECK(a1.act(a1.simple_reflection(0), Weight({1})) == Weight({-1}));
  CHECK(a1.act(a1.identity(), Weight({5})) == Weight({5}));
  RootSystem a2 = RootSystem::from_tag("A2");
  // s_1 (0-indexed s0) . w1 = w1 - alpha1 = (1,0) - (2,-1) = (-1,1) = w2 - w1.
  CHECK(a2.act(a2.simple_reflection(0), Weight({1, 0})) == Weight({-1, 1}));
  CHECK_THROWS(a2.act(a2.simple_reflection(0), Weight({1})));
}

TEST_CASE("dominant_representative") {
  RootSystem a1 = RootSystem::from_tag("A1");
  auto [mu, w] = a1.dominant_representative(Weight({-3}));
  CHECK(mu == Weight({3}));
  CHECK(w == a1.simple_reflection(0));
  auto [mu2, w2] = a1.dominant_representative(Weight({2}));
  CHECK(mu2 == Weight({2}));
  CHECK(w2 == a1.identity());
  RootSystem a2 = RootSystem::from_tag("A2");
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int i = 0; i < 100; ++i) {
    Weight lam({d(rng), d(rng)});
    auto [m, ww] = a2.dominant_representative(lam);
    CHECK(m.is_dominant());
    CHECK(a2.act(ww, lam) == m);
  }
}

TEST_CASE("roots and descents") {
  RootSystem a3 = RootSystem::from_tag("A3");
  CHECK(a3.highest_root() == Weight({1, 0, 1}));
  for (auto& w : a3.enumerate_weyl())
    for (int i = 0; i < 3; ++i) {
      bool desc = a3.multiply(w, a3.simple_reflection(i)).length() < w.length();
      CHECK(a3.is_right_descent(w, i) == desc);
      bool ldesc = a3.multiply(a3.simple_reflection(i), w).length() < w.length();
      CHECK(a3.is_left_descent(w, i) == ldesc);
    }
  // One-line notation is a bijection onto S4.
  std::set<std::vector<int>> perms;
  for (auto& w : a3.enumerate_weyl()) perms.insert(a3.one_line(w));
  CHECK(perms.size() == 24);
  CHECK(a3.one_line(a3.longest_element()) == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("weight parsing and Cartan validation") {
  CHECK(Weight::parse("[1,-2]") == Weight({1, -2}));
  CHECK(Weight::parse("1,0") == Weight({1, 0}));
  CHECK_THROWS(Weight::parse("1,x"));
  CHECK_THROWS(RootSystem::from_tag("B2"));
  CHECK_THROWS(RootSystem::from_cartan({{2, -2}, {-1, 2}}, "B2"));
  CHECK_THROWS(RootSystem::from_cartan({{2, 1}, {1, 2}}, "bad"));
}
