#include "doctest.h"
#include "jzero/repring.hpp"

#include <random>

using jzero::FormalCharacter;
using jzero::RepresentationRing;
using jzero::RootSystem;
using jzero::VirtualCharacter;
using jzero::Weight;

namespace {

// Character product followed by highest-weight peeling.
VirtualCharacter tensor_by_peeling(const RepresentationRing& R, const Weight& a, const Weight& b) {
  FormalCharacter prod;
  for (const auto& [x, m] : R.weyl_character(a).terms)
    for (const auto& [y, n] : R.weyl_character(b).terms) prod.add(x + y, m * n);
  return R.decompose(prod);
}

// Demazure operator D_i f = (f - e^{-alpha_i} s_i f) / (1 - e^{-alpha_i}), on monomials.
FormalCharacter demazure(const RootSystem& rs, int i, const FormalCharacter& f) {
  FormalCharacter out;
  for (const auto& [mu, c] : f.terms) {
    int n = mu[i];
    const Weight& a = rs.simple_root(i);
    if (n >= 0) {
      for (int k = 0; k <= n; ++k) out.add(mu - k * a, c);
    } else if (n <= -2) {
      for (int k = 1; k <= -n - 1; ++k) out.add(mu + k * a, -c);
    }
  }
  return out;
}

VirtualCharacter euler_by_demazure(const RepresentationRing& R, const Weight& lambda) {
  const RootSystem& rs = R.root_system();
  FormalCharacter f;
  f.add(lambda, 1);
  const auto& word = rs.longest_element().word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure(rs, *it, f);
  return R.decompose(f);
}

}  // namespace

TEST_CASE("weyl_character examples") {
  RepresentationRing a1(RootSystem::from_tag("A1"));
  FormalCharacter v1;
  v1.add(Weight({1}), 1);
  v1.add(Weight({-1}), 1);
  CHECK(a1.weyl_character(Weight({1})) == v1);
  RepresentationRing a2(RootSystem::from_tag("A2"));
  CHECK(a2.weyl_character(Weight({1, 0})).total() == 3);
  CHECK(a2.weyl_character(Weight({1, 1})).terms.at(Weight({0, 0})) == 2);
  CHECK_THROWS(a2.weyl_character(Weight({-1, 0})));
}

TEST_CASE("Freudenthal agrees with the Weyl alternating sum and the dimension formula") {
  for (int n = 1; n <= 3; ++n) {
    RepresentationRing R(RootSystem::from_tag("A" + std::to_string(n)));
    int cnt = 1;
    for (int i = 0; i < n; ++i) cnt *= 5;
    for (int code = 0; code < cnt; ++code) {
      std::vector<int> c;
      int x = code;
      for (int i = 0; i < n; ++i) {
        c.push_back(x % 5);
        x /= 5;
      }
      Weight lam(c);
      const auto& f = R.weyl_character(lam);
      CHECK(f == R.weyl_character_alternating(lam));
      CHECK(f.total() == R.dim(lam));
    }
  }
}

TEST_CASE("dim examples") {
  RepresentationRing a1(RootSystem::from_tag("A1"));
  CHECK(a1.dim(Weight({0})) == 1);
  for (int n = 0; n < 8; ++n) CHECK(a1.dim(Weight({n})) == n + 1);
  RepresentationRing a3(RootSystem::from_tag("A3"));
  CHECK(a3.dim(Weight({0, 1, 0})) == 6);
  CHECK(a3.weyl_character(Weight({0, 1, 0})).total() == 6);
}

TEST_CASE("tensor_decompose: examples and peeling oracle") {
  RepresentationRing a1(RootSystem::from_tag("A1"));
  VirtualCharacter cg;
  cg.add(Weight({2}), 1);
  cg.add(Weight({0}), 1);
  CHECK(a1.tensor_decompose(Weight({1}), Weight({1})) == cg);
  RepresentationRing a2(RootSystem::from_tag("A2"));
  VirtualCharacter eight_one;
  eight_one.add(Weight({1, 1}), 1);
  eight_one.add(Weight({0, 0}), 1);
  CHECK(a2.tensor_decompose(Weight({1, 0}), Weight({0, 1})) == eight_one);
  CHECK(tensor_by_peeling(a2, Weight({1, 0}), Weight({0, 1})) == eight_one);
  CHECK(a2.tensor_decompose(Weight({2, 1}), Weight({0, 0})) == VirtualCharacter::irreducible(Weight({2, 1})));
  CHECK_THROWS(a2.tensor_decompose(Weight({-1, 0}), Weight({0, 0})));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(0, 3);
  for (const char* tag : {"A2", "A3"}) {
    RepresentationRing R(RootSystem::from_tag(tag));
    int n = R.rank();
    auto rnd = [&]() {
      std::vector<int> c;
      for (int i = 0; i < n; ++i) c.push_back(n == 3 ? d(rng) % 2 : d(rng));
      return Weight(c);
    };
    for (int i = 0; i < 20; ++i) {
      Weight a = rnd(), b = rnd(), c = rnd();
      const auto& ab = R.tensor_decompose(a, b);
      CHECK(ab == tensor_by_peeling(R, a, b));
      CHECK(ab == R.tensor_decompose(b, a));
      for (auto& [w, m] : ab.terms) CHECK(m > 0);
      CHECK(R.dim(ab) == R.dim(a) * R.dim(b));
      VirtualCharacter A = VirtualCharacter::irreducible(a), B = VirtualCharacter::irreducible(b),
                       C = VirtualCharacter::irreducible(c);
      CHECK(R.multiply(R.multiply(A, B), C) == R.multiply(A, R.multiply(B, C)));
    }
  }
}

TEST_CASE("euler_characteristic: Borel-Weil-Bott vs Demazure operators") {
  RepresentationRing a1(RootSystem::from_tag("A1"));
  CHECK(a1.euler_characteristic(Weight({3})) == VirtualCharacter::irreducible(Weight({3})));
  CHECK(a1.euler_characteristic(Weight({-1})).is_zero());
  VirtualCharacter m1;
  m1.add(Weight({0}), -1);
  CHECK(a1.euler_characteristic(Weight({-2})) == m1);
  for (int n = 1; n <= 3; ++n) {
    RepresentationRing R(RootSystem::from_tag("A" + std::to_string(n)));
    const auto& rs = R.root_system();
    std::mt19937_64 rng(static_cast<unsigned>(n));
    std::uniform_int_distribution<int> d(-4, 3);
    for (int i = 0; i < 40; ++i) {
      std::vector<int> c;
      for (int k = 0; k < n; ++k) c.push_back(d(rng));
      Weight lam(c);
      CHECK(R.euler_characteristic(lam) == euler_by_demazure(R, lam));
      // Dot-action antisymmetry.
      for (const auto& w : rs.enumerate_weyl()) {
        Weight dot = w.act(lam + rs.rho()) - rs.rho();
        VirtualCharacter lhs = R.euler_characteristic(dot);
        VirtualCharacter rhs = R.euler_characteristic(lam).scaled(w.length() % 2 ? -1 : 1);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("virtual characters: peeling round-trip and graded coefficients") {
  RepresentationRing a2(RootSystem::from_tag("A2"));
  VirtualCharacter v;
  v.add(Weight({2, 0}), 3);
  v.add(Weight({0, 1}), -2);
  CHECK(a2.decompose(a2.character_of(v)) == v);
  auto g = jzero::to_graded(v);
  auto gg = a2.multiply(g, g);
  CHECK(gg == jzero::to_graded(a2.multiply(v, v)));
  CHECK(jzero::bar(gg) == gg);
}
