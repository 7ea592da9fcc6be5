#include "doctest.h"
#include "jzero/steinberg.hpp"

#include <map>

using jzero::RepresentationRing;
using jzero::RootSystem;
using jzero::SteinbergBasis;
using jzero::VirtualCharacter;
using jzero::Weight;

namespace {

std::shared_ptr<const RepresentationRing> ring(const char* tag) {
  return std::make_shared<const RepresentationRing>(RootSystem::from_tag(tag));
}

// Leibniz determinant over R(G), for small matrices.
VirtualCharacter leibniz_det(const RepresentationRing& R, const jzero::RMatrix& m) {
  int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  VirtualCharacter det;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
    VirtualCharacter term = jzero::triv(R.rank());
    for (int i = 0; i < n && !term.is_zero(); ++i) term = R.multiply(term, m(i, perm[static_cast<std::size_t>(i)]));
    det += term.scaled(inv % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("A1 weights and self-duality") {
  SteinbergBasis sb(ring("A1"));
  const auto& rs = sb.root_system();
  auto s = rs.simple_reflection(0);
  CHECK(sb.steinberg_weight(rs.identity()) == Weight({0}));
  CHECK(sb.steinberg_weight(s) == Weight({-1}));
  CHECK(sb.dual_weight(rs.identity()) == std::pair{Weight({0}), 0});
  CHECK(sb.dual_weight(s) == std::pair{Weight({-1}), 1});
  CHECK(sb.pairing_matrix() == jzero::identity_rmatrix(2, 1));
  CHECK(sb.pairing(s, s) == jzero::triv(1));
}

TEST_CASE("A2 pairing is the identity") {
  SteinbergBasis sb(ring("A2"));
  CHECK(sb.x(0) == Weight({0, 0}));
  for (int w = 0; w < 6; ++w)
    for (int v = 0; v < 6; ++v) CHECK(sb.pairing(w, v) == (w == v ? jzero::triv(2) : VirtualCharacter()));
  auto rep = sb.nondegeneracy_check();
  CHECK(rep.is_identity);
  CHECK(rep.det_is_unit);
  CHECK(leibniz_det(sb.rep(), sb.pairing_matrix()) == rep.det);
}

TEST_CASE("A3 pairing: not the identity, invertible, correction row") {
  SteinbergBasis sb(ring("A3"));
  const auto& m = sb.pairing_matrix();
  int offdiag = 0;
  for (int w = 0; w < 24; ++w)
    for (int v = 0; v < 24; ++v) {
      // Entries are integral virtual characters; here all are 0 or ±triv.
      if (w == v) CHECK(m(w, v) == jzero::triv(3));
      else if (!m(w, v).is_zero()) {
        ++offdiag;
        CHECK(jzero::unit_sign(m(w, v)) != 0);
      }
    }
  CHECK(offdiag == 8);
  auto rep = sb.nondegeneracy_check();
  CHECK_FALSE(rep.is_identity);
  CHECK(rep.unit_pivots);
  CHECK(rep.det_is_unit);
  // Inverse really is an inverse.
  CHECK(jzero::mat_mul(sb.rep(), m, sb.inverse_pairing_matrix()) == jzero::identity_rmatrix(24, 3));
  CHECK(jzero::mat_mul(sb.rep(), sb.inverse_pairing_matrix(), m) == jzero::identity_rmatrix(24, 3));

  auto dc = sb.verify_dual_correction();
  REQUIRE(dc.sigma >= 0);
  CHECK(dc.column_e_units.size() == 2);
  CHECK(dc.correction_holds);
  CHECK(dc.per_w_pass.size() == 24);
  // sigma is the product of the two singular permutations 3412 and 4231.
  CHECK(dc.sigma_one_line == std::vector<int>{2, 4, 1, 3});
  CHECK(sb.pairing(dc.sigma, 0) == jzero::triv(3).scaled(-1));
}

TEST_CASE("bilinearity: twisting by V(mu) multiplies pairing values") {
  // chi(lambda) [V(mu)] = sum over weights nu of V(mu) of chi(lambda + nu).
  auto R = ring("A2");
  SteinbergBasis sb(R);
  for (Weight mu : {Weight({1, 0}), Weight({1, 1})})
    for (int w = 0; w < 6; ++w)
      for (int v = 0; v < 6; ++v) {
        VirtualCharacter lhs = R->multiply(sb.pairing(w, v), VirtualCharacter::irreducible(mu));
        VirtualCharacter rhs;
        for (const auto& [nu, m] : R->weyl_character(mu).terms)
          rhs += R->euler_characteristic(sb.x(w) + sb.y(v) + nu).scaled(m * (sb.shift(v) % 2 ? -1 : 1));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("unit-pivot determinant matches Leibniz on a small matrix") {
  auto R = ring("A1");
  jzero::RMatrix m(2, 2);
  m(0, 0) = jzero::triv(1);
  m(0, 1) = VirtualCharacter::irreducible(Weight({1}));
  m(1, 0) = VirtualCharacter::irreducible(Weight({2}));
  m(1, 1) = jzero::triv(1) + VirtualCharacter::irreducible(Weight({1})) + VirtualCharacter::irreducible(Weight({3}));
  auto r = jzero::unit_pivot_invert(*R, m);
  REQUIRE(r.ok);
  CHECK(r.det == leibniz_det(*R, m));
  CHECK(jzero::mat_mul(*R, m, r.inverse) == jzero::identity_rmatrix(2, 1));
}
