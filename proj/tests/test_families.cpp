#include "doctest.h"
#include "fixtures.hpp"
#include "rla/error.hpp"
#include "rla/lattice.hpp"
#include "support.hpp"

using namespace rla;

namespace {

SkewPolynomial random_poly(std::mt19937_64& rng, const FiniteField& F, std::size_t deg) {
  std::vector<Scalar> c = testing::random_vector(rng, F, deg + 1);
  return SkewPolynomial(F, c);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ValidationError;
}

}  // namespace

TEST_CASE("skew multiplication examples") {
  const auto F4 = FiniteField::make(2, 2);
  const Scalar w = 2;  // u
  const SkewPolynomial t(F4, {0, 1}), omega(F4, {w});
  CHECK(sp_mul(t, omega) == SkewPolynomial(F4, {0, F4.mul(w, w)}));
  CHECK(sp_mul(omega, t) == SkewPolynomial(F4, {0, w}));
  const auto F5 = FiniteField::make(5);
  const SkewPolynomial a(F5, {1, 2, 3}), b(F5, {4, 0, 1});
  // Ordinary product over the prime field.
  CHECK(sp_mul(a, b) == SkewPolynomial(F5, {4, 8 % 5, (12 + 1) % 5, 2, 3}));
  const auto [q, r] = sp_right_divmod(SkewPolynomial(F5, {0, 0, 1}), SkewPolynomial(F5, {0, 1}));
  CHECK(q == SkewPolynomial(F5, {0, 1}));
  CHECK(r.is_zero());
  CHECK(kind_of([&] { sp_right_divmod(a, SkewPolynomial(F5, {})); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("skew ring laws on random polynomials") {
  std::mt19937_64 rng(17);
  for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 1u}}) {
    const auto F = FiniteField::make(p, k);
    for (int i = 0; i < 200; ++i) {
      const auto f = random_poly(rng, F, i % 6), g = random_poly(rng, F, i % 4), h = random_poly(rng, F, i % 3);
      CHECK(sp_mul(sp_mul(f, g), h) == sp_mul(f, sp_mul(g, h)));
      CHECK(sp_mul(f, sp_add(g, h)) == sp_add(sp_mul(f, g), sp_mul(f, h)));
      if (g.is_zero()) continue;
      const auto [q, r] = sp_right_divmod(f, g);
      CHECK(sp_add(sp_mul(q, g), r) == f);
      CHECK(r.degree() < g.degree());
    }
  }
}

TEST_CASE("irreducibility examples") {
  const auto F2 = FiniteField::make(2), F3 = FiniteField::make(3);
  CHECK(sp_irreducible(SkewPolynomial(F3, {2, 1})));
  CHECK(sp_irreducible(SkewPolynomial(F2, {1, 1, 1})));
  CHECK_FALSE(sp_irreducible(SkewPolynomial(F2, {0, 0, 1})));
  CHECK_FALSE(sp_irreducible(SkewPolynomial(F3, {0, 0, 1})));
  CHECK(kind_of([&] { sp_irreducible(SkewPolynomial(F2, {1})); }) == ErrorKind::BadParameters);
}

TEST_CASE("cyclic algebras from skew polynomials") {
  const auto F2 = FiniteField::make(2), F3 = FiniteField::make(3);
  const auto a = cyclic_from(SkewPolynomial(F3, {0, 1}));
  CHECK(a.dim() == 1);
  CHECK(a.pmap_image(0) == Vector{0});
  const auto b = cyclic_from(SkewPolynomial(F3, {F3.neg(1), 1}));
  CHECK(b.p_power(b.basis(0)) == b.basis(0));
  const auto c = cyclic_from(SkewPolynomial(F2, {1, 1, 1}));
  CHECK(c.pmap() == std::vector<Vector>{{0, 1}, {1, 1}});
  CHECK(SubalgebraLattice::enumerate(c, LatticeMode::restricted).size() == 2);
  CHECK(kind_of([&] { cyclic_from(SkewPolynomial(F3, {1, 2})); }) == ErrorKind::NotMonic);
}

TEST_CASE("irreducible exactly when the cyclic algebra has no proper restricted subalgebra") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto F = FiniteField::make(p, k);
    for (std::size_t d = 1; d <= 2; ++d)
      for (const auto& f : monic_skew_polynomials(F, d)) {
        const auto lat = SubalgebraLattice::enumerate(cyclic_from(f), LatticeMode::restricted);
        CHECK(sp_irreducible(f) == (lat.size() == 2));
      }
  }
}

TEST_CASE("generated families validate") {
  for (const auto& fx : testing::small_fixtures()) {
    CAPTURE(fx.name);
    CHECK(validate(fx.algebra).ok);
  }
  const auto F9 = FiniteField::make(3, 2);
  CHECK(validate(sl2(F9)).ok);
  CHECK(validate(usmn(F9)).ok);
  for (int mask = 0; mask < 8; ++mask)
    CHECK(validate(heisenberg(FiniteField::make(3), mask & 1, mask & 2, mask & 4)).ok);
}

TEST_CASE("family examples and parameter errors") {
  const auto F2 = FiniteField::make(2), F3 = FiniteField::make(3);
  const auto U = usmn(F2);
  CHECK(U.dim() == 4);
  CHECK(U.bracket(U.basis(0), U.basis(2)) == U.basis(3));
  const auto A = almost_abelian(F3, 2);
  CHECK(A.p_power(A.basis(0)) == A.basis(0));
  for (std::size_t i = 1; i <= 2; ++i) CHECK(A.bracket(A.basis(0), A.basis(i)) == A.basis(i));
  const auto P = prop_solvable(F3, {SkewPolynomial(F3, {2, 1})}, 1);
  CHECK(P.dim() == 3);
  CHECK(validate(P).ok);
  CHECK(P.p_power(P.basis(0)) == P.basis(0));
  CHECK(P.bracket(P.basis(2), P.basis(1)) == P.basis(1));
  CHECK(kind_of([&] { sl2(F2); }) == ErrorKind::BadParameters);
  CHECK(kind_of([&] { prop_solvable(F3, {}, 0); }) == ErrorKind::BadParameters);
  CHECK(kind_of([&] { prop_solvable(F3, {SkewPolynomial(F3, {0, 0, 1})}, 1); }) == ErrorKind::BadParameters);
  FamilySpec spec;
  spec.family = "usmn";
  spec.p = 2;
  CHECK(generate(spec) == U);
  spec.family = "nonsense";
  CHECK(kind_of([&] { generate(spec); }) == ErrorKind::BadParameters);
  const auto D = direct_sum(heisenberg_null(F3), torus(F3, 1));
  CHECK(D.dim() == 4);
  CHECK(validate(D).ok);
  CHECK(D.names() == std::vector<std::string>{"x", "y", "z", "e0"});
}
