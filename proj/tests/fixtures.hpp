#pragma once

#include <string>
#include <vector>

#include "rla/families.hpp"

namespace rla::testing {

struct Fixture {
  std::string name;
  RestrictedLieAlgebra algebra;
};

// Small algebras whose lattices are cheap enough for brute-force oracles.
inline std::vector<Fixture> small_fixtures() {
  std::vector<Fixture> out;
  const auto f2 = FiniteField::make(2), f3 = FiniteField::make(3), f4 = FiniteField::make(2, 2),
             f5 = FiniteField::make(5);
  for (const auto& [tag, F] : {std::pair{"GF2", f2}, {"GF3", f3}}) {
    const std::string t = tag;
    out.push_back({"strongly_abelian2/" + t, strongly_abelian(F, 2)});
    out.push_back({"strongly_abelian3/" + t, strongly_abelian(F, 3)});
    out.push_back({"torus1/" + t, torus(F, 1)});
    out.push_back({"torus2/" + t, torus(F, 2)});
    out.push_back({"almost_abelian1/" + t, almost_abelian(F, 1)});
    out.push_back({"almost_abelian2/" + t, almost_abelian(F, 2)});
    out.push_back({"heisenberg_null/" + t, heisenberg_null(F)});
    out.push_back({"heisenberg_xz/" + t, heisenberg(F, true, false, false)});
    out.push_back({"heisenberg_zz/" + t, heisenberg(F, false, false, true)});
    out.push_back({"usmn/" + t, usmn(F)});
    out.push_back({"abelian_mixed/" + t, direct_sum(torus(F, 1), strongly_abelian(F, 2))});
    out.push_back({"prop_solvable/" + t, prop_solvable(F, {SkewPolynomial(F, {F.neg(1), 1})}, 1)});
  }
  out.push_back({"cyclic_t2t1/GF2", cyclic_from(SkewPolynomial(f2, {1, 1, 1}))});
  out.push_back({"cyclic_t2/GF3", cyclic_from(SkewPolynomial(f3, {0, 0, 1}))});
  out.push_back({"heisenberg_null/GF4", heisenberg_null(f4)});
  out.push_back({"torus1_plus_aa1/GF3", direct_sum(torus(f3, 1), almost_abelian(f3, 1))});
  out.push_back({"sl2/GF3", sl2(f3)});
  out.push_back({"sl2/GF5", sl2(f5)});
  out.push_back({"almost_abelian2/GF5", almost_abelian(f5, 2)});
  out.push_back({"zero/GF2", RestrictedLieAlgebra::zero(f2)});
  return out;
}

}  // namespace rla::testing
