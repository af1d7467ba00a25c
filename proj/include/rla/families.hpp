#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/subspace.hpp"

namespace rla {

/// Element of the skew polynomial ring F[t; σ] with σ the Frobenius, so that
/// t·α = α^p·t. Coefficients are stored in ascending degree with no trailing
/// zeros.
class SkewPolynomial {
 public:
  SkewPolynomial(FiniteField field, std::vector<Scalar> coeffs);

  const FiniteField& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Scalar coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  FiniteField field_;
  std::vector<Scalar> c_;
};

SkewPolynomial sp_add(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial sp_sub(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial sp_mul(const SkewPolynomial& f, const SkewPolynomial& g);
/// (Q, R) with f = Q·g + R and deg R < deg g.
std::pair<SkewPolynomial, SkewPolynomial> sp_right_divmod(const SkewPolynomial& f, const SkewPolynomial& g);
/// No monic right factor of degree strictly between 0 and deg f.
bool sp_irreducible(const SkewPolynomial& f, std::uint64_t budget = kDefaultBudget);
/// Every monic polynomial of the given degree, coefficients in odometer order.
std::vector<SkewPolynomial> monic_skew_polynomials(const FiniteField& field, std::size_t degree);

/// Abelian algebra on v_0..v_{s-1} with v_k^[p] = v_{k+1} and
/// v_{s-1}^[p] = -Σ α_k v_k, for monic f = t^s + Σ α_k t^k.
RestrictedLieAlgebra cyclic_from(const SkewPolynomial& f);

/// Block-diagonal sum; names of the second summand are suffixed when they
/// clash with the first.
RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);

enum class AbelianPmap { zero, toral, custom };

RestrictedLieAlgebra abelian(const FiniteField& f, std::size_t n, AbelianPmap kind = AbelianPmap::zero,
                             const std::vector<Vector>& custom = {});
RestrictedLieAlgebra strongly_abelian(const FiniteField& f, std::size_t n);
RestrictedLieAlgebra torus(const FiniteField& f, std::size_t n);
/// Basis (b, a1..an): [b, a_i] = a_i, b toral, a_i^[p] = 0.
RestrictedLieAlgebra almost_abelian(const FiniteField& f, std::size_t n);
/// Basis (x, y, z): [x, y] = z; each flag sends that basis vector to z under
/// the p-map instead of 0.
RestrictedLieAlgebra heisenberg(const FiniteField& f, bool x_to_z = false, bool y_to_z = false,
                                bool z_to_z = false);
RestrictedLieAlgebra heisenberg_null(const FiniteField& f);
/// Basis (x, xp, y, z): [x, y] = z, x^[p] = xp, all other p-images zero.
RestrictedLieAlgebra usmn(const FiniteField& f);
/// Basis (e, h, f): [e, h] = -2e, [e, f] = h, [h, f] = -2f; h toral.
RestrictedLieAlgebra sl2(const FiniteField& f);
/// Central blocks cyclic_from(f_i), then lines x_1..x_m, then b with
/// [b, x_j] = x_j and b toral.
RestrictedLieAlgebra prop_solvable(const FiniteField& f, const std::vector<SkewPolynomial>& blocks, std::size_t m);

/// Parameters for generate(); which fields are read depends on `family`.
struct FamilySpec {
  std::string family;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::size_t n = 1;
  std::size_t m = 1;
  AbelianPmap pmap = AbelianPmap::zero;
  std::vector<Vector> custom_pmap;
  /// Coefficient lists (ascending) of skew polynomials.
  std::vector<std::vector<Scalar>> polys;
  bool x_to_z = false;
  bool y_to_z = false;
  bool z_to_z = false;
};

/// Names accepted by generate().
const std::vector<std::string>& family_names();
RestrictedLieAlgebra generate(const FamilySpec& spec);

}  // namespace rla
