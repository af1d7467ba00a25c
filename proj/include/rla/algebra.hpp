#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rla/field.hpp"
#include "rla/subspace.hpp"

namespace rla {

/// [e_i, e_j] += coeff * e_k. Entries with i > j are folded in with the sign
/// rule; entries with i == j and nonzero coefficient are kept as
/// antisymmetry defects for validate() to report.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar coeff = 0;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

enum class Axiom { antisymmetry, jacobi, pmap_compat };
const char* to_string(Axiom axiom) noexcept;

struct Violation {
  Axiom axiom;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Which closure a subspace operation works with: brackets and p-th powers,
/// or brackets only.
enum class ClosureMode { restricted, ordinary };

/// Finite-dimensional Lie algebra over GF(q) given by structure constants on
/// a basis e_0..e_{n-1} together with the p-images e_i^[p]. The p-map is
/// extended to arbitrary elements by Jacobson's formula.
class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra(FiniteField field, std::vector<std::string> names, const std::vector<BracketEntry>& brackets,
                       std::vector<Vector> pmap);

  /// The zero algebra over `field`.
  static RestrictedLieAlgebra zero(FiniteField field);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Coordinates of [e_i, e_j].
  std::span<const Scalar> structure(std::size_t i, std::size_t j) const {
    return {table_.data() + (i * n_ + j) * n_, n_};
  }
  const Vector& pmap_image(std::size_t i) const { return pmap_[i]; }
  const std::vector<Vector>& pmap() const noexcept { return pmap_; }
  /// Nonzero structure constants with i < j, sorted by (i, j, k).
  std::vector<BracketEntry> bracket_entries() const;
  const std::vector<std::size_t>& antisymmetry_defects() const noexcept { return diagonal_defects_; }
  bool is_abelian() const noexcept { return abelian_; }

  Vector basis(std::size_t i) const;
  Vector zero_vector() const { return Vector(n_, 0); }
  Subspace whole() const { return Subspace::full(field_, n_); }
  Subspace zero_subspace() const { return Subspace::zero(field_, n_); }

  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Column j holds the coordinates of [x, e_j].
  Matrix ad_matrix(std::span<const Scalar> x) const;
  /// x^[p]^m, computed by folding Jacobson's formula over the basis terms of x
  /// in basis order.
  Vector p_power(std::span<const Scalar> x, std::size_t m = 1) const;
  /// Sum over i of s_i(a, b), so that (a+b)^[p] = a^[p] + b^[p] + result.
  Vector jacobson_correction(std::span<const Scalar> a, std::span<const Scalar> b) const;

  friend bool operator==(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.names_ == b.names_ && a.table_ == b.table_ &&
           a.pmap_ == b.pmap_ && a.diagonal_defects_ == b.diagonal_defects_;
  }

 private:
  void check(std::span<const Scalar> x) const;

  FiniteField field_;
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<Scalar> table_;  // n*n*n, dense and antisymmetric
  std::vector<Vector> pmap_;
  std::vector<std::size_t> diagonal_defects_;
  bool abelian_ = true;
};

ValidationReport validate(const RestrictedLieAlgebra& L);

/// Span of all [a, b] with a in A and b in B.
Subspace bracket_span(const RestrictedLieAlgebra& L, const Subspace& A, const Subspace& B);

/// Smallest subspace containing `base` and `extra` that is closed under the
/// bracket (and the p-map in restricted mode). `base` must already be closed.
Subspace extend_closure(const RestrictedLieAlgebra& L, const Subspace& base, std::span<const Vector> extra,
                        ClosureMode mode);

/// The restricted subalgebra generated by a set of elements.
Subspace restricted_closure(const RestrictedLieAlgebra& L, std::span<const Vector> generators);
Subspace restricted_closure(const RestrictedLieAlgebra& L, const Subspace& S);
/// The (ordinary) subalgebra generated by S.
Subspace subalgebra_closure(const RestrictedLieAlgebra& L, const Subspace& S);

struct SubspaceFlags {
  bool subalgebra = false;
  bool restricted_subalgebra = false;
  bool ideal = false;
  bool restricted_ideal = false;
};

SubspaceFlags classify_subspace(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_restricted_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_ideal(const RestrictedLieAlgebra& L, const Subspace& S);

/// L / I on the complement basis {e_c : c not a pivot column of I}. The
/// result keeps the names of those basis vectors.
RestrictedLieAlgebra quotient(const RestrictedLieAlgebra& L, const Subspace& I);
/// The restricted subalgebra S as an algebra on its canonical basis rows,
/// named after the pivot columns.
RestrictedLieAlgebra subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);

/// Image of v in L / I, in the coordinates used by quotient().
Vector quotient_coordinates(const Subspace& I, std::span<const Scalar> v);

}  // namespace rla
