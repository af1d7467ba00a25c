#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rla/field.hpp"

namespace rla {

/// Default cap on the number of subspaces any enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// A subspace of F^n stored by its reduced row-echelon basis. The basis is
/// canonical, so two subspaces are equal exactly when their stored rows are
/// identical. Subspaces are ordered by dimension, then lexicographically by
/// the row-major RREF entries.
class Subspace {
 public:
  Subspace(FiniteField field, std::size_t ambient_dim);

  static Subspace zero(FiniteField field, std::size_t ambient_dim) { return {std::move(field), ambient_dim}; }
  static Subspace full(FiniteField field, std::size_t ambient_dim);
  static Subspace span(FiniteField field, std::size_t ambient_dim, std::span<const Vector> vectors);
  /// Trusts that `rows` is already in canonical RREF.
  static Subspace from_rref(FiniteField field, std::size_t ambient_dim, std::vector<Scalar> rows);

  const FiniteField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  bool is_zero() const noexcept { return pivots_.empty(); }
  bool is_full() const noexcept { return pivots_.size() == n_; }

  const std::vector<Scalar>& rows() const noexcept { return rows_; }
  std::span<const Scalar> row(std::size_t i) const { return {rows_.data() + i * n_, n_}; }
  Vector basis_vector(std::size_t i) const { return Vector(row(i).begin(), row(i).end()); }
  std::vector<Vector> basis() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Columns that carry no pivot; coordinates of F^n / this subspace.
  std::vector<std::size_t> free_columns() const;

  /// v minus its projection along this subspace's pivots: zero iff v is inside.
  Vector reduce(std::span<const Scalar> v) const;
  void reduce_in_place(std::span<Scalar> v) const noexcept;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the RREF basis; v must be contained.
  Vector coordinates(std::span<const Scalar> v) const;

  /// Adds v to the span, keeping the basis canonical. Returns true when the
  /// dimension grew.
  bool insert(std::span<const Scalar> v);

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept;

 private:
  void check_compatible(const Subspace& other) const;

  FiniteField field_;
  std::size_t n_;
  std::vector<Scalar> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// Number of k-dimensional subspaces of F_q^n; saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Every subspace of F^n (optionally only those whose dimension is in
/// `dims`), each exactly once, in canonical order. Throws ResourceLimit when
/// the count would exceed `budget`.
std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t n,
                                          const std::optional<std::set<std::size_t>>& dims,
                                          std::uint64_t budget);

/// Calls fn(v) for every nonzero vector v of F^n that vanishes outside
/// `support` and whose first nonzero entry is one (one representative per
/// projective point), in increasing lexicographic order of the support
/// coordinates. Stops early when fn returns false.
void for_each_projective_point(const FiniteField& field, std::size_t n, std::span<const std::size_t> support,
                               const std::function<bool(const Vector&)>& fn);

/// Calls fn(v) for every vector of F^n in lexicographic order (q^n calls).
void for_each_vector(const FiniteField& field, std::size_t n, const std::function<bool(const Vector&)>& fn);

/// q^n, or UINT64_MAX when that overflows.
std::uint64_t power_saturating(std::uint64_t q, std::size_t n);

}  // namespace rla
