#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace rla {

/// A field element of GF(p^k), packed as the integer sum c_0 + c_1 p + ... +
/// c_{k-1} p^{k-1} of its residue vector (c_0, ..., c_{k-1}) with respect to
/// the power basis 1, u, ..., u^{k-1}. Zero is 0 and one is 1.
using Scalar = std::uint32_t;

/// Coordinates of a vector over a finite field.
using Vector = std::vector<Scalar>;

/// GF(p^k) with p^k <= 2^16. Copies share one immutable table set.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^k). When `modulus` is omitted and k > 1, the
  /// lexicographically least monic irreducible polynomial (coefficients
  /// compared in ascending degree order) is selected.
  static FiniteField make(std::uint32_t p, std::uint32_t k = 1,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Ascending coefficients c_0..c_k of the defining polynomial (c_k = 1);
  /// empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  Scalar zero() const noexcept { return 0; }
  Scalar one() const noexcept { return 1; }

  Scalar add(Scalar a, Scalar b) const noexcept;
  Scalar sub(Scalar a, Scalar b) const noexcept;
  Scalar neg(Scalar a) const noexcept;
  Scalar mul(Scalar a, Scalar b) const noexcept;
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const;
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// a -> a^p.
  Scalar frobenius(Scalar a) const noexcept;
  /// Inverse of the Frobenius automorphism, a -> a^(p^(k-1)).
  Scalar frobenius_inverse(Scalar a) const noexcept;

  /// Image of an integer in the prime subfield.
  Scalar from_int(std::int64_t n) const noexcept;
  std::vector<std::uint32_t> residues(Scalar a) const;
  Scalar from_residues(std::span<const std::uint32_t> residues) const;
  bool in_prime_field(Scalar a) const noexcept { return a < characteristic(); }
  bool contains(Scalar a) const noexcept { return a < order(); }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept;

 private:
  struct Tables;
  explicit FiniteField(std::shared_ptr<const Tables> tables);
  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over a finite field.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<Scalar> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Scalar> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  static Matrix identity(std::size_t n);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Vector helpers. All assume equal lengths.
bool is_zero(std::span<const Scalar> v) noexcept;
/// y += a * x
void axpy(const FiniteField& f, std::span<Scalar> y, Scalar a, std::span<const Scalar> x) noexcept;
Vector scaled(const FiniteField& f, Scalar a, std::span<const Scalar> x);
Vector added(const FiniteField& f, std::span<const Scalar> x, std::span<const Scalar> y);
Vector subtracted(const FiniteField& f, std::span<const Scalar> x, std::span<const Scalar> y);
/// Scales v so its first nonzero entry is one; returns false for the zero vector.
bool normalize_leading(const FiniteField& f, std::span<Scalar> v) noexcept;

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix matrix_power(const FiniteField& f, const Matrix& a, std::uint64_t e);
Vector apply(const FiniteField& f, const Matrix& a, std::span<const Scalar> x);

/// Reduces `m` in place to reduced row-echelon form and drops zero rows.
/// Returns the pivot columns.
std::vector<std::size_t> row_reduce(const FiniteField& f, Matrix& m);
std::size_t rank(const FiniteField& f, Matrix m);
/// Basis (as matrix rows) of {x : m x = 0}.
Matrix kernel(const FiniteField& f, const Matrix& m);

}  // namespace rla
