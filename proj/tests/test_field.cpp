#include "doctest.h"
#include "rla/error.hpp"
#include "rla/field.hpp"
#include "support.hpp"

using namespace rla;

TEST_CASE("prime fields and errors") {
  const auto f = FiniteField::make(5);
  CHECK(f.order() == 5);
  CHECK(f.modulus().empty());
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.inv(2) == 3);
  CHECK(f.neg(1) == 4);
  CHECK_THROWS_AS(FiniteField::make(4), Error);
  try {
    FiniteField::make(4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
  try {
    FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 0, 1});
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleModulus);
  }
  try {
    f.inv(0);
    FAIL("inverse of zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK_THROWS_AS(FiniteField::make(2, 17), Error);
}

TEST_CASE("default moduli are the lex-least irreducibles") {
  CHECK(FiniteField::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FiniteField::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
}

TEST_CASE("frobenius examples") {
  CHECK(FiniteField::make(5).frobenius(2) == 2);
  const auto f4 = FiniteField::make(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  const Scalar u = f4.from_residues(std::vector<std::uint32_t>{0, 1});
  CHECK(f4.frobenius(u) == f4.add(u, 1));
  const auto f9 = FiniteField::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  const Scalar v = f9.from_residues(std::vector<std::uint32_t>{0, 1});
  CHECK(f9.frobenius(v) == f9.neg(v));
  CHECK(f9.mul(v, v) == f9.neg(1));
}

TEST_CASE("field axioms against schoolbook arithmetic") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const auto f = FiniteField::make(p, k);
    CAPTURE(p);
    CAPTURE(k);
    for (Scalar a = 0; a < f.order(); ++a) {
      CHECK(f.from_residues(f.residues(a)) == a);
      CHECK(f.frobenius_inverse(f.frobenius(a)) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Scalar b = 0; b < f.order(); ++b) {
        const auto ra = f.residues(a), rb = f.residues(b);
        std::vector<std::uint32_t> sum(k);
        for (std::size_t i = 0; i < k; ++i) sum[i] = (ra[i] + rb[i]) % p;
        CHECK(f.add(a, b) == f.from_residues(sum));
        CHECK(f.mul(a, b) == f.from_residues(testing::naive_mul(f, ra, rb)));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.sub(f.add(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("row reduction and kernel") {
  const auto f = FiniteField::make(3);
  Matrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 0;
  m(1, 0) = 2; m(1, 1) = 1; m(1, 2) = 0;
  Matrix r = m;
  const auto piv = row_reduce(f, r);
  CHECK(piv == std::vector<std::size_t>{0});
  CHECK(r.rows == 1);
  const Matrix k = kernel(f, m);
  CHECK(k.rows == 2);
  for (std::size_t i = 0; i < k.rows; ++i) CHECK(is_zero(apply(f, m, k.row(i))));
  CHECK(rank(f, Matrix::identity(4)) == 4);
  CHECK(matrix_power(f, Matrix::identity(3), 7) == Matrix::identity(3));
}
