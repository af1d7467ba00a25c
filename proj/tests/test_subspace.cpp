#include <set>

#include "doctest.h"
#include "rla/error.hpp"
#include "rla/subspace.hpp"
#include "support.hpp"

using namespace rla;

namespace {

std::uint64_t binomial_recurrence(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k == 0 || k == n) return 1;
  if (k > n) return 0;
  std::uint64_t qk = 1;
  for (std::size_t i = 0; i < k; ++i) qk *= q;
  return binomial_recurrence(n - 1, k - 1, q) + qk * binomial_recurrence(n - 1, k, q);
}

Vector e(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("subspace algebra examples") {
  const auto f = FiniteField::make(3);
  const std::vector<Vector> a{e(3, 0)}, b{e(3, 1)}, ab{e(3, 0), e(3, 1)}, bc{e(3, 1), e(3, 2)};
  const auto A = Subspace::span(f, 3, a), B = Subspace::span(f, 3, b);
  CHECK(A.sum(B) == Subspace::span(f, 3, ab));
  CHECK(Subspace::span(f, 3, ab).intersect(Subspace::span(f, 3, bc)) == B);
  const std::vector<Vector> diag{Vector{1, 1, 0}};
  CHECK_FALSE(Subspace::span(f, 3, diag).contains(e(3, 0)));
  CHECK(Subspace::span(f, 3, ab).contains(Vector{2, 1, 0}));
  try {
    A.sum(Subspace::zero(f, 2));
    FAIL("ambient mismatch accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("canonical form is idempotent and order-independent") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto f = FiniteField::make(p, k);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 5;
      std::vector<Vector> gens;
      for (std::size_t i = 0; i < 1 + trial % 4; ++i) gens.push_back(testing::random_vector(rng, f, n));
      const auto S = Subspace::span(f, n, gens);
      CHECK(Subspace::span(f, n, S.basis()) == S);
      std::vector<Vector> rev(gens.rbegin(), gens.rend());
      CHECK(Subspace::span(f, n, rev) == S);
      for (const auto& g : gens) CHECK(S.contains(g));
    }
  }
}

TEST_CASE("dimension formula on random pairs") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto f = FiniteField::make(p, k);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 2 + trial % 5;
      std::vector<Vector> ga, gb;
      for (int i = 0; i < trial % 4; ++i) ga.push_back(testing::random_vector(rng, f, n));
      for (int i = 0; i < (trial / 4) % 4; ++i) gb.push_back(testing::random_vector(rng, f, n));
      // Bias toward overlap.
      if (!ga.empty() && trial % 3 == 0) gb.push_back(ga.front());
      const auto A = Subspace::span(f, n, ga), B = Subspace::span(f, n, gb);
      const auto S = A.sum(B), I = A.intersect(B);
      CHECK(A.dim() + B.dim() == S.dim() + I.dim());
      CHECK(A.contains(I));
      CHECK(B.contains(I));
      CHECK(S.contains(A));
      CHECK(S.contains(B));
    }
  }
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_subspaces(FiniteField::make(2), 2, std::nullopt, 1000000).size() == 5);
  CHECK(enumerate_subspaces(FiniteField::make(3), 2, std::set<std::size_t>{1}, 1000000).size() == 4);
  try {
    enumerate_subspaces(FiniteField::make(2), 20, std::nullopt, 1000000);
    FAIL("budget not enforced");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ResourceLimit);
  }
  CHECK_THROWS_AS(enumerate_subspaces(FiniteField::make(2), 2, std::nullopt, 0), Error);
}

TEST_CASE("enumeration counts match Gaussian binomials") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto f = FiniteField::make(p, k);
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto all = enumerate_subspaces(f, n, std::nullopt, 1000000);
      std::vector<std::uint64_t> per(n + 1, 0);
      for (const auto& s : all) ++per[s.dim()];
      for (std::size_t d = 0; d <= n; ++d) {
        CHECK(per[d] == binomial_recurrence(n, d, f.order()));
        CHECK(gaussian_binomial(n, d, f.order()) == binomial_recurrence(n, d, f.order()));
      }
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      if (n <= 3) {
        for (const auto& s : all) CHECK(Subspace::span(f, n, s.basis()) == s);
      }
    }
  }
}

TEST_CASE("projective points") {
  const auto f = FiniteField::make(3);
  std::vector<std::size_t> support{0, 2};
  std::vector<Vector> seen;
  for_each_projective_point(f, 3, support, [&](const Vector& v) {
    seen.push_back(v);
    return true;
  });
  CHECK(seen.size() == 4);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  std::size_t count = 0;
  for_each_vector(f, 3, [&](const Vector&) {
    ++count;
    return true;
  });
  CHECK(count == 27);
}
