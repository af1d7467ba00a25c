#include "doctest.h"
#include "fixtures.hpp"
#include "rla/error.hpp"
#include "rla/structure.hpp"
#include "support.hpp"

using namespace rla;

namespace {

Subspace span_of(const RestrictedLieAlgebra& L, std::vector<Vector> v) {
  return Subspace::span(L.field(), L.dim(), v);
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

const FiniteField F2 = FiniteField::make(2);
const FiniteField F3 = FiniteField::make(3);
const FiniteField F5 = FiniteField::make(5);

}  // namespace

TEST_CASE("series examples") {
  const auto A = strongly_abelian(F3, 3);
  CHECK(series(A, SeriesKind::derived).terms == std::vector<Subspace>{A.whole(), A.zero_subspace()});
  const auto aa = almost_abelian(F3, 2);
  const auto Aideal = span_of(aa, {aa.basis(1), aa.basis(2)});
  CHECK(series(aa, SeriesKind::derived).terms == std::vector<Subspace>{aa.whole(), Aideal, aa.zero_subspace()});
  const auto H = heisenberg_null(F3);
  const auto Z = span_of(H, {H.basis(2)});
  CHECK(series(H, SeriesKind::lower_central).terms == std::vector<Subspace>{H.whole(), Z, H.zero_subspace()});
  CHECK(series(H, SeriesKind::upper_central).terms == std::vector<Subspace>{H.zero_subspace(), Z, H.whole()});
  const auto S = sl2(F5);
  CHECK(series(S, SeriesKind::derived).terms == std::vector<Subspace>{S.whole()});
}

TEST_CASE("solvability examples") {
  CHECK_FALSE(solvability(sl2(F5)).solvable);
  const auto h = solvability(heisenberg_null(F3));
  CHECK(h.nilpotent);
  CHECK(*h.nilpotency_class == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto a = solvability(almost_abelian(F3, n));
    CHECK(a.solvable);
    CHECK_FALSE(a.nilpotent);
    CHECK(*a.derived_length == 2);
  }
}

TEST_CASE("centralizers, centre and cores") {
  const auto H = heisenberg_null(F3);
  CHECK(centralizer(H, H.zero_subspace()) == H.whole());
  CHECK(centralizer(H, span_of(H, {H.basis(0)})) == span_of(H, {H.basis(0), H.basis(2)}));
  const auto U = usmn(F2);
  CHECK(center(U) == span_of(U, {U.basis(1), U.basis(3)}));
  const auto S = sl2(F5);
  CHECK(core(S, S.whole()) == S.whole());
  CHECK(core(S, span_of(S, {S.basis(0), S.basis(1)})).is_zero());
  const auto aa = almost_abelian(F3, 2);
  const auto A = span_of(aa, {aa.basis(1), aa.basis(2)});
  CHECK(core(aa, A) == A);
  CHECK(kind_of([&] { core(S, span_of(S, {S.basis(0), S.basis(2)})); }) == ErrorKind::NotASubalgebra);
}

TEST_CASE("radicals") {
  const auto H = heisenberg_null(F3);
  CHECK(radicals(H).nilradical == H.whole());
  const auto S = sl2(F5);
  CHECK(radicals(S).nilradical.is_zero());
  CHECK(radicals(S).solvable_radical.is_zero());
  const auto aa = almost_abelian(F3, 2);
  const auto r = radicals(aa);
  CHECK(r.nilradical == span_of(aa, {aa.basis(1), aa.basis(2)}));
  CHECK(r.solvable_radical == aa.whole());
}

TEST_CASE("Frattini objects and the abelian p-socle") {
  CHECK(frattini(strongly_abelian(F3, 3)).F_p.is_zero());
  CHECK(frattini(torus(F3, 1)).F_p.is_zero());
  for (const auto& fx : testing::small_fixtures()) {
    CAPTURE(fx.name);
    const auto& L = fx.algebra;
    const auto lat = SubalgebraLattice::enumerate(L, LatticeMode::restricted);
    const auto fr = frattini(lat);
    // Brute force: intersection of all nodes covered by the top.
    Subspace meet = L.whole();
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat.covers(i, lat.top())) meet = meet.intersect(lat.node(i));
    CHECK(fr.F_p == meet);
    CHECK(fr.F_p.contains(fr.phi_p));
    CHECK(classify_subspace(L, fr.phi_p).restricted_ideal);
    CHECK(frattini(quotient(L, fr.phi_p)).phi_p.is_zero());
  }
  CHECK(abelian_p_socle(strongly_abelian(F3, 3)).is_full());
  CHECK(abelian_p_socle(sl2(F5)).is_zero());
  const auto aa = almost_abelian(F3, 2);
  CHECK(abelian_p_socle(aa) == span_of(aa, {aa.basis(1), aa.basis(2)}));
}

TEST_CASE("subalgebra generated by p-th powers") {
  CHECK(lp_subalgebra(strongly_abelian(F3, 3)).is_zero());
  CHECK(lp_subalgebra(torus(F3, 3)).is_full());
  CHECK(lp_subalgebra(sl2(F3)).is_full());
  for (const auto& fx : testing::small_fixtures()) {
    const auto& L = fx.algebra;
    const auto lp = lp_subalgebra(L);
    for (std::size_t i = 0; i < L.dim(); ++i) CHECK(lp.contains(L.pmap_image(i)));
    const auto base = restricted_closure(L, L.pmap());
    CHECK(lp.contains(base));
    // (x + y)^[p] - x^[p] - y^[p] lies in [L, L].
    auto gens = L.pmap();
    for (const auto& v : derived_algebra(L).basis()) gens.push_back(v);
    CHECK(restricted_closure(L, gens).contains(lp));
    if (derived_algebra(L).is_zero()) CHECK(lp == base);
  }
  CHECK(kind_of([&] { lp_subalgebra(strongly_abelian(F2, 30)); }) == ErrorKind::ResourceLimit);
}

TEST_CASE("element classes") {
  const auto T = torus(F3, 2);
  const auto t = element_class(T, Vector{1, 2});
  CHECK((t.semisimple && t.toral && !t.p_nilpotent));
  const auto U = usmn(F3);
  const auto x = element_class(U, U.basis(0));
  CHECK(x.p_nilpotent);
  CHECK(x.order == 2);
  CHECK_FALSE(x.semisimple);
  // In sl2 over GF(5), x^[p] is a scalar multiple of x, so every element is
  // semisimple or p-nilpotent; e + h is in fact toral.
  const auto S = sl2(F5);
  const auto eh = element_class(S, Vector{1, 1, 0});
  CHECK(eh.toral);
  CHECK(eh.semisimple);
  CHECK_FALSE(eh.p_nilpotent);
  for_each_vector(F5, 3, [&](const Vector& v) {
    if (is_zero(v)) return true;
    const auto c = element_class(S, v);
    CHECK(c.semisimple != c.p_nilpotent);
    return true;
  });
}

TEST_CASE("Jordan-Chevalley parts") {
  const auto T = torus(F3, 2);
  CHECK(jordan_chevalley(T, Vector{1, 2}).semisimple == Vector{1, 2});
  const auto U = usmn(F3);
  const auto jc = jordan_chevalley(U, U.basis(0));
  CHECK(jc.semisimple == U.zero_vector());
  CHECK(jc.nilpotent == U.basis(0));
  // Mixed: toral line plus nilpotent line.
  const auto M = direct_sum(torus(F3, 1), usmn(F3));
  const Vector v{1, 1, 0, 0, 0};
  const auto mj = jordan_chevalley(M, v);
  CHECK(mj.semisimple == Vector{1, 0, 0, 0, 0});
  CHECK(mj.nilpotent == Vector{0, 1, 0, 0, 0});
}

TEST_CASE("Jordan-Chevalley parts are the unique decomposition") {
  // Inside the abelian algebra <x>_p the restricted closure of y is the span of
  // y, y^[p], y^[p]^2, ...
  auto iterates = [](const RestrictedLieAlgebra& L, Vector y) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k <= L.dim() + 1; ++k) {
      y = L.p_power(y);
      out.push_back(y);
    }
    return out;
  };
  for (const auto& fx : testing::small_fixtures()) {
    const auto& L = fx.algebra;
    if (L.dim() > 4 || L.field().order() > 5) continue;
    CAPTURE(fx.name);
    for_each_vector(L.field(), L.dim(), [&](const Vector& x) {
      const auto jc = jordan_chevalley(L, x);
      const auto C = restricted_closure(L, std::vector<Vector>{x});
      std::size_t found = 0;
      std::vector<Vector> members;
      for_each_vector(L.field(), C.dim(), [&](const Vector& c) {
        Vector s(L.dim(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) axpy(L.field(), s, c[i], C.row(i));
        members.push_back(s);
        return true;
      });
      for (const auto& s : members) {
        Vector n = x;
        axpy(L.field(), n, L.field().neg(1), s);
        if (!is_zero(L.bracket(s, n))) continue;
        const auto its = iterates(L, s);
        if (!Subspace::span(L.field(), L.dim(), its).contains(s)) continue;
        if (!is_zero(iterates(L, n).back())) continue;
        ++found;
        CHECK(s == jc.semisimple);
        CHECK(n == jc.nilpotent);
      }
      CHECK(found == 1);
      return true;
    });
  }
}

TEST_CASE("tori and root decompositions") {
  CHECK(maximal_torus(torus(F3, 2)).is_full());
  CHECK(maximal_torus(strongly_abelian(F3, 2)).is_zero());
  const auto S = sl2(F5);
  CHECK(maximal_torus(S) == span_of(S, {S.basis(1)}));
  const auto r0 = root_decomposition(S, S.zero_subspace());
  CHECK(r0.cartan.is_full());
  CHECK(r0.roots.empty());
  const auto rh = root_decomposition(S, span_of(S, {S.basis(1)}));
  CHECK(rh.cartan == span_of(S, {S.basis(1)}));
  REQUIRE(rh.roots.size() == 2);
  CHECK(rh.roots.at({2}) == span_of(S, {S.basis(0)}));
  CHECK(rh.roots.at({3}) == span_of(S, {S.basis(2)}));
  const auto aa = almost_abelian(F3, 2);
  const auto ra = root_decomposition(aa, span_of(aa, {aa.basis(0)}));
  REQUIRE(ra.roots.size() == 1);
  CHECK(ra.roots.at({1}) == span_of(aa, {aa.basis(1), aa.basis(2)}));
  CHECK(kind_of([&] { root_decomposition(S, span_of(S, {S.basis(0)})); }) == ErrorKind::NotATorus);
  // e + 2f has -det = 2, a non-square mod 5: x^[p] = -x, so Fx is a torus
  // without toral elements.
  const auto ns = span_of(S, {Vector{1, 0, 2}});
  CHECK(is_torus(S, ns));
  CHECK(kind_of([&] { root_decomposition(S, ns); }) == ErrorKind::NotATorus);
}

TEST_CASE("root decomposition properties on fixtures") {
  for (const auto& fx : testing::small_fixtures()) {
    CAPTURE(fx.name);
    const auto& L = fx.algebra;
    const auto T = maximal_torus(L);
    std::optional<RootDecomposition> maybe;
    try {
      maybe = root_decomposition(L, T);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotATorus);
      continue;
    }
    const auto& rd = *maybe;
    std::size_t total = rd.cartan.dim();
    for (const auto& [a, V] : rd.roots) total += V.dim();
    CHECK(total == L.dim());
    CHECK(rd.cartan == centralizer(L, T));
    const auto& f = L.field();
    auto space_of = [&](const std::vector<Scalar>& a) -> Subspace {
      if (std::all_of(a.begin(), a.end(), [](Scalar s) { return s == 0; })) return rd.cartan;
      auto it = rd.roots.find(a);
      return it == rd.roots.end() ? L.zero_subspace() : it->second;
    };
    std::vector<std::pair<std::vector<Scalar>, Subspace>> all(rd.roots.begin(), rd.roots.end());
    all.emplace_back(std::vector<Scalar>(rd.toral_basis.size(), 0), rd.cartan);
    for (const auto& [a, A] : all)
      for (const auto& [b, B] : all) {
        std::vector<Scalar> s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = f.add(a[i], b[i]);
        CHECK(space_of(s).contains(bracket_span(L, A, B)));
      }
  }
}

TEST_CASE("supersolvability") {
  const auto A = strongly_abelian(F3, 2);
  const auto a = supersolvability(A);
  CHECK(a.supersolvable);
  CHECK(a.ideal_flag.has_value());
  CHECK(a.restricted_ideal_flag.has_value());
  CHECK_FALSE(supersolvability(sl2(F5)).supersolvable);
  const auto t = supersolvability(torus(F2, 2));
  CHECK(t.supersolvable);
  CHECK(t.restricted_ideal_flag.has_value());
  for (const auto& fx : testing::small_fixtures()) {
    CAPTURE(fx.name);
    const auto& L = fx.algebra;
    const auto s = supersolvability(L);
    if (s.ideal_flag) {
      CHECK(s.ideal_flag->size() == L.dim() + 1);
      for (std::size_t k = 0; k < s.ideal_flag->size(); ++k) {
        CHECK((*s.ideal_flag)[k].dim() == k);
        CHECK(is_ideal(L, (*s.ideal_flag)[k]));
      }
      const auto lat = SubalgebraLattice::enumerate(L, LatticeMode::ordinary);
      for (auto m : lat.maximal_nodes()) CHECK(lat.node(m).dim() + 1 == L.dim());
    }
    if (s.restricted_ideal_flag)
      for (const auto& I : *s.restricted_ideal_flag) CHECK(classify_subspace(L, I).restricted_ideal);
  }
}

TEST_CASE("almost abelian recognition") {
  const auto aa = almost_abelian(F3, 3);
  const auto r = is_almost_abelian(aa);
  CHECK(r.holds);
  CHECK(r.b == aa.basis(0));
  CHECK_FALSE(is_almost_abelian(strongly_abelian(F3, 3)).holds);
  CHECK_FALSE(is_almost_abelian(heisenberg_null(F3)).holds);
  CHECK_FALSE(is_almost_abelian(sl2(F5)).holds);
}

TEST_CASE("subalgebra generated by restricted lines") {
  CHECK(one_dim_generated(torus(F3, 2)).is_full());
  const auto U = usmn(F3);
  CHECK(one_dim_generated(U) == span_of(U, {U.basis(1), U.basis(2), U.basis(3)}));
  CHECK(one_dim_generated(sl2(F5)).is_full());
}

TEST_CASE("cores of restricted subalgebras are restricted ideals") {
  for (const auto& fx : testing::small_fixtures()) {
    CAPTURE(fx.name);
    const auto lat = SubalgebraLattice::enumerate(fx.algebra, LatticeMode::restricted);
    for (const auto& S : lat.nodes()) {
      const auto C = core(fx.algebra, S);
      CHECK(S.contains(C));
      CHECK(classify_subspace(fx.algebra, C).restricted_ideal);
    }
  }
}
