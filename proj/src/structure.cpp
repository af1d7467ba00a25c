#include "rla/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "rla/error.hpp"

namespace rla {

namespace {

Subspace span_rows(const FiniteField& f, std::size_t n, const Matrix& m) {
  Subspace s(f, n);
  for (std::size_t i = 0; i < m.rows; ++i) s.insert(m.row(i));
  return s;
}

// Coefficients c with Σ c_j cols[j] = rhs, if any.
std::optional<Vector> solve_columns(const FiniteField& f, const std::vector<Vector>& cols, std::span<const Scalar> rhs) {
  const std::size_t n = rhs.size(), m = cols.size();
  Matrix a(n, m + 1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) a(i, j) = cols[j][i];
  for (std::size_t i = 0; i < n; ++i) a(i, m) = rhs[i];
  const auto piv = row_reduce(f, a);
  Vector x(m, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == m) return std::nullopt;
    x[piv[i]] = a(i, m);
  }
  return x;
}

// {x in span(basis) : [x, e_j] in target for all j}, as a subspace.
Subspace bracket_preimage(const RestrictedLieAlgebra& L, const std::vector<Vector>& basis, const Subspace& target) {
  const std::size_t n = L.dim();
  const auto& f = L.field();
  Matrix m(n * n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector r = target.reduce(L.bracket(basis[k], L.basis(j)));
      for (std::size_t i = 0; i < n; ++i) m(j * n + i, k) = r[i];
    }
  const Matrix ker = kernel(f, m);
  Subspace out(f, n);
  for (std::size_t r = 0; r < ker.rows; ++r) {
    Vector x(n, 0);
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(f, x, ker(r, k), basis[k]);
    out.insert(x);
  }
  return out;
}

void require_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (budget == 0) throw Error(ErrorKind::BadParameters, "budget must be positive");
  if (count > budget) throw Error(ErrorKind::ResourceLimit, std::string(what) + " exceeds budget");
}

std::vector<std::size_t> all_columns(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return c;
}

}  // namespace

const char* to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::upper_central: return "upper_central";
  }
  return "unknown";
}

SeriesResult series(const RestrictedLieAlgebra& L, SeriesKind kind) {
  SeriesResult r{kind, {}, true};
  Subspace cur = kind == SeriesKind::upper_central ? L.zero_subspace() : L.whole();
  r.terms.push_back(cur);
  const Subspace whole = L.whole();
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    Subspace next = L.zero_subspace();
    switch (kind) {
      case SeriesKind::derived: next = bracket_span(L, cur, cur); break;
      case SeriesKind::lower_central: next = bracket_span(L, cur, whole); break;
      case SeriesKind::upper_central: {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < L.dim(); ++i) basis.push_back(L.basis(i));
        next = bracket_preimage(L, basis, cur);
        break;
      }
    }
    if (next == cur) return r;
    r.terms.push_back(next);
    cur = std::move(next);
  }
  r.stabilized = false;
  return r;
}

Solvability solvability(const RestrictedLieAlgebra& L) {
  Solvability s;
  const auto d = series(L, SeriesKind::derived);
  s.solvable = d.terms.back().is_zero();
  if (s.solvable) s.derived_length = d.terms.size() - 1;
  const auto c = series(L, SeriesKind::lower_central);
  s.nilpotent = c.terms.back().is_zero();
  if (s.nilpotent) s.nilpotency_class = c.terms.size() - 1;
  return s;
}

Subspace derived_algebra(const RestrictedLieAlgebra& L) { return bracket_span(L, L.whole(), L.whole()); }

bool is_perfect(const RestrictedLieAlgebra& L) { return derived_algebra(L).is_full(); }

Subspace centralizer(const RestrictedLieAlgebra& L, const Subspace& S, const std::optional<Subspace>& within) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace lives in another space");
  const std::size_t n = L.dim();
  const auto& f = L.field();
  Matrix m(n * S.dim(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < S.dim(); ++j) {
      const Vector b = L.bracket(L.basis(i), S.row(j));
      for (std::size_t r = 0; r < n; ++r) m(j * n + r, i) = b[r];
    }
  Subspace c = span_rows(f, n, kernel(f, m));
  return within ? c.intersect(*within) : c;
}

Subspace center(const RestrictedLieAlgebra& L) { return centralizer(L, L.whole()); }

Subspace core(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (!is_subalgebra(L, S)) throw Error(ErrorKind::NotASubalgebra, "core needs a subalgebra");
  Subspace cur = S;
  while (true) {
    Subspace next = bracket_preimage(L, cur.basis(), cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_nilpotent_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  Subspace cur = S;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(L, cur, S);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_solvable_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  Subspace cur = S;
  while (!cur.is_zero()) {
    Subspace next = bracket_span(L, cur, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

Radicals radicals(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  Radicals r{L.zero_subspace(), L.zero_subspace()};
  for (const auto& I : enumerate_ideals(L, false, budget)) {
    if (!r.solvable_radical.contains(I) && is_solvable_subalgebra(L, I)) r.solvable_radical = r.solvable_radical.sum(I);
    if (!r.nilradical.contains(I) && is_nilpotent_subalgebra(L, I)) r.nilradical = r.nilradical.sum(I);
  }
  return r;
}

Frattini frattini(const SubalgebraLattice& lat) {
  const auto& L = lat.algebra();
  Subspace F = L.whole();
  for (auto m : lat.maximal_nodes()) F = F.intersect(lat.node(m));
  return {F, core(L, F)};
}

Frattini frattini(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  return frattini(SubalgebraLattice::enumerate(L, LatticeMode::restricted, budget));
}

Subspace abelian_p_socle(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  const auto ideals = enumerate_ideals(L, true, budget);
  Subspace out = L.zero_subspace();
  for (const auto& I : ideals) {
    if (I.is_zero() || !bracket_span(L, I, I).is_zero()) continue;
    bool minimal = true;
    for (const auto& J : ideals) {
      if (J.dim() >= I.dim()) break;
      if (!J.is_zero() && I.contains(J)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out = out.sum(I);
  }
  return out;
}

Subspace lp_subalgebra(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  require_budget(power_saturating(L.field().order(), L.dim()), budget, "element count");
  Subspace span = L.zero_subspace();
  for_each_vector(L.field(), L.dim(), [&](const Vector& x) {
    span.insert(L.p_power(x));
    return !span.is_full();
  });
  return restricted_closure(L, span);
}

ElementClass element_class(const RestrictedLieAlgebra& L, std::span<const Scalar> x) {
  ElementClass c;
  const Vector xp = L.p_power(x);
  c.toral = xp == Vector(x.begin(), x.end());
  const std::vector<Vector> gen{xp};
  c.semisimple = restricted_closure(L, gen).contains(x);
  Vector cur(x.begin(), x.end());
  for (std::size_t k = 0; k <= L.dim(); ++k) {
    if (is_zero(cur)) {
      c.p_nilpotent = true;
      c.order = k;
      break;
    }
    cur = L.p_power(cur);
  }
  return c;
}

JordanChevalley jordan_chevalley(const RestrictedLieAlgebra& L, std::span<const Scalar> x) {
  const auto& f = L.field();
  const std::size_t n = L.dim();
  const std::vector<Vector> gen{Vector(x.begin(), x.end())};
  const Subspace C = restricted_closure(L, gen);
  const std::size_t N = C.dim();
  if (N == 0) return {L.zero_vector(), L.zero_vector()};
  // On the abelian algebra C the p-map φ is additive and p-semilinear;
  // C = φ^N(C) ⊕ ker φ^N.
  std::vector<Vector> images;
  for (std::size_t j = 0; j < N; ++j) images.push_back(L.p_power(C.row(j), N));
  Subspace image(f, n);
  for (const auto& v : images) image.insert(v);
  Matrix m(n, N);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = images[j][i];
  const Matrix ker = kernel(f, m);
  Subspace kern(f, n);
  for (std::size_t r = 0; r < ker.rows; ++r) {
    Vector v(n, 0);
    for (std::size_t j = 0; j < N; ++j) {
      Scalar lam = ker(r, j);
      for (std::size_t k = 0; k < N; ++k) lam = f.frobenius_inverse(lam);
      axpy(f, v, lam, C.row(j));
    }
    kern.insert(v);
  }
  std::vector<Vector> cols = image.basis();
  for (const auto& v : kern.basis()) cols.push_back(v);
  const auto coeff = solve_columns(f, cols, x);
  if (!coeff || image.dim() + kern.dim() != N) {
    throw Error(ErrorKind::ValidationError, "Fitting decomposition failed");
  }
  JordanChevalley jc{L.zero_vector(), L.zero_vector()};
  for (std::size_t j = 0; j < cols.size(); ++j) axpy(f, j < image.dim() ? jc.semisimple : jc.nilpotent, (*coeff)[j], cols[j]);
  return jc;
}

bool is_torus(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (!is_restricted_subalgebra(L, S)) return false;
  if (!bracket_span(L, S, S).is_zero()) return false;
  // On an abelian restricted subalgebra the semisimple elements are the
  // stable image of the p-map, so S is a torus iff the p-map is onto.
  Subspace img = L.zero_subspace();
  for (std::size_t i = 0; i < S.dim(); ++i) img.insert(L.p_power(S.row(i)));
  return img == S;
}

Subspace maximal_torus(const SubalgebraLattice& lat) {
  const auto& L = lat.algebra();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (best && lat.node(i).dim() <= lat.node(*best).dim()) continue;
    if (is_torus(L, lat.node(i))) best = i;
  }
  return lat.node(best.value_or(0));
}

Subspace maximal_torus(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  return maximal_torus(SubalgebraLattice::enumerate(L, LatticeMode::restricted, budget));
}

RootDecomposition root_decomposition(const RestrictedLieAlgebra& L, const Subspace& T, std::uint64_t budget) {
  if (T.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace lives in another space");
  if (!is_torus(L, T)) throw Error(ErrorKind::NotATorus, "subspace is not a torus");
  const auto& f = L.field();
  const std::size_t n = L.dim();
  require_budget(power_saturating(f.order(), T.dim()), budget, "torus element count");
  RootDecomposition rd{T, {}, L.zero_subspace(), {}};
  Subspace got(f, n);
  for_each_vector(f, T.dim(), [&](const Vector& c) {
    Vector t(n, 0);
    for (std::size_t i = 0; i < T.dim(); ++i) axpy(f, t, c[i], T.row(i));
    if (!is_zero(t) && L.p_power(t) == t && got.insert(t)) rd.toral_basis.push_back(t);
    return !(got == T);
  });
  if (!(got == T)) throw Error(ErrorKind::NotATorus, "torus has no basis of toral elements");
  const std::size_t r = rd.toral_basis.size();
  const std::uint32_t p = f.characteristic();
  std::vector<Matrix> ads;
  for (const auto& t : rd.toral_basis) ads.push_back(L.ad_matrix(t));
  std::vector<Scalar> alpha(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      Matrix m(n * r, n);
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            m(k * n + a, b) = f.sub(ads[k](a, b), a == b ? alpha[k] : 0);
      Subspace space = span_rows(f, n, kernel(f, m));
      if (std::all_of(alpha.begin(), alpha.end(), [](Scalar s) { return s == 0; })) {
        rd.cartan = std::move(space);
      } else if (!space.is_zero()) {
        rd.roots.emplace(alpha, std::move(space));
      }
      return;
    }
    for (std::uint32_t v = 0; v < p; ++v) {
      alpha[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return rd;
}

namespace {

// Depth-first search for a complete flag of (restricted) ideals. `dead`
// remembers ideals from which no flag completes.
bool extend_flag(const RestrictedLieAlgebra& L, bool restricted, std::vector<Subspace>& flag,
                 std::set<Subspace>& dead, std::uint64_t& visits, std::uint64_t budget) {
  const Subspace I = flag.back();
  if (I.is_full()) return true;
  if (dead.contains(I)) return false;
  bool found = false;
  const auto free = I.free_columns();
  for_each_projective_point(L.field(), L.dim(), free, [&](const Vector& v) {
    if (++visits > budget) throw Error(ErrorKind::ResourceLimit, "flag search exceeds budget");
    Subspace J = I;
    J.insert(v);
    if (!is_ideal(L, J)) return true;
    if (restricted && !is_restricted_subalgebra(L, J)) return true;
    flag.push_back(std::move(J));
    if (extend_flag(L, restricted, flag, dead, visits, budget)) {
      found = true;
      return false;
    }
    flag.pop_back();
    return true;
  });
  if (!found) dead.insert(I);
  return found;
}

std::optional<std::vector<Subspace>> find_flag(const RestrictedLieAlgebra& L, bool restricted, std::uint64_t budget) {
  std::vector<Subspace> flag{L.zero_subspace()};
  std::set<Subspace> dead;
  std::uint64_t visits = 0;
  if (extend_flag(L, restricted, flag, dead, visits, budget)) return flag;
  return std::nullopt;
}

}  // namespace

Supersolvability supersolvability(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  Supersolvability s;
  s.ideal_flag = find_flag(L, false, budget);
  s.restricted_ideal_flag = find_flag(L, true, budget);
  s.supersolvable = s.ideal_flag.has_value();
  return s;
}

AlmostAbelian is_almost_abelian(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  AlmostAbelian r{false, {}, derived_algebra(L)};
  const Subspace& A = r.A;
  const auto& f = L.field();
  const std::size_t n = L.dim();
  if (A.is_zero() || A.dim() + 1 != n) return r;
  if (!bracket_span(L, A, A).is_zero()) return r;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!is_zero(L.p_power(A.row(i)))) return r;
  const std::size_t c = A.free_columns().front();
  const Vector e = L.basis(c);
  // ad(e)|_A must be a nonzero scalar λ; then b = λ^{-1} e + a for a in A.
  const Vector first = L.bracket(e, A.row(0));
  Scalar lambda = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (A.row(0)[i] != 0) {
      lambda = f.div(first[i], A.row(0)[i]);
      break;
    }
  if (lambda == 0) return r;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (L.bracket(e, A.row(i)) != scaled(f, lambda, A.row(i))) return r;
  const Vector b0 = scaled(f, f.inv(lambda), e);
  require_budget(power_saturating(f.order(), A.dim()), budget, "complement search");
  for_each_vector(f, A.dim(), [&](const Vector& coeff) {
    Vector b = b0;
    for (std::size_t i = 0; i < A.dim(); ++i) axpy(f, b, coeff[i], A.row(i));
    if (L.p_power(b) == b) {
      r.holds = true;
      r.b = std::move(b);
      return false;
    }
    return true;
  });
  return r;
}

Subspace one_dim_generated(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  const std::uint64_t q = L.field().order();
  const std::uint64_t qn = power_saturating(q, L.dim());
  require_budget(qn == std::numeric_limits<std::uint64_t>::max() ? qn : (qn - 1) / (q - 1), budget, "line count");
  std::vector<Vector> lines;
  for_each_projective_point(L.field(), L.dim(), all_columns(L.dim()), [&](const Vector& v) {
    const std::vector<Vector> one{v};
    if (Subspace::span(L.field(), L.dim(), one).contains(L.p_power(v))) lines.push_back(v);
    return true;
  });
  return restricted_closure(L, lines);
}

}  // namespace rla
