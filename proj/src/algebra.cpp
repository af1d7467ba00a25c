#include "rla/algebra.hpp"

#include <deque>

#include "rla/error.hpp"

namespace rla {

const char* to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::antisymmetry: return "antisymmetry";
    case Axiom::jacobi: return "jacobi";
    case Axiom::pmap_compat: return "pmap_compat";
  }
  return "unknown";
}

RestrictedLieAlgebra::RestrictedLieAlgebra(FiniteField field, std::vector<std::string> names,
                                           const std::vector<BracketEntry>& brackets, std::vector<Vector> pmap)
    : field_(std::move(field)), n_(pmap.size()), names_(std::move(names)), pmap_(std::move(pmap)) {
  if (names_.empty() && n_ > 0) {
    for (std::size_t i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i));
  }
  if (names_.size() != n_) throw Error(ErrorKind::BadParameters, "names and p-map disagree on the dimension");
  for (const auto& row : pmap_) {
    if (row.size() != n_) throw Error(ErrorKind::BadParameters, "p-map row has wrong length");
    for (Scalar s : row)
      if (!field_.contains(s)) throw Error(ErrorKind::BadParameters, "p-map coefficient outside the field");
  }
  table_.assign(n_ * n_ * n_, 0);
  for (const auto& e : brackets) {
    if (e.i >= n_ || e.j >= n_ || e.k >= n_) throw Error(ErrorKind::BadParameters, "bracket index out of range");
    if (!field_.contains(e.coeff)) throw Error(ErrorKind::BadParameters, "bracket coefficient outside the field");
    if (e.coeff == 0) continue;
    if (e.i == e.j) {
      diagonal_defects_.push_back(e.i);
      continue;
    }
    Scalar& a = table_[(e.i * n_ + e.j) * n_ + e.k];
    Scalar& b = table_[(e.j * n_ + e.i) * n_ + e.k];
    a = field_.add(a, e.coeff);
    b = field_.sub(b, e.coeff);
  }
  abelian_ = rla::is_zero(table_);
}

RestrictedLieAlgebra RestrictedLieAlgebra::zero(FiniteField field) {
  return RestrictedLieAlgebra(std::move(field), {}, {}, {});
}

std::vector<BracketEntry> RestrictedLieAlgebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar c = table_[(i * n_ + j) * n_ + k];
        if (c != 0) out.push_back({i, j, k, c});
      }
  for (auto d : diagonal_defects_) out.push_back({d, d, 0, 1});
  return out;
}

Vector RestrictedLieAlgebra::basis(std::size_t i) const {
  Vector v(n_, 0);
  v.at(i) = 1;
  return v;
}

void RestrictedLieAlgebra::check(std::span<const Scalar> x) const {
  if (x.size() != n_) throw Error(ErrorKind::AlgebraMismatch, "element has wrong number of coordinates");
}

Vector RestrictedLieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  check(x);
  check(y);
  Vector out(n_, 0);
  if (abelian_) return out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0 || i == j) continue;
      axpy(field_, out, field_.mul(x[i], y[j]), structure(i, j));
    }
  }
  return out;
}

Matrix RestrictedLieAlgebra::ad_matrix(std::span<const Scalar> x) const {
  check(x);
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const Vector col = bracket(x, basis(j));
    for (std::size_t i = 0; i < n_; ++i) m(i, j) = col[i];
  }
  return m;
}

Vector RestrictedLieAlgebra::jacobson_correction(std::span<const Scalar> a, std::span<const Scalar> b) const {
  check(a);
  check(b);
  Vector out(n_, 0);
  if (abelian_) return out;
  const std::uint32_t p = field_.characteristic();
  // ad(t a + b)^{p-1}(a) as a polynomial in t with vector coefficients.
  std::vector<Vector> poly{Vector(a.begin(), a.end())};
  for (std::uint32_t step = 0; step + 1 < p; ++step) {
    std::vector<Vector> next(poly.size() + 1, Vector(n_, 0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (rla::is_zero(poly[d])) continue;
      const Vector ta = bracket(a, poly[d]);
      const Vector tb = bracket(b, poly[d]);
      axpy(field_, next[d + 1], 1, ta);
      axpy(field_, next[d], 1, tb);
    }
    poly = std::move(next);
  }
  for (std::uint32_t i = 1; i < p && i - 1 < poly.size(); ++i) {
    axpy(field_, out, field_.inv(field_.from_int(i)), poly[i - 1]);
  }
  return out;
}

Vector RestrictedLieAlgebra::p_power(std::span<const Scalar> x, std::size_t m) const {
  check(x);
  Vector cur(x.begin(), x.end());
  for (std::size_t iter = 0; iter < m; ++iter) {
    Vector acc(n_, 0), acc_p(n_, 0);
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
      if (cur[i] == 0) continue;
      Vector term(n_, 0);
      term[i] = cur[i];
      const Vector term_p = scaled(field_, field_.frobenius(cur[i]), pmap_[i]);
      if (first) {
        acc = std::move(term);
        acc_p = term_p;
        first = false;
        continue;
      }
      const Vector corr = jacobson_correction(acc, term);
      axpy(field_, acc_p, 1, term_p);
      axpy(field_, acc_p, 1, corr);
      axpy(field_, acc, 1, term);
    }
    cur = std::move(acc_p);
    if (rla::is_zero(cur)) break;
  }
  return cur;
}

ValidationReport validate(const RestrictedLieAlgebra& L) {
  ValidationReport report;
  const auto& f = L.field();
  const std::size_t n = L.dim();
  for (auto d : L.antisymmetry_defects()) report.violations.push_back({Axiom::antisymmetry, {d}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = L.basis(i), ej = L.basis(j), ek = L.basis(k);
        Vector s = L.bracket(ei, L.bracket(ej, ek));
        axpy(f, s, 1, L.bracket(ej, L.bracket(ek, ei)));
        axpy(f, s, 1, L.bracket(ek, L.bracket(ei, ej)));
        if (!is_zero(s)) report.violations.push_back({Axiom::jacobi, {i, j, k}});
      }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix lhs = L.ad_matrix(L.pmap_image(i));
    const Matrix rhs = matrix_power(f, L.ad_matrix(L.basis(i)), f.characteristic());
    if (!(lhs == rhs)) report.violations.push_back({Axiom::pmap_compat, {i}});
  }
  report.ok = report.violations.empty();
  return report;
}

Subspace bracket_span(const RestrictedLieAlgebra& L, const Subspace& A, const Subspace& B) {
  Subspace out = L.zero_subspace();
  if (L.is_abelian()) return out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < B.dim(); ++j) {
      out.insert(L.bracket(A.row(i), B.row(j)));
      if (out.is_full()) return out;
    }
  return out;
}

Subspace extend_closure(const RestrictedLieAlgebra& L, const Subspace& base, std::span<const Vector> extra,
                        ClosureMode mode) {
  Subspace S = base;
  if (S.is_full()) return S;
  std::vector<Vector> gens = base.basis();
  std::deque<Vector> pending(extra.begin(), extra.end());
  while (!pending.empty() && !S.is_full()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    if (!S.insert(v)) continue;
    if (!L.is_abelian()) {
      for (const auto& g : gens) {
        Vector w = L.bracket(v, g);
        if (!is_zero(w)) pending.push_back(std::move(w));
      }
    }
    if (mode == ClosureMode::restricted) {
      Vector w = L.p_power(v);
      if (!is_zero(w)) pending.push_back(std::move(w));
    }
    gens.push_back(std::move(v));
  }
  return S;
}

Subspace restricted_closure(const RestrictedLieAlgebra& L, std::span<const Vector> generators) {
  return extend_closure(L, L.zero_subspace(), generators, ClosureMode::restricted);
}

Subspace restricted_closure(const RestrictedLieAlgebra& L, const Subspace& S) {
  const auto b = S.basis();
  return extend_closure(L, L.zero_subspace(), b, ClosureMode::restricted);
}

Subspace subalgebra_closure(const RestrictedLieAlgebra& L, const Subspace& S) {
  const auto b = S.basis();
  return extend_closure(L, L.zero_subspace(), b, ClosureMode::ordinary);
}

bool is_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace lives in another space");
  if (L.is_abelian()) return true;
  for (std::size_t i = 0; i < S.dim(); ++i)
    for (std::size_t j = i + 1; j < S.dim(); ++j)
      if (!S.contains(L.bracket(S.row(i), S.row(j)))) return false;
  return true;
}

bool is_restricted_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (!is_subalgebra(L, S)) return false;
  for (std::size_t i = 0; i < S.dim(); ++i)
    if (!S.contains(L.p_power(S.row(i)))) return false;
  return true;
}

bool is_ideal(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace lives in another space");
  if (L.is_abelian()) return true;
  for (std::size_t a = 0; a < L.dim(); ++a) {
    const Vector e = L.basis(a);
    for (std::size_t j = 0; j < S.dim(); ++j)
      if (!S.contains(L.bracket(e, S.row(j)))) return false;
  }
  return true;
}

SubspaceFlags classify_subspace(const RestrictedLieAlgebra& L, const Subspace& S) {
  SubspaceFlags flags;
  flags.subalgebra = is_subalgebra(L, S);
  if (flags.subalgebra) {
    flags.restricted_subalgebra = true;
    for (std::size_t i = 0; i < S.dim() && flags.restricted_subalgebra; ++i)
      flags.restricted_subalgebra = S.contains(L.p_power(S.row(i)));
    flags.ideal = is_ideal(L, S);
  }
  flags.restricted_ideal = flags.ideal && flags.restricted_subalgebra;
  return flags;
}

Vector quotient_coordinates(const Subspace& I, std::span<const Scalar> v) {
  const Vector r = I.reduce(v);
  Vector out;
  for (auto c : I.free_columns()) out.push_back(r[c]);
  return out;
}

RestrictedLieAlgebra quotient(const RestrictedLieAlgebra& L, const Subspace& I) {
  if (!classify_subspace(L, I).restricted_ideal) {
    throw Error(ErrorKind::NotARestrictedIdeal, "quotient requires a restricted ideal");
  }
  const auto cols = I.free_columns();
  const std::size_t m = cols.size();
  std::vector<std::string> names;
  for (auto c : cols) names.push_back(L.names()[c]);
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector img = quotient_coordinates(I, L.structure(cols[a], cols[b]));
      for (std::size_t k = 0; k < m; ++k)
        if (img[k] != 0) entries.push_back({a, b, k, img[k]});
    }
  std::vector<Vector> pmap;
  for (std::size_t a = 0; a < m; ++a) pmap.push_back(quotient_coordinates(I, L.pmap_image(cols[a])));
  return RestrictedLieAlgebra(L.field(), std::move(names), entries, std::move(pmap));
}

RestrictedLieAlgebra subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (!is_restricted_subalgebra(L, S)) {
    throw Error(ErrorKind::NotASubalgebra, "subalgebra requires a restricted subalgebra");
  }
  const std::size_t m = S.dim();
  std::vector<std::string> names;
  for (auto c : S.pivots()) names.push_back(L.names()[c]);
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vector c = S.coordinates(L.bracket(S.row(a), S.row(b)));
      for (std::size_t k = 0; k < m; ++k)
        if (c[k] != 0) entries.push_back({a, b, k, c[k]});
    }
  std::vector<Vector> pmap;
  for (std::size_t a = 0; a < m; ++a) pmap.push_back(S.coordinates(L.p_power(S.row(a))));
  return RestrictedLieAlgebra(L.field(), std::move(names), entries, std::move(pmap));
}

}  // namespace rla
