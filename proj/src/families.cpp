#include "rla/families.hpp"

#include <algorithm>
#include <set>

#include "rla/error.hpp"

namespace rla {

SkewPolynomial::SkewPolynomial(FiniteField field, std::vector<Scalar> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Scalar s : c_)
    if (!field_.contains(s)) throw Error(ErrorKind::BadParameters, "coefficient outside the field");
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {

void same_field(const SkewPolynomial& f, const SkewPolynomial& g) {
  if (!(f.field() == g.field())) throw Error(ErrorKind::AmbientMismatch, "skew polynomials over different fields");
}

Scalar frobenius_power(const FiniteField& F, Scalar a, std::size_t i) {
  for (std::size_t j = 0; j < i % F.degree(); ++j) a = F.frobenius(a);
  return a;
}

}  // namespace

SkewPolynomial sp_add(const SkewPolynomial& f, const SkewPolynomial& g) {
  same_field(f, g);
  const auto& F = f.field();
  std::vector<Scalar> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(f.coeff(i), g.coeff(i));
  return {F, std::move(c)};
}

SkewPolynomial sp_sub(const SkewPolynomial& f, const SkewPolynomial& g) {
  same_field(f, g);
  const auto& F = f.field();
  std::vector<Scalar> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(f.coeff(i), g.coeff(i));
  return {F, std::move(c)};
}

SkewPolynomial sp_mul(const SkewPolynomial& f, const SkewPolynomial& g) {
  same_field(f, g);
  const auto& F = f.field();
  if (f.is_zero() || g.is_zero()) return {F, {}};
  std::vector<Scalar> c(f.coeffs().size() + g.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(f.coeff(i), frobenius_power(F, g.coeff(j), i)));
  }
  return {F, std::move(c)};
}

std::pair<SkewPolynomial, SkewPolynomial> sp_right_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
  same_field(f, g);
  const auto& F = f.field();
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero skew polynomial");
  std::vector<Scalar> q(f.degree() >= g.degree() ? f.degree() - g.degree() + 1 : 0, 0);
  SkewPolynomial r = f;
  const Scalar lead = g.coeffs().back();
  while (r.degree() >= g.degree()) {
    const std::size_t d = static_cast<std::size_t>(r.degree() - g.degree());
    const Scalar c = F.div(r.coeffs().back(), frobenius_power(F, lead, d));
    q[d] = c;
    std::vector<Scalar> mono(d + 1, 0);
    mono[d] = c;
    r = sp_sub(r, sp_mul(SkewPolynomial(F, std::move(mono)), g));
  }
  return {SkewPolynomial(F, std::move(q)), r};
}

std::vector<SkewPolynomial> monic_skew_polynomials(const FiniteField& field, std::size_t degree) {
  std::vector<SkewPolynomial> out;
  for_each_vector(field, degree, [&](const Vector& low) {
    std::vector<Scalar> c(low.begin(), low.end());
    c.push_back(1);
    out.emplace_back(field, std::move(c));
    return true;
  });
  return out;
}

bool sp_irreducible(const SkewPolynomial& f, std::uint64_t budget) {
  if (f.degree() < 1) throw Error(ErrorKind::BadParameters, "irreducibility needs degree at least one");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const std::uint64_t q = f.field().order();
  std::uint64_t total = 0;
  for (std::size_t e = 1; e < d; ++e) {
    total += power_saturating(q, e);
    if (total > budget) throw Error(ErrorKind::ResourceLimit, "too many candidate factors");
  }
  for (std::size_t e = 1; e < d; ++e)
    for (const auto& g : monic_skew_polynomials(f.field(), e))
      if (sp_right_divmod(f, g).second.is_zero()) return false;
  return true;
}

RestrictedLieAlgebra cyclic_from(const SkewPolynomial& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "cyclic algebra needs a monic polynomial");
  if (f.degree() < 1) throw Error(ErrorKind::BadParameters, "cyclic algebra needs degree at least one");
  const auto& F = f.field();
  const std::size_t s = static_cast<std::size_t>(f.degree());
  std::vector<std::string> names;
  std::vector<Vector> pmap(s, Vector(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    names.push_back("v" + std::to_string(i));
    if (i + 1 < s) {
      pmap[i][i + 1] = 1;
    } else {
      for (std::size_t j = 0; j < s; ++j) pmap[i][j] = F.neg(f.coeff(j));
    }
  }
  return RestrictedLieAlgebra(F, std::move(names), {}, std::move(pmap));
}

RestrictedLieAlgebra direct_sum(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::AlgebraMismatch, "summands over different fields");
  const std::size_t na = a.dim(), nb = b.dim();
  std::vector<std::string> names = a.names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& nm : b.names()) {
    std::string x = nm;
    while (used.contains(x)) x += "'";
    used.insert(x);
    names.push_back(x);
  }
  std::vector<BracketEntry> br = a.bracket_entries();
  for (auto e : b.bracket_entries()) br.push_back({e.i + na, e.j + na, e.k + na, e.coeff});
  std::vector<Vector> pmap;
  for (const auto& r : a.pmap()) {
    Vector v = r;
    v.resize(na + nb, 0);
    pmap.push_back(std::move(v));
  }
  for (const auto& r : b.pmap()) {
    Vector v(na, 0);
    v.insert(v.end(), r.begin(), r.end());
    pmap.push_back(std::move(v));
  }
  return RestrictedLieAlgebra(a.field(), std::move(names), br, std::move(pmap));
}

RestrictedLieAlgebra abelian(const FiniteField& f, std::size_t n, AbelianPmap kind, const std::vector<Vector>& custom) {
  std::vector<Vector> pmap(n, Vector(n, 0));
  if (kind == AbelianPmap::toral) {
    for (std::size_t i = 0; i < n; ++i) pmap[i][i] = 1;
  } else if (kind == AbelianPmap::custom) {
    if (custom.size() != n) throw Error(ErrorKind::BadParameters, "custom p-map needs one row per basis vector");
    pmap = custom;
  }
  return RestrictedLieAlgebra(f, {}, {}, std::move(pmap));
}

RestrictedLieAlgebra strongly_abelian(const FiniteField& f, std::size_t n) { return abelian(f, n, AbelianPmap::zero); }

RestrictedLieAlgebra torus(const FiniteField& f, std::size_t n) { return abelian(f, n, AbelianPmap::toral); }

RestrictedLieAlgebra almost_abelian(const FiniteField& f, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "almost abelian algebra needs n >= 1");
  std::vector<std::string> names{"b"};
  std::vector<BracketEntry> br;
  std::vector<Vector> pmap(n + 1, Vector(n + 1, 0));
  pmap[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
    br.push_back({0, i, i, 1});
  }
  return RestrictedLieAlgebra(f, std::move(names), br, std::move(pmap));
}

RestrictedLieAlgebra heisenberg(const FiniteField& f, bool x_to_z, bool y_to_z, bool z_to_z) {
  std::vector<Vector> pmap(3, Vector(3, 0));
  pmap[0][2] = x_to_z ? 1 : 0;
  pmap[1][2] = y_to_z ? 1 : 0;
  pmap[2][2] = z_to_z ? 1 : 0;
  return RestrictedLieAlgebra(f, {"x", "y", "z"}, {{0, 1, 2, 1}}, std::move(pmap));
}

RestrictedLieAlgebra heisenberg_null(const FiniteField& f) { return heisenberg(f); }

RestrictedLieAlgebra usmn(const FiniteField& f) {
  std::vector<Vector> pmap(4, Vector(4, 0));
  pmap[0][1] = 1;
  return RestrictedLieAlgebra(f, {"x", "xp", "y", "z"}, {{0, 2, 3, 1}}, std::move(pmap));
}

RestrictedLieAlgebra sl2(const FiniteField& f) {
  if (f.characteristic() == 2) throw Error(ErrorKind::BadParameters, "sl2 needs odd characteristic");
  const Scalar m2 = f.neg(f.from_int(2));
  return RestrictedLieAlgebra(f, {"e", "h", "f"}, {{0, 1, 0, m2}, {0, 2, 1, 1}, {1, 2, 2, m2}},
                              {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
}

RestrictedLieAlgebra prop_solvable(const FiniteField& f, const std::vector<SkewPolynomial>& blocks, std::size_t m) {
  if (m == 0) throw Error(ErrorKind::BadParameters, "prop_solvable needs at least one non-central line");
  RestrictedLieAlgebra acc = RestrictedLieAlgebra::zero(f);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!(blocks[i].field() == f)) throw Error(ErrorKind::BadParameters, "block over a different field");
    if (!sp_irreducible(blocks[i])) throw Error(ErrorKind::BadParameters, "blocks must be irreducible");
    const auto c = cyclic_from(blocks[i]);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < c.dim(); ++k) names.push_back("c" + std::to_string(i + 1) + "_" + std::to_string(k));
    acc = direct_sum(acc, RestrictedLieAlgebra(f, names, c.bracket_entries(), c.pmap()));
  }
  const std::size_t base = acc.dim();
  const std::size_t n = base + m + 1;
  std::vector<std::string> names = acc.names();
  for (std::size_t j = 1; j <= m; ++j) names.push_back("x" + std::to_string(j));
  names.push_back("b");
  std::vector<Vector> pmap;
  for (const auto& r : acc.pmap()) {
    Vector v = r;
    v.resize(n, 0);
    pmap.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < m; ++j) pmap.emplace_back(n, 0);
  pmap.emplace_back(n, 0);
  pmap.back()[n - 1] = 1;
  std::vector<BracketEntry> br;
  for (std::size_t j = 0; j < m; ++j) br.push_back({base + j, n - 1, base + j, f.neg(1)});
  return RestrictedLieAlgebra(f, std::move(names), br, std::move(pmap));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"abelian",  "strongly_abelian", "torus", "almost_abelian",
                                              "heisenberg", "heisenberg_null", "usmn",  "sl2",
                                              "cyclic",   "prop_solvable"};
  return names;
}

RestrictedLieAlgebra generate(const FamilySpec& spec) {
  const auto F = FiniteField::make(spec.p, spec.k);
  auto polys = [&] {
    std::vector<SkewPolynomial> out;
    for (const auto& c : spec.polys) out.emplace_back(F, c);
    return out;
  };
  const auto& fam = spec.family;
  if (fam == "abelian") return abelian(F, spec.n, spec.pmap, spec.custom_pmap);
  if (fam == "strongly_abelian") return strongly_abelian(F, spec.n);
  if (fam == "torus") return torus(F, spec.n);
  if (fam == "almost_abelian") return almost_abelian(F, spec.n);
  if (fam == "heisenberg") return heisenberg(F, spec.x_to_z, spec.y_to_z, spec.z_to_z);
  if (fam == "heisenberg_null") return heisenberg_null(F);
  if (fam == "usmn") return usmn(F);
  if (fam == "sl2") return sl2(F);
  if (fam == "cyclic") {
    const auto ps = polys();
    if (ps.size() != 1) throw Error(ErrorKind::BadParameters, "cyclic needs exactly one polynomial");
    return cyclic_from(ps.front());
  }
  if (fam == "prop_solvable") return prop_solvable(F, polys(), spec.m);
  throw Error(ErrorKind::BadParameters, "unknown family '" + fam + "'");
}

}  // namespace rla
