#include "rla/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rla/error.hpp"
#include "rla/families.hpp"
#include "rla/io.hpp"

namespace rla {

using nlohmann::ordered_json;

const char* to_string(FieldHypothesis h) noexcept {
  switch (h) {
    case FieldHypothesis::any: return "any";
    case FieldHypothesis::perfect: return "perfect";
    case FieldHypothesis::alg_closed: return "alg_closed";
  }
  return "unknown";
}

const char* to_string(TheoremMode m) noexcept { return m == TheoremMode::assert_mode ? "assert" : "observe"; }

const std::vector<TheoremRecord>& theorem_catalog() {
  using F = FieldHypothesis;
  using M = TheoremMode;
  static const std::vector<TheoremRecord> catalog{
      {"T1", "quasi_ideal_modular", F::any, "", "none", M::assert_mode,
       "every restricted subalgebra a restricted quasi-ideal => modular, upper and lower semimodular"},
      {"T2", "quasi_ideal_powers", F::any, "", "none", M::assert_mode,
       "every restricted subalgebra a restricted quasi-ideal => L^2 in L^[p]; if nilpotent, class <= 2"},
      {"T3", "dually_atomistic_nilradical", F::any, "", "none", M::assert_mode,
       "dually atomistic => N(L) abelian, M meet N(L) a restricted ideal for maximal M, <S>_p an ideal for S in N(L)"},
      {"T4", "lower_semimodular_jordan_dedekind", F::any, "", "none", M::assert_mode,
       "lower semimodular => Jordan-Dedekind chain condition"},
      {"T5", "nilpotent_quasi_ideal_split", F::perfect, "p != 2", "nilpotent", M::assert_mode,
       "nilpotent: every restricted subalgebra a restricted quasi-ideal <=> L = S + P, S a toral ideal, P a "
       "p-nilpotent ideal with the same property"},
      {"T6", "p_power_subalgebra_quasi_ideal", F::perfect, "", "none", M::assert_mode,
       "L^[p] is a restricted quasi-ideal <=> L^[p] is an ideal"},
      {"T7", "core_restricted", F::any, "", "none", M::assert_mode,
       "core of a restricted subalgebra is a restricted ideal"},
      {"T8", "solvable_dually_atomistic_form", F::any, "", "solvable", M::assert_mode,
       "solvable and dually atomistic => abelian or (cyclic blocks + lines) + Fb with b toral"},
      {"T9", "perfect_dually_atomistic_restricted", F::any, "", "perfect_algebra", M::assert_mode,
       "perfect and dually atomistic as a Lie algebra => every subalgebra restricted"},
      {"T10", "upper_semimodular_equivalences", F::alg_closed, "", "none", M::observe,
       "upper semimodular <=> modular <=> all restricted quasi-ideals; then almost abelian or nilpotent of class <= 2"},
      {"T11", "upper_semimodular_shape", F::alg_closed, "", "none", M::observe,
       "upper semimodular => almost abelian or nilpotent"},
      {"T12", "solvable_lower_semimodular_equivalences", F::alg_closed, "", "solvable", M::observe,
       "solvable: lower semimodular <=> Jordan-Dedekind <=> supersolvable"},
      {"T13", "atomistic_cyclic", F::any, "", "none", M::assert_mode,
       "atomistic => every p-nilpotent cyclic restricted subalgebra is one-dimensional (converse observed)"},
      {"T14", "supersolvable_restricted_flag", F::alg_closed, "", "none", M::observe,
       "supersolvable => complete flag of restricted ideals"},
      {"T15", "dually_atomistic_lie_shape", F::any, "", "none", M::assert_mode,
       "dually atomistic as a Lie algebra => abelian, almost abelian or R(L) = 0"},
  };
  return catalog;
}

const TheoremRecord& theorem_record(const std::string& id) {
  for (const auto& t : theorem_catalog())
    if (t.id == id) return t;
  throw Error(ErrorKind::BadParameters, "unknown theorem id " + id);
}

ordered_json to_json(const Outcome& o) {
  ordered_json j;
  j["theorem"] = o.theorem;
  j["mode"] = to_string(o.mode);
  j["applicable"] = o.applicable;
  j["antecedent"] = o.antecedent ? ordered_json(*o.antecedent) : ordered_json(nullptr);
  j["holds"] = o.holds ? ordered_json(*o.holds) : ordered_json(nullptr);
  j["witness"] = o.witness;
  if (!o.notes.empty()) j["notes"] = o.notes;
  return j;
}

namespace {

void require_elements(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  if (power_saturating(L.field().order(), L.dim()) > budget) {
    throw Error(ErrorKind::ResourceLimit, "element count exceeds budget");
  }
}

bool is_p_nilpotent(const RestrictedLieAlgebra& L, std::span<const Scalar> x) {
  return is_zero(L.p_power(x, L.dim() == 0 ? 1 : L.dim()));
}

Subspace span_of(const RestrictedLieAlgebra& L, const std::vector<Vector>& v) {
  return Subspace::span(L.field(), L.dim(), v);
}

// Span of a set of elements if the set is itself a subspace.
std::optional<Subspace> as_subspace(const RestrictedLieAlgebra& L, const std::vector<Vector>& members) {
  const Subspace s = span_of(L, members);
  if (power_saturating(L.field().order(), s.dim()) != members.size()) return std::nullopt;
  return s;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Element of S with coordinates c in its canonical basis.
Vector combine(const Subspace& S, std::span<const Scalar> c) {
  Vector v(S.ambient_dim(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) axpy(S.field(), v, c[i], S.row(i));
  return v;
}

ordered_json nodes_json(const std::vector<std::string>& roles, const std::vector<std::size_t>& idx) {
  ordered_json j = ordered_json::object();
  for (std::size_t i = 0; i < roles.size() && i < idx.size(); ++i) j[roles[i]] = idx[i];
  return j;
}

}  // namespace

bool is_almost_abelian_lie(const RestrictedLieAlgebra& L) {
  const Subspace A = derived_algebra(L);
  if (A.is_zero() || A.dim() + 1 != L.dim()) return false;
  if (!bracket_span(L, A, A).is_zero()) return false;
  const auto cols = A.free_columns();
  const Vector x = L.basis(cols.front());
  Scalar lambda = 0;
  for (std::size_t r = 0; r < A.dim(); ++r) {
    const Vector a = A.basis_vector(r);
    const Vector xa = L.bracket(x, a);
    const Scalar c = a[A.pivots()[r]];
    const Scalar mu = L.field().div(xa[A.pivots()[r]], c);
    if (r == 0) lambda = mu;
    if (mu != lambda || mu == 0) return false;
    Vector want(L.dim(), 0);
    axpy(L.field(), want, lambda, a);
    if (want != xa) return false;
  }
  return true;
}

FormMatch matches_solvable_da_form(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  if (!solvability(L).solvable) throw Error(ErrorKind::NotSolvable, "form check needs a solvable algebra");
  FormMatch m;
  if (L.is_abelian()) {
    m.holds = true;
    m.reason = "abelian";
    m.nilradical = L.whole();
    return m;
  }
  const auto& f = L.field();
  const Subspace N = radicals(L, budget).nilradical;
  m.nilradical = N;
  auto fail = [&](const char* why) {
    m.holds = false;
    m.reason = why;
    return m;
  };
  if (!bracket_span(L, N, N).is_zero()) return fail("nilradical_not_abelian");
  if (N.dim() + 1 != L.dim()) return fail("nilradical_codimension");
  require_elements(L, budget);
  const auto Nb = N.basis();
  for_each_vector(f, L.dim(), [&](const Vector& b) {
    if (N.contains(b) || L.p_power(b) != b) return true;
    bool idem = true, nonzero = false;
    for (const auto& a : Nb) {
      const Vector ba = L.bracket(b, a);
      if (!is_zero(ba)) nonzero = true;
      if (L.bracket(b, ba) != ba) {
        idem = false;
        break;
      }
    }
    if (idem && nonzero) {
      m.b = b;
      return false;
    }
    return true;
  });
  if (!m.b) return fail("no_toral_complement");
  const Subspace image = bracket_span(L, span_of(L, {*m.b}), N);
  const Subspace Z = center(L);
  if (!Z.intersect(image).is_zero()) return fail("centre_meets_image");
  for (const auto& x : image.basis())
    if (!is_zero(L.p_power(x))) return fail("image_not_p_null");
  // Minimal restricted ideals inside Z(L) are the minimal cyclic restricted
  // subalgebras generated by central elements.
  std::vector<Subspace> cyclic;
  for_each_projective_point(f, Z.dim(), iota(Z.dim()), [&](const Vector& c) {
    cyclic.push_back(restricted_closure(L, std::vector<Vector>{combine(Z, c)}));
    return true;
  });
  Subspace sum = L.zero_subspace();
  for (const auto& C : cyclic) {
    const bool minimal = std::none_of(cyclic.begin(), cyclic.end(),
                                      [&](const Subspace& D) { return D.dim() < C.dim() && C.contains(D); });
    if (minimal) sum = sum.sum(C);
  }
  if (sum != Z) return fail("centre_not_sum_of_minimal_ideals");
  m.holds = true;
  m.reason = "form";
  return m;
}

struct Instance::State {
  State(RestrictedLieAlgebra l, std::uint64_t b) : L(std::move(l)), budget(b) {}

  RestrictedLieAlgebra L;
  std::uint64_t budget;
  std::optional<SubalgebraLattice> rlat, olat;
  std::optional<PredicateReport> quasi, usm, lsm, modular, da, atomistic, oda;
  std::optional<JReport> j;
  std::optional<Solvability> solv;
  std::optional<Radicals> rad;
  std::optional<Subspace> lp;
  std::optional<Supersolvability> ss;

  const SubalgebraLattice& rl() {
    if (!rlat) rlat = SubalgebraLattice::enumerate(L, LatticeMode::restricted, budget);
    return *rlat;
  }
  const SubalgebraLattice& ol() {
    if (!olat) olat = SubalgebraLattice::enumerate(L, LatticeMode::ordinary, budget);
    return *olat;
  }
  template <class T, class Fn>
  const T& cached(std::optional<T>& slot, Fn&& fn) {
    if (!slot) slot = fn();
    return *slot;
  }
  const PredicateReport& all_quasi() { return cached(quasi, [&] { return quasi_ideal_scan(rl()); }); }
  const PredicateReport& upper() { return cached(usm, [&] { return is_upper_semimodular(rl()); }); }
  const PredicateReport& lower() { return cached(lsm, [&] { return is_lower_semimodular(rl()); }); }
  const PredicateReport& mod() {
    return cached(modular, [&] {
      if (upper().holds && lower().holds) return PredicateReport{"modular", true, {"X", "Y", "Z"}, {}};
      return is_modular(rl());
    });
  }
  const PredicateReport& dually() { return cached(da, [&] { return is_dually_atomistic(rl()); }); }
  const PredicateReport& atom() { return cached(atomistic, [&] { return is_atomistic(rl()); }); }
  const PredicateReport& dually_lie() { return cached(oda, [&] { return is_dually_atomistic(ol()); }); }
  const JReport& jd() { return cached(j, [&] { return j_algebra(rl()); }); }
  const Solvability& sol() { return cached(solv, [&] { return solvability(L); }); }
  const Radicals& radical() { return cached(rad, [&] { return radicals(L, budget); }); }
  const Subspace& lpsub() { return cached(lp, [&] { return lp_subalgebra(L, budget); }); }
  const Supersolvability& super() { return cached(ss, [&] { return supersolvability(L, budget); }); }

  bool nilpotent_class_at_most_2() {
    const auto& s = sol();
    return s.nilpotent && *s.nilpotency_class <= 2;
  }

  Outcome t1();
  Outcome t2();
  Outcome t3();
  Outcome t4();
  Outcome t5();
  Outcome t6();
  Outcome t7();
  Outcome t8();
  Outcome t9();
  Outcome t10();
  Outcome t11();
  Outcome t12();
  Outcome t13();
  Outcome t14();
  Outcome t15();
};

namespace {

Outcome start(const std::string& id) {
  Outcome o;
  o.theorem = id;
  o.mode = theorem_record(id).mode;
  return o;
}

// Implication outcome: vacuous when the antecedent fails.
Outcome implication(const std::string& id, bool antecedent) {
  Outcome o = start(id);
  o.antecedent = antecedent;
  o.holds = true;
  return o;
}

void add_failure(Outcome& o, const std::string& clause, ordered_json detail = ordered_json::object()) {
  o.holds = false;
  if (!o.witness.contains("failed")) o.witness["failed"] = ordered_json::array();
  ordered_json e;
  e["clause"] = clause;
  if (!detail.empty()) e["detail"] = std::move(detail);
  o.witness["failed"].push_back(std::move(e));
}

ordered_json witness_of(const PredicateReport& r) {
  ordered_json j;
  j["predicate"] = r.predicate;
  j["holds"] = r.holds;
  if (!r.holds) j["nodes"] = nodes_json(r.roles, r.witness);
  return j;
}

}  // namespace

Outcome Instance::State::t1() {
  const auto& q = all_quasi();
  Outcome o = implication("T1", q.holds);
  if (!q.holds) {
    o.witness["antecedent_witness"] = nodes_json(q.roles, q.witness);
    return o;
  }
  for (const auto* r : {&mod(), &upper(), &lower()})
    if (!r->holds) add_failure(o, r->predicate, witness_of(*r));
  return o;
}

Outcome Instance::State::t2() {
  const auto& q = all_quasi();
  Outcome o = implication("T2", q.holds);
  o.notes["characteristic_2"] = L.field().characteristic() == 2;
  if (!q.holds) return o;
  const Subspace L2 = derived_algebra(L);
  if (!lpsub().contains(L2)) {
    ordered_json d;
    d["derived"] = subspace_to_json(L2);
    d["p_power_subalgebra"] = subspace_to_json(lpsub());
    add_failure(o, "derived_in_p_power_subalgebra", d);
  }
  if (sol().nilpotent && *sol().nilpotency_class > 2) {
    add_failure(o, "nilpotency_class", {{"class", *sol().nilpotency_class}});
  }
  return o;
}

Outcome Instance::State::t3() {
  const auto& d = dually();
  Outcome o = implication("T3", d.holds);
  if (!d.holds) return o;
  const Subspace& N = radical().nilradical;
  if (!bracket_span(L, N, N).is_zero()) add_failure(o, "nilradical_abelian", {{"nilradical", subspace_to_json(N)}});
  const auto& lat = rl();
  for (auto m : lat.maximal_nodes()) {
    const Subspace cap = lat.node(m).intersect(N);
    if (!classify_subspace(L, cap).restricted_ideal) add_failure(o, "maximal_meet_nilradical", {{"M", m}});
  }
  for (const auto& S : enumerate_subspaces(L.field(), N.dim(), std::nullopt, budget)) {
    std::vector<Vector> gens;
    for (std::size_t r = 0; r < S.dim(); ++r) gens.push_back(combine(N, S.row(r)));
    const Subspace C = restricted_closure(L, gens);
    if (!classify_subspace(L, C).restricted_ideal) {
      add_failure(o, "closure_of_subspace_is_ideal", {{"S", subspace_to_json(span_of(L, gens))}});
      break;
    }
  }
  return o;
}

Outcome Instance::State::t4() {
  const auto& l = lower();
  Outcome o = implication("T4", l.holds);
  if (!l.holds) return o;
  const auto& jr = jd();
  if (!jr.is_j) add_failure(o, "jordan_dedekind", nodes_json({"bottom", "V"}, jr.witness));
  return o;
}

Outcome Instance::State::t5() {
  Outcome o = start("T5");
  if (L.field().characteristic() == 2 || !sol().nilpotent) {
    o.applicable = false;
    return o;
  }
  require_elements(L, budget);
  std::vector<Vector> semisimple, nilpotent;
  for_each_vector(L.field(), L.dim(), [&](const Vector& x) {
    if (is_p_nilpotent(L, x)) nilpotent.push_back(x);
    if (element_class(L, x).semisimple || is_zero(x)) semisimple.push_back(x);
    return true;
  });
  const bool lhs = all_quasi().holds;
  bool rhs = true;
  std::string reason = "split";
  const auto S = as_subspace(L, semisimple);
  const auto P = as_subspace(L, nilpotent);
  if (!S) {
    rhs = false;
    reason = "semisimple_elements_not_a_subspace";
  } else if (!P) {
    rhs = false;
    reason = "p_nilpotent_elements_not_a_subspace";
  } else if (S->dim() + P->dim() != L.dim() || !S->intersect(*P).is_zero()) {
    rhs = false;
    reason = "not_a_direct_sum";
  } else if (!classify_subspace(L, *S).restricted_ideal || !is_torus(L, *S)) {
    rhs = false;
    reason = "semisimple_part_not_toral_ideal";
  } else if (!classify_subspace(L, *P).restricted_ideal) {
    rhs = false;
    reason = "p_nilpotent_part_not_ideal";
  } else {
    const auto Palg = subalgebra(L, *P);
    const auto scan = quasi_ideal_scan(SubalgebraLattice::enumerate(Palg, LatticeMode::restricted, budget));
    if (!scan.holds) {
      rhs = false;
      reason = "p_nilpotent_part_not_all_quasi_ideal";
    }
  }
  o.antecedent = lhs;
  o.holds = lhs == rhs;
  o.witness["all_quasi_ideal"] = lhs;
  o.witness["split"] = rhs;
  o.witness["reason"] = reason;
  if (!lhs) o.witness["quasi_witness"] = nodes_json(all_quasi().roles, all_quasi().witness);
  return o;
}

Outcome Instance::State::t6() {
  Outcome o = start("T6");
  const Subspace& P = lpsub();
  const auto& lat = rl();
  bool quasi = true;
  for (std::size_t h = 0; h < lat.size() && quasi; ++h) {
    const Subspace& H = lat.node(h);
    if (!P.sum(H).contains(bracket_span(L, P, H))) {
      quasi = false;
      o.witness["H"] = h;
    }
  }
  const bool ideal = is_ideal(L, P);
  o.holds = quasi == ideal;
  o.witness["quasi_ideal"] = quasi;
  o.witness["ideal"] = ideal;
  return o;
}

Outcome Instance::State::t7() {
  Outcome o = start("T7");
  o.holds = true;
  const auto& lat = rl();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!classify_subspace(L, core(L, lat.node(i))).restricted_ideal) {
      add_failure(o, "core_restricted", {{"S", i}});
      break;
    }
  }
  return o;
}

Outcome Instance::State::t8() {
  if (!sol().solvable) {
    Outcome o = start("T8");
    o.applicable = false;
    return o;
  }
  const auto& d = dually();
  Outcome o = implication("T8", d.holds);
  if (!d.holds) return o;
  const auto m = matches_solvable_da_form(L, budget);
  o.witness["reason"] = m.reason;
  if (m.b) o.witness["b"] = vector_to_json(L.field(), *m.b);
  if (!m.holds) add_failure(o, m.reason);
  return o;
}

Outcome Instance::State::t9() {
  if (!derived_algebra(L).is_full()) {
    Outcome o = start("T9");
    o.applicable = false;
    return o;
  }
  const auto& d = dually_lie();
  Outcome o = implication("T9", d.holds);
  if (!d.holds) return o;
  const auto& lat = ol();
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (!is_restricted_subalgebra(L, lat.node(i))) {
      add_failure(o, "subalgebra_restricted", {{"S", i}});
      break;
    }
  return o;
}

Outcome Instance::State::t10() {
  Outcome o = start("T10");
  const bool u = upper().holds, m = mod().holds, q = all_quasi().holds;
  o.antecedent = u || m || q;
  o.holds = true;
  o.witness["upper_semimodular"] = u;
  o.witness["modular"] = m;
  o.witness["all_quasi_ideal"] = q;
  if (!(u == m && m == q)) add_failure(o, "equivalence");
  if (u || m || q) {
    const bool aa = is_almost_abelian_lie(L);
    const bool nil2 = nilpotent_class_at_most_2();
    o.witness["almost_abelian"] = aa;
    o.witness["nilpotent_class_at_most_2"] = nil2;
    if (!aa && !nil2) add_failure(o, "shape");
  }
  return o;
}

Outcome Instance::State::t11() {
  const auto& u = upper();
  Outcome o = implication("T11", u.holds);
  if (!u.holds) return o;
  if (!is_almost_abelian_lie(L) && !sol().nilpotent) add_failure(o, "almost_abelian_or_nilpotent");
  return o;
}

Outcome Instance::State::t12() {
  Outcome o = start("T12");
  if (!sol().solvable) {
    o.applicable = false;
    return o;
  }
  const bool l = lower().holds, jj = jd().is_j, s = super().supersolvable;
  o.holds = l == jj && jj == s;
  o.witness["lower_semimodular"] = l;
  o.witness["jordan_dedekind"] = jj;
  o.witness["supersolvable"] = s;
  if (!jj) o.witness["j_witness"] = nodes_json({"bottom", "V"}, jd().witness);
  return o;
}

Outcome Instance::State::t13() {
  const auto& a = atom();
  Outcome o = implication("T13", a.holds);
  require_elements(L, budget);
  std::optional<Vector> long_cyclic;
  for_each_vector(L.field(), L.dim(), [&](const Vector& x) {
    if (!is_zero(x) && is_p_nilpotent(L, x) && !is_zero(L.p_power(x))) {
      long_cyclic = x;
      return false;
    }
    return true;
  });
  o.notes["sufficiency"] = long_cyclic.has_value() || a.holds;
  if (a.holds && long_cyclic) add_failure(o, "p_nilpotent_cyclic_dimension", {{"x", vector_to_json(L.field(), *long_cyclic)}});
  return o;
}

Outcome Instance::State::t14() {
  const bool s = super().supersolvable;
  Outcome o = implication("T14", s);
  if (s && !super().restricted_ideal_flag) add_failure(o, "restricted_ideal_flag");
  return o;
}

Outcome Instance::State::t15() {
  const auto& d = dually_lie();
  Outcome o = implication("T15", d.holds);
  if (!d.holds) return o;
  const bool ab = L.is_abelian(), aa = is_almost_abelian_lie(L), ss = radical().solvable_radical.is_zero();
  o.witness["abelian"] = ab;
  o.witness["almost_abelian"] = aa;
  o.witness["radical_zero"] = ss;
  if (!ab && !aa && !ss) add_failure(o, "shape");
  return o;
}

Instance::Instance(RestrictedLieAlgebra L, std::uint64_t budget)
    : s_(std::make_unique<State>(std::move(L), budget)) {}
Instance::~Instance() = default;
Instance::Instance(Instance&&) noexcept = default;

const RestrictedLieAlgebra& Instance::algebra() const noexcept { return s_->L; }
const SubalgebraLattice& Instance::restricted_lattice() { return s_->rl(); }
const SubalgebraLattice& Instance::ordinary_lattice() { return s_->ol(); }

Outcome Instance::check(const std::string& id) {
  using Fn = Outcome (State::*)();
  static const std::map<std::string, Fn> table{
      {"T1", &State::t1},   {"T2", &State::t2},   {"T3", &State::t3},   {"T4", &State::t4},
      {"T5", &State::t5},   {"T6", &State::t6},   {"T7", &State::t7},   {"T8", &State::t8},
      {"T9", &State::t9},   {"T10", &State::t10}, {"T11", &State::t11}, {"T12", &State::t12},
      {"T13", &State::t13}, {"T14", &State::t14}, {"T15", &State::t15},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw Error(ErrorKind::BadParameters, "unknown theorem id " + id);
  return (s_.get()->*(it->second))();
}

std::vector<Outcome> Instance::check_all(const std::vector<std::string>& ids) {
  std::vector<Outcome> out;
  for (const auto& id : ids) out.push_back(check(id));
  return out;
}

Outcome check_instance(const RestrictedLieAlgebra& L, const std::string& theorem_id, std::uint64_t budget) {
  return Instance(L, budget).check(theorem_id);
}

namespace {

std::string field_label(const FiniteField& f) {
  return "GF(" + std::to_string(f.order()) + ")";
}

std::string poly_label(const SkewPolynomial& f) {
  ordered_json j = ordered_json::array();
  for (auto c : f.coeffs()) j.push_back(scalar_to_json(f.field(), c));
  return j.dump();
}

std::uint64_t subspace_count(std::size_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto g = gaussian_binomial(n, k, q);
    total = g > UINT64_MAX - total ? UINT64_MAX : total + g;
  }
  return total;
}

bool wants(const std::vector<std::string>& families, const char* name) {
  return std::find(families.begin(), families.end(), name) != families.end();
}

std::vector<SkewPolynomial> irreducible_polys(const FiniteField& f, std::size_t max_degree) {
  std::vector<SkewPolynomial> out;
  for (std::size_t d = 1; d <= max_degree; ++d)
    for (auto& g : monic_skew_polynomials(f, d))
      if (sp_irreducible(g)) out.push_back(std::move(g));
  return out;
}

void family_instances(const CorpusConfig& c, const FiniteField& f, std::size_t max_dim, bool nilpotent_only,
                      std::vector<CorpusInstance>& out) {
  const auto& fam = c.families;
  const std::string at = "@" + field_label(f);
  auto add = [&](std::string key, RestrictedLieAlgebra L) { out.push_back({key + at, std::move(L)}); };
  if (wants(fam, "strongly_abelian"))
    for (std::size_t n = 1; n <= max_dim; ++n) add("strongly_abelian(n=" + std::to_string(n) + ")", strongly_abelian(f, n));
  if (wants(fam, "torus"))
    for (std::size_t n = 1; n <= max_dim; ++n) add("torus(n=" + std::to_string(n) + ")", torus(f, n));
  if (wants(fam, "cyclic"))
    for (std::size_t d = 1; d <= std::min(c.max_poly_degree, max_dim); ++d)
      for (const auto& g : monic_skew_polynomials(f, d)) add("cyclic(" + poly_label(g) + ")", cyclic_from(g));
  if (!nilpotent_only && wants(fam, "almost_abelian"))
    for (std::size_t n = 1; n + 1 <= max_dim; ++n) add("almost_abelian(n=" + std::to_string(n) + ")", almost_abelian(f, n));
  if (max_dim >= 3) {
    if (wants(fam, "heisenberg")) {
      for (int mask = 0; mask < 8; ++mask) {
        const bool x = mask & 4, y = mask & 2, z = mask & 1;
        add("heisenberg(x_to_z=" + std::to_string(x) + ",y_to_z=" + std::to_string(y) + ",z_to_z=" +
                std::to_string(z) + ")",
            heisenberg(f, x, y, z));
      }
    } else if (wants(fam, "heisenberg_null")) {
      add("heisenberg_null", heisenberg_null(f));
    }
  }
  if (max_dim >= 4 && wants(fam, "usmn")) add("usmn", usmn(f));
  if (nilpotent_only) return;
  if (max_dim >= 3 && f.characteristic() != 2 && wants(fam, "sl2")) add("sl2", sl2(f));
  if (wants(fam, "prop_solvable") && max_dim >= 2) {
    const auto irr = irreducible_polys(f, std::min(c.max_poly_degree, max_dim - 2));
    // Multisets of blocks as nondecreasing index lists.
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t deg) {
      for (std::size_t m = 1; deg + m + 1 <= max_dim; ++m) {
        if (subspace_count(deg + m + 1, f.order()) > c.prop_solvable_max_subspaces) break;
        std::vector<SkewPolynomial> blocks;
        std::string label = "[";
        for (std::size_t i = 0; i < pick.size(); ++i) {
          blocks.push_back(irr[pick[i]]);
          label += (i ? "," : "") + poly_label(irr[pick[i]]);
        }
        label += "]";
        add("prop_solvable(blocks=" + label + ",m=" + std::to_string(m) + ")", prop_solvable(f, blocks, m));
      }
      for (std::size_t i = from; i < irr.size(); ++i) {
        const std::size_t d = static_cast<std::size_t>(irr[i].degree());
        if (deg + d + 2 > max_dim) continue;
        pick.push_back(i);
        rec(i, deg + d);
        pick.pop_back();
      }
    };
    rec(0, 0);
  }
}

bool bracket_axioms_ok(const RestrictedLieAlgebra& L) {
  for (const auto& v : validate(L).violations)
    if (v.axiom != Axiom::pmap_compat) return false;
  return true;
}

// Structure-constant tables on e_0..e_{n-1}: every coefficient of every
// bracket [e_i, e_j], i < j, and of every p-image ranges over `values`.
void sweep_instances(const FiniteField& f, std::size_t n, const std::vector<Scalar>& values, const std::string& tag,
                     std::vector<CorpusInstance>& out) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::size_t bslots = pairs.size() * n, pslots = n * n;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  const std::size_t v = values.size();
  auto digits = [&](std::uint64_t idx, std::size_t len) {
    std::vector<Scalar> d(len);
    for (std::size_t i = len; i-- > 0;) {
      d[i] = values[idx % v];
      idx /= v;
    }
    return d;
  };
  const std::uint64_t bcount = power_saturating(v, bslots), pcount = power_saturating(v, pslots);
  const std::vector<Vector> zero_pmap(n, Vector(n, 0));
  for (std::uint64_t bi = 0; bi < bcount; ++bi) {
    const auto bd = digits(bi, bslots);
    std::vector<BracketEntry> entries;
    for (std::size_t s = 0; s < pairs.size(); ++s)
      for (std::size_t k = 0; k < n; ++k)
        if (bd[s * n + k] != 0) entries.push_back({pairs[s].first, pairs[s].second, k, bd[s * n + k]});
    if (!bracket_axioms_ok(RestrictedLieAlgebra(f, names, entries, zero_pmap))) continue;
    for (std::uint64_t pi = 0; pi < pcount; ++pi) {
      const auto pd = digits(pi, pslots);
      std::vector<Vector> pmap(n, Vector(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) pmap[i][k] = pd[i * n + k];
      RestrictedLieAlgebra L(f, names, entries, std::move(pmap));
      if (!validate(L).ok) continue;
      out.push_back({tag + "@" + field_label(f) + "#b" + std::to_string(bi) + "p" + std::to_string(pi), std::move(L)});
    }
  }
}

std::vector<std::string> all_theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& t : theorem_catalog()) ids.push_back(t.id);
  return ids;
}

FieldChoice field_from_json(const ordered_json& j) {
  if (j.is_number_integer() && j.get<std::int64_t>() > 0) return {j.get<std::uint32_t>(), 1};
  if (j.is_object()) return {j.at("p").get<std::uint32_t>(), j.value("k", 1u)};
  throw Error(ErrorKind::ParseError, "field entries are primes or {p, k} objects");
}

}  // namespace

CorpusConfig default_corpus_config() {
  CorpusConfig c;
  c.families = {"strongly_abelian", "torus", "cyclic", "almost_abelian", "heisenberg", "usmn", "sl2",
                "prop_solvable"};
  c.fields = {{2, 1}, {3, 1}, {5, 1}};
  c.max_dim = 5;
  c.nilpotent_fields = {{3, 2}};
  c.nilpotent_max_dim = 4;
  c.max_poly_degree = 3;
  c.sweep_dim2 = true;
  c.sweep_dim3 = true;
  c.theorems = all_theorem_ids();
  return c;
}

CorpusConfig corpus_config_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "corpus config must be a JSON object");
  CorpusConfig c;
  try {
    c.families = j.value("families", std::vector<std::string>{});
    for (const auto& f : j.value("fields", ordered_json::array())) c.fields.push_back(field_from_json(f));
    c.max_dim = j.value("max_dim", std::size_t{0});
    for (const auto& f : j.value("nilpotent_fields", ordered_json::array()))
      c.nilpotent_fields.push_back(field_from_json(f));
    c.nilpotent_max_dim = j.value("nilpotent_max_dim", std::size_t{0});
    c.max_poly_degree = j.value("max_poly_degree", c.max_poly_degree);
    c.prop_solvable_max_subspaces = j.value("prop_solvable_max_subspaces", c.prop_solvable_max_subspaces);
    c.sweep_dim2 = j.value("sweep_dim2", false);
    c.sweep_dim3 = j.value("sweep_dim3", false);
    const auto th = j.value("theorems", ordered_json("all"));
    c.theorems = th.is_string() && th.get<std::string>() == "all" ? all_theorem_ids() : th.get<std::vector<std::string>>();
    c.budget = j.value("budget", c.budget);
    c.max_listed = j.value("max_listed", c.max_listed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("corpus config: ") + e.what());
  }
  for (const auto& name : c.families)
    if (std::find(family_names().begin(), family_names().end(), name) == family_names().end())
      throw Error(ErrorKind::ParseError, "corpus config: unknown family " + name);
  for (const auto& id : c.theorems) theorem_record(id);
  return c;
}

ordered_json to_json(const CorpusConfig& c) {
  auto fields = [](const std::vector<FieldChoice>& fs) {
    ordered_json a = ordered_json::array();
    for (const auto& f : fs) a.push_back({{"p", f.p}, {"k", f.k}});
    return a;
  };
  ordered_json j;
  j["families"] = c.families;
  j["fields"] = fields(c.fields);
  j["max_dim"] = c.max_dim;
  j["nilpotent_fields"] = fields(c.nilpotent_fields);
  j["nilpotent_max_dim"] = c.nilpotent_max_dim;
  j["max_poly_degree"] = c.max_poly_degree;
  j["prop_solvable_max_subspaces"] = c.prop_solvable_max_subspaces;
  j["sweep_dim2"] = c.sweep_dim2;
  j["sweep_dim3"] = c.sweep_dim3;
  j["theorems"] = c.theorems;
  j["budget"] = c.budget;
  j["max_listed"] = c.max_listed;
  return j;
}

std::vector<CorpusInstance> corpus_instances(const CorpusConfig& c) {
  std::vector<CorpusInstance> out;
  for (const auto& fc : c.fields) family_instances(c, FiniteField::make(fc.p, fc.k), c.max_dim, false, out);
  for (const auto& fc : c.nilpotent_fields)
    family_instances(c, FiniteField::make(fc.p, fc.k), c.nilpotent_max_dim, true, out);
  for (std::uint32_t p : {2u, 3u}) {
    const auto f = FiniteField::make(p);
    if (c.sweep_dim2) {
      std::vector<Scalar> all;
      for (Scalar s = 0; s < f.order(); ++s) all.push_back(s);
      sweep_instances(f, 2, all, "sweep2", out);
    }
    if (c.sweep_dim3) sweep_instances(f, 3, {0, 1}, "sweep3", out);
  }
  return out;
}

namespace {

struct Tally {
  std::size_t checked = 0, applicable = 0, antecedent_true = 0, holds = 0, fails = 0;
  ordered_json listed = ordered_json::array();

  void add(const std::string& key, const Outcome& o, std::size_t max_listed) {
    ++checked;
    if (!o.applicable) return;
    ++applicable;
    if (o.antecedent.value_or(false)) ++antecedent_true;
    if (o.holds.value_or(true)) {
      ++holds;
    } else {
      ++fails;
      if (listed.size() < max_listed) listed.push_back({{"instance", key}, {"witness", o.witness}});
    }
  }

  ordered_json json(const char* fail_name) const {
    ordered_json j;
    j["checked"] = checked;
    j["applicable"] = applicable;
    j["antecedent_true"] = antecedent_true;
    j["holds"] = holds;
    j[fail_name] = fails;
    j["listed"] = listed;
    return j;
  }
};

}  // namespace

AggregateReport run_corpus(const CorpusConfig& c) {
  const auto instances = corpus_instances(c);
  std::map<std::string, Tally> tallies;
  Tally char2;
  std::size_t sufficiency_checked = 0, sufficiency_fails = 0;
  ordered_json sufficiency_listed = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  std::map<std::string, std::size_t> by_source;
  for (const auto& inst : instances) {
    ++by_source[inst.key.substr(0, inst.key.find_first_of("(@"))];
    Instance ctx(inst.algebra, c.budget);
    for (const auto& id : c.theorems) {
      Outcome o;
      try {
        o = ctx.check(id);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ResourceLimit) throw;
        skipped.push_back({{"instance", inst.key}, {"theorem", id}, {"reason", e.what()}});
        continue;
      }
      tallies[id].add(inst.key, o, c.max_listed);
      if (id == "T2" && o.notes.value("characteristic_2", false)) char2.add(inst.key, o, c.max_listed);
      if (id == "T13") {
        ++sufficiency_checked;
        if (!o.notes.value("sufficiency", true)) {
          ++sufficiency_fails;
          if (sufficiency_listed.size() < c.max_listed) sufficiency_listed.push_back(inst.key);
        }
      }
    }
  }
  AggregateReport r;
  r.instances = instances.size();
  ordered_json& j = r.json;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "aggregate_report";
  j["config"] = to_json(c);
  j["instance_count"] = instances.size();
  j["instances_by_source"] = ordered_json::object();
  for (const auto& [k, n] : by_source) j["instances_by_source"][k] = n;
  j["theorems"] = ordered_json::object();
  for (const auto& id : c.theorems) {
    const auto& rec = theorem_record(id);
    const bool asserted = rec.mode == TheoremMode::assert_mode;
    ordered_json t{{"name", rec.name}, {"mode", to_string(rec.mode)}, {"field", to_string(rec.field)}};
    t.update(tallies[id].json(asserted ? "failures" : "discrepancies"));
    if (id == "T2") t["characteristic_2"] = char2.json("failures");
    if (id == "T13") {
      t["sufficiency_observed"] = sufficiency_checked;
      t["sufficiency_discrepancies"] = sufficiency_fails;
      t["sufficiency_listed"] = sufficiency_listed;
    }
    if (asserted) r.assert_failures += tallies[id].fails;
    j["theorems"][id] = std::move(t);
  }
  j["skipped"] = skipped;
  j["assert_failures"] = r.assert_failures;
  return r;
}

}  // namespace rla
