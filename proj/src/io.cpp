#include "rla/io.hpp"

#include <fstream>
#include <sstream>

#include "rla/error.hpp"
#include "rla/structure.hpp"

namespace rla {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::uint64_t get_index(const ordered_json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) parse_fail(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const ordered_json& member(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

}  // namespace

ordered_json scalar_to_json(const FiniteField& f, Scalar s) {
  if (f.degree() == 1) return s;
  return f.residues(s);
}

Scalar scalar_from_json(const FiniteField& f, const ordered_json& j, const std::string& where) {
  if (f.degree() == 1) {
    const auto v = get_index(j, where);
    if (v >= f.order()) parse_fail(where, "coefficient not reduced modulo p");
    return static_cast<Scalar>(v);
  }
  if (!j.is_array() || j.size() != f.degree()) {
    parse_fail(where, "expected " + std::to_string(f.degree()) + " residues");
  }
  std::vector<std::uint32_t> r;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto v = get_index(j[i], where + "[" + std::to_string(i) + "]");
    if (v >= f.characteristic()) parse_fail(where, "residue not reduced modulo p");
    r.push_back(static_cast<std::uint32_t>(v));
  }
  return f.from_residues(r);
}

ordered_json vector_to_json(const FiniteField& f, std::span<const Scalar> v) {
  ordered_json a = ordered_json::array();
  for (auto s : v) a.push_back(scalar_to_json(f, s));
  return a;
}

ordered_json subspace_to_json(const Subspace& s) {
  ordered_json a = ordered_json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) a.push_back(vector_to_json(s.field(), s.row(r)));
  return a;
}

RestrictedLieAlgebra algebra_from_json(const ordered_json& j) {
  const auto& fj = member(j, "field", "$");
  const auto p = get_index(member(fj, "p", "field"), "field.p");
  const auto k = fj.contains("k") ? get_index(fj["k"], "field.k") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (fj.contains("modulus") && !fj["modulus"].is_null()) {
    if (!fj["modulus"].is_array()) parse_fail("field.modulus", "expected an array of residues");
    modulus.emplace();
    for (std::size_t i = 0; i < fj["modulus"].size(); ++i)
      modulus->push_back(static_cast<std::uint32_t>(get_index(fj["modulus"][i], "field.modulus")));
  }
  if (p > FiniteField::kMaxOrder || k == 0 || k > 16) parse_fail("field", "unsupported field size");
  FiniteField f = [&] {
    try {
      return FiniteField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), modulus);
    } catch (const Error& e) {
      parse_fail("field", e.what());
    }
  }();

  const auto n = get_index(member(j, "dim", "$"), "dim");
  if (n > 64) parse_fail("dim", "dimension too large");
  std::vector<std::string> names;
  if (j.contains("names")) {
    const auto& nj = j["names"];
    if (!nj.is_array() || nj.size() != n) parse_fail("names", "expected one name per basis vector");
    for (std::size_t i = 0; i < n; ++i) {
      if (!nj[i].is_string()) parse_fail("names[" + std::to_string(i) + "]", "expected a string");
      names.push_back(nj[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }

  std::vector<BracketEntry> entries;
  const auto& bj = j.contains("brackets") ? j["brackets"] : ordered_json::array();
  if (!bj.is_array()) parse_fail("brackets", "expected an array");
  for (std::size_t e = 0; e < bj.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    if (!bj[e].is_array() || bj[e].size() != 4) parse_fail(where, "expected [i, j, k, coeff]");
    BracketEntry b;
    b.i = get_index(bj[e][0], where + "[0]");
    b.j = get_index(bj[e][1], where + "[1]");
    b.k = get_index(bj[e][2], where + "[2]");
    if (b.i >= n || b.j >= n || b.k >= n) parse_fail(where, "basis index out of range");
    b.coeff = scalar_from_json(f, bj[e][3], where + "[3]");
    entries.push_back(b);
  }

  std::vector<Vector> pmap;
  const auto& pj = member(j, "pmap", "$");
  if (!pj.is_array() || pj.size() != n) parse_fail("pmap", "expected dim rows");
  for (std::size_t r = 0; r < n; ++r) {
    const std::string where = "pmap[" + std::to_string(r) + "]";
    if (!pj[r].is_array() || pj[r].size() != n) parse_fail(where, "expected dim coordinates");
    Vector row;
    for (std::size_t c = 0; c < n; ++c) row.push_back(scalar_from_json(f, pj[r][c], where + "[" + std::to_string(c) + "]"));
    pmap.push_back(std::move(row));
  }
  return RestrictedLieAlgebra(std::move(f), std::move(names), entries, std::move(pmap));
}

ordered_json algebra_to_json(const RestrictedLieAlgebra& L) {
  const auto& f = L.field();
  ordered_json j;
  ordered_json fj;
  fj["p"] = f.characteristic();
  fj["k"] = f.degree();
  if (f.degree() > 1) fj["modulus"] = f.modulus();
  j["field"] = fj;
  j["dim"] = L.dim();
  j["names"] = L.names();
  ordered_json br = ordered_json::array();
  for (const auto& e : L.bracket_entries()) br.push_back({e.i, e.j, e.k, scalar_to_json(f, e.coeff)});
  j["brackets"] = br;
  ordered_json pm = ordered_json::array();
  for (const auto& r : L.pmap()) pm.push_back(vector_to_json(f, r));
  j["pmap"] = pm;
  return j;
}

RestrictedLieAlgebra parse_algebra(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return algebra_from_json(j);
}

std::string serialize_algebra(const RestrictedLieAlgebra& L) { return algebra_to_json(L).dump(2) + "\n"; }

RestrictedLieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

void save_algebra(const RestrictedLieAlgebra& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadParameters, "cannot write " + path);
  out << serialize_algebra(L);
}

ordered_json validation_to_json(const ValidationReport& r) {
  ordered_json j;
  j["ok"] = r.ok;
  ordered_json v = ordered_json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", to_string(x.axiom)}, {"indices", x.indices}});
  j["violations"] = v;
  return j;
}

ordered_json predicate_to_json(const PredicateReport& r) {
  ordered_json j;
  j["holds"] = r.holds;
  j["roles"] = r.roles;
  ordered_json w = ordered_json::object();
  if (!r.holds)
    for (std::size_t i = 0; i < r.roles.size() && i < r.witness.size(); ++i) w[r.roles[i]] = r.witness[i];
  j["witness"] = r.holds ? ordered_json(nullptr) : w;
  return j;
}

ordered_json structure_report(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  const auto& f = L.field();
  ordered_json j;
  const auto sol = solvability(L);
  j["solvable"] = sol.solvable;
  j["nilpotent"] = sol.nilpotent;
  j["nilpotency_class"] = sol.nilpotency_class ? ordered_json(*sol.nilpotency_class) : ordered_json(nullptr);
  j["derived_length"] = sol.derived_length ? ordered_json(*sol.derived_length) : ordered_json(nullptr);
  j["perfect"] = is_perfect(L);
  ordered_json series_j;
  for (auto kind : {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::upper_central}) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : series(L, kind).terms) terms.push_back(subspace_to_json(t));
    series_j[to_string(kind)] = terms;
  }
  j["series"] = series_j;
  j["center"] = subspace_to_json(center(L));
  const auto rad = radicals(L, budget);
  j["nilradical"] = subspace_to_json(rad.nilradical);
  j["solvable_radical"] = subspace_to_json(rad.solvable_radical);
  const auto fr = frattini(L, budget);
  j["frattini_subalgebra"] = subspace_to_json(fr.F_p);
  j["frattini_ideal"] = subspace_to_json(fr.phi_p);
  j["abelian_p_socle"] = subspace_to_json(abelian_p_socle(L, budget));
  j["p_power_subalgebra"] = subspace_to_json(lp_subalgebra(L, budget));
  const auto T = maximal_torus(L, budget);
  j["maximal_torus"] = subspace_to_json(T);
  ordered_json roots;
  try {
    const auto rd = root_decomposition(L, T, budget);
    roots["toral_basis"] = ordered_json::array();
    for (const auto& t : rd.toral_basis) roots["toral_basis"].push_back(vector_to_json(f, t));
    roots["cartan"] = subspace_to_json(rd.cartan);
    roots["roots"] = ordered_json::array();
    for (const auto& [alpha, space] : rd.roots)
      roots["roots"].push_back({{"values", vector_to_json(f, alpha)}, {"space", subspace_to_json(space)}});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotATorus) throw;
    roots["error"] = to_string(e.kind());
  }
  j["root_decomposition"] = roots;
  const auto ss = supersolvability(L, budget);
  auto flag_json = [](const std::optional<std::vector<Subspace>>& fl) {
    if (!fl) return ordered_json(nullptr);
    ordered_json a = ordered_json::array();
    for (const auto& s : *fl) a.push_back(subspace_to_json(s));
    return a;
  };
  j["supersolvable"] = ss.supersolvable;
  j["ideal_flag"] = flag_json(ss.ideal_flag);
  j["restricted_ideal_flag"] = flag_json(ss.restricted_ideal_flag);
  const auto aa = is_almost_abelian(L, budget);
  j["almost_abelian"] = aa.holds;
  if (aa.holds) j["almost_abelian_b"] = vector_to_json(f, aa.b);
  j["one_dim_generated"] = subspace_to_json(one_dim_generated(L, budget));
  return j;
}

ordered_json lattice_report(const SubalgebraLattice& lat) {
  ordered_json j;
  j["mode"] = to_string(lat.mode());
  j["node_count"] = lat.size();
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& fl = lat.flags(i);
    ordered_json n;
    n["index"] = i;
    n["dim"] = lat.node(i).dim();
    n["basis"] = subspace_to_json(lat.node(i));
    n["ideal"] = fl.ideal;
    n["restricted_ideal"] = fl.restricted_ideal;
    n["maximal"] = fl.maximal;
    n["atom"] = fl.atom;
    n["upper_covers"] = lat.upper_covers(i);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = nodes;
  ordered_json pred;
  pred["upper_semimodular"] = predicate_to_json(is_upper_semimodular(lat));
  pred["lower_semimodular"] = predicate_to_json(is_lower_semimodular(lat));
  pred["modular"] = predicate_to_json(is_modular(lat));
  pred["dually_atomistic"] = predicate_to_json(is_dually_atomistic(lat));
  pred["atomistic"] = predicate_to_json(is_atomistic(lat));
  pred["all_quasi_ideal"] = predicate_to_json(quasi_ideal_scan(lat));
  const auto jr = j_algebra(lat);
  ordered_json jj;
  jj["holds"] = jr.is_j;
  jj["d"] = jr.d ? ordered_json(*jr.d) : ordered_json(nullptr);
  jj["witness"] = jr.is_j ? ordered_json(nullptr) : ordered_json{{"bottom", jr.witness[0]}, {"V", jr.witness[1]}};
  jj["shortest"] = jr.shortest;
  jj["longest"] = jr.longest;
  pred["jordan_dedekind"] = jj;
  j["predicates"] = pred;
  return j;
}

}  // namespace rla
