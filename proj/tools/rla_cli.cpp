// Command-line front end: validate, analyze, lattice, verify, corpus, gen, jc.
//
// Exit codes: 0 ok, 1 parse or validation error, 2 assert-mode theorem
// failure, 3 enumeration budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rla/error.hpp"
#include "rla/families.hpp"
#include "rla/harness.hpp"
#include "rla/io.hpp"
#include "rla/lattice.hpp"
#include "rla/structure.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAssert = 2;
constexpr int kExitResource = 3;

struct Globals {
  std::string format = "json";
  std::optional<std::uint64_t> budget;
};

std::uint64_t env_budget() {
  const char* v = std::getenv("RLA_BUDGET");
  if (v == nullptr || *v == '\0') return rla::kDefaultBudget;
  try {
    std::size_t used = 0;
    const auto b = std::stoull(v, &used);
    if (used != std::string(v).size() || b == 0) throw std::invalid_argument(v);
    return b;
  } catch (const std::exception&) {
    throw rla::Error(rla::ErrorKind::BadParameters, std::string("RLA_BUDGET must be a positive integer, got '") + v + "'");
  }
}

std::uint64_t budget_of(const Globals& g) { return g.budget ? *g.budget : env_budget(); }

ordered_json header(const std::string& kind) {
  ordered_json j;
  j["schema_version"] = rla::kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void flatten(const ordered_json& j, const std::string& prefix, std::ostream& out) {
  auto scalar_array = [](const ordered_json& a) {
    for (const auto& e : a)
      if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const auto& x) {
                                   return x.is_primitive();
                                 })))
        return false;
    return true;
  };
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !scalar_array(j)) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Globals& g, const ordered_json& j) {
  if (g.format == "text")
    flatten(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

// "1,0,2" or a JSON array; residue arrays are needed for entries outside the
// prime field.
rla::Vector parse_coords(const rla::FiniteField& f, const std::string& text, const std::string& what) {
  ordered_json j;
  const auto first = text.find_first_not_of(" \t");
  try {
    j = ordered_json::parse(first != std::string::npos && text[first] == '[' ? text : "[" + text + "]");
  } catch (const ordered_json::parse_error&) {
    throw rla::Error(rla::ErrorKind::ParseError, what + ": cannot read '" + text + "'");
  }
  if (!j.is_array()) throw rla::Error(rla::ErrorKind::ParseError, what + ": expected a list");
  rla::Vector v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rla::scalar_from_json(f, j[i], what + "[" + std::to_string(i) + "]"));
  return v;
}

// Loads and validates; prints the validation report and returns nullopt when
// the table is not a restricted Lie algebra.
std::optional<rla::RestrictedLieAlgebra> load_valid(const Globals& g, const std::string& path) {
  auto L = rla::load_algebra(path);
  const auto r = rla::validate(L);
  if (!r.ok) {
    auto j = header("validation");
    j["file"] = path;
    j["validation"] = rla::validation_to_json(r);
    emit(g, j);
    return std::nullopt;
  }
  return L;
}

int cmd_validate(const Globals& g, const std::string& path) {
  const auto L = rla::load_algebra(path);
  const auto r = rla::validate(L);
  auto j = header("validation");
  j["file"] = path;
  j["validation"] = rla::validation_to_json(r);
  emit(g, j);
  return r.ok ? kExitOk : kExitInput;
}

int cmd_analyze(const Globals& g, const std::string& path) {
  const auto L = load_valid(g, path);
  if (!L) return kExitInput;
  auto j = header("analysis");
  j["file"] = path;
  j["algebra"] = rla::algebra_to_json(*L);
  j["structure"] = rla::structure_report(*L, budget_of(g));
  emit(g, j);
  return kExitOk;
}

int cmd_lattice(const Globals& g, const std::string& path, const std::string& mode, const std::string& dot) {
  const auto L = load_valid(g, path);
  if (!L) return kExitInput;
  const auto m = mode == "ordinary" ? rla::LatticeMode::ordinary : rla::LatticeMode::restricted;
  const auto lat = rla::SubalgebraLattice::enumerate(*L, m, budget_of(g));
  if (!dot.empty()) {
    std::ofstream out(dot, std::ios::binary);
    if (!out) throw rla::Error(rla::ErrorKind::BadParameters, "cannot write " + dot);
    out << rla::to_dot(lat);
  }
  auto j = header("lattice");
  j["file"] = path;
  const auto report = rla::lattice_report(lat);
  for (const auto& [k, v] : report.items()) j[k] = v;
  emit(g, j);
  return kExitOk;
}

std::vector<std::string> theorem_ids(const std::string& list) {
  std::vector<std::string> ids;
  if (list.empty() || list == "all") {
    for (const auto& t : rla::theorem_catalog()) ids.push_back(t.id);
    return ids;
  }
  std::stringstream ss(list);
  for (std::string id; std::getline(ss, id, ',');) {
    if (id.empty()) continue;
    rla::theorem_record(id);
    ids.push_back(id);
  }
  return ids;
}

int cmd_verify(const Globals& g, const std::string& path, const std::string& list) {
  const auto ids = theorem_ids(list);
  const auto L = load_valid(g, path);
  if (!L) return kExitInput;
  rla::Instance inst(*L, budget_of(g));
  std::size_t failures = 0;
  ordered_json outcomes = ordered_json::array();
  for (const auto& o : inst.check_all(ids)) {
    if (o.mode == rla::TheoremMode::assert_mode && o.holds == false) ++failures;
    outcomes.push_back(rla::to_json(o));
  }
  auto j = header("verification");
  j["file"] = path;
  j["outcomes"] = outcomes;
  j["assert_failures"] = failures;
  emit(g, j);
  return failures == 0 ? kExitOk : kExitAssert;
}

int cmd_corpus(const Globals& g, const std::string& config_path) {
  rla::CorpusConfig config = rla::default_corpus_config();
  bool budget_in_file = false;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw rla::Error(rla::ErrorKind::ParseError, "cannot read " + config_path);
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
      throw rla::Error(rla::ErrorKind::ParseError, config_path + ": " + e.what());
    }
    config = rla::corpus_config_from_json(j);
    budget_in_file = j.is_object() && j.contains("budget");
  }
  if (g.budget || !budget_in_file) config.budget = budget_of(g);
  const auto report = rla::run_corpus(config);
  emit(g, report.json);
  return report.assert_failures == 0 ? kExitOk : kExitAssert;
}

struct GenArgs {
  std::string family;
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::size_t n = 1;
  std::size_t m = 1;
  std::string pmap = "zero";
  std::vector<std::string> polys;
  bool x_to_z = false;
  bool y_to_z = false;
  bool z_to_z = false;
  std::string out;
};

int cmd_gen(const Globals& g, const GenArgs& a) {
  rla::FamilySpec spec;
  spec.family = a.family;
  spec.p = a.p;
  spec.k = a.k;
  spec.n = a.n;
  spec.m = a.m;
  spec.pmap = a.pmap == "toral" ? rla::AbelianPmap::toral : rla::AbelianPmap::zero;
  const auto F = rla::FiniteField::make(a.p, a.k);
  for (std::size_t i = 0; i < a.polys.size(); ++i)
    spec.polys.push_back(parse_coords(F, a.polys[i], "poly[" + std::to_string(i) + "]"));
  spec.x_to_z = a.x_to_z;
  spec.y_to_z = a.y_to_z;
  spec.z_to_z = a.z_to_z;
  const auto L = rla::generate(spec);
  if (a.out.empty() || a.out == "-") {
    std::cout << rla::serialize_algebra(L);
    return kExitOk;
  }
  rla::save_algebra(L, a.out);
  auto j = header("generated");
  j["family"] = a.family;
  j["file"] = a.out;
  j["dim"] = L.dim();
  emit(g, j);
  return kExitOk;
}

ordered_json class_json(const rla::RestrictedLieAlgebra& L, const rla::Vector& x) {
  const auto c = rla::element_class(L, x);
  return {{"semisimple", c.semisimple}, {"p_nilpotent", c.p_nilpotent}, {"toral", c.toral}, {"order", c.order}};
}

int cmd_jc(const Globals& g, const std::string& path, const std::string& coords) {
  const auto L = load_valid(g, path);
  if (!L) return kExitInput;
  const auto& F = L->field();
  const auto x = parse_coords(F, coords, "element");
  if (x.size() != L->dim())
    throw rla::Error(rla::ErrorKind::ParseError, "element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                                                     std::to_string(L->dim()));
  const auto jc = rla::jordan_chevalley(*L, x);
  auto j = header("jordan_chevalley");
  j["file"] = path;
  j["element"] = rla::vector_to_json(F, x);
  j["class"] = class_json(*L, x);
  j["semisimple_part"] = rla::vector_to_json(F, jc.semisimple);
  j["nilpotent_part"] = rla::vector_to_json(F, jc.nilpotent);
  emit(g, j);
  return kExitOk;
}

int exit_code_for(rla::ErrorKind k) {
  return k == rla::ErrorKind::ResourceLimit ? kExitResource : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Lie algebras over finite fields: subalgebra lattices and structure"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t budget = 0;
  auto* fmt = app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  auto* bud = app.add_option("--budget", budget, "Enumeration budget (default: RLA_BUDGET or 10^6)")
                  ->check(CLI::PositiveNumber);
  (void)fmt;

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check the Lie and restricted axioms");
  validate->add_option("file", file, "Algebra JSON")->required();

  auto* analyze = app.add_subcommand("analyze", "Structure report");
  analyze->add_option("file", file, "Algebra JSON")->required();

  std::string mode = "restricted";
  std::string dot;
  auto* lattice = app.add_subcommand("lattice", "Subalgebra lattice and predicates");
  lattice->add_option("file", file, "Algebra JSON")->required();
  lattice->add_option("--mode", mode, "restricted or ordinary")->check(CLI::IsMember({"restricted", "ordinary"}));
  lattice->add_option("--dot", dot, "Write the Hasse diagram here");
  auto* lbud = lattice->add_option("--budget", budget, "Enumeration budget")->check(CLI::PositiveNumber);

  std::string theorems = "all";
  auto* verify = app.add_subcommand("verify", "Check catalog theorems on one algebra");
  verify->add_option("file", file, "Algebra JSON")->required();
  verify->add_option("--theorems", theorems, "Comma-separated ids or 'all'");

  std::string config;
  auto* corpus = app.add_subcommand("corpus", "Run the theorem harness over a generated corpus");
  corpus->add_option("--config", config, "Corpus configuration JSON");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a family member as algebra JSON");
  gen->add_option("family", gen_args.family, "Family name")->required()->check(CLI::IsMember(rla::family_names()));
  gen->add_option("--p", gen_args.p, "Characteristic");
  gen->add_option("--k", gen_args.k, "Extension degree");
  gen->add_option("--n", gen_args.n, "Dimension parameter");
  gen->add_option("--m", gen_args.m, "Central block count (prop_solvable)");
  gen->add_option("--pmap", gen_args.pmap, "Abelian p-map")->check(CLI::IsMember({"zero", "toral"}));
  gen->add_option("--poly", gen_args.polys, "Skew polynomial coefficients, constant term first (repeatable)")
      ->allow_extra_args(false);
  gen->add_flag("--x-to-z", gen_args.x_to_z, "Heisenberg x^[p] = z");
  gen->add_flag("--y-to-z", gen_args.y_to_z, "Heisenberg y^[p] = z");
  gen->add_flag("--z-to-z", gen_args.z_to_z, "Heisenberg z^[p] = z");
  gen->add_option("-o,--output", gen_args.out, "Output path ('-' for stdout)");

  std::string element;
  auto* jc = app.add_subcommand("jc", "Jordan-Chevalley decomposition of an element");
  jc->add_option("file", file, "Algebra JSON")->required();
  jc->add_option("--element", element, "Coordinates, e.g. 1,0,2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  if (bud->count() > 0 || lbud->count() > 0) g.budget = budget;

  try {
    if (validate->parsed()) return cmd_validate(g, file);
    if (analyze->parsed()) return cmd_analyze(g, file);
    if (lattice->parsed()) return cmd_lattice(g, file, mode, dot);
    if (verify->parsed()) return cmd_verify(g, file, theorems);
    if (corpus->parsed()) return cmd_corpus(g, config);
    if (gen->parsed()) return cmd_gen(g, gen_args);
    if (jc->parsed()) return cmd_jc(g, file, element);
  } catch (const rla::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
