// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "rla/families.hpp"
#include "rla/harness.hpp"
#include "rla/io.hpp"
#include "rla/lattice.hpp"
#include "rla/structure.hpp"
#include "support.hpp"

using namespace rla;
using namespace rla::testing;
using nlohmann::ordered_json;

namespace {

// Largest algebra (in elements) for the exhaustive Jordan-Chevalley check.
constexpr std::size_t kJcMaxElements = 625;
// Random elements per fixture for the p-power / ad check.
constexpr std::size_t kJacobsonSamples = 1000;
constexpr std::uint64_t kJacobsonSeed = 0x5eed;
constexpr std::size_t kSkewMaxDegree = 3;

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
struct Check {
  Result r;
  std::size_t failures = 0;
  void fail(const std::string& what) {
    r.pass = false;
    if (failures++ < 3) r.detail += (r.detail.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Result done(const std::string& summary) {
    if (r.pass) r.detail = summary;
    else if (failures > 3) r.detail += "; +" + std::to_string(failures - 3) + " more";
    return r;
  }
};

std::vector<Vector> elements_of(const FiniteField& F, const Subspace& S) {
  const auto basis = S.basis();
  const std::size_t q = F.order();
  std::size_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) count *= q;
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    Vector v(S.ambient_dim(), 0);
    std::size_t c = code;
    for (const auto& b : basis) {
      axpy(F, v, static_cast<Scalar>(c % q), b);
      c /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> all_elements(const RestrictedLieAlgebra& L) { return elements_of(L.field(), L.whole()); }

// x lies in the restricted subalgebra generated by x^[p].
bool semisimple_by_definition(const RestrictedLieAlgebra& L, const Vector& x) {
  const std::vector<Vector> g{L.p_power(x)};
  return restricted_closure(L, g).contains(x);
}

bool p_nilpotent_by_definition(const RestrictedLieAlgebra& L, Vector x) {
  for (std::size_t i = 0; i <= L.dim(); ++i) {
    if (is_zero(x)) return true;
    x = L.p_power(x);
  }
  return is_zero(x);
}

Result usmn_example() {
  Check c;
  for (std::uint32_t p : {2u, 3u}) {
    const auto F = FiniteField::make(p);
    const auto L = usmn(F);
    const auto lat = SubalgebraLattice::enumerate(L, LatticeMode::restricted);
    const auto usm = is_upper_semimodular(lat);
    const std::vector<Vector> gx{L.basis(0)};
    const auto xp = lat.index_of(restricted_closure(L, gx));
    const auto fy = lat.index_of(Subspace::span(F, 4, std::vector<Vector>{L.basis(2)}));
    const std::string tag = "GF(" + std::to_string(p) + ")";
    c.expect(!usm.holds, tag + ": upper semimodular");
    c.expect(xp && fy && usm.witness == std::vector<std::size_t>{*xp, *fy}, tag + ": witness is not (<x>_p, Fy)");
    // The same verdict and witness through the lattice report.
    const auto rep = lattice_report(lat)["predicates"]["upper_semimodular"];
    c.expect(rep["holds"] == false && xp && fy && rep["witness"]["S"] == *xp && rep["witness"]["T"] == *fy,
             tag + ": lattice report disagrees");
    const auto odg = one_dim_generated(L);
    const auto expected = Subspace::span(F, 4, std::vector<Vector>{L.basis(1), L.basis(2), L.basis(3)});
    c.expect(odg == expected, tag + ": one_dim_generated is not span{xp, y, z}");
    bool abelian = true;
    for (const auto& a : odg.basis())
      for (const auto& b : odg.basis()) abelian = abelian && is_zero(L.bracket(a, b));
    c.expect(abelian, tag + ": one_dim_generated not abelian");
  }
  return c.done("GF(2), GF(3): USM fails at (<x>_p, Fy); one_dim_generated = span{xp, y, z}, abelian");
}

Result corpus_theorem(const ordered_json& report, const std::string& id, const std::string& what) {
  Check c;
  const auto& t = report["theorems"][id];
  const std::size_t applicable = t["applicable"];
  const std::size_t antecedent = t["antecedent_true"];
  const std::size_t failures = t["failures"];
  c.expect(failures == 0, std::to_string(failures) + " failures");
  c.expect(applicable > 0, "no applicable instances");
  c.expect(report["skipped"].empty(), std::to_string(report["skipped"].size()) + " skipped checks");
  std::ostringstream s;
  s << what << ": " << applicable << " applicable, " << antecedent << " with hypothesis true, 0 failures";
  return c.done(s.str());
}

Result nilpotent_split(const ordered_json& report) {
  Check c;
  const auto& t = report["theorems"]["T5"];
  c.expect(t["failures"] == 0, "aggregate T5 failures");
  // Per-field recount over the nilpotent corpus instances.
  std::map<std::string, std::size_t> per_field;
  std::size_t all_quasi = 0;
  for (const auto& inst : corpus_instances(default_corpus_config())) {
    const auto& F = inst.algebra.field();
    if (F.characteristic() == 2 || !solvability(inst.algebra).nilpotent) continue;
    const auto o = check_instance(inst.algebra, "T5");
    if (!o.applicable) {
      c.fail(inst.key + " not applicable");
      continue;
    }
    ++per_field["GF(" + std::to_string(F.order()) + ")"];
    all_quasi += o.antecedent.value_or(false);
    c.expect(o.holds == true, inst.key);
  }
  for (const char* f : {"GF(3)", "GF(5)", "GF(9)"}) c.expect(per_field[f] > 0, std::string("no instances over ") + f);
  std::ostringstream s;
  s << "GF(3) " << per_field["GF(3)"] << ", GF(5) " << per_field["GF(5)"] << ", GF(9) " << per_field["GF(9)"]
    << " nilpotent instances (" << all_quasi << " all-quasi-ideal), equivalence exact";
  return c.done(s.str());
}

Result core_lemma() {
  Check c;
  std::size_t nodes = 0;
  for (const auto& fx : small_fixtures()) {
    const auto lat = SubalgebraLattice::enumerate(fx.algebra, LatticeMode::restricted);
    for (const auto& S : lat.nodes()) {
      ++nodes;
      const auto K = core(fx.algebra, S);
      const auto f = classify_subspace(fx.algebra, K);
      c.expect(f.restricted_ideal && S.contains(K), fx.name);
    }
  }
  return c.done(std::to_string(nodes) + " restricted subalgebras across fixtures; every core is a restricted ideal");
}

Result sl2_gf5() {
  Check c;
  const auto F = FiniteField::make(5);
  const auto L = sl2(F);
  const auto a = SubalgebraLattice::enumerate(L, LatticeMode::restricted);
  const auto b = SubalgebraLattice::enumerate(L, LatticeMode::restricted);
  std::size_t lines = 0;
  for (const auto& v : all_elements(L)) {
    if (is_zero(v)) continue;
    const auto line = Subspace::span(F, 3, std::vector<Vector>{v});
    ++lines;
    c.expect(a.index_of(line).has_value(), "a line is not a restricted subalgebra");
  }
  c.expect(lines == 31 * 4, "expected 124 nonzero vectors");
  const auto ja = j_algebra(a), jb = j_algebra(b);
  c.expect(ja.is_j == jb.is_j && ja.d == jb.d && ja.witness == jb.witness && ja.shortest == jb.shortest &&
               ja.longest == jb.longest,
           "J verdict differs between runs");
  std::size_t one_dim_maximal = 0;
  for (auto m : a.maximal_nodes())
    if (a.node(m).dim() == 1) {
      ++one_dim_maximal;
      c.expect(is_torus(L, a.node(m)), "1-dim maximal node is not a torus");
    }
  c.expect(one_dim_maximal > 0, "no 1-dim maximal node");
  c.expect(!ja.is_j, "lattice reported graded");
  std::ostringstream s;
  s << a.size() << " nodes, all 31 lines restricted; " << one_dim_maximal
    << " one-dimensional maximal tori; J = false (chain lengths " << ja.shortest << ".." << ja.longest
    << "), stable across runs";
  return c.done(s.str());
}

Result jordan_chevalley_unique() {
  Check c;
  std::size_t fixtures = 0, elements = 0;
  for (const auto& fx : small_fixtures()) {
    const auto& L = fx.algebra;
    const auto all = all_elements(L);
    if (all.size() > kJcMaxElements) continue;
    ++fixtures;
    const auto& F = L.field();
    for (const auto& x : all) {
      ++elements;
      const auto jc = jordan_chevalley(L, x);
      const auto gen = restricted_closure(L, std::vector<Vector>{x});
      auto clauses = [&](const Vector& s, const Vector& n) {
        return added(F, s, n) == x && is_zero(L.bracket(s, n)) && semisimple_by_definition(L, s) &&
               p_nilpotent_by_definition(L, n) && gen.contains(s) && gen.contains(n);
      };
      c.expect(clauses(jc.semisimple, jc.nilpotent), fx.name + ": returned pair fails a clause");
      std::size_t found = 0;
      for (const auto& s : elements_of(F, gen)) {
        const auto n = subtracted(F, x, s);
        if (clauses(s, n)) {
          ++found;
          c.expect(s == jc.semisimple, fx.name + ": another pair satisfies every clause");
        }
      }
      c.expect(found == 1, fx.name + ": " + std::to_string(found) + " pairs satisfy every clause");
    }
  }
  return c.done(std::to_string(elements) + " elements over " + std::to_string(fixtures) +
                " fixtures; each decomposition valid and unique in <x>_p");
}

Result jacobson_oracle() {
  Check c;
  std::mt19937_64 rng(kJacobsonSeed);
  std::size_t fixtures = 0;
  for (const auto& fx : small_fixtures()) {
    const auto& L = fx.algebra;
    if (L.dim() == 0) continue;
    ++fixtures;
    const auto& F = L.field();
    for (std::size_t i = 0; i < kJacobsonSamples; ++i) {
      const auto x = random_vector(rng, F, L.dim());
      const auto adx = L.ad_matrix(x);
      Matrix pw = Matrix::identity(L.dim());
      for (std::uint32_t e = 0; e < F.characteristic(); ++e) pw = multiply(F, pw, adx);
      c.expect(L.ad_matrix(L.p_power(x)) == pw, fx.name);
    }
  }
  return c.done(std::to_string(kJacobsonSamples) + " samples on each of " + std::to_string(fixtures) +
                " fixtures: ad(x^[p]) = ad(x)^p");
}

Result skew_cyclic() {
  Check c;
  std::size_t polys = 0, irreducible = 0;
  for (const auto& F : {FiniteField::make(2), FiniteField::make(3), FiniteField::make(2, 2)}) {
    for (std::size_t d = 1; d <= kSkewMaxDegree; ++d)
      for (const auto& f : monic_skew_polynomials(F, d)) {
        ++polys;
        const auto L = cyclic_from(f);
        const std::size_t nodes = ElementSpace(L).subalgebras(true).size();
        const std::size_t lattice_nodes = SubalgebraLattice::enumerate(L, LatticeMode::restricted).size();
        const bool simple = nodes == 2;
        const bool irr = sp_irreducible(f);
        irreducible += irr;
        c.expect(lattice_nodes == nodes, "lattice node count differs from brute force");
        c.expect(irr == simple, "irreducibility disagrees with the subalgebra count");
      }
  }
  std::ostringstream s;
  s << polys << " monic polynomials of degree 1..3 over GF(2), GF(3), GF(4); " << irreducible
    << " irreducible, each exactly when cyclic_from has no proper nonzero restricted subalgebra";
  return c.done(s.str());
}

Result validation_rejection() {
  Check c;
  const auto F = FiniteField::make(5);
  auto j = algebra_to_json(sl2(F));
  j["pmap"][1] = ordered_json::array({1, 0, 0});
  const auto L = algebra_from_json(j);
  const auto r = validate(L);
  bool pmap_compat = false;
  for (const auto& v : r.violations) pmap_compat = pmap_compat || v.axiom == Axiom::pmap_compat;
  c.expect(!r.ok && pmap_compat, "validate accepted the mutation or found no pmap_compat violation");
  TempDir dir;
  const auto path = dir.file("broken.json");
  {
    std::ofstream out(path);
    out << j.dump(2);
  }
  const auto cli = run_cli("validate '" + path + "'", dir);
  c.expect(cli.code == 1, "CLI exit code " + std::to_string(cli.code));
  c.expect(cli.out.find("pmap_compat") != std::string::npos, "CLI report lacks pmap_compat");
  return c.done("h^[p] = e rejected with pmap_compat; CLI exit 1");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, Result>> results;
  auto run = [&](const std::string& name, const std::function<Result()>& f) {
    Result r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << std::endl;
    results.emplace_back(name, r);
  };

  // Two full corpus runs through the CLI; the first also feeds the theorem
  // criteria.
  TempDir dir;
  const auto first = run_cli("corpus", dir);
  const auto second = run_cli("corpus", dir);
  ordered_json report;
  const bool corpus_ok = first.code == 0 && second.code == 0;
  try {
    report = ordered_json::parse(first.out);
  } catch (const std::exception&) {
  }
  auto corpus_criterion = [&](const std::function<Result()>& f) {
    return [&, f] {
      if (!corpus_ok || report.is_null())
        return Result{false, "corpus run exited " + std::to_string(first.code) + "/" + std::to_string(second.code)};
      return f();
    };
  };

  run("1 semimodularity counterexample", usmn_example);
  run("2 all-quasi-ideal => modular => USM and LSM",
      corpus_criterion([&] { return corpus_theorem(report, "T1", std::to_string(report["instance_count"].get<std::size_t>()) + " instances"); }));
  run("3 nilpotent: all-quasi-ideal <=> split", corpus_criterion([&] { return nilpotent_split(report); }));
  run("4 L^2 in L^[p], class <= 2", corpus_criterion([&] { return corpus_theorem(report, "T2", "all-quasi-ideal instances"); }));
  run("5 dually atomistic nilradical", corpus_criterion([&] { return corpus_theorem(report, "T3", "dually atomistic instances"); }));
  run("6 cores are restricted ideals", core_lemma);
  run("7 sl2 over GF(5)", sl2_gf5);
  run("8 Jordan-Chevalley uniqueness", jordan_chevalley_unique);
  run("9 Jacobson folding", jacobson_oracle);
  run("10 skew polynomials and cyclic algebras", skew_cyclic);
  run("11 validation rejection", validation_rejection);
  run("12 corpus determinism", [&] {
    Check c;
    c.expect(corpus_ok, "corpus exit codes " + std::to_string(first.code) + "/" + std::to_string(second.code));
    c.expect(!first.out.empty() && first.out == second.out, "reports differ");
    return c.done(std::to_string(first.out.size()) + "-byte reports identical");
  });

  std::size_t passed = 0;
  for (const auto& [name, r] : results) passed += r.pass;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << passed << "/" << results.size() << " criteria passed in " << static_cast<int>(secs) << "s" << std::endl;
  return passed == results.size() ? 0 : 1;
}
