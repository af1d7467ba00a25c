#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rla/algebra.hpp"
#include "rla/lattice.hpp"
#include "rla/structure.hpp"

namespace rla {

enum class FieldHypothesis { any, perfect, alg_closed };
enum class TheoremMode { assert_mode, observe };
const char* to_string(FieldHypothesis h) noexcept;
const char* to_string(TheoremMode m) noexcept;

struct TheoremRecord {
  std::string id;
  std::string name;
  FieldHypothesis field = FieldHypothesis::any;
  std::string char_constraint;
  std::string structural;
  TheoremMode mode = TheoremMode::assert_mode;
  std::string statement;
};

/// T1..T15 in order.
const std::vector<TheoremRecord>& theorem_catalog();
/// Throws BadParameters for an unknown id.
const TheoremRecord& theorem_record(const std::string& id);

struct Outcome {
  std::string theorem;
  TheoremMode mode = TheoremMode::assert_mode;
  bool applicable = true;
  /// Whether the hypothesis of the implication held; empty for statements
  /// without one.
  std::optional<bool> antecedent;
  /// Empty when not applicable.
  std::optional<bool> holds;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  /// Side observations that never decide `holds`.
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Outcome& o);

/// Caches the lattices and reports shared by the catalog checks on a single
/// algebra. Any computation may throw ResourceLimit.
class Instance {
 public:
  explicit Instance(RestrictedLieAlgebra L, std::uint64_t budget = kDefaultBudget);
  ~Instance();
  Instance(Instance&&) noexcept;

  const RestrictedLieAlgebra& algebra() const noexcept;
  Outcome check(const std::string& theorem_id);
  std::vector<Outcome> check_all(const std::vector<std::string>& ids);

  const SubalgebraLattice& restricted_lattice();
  const SubalgebraLattice& ordinary_lattice();

 private:
  struct State;
  std::unique_ptr<State> s_;
};

Outcome check_instance(const RestrictedLieAlgebra& L, const std::string& theorem_id,
                       std::uint64_t budget = kDefaultBudget);

struct FormMatch {
  bool holds = false;
  /// Failing clause, or "abelian" / "form" on success.
  std::string reason;
  std::optional<Vector> b;
  std::optional<Subspace> nilradical;
};

/// Whether a solvable L is abelian or N(L) ⊕ Fb with N(L) abelian, b toral,
/// ad(b) idempotent and nonzero on N(L), Z(L) ∩ [b, N(L)] = 0, the p-map zero
/// on [b, N(L)], and Z(L) the sum of its minimal restricted ideals. Throws
/// NotSolvable.
FormMatch matches_solvable_da_form(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

/// L = Fx + A with A an abelian ideal and ad(x) the identity on A, ignoring
/// the p-map.
bool is_almost_abelian_lie(const RestrictedLieAlgebra& L);

struct FieldChoice {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
};

struct CorpusConfig {
  std::vector<std::string> families;
  std::vector<FieldChoice> fields;
  std::size_t max_dim = 0;
  /// Extra fields used only for the nilpotent families.
  std::vector<FieldChoice> nilpotent_fields;
  std::size_t nilpotent_max_dim = 0;
  /// Largest skew polynomial degree for cyclic and for prop_solvable blocks.
  std::size_t max_poly_degree = 3;
  /// prop_solvable instances are kept only when their ambient space has at
  /// most this many subspaces.
  std::uint64_t prop_solvable_max_subspaces = 5000;
  /// Every structure-constant table of dimension 2 over GF(2) and GF(3).
  bool sweep_dim2 = false;
  /// Dimension 3 tables with all constants in {0, 1} over GF(2) and GF(3).
  bool sweep_dim3 = false;
  std::vector<std::string> theorems;
  std::uint64_t budget = kDefaultBudget;
  /// Failure and discrepancy listings are truncated to this many entries per
  /// theorem; counts are always complete.
  std::size_t max_listed = 10;
};

CorpusConfig default_corpus_config();
CorpusConfig corpus_config_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const CorpusConfig& c);

struct CorpusInstance {
  std::string key;
  RestrictedLieAlgebra algebra;
};

/// Deterministic instance list for a configuration.
std::vector<CorpusInstance> corpus_instances(const CorpusConfig& config);

struct AggregateReport {
  nlohmann::ordered_json json;
  std::size_t instances = 0;
  std::size_t assert_failures = 0;
};

AggregateReport run_corpus(const CorpusConfig& config);

}  // namespace rla
