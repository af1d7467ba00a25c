#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "rla/algebra.hpp"
#include "rla/lattice.hpp"

namespace rla {

inline constexpr int kSchemaVersion = 1;

/// Field elements are bare integers over a prime field and residue arrays
/// (constant term first) otherwise.
nlohmann::ordered_json scalar_to_json(const FiniteField& f, Scalar s);
Scalar scalar_from_json(const FiniteField& f, const nlohmann::ordered_json& j, const std::string& where);
nlohmann::ordered_json vector_to_json(const FiniteField& f, std::span<const Scalar> v);
/// Canonical basis rows.
nlohmann::ordered_json subspace_to_json(const Subspace& s);

/// {"field": {"p", "k", "modulus"}, "dim", "names", "brackets": [[i, j, k, c]],
/// "pmap": rows}. Throws ParseError on malformed input.
RestrictedLieAlgebra algebra_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json algebra_to_json(const RestrictedLieAlgebra& L);

RestrictedLieAlgebra parse_algebra(const std::string& text);
std::string serialize_algebra(const RestrictedLieAlgebra& L);

RestrictedLieAlgebra load_algebra(const std::string& path);
void save_algebra(const RestrictedLieAlgebra& L, const std::string& path);

nlohmann::ordered_json validation_to_json(const ValidationReport& r);
nlohmann::ordered_json predicate_to_json(const PredicateReport& r);

/// Structure section of the analysis report.
nlohmann::ordered_json structure_report(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);
/// Node list, covers, flags, predicate table and witnesses.
nlohmann::ordered_json lattice_report(const SubalgebraLattice& lat);

}  // namespace rla
