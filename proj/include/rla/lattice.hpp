#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/subspace.hpp"

namespace rla {

enum class LatticeMode { restricted, ordinary };
const char* to_string(LatticeMode mode) noexcept;

struct NodeFlags {
  bool ideal = false;
  bool restricted_ideal = false;
  bool maximal = false;
  bool atom = false;
};

/// The restricted (or ordinary) subalgebras of an algebra, in canonical
/// subspace order, with their covering relation. Node 0 is the zero
/// subalgebra and the last node is the whole algebra.
class SubalgebraLattice {
 public:
  static SubalgebraLattice enumerate(const RestrictedLieAlgebra& L, LatticeMode mode,
                                     std::uint64_t budget = kDefaultBudget);

  const RestrictedLieAlgebra& algebra() const noexcept { return algebra_; }
  LatticeMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Subspace>& nodes() const noexcept { return nodes_; }
  const Subspace& node(std::size_t i) const { return nodes_.at(i); }
  std::optional<std::size_t> index_of(const Subspace& s) const;
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return nodes_.size() - 1; }

  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_.at(i); }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_.at(i); }
  /// a is covered by b.
  bool covers(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  /// Node generated by node a together with the vector v.
  std::size_t join_point(std::size_t a, std::span<const Scalar> v) const;
  /// As join_point, using w as scratch space.
  std::size_t join_point_in_place(std::size_t a, std::span<Scalar> w) const;
  /// The smallest node containing s.
  std::size_t closure_of(const Subspace& s) const;

  const NodeFlags& flags(std::size_t i) const { return flags_.at(i); }
  std::vector<std::size_t> maximal_nodes() const;
  std::vector<std::size_t> atoms() const;

 private:
  SubalgebraLattice(RestrictedLieAlgebra L, LatticeMode mode);
  void build_covers();
  std::size_t point_slot(std::size_t a, std::span<const Scalar> v) const;

  RestrictedLieAlgebra algebra_;
  LatticeMode mode_;
  std::vector<Subspace> nodes_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
  std::vector<std::vector<std::size_t>> free_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<NodeFlags> flags_;
  // point_join_[a][slot] = node generated by a and the projective point of
  // L / node(a) with that slot number.
  std::vector<std::vector<std::uint32_t>> point_join_;
};

/// All closed subspaces found by adjoining one vector at a time, starting from
/// zero. Independent of the subspace filter used by enumerate(); returned in
/// canonical order.
std::vector<Subspace> enumerate_bottom_up(const RestrictedLieAlgebra& L, LatticeMode mode,
                                          std::uint64_t budget = kDefaultBudget);

/// Ideals of L (restricted ideals when `restricted`), in canonical order.
std::vector<Subspace> enumerate_ideals(const RestrictedLieAlgebra& L, bool restricted,
                                       std::uint64_t budget = kDefaultBudget);

/// Verdict of a lattice predicate. On failure `witness` holds canonical node
/// indices whose meaning is given by `roles`.
struct PredicateReport {
  std::string predicate;
  bool holds = true;
  std::vector<std::string> roles;
  std::vector<std::size_t> witness;
};

PredicateReport is_upper_semimodular(const SubalgebraLattice& lat);
PredicateReport is_lower_semimodular(const SubalgebraLattice& lat);
PredicateReport is_modular(const SubalgebraLattice& lat);
PredicateReport is_dually_atomistic(const SubalgebraLattice& lat);
PredicateReport is_atomistic(const SubalgebraLattice& lat);

struct JReport {
  bool is_j = true;
  std::optional<std::size_t> d;
  /// (bottom, V): V has maximal chains from 0 of different lengths.
  std::vector<std::size_t> witness;
  std::size_t shortest = 0;
  std::size_t longest = 0;
};
JReport j_algebra(const SubalgebraLattice& lat);

/// [S, H] within S + H for every pair of nodes. Witness roles (S, H).
PredicateReport quasi_ideal_scan(const SubalgebraLattice& lat);

/// Hasse diagram; node labels carry index, dimension and flags.
std::string to_dot(const SubalgebraLattice& lat);

}  // namespace rla
