#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/lattice.hpp"

namespace rla {

enum class SeriesKind { derived, lower_central, upper_central };
const char* to_string(SeriesKind kind) noexcept;

/// Terms are listed until the next one would repeat the last.
struct SeriesResult {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = true;
};

SeriesResult series(const RestrictedLieAlgebra& L, SeriesKind kind);

struct Solvability {
  bool solvable = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> derived_length;
};

Solvability solvability(const RestrictedLieAlgebra& L);

/// [L, L].
Subspace derived_algebra(const RestrictedLieAlgebra& L);
bool is_perfect(const RestrictedLieAlgebra& L);

/// {x in within : [x, S] = 0}; `within` defaults to L.
Subspace centralizer(const RestrictedLieAlgebra& L, const Subspace& S,
                     const std::optional<Subspace>& within = std::nullopt);
Subspace center(const RestrictedLieAlgebra& L);

/// Largest ideal of L inside the subalgebra S.
Subspace core(const RestrictedLieAlgebra& L, const Subspace& S);

struct Radicals {
  Subspace nilradical;
  Subspace solvable_radical;
};

/// Sums of the nilpotent and of the solvable ideals, found by enumerating all
/// ideals.
Radicals radicals(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

/// Whether S, as a Lie algebra in its own right, is nilpotent / solvable.
bool is_nilpotent_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);
bool is_solvable_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S);

struct Frattini {
  Subspace F_p;
  Subspace phi_p;
};

/// F_p is the meet of the maximal nodes of the restricted lattice; phi_p is
/// its core.
Frattini frattini(const SubalgebraLattice& restricted_lattice);
Frattini frattini(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

/// Sum of the minimal restricted ideals that are abelian.
Subspace abelian_p_socle(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

/// Restricted subalgebra generated by every x^[p], x in L (all q^n elements).
Subspace lp_subalgebra(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

struct ElementClass {
  bool semisimple = false;
  bool p_nilpotent = false;
  bool toral = false;
  /// Least n with x^[p]^n = 0, or 0 when x is not p-nilpotent.
  std::size_t order = 0;
};

ElementClass element_class(const RestrictedLieAlgebra& L, std::span<const Scalar> x);

struct JordanChevalley {
  Vector semisimple;
  Vector nilpotent;
};

/// Splits x along the Fitting decomposition of y -> y^[p] on <x>_p.
JordanChevalley jordan_chevalley(const RestrictedLieAlgebra& L, std::span<const Scalar> x);

/// S is an abelian restricted subalgebra consisting of semisimple elements.
bool is_torus(const RestrictedLieAlgebra& L, const Subspace& S);

/// First torus of largest dimension among the nodes of a restricted lattice.
Subspace maximal_torus(const SubalgebraLattice& restricted_lattice);
Subspace maximal_torus(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

struct RootDecomposition {
  Subspace torus;
  /// Toral basis t_1..t_r of the torus; root values are taken on it.
  std::vector<Vector> toral_basis;
  Subspace cartan;
  /// Nonzero value tuples (prime-field scalars) to root spaces.
  std::map<std::vector<Scalar>, Subspace> roots;
};

/// Throws NotATorus when T is not a torus or has no basis of toral elements.
RootDecomposition root_decomposition(const RestrictedLieAlgebra& L, const Subspace& T,
                                     std::uint64_t budget = kDefaultBudget);

struct Supersolvability {
  bool supersolvable = false;
  /// 0 = I_0 < I_1 < ... < I_n = L with dim I_k = k.
  std::optional<std::vector<Subspace>> ideal_flag;
  std::optional<std::vector<Subspace>> restricted_ideal_flag;
};

Supersolvability supersolvability(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

struct AlmostAbelian {
  bool holds = false;
  Vector b;
  Subspace A;
};

/// L = Fb + A with A = [L, L] abelian of codimension one, ad(b) the identity
/// on A, b toral and A^[p] = 0.
AlmostAbelian is_almost_abelian(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

/// Restricted subalgebra generated by the lines Fx with x^[p] in Fx.
Subspace one_dim_generated(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultBudget);

}  // namespace rla
