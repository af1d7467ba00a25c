#include "rla/lattice.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "rla/error.hpp"

namespace rla {

namespace {

constexpr std::uint64_t kMaxPointEntries = 200'000'000;

ClosureMode closure_mode(LatticeMode m) {
  return m == LatticeMode::restricted ? ClosureMode::restricted : ClosureMode::ordinary;
}

std::uint64_t point_count(std::uint64_t q, std::size_t s) {
  const std::uint64_t qs = power_saturating(q, s);
  return qs == std::numeric_limits<std::uint64_t>::max() ? qs : (qs - 1) / (q - 1);
}

}  // namespace

const char* to_string(LatticeMode mode) noexcept {
  return mode == LatticeMode::restricted ? "restricted" : "ordinary";
}

SubalgebraLattice::SubalgebraLattice(RestrictedLieAlgebra L, LatticeMode mode)
    : algebra_(std::move(L)), mode_(mode) {}

SubalgebraLattice SubalgebraLattice::enumerate(const RestrictedLieAlgebra& L, LatticeMode mode,
                                               std::uint64_t budget) {
  SubalgebraLattice lat(L, mode);
  auto all = enumerate_subspaces(L.field(), L.dim(), std::nullopt, budget);
  for (auto& s : all) {
    const SubspaceFlags f = classify_subspace(L, s);
    const bool keep = mode == LatticeMode::restricted ? f.restricted_subalgebra : f.subalgebra;
    if (!keep) continue;
    NodeFlags nf;
    nf.ideal = f.ideal;
    nf.restricted_ideal = f.restricted_ideal;
    lat.flags_.push_back(nf);
    lat.nodes_.push_back(std::move(s));
  }
  lat.index_.reserve(lat.nodes_.size());
  for (std::size_t i = 0; i < lat.nodes_.size(); ++i) lat.index_.emplace(lat.nodes_[i], i);
  lat.build_covers();
  return lat;
}

void SubalgebraLattice::build_covers() {
  const std::size_t N = nodes_.size();
  const std::uint64_t q = algebra_.field().order();
  const std::size_t n = algebra_.dim();
  std::uint64_t total = 0;
  for (const auto& s : nodes_) {
    total += point_count(q, n - s.dim());
    if (total > kMaxPointEntries) throw Error(ErrorKind::ResourceLimit, "lattice join table too large");
  }
  free_.clear();
  for (const auto& s : nodes_) free_.push_back(s.free_columns());
  upper_.assign(N, {});
  lower_.assign(N, {});
  point_join_.assign(N, {});
  const ClosureMode cm = closure_mode(mode_);
  for (std::size_t a = 0; a < N; ++a) {
    const Subspace& S = nodes_[a];
    const auto& free = free_[a];
    auto& table = point_join_[a];
    table.reserve(static_cast<std::size_t>(point_count(q, free.size())));
    for_each_projective_point(algebra_.field(), n, free, [&](const Vector& v) {
      const Subspace J = extend_closure(algebra_, S, std::span<const Vector>(&v, 1), cm);
      table.push_back(static_cast<std::uint32_t>(index_.at(J)));
      return true;
    });
    std::vector<std::size_t> cand(table.begin(), table.end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Subspace& B = nodes_[cand[i]];
      bool minimal = true;
      if (B.dim() > S.dim() + 1) {
        for (std::size_t j = 0; j < i && minimal; ++j) {
          const Subspace& C = nodes_[cand[j]];
          if (C.dim() < B.dim() && B.contains(C)) minimal = false;
        }
      }
      if (minimal) upper_[a].push_back(cand[i]);
    }
    for (auto b : upper_[a]) lower_[b].push_back(a);
  }
  const std::size_t t = N - 1;
  for (auto m : lower_[t]) flags_[m].maximal = true;
  for (auto x : upper_[0]) flags_[x].atom = true;
}

std::optional<std::size_t> SubalgebraLattice::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SubalgebraLattice::covers(std::size_t a, std::size_t b) const {
  const auto& u = upper_.at(a);
  return std::binary_search(u.begin(), u.end(), b);
}

bool SubalgebraLattice::leq(std::size_t a, std::size_t b) const {
  return a == b || nodes_.at(b).contains(nodes_.at(a));
}

std::size_t SubalgebraLattice::meet(std::size_t a, std::size_t b) const {
  if (a == b) return a;
  return index_.at(nodes_.at(a).intersect(nodes_.at(b)));
}

std::size_t SubalgebraLattice::point_slot(std::size_t a, std::span<const Scalar> w) const {
  // w is reduced modulo node a and has leading entry one. Slots follow the
  // order of for_each_projective_point over the free columns of node a.
  const auto& free = free_[a];
  const std::uint64_t q = algebra_.field().order();
  const std::size_t s = free.size();
  std::size_t t = 0;
  while (w[free[t]] == 0) ++t;
  std::uint64_t slot = point_count(q, s - 1 - t);
  std::uint64_t tail = 0;
  for (std::size_t i = t + 1; i < s; ++i) tail = tail * q + w[free[i]];
  return static_cast<std::size_t>(slot + tail);
}

std::size_t SubalgebraLattice::join_point(std::size_t a, std::span<const Scalar> v) const {
  Vector w(v.begin(), v.end());
  return join_point_in_place(a, w);
}

std::size_t SubalgebraLattice::join_point_in_place(std::size_t a, std::span<Scalar> w) const {
  nodes_.at(a).reduce_in_place(w);
  if (!normalize_leading(algebra_.field(), w)) return a;
  return point_join_[a][point_slot(a, w)];
}

std::size_t SubalgebraLattice::join(std::size_t a, std::size_t b) const {
  if (leq(b, a)) return a;
  if (leq(a, b)) return b;
  std::size_t cur = a;
  const Subspace& B = nodes_.at(b);
  for (std::size_t i = 0; i < B.dim(); ++i) cur = join_point(cur, B.row(i));
  return cur;
}

std::size_t SubalgebraLattice::closure_of(const Subspace& s) const {
  std::size_t cur = 0;
  for (std::size_t i = 0; i < s.dim(); ++i) cur = join_point(cur, s.row(i));
  return cur;
}

std::vector<std::size_t> SubalgebraLattice::maximal_nodes() const { return lower_.at(top()); }

std::vector<std::size_t> SubalgebraLattice::atoms() const { return upper_.at(bottom()); }

// ---------------------------------------------------------------------------

std::vector<Subspace> enumerate_bottom_up(const RestrictedLieAlgebra& L, LatticeMode mode, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorKind::BadParameters, "budget must be positive");
  const ClosureMode cm = closure_mode(mode);
  std::set<Subspace> seen{L.zero_subspace()};
  std::vector<Subspace> work{L.zero_subspace()};
  while (!work.empty()) {
    Subspace S = std::move(work.back());
    work.pop_back();
    const auto free = S.free_columns();
    for_each_projective_point(L.field(), L.dim(), free, [&](const Vector& v) {
      Subspace J = extend_closure(L, S, std::span<const Vector>(&v, 1), cm);
      if (seen.insert(J).second) {
        if (seen.size() > budget) throw Error(ErrorKind::ResourceLimit, "closed subspace count exceeds budget");
        work.push_back(std::move(J));
      }
      return true;
    });
  }
  return {seen.begin(), seen.end()};
}

std::vector<Subspace> enumerate_ideals(const RestrictedLieAlgebra& L, bool restricted, std::uint64_t budget) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(L.field(), L.dim(), std::nullopt, budget)) {
    if (!is_ideal(L, s)) continue;
    if (restricted && !is_restricted_subalgebra(L, s)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

PredicateReport failed(std::string name, std::vector<std::string> roles, std::vector<std::size_t> witness) {
  PredicateReport r;
  r.predicate = std::move(name);
  r.holds = false;
  r.roles = std::move(roles);
  r.witness = std::move(witness);
  return r;
}

PredicateReport passed(std::string name) {
  PredicateReport r;
  r.predicate = std::move(name);
  return r;
}

// Birkhoff: any two covers of a common node are both covered by their join.
bool upper_cover_condition(const SubalgebraLattice& lat) {
  Vector w;
  for (std::size_t c = 0; c < lat.size(); ++c) {
    const auto& ups = lat.upper_covers(c);
    const std::size_t dc = lat.node(c).dim();
    for (std::size_t i = 0; i < ups.size(); ++i) {
      const std::size_t a = ups[i];
      const Subspace& A = lat.node(a);
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const std::size_t b = ups[j];
        const Subspace& B = lat.node(b);
        // Any vector of B outside A generates the join together with A.
        std::size_t d = a;
        for (std::size_t r = 0; r < B.dim() && d == a; ++r) {
          auto row = B.row(r);
          w.assign(row.begin(), row.end());
          d = lat.join_point_in_place(a, w);
        }
        const std::size_t dd = lat.node(d).dim();
        if (A.dim() == dc + 1 && B.dim() == dc + 1 && dd == dc + 2) continue;
        if (!lat.covers(a, d) || !lat.covers(b, d)) return false;
      }
    }
  }
  return true;
}

bool lower_cover_condition(const SubalgebraLattice& lat) {
  for (std::size_t d = 0; d < lat.size(); ++d) {
    const auto& lows = lat.lower_covers(d);
    const std::size_t dd = lat.node(d).dim();
    for (std::size_t i = 0; i < lows.size(); ++i)
      for (std::size_t j = i + 1; j < lows.size(); ++j) {
        const std::size_t a = lows[i], b = lows[j];
        // Two hyperplanes of d meet in codimension two, so the meet is
        // covered by both.
        if (lat.node(a).dim() + 1 == dd && lat.node(b).dim() + 1 == dd) continue;
        const std::size_t m = lat.meet(a, b);
        if (!lat.covers(m, a) || !lat.covers(m, b)) return false;
      }
  }
  return true;
}

// First (S, T) in (T, S) order with S ∩ T covered by T but S not covered by S ∨ T.
std::optional<std::pair<std::size_t, std::size_t>> upper_witness(const SubalgebraLattice& lat) {
  for (std::size_t t = 0; t < lat.size(); ++t) {
    const auto& lows = lat.lower_covers(t);
    if (lows.empty()) continue;
    for (std::size_t s = 0; s < lat.size(); ++s) {
      if (lat.leq(t, s)) continue;
      bool meets_in_cover = false;
      for (auto c : lows)
        if (lat.leq(c, s)) {
          meets_in_cover = true;
          break;
        }
      if (!meets_in_cover) continue;
      if (!lat.covers(s, lat.join(s, t))) return std::pair{s, t};
    }
  }
  return std::nullopt;
}

// First (U, B) in (B, U) order with U covered by U ∨ B but U ∩ B not covered by B.
std::optional<std::pair<std::size_t, std::size_t>> lower_witness(const SubalgebraLattice& lat) {
  for (std::size_t b = 0; b < lat.size(); ++b) {
    for (std::size_t u = 0; u < lat.size(); ++u) {
      const std::size_t j = lat.join(u, b);
      if (!lat.covers(u, j)) continue;
      if (!lat.covers(lat.meet(u, b), b)) return std::pair{u, b};
    }
  }
  return std::nullopt;
}

}  // namespace

PredicateReport is_upper_semimodular(const SubalgebraLattice& lat) {
  if (upper_cover_condition(lat)) return passed("upper_semimodular");
  const auto w = upper_witness(lat);
  if (!w) throw Error(ErrorKind::ValidationError, "cover condition failed without a pair witness");
  return failed("upper_semimodular", {"S", "T"}, {w->first, w->second});
}

PredicateReport is_lower_semimodular(const SubalgebraLattice& lat) {
  if (lower_cover_condition(lat)) return passed("lower_semimodular");
  const auto w = lower_witness(lat);
  if (!w) throw Error(ErrorKind::ValidationError, "cover condition failed without a pair witness");
  return failed("lower_semimodular", {"U", "B"}, {w->first, w->second});
}

PredicateReport is_modular(const SubalgebraLattice& lat) {
  // A lattice of finite length is modular iff it is upper and lower
  // semimodular; a failing pair yields a failing triple X <= Z.
  const auto usm = is_upper_semimodular(lat);
  if (!usm.holds) {
    const std::size_t a = usm.witness[0], b = usm.witness[1];
    const std::size_t j = lat.join(a, b);
    for (auto c : lat.upper_covers(a))
      if (lat.leq(c, j)) return failed("modular", {"X", "Y", "Z"}, {a, b, c});
    throw Error(ErrorKind::ValidationError, "no cover below the join");
  }
  const auto lsm = is_lower_semimodular(lat);
  if (!lsm.holds) {
    const std::size_t a = lsm.witness[0], b = lsm.witness[1];
    const std::size_t m = lat.meet(a, b);
    for (auto c : lat.upper_covers(m))
      if (c != b && lat.leq(c, b)) return failed("modular", {"X", "Y", "Z"}, {c, a, b});
    throw Error(ErrorKind::ValidationError, "no cover above the meet");
  }
  return passed("modular");
}

PredicateReport is_dually_atomistic(const SubalgebraLattice& lat) {
  bool ok = true;
  for (std::size_t s = 0; s < lat.size() && ok; ++s) {
    if (s == lat.top() || lat.flags(s).maximal) continue;
    const auto& ups = lat.upper_covers(s);
    std::size_t m = ups.front();
    for (std::size_t i = 1; i < ups.size() && m != s; ++i) m = lat.meet(m, ups[i]);
    ok = m == s;
  }
  if (ok) return passed("dually_atomistic");
  const auto maxes = lat.maximal_nodes();
  for (std::size_t s = 0; s < lat.size(); ++s) {
    if (s == lat.top()) continue;
    std::size_t m = lat.top();
    for (auto x : maxes)
      if (lat.leq(s, x)) m = lat.meet(m, x);
    if (m != s) return failed("dually_atomistic", {"S"}, {s});
  }
  throw Error(ErrorKind::ValidationError, "cover condition failed without a witness");
}

PredicateReport is_atomistic(const SubalgebraLattice& lat) {
  bool ok = true;
  for (std::size_t s = 0; s < lat.size() && ok; ++s) {
    if (s == lat.bottom() || lat.flags(s).atom) continue;
    const auto& lows = lat.lower_covers(s);
    std::size_t j = lows.front();
    for (std::size_t i = 1; i < lows.size() && j != s; ++i) j = lat.join(j, lows[i]);
    ok = j == s;
  }
  if (ok) return passed("atomistic");
  const auto ats = lat.atoms();
  for (std::size_t s = 1; s < lat.size(); ++s) {
    std::size_t j = lat.bottom();
    for (auto x : ats)
      if (lat.leq(x, s)) j = lat.join(j, x);
    if (j != s) return failed("atomistic", {"S"}, {s});
  }
  throw Error(ErrorKind::ValidationError, "cover condition failed without a witness");
}

JReport j_algebra(const SubalgebraLattice& lat) {
  // Maximal chains from 0 to every node having one length is equivalent to
  // the chain condition on every interval.
  const std::size_t N = lat.size();
  std::vector<std::size_t> lo(N, 0), hi(N, 0);
  JReport r;
  for (std::size_t v = 1; v < N; ++v) {
    const auto& lows = lat.lower_covers(v);
    lo[v] = std::numeric_limits<std::size_t>::max();
    for (auto u : lows) {
      lo[v] = std::min(lo[v], lo[u] + 1);
      hi[v] = std::max(hi[v], hi[u] + 1);
    }
    if (r.is_j && lo[v] != hi[v]) {
      r.is_j = false;
      r.witness = {lat.bottom(), v};
      r.shortest = lo[v];
      r.longest = hi[v];
    }
  }
  if (r.is_j) r.d = hi[N - 1];
  return r;
}

PredicateReport quasi_ideal_scan(const SubalgebraLattice& lat) {
  const auto& L = lat.algebra();
  if (L.is_abelian()) return passed("quasi_ideal");
  auto holds_for = [&](std::size_t s, std::size_t h) {
    const Subspace sum = lat.node(s).sum(lat.node(h));
    const Subspace br = bracket_span(L, lat.node(s), lat.node(h));
    return sum.contains(br);
  };
  // [S, H] is spanned by brackets of elements, each of which lies in the
  // bracket of two cyclic nodes, so cyclic pairs decide the verdict.
  std::vector<std::size_t> cyclic;
  std::vector<std::size_t> all(L.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for_each_projective_point(L.field(), L.dim(), all, [&](const Vector& v) {
    cyclic.push_back(lat.join_point(lat.bottom(), v));
    return true;
  });
  std::sort(cyclic.begin(), cyclic.end());
  cyclic.erase(std::unique(cyclic.begin(), cyclic.end()), cyclic.end());
  bool ok = true;
  for (std::size_t i = 0; i < cyclic.size() && ok; ++i)
    for (std::size_t j = i + 1; j < cyclic.size() && ok; ++j) ok = holds_for(cyclic[i], cyclic[j]);
  if (ok) return passed("quasi_ideal");
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (std::size_t s = 0; s < lat.size(); ++s)
      if (s != h && !holds_for(s, h)) return failed("quasi_ideal", {"S", "H"}, {s, h});
  throw Error(ErrorKind::ValidationError, "cyclic pair failed without a node witness");
}

std::string to_dot(const SubalgebraLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& f = lat.flags(i);
    out << "  n" << i << " [label=\"" << i << " dim " << lat.node(i).dim();
    std::vector<const char*> tags;
    if (f.ideal) tags.push_back("ideal");
    if (f.restricted_ideal) tags.push_back("p-ideal");
    if (f.maximal) tags.push_back("maximal");
    if (f.atom) tags.push_back("atom");
    if (!tags.empty()) {
      out << " [";
      for (std::size_t t = 0; t < tags.size(); ++t) out << (t ? "," : "") << tags[t];
      out << "]";
    }
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (auto j : lat.upper_covers(i)) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rla
