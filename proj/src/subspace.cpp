#include "rla/subspace.hpp"

#include <algorithm>
#include <limits>

#include "rla/error.hpp"

namespace rla {

Subspace::Subspace(FiniteField field, std::size_t ambient_dim) : field_(std::move(field)), n_(ambient_dim) {}

Subspace Subspace::full(FiniteField field, std::size_t ambient_dim) {
  Subspace s(std::move(field), ambient_dim);
  s.rows_.assign(ambient_dim * ambient_dim, 0);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_[i * ambient_dim + i] = 1;
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(FiniteField field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  Subspace s(std::move(field), ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
    s.insert(v);
    if (s.is_full()) break;
  }
  return s;
}

Subspace Subspace::from_rref(FiniteField field, std::size_t ambient_dim, std::vector<Scalar> rows) {
  Subspace s(std::move(field), ambient_dim);
  s.rows_ = std::move(rows);
  const std::size_t r = ambient_dim == 0 ? 0 : s.rows_.size() / ambient_dim;
  for (std::size_t i = 0; i < r; ++i) {
    auto row = s.row(i);
    auto it = std::find_if(row.begin(), row.end(), [](Scalar x) { return x != 0; });
    s.pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return s;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void Subspace::reduce_in_place(std::span<Scalar> v) const noexcept {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c != 0) axpy(field_, v, field_.neg(c), row(i));
  }
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != n_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  Vector w(v.begin(), v.end());
  reduce_in_place(w);
  return w;
}

bool Subspace::contains(std::span<const Scalar> v) const { return rla::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  if (other.dim() > dim()) return false;
  Vector w(n_);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    auto r = other.row(i);
    std::copy(r.begin(), r.end(), w.begin());
    reduce_in_place(w);
    if (!rla::is_zero(w)) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  Vector out(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

bool Subspace::insert(std::span<const Scalar> v) {
  if (v.size() != n_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  Vector w(v.begin(), v.end());
  reduce_in_place(w);
  if (!normalize_leading(field_, w)) return false;
  const std::size_t c = static_cast<std::size_t>(
      std::find_if(w.begin(), w.end(), [](Scalar x) { return x != 0; }) - w.begin());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    auto r = std::span<Scalar>(rows_.data() + i * n_, n_);
    const Scalar s = r[c];
    if (s != 0) axpy(field_, r, field_.neg(s), w);
  }
  const std::size_t pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), c);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos * n_), w.begin(), w.end());
  return true;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (n_ != other.n_ || !(field_ == other.field_)) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  Subspace out = dim() >= other.dim() ? *this : other;
  const Subspace& add = dim() >= other.dim() ? other : *this;
  for (std::size_t i = 0; i < add.dim() && !out.is_full(); ++i) out.insert(add.row(i));
  return out;
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  if (contains(other)) return other;
  if (other.contains(*this)) return *this;
  // Zassenhaus: rows (a|a) and (b|0); rows of the echelon form with zero left
  // half span the intersection in their right half.
  Matrix m(dim() + other.dim(), 2 * n_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m(i, j) = rows_[i * n_ + j];
      m(i, n_ + j) = rows_[i * n_ + j];
    }
  }
  for (std::size_t i = 0; i < other.dim(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(dim() + i, j) = other.rows_[i * n_ + j];
  }
  const auto pivots = row_reduce(field_, m);
  Subspace out(field_, n_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n_) continue;
    out.insert(std::span<const Scalar>(m.data.data() + i * m.cols + n_, n_));
  }
  return out;
}

std::size_t Subspace::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (Scalar s : rows_) {
    h ^= s;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) noexcept {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.rows_.begin(), a.rows_.end(), b.rows_.begin(), b.rows_.end());
}

// ---------------------------------------------------------------------------

std::uint64_t power_saturating(std::uint64_t q, std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // Pascal-type recurrence [m, j] = [m-1, j-1] + q^j [m-1, j], saturating.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      const std::uint64_t qj = power_saturating(q, j);
      std::uint64_t term = kMax;
      if (row[j] == 0) {
        term = 0;
      } else if (qj != kMax && row[j] <= kMax / qj) {
        term = row[j] * qj;
      }
      row[j] = (term == kMax || row[j - 1] > kMax - term) ? kMax : row[j - 1] + term;
    }
  }
  return row[k];
}

std::vector<Subspace> enumerate_subspaces(const FiniteField& field, std::size_t n,
                                          const std::optional<std::set<std::size_t>>& dims,
                                          std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorKind::BadParameters, "budget must be positive");
  const std::uint64_t q = field.order();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (dims && !dims->contains(k)) continue;
    const std::uint64_t c = gaussian_binomial(n, k, q);
    if (c > budget || total + c > budget) {
      throw Error(ErrorKind::ResourceLimit, "subspace count exceeds budget " + std::to_string(budget));
    }
    total += c;
  }

  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::size_t k = 0; k <= n; ++k) {
    if (dims && !dims->contains(k)) continue;
    const std::size_t first = out.size();
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // Free positions: entry (r, j) with j > piv[r] and j not a pivot.
      std::vector<std::size_t> free_pos;
      std::vector<bool> is_piv(n, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = piv[r] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.push_back(r * n + j);
      std::vector<Scalar> rows(k * n, 0);
      for (std::size_t r = 0; r < k; ++r) rows[r * n + piv[r]] = 1;
      std::vector<Scalar> digits(free_pos.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < free_pos.size(); ++i) rows[free_pos[i]] = digits[i];
        out.push_back(Subspace::from_rref(field, n, rows));
        std::size_t i = free_pos.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++digits[i] < q) {
            done = false;
            break;
          }
          digits[i] = 0;
        }
        if (done) break;
      }
      // next pivot combination
      if (k == 0) break;
      std::size_t i = k;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (piv[i] < n - k + i) {
          ++piv[i];
          for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

void for_each_projective_point(const FiniteField& field, std::size_t n, std::span<const std::size_t> support,
                               const std::function<bool(const Vector&)>& fn) {
  const std::size_t s = support.size();
  const Scalar q = field.order();
  Vector v(n, 0);
  for (std::size_t lead = s; lead > 0; --lead) {
    const std::size_t t = lead - 1;
    std::fill(v.begin(), v.end(), 0);
    v[support[t]] = 1;
    const std::size_t tail = s - 1 - t;
    std::vector<Scalar> digits(tail, 0);
    while (true) {
      for (std::size_t i = 0; i < tail; ++i) v[support[t + 1 + i]] = digits[i];
      if (!fn(v)) return;
      std::size_t i = tail;
      bool done = true;
      while (i > 0) {
        --i;
        if (++digits[i] < q) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
      if (done) break;
    }
  }
}

void for_each_vector(const FiniteField& field, std::size_t n, const std::function<bool(const Vector&)>& fn) {
  const Scalar q = field.order();
  Vector v(n, 0);
  while (true) {
    if (!fn(v)) return;
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++v[i] < q) {
        done = false;
        break;
      }
      v[i] = 0;
    }
    if (done) return;
  }
}

}  // namespace rla
