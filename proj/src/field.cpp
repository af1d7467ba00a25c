#include "rla/field.hpp"

#include <algorithm>
#include <string>

#include "rla/error.hpp"

namespace rla {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(b[i])) % p);
    }
    trim(a);
  }
  return a;
}

// Enumerates all monic polynomials of the given degree in lexicographic order
// of (c_0, ..., c_{d-1}), c_0 most significant.
template <class Fn>
bool for_each_monic(std::uint32_t p, std::size_t degree, Fn&& fn) {
  Poly c(degree + 1, 0);
  c[degree] = 1;
  while (true) {
    if (fn(c)) return true;
    // increment with c_{d-1} least significant
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) return false;
    }
    if (degree == 0) return false;
  }
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    const bool has_factor = for_each_monic(p, d, [&](const Poly& g) {
      return poly_mod(f, g, p).empty();
    });
    if (has_factor) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FiniteField::Tables {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint32_t q = 2;
  Poly modulus;
  std::vector<std::uint32_t> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint16_t> add;  // q*q when q is small, else empty
  std::vector<Scalar> neg;
  std::vector<Scalar> frob;
  std::vector<Scalar> frob_inv;

  Scalar add_digits(Scalar a, Scalar b) const {
    Scalar out = 0, place = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return out;
  }

  Scalar mul_slow(Scalar a, Scalar b) const {
    if (k == 1) return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
    Poly x(k), y(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      x[i] = a % p;
      a /= p;
      y[i] = b % p;
      b /= p;
    }
    Poly prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    Poly r = poly_mod(prod, modulus, p);
    Scalar out = 0, place = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i] * place;
      place *= p;
    }
    return out;
  }
};

FiniteField::FiniteField(std::shared_ptr<const Tables> tables) : t_(std::move(tables)) {}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t k,
                              std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::BadParameters, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorKind::BadParameters, "field order exceeds 2^16");
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);

  if (k > 1) {
    if (modulus) {
      const Poly& m = *modulus;
      if (m.size() != k + 1 || m.back() != 1 ||
          std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
        throw Error(ErrorKind::BadParameters, "modulus must be a monic degree-k polynomial with residues in [0,p)");
      }
      if (!poly_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
      t->modulus = m;
    } else {
      for_each_monic(p, k, [&](const Poly& c) {
        if (!poly_irreducible(c, p)) return false;
        t->modulus = c;
        return true;
      });
    }
  } else if (modulus && !modulus->empty()) {
    const Poly& m = *modulus;
    if (m.size() != 2 || m[1] != 1 || m[0] >= p) {
      throw Error(ErrorKind::BadParameters, "prime field modulus must be empty or monic linear");
    }
  }

  const std::uint32_t n = t->q - 1;
  t->log.assign(t->q, 0);
  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  if (t->q == 2) {
    t->exp[0] = t->exp[1] = 1;
  } else {
    for (Scalar g = 2; g < t->q; ++g) {
      Scalar x = 1;
      std::uint32_t order = 0;
      do {
        x = t->mul_slow(x, g);
        ++order;
      } while (x != 1 && order <= n);
      if (order != n) continue;
      x = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        t->exp[i] = t->exp[i + n] = x;
        t->log[x] = i;
        x = t->mul_slow(x, g);
      }
      break;
    }
  }

  t->neg.resize(t->q);
  for (Scalar a = 0; a < t->q; ++a) {
    Scalar out = 0, place = 1, v = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - v % p) % p) * place;
      v /= p;
      place *= p;
    }
    t->neg[a] = out;
  }
  if (k > 1 && t->q <= 256) {
    t->add.resize(static_cast<std::size_t>(t->q) * t->q);
    for (Scalar a = 0; a < t->q; ++a)
      for (Scalar b = 0; b < t->q; ++b) t->add[a * t->q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
  }
  FiniteField f(t);
  auto* tm = t.get();
  tm->frob.resize(tm->q);
  tm->frob_inv.resize(tm->q);
  for (Scalar a = 0; a < tm->q; ++a) tm->frob[a] = f.pow(a, p);
  for (Scalar a = 0; a < tm->q; ++a) tm->frob_inv[tm->frob[a]] = a;
  return f;
}

std::uint32_t FiniteField::characteristic() const noexcept { return t_->p; }
std::uint32_t FiniteField::degree() const noexcept { return t_->k; }
std::uint32_t FiniteField::order() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const noexcept { return t_->modulus; }

Scalar FiniteField::add(Scalar a, Scalar b) const noexcept {
  if (t_->k == 1) {
    Scalar s = a + b;
    return s >= t_->p ? s - t_->p : s;
  }
  if (!t_->add.empty()) return t_->add[a * t_->q + b];
  return t_->add_digits(a, b);
}

Scalar FiniteField::neg(Scalar a) const noexcept { return t_->neg[a]; }
Scalar FiniteField::sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }

Scalar FiniteField::mul(Scalar a, Scalar b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (t_->k == 1) return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % t_->p);
  return t_->exp[t_->log[a] + t_->log[b]];
}

Scalar FiniteField::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

Scalar FiniteField::div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

Scalar FiniteField::pow(Scalar a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = t_->q - 1;
  return t_->exp[static_cast<std::size_t>((t_->log[a] * (e % n)) % n)];
}

Scalar FiniteField::frobenius(Scalar a) const noexcept {
  return t_->frob.empty() ? pow(a, t_->p) : t_->frob[a];
}

Scalar FiniteField::frobenius_inverse(Scalar a) const noexcept { return t_->frob_inv[a]; }

Scalar FiniteField::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = t_->p;
  return static_cast<Scalar>(((n % p) + p) % p);
}

std::vector<std::uint32_t> FiniteField::residues(Scalar a) const {
  std::vector<std::uint32_t> out(t_->k);
  for (auto& c : out) {
    c = a % t_->p;
    a /= t_->p;
  }
  return out;
}

Scalar FiniteField::from_residues(std::span<const std::uint32_t> residues) const {
  if (residues.size() != t_->k) throw Error(ErrorKind::BadParameters, "scalar must have k residues");
  Scalar out = 0, place = 1;
  for (auto c : residues) {
    if (c >= t_->p) throw Error(ErrorKind::BadParameters, "residue out of range");
    out += c * place;
    place *= t_->p;
  }
  return out;
}

bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->k == b.t_->k && a.t_->modulus == b.t_->modulus;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

void axpy(const FiniteField& f, std::span<Scalar> y, Scalar a, std::span<const Scalar> x) noexcept {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(a, x[i]));
  }
}

Vector scaled(const FiniteField& f, Scalar a, std::span<const Scalar> x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}

Vector added(const FiniteField& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

Vector subtracted(const FiniteField& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}

bool normalize_leading(const FiniteField& f, std::span<Scalar> v) noexcept {
  auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
  if (it == v.end()) return false;
  if (*it != 1) {
    const Scalar s = f.inv(*it);
    for (auto jt = it; jt != v.end(); ++jt) *jt = f.mul(s, *jt);
  }
  return true;
}

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t l = 0; l < a.cols; ++l) {
      const Scalar s = a(i, l);
      if (s == 0) continue;
      axpy(f, out.row(i), s, b.row(l));
    }
  return out;
}

Matrix matrix_power(const FiniteField& f, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows);
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(f, result, base);
    e >>= 1;
    if (e) base = multiply(f, base, base);
  }
  return result;
}

Vector apply(const FiniteField& f, const Matrix& a, std::span<const Scalar> x) {
  Vector out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (x[j] != 0 && a(i, j) != 0) acc = f.add(acc, f.mul(a(i, j), x[j]));
    }
    out[i] = acc;
  }
  return out;
}

std::vector<std::size_t> row_reduce(const FiniteField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    }
    const Scalar s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = f.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      axpy(f, m.row(i), f.neg(m(i, c)), m.row(r));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

std::size_t rank(const FiniteField& f, Matrix m) { return row_reduce(f, m).size(); }

Matrix kernel(const FiniteField& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix out(m.cols - pivots.size(), m.cols);
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = f.neg(r(i, free));
    ++row;
  }
  return out;
}

}  // namespace rla
