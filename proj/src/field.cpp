#include "invol/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace invol {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 pow_mod_u64(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = static_cast<u64>(static_cast<u128>(result) * base % mod);
    base = static_cast<u64>(static_cast<u128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

// Dense polynomials over F_p, low-degree-first, trailing zeros trimmed.
// Only used by the irreducibility test; field arithmetic has its own path.
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder modulo a monic divisor.
Poly mod_monic(Poly a, const Poly& f, u64 p) {
  const std::size_t df = f.size() - 1;
  trim(a);
  while (a.size() > df) {
    const u64 c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    if (c) {
      for (std::size_t j = 0; j < df; ++j) {
        const u64 s = static_cast<u64>(static_cast<u128>(c) * f[j] % p);
        a[shift + j] = (a[shift + j] + p - s) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<u64>((prod[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
    }
  }
  return mod_monic(std::move(prod), f, p);
}

Poly pow_mod(Poly base, u64 exp, const Poly& f, u64 p) {
  Poly result = {1};
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, f, p);
    base = mul_mod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

Poly sub_poly(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Remainder by an arbitrary nonzero divisor (scales by the lead inverse).
Poly rem_poly(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 lead_inv = pow_mod_u64(b.back(), p - 2, p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const u64 c = static_cast<u64>(static_cast<u128>(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    if (c) {
      for (std::size_t j = 0; j < db; ++j) {
        const u64 s = static_cast<u64>(static_cast<u128>(c) * b[j] % p);
        a[shift + j] = (a[shift + j] + p - s) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly gcd_poly(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem_poly(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> distinct_prime_factors(u64 x) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (u64 d = 3; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, u64 p) {
  if (poly.size() < 2) return false;
  if (poly.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  const unsigned deg = static_cast<unsigned>(poly.size() - 1);
  if (deg == 1) return true;

  if (deg <= 3) {
    // A quadratic or cubic is reducible exactly when it has a root.
    for (u64 x = 0; x < p; ++x) {
      u64 acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) {
        acc = static_cast<u64>((static_cast<u128>(acc) * x + poly[i]) % p);
      }
      if (acc == 0) return false;
    }
    return true;
  }

  // f irreducible iff x^(p^deg) == x (mod f) and, for every prime r | deg,
  // gcd(x^(p^(deg/r)) - x, f) = 1.
  const Poly f(poly.begin(), poly.end());
  const Poly x = {0, 1};
  const std::vector<u64> deg_factors = distinct_prime_factors(deg);
  Poly h = x;
  for (unsigned k = 1; k <= deg; ++k) {
    h = pow_mod(std::move(h), p, f, p);
    const bool checkpoint =
        std::any_of(deg_factors.begin(), deg_factors.end(),
                    [&](u64 r) { return deg % r == 0 && k == deg / r; });
    if (checkpoint) {
      Poly g = gcd_poly(sub_poly(h, x, p), f, p);
      if (g.size() > 1) return false;
    }
  }
  return sub_poly(h, x, p).empty();
}

std::vector<std::uint32_t> smallest_irreducible(u64 p, unsigned n) {
  if (n < 2) throw std::invalid_argument("smallest_irreducible: degree must be >= 2");
  u64 count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  for (u64 w = 0; w < count; ++w) {
    std::vector<std::uint32_t> cand(n + 1, 0);
    u64 t = w;
    for (unsigned i = 0; i < n; ++i) {
      cand[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    cand[n] = 1;
    if (cand[0] == 0) continue;  // divisible by x
    if (is_irreducible(cand, p)) return cand;
  }
  throw std::logic_error("smallest_irreducible: no irreducible found");
}

std::optional<std::pair<u64, unsigned>> factor_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  u64 p = q;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned n = 0;
  u64 rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, n);
}

Field::Field(u64 p, unsigned n) : p_(p), n_(n) {
  if (n_ >= 2) modulus_ = smallest_irreducible(p_, n_);
  validate_and_finish();
}

Field::Field(u64 p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  if (n_ == 1) {
    if (!modulus_.empty()) throw std::invalid_argument("Field: prime fields take no modulus");
  } else {
    if (modulus_.size() != n_ + 1)
      throw std::invalid_argument("Field: modulus must have degree n");
    if (modulus_.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
    for (auto c : modulus_) {
      if (c >= p_) throw std::invalid_argument("Field: modulus coefficient out of range");
    }
    if (!is_irreducible(modulus_, p_))
      throw std::invalid_argument("Field: modulus is reducible");
  }
  validate_and_finish();
}

void Field::validate_and_finish() {
  if (!is_prime(p_)) throw std::invalid_argument("Field: characteristic must be prime");
  if (p_ >= (std::uint64_t{1} << 29))
    throw std::invalid_argument("Field: characteristic above supported maximum");
  if (n_ < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
  if (n_ > kMaxDegree) throw std::invalid_argument("Field: extension degree above supported maximum");
  q_ = 1;
  for (unsigned i = 0; i < n_; ++i) {
    if (q_ > (std::uint64_t{1} << 62) / p_) throw std::invalid_argument("Field: order overflows");
    q_ *= p_;
  }
  if (q_ % 3 == 1) m_ = (q_ - 1) / 3;
  qm1_factors_ = distinct_prime_factors(q_ - 1);
}

void Field::decompose(u64 v, Digits& d) const {
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
}

u64 Field::compose(const Digits& d) const {
  u64 v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + d[i];
  return v;
}

Elem Field::elem(u64 value) const {
  if (value >= q_) throw std::invalid_argument("Field: element index out of range");
  return {value};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > n_) throw std::invalid_argument("Field: too many coefficients");
  Digits d{};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw std::invalid_argument("Field: coefficient out of range");
    d[i] = coeffs[i];
  }
  return {compose(d)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  Digits d{};
  decompose(x.v, d);
  return std::vector<std::uint32_t>(d.begin(), d.begin() + n_);
}

Elem Field::add(Elem a, Elem b) const {
  if (n_ == 1) return {(a.v + b.v) % p_};
  Digits da{}, db{};
  decompose(a.v, da);
  decompose(b.v, db);
  for (unsigned i = 0; i < n_; ++i) da[i] = static_cast<std::uint32_t>((da[i] + u64{db[i]}) % p_);
  return {compose(da)};
}

Elem Field::neg(Elem a) const {
  if (n_ == 1) return {a.v ? p_ - a.v : 0};
  Digits d{};
  decompose(a.v, d);
  for (unsigned i = 0; i < n_; ++i) d[i] = d[i] ? static_cast<std::uint32_t>(p_ - d[i]) : 0;
  return {compose(d)};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (n_ == 1) return {static_cast<u64>(static_cast<u128>(a.v) * b.v % p_)};
  Digits da{}, db{};
  decompose(a.v, da);
  decompose(b.v, db);
  std::array<u64, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < n_; ++j) prod[i + j] += u64{da[i]} * db[j];
  }
  // Reduce by the monic modulus: t^n == -(modulus_[0] + ... + modulus_[n-1] t^(n-1)).
  for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
    const u64 c = prod[d] % p_;
    if (c) {
      for (unsigned j = 0; j < n_; ++j) {
        prod[d - n_ + j] = (prod[d - n_ + j] + c * (p_ - modulus_[j])) % p_;
      }
    }
    prod[d] = 0;
  }
  Digits out{};
  for (unsigned i = 0; i < n_; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  return {compose(out)};
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (x.v == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw std::domain_error("Field: negative power of zero");
  }
  const std::int64_t group = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = group ? e % group : 0;
  if (r < 0) r += group;
  u64 exp = static_cast<u64>(r);
  Elem result = one();
  Elem base = x;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

Elem Field::inv(Elem x) const {
  if (x.v == 0) throw std::domain_error("Field: inverse of zero");
  return pow(x, static_cast<std::int64_t>(q_) - 2);
}

u64 Field::order(Elem x) const {
  if (x.v == 0) throw std::domain_error("Field: order of zero");
  u64 ord = q_ - 1;
  for (u64 f : qm1_factors_) {
    while (ord % f == 0 && pow(x, static_cast<std::int64_t>(ord / f)) == one()) ord /= f;
  }
  return ord;
}

bool Field::is_generator(Elem x) const {
  if (x.v == 0) return false;
  for (u64 f : qm1_factors_) {
    if (pow(x, static_cast<std::int64_t>((q_ - 1) / f)) == one()) return false;
  }
  return true;
}

Elem Field::find_generator() const {
  for (u64 v = 1; v < q_; ++v) {
    if (is_generator({v})) return {v};
  }
  throw std::logic_error("Field: no generator found");
}

std::vector<Elem> Field::generators() const {
  std::vector<Elem> out;
  for (u64 v = 1; v < q_; ++v) {
    if (is_generator({v})) out.push_back({v});
  }
  return out;
}

}  // namespace invol
