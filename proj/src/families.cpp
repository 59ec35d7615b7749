#include "invol/families.hpp"

#include <stdexcept>

namespace invol {

namespace {

using i64 = std::int64_t;

void require_family_field(const Generator& g) {
  const Field& f = g.field();
  if (f.p() == 2) throw std::domain_error("families: field order must be odd");
  if (!f.m()) throw std::domain_error("families: field order must be 1 mod 3");
}

// The formulas are m-periodic in k (gamma^(3m) = 1), so k is folded into
// [0, m-1] instead of rejected.
i64 normalize_k(i64 k, std::uint64_t m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = k % mm;
  if (r < 0) r += mm;
  return r;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::T1: return "T1";
    case Family::T2: return "T2";
    case Family::T3: return "T3";
    case Family::S1: return "S1";
    case Family::S2: return "S2";
    case Family::S3: return "S3";
  }
  throw std::logic_error("family_name: bad family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

bool is_trinomial(Family f) {
  return f == Family::T1 || f == Family::T2 || f == Family::T3;
}

unsigned fixed_coset(Family f) {
  switch (f) {
    case Family::T1:
    case Family::S1: return 0;
    case Family::T2:
    case Family::S2: return 1;
    case Family::T3:
    case Family::S3: return 2;
  }
  throw std::logic_error("fixed_coset: bad family");
}

std::string_view slot_name(unsigned slot) {
  static constexpr std::array<std::string_view, 6> names = {"a", "b", "c", "d", "e", "f"};
  if (slot >= names.size()) throw std::invalid_argument("slot_name: slot out of range");
  return names[slot];
}

std::vector<std::uint64_t> family_exponents(Family f, std::uint64_t m) {
  if (is_trinomial(f)) return {2 * m + 1, m + 1, 1};
  return {3 * m - 1, 2 * m + 1, 2 * m - 1, m + 1, m - 1, 1};
}

CoeffSet trinomial_coeffs(Family fam, const Generator& g, i64 k_in) {
  if (!is_trinomial(fam)) throw std::invalid_argument("trinomial_coeffs: not a trinomial family");
  require_family_field(g);
  const Field& F = g.field();
  const i64 m = static_cast<i64>(g.m());
  const i64 k = normalize_k(k_in, g.m());

  const Elem three = F.elem(3);
  const Elem one = F.one();
  auto gp = [&](i64 e) { return g.gamma_pow(e); };
  auto sum3 = [&](Elem x, Elem y, Elem z) { return F.add(F.add(x, y), z); };
  auto frac = [&](Elem num, Elem den_pow) {
    return F.mul(num, F.inv(F.mul(three, den_pow)));
  };

  Elem a, b, c;
  switch (fam) {
    case Family::T1:
      a = frac(sum3(gp(2 * m + 6 * k + 2), gp(m + 3 * k + 1), one), gp(m + 3 * k + 1));
      b = frac(sum3(gp(2 * m), gp(m + 3 * k + 1), gp(6 * k + 2)), gp(m + 3 * k + 1));
      c = frac(sum3(gp(6 * k + 2), gp(3 * k + 1), one), gp(3 * k + 1));
      break;
    case Family::T2:
      a = frac(sum3(gp(2 * m + 3 * k + 2), gp(m + 6 * k + 4), one), gp(m + 3 * k + 2));
      b = frac(sum3(gp(2 * m), gp(m + 6 * k + 4), gp(3 * k + 2)), gp(m + 3 * k + 2));
      c = frac(sum3(gp(6 * k + 4), gp(3 * k + 2), one), gp(3 * k + 2));
      break;
    case Family::T3:
      a = frac(sum3(gp(2 * m), gp(m + 6 * k + 2), gp(3 * k + 1)), gp(m + 3 * k + 1));
      b = frac(sum3(gp(2 * m + 3 * k + 1), gp(m + 6 * k + 2), one), gp(m + 3 * k + 1));
      c = frac(sum3(gp(6 * k + 2), gp(3 * k + 1), one), gp(3 * k + 1));
      break;
    default: break;
  }
  return CoeffSet{{a, b, c}};
}

CoeffSet sixterm_coeffs(Family fam, const Generator& g, i64 k_in) {
  if (is_trinomial(fam)) throw std::invalid_argument("sixterm_coeffs: not a six-term family");
  require_family_field(g);
  const Field& F = g.field();
  const i64 m = static_cast<i64>(g.m());
  const i64 k = normalize_k(k_in, g.m());

  const Elem inv3 = F.inv(F.elem(3));
  auto gp = [&](i64 e) { return g.gamma_pow(e); };
  auto third = [&](Elem x) { return F.mul(x, inv3); };
  const Elem two = F.elem(2);

  switch (fam) {
    case Family::S1: {
      const Elem a = third(F.mul(two, gp(3 * k)));
      const Elem b = inv3;
      const Elem c = F.neg(third(gp(3 * k)));
      // b repeats at x^(2m+1), x^(m+1), x; c at x^(2m-1), x^(m-1).
      return CoeffSet{{a, b, c, b, c, b}};
    }
    case Family::S2: {
      const Elem a = third(F.mul(two, gp(3 * k + 2)));
      const Elem b = third(gp(m));
      const Elem c = F.neg(third(gp(m + 3 * k + 2)));
      const Elem d = third(gp(2 * m));
      const Elem e = F.neg(third(gp(2 * m + 3 * k + 2)));
      const Elem f = inv3;
      return CoeffSet{{a, b, c, d, e, f}};
    }
    case Family::S3: {
      const Elem a = third(F.mul(two, gp(3 * k + 1)));
      const Elem b = third(gp(2 * m));
      const Elem c = F.neg(third(gp(2 * m + 3 * k + 1)));
      const Elem d = third(gp(m));
      const Elem e = F.neg(third(gp(m + 3 * k + 1)));
      const Elem f = inv3;
      return CoeffSet{{a, b, c, d, e, f}};
    }
    default: break;
  }
  throw std::logic_error("sixterm_coeffs: bad family");
}

CoeffSet family_coeffs(Family f, const Generator& g, i64 k) {
  return is_trinomial(f) ? trinomial_coeffs(f, g, k) : sixterm_coeffs(f, g, k);
}

SparsePoly build_poly(Family f, const Generator& g, i64 k) {
  const CoeffSet coeffs = family_coeffs(f, g, k);
  const std::vector<std::uint64_t> expos = family_exponents(f, g.m());
  std::vector<Term> terms;
  terms.reserve(expos.size());
  for (std::size_t i = 0; i < expos.size(); ++i) terms.push_back({expos[i], coeffs.slots[i]});
  SparsePoly poly = normalize_terms(g.field(), std::move(terms));
  if (poly.zero()) throw std::logic_error("build_poly: construction produced the zero polynomial");
  return poly;
}

PermMap expected_map(Family f, const Generator& g, i64 k_in) {
  require_family_field(g);
  const Field& F = g.field();
  const i64 m = static_cast<i64>(g.m());
  const i64 k = normalize_k(k_in, g.m());

  PermMap map;
  map.images.resize(F.q());
  map.images[0] = F.zero();

  const i64 fc = static_cast<i64>(fixed_coset(f));
  for (i64 i = 0; i < m; ++i) {
    const Elem x = g.gamma_pow(3 * i + fc);
    map.images[x.v] = x;
  }

  for (i64 i = 0; i < m; ++i) {
    i64 le = 0, re = 0;
    switch (f) {
      case Family::T1: le = 3 * i + 1; re = 3 * (i + k) + 2; break;
      case Family::T2: le = 3 * i;     re = 3 * (i + k) + 2; break;
      case Family::T3: le = 3 * i;     re = 3 * (i + k) + 1; break;
      case Family::S1: le = 3 * i + 1; re = 3 * (k - i) - 1; break;
      case Family::S2: le = 3 * i;     re = 3 * (k - i) + 2; break;
      case Family::S3: le = 3 * i;     re = 3 * (k - i) + 1; break;
    }
    const Elem lhs = g.gamma_pow(le);
    const Elem rhs = g.gamma_pow(re);
    map.images[lhs.v] = rhs;
    map.images[rhs.v] = lhs;
  }
  return map;
}

Record make_record(Family f, const Generator& g, i64 k) {
  Record rec;
  rec.family = f;
  rec.gamma = g.gamma();
  rec.k = static_cast<std::uint64_t>(normalize_k(k, g.m()));
  rec.coeffs = family_coeffs(f, g, k);
  rec.poly = build_poly(f, g, k);
  return rec;
}

std::vector<Record> all_records(const Generator& g) {
  require_family_field(g);
  const std::uint64_t m = g.m();
  std::vector<Record> out;
  out.reserve(6 * m);
  for (Family f : kAllFamilies) {
    for (std::uint64_t k = 0; k < m; ++k) out.push_back(make_record(f, g, static_cast<i64>(k)));
  }
  return out;
}

}  // namespace invol
