#include "minlocal/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace minlocal {

namespace {

// 64-bit modular arithmetic for the enumeration oracles
using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
  }
  return r;
}

u64 pow_ll(u64 b, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long padic_valuation_of(long long n, long long p) {
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Root-of-unity exponent w(F): |mu(F)| for the fields whose full torsion is
// finite cyclic. Q and R contain only {1,-1}; Q(i) adds {i,-i}; Q_p has the
// Teichmueller group of order p-1 when p > 2 and only {1,-1} when p = 2;
// F_q((t)) has the order-(q-1) torsion of F_q.
long long torsion_exponent(const FieldDescriptor& f) {
  switch (f.kind()) {
    case FieldKind::rationals:
    case FieldKind::rationals_padic:
    case FieldKind::reals:
      return 2;
    case FieldKind::gaussian_rationals:
      return 4;
    case FieldKind::padics:
      return f.p() == 2 ? 2 : f.p() - 1;
    case FieldKind::laurent_series:
      return f.q() - 1;
    default:
      throw DomainError("no closed torsion exponent for this field kind");
  }
}

// solutions of x^n = 1 among the units of Z/p^level
std::vector<u64> unit_roots(long long p, long long n, int level) {
  u64 m = pow_ll(static_cast<u64>(p), level);
  std::vector<u64> out;
  for (u64 x = 1; x < m; ++x) {
    if (x % static_cast<u64>(p) == 0) continue;
    if (powmod(x, static_cast<u64>(n), m) == 1) out.push_back(x);
  }
  return out;
}

}  // namespace

long long strip_char_factors(long long n, long long characteristic) {
  if (characteristic == 0) return n;
  while (n % characteristic == 0) n /= characteristic;
  return n;
}

long long mu_order(const FieldDescriptor& field, long long n) {
  if (n < 1) throw DomainError("mu_order: n must be positive");
  if (field.kind() == FieldKind::abstract_subfield) return field.abstract_roots_count(n);
  long long reduced = strip_char_factors(n, field.characteristic());
  if (field.kind() == FieldKind::complexes) return reduced;
  return std::gcd(reduced, torsion_exponent(field));
}

RootsOfUnity mu_witnesses(const FieldDescriptor& field, long long n, int precision) {
  if (n < 1) throw DomainError("mu_witnesses: n must be positive");
  if (precision < 1) throw InsufficientPrecision("mu_witnesses: precision must be >= 1");
  RootsOfUnity r{field, n, mu_order(field, n), {}};
  long long k = r.order;
  switch (field.kind()) {
    case FieldKind::rationals:
    case FieldKind::rationals_padic:
    case FieldKind::reals:
      r.witnesses.emplace_back(1);
      if (k == 2) r.witnesses.emplace_back(-1);
      break;
    case FieldKind::gaussian_rationals:
      r.witnesses.emplace_back(1);
      if (k >= 2) r.witnesses.emplace_back(-1);
      if (k == 4) {
        r.witnesses.emplace_back(GaussianRational(Rational(0), Rational(1)));
        r.witnesses.emplace_back(GaussianRational(Rational(0), Rational(-1)));
      }
      break;
    case FieldKind::padics: {
      long long p = field.p();
      if (p == 2) {
        r.witnesses.emplace_back(1);
        if (k == 2)
          r.witnesses.emplace_back(PAdic::from_unit(2, 0, int_pow(2, precision) - 1, precision));
      } else {
        std::vector<PAdic> lifts;
        for (long long a = 1; a < p; ++a)
          if (powmod(static_cast<u64>(a), static_cast<u64>(k), static_cast<u64>(p)) == 1)
            lifts.push_back(teichmuller(a, p, precision));
        std::sort(lifts.begin(), lifts.end(),
                  [](const PAdic& x, const PAdic& y) { return x.unit() < y.unit(); });
        for (auto& w : lifts) r.witnesses.emplace_back(std::move(w));
      }
      break;
    }
    case FieldKind::complexes:
    case FieldKind::laurent_series:
    case FieldKind::abstract_subfield:
      for (long long j = 0; j < k; ++j) r.witnesses.push_back(make_root(j, k));
      break;
  }
  if (static_cast<long long>(r.witnesses.size()) != k)
    throw OracleFailure("mu_witnesses produced the wrong number of elements");
  return r;
}

long long hensel_root_count(long long p, long long n, int start_level) {
  if (!is_prime(p)) throw DomainError("hensel_root_count: p must be prime");
  if (n < 1) throw DomainError("hensel_root_count: n must be positive");
  int start = std::max(start_level, 1);
  int margin = static_cast<int>(padic_valuation_of(n, p)) + 3;
  int cap = start + margin + 5;

  std::set<u64> prev_image;
  for (int level = start; level <= cap; ++level) {
    // survivors at this level: reductions of solutions from `margin` levels up
    std::vector<u64> deep = unit_roots(p, n, level + margin);
    u64 m = pow_ll(static_cast<u64>(p), level);
    std::set<u64> image;
    for (u64 x : deep) image.insert(x % m);

    if (level > start && image.size() == prev_image.size()) {
      // unique lifting: each survivor one level down has exactly one preimage
      u64 m_down = pow_ll(static_cast<u64>(p), level - 1);
      std::set<u64> reduced;
      for (u64 x : image) reduced.insert(x % m_down);
      if (reduced == prev_image && reduced.size() == image.size())
        return static_cast<long long>(image.size());
    }
    prev_image = std::move(image);
  }
  throw OracleFailure("hensel_root_count did not stabilize below the level cap");
}

std::optional<long long> power_class_index(const FieldDescriptor& field, long long n) {
  if (n < 1) throw DomainError("power_class_index: n must be positive");
  if (!is_complete(field)) throw DomainError("power_class_index requires a complete field");
  switch (field.kind()) {
    case FieldKind::reals:
      return n % 2 == 0 ? 2 : 1;
    case FieldKind::complexes:
      return 1;
    case FieldKind::laurent_series: {
      if (n % field.characteristic() == 0) return std::nullopt;  // infinite index
      // value group contributes n; units split off F_q^x, and the principal
      // units are n-divisible when char does not divide n
      return n * std::gcd(n, field.q() - 1);
    }
    case FieldKind::padics: {
      long long p = field.p();
      long long v = padic_valuation_of(n, p);
      int level = static_cast<int>(v) + (p == 2 ? 5 : 3);
      u64 m = pow_ll(static_cast<u64>(p), level);
      if (m > (1ull << 27)) throw DomainError("power_class_index: enumeration modulus too large");
      std::set<u64> powers;
      u64 unit_count = 0;
      for (u64 x = 1; x < m; ++x) {
        if (x % static_cast<u64>(p) == 0) continue;
        ++unit_count;
        powers.insert(powmod(x, static_cast<u64>(n), m));
      }
      if (unit_count % powers.size() != 0)
        throw OracleFailure("unit power classes do not partition the unit group");
      long long unit_index = static_cast<long long>(unit_count / powers.size());
      return n * unit_index;  // value-group index times unit-group index
    }
    default:
      throw DomainError("power_class_index: unsupported field");
  }
}

}  // namespace minlocal
