#pragma once

#include <optional>
#include <vector>

#include "minlocal/field.hpp"
#include "minlocal/scalar.hpp"

namespace minlocal {

/// The group mu_n(F) of n-th roots of unity: its order and one witness per
/// element (exact scalars, Teichmueller lifts, or abstract labels).
struct RootsOfUnity {
  FieldDescriptor field;
  long long n = 1;
  long long order = 1;
  std::vector<Scalar> witnesses;
};

/// |mu_n(F)| by the closed per-field formulas: gcd of n (with char-power
/// factors stripped) against the field's root-of-unity exponent; all of C for
/// the complexes; delegated for abstract subfields.
long long mu_order(const FieldDescriptor& field, long long n);

RootsOfUnity mu_witnesses(const FieldDescriptor& field, long long n,
                          int precision = kDefaultPrecision);

/// Independent oracle for mu_order over Q_p: counts solutions of x^n = 1 in
/// Z/p^k that persist in the inverse limit, raising the level until two
/// consecutive levels agree with unique lifting. Never consults the gcd
/// formulas.
long long hensel_root_count(long long p, long long n, int start_level = 1);

/// |F^x / M_n| for complete fields, M_n the n-th powers; nullopt = infinite
/// (which occurs exactly in characteristic p dividing n).
std::optional<long long> power_class_index(const FieldDescriptor& field, long long n);

/// n with every factor of char(F) removed; in characteristic p the p-power
/// part of x^n - 1 contributes no roots beyond x = 1.
long long strip_char_factors(long long n, long long characteristic);

}  // namespace minlocal
