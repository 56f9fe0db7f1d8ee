#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "minlocal/scalar.hpp"

namespace minlocal {

enum class FieldKind {
  rationals,           // Q with the real topology
  rationals_padic,     // Q with the p-adic topology
  gaussian_rationals,  // Q(i) inside C
  reals,
  complexes,
  padics,          // Q_p
  laurent_series,  // F_q((t)), represented only through its roots-of-unity data
  abstract_subfield
};

/// A named subfield of a local field, with its declared completion and
/// characteristic. The concrete catalog covers the seven kinds with canonical
/// text forms (Q, Q@p=5, Q(i), R, C, Qp=5, Fq((t))@q=4); abstract_subfield
/// admits any further dense subfield described by its completion and a
/// roots-of-unity counting function.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() { return FieldDescriptor(FieldKind::rationals); }
  static FieldDescriptor rationals_padic(long long p);
  static FieldDescriptor gaussian_rationals() {
    return FieldDescriptor(FieldKind::gaussian_rationals);
  }
  static FieldDescriptor reals() { return FieldDescriptor(FieldKind::reals); }
  static FieldDescriptor complexes() { return FieldDescriptor(FieldKind::complexes); }
  static FieldDescriptor padics(long long p);
  static FieldDescriptor laurent_series(long long q);
  static FieldDescriptor abstract_subfield(const FieldDescriptor& completion,
                                           std::function<long long(long long)> roots_count);

  FieldKind kind() const { return kind_; }
  long long p() const { return p_; }
  long long q() const { return q_; }
  long long characteristic() const { return char_; }

  const FieldDescriptor& abstract_completion() const;
  long long abstract_roots_count(long long n) const;

  bool operator==(const FieldDescriptor& o) const;
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  /// Canonical text form used by the CLI.
  std::string str() const;
  static std::optional<FieldDescriptor> parse(std::string_view text);

 private:
  explicit FieldDescriptor(FieldKind k) : kind_(k) {}

  FieldKind kind_;
  long long p_ = 0;     // rationals_padic / padics
  long long q_ = 0;     // laurent_series (prime power)
  long long char_ = 0;  // 0 or the prime base of q
  std::shared_ptr<const FieldDescriptor> completion_;            // abstract_subfield
  std::function<long long(long long)> roots_count_;              // abstract_subfield
};

/// The declared complete field; a fixed point on complete inputs.
FieldDescriptor completion_of(const FieldDescriptor& field);

bool is_complete(const FieldDescriptor& field);

/// True for every catalog entry: they are all subfields of local fields.
bool is_locally_retrobounded(const FieldDescriptor& field);

bool is_subfield_of_reals(const FieldDescriptor& field);

/// Additive valuation (nullopt = +infinity / zero-at-precision) and the
/// normalized absolute value of a scalar in the given field. Non-archimedean
/// kinds use |a| = p^(-v(a)); archimedean kinds report the usual modulus with
/// a conventional zero valuation.
std::pair<std::optional<long long>, double> valuation_abs(const Scalar& a,
                                                          const FieldDescriptor& field);

bool is_prime(long long n);

/// q = p^f with p prime, f >= 1; returns p.
std::optional<long long> prime_power_base(long long q);

}  // namespace minlocal
