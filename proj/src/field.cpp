#include "minlocal/field.hpp"

#include <cmath>

namespace minlocal {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<long long> prime_power_base(long long q) {
  if (q < 2) return std::nullopt;
  for (long long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      long long m = q;
      while (m % d == 0) m /= d;
      return m == 1 ? std::optional<long long>(d) : std::nullopt;
    }
  }
  return q;  // q itself is prime
}

FieldDescriptor FieldDescriptor::rationals_padic(long long p) {
  if (!is_prime(p)) throw DomainError("Q@p: p must be prime");
  FieldDescriptor f(FieldKind::rationals_padic);
  f.p_ = p;
  return f;
}

FieldDescriptor FieldDescriptor::padics(long long p) {
  if (!is_prime(p)) throw DomainError("Qp: p must be prime");
  FieldDescriptor f(FieldKind::padics);
  f.p_ = p;
  return f;
}

FieldDescriptor FieldDescriptor::laurent_series(long long q) {
  auto base = prime_power_base(q);
  if (!base) throw DomainError("Fq((t)): q must be a prime power");
  FieldDescriptor f(FieldKind::laurent_series);
  f.q_ = q;
  f.char_ = *base;
  return f;
}

FieldDescriptor FieldDescriptor::abstract_subfield(
    const FieldDescriptor& completion, std::function<long long(long long)> roots_count) {
  if (!is_complete(completion))
    throw DomainError("abstract subfield: the declared completion must be complete");
  FieldDescriptor f(FieldKind::abstract_subfield);
  f.completion_ = std::make_shared<const FieldDescriptor>(completion);
  f.roots_count_ = std::move(roots_count);
  f.char_ = completion.characteristic();
  return f;
}

const FieldDescriptor& FieldDescriptor::abstract_completion() const {
  if (kind_ != FieldKind::abstract_subfield || !completion_)
    throw DomainError("not an abstract subfield");
  return *completion_;
}

long long FieldDescriptor::abstract_roots_count(long long n) const {
  if (kind_ != FieldKind::abstract_subfield || !roots_count_)
    throw DomainError("not an abstract subfield");
  return roots_count_(n);
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
  if (kind_ != o.kind_ || p_ != o.p_ || q_ != o.q_) return false;
  if (kind_ == FieldKind::abstract_subfield)
    return completion_ == o.completion_;  // identity; counting functions are opaque
  return true;
}

std::string FieldDescriptor::str() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::rationals_padic:
      return "Q@p=" + std::to_string(p_);
    case FieldKind::gaussian_rationals:
      return "Q(i)";
    case FieldKind::reals:
      return "R";
    case FieldKind::complexes:
      return "C";
    case FieldKind::padics:
      return "Qp=" + std::to_string(p_);
    case FieldKind::laurent_series:
      return "Fq((t))@q=" + std::to_string(q_);
    default:
      return "subfield(" + completion_->str() + ")";
  }
}

std::optional<FieldDescriptor> FieldDescriptor::parse(std::string_view text) {
  auto parse_param = [](std::string_view s) -> std::optional<long long> {
    long long v = 0;
    if (s.empty()) return std::nullopt;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > 1'000'000'000) return std::nullopt;
    }
    return v;
  };
  if (text == "Q") return rationals();
  if (text == "Q(i)") return gaussian_rationals();
  if (text == "R") return reals();
  if (text == "C") return complexes();
  if (text.rfind("Q@p=", 0) == 0) {
    auto p = parse_param(text.substr(4));
    if (p && is_prime(*p)) return rationals_padic(*p);
    return std::nullopt;
  }
  if (text.rfind("Qp=", 0) == 0) {
    auto p = parse_param(text.substr(3));
    if (p && is_prime(*p)) return padics(*p);
    return std::nullopt;
  }
  if (text.rfind("Fq((t))@q=", 0) == 0) {
    auto q = parse_param(text.substr(10));
    if (q && prime_power_base(*q)) return laurent_series(*q);
    return std::nullopt;
  }
  return std::nullopt;
}

FieldDescriptor completion_of(const FieldDescriptor& field) {
  switch (field.kind()) {
    case FieldKind::rationals:
      return FieldDescriptor::reals();
    case FieldKind::rationals_padic:
      return FieldDescriptor::padics(field.p());
    case FieldKind::gaussian_rationals:
      return FieldDescriptor::complexes();
    case FieldKind::abstract_subfield:
      return field.abstract_completion();
    default:
      return field;  // R, C, Q_p, F_q((t)) are complete
  }
}

bool is_complete(const FieldDescriptor& field) {
  switch (field.kind()) {
    case FieldKind::reals:
    case FieldKind::complexes:
    case FieldKind::padics:
    case FieldKind::laurent_series:
      return true;
    default:
      return false;
  }
}

bool is_locally_retrobounded(const FieldDescriptor&) {
  // every catalog entry is a subfield of a local field
  return true;
}

bool is_subfield_of_reals(const FieldDescriptor& field) {
  if (field.kind() == FieldKind::rationals || field.kind() == FieldKind::reals) return true;
  if (field.kind() == FieldKind::abstract_subfield)
    return field.abstract_completion().kind() == FieldKind::reals;
  return false;
}

std::pair<std::optional<long long>, double> valuation_abs(const Scalar& a,
                                                          const FieldDescriptor& field) {
  switch (field.kind()) {
    case FieldKind::rationals_padic:
    case FieldKind::padics: {
      long long p = field.p();
      if (a.kind() == ScalarKind::rational) {
        if (a.rational().is_zero()) return {std::nullopt, 0.0};
        long long v = a.rational().valuation(p);
        return {v, std::pow(static_cast<double>(p), static_cast<double>(-v))};
      }
      if (a.kind() == ScalarKind::padic) {
        const PAdic& x = a.padic();
        if (x.p() != p) throw KindMismatch("p-adic scalar with a different prime");
        if (x.is_zero_at_precision()) return {std::nullopt, 0.0};
        long long v = x.valuation();
        return {v, std::pow(static_cast<double>(p), static_cast<double>(-v))};
      }
      throw KindMismatch("scalar kind does not match a p-adic field");
    }
    case FieldKind::rationals:
    case FieldKind::reals: {
      double x;
      if (a.kind() == ScalarKind::rational)
        x = a.rational().to_double();
      else if (a.kind() == ScalarKind::arch_float)
        x = a.arch_value();
      else
        throw KindMismatch("scalar kind does not match a real field");
      if (x == 0.0) return {std::nullopt, 0.0};
      return {0, std::abs(x)};
    }
    case FieldKind::gaussian_rationals:
    case FieldKind::complexes: {
      std::complex<double> z = a.to_complex();
      if (z == std::complex<double>(0.0, 0.0)) return {std::nullopt, 0.0};
      return {0, std::abs(z)};
    }
    default:
      throw DomainError("no scalar arithmetic for this field kind");
  }
}

}  // namespace minlocal
