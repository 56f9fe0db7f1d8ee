#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "minlocal/common.hpp"
#include "minlocal/padic.hpp"
#include "minlocal/rational.hpp"

namespace minlocal {

/// Abstract root of unity e^(2*pi*i * turns), stored as a reduced fraction of
/// a full turn in [0, 1). Used where roots exist in the field but have no
/// exact coordinate representation (odd-order roots in C, the cyclic
/// mu-groups of Laurent-series fields). Scalars of this kind support the
/// group operations (product, inverse, power) and nothing else.
class RootLabel {
 public:
  explicit RootLabel(Rational turns) : turns_(normalize(std::move(turns))) {}

  const Rational& turns() const { return turns_; }
  long long order() const { return turns_.den().convert_to<long long>(); }

  RootLabel times(const RootLabel& o) const { return RootLabel(turns_ + o.turns_); }
  RootLabel inverse() const { return RootLabel(-turns_); }
  RootLabel pow(long long e) const { return RootLabel(turns_ * Rational(e)); }

  bool operator==(const RootLabel& o) const { return turns_ == o.turns_; }

  std::string str() const { return "e(" + turns_.str() + ")"; }

  std::complex<double> to_complex() const {
    double t = 6.283185307179586476925286766559 * turns_.to_double();
    return {std::cos(t), std::sin(t)};
  }

 private:
  static Rational normalize(Rational t) {
    // reduce mod 1 into [0,1)
    BigInt q = t.num() / t.den();
    t = t - Rational(q);
    if (t.sign() < 0) t = t + Rational(1);
    return t;
  }

  Rational turns_;
};

enum class ScalarKind { rational, gaussian, padic, root, arch_float };

/// Tagged exact scalar: the element type of every matrix in this library.
///
/// Rational and Gaussian-rational values are exact; p-adic values carry their
/// own precision; root labels are abstract members of a cyclic group;
/// arch_float is a plain binary float reserved for archimedean numerics and
/// refuses to mix with the exact kinds.
///
/// Exact rational constants embed into any kind on contact (0 and 1 in
/// particular act as universal additive/multiplicative identities), so
/// identity matrices and accumulator zeros combine with p-adic data without
/// losing precision.
class Scalar {
 public:
  Scalar() : v_(Rational()) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(long long n) : v_(Rational(n)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(GaussianRational z) {
    if (z.is_real())
      v_ = z.re();
    else
      v_ = std::move(z);
  }
  Scalar(PAdic x) : v_(std::move(x)) {}
  Scalar(RootLabel l) { assign_root(std::move(l)); }
  static Scalar arch(double x) {
    Scalar s;
    s.v_ = x;
    return s;
  }

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
  bool is_exact() const { return kind() != ScalarKind::arch_float; }

  const Rational& rational() const { return get<Rational>("rational"); }
  const GaussianRational& gaussian() const { return get<GaussianRational>("gaussian"); }
  const PAdic& padic() const { return get<PAdic>("p-adic"); }
  const RootLabel& root() const { return get<RootLabel>("root label"); }
  double arch_value() const { return get<double>("arch float"); }

  /// The value as a Gaussian rational (rationals included), if it is one.
  std::optional<GaussianRational> as_gaussian() const {
    if (kind() == ScalarKind::rational) return GaussianRational(rational(), Rational(0));
    if (kind() == ScalarKind::gaussian) return gaussian();
    return std::nullopt;
  }

  Tri is_zero() const {
    switch (kind()) {
      case ScalarKind::rational:
        return rational().is_zero() ? Tri::yes : Tri::no;
      case ScalarKind::gaussian:
        return Tri::no;  // real Gaussians demote to rational on construction
      case ScalarKind::padic:
        return padic().is_zero_at_precision() ? Tri::unknown : Tri::no;
      case ScalarKind::root:
        return Tri::no;
      default:
        return arch_value() == 0.0 ? Tri::yes : Tri::no;
    }
  }

  Tri is_one() const { return eq(*this, Scalar(1)); }

  Scalar operator-() const {
    switch (kind()) {
      case ScalarKind::rational:
        return Scalar(-rational());
      case ScalarKind::gaussian:
        return Scalar(-gaussian());
      case ScalarKind::padic:
        return Scalar(-padic());
      case ScalarKind::root:
        return Scalar(root().times(RootLabel(Rational(1, 2))));
      default:
        return arch(-arch_value());
    }
  }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    switch (kind()) {
      case ScalarKind::rational:
        return Scalar(rational().inverse());
      case ScalarKind::gaussian:
        return Scalar(gaussian().inverse());
      case ScalarKind::padic:
        return Scalar(padic().inv());
      case ScalarKind::root:
        return Scalar(root().inverse());
      default:
        if (arch_value() == 0.0) throw DivisionByZero("inverse of float zero");
        return arch(1.0 / arch_value());
    }
  }

  Scalar pow(long long e) const {
    if (kind() == ScalarKind::padic) return Scalar(padic().pow(e));
    if (kind() == ScalarKind::root) return Scalar(root().pow(e));
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  /// Equality that is exact for exact kinds and at-shared-precision for
  /// p-adic values; unknown only when precision genuinely cannot decide.
  static Tri eq(const Scalar& a, const Scalar& b) {
    if (a.kind() == ScalarKind::root || b.kind() == ScalarKind::root) {
      if (a.kind() == b.kind()) return a.root() == b.root() ? Tri::yes : Tri::no;
      return Tri::no;  // labels of order >= 3 never equal a rational/Gaussian value
    }
    if (a.kind() == ScalarKind::arch_float || b.kind() == ScalarKind::arch_float) {
      if (a.kind() != b.kind()) throw KindMismatch("comparing float with exact scalar");
      return a.arch_value() == b.arch_value() ? Tri::yes : Tri::no;
    }
    Tri z = (a - b).is_zero();
    if (z == Tri::unknown) return Tri::yes;  // equal at the shared precision
    return z;
  }

  bool operator==(const Scalar& o) const { return eq(*this, o) == Tri::yes; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double to_double() const {
    switch (kind()) {
      case ScalarKind::rational:
        return rational().to_double();
      case ScalarKind::arch_float:
        return arch_value();
      default:
        throw KindMismatch("no real embedding for this scalar kind");
    }
  }

  std::complex<double> to_complex() const {
    switch (kind()) {
      case ScalarKind::rational:
        return {rational().to_double(), 0.0};
      case ScalarKind::gaussian:
        return {gaussian().re().to_double(), gaussian().im().to_double()};
      case ScalarKind::root:
        return root().to_complex();
      case ScalarKind::arch_float:
        return {arch_value(), 0.0};
      default:
        throw KindMismatch("no complex embedding for a p-adic scalar");
    }
  }

  std::string str() const {
    switch (kind()) {
      case ScalarKind::rational:
        return rational().str();
      case ScalarKind::gaussian:
        return gaussian().str();
      case ScalarKind::padic:
        return padic().str();
      case ScalarKind::root:
        return root().str();
      default: {
        std::string s = std::to_string(arch_value());
        return s;
      }
    }
  }

 private:
  template <class T>
  const T& get(const char* name) const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw KindMismatch(std::string("scalar is not of kind ") + name);
  }

  // Labels of order 1, 2, 4 have exact coordinates; keep those canonical.
  void assign_root(RootLabel l) {
    long long d = l.order();
    if (d == 1) {
      v_ = Rational(1);
    } else if (d == 2) {
      v_ = Rational(-1);
    } else if (d == 4) {
      v_ = GaussianRational(Rational(0), l.turns() == Rational(1, 4) ? Rational(1) : Rational(-1));
    } else {
      v_ = std::move(l);
    }
  }

  // Exact rational constant -> p-adic with absolute precision >= target.
  static PAdic embed_rational(const Rational& r, long long p, long long abs_target) {
    long long v = r.valuation(p);
    long long rel = std::max<long long>(1, abs_target - v);
    return PAdic::from_rational(r, p, static_cast<int>(rel));
  }

  // The rational +-1 / Gaussian +-i values that act on root labels.
  static std::optional<Rational> root_turns_of(const Scalar& s) {
    if (s.kind() == ScalarKind::rational) {
      if (s.rational().is_one()) return Rational(0);
      if (s.rational() == Rational(-1)) return Rational(1, 2);
    } else if (s.kind() == ScalarKind::gaussian) {
      const GaussianRational& z = s.gaussian();
      if (z.re().is_zero() && z.im().is_one()) return Rational(1, 4);
      if (z.re().is_zero() && z.im() == Rational(-1)) return Rational(3, 4);
    }
    return std::nullopt;
  }

  std::variant<Rational, GaussianRational, PAdic, RootLabel, double> v_;
};

inline Scalar Scalar::operator+(const Scalar& o) const {
  // exact zeros are universal additive identities
  if (kind() == ScalarKind::rational && rational().is_zero()) return o;
  if (o.kind() == ScalarKind::rational && o.rational().is_zero()) return *this;

  ScalarKind ka = kind(), kb = o.kind();
  if (ka == kb) {
    switch (ka) {
      case ScalarKind::rational:
        return Scalar(rational() + o.rational());
      case ScalarKind::gaussian:
        return Scalar(gaussian() + o.gaussian());
      case ScalarKind::padic:
        return Scalar(padic() + o.padic());
      case ScalarKind::root: {
        // the only representable sum of two abstract roots is x + (-x) = 0
        if (root().times(RootLabel(Rational(1, 2))) == o.root()) return Scalar(0);
        throw KindMismatch("sum of abstract roots of unity is not representable");
      }
      default:
        return arch(arch_value() + o.arch_value());
    }
  }
  if (ka == ScalarKind::rational && kb == ScalarKind::gaussian)
    return Scalar(GaussianRational(rational(), Rational(0)) + o.gaussian());
  if (ka == ScalarKind::gaussian && kb == ScalarKind::rational) return o + *this;
  if (ka == ScalarKind::rational && kb == ScalarKind::padic) {
    const PAdic& x = o.padic();
    return Scalar(embed_rational(rational(), x.p(), x.abs_precision()) + x);
  }
  if (ka == ScalarKind::padic && kb == ScalarKind::rational) return o + *this;
  throw KindMismatch("cannot add scalars of kinds " + str() + " and " + o.str());
}

inline Scalar Scalar::operator*(const Scalar& o) const {
  // exact 0 and 1 are universal absorbing/identity elements
  if (kind() == ScalarKind::rational) {
    if (rational().is_zero()) return Scalar(0);
    if (rational().is_one()) return o;
  }
  if (o.kind() == ScalarKind::rational) {
    if (o.rational().is_zero()) return Scalar(0);
    if (o.rational().is_one()) return *this;
  }

  ScalarKind ka = kind(), kb = o.kind();
  if (ka == kb) {
    switch (ka) {
      case ScalarKind::rational:
        return Scalar(rational() * o.rational());
      case ScalarKind::gaussian:
        return Scalar(gaussian() * o.gaussian());
      case ScalarKind::padic:
        return Scalar(padic() * o.padic());
      case ScalarKind::root:
        return Scalar(root().times(o.root()));
      default:
        return arch(arch_value() * o.arch_value());
    }
  }
  if (ka == ScalarKind::root || kb == ScalarKind::root) {
    const Scalar& lbl = ka == ScalarKind::root ? *this : o;
    const Scalar& other = ka == ScalarKind::root ? o : *this;
    if (auto t = root_turns_of(other)) return Scalar(lbl.root().times(RootLabel(*t)));
    throw KindMismatch("abstract root of unity times non-root scalar");
  }
  if (ka == ScalarKind::rational && kb == ScalarKind::gaussian)
    return Scalar(GaussianRational(rational(), Rational(0)) * o.gaussian());
  if (ka == ScalarKind::gaussian && kb == ScalarKind::rational) return o * *this;
  if (ka == ScalarKind::rational && kb == ScalarKind::padic) {
    const PAdic& x = o.padic();
    if (x.is_zero_at_precision())
      return Scalar(PAdic::bounded_zero(x.p(), x.zero_bound() + rational().valuation(x.p())));
    return Scalar(PAdic::from_rational(rational(), x.p(), x.precision()) * x);
  }
  if (ka == ScalarKind::padic && kb == ScalarKind::rational) return o * *this;
  throw KindMismatch("cannot multiply scalars of kinds " + str() + " and " + o.str());
}

/// Canonical scalar for the root of unity e^(2*pi*i*j/k): exact where exact
/// coordinates exist, an abstract label otherwise.
inline Scalar make_root(long long j, long long k) {
  if (k <= 0) throw DomainError("root of unity with nonpositive order");
  return Scalar(RootLabel(Rational(j, k)));
}

inline Tri tri_eq(const Scalar& a, const Scalar& b) { return Scalar::eq(a, b); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Parses "-3/4"-style exact rationals.
std::optional<Rational> parse_rational(std::string_view text);

/// Parses Gaussian rationals: "1+2i", "-i", "3-1/2i", "2i", "5".
std::optional<GaussianRational> parse_gaussian(std::string_view text);

}  // namespace minlocal
