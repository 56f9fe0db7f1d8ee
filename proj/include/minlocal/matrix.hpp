#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

#include "minlocal/cyclotomic.hpp"
#include "minlocal/field.hpp"
#include "minlocal/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<minlocal::Scalar> {
  using Real = minlocal::Scalar;
  using NonInteger = minlocal::Scalar;
  using Nested = minlocal::Scalar;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return minlocal::Scalar(0); }
  static inline Real dummy_precision() { return minlocal::Scalar(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace minlocal {

/// Dense exact-scalar matrix; all group computations run on this type.
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class GroupKind { SL, PSL, SUT, SUT_mod_center, PGL, UI, Heisenberg };

const char* to_string(GroupKind k);
std::optional<GroupKind> parse_group(std::string_view text);

/// Determinant, exact for exact kinds (fraction-free elimination) and
/// precision-tracked for p-adic entries (minimal-valuation pivoting).
Scalar exact_det(const Mat& g);

/// Inverse by exact Gauss-Jordan elimination; p-adic pivots are chosen by
/// minimal valuation. Throws DomainError when singular at the available
/// precision.
Mat exact_inverse(const Mat& g);

Mat mat_pow(const Mat& g, long long e);

/// Entrywise equality (at shared precision for p-adic entries).
Tri mats_equal(const Mat& a, const Mat& b);

Mat scalar_times(const Scalar& c, const Mat& g);

/// Group membership, three-valued: unknown means a p-adic entry is zero
/// within precision exactly where the predicate needs its exact status.
Tri membership(const Mat& g, GroupKind kind);

/// g in SUT(n,F) as (unitriangular, diagonal det-1): g = b * a with
/// a = diag(g) and b = g * a^(-1); the factorization is unique.
std::pair<Mat, Mat> sut_factor(const Mat& g);

/// Element (b, a) of F x| F^x with multiplication
/// (b1,a1)(b2,a2) = (b1 + a1^2 b2, a1 a2) and identity (0, 1).
struct SemidirectElement {
  Scalar b;
  Scalar a;

  SemidirectElement(Scalar b_, Scalar a_) : b(std::move(b_)), a(std::move(a_)) {
    if (a.is_zero() == Tri::yes) throw DomainError("semidirect element with a = 0");
  }
  static SemidirectElement identity() { return {Scalar(0), Scalar(1)}; }

  std::string str() const { return "(" + b.str() + ", " + a.str() + ")"; }
};

inline SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y) {
  return {x.b + x.a * x.a * y.b, x.a * y.a};
}

inline SemidirectElement inverse(const SemidirectElement& x) {
  Scalar ai = x.a.inverse();
  return {-(ai * ai * x.b), ai};
}

inline bool operator==(const SemidirectElement& x, const SemidirectElement& y) {
  return x.b == y.b && x.a == y.a;
}
inline bool operator!=(const SemidirectElement& x, const SemidirectElement& y) {
  return !(x == y);
}
inline std::ostream& operator<<(std::ostream& os, const SemidirectElement& x) {
  return os << x.str();
}

/// Isomorphism SUT(2,F) -> F x| F^x: [[a, c],[0, 1/a]] |-> (c*a, a).
SemidirectElement sut2_to_semidirect(const Mat& g);

/// Inverse of the map above: (b, a) |-> [[a, b/a],[0, 1/a]].
Mat semidirect_to_sut2(const SemidirectElement& x);

Mat commutator(const Mat& g, const Mat& h);
SemidirectElement commutator(const SemidirectElement& g, const SemidirectElement& h);

/// For diagonal B with det 1 and 0 <= i < n-1: the (i, i+1) entry of
/// B E_{i,i+1} B^(-1), which equals B_ii / B_{i+1,i+1}; the identity is
/// re-checked on every call.
Scalar diag_conj_entry(const Mat& B, int i);

/// The center of SL(n,F): scalar matrices over the n-th roots of unity.
std::vector<Mat> center_of_sl(const FieldDescriptor& field, int n,
                              int precision = kDefaultPrecision);

/// g in UI(n+2,F) as (central-block embedding x, Heisenberg part h = x^(-1) g).
std::pair<Mat, Mat> ui_heisenberg_factor(const Mat& g);

/// Row-major text form: rows split by ';', entries by ','; exact fractions,
/// Gaussian entries as a+bi.
Mat parse_matrix(const FieldDescriptor& field, std::string_view text);
std::string format_matrix(const Mat& g);

/// Embeds nonzero rational entries into Q_p at the given relative precision;
/// exact zeros are kept exact.
Mat to_padic_matrix(const Mat& g, long long p, int precision);

}  // namespace minlocal
