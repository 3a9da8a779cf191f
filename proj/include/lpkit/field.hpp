#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpkit/errors.hpp"

namespace lpkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// BigRat with the sign carried by the numerator; throws on zero denominator.
BigRat make_rat(BigInt num, BigInt den);

enum class FieldKind { Rationals, QuadraticExt, FiniteField };

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

/// An exact field: the rationals Q, a quadratic extension Q(sqrt(D)), or a
/// finite field GF(p^k) presented as GF(p)[x] modulo a monic irreducible
/// polynomial.  Instances are immutable; scalars keep a shared pointer to
/// their field and all operations are pure.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();

  /// D must be neither 0, 1 nor a perfect square.
  static FieldPtr quadratic(const BigInt& d);

  /// GF(p^k) with the default modulus: the least monic irreducible polynomial
  /// of degree k over GF(p) in the coefficient-encoding order (this yields
  /// x^2+x+1 for GF(4) and x^4+x+1 for GF(16)).
  static FieldPtr finite(const BigInt& p, int k);

  /// GF(p^k) with caller-supplied modulus, coefficients c0..ck ascending,
  /// monic, verified irreducible at construction (k <= 8).
  static FieldPtr finite(const BigInt& p, int k, std::vector<BigInt> modulus);

  FieldKind kind() const { return kind_; }
  /// 0 for Q and Q(sqrt(D)), p for GF(p^k).
  BigInt characteristic() const;

  const BigInt& radicand() const;               // QuadraticExt only
  const BigInt& prime() const;                  // FiniteField only
  int extension_degree() const;                 // FiniteField only
  const std::vector<BigInt>& modulus() const;   // FiniteField only
  BigInt order() const;                         // FiniteField only: p^k

  bool same(const Field& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const BigInt& v) const;
  Scalar from_rational(const BigRat& v) const;            // Q, Q(sqrt(D))
  Scalar quadratic_element(BigRat a, BigRat b) const;     // a + b*sqrt(D)
  Scalar gf_from_coeffs(std::vector<BigInt> coeffs) const;

  /// Canonical enumeration of a finite field: index in [0, p^k) read as base-p
  /// digits, least significant digit = constant coefficient.
  Scalar element_at(const BigInt& index) const;

  /// Text codec used throughout the JSON interfaces:
  ///   Q           "n" or "n/d"
  ///   Q(sqrt(D))  "a+b*r" / "a-b*r" with rational a, b (plain "a" if b = 0)
  ///   GF(p^k)     "[c0,c1,...,c_{k-1}]"
  Scalar parse(const std::string& text) const;
  std::string format(const Scalar& x) const;

  /// Exact square root in this field, if one exists.  Deterministic (the
  /// Tonelli-Shanks non-residue is the first one in enumeration order).
  std::optional<Scalar> square_root(const Scalar& x) const;

  /// Roots q of q^2 - beta*q + 1 = 0, i.e. solutions of q + 1/q = beta.
  /// Returns 0, 1 or 2 roots, sorted canonically; a double root appears once.
  /// The set is closed under q -> 1/q (the roots multiply to 1).
  std::vector<Scalar> solve_unit_quadratic(const Scalar& beta) const;

 private:
  Field() = default;

  FieldKind kind_ = FieldKind::Rationals;
  BigInt radicand_;              // QuadraticExt
  BigInt p_;                     // FiniteField
  int k_ = 0;                    // FiniteField
  std::vector<BigInt> modulus_;  // FiniteField, size k_+1, monic

  friend class Scalar;
};

/// An immutable element of an exact field, always in canonical form: reduced
/// fractions with positive denominators, GF coefficients in [0, p).
/// Equality is exact and decidable.
class Scalar {
 public:
  struct QuadVal {
    BigRat a, b;  // a + b*sqrt(D)
    bool operator==(const QuadVal& o) const { return a == o.a && b == o.b; }
  };
  struct GfVal {
    std::vector<BigInt> c;  // size k, entries in [0, p)
    bool operator==(const GfVal& o) const { return c == o.c; }
  };
  using Rep = std::variant<BigRat, QuadVal, GfVal>;

  const FieldPtr& field() const { return field_; }
  const Rep& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  std::string str() const { return field_->format(*this); }

  /// Canonical total order (used only for deterministic sorting/dedup, not
  /// for any field semantics).  Scalars must share a field.
  static int compare(const Scalar& x, const Scalar& y);

 private:
  Scalar(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

  FieldPtr field_;
  Rep rep_;

  friend class Field;
};

/// x^e with e possibly negative (via inverse); x must be nonzero for e < 0.
Scalar pow(const Scalar& x, long long e);

}  // namespace lpkit
