#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sosf/errors.hpp"

namespace sosf {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { Rationals, GaussianRationals, PrimeField, PrimeFieldWithI };

/// Descriptor of a supported coefficient field: the rationals QQ, the Gaussian
/// rationals QQ(i), a prime field F_p, or the quadratic extension
/// F_p[t]/(t^2+1). Characteristic 2 is rejected at construction, and
/// PrimeFieldWithI requires p = 3 (mod 4) so that t^2+1 is irreducible.
class FieldSpec {
public:
  static FieldSpec rationals();
  static FieldSpec gaussian_rationals();
  static FieldSpec prime_field(std::int64_t p);
  static FieldSpec prime_field_with_i(std::int64_t p);

  /// Descriptor syntax: qq | qi | fp:P | fpi:P
  static FieldSpec parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }

  bool has_sqrt_minus_one() const;
  /// True for the two-coordinate kinds QQ(i) and F_p[t]/(t^2+1).
  bool is_extension() const;
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
  FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::int64_t p_;  // 0 for the characteristic-zero kinds
};

/// Exact element of the field named by its FieldSpec. Every operation returns
/// a value in canonical form: reduced fractions, residues in [0, p-1].
/// Stored as a coordinate pair (a, b); b is the coefficient of i (over QQ(i))
/// or of t (over F_p[t]/(t^2+1)) and is zero for the one-coordinate kinds.
class Scalar {
public:
  Scalar() : Scalar(FieldSpec::rationals()) {}
  explicit Scalar(const FieldSpec& spec) : spec_(spec) {}

  static Scalar zero(const FieldSpec& spec);
  static Scalar one(const FieldSpec& spec);
  static Scalar of_int(const FieldSpec& spec, long v);
  static Scalar of_rational(const FieldSpec& spec, const Rational& q);
  static Scalar of_pair(const FieldSpec& spec, const Rational& a, const Rational& b);
  static Scalar rational(const Rational& q);
  static Scalar gaussian(const Rational& re, const Rational& im);

  const FieldSpec& field() const { return spec_; }
  const Rational& first() const { return a_; }
  const Rational& second() const { return b_; }

  bool is_zero() const;
  /// Both coordinates have denominator 1 (always true for residue kinds).
  bool is_integral() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Re-derives the canonical form. Identity on every value produced by this
  /// class; exposed so canonicalisation can be property-tested.
  Scalar normalized() const;

  std::string str() const;

private:
  void normalize();
  void require_same_field(const Scalar& o, const char* op) const;

  FieldSpec spec_;
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical square root of -1: i over QQ(i), the least positive residue u
/// with u^2 = -1 over F_p (p = 1 mod 4), and t over F_p[t]/(t^2+1).
/// Throws NoSquareRootOfMinusOne for QQ and F_p with p = 3 (mod 4).
Scalar sqrt_minus_one(const FieldSpec& spec);

/// Ring homomorphism Z[i] -> spec sending 1 to 1 and i to sqrt_minus_one(spec),
/// applied to z = a + b*i with integer a, b. Plain rational inputs are treated
/// as b = 0.
Scalar specialize_scalar(const Scalar& z, const FieldSpec& spec);

/// Same map with the square root of -1 supplied by the caller.
Scalar specialize_scalar(const Scalar& z, const FieldSpec& spec, const Scalar& u);

}  // namespace sosf
