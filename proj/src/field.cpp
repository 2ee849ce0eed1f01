#include "sosf/field.hpp"

#include <ostream>

namespace sosf {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Canonical residue in [0, p), from an arbitrary rational with denominator
// invertible mod p.
Rational residue(const Rational& q, std::int64_t p) {
  Integer m(static_cast<long>(p));
  Integer den_mod;
  mpz_fdiv_r(den_mod.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t());
  Integer r;
  if (q.get_den() == 1) {
    mpz_fdiv_r(r.get_mpz_t(), q.get_num().get_mpz_t(), m.get_mpz_t());
    return Rational(r);
  }
  if (den_mod == 0) {
    throw DivisionByZero("denominator divisible by p in reduction mod " + std::to_string(p));
  }
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), m.get_mpz_t());
  Integer t = q.get_num() * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
  return Rational(r);
}

std::string pair_str(const Rational& a, const Rational& b, const char* unit) {
  if (b == 0) return a.get_str();
  std::string bs;
  if (b == 1) {
    bs = unit;
  } else if (b == -1) {
    bs = std::string("-") + unit;
  } else {
    bs = b.get_str() + unit;
  }
  if (a == 0) return bs;
  if (bs[0] == '-') return a.get_str() + bs;
  return a.get_str() + "+" + bs;
}

}  // namespace

FieldSpec FieldSpec::rationals() { return {FieldKind::Rationals, 0}; }

FieldSpec FieldSpec::gaussian_rationals() { return {FieldKind::GaussianRationals, 0}; }

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (p == 2) throw InvalidField("characteristic 2 is not supported");
  if (!is_odd_prime(p)) {
    throw InvalidField("fp modulus must be an odd prime, got " + std::to_string(p));
  }
  if (p >= (std::int64_t{1} << 31)) {
    throw InvalidField("fp modulus out of supported range: " + std::to_string(p));
  }
  return {FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::prime_field_with_i(std::int64_t p) {
  FieldSpec base = prime_field(p);
  if (p % 4 != 3) {
    throw InvalidField("fpi requires p = 3 (mod 4); t^2+1 is reducible mod " +
                       std::to_string(p));
  }
  return {FieldKind::PrimeFieldWithI, base.p()};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "qq") return rationals();
  if (text == "qi") return gaussian_rationals();
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    std::string tail = text.substr(colon + 1);
    std::int64_t p = 0;
    try {
      size_t pos = 0;
      p = std::stoll(tail, &pos);
      if (pos != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      throw ParseError("bad field descriptor modulus: '" + tail + "'");
    }
    if (head == "fp") return prime_field(p);
    if (head == "fpi") return prime_field_with_i(p);
  }
  throw ParseError("bad field descriptor '" + text + "' (expected qq | qi | fp:P | fpi:P)");
}

bool FieldSpec::has_sqrt_minus_one() const {
  switch (kind_) {
    case FieldKind::Rationals: return false;
    case FieldKind::GaussianRationals: return true;
    case FieldKind::PrimeField: return p_ % 4 == 1;
    case FieldKind::PrimeFieldWithI: return true;
  }
  return false;
}

bool FieldSpec::is_extension() const {
  return kind_ == FieldKind::GaussianRationals || kind_ == FieldKind::PrimeFieldWithI;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "qq";
    case FieldKind::GaussianRationals: return "qi";
    case FieldKind::PrimeField: return "fp:" + std::to_string(p_);
    case FieldKind::PrimeFieldWithI: return "fpi:" + std::to_string(p_);
  }
  return "?";
}

Scalar Scalar::zero(const FieldSpec& spec) { return Scalar(spec); }

Scalar Scalar::one(const FieldSpec& spec) { return of_int(spec, 1); }

Scalar Scalar::of_int(const FieldSpec& spec, long v) {
  Scalar s(spec);
  s.a_ = v;
  s.normalize();
  return s;
}

Scalar Scalar::of_rational(const FieldSpec& spec, const Rational& q) {
  Scalar s(spec);
  s.a_ = q;
  s.normalize();
  return s;
}

Scalar Scalar::of_pair(const FieldSpec& spec, const Rational& a, const Rational& b) {
  if (!spec.is_extension() && b != 0) {
    throw FieldMismatch("field " + spec.name() + " has no second coordinate");
  }
  Scalar s(spec);
  s.a_ = a;
  s.b_ = b;
  s.normalize();
  return s;
}

Scalar Scalar::rational(const Rational& q) { return of_rational(FieldSpec::rationals(), q); }

Scalar Scalar::gaussian(const Rational& re, const Rational& im) {
  return of_pair(FieldSpec::gaussian_rationals(), re, im);
}

bool Scalar::is_zero() const { return a_ == 0 && b_ == 0; }

bool Scalar::is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

void Scalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  switch (spec_.kind()) {
    case FieldKind::Rationals:
    case FieldKind::GaussianRationals:
      break;
    case FieldKind::PrimeField:
    case FieldKind::PrimeFieldWithI:
      a_ = residue(a_, spec_.p());
      b_ = residue(b_, spec_.p());
      break;
  }
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
  if (spec_ != o.spec_) {
    throw FieldMismatch(std::string("mixed-field operands in ") + op + ": " + spec_.name() +
                        " vs " + o.spec_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r(spec_);
  r.a_ = -a_;
  r.b_ = -b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o, "add");
  Scalar r(spec_);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o, "sub");
  Scalar r(spec_);
  r.a_ = a_ - o.a_;
  r.b_ = b_ - o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o, "mul");
  Scalar r(spec_);
  if (spec_.is_extension()) {
    // (a + b u)(c + d u) with u^2 = -1
    r.a_ = a_ * o.a_ - b_ * o.b_;
    r.b_ = a_ * o.b_ + b_ * o.a_;
  } else {
    r.a_ = a_ * o.a_;
  }
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + spec_.name());
  Scalar r(spec_);
  switch (spec_.kind()) {
    case FieldKind::Rationals:
      r.a_ = 1 / a_;
      break;
    case FieldKind::GaussianRationals: {
      Rational n = a_ * a_ + b_ * b_;
      r.a_ = a_ / n;
      r.b_ = -b_ / n;
      break;
    }
    case FieldKind::PrimeField: {
      Integer m(static_cast<long>(spec_.p()));
      Integer inv;
      mpz_invert(inv.get_mpz_t(), a_.get_num().get_mpz_t(), m.get_mpz_t());
      r.a_ = Rational(inv);
      break;
    }
    case FieldKind::PrimeFieldWithI: {
      // Norm a^2 + b^2 vanishes only at zero since -1 is a non-square mod p.
      Rational n = residue(a_ * a_ + b_ * b_, spec_.p());
      Integer m(static_cast<long>(spec_.p()));
      Integer inv;
      mpz_invert(inv.get_mpz_t(), n.get_num().get_mpz_t(), m.get_mpz_t());
      r.a_ = a_ * Rational(inv);
      r.b_ = -b_ * Rational(inv);
      break;
    }
  }
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o, "div");
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o, "eq");
  return a_ == o.a_ && b_ == o.b_;
}

Scalar Scalar::normalized() const {
  Scalar r = *this;
  r.normalize();
  return r;
}

std::string Scalar::str() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return a_.get_str();
    case FieldKind::GaussianRationals:
      return pair_str(a_, b_, "i");
    case FieldKind::PrimeFieldWithI:
      return pair_str(a_, b_, "t");
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar sqrt_minus_one(const FieldSpec& spec) {
  switch (spec.kind()) {
    case FieldKind::GaussianRationals:
    case FieldKind::PrimeFieldWithI:
      return Scalar::of_pair(spec, 0, 1);
    case FieldKind::PrimeField: {
      std::int64_t p = spec.p();
      if (p % 4 == 1) {
        for (std::int64_t u = 2; u < p; ++u) {
          if ((u * u) % p == p - 1) return Scalar::of_int(spec, static_cast<long>(u));
        }
      }
      throw NoSquareRootOfMinusOne("-1 is not a square in " + spec.name());
    }
    case FieldKind::Rationals:
      throw NoSquareRootOfMinusOne("-1 is not a square in qq");
  }
  throw NoSquareRootOfMinusOne("-1 is not a square in " + spec.name());
}

Scalar specialize_scalar(const Scalar& z, const FieldSpec& spec, const Scalar& u) {
  FieldKind k = z.field().kind();
  if (k != FieldKind::GaussianRationals && k != FieldKind::Rationals) {
    throw FieldMismatch("specialize_scalar expects a qq or qi source scalar, got " +
                        z.field().name());
  }
  if (!z.is_integral()) {
    throw NonIntegralCoefficient("specialize_scalar requires Z[i] input, got " + z.str());
  }
  Scalar a = Scalar::of_rational(spec, z.first());
  Scalar b = Scalar::of_rational(spec, z.second());
  return a + b * u;
}

Scalar specialize_scalar(const Scalar& z, const FieldSpec& spec) {
  return specialize_scalar(z, spec, sqrt_minus_one(spec));
}

}  // namespace sosf
