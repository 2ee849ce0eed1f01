#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sosf/field.hpp"

namespace sosf::poly {

/// Dense exponent vector; terms compare by total degree, then lexicographically.
struct Monomial {
  std::vector<std::uint16_t> e;

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

/// Sparse multivariate polynomial with exact coefficients in canonical form:
/// the term map never holds a zero coefficient.
class Polynomial {
public:
  Polynomial(const FieldSpec& field, int nvars) : field_(field), nvars_(nvars) {}

  static Polynomial variable(const FieldSpec& field, int nvars, int var);

  const FieldSpec& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Monomial m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }

private:
  void require_compatible(const Polynomial& o) const;
  FieldSpec field_;
  int nvars_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace sosf::poly
