#include "sosf/polynomial.hpp"

namespace sosf::poly {

Polynomial Polynomial::variable(const FieldSpec& field, int nvars, int var) {
  Polynomial p(field, nvars);
  Monomial m;
  m.e.assign(static_cast<size_t>(nvars), 0);
  m.e[static_cast<size_t>(var)] = 1;
  p.add_term(std::move(m), Scalar::one(field));
  return p;
}

void Polynomial::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.e.size()) != nvars_) {
    throw DimensionMismatch("monomial arity does not match polynomial");
  }
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_) {
    throw FieldMismatch("polynomial field/arity mismatch");
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(field_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.e.resize(static_cast<size_t>(nvars_));
      for (int v = 0; v < nvars_; ++v) {
        m.e[static_cast<size_t>(v)] =
            static_cast<std::uint16_t>(ma.e[static_cast<size_t>(v)] + mb.e[static_cast<size_t>(v)]);
      }
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

}  // namespace sosf::poly
