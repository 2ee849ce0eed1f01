#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sosf/field.hpp"
#include "sosf/gram.hpp"
#include "sosf/skeleton.hpp"

namespace sosf::formula {

/// Bilinear composition data of type [r, s, n]: an r x s grid of coefficient
/// vectors v_ij in F^n. The alpha-th coordinate of v_ij is the coefficient of
/// x_i y_j in the bilinear form z_alpha.
struct Formula {
  int r = 0, s = 0, n = 0;
  FieldSpec field = FieldSpec::rationals();
  std::vector<Scalar> coeffs;  // ((i * s) + j) * n + alpha, all 0-based

  const Scalar& v(int i, int j, int alpha) const {
    return coeffs[(static_cast<size_t>(i) * s + j) * n + static_cast<size_t>(alpha)];
  }
  Scalar& v(int i, int j, int alpha) {
    return coeffs[(static_cast<size_t>(i) * s + j) * n + static_cast<size_t>(alpha)];
  }
  std::span<const Scalar> vec(int i, int j) const {
    return {coeffs.data() + (static_cast<size_t>(i) * s + j) * n, static_cast<size_t>(n)};
  }

  static Formula zeros(int r, int s, int n, const FieldSpec& field);

  bool operator==(const Formula& o) const {
    return r == o.r && s == o.s && n == o.n && field == o.field && coeffs == o.coeffs;
  }
};

struct Violation {
  int i, j, k, l;  // 1-based
  Scalar lhs, rhs;
};

struct VerifyReport {
  bool pass = true;
  long long equations = 0;
  long long violation_count = 0;
  std::vector<Violation> violations;  // lexicographic by (i,j,k,l), capped
};

/// Checks v_ij . v_kl + v_il . v_kj = 2 delta_ik delta_jl over all index
/// quadruples. Violations carry lhs = the dot-product side, rhs = the delta
/// side. jobs <= 0 selects hardware concurrency.
VerifyReport verify_criterion(const Formula& f, int jobs = 1, int cap = 32);

/// Expands both sides of (sum x_i^2)(sum y_j^2) = sum z_alpha^2 as canonical
/// sparse polynomials and compares coefficient maps. Mismatched monomials
/// x_i x_k y_j y_l are reported as quadruples with lhs = the coefficient on
/// the (sum x^2)(sum y^2) side and rhs = the coefficient on the sum-of-squares
/// side. `equations` counts the distinct monomials compared.
VerifyReport verify_expansion(const Formula& f, int jobs = 1, int cap = 32);

/// Concrete vectors standing in for the formal symbols of a skeleton.
struct SymbolRealisation {
  FieldSpec field = FieldSpec::rationals();
  int ambient_dim = 0;
  std::map<skel::FormalSymbol, std::vector<Scalar>> vectors;
};

/// Substitutes real(symbol) for each skeleton cell, after checking that the
/// realisation's dot products reproduce the Gram table on every pair of
/// symbols the skeleton uses (GramMismatch otherwise).
Formula instantiate(const skel::SkeletonArray& sk, const skel::GramTable& g,
                    const SymbolRealisation& real);

/// The [12,12,18] construction over any field containing a square root of -1:
/// the paper-triple realisation A, B, C on coordinates 1..3 together with
/// E_m = e_{m+2}, instantiated over the 12 x 12 block skeleton.
Formula build_12_12_18(const FieldSpec& spec);

/// Coordinatewise ring homomorphism Z[i] -> spec. Source must be over qq or
/// qi with integral coordinates.
Formula specialize(const Formula& f, const FieldSpec& spec);

/// Appends n_new - n zero coordinates to every v_ij.
Formula pad(const Formula& f, int n_new);

/// The classical [k,k,k] identities over QQ for k in {1, 2, 4, 8}; k = 4 is
/// extracted from quaternion basis products, k = 8 from the hard-coded
/// octonion table.
Formula classical_fixture(int k);

}  // namespace sosf::formula
