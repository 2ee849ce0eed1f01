#pragma once

#include <span>
#include <vector>

#include "sosf/field.hpp"
#include "sosf/skeleton.hpp"

namespace sosf::gram {

/// Symmetric k x k matrix of exact scalars. Symmetry is enforced at
/// construction.
class GramMatrix {
public:
  GramMatrix(const FieldSpec& field, std::vector<std::vector<Scalar>> rows);

  int dim() const { return k_; }
  const FieldSpec& field() const { return field_; }
  const Scalar& at(int a, int b) const { return rows_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

  bool operator==(const GramMatrix& o) const { return field_ == o.field_ && rows_ == o.rows_; }

private:
  FieldSpec field_;
  int k_;
  std::vector<std::vector<Scalar>> rows_;
};

/// k vectors of a common length over one field.
struct Realisation {
  FieldSpec field = FieldSpec::rationals();
  int ambient_dim = 0;
  std::vector<std::vector<Scalar>> vectors;
};

/// Plain bilinear dot product, sum of coordinate products (not Hermitian).
Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v);

GramMatrix gram_of(const Realisation& vs);

struct PsdResult {
  bool psd = true;
  /// When not PSD: rational x with x^T G x < 0, and that value.
  std::vector<Rational> witness;
  Rational witness_value;
};

/// Exact semidefiniteness decision over the rationals by symmetric Gaussian
/// elimination. Negative directions are certified by an explicit witness.
PsdResult psd_check(const GramMatrix& g);

/// Exact determinant (rational entries).
Rational determinant(const GramMatrix& g);

/// Vectors over a field containing sqrt(-1) whose pairwise dot products
/// reproduce g exactly; ambient dimension at most 2 rank(g). Accepts g over
/// the target field itself or over QQ (entries are embedded).
Realisation realize_with_i(const GramMatrix& g, const FieldSpec& spec);

/// A = e1, B = -e1 + e2 + u e3, C = e1 + e2 - u e3 in ambient dimension 3.
Realisation realize_paper_triple(const FieldSpec& spec);

/// The formal Gram table as a rational matrix, rows/columns ordered by
/// `order` (all symbols must be in the table).
GramMatrix table_matrix(const skel::GramTable& g, const std::vector<skel::FormalSymbol>& order);

}  // namespace sosf::gram
