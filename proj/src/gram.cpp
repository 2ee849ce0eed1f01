#include "sosf/gram.hpp"

#include <algorithm>

namespace sosf::gram {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity(int k) {
  RatMatrix t(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k), 0));
  for (int i = 0; i < k; ++i) t[i][i] = 1;
  return t;
}

// Entries of g in the target field. QQ entries embed anywhere (denominators
// must be invertible); entries already in the target field pass through.
std::vector<std::vector<Scalar>> embed_rows(const GramMatrix& g, const FieldSpec& spec) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(static_cast<size_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) {
    std::vector<Scalar> row;
    row.reserve(static_cast<size_t>(g.dim()));
    for (int b = 0; b < g.dim(); ++b) {
      const Scalar& e = g.at(a, b);
      if (e.field() == spec) {
        row.push_back(e);
      } else if (e.field().kind() == FieldKind::Rationals) {
        row.push_back(Scalar::of_rational(spec, e.first()));
      } else {
        throw FieldMismatch("cannot embed " + e.field().name() + " entries into " + spec.name());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GramMatrix::GramMatrix(const FieldSpec& field, std::vector<std::vector<Scalar>> rows)
    : field_(field), k_(static_cast<int>(rows.size())), rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != k_) {
      throw DimensionMismatch("Gram matrix rows must all have length k");
    }
    for (const Scalar& e : row) {
      if (e.field() != field_) throw FieldMismatch("Gram entry field mismatch");
    }
  }
  for (int a = 0; a < k_; ++a) {
    for (int b = a + 1; b < k_; ++b) {
      if (at(a, b) != at(b, a)) {
        throw DimensionMismatch("Gram matrix is not symmetric at (" + std::to_string(a + 1) +
                                "," + std::to_string(b + 1) + ")");
      }
    }
  }
}

Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) throw DimensionMismatch("dot product length mismatch");
  if (u.empty()) throw DimensionMismatch("dot product of empty vectors");
  Scalar acc = Scalar::zero(u[0].field());
  for (size_t t = 0; t < u.size(); ++t) acc += u[t] * v[t];
  return acc;
}

GramMatrix gram_of(const Realisation& vs) {
  size_t k = vs.vectors.size();
  for (const auto& v : vs.vectors) {
    if (static_cast<int>(v.size()) != vs.ambient_dim) {
      throw DimensionMismatch("realisation vector length differs from ambient dimension");
    }
  }
  std::vector<std::vector<Scalar>> rows(k, std::vector<Scalar>(k, Scalar::zero(vs.field)));
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = a; b < k; ++b) {
      Scalar d = vs.ambient_dim == 0 ? Scalar::zero(vs.field) : dot(vs.vectors[a], vs.vectors[b]);
      rows[a][b] = d;
      rows[b][a] = d;
    }
  }
  return GramMatrix(vs.field, std::move(rows));
}

PsdResult psd_check(const GramMatrix& g) {
  if (g.field().kind() != FieldKind::Rationals) {
    throw FieldMismatch("psd_check requires rational entries");
  }
  int k = g.dim();
  RatMatrix m(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m[a][b] = g.at(a, b).first();

  // Row i of `basis` holds the coordinates of the current vector w_i in the
  // original basis, so m[i][j] = w_i^T G w_j throughout.
  RatMatrix basis = identity(k);
  std::vector<int> remaining(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) remaining[static_cast<size_t>(i)] = i;

  PsdResult result;
  auto negative_at = [&](const std::vector<Rational>& x) {
    result.psd = false;
    result.witness = x;
    Rational val = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) val += x[static_cast<size_t>(a)] * g.at(a, b).first() * x[static_cast<size_t>(b)];
    result.witness_value = val;
    return result;
  };

  while (!remaining.empty()) {
    for (int i : remaining) {
      if (m[i][i] < 0) return negative_at(basis[static_cast<size_t>(i)]);
    }
    int pivot = -1;
    for (int i : remaining) {
      if (m[i][i] > 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Every remaining diagonal entry is 0. A nonzero off-diagonal c at
      // (i, j) gives (t w_i + w_j)^T G (t w_i + w_j) = 2 t c; take t = -1/c.
      for (size_t a = 0; a < remaining.size(); ++a) {
        for (size_t b = a + 1; b < remaining.size(); ++b) {
          int i = remaining[a], j = remaining[b];
          if (m[i][j] != 0) {
            Rational t = Rational(-1) / m[i][j];
            std::vector<Rational> x(static_cast<size_t>(k), 0);
            for (int col = 0; col < k; ++col) {
              x[static_cast<size_t>(col)] =
                  t * basis[static_cast<size_t>(i)][static_cast<size_t>(col)] +
                  basis[static_cast<size_t>(j)][static_cast<size_t>(col)];
            }
            return negative_at(x);
          }
        }
      }
      return result;  // remaining block is identically zero
    }

    Rational d = m[pivot][pivot];
    std::vector<Rational> prow(static_cast<size_t>(k), 0);
    for (int l : remaining) prow[static_cast<size_t>(l)] = m[pivot][l];
    std::vector<int> next;
    for (int j : remaining) {
      if (j == pivot) continue;
      next.push_back(j);
      if (prow[static_cast<size_t>(j)] == 0) continue;
      Rational f = prow[static_cast<size_t>(j)] / d;
      for (int col = 0; col < k; ++col) {
        basis[static_cast<size_t>(j)][static_cast<size_t>(col)] -=
            f * basis[static_cast<size_t>(pivot)][static_cast<size_t>(col)];
      }
      for (int l : remaining) {
        if (l != pivot) m[j][l] -= f * prow[static_cast<size_t>(l)];
      }
      m[j][pivot] = 0;
      m[pivot][j] = 0;
    }
    remaining = std::move(next);
  }
  return result;
}

Rational determinant(const GramMatrix& g) {
  if (g.field().kind() != FieldKind::Rationals) {
    throw FieldMismatch("determinant requires rational entries");
  }
  int k = g.dim();
  RatMatrix m(static_cast<size_t>(k), std::vector<Rational>(static_cast<size_t>(k)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m[a][b] = g.at(a, b).first();

  Rational det = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (int c2 = col; c2 < k; ++c2) m[row][c2] -= f * m[col][c2];
    }
  }
  return det;
}

Realisation realize_with_i(const GramMatrix& g, const FieldSpec& spec) {
  Scalar u = sqrt_minus_one(spec);
  int k = g.dim();
  Scalar zero = Scalar::zero(spec);
  Scalar one = Scalar::one(spec);
  Scalar half = one / Scalar::of_int(spec, 2);

  std::vector<std::vector<Scalar>> m = embed_rows(g, spec);
  // Invariant: original G = T M T^T; T starts as the identity.
  std::vector<std::vector<Scalar>> t(static_cast<size_t>(k),
                                     std::vector<Scalar>(static_cast<size_t>(k), zero));
  for (int i = 0; i < k; ++i) t[i][i] = one;

  std::vector<int> remaining;
  for (int i = 0; i < k; ++i) remaining.push_back(i);
  std::vector<int> order;  // pivot order; unused rows are zero rows of D

  while (!remaining.empty()) {
    int pivot = -1;
    for (int i : remaining) {
      if (!m[i][i].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Zero diagonal: make a pivot by w_i += w_j at the first nonzero
      // off-diagonal (i, j). In the transform T this is col j -= col i.
      int ci = -1, cj = -1;
      for (size_t a = 0; a < remaining.size() && ci < 0; ++a) {
        for (size_t b = a + 1; b < remaining.size(); ++b) {
          if (!m[remaining[a]][remaining[b]].is_zero()) {
            ci = remaining[a];
            cj = remaining[b];
            break;
          }
        }
      }
      if (ci < 0) break;  // remaining block is zero; those rows realise as 0
      for (int col = 0; col < k; ++col) m[ci][col] += m[cj][col];
      for (int row = 0; row < k; ++row) m[row][ci] += m[row][cj];
      for (int row = 0; row < k; ++row) t[row][cj] -= t[row][ci];
      continue;
    }

    Scalar d = m[pivot][pivot];
    std::vector<int> next;
    for (int j : remaining) {
      if (j == pivot) continue;
      next.push_back(j);
      if (m[j][pivot].is_zero()) continue;
      Scalar f = m[j][pivot] / d;
      for (int col = 0; col < k; ++col) m[j][col] -= f * m[pivot][col];
      for (int row = 0; row < k; ++row) m[row][j] -= f * m[row][pivot];
      for (int row = 0; row < k; ++row) t[row][pivot] += f * t[row][j];
    }
    order.push_back(pivot);
    remaining = std::move(next);
  }

  // Columns of W: each nonzero diagonal entry delta contributes the nonzero
  // coordinates among ((1+delta)/2, u(1-delta)/2), whose squares sum to delta.
  struct Column {
    int row;
    Scalar value;
  };
  std::vector<Column> columns;
  for (int i : order) {
    Scalar delta = m[i][i];
    if (delta.is_zero()) continue;
    Scalar c1 = (one + delta) * half;
    Scalar c2 = u * (one - delta) * half;
    if (!c1.is_zero()) columns.push_back({i, c1});
    if (!c2.is_zero()) columns.push_back({i, c2});
  }

  Realisation real;
  real.field = spec;
  real.ambient_dim = static_cast<int>(columns.size());
  real.vectors.assign(static_cast<size_t>(k),
                      std::vector<Scalar>(columns.size(), zero));
  // V = T W
  for (int row = 0; row < k; ++row) {
    for (size_t col = 0; col < columns.size(); ++col) {
      real.vectors[static_cast<size_t>(row)][col] =
          t[static_cast<size_t>(row)][static_cast<size_t>(columns[col].row)] * columns[col].value;
    }
  }
  return real;
}

Realisation realize_paper_triple(const FieldSpec& spec) {
  Scalar u = sqrt_minus_one(spec);
  Scalar one = Scalar::one(spec);
  Scalar zero = Scalar::zero(spec);
  Realisation real;
  real.field = spec;
  real.ambient_dim = 3;
  real.vectors = {
      {one, zero, zero},
      {-one, one, u},
      {one, one, -u},
  };
  return real;
}

GramMatrix table_matrix(const skel::GramTable& g, const std::vector<skel::FormalSymbol>& order) {
  FieldSpec qq = FieldSpec::rationals();
  std::vector<std::vector<Scalar>> rows(
      order.size(), std::vector<Scalar>(order.size(), Scalar::zero(qq)));
  for (size_t a = 0; a < order.size(); ++a) {
    for (size_t b = 0; b < order.size(); ++b) {
      rows[a][b] = Scalar::of_int(qq, g.value(order[a], order[b]));
    }
  }
  return GramMatrix(qq, std::move(rows));
}

}  // namespace sosf::gram
