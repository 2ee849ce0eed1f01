#include "sosf/formula.hpp"

#include <algorithm>

#include "sosf/parallel.hpp"
#include "sosf/polynomial.hpp"

namespace sosf::formula {

namespace {

// e_x * e_y = sign * e_idx for the standard octonion basis (Cayley-Dickson
// doubling of the quaternions).
constexpr int kOctIdx[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};
constexpr int kOctSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

}  // namespace

Formula Formula::zeros(int r, int s, int n, const FieldSpec& field) {
  Formula f;
  f.r = r;
  f.s = s;
  f.n = n;
  f.field = field;
  f.coeffs.assign(static_cast<size_t>(r) * s * n, Scalar::zero(field));
  return f;
}

VerifyReport verify_criterion(const Formula& f, int jobs, int cap) {
  cap = std::max(cap, 1);  // a failing report always names a quadruple
  long long outer = static_cast<long long>(f.r) * f.s;
  int chunk_count = detail::resolve_jobs(jobs);
  chunk_count = static_cast<int>(std::min<long long>(chunk_count, std::max<long long>(outer, 1)));

  Scalar zero = Scalar::zero(f.field);
  Scalar two = Scalar::of_int(f.field, 2);

  struct ChunkResult {
    long long violation_count = 0;
    std::vector<Violation> violations;
  };
  std::vector<ChunkResult> results(static_cast<size_t>(chunk_count));

  detail::run_chunked(outer, chunk_count, [&](int chunk, long long begin, long long end) {
    ChunkResult& out = results[static_cast<size_t>(chunk)];
    for (long long ij = begin; ij < end; ++ij) {
      int i = static_cast<int>(ij / f.s);
      int j = static_cast<int>(ij % f.s);
      for (int k = 0; k < f.r; ++k) {
        for (int l = 0; l < f.s; ++l) {
          Scalar lhs = gram::dot(f.vec(i, j), f.vec(k, l)) + gram::dot(f.vec(i, l), f.vec(k, j));
          const Scalar& rhs = (i == k && j == l) ? two : zero;
          if (lhs != rhs) {
            ++out.violation_count;
            if (static_cast<int>(out.violations.size()) < cap) {
              out.violations.push_back({i + 1, j + 1, k + 1, l + 1, lhs, rhs});
            }
          }
        }
      }
    }
  });

  VerifyReport report;
  report.equations = outer * outer;
  for (const ChunkResult& r : results) {
    report.violation_count += r.violation_count;
    for (const Violation& v : r.violations) {
      if (static_cast<int>(report.violations.size()) < cap) report.violations.push_back(v);
    }
  }
  report.pass = report.violation_count == 0;
  return report;
}

VerifyReport verify_expansion(const Formula& f, int jobs, int cap) {
  cap = std::max(cap, 1);
  using poly::Monomial;
  using poly::Polynomial;

  int nvars = f.r + f.s;  // x_0..x_{r-1}, then y_0..y_{s-1}
  Polynomial lhs(f.field, nvars);
  {
    Polynomial sx(f.field, nvars), sy(f.field, nvars);
    for (int i = 0; i < f.r; ++i) {
      Polynomial x = Polynomial::variable(f.field, nvars, i);
      sx += x * x;
    }
    for (int j = 0; j < f.s; ++j) {
      Polynomial y = Polynomial::variable(f.field, nvars, f.r + j);
      sy += y * y;
    }
    lhs = sx * sy;
  }

  int chunk_count = detail::resolve_jobs(jobs);
  chunk_count = static_cast<int>(std::min<long long>(chunk_count, std::max(f.n, 1)));
  std::vector<Polynomial> partials(static_cast<size_t>(chunk_count), Polynomial(f.field, nvars));

  detail::run_chunked(f.n, chunk_count, [&](int chunk, long long begin, long long end) {
    Polynomial& acc = partials[static_cast<size_t>(chunk)];
    for (long long alpha = begin; alpha < end; ++alpha) {
      Polynomial z(f.field, nvars);
      for (int i = 0; i < f.r; ++i) {
        for (int j = 0; j < f.s; ++j) {
          const Scalar& c = f.v(i, j, static_cast<int>(alpha));
          if (c.is_zero()) continue;
          Monomial m;
          m.e.assign(static_cast<size_t>(nvars), 0);
          m.e[static_cast<size_t>(i)] = 1;
          m.e[static_cast<size_t>(f.r + j)] = 1;
          z.add_term(std::move(m), c);
        }
      }
      acc += z * z;
    }
  });

  Polynomial rhs(f.field, nvars);
  for (const Polynomial& part : partials) rhs += part;

  // Every monomial on either side is x_i x_k y_j y_l; collect the union and
  // report mismatches as quadruples (i <= k, j <= l).
  VerifyReport report;
  Polynomial diff = lhs - rhs;
  long long monomials = 0;
  {
    std::map<Monomial, char> seen;
    for (const auto& [m, c] : lhs.terms()) seen.emplace(m, 0);
    for (const auto& [m, c] : rhs.terms()) seen.emplace(m, 0);
    monomials = static_cast<long long>(seen.size());
  }
  report.equations = monomials;
  for (const auto& [m, c] : diff.terms()) {
    ++report.violation_count;
    if (static_cast<int>(report.violations.size()) >= cap) continue;
    int xs[2] = {0, 0}, ys[2] = {0, 0}, nx = 0, ny = 0;
    for (int v = 0; v < f.r; ++v) {
      for (int rep = 0; rep < m.e[static_cast<size_t>(v)] && nx < 2; ++rep) xs[nx++] = v;
    }
    for (int v = 0; v < f.s; ++v) {
      for (int rep = 0; rep < m.e[static_cast<size_t>(f.r + v)] && ny < 2; ++rep) ys[ny++] = v;
    }
    if (nx == 1) xs[1] = xs[0];
    if (ny == 1) ys[1] = ys[0];
    report.violations.push_back({xs[0] + 1, ys[0] + 1, xs[1] + 1, ys[1] + 1,
                                 lhs.coefficient(m), rhs.coefficient(m)});
  }
  report.pass = report.violation_count == 0;
  return report;
}

Formula instantiate(const skel::SkeletonArray& sk, const skel::GramTable& g,
                    const SymbolRealisation& real) {
  std::set<skel::FormalSymbol> used;
  for (const skel::SignedSymbol& cell : sk.cells) used.insert(cell.symbol);

  for (const skel::FormalSymbol& sym : used) {
    auto it = real.vectors.find(sym);
    if (it == real.vectors.end()) {
      throw UnknownSymbol("no realisation vector for symbol " + sym.str());
    }
    if (static_cast<int>(it->second.size()) != real.ambient_dim) {
      throw DimensionMismatch("realisation vector for " + sym.str() +
                              " has wrong length");
    }
  }
  for (auto a = used.begin(); a != used.end(); ++a) {
    for (auto b = a; b != used.end(); ++b) {
      Scalar lhs = gram::dot(real.vectors.at(*a), real.vectors.at(*b));
      Scalar rhs = Scalar::of_int(real.field, g.value(*a, *b));
      if (lhs != rhs) {
        throw GramMismatch("realisation disagrees with Gram table on (" + a->str() + ", " +
                           b->str() + "): " + lhs.str() + " != " + rhs.str());
      }
    }
  }

  Formula f = Formula::zeros(sk.rows, sk.cols, real.ambient_dim, real.field);
  for (int i = 0; i < sk.rows; ++i) {
    for (int j = 0; j < sk.cols; ++j) {
      const skel::SignedSymbol& cell = sk.at(i, j);
      const std::vector<Scalar>& vec = real.vectors.at(cell.symbol);
      for (int alpha = 0; alpha < f.n; ++alpha) {
        f.v(i, j, alpha) = cell.sign < 0 ? -vec[static_cast<size_t>(alpha)]
                                         : vec[static_cast<size_t>(alpha)];
      }
    }
  }
  return f;
}

Formula build_12_12_18(const FieldSpec& spec) {
  gram::Realisation triple = gram::realize_paper_triple(spec);
  Scalar zero = Scalar::zero(spec);
  Scalar one = Scalar::one(spec);

  SymbolRealisation real;
  real.field = spec;
  real.ambient_dim = 18;
  for (int p = 1; p <= 3; ++p) {
    std::vector<Scalar> v(18, zero);
    for (int t = 0; t < 3; ++t) v[static_cast<size_t>(t)] = triple.vectors[static_cast<size_t>(p - 1)][static_cast<size_t>(t)];
    real.vectors[skel::FormalSymbol::diag(p)] = std::move(v);
  }
  for (int m = 2; m <= 16; ++m) {
    std::vector<Scalar> v(18, zero);
    v[static_cast<size_t>(m + 1)] = one;  // E_m = e_{m+2}, 0-based coordinate m+1
    real.vectors[skel::FormalSymbol::basis(m)] = std::move(v);
  }
  return instantiate(skel::skeleton_paper(), skel::gram_paper(), real);
}

Formula specialize(const Formula& f, const FieldSpec& spec) {
  FieldKind k = f.field.kind();
  if (k != FieldKind::GaussianRationals && k != FieldKind::Rationals) {
    throw FieldMismatch("specialize expects a formula over qq or qi, got " + f.field.name());
  }
  Scalar u = sqrt_minus_one(spec);
  Formula out = Formula::zeros(f.r, f.s, f.n, spec);
  for (size_t t = 0; t < f.coeffs.size(); ++t) {
    out.coeffs[t] = specialize_scalar(f.coeffs[t], spec, u);
  }
  return out;
}

Formula pad(const Formula& f, int n_new) {
  if (n_new < f.n) {
    throw DimensionMismatch("pad target " + std::to_string(n_new) +
                            " is smaller than n = " + std::to_string(f.n));
  }
  Formula out = Formula::zeros(f.r, f.s, n_new, f.field);
  for (int i = 0; i < f.r; ++i)
    for (int j = 0; j < f.s; ++j)
      for (int alpha = 0; alpha < f.n; ++alpha) out.v(i, j, alpha) = f.v(i, j, alpha);
  return out;
}

Formula classical_fixture(int k) {
  FieldSpec qq = FieldSpec::rationals();
  switch (k) {
    case 1: {
      Formula f = Formula::zeros(1, 1, 1, qq);
      f.v(0, 0, 0) = Scalar::one(qq);
      return f;
    }
    case 2: {
      // z1 = x1 y1 - x2 y2, z2 = x1 y2 + x2 y1
      Formula f = Formula::zeros(2, 2, 2, qq);
      Scalar one = Scalar::one(qq);
      f.v(0, 0, 0) = one;
      f.v(1, 1, 0) = -one;
      f.v(0, 1, 1) = one;
      f.v(1, 0, 1) = one;
      return f;
    }
    case 4: {
      Formula f = Formula::zeros(4, 4, 4, qq);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          quat::TemplateEntry e = quat::entry_mul({+1, i}, {+1, j});
          f.v(i, j, e.t) = Scalar::of_int(qq, e.sign);
        }
      }
      return f;
    }
    case 8: {
      Formula f = Formula::zeros(8, 8, 8, qq);
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          f.v(i, j, kOctIdx[i][j]) = Scalar::of_int(qq, kOctSign[i][j]);
        }
      }
      return f;
    }
    default:
      throw Error("classical fixture supports k in {1, 2, 4, 8}, got " + std::to_string(k));
  }
}

}  // namespace sosf::formula
