#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sosf/quaternion.hpp"

namespace sosf::skel {

using quat::TemplateName;

enum class SymbolKind { Diag, Basis };

/// Formal symbol with no arithmetic content: Diag(p) stands for the p-th
/// diagonal anchor (A, B, C for p = 1, 2, 3) and Basis(m) for the unit
/// symbol E_m.
struct FormalSymbol {
  SymbolKind kind;
  int index;

  static FormalSymbol diag(int p) { return {SymbolKind::Diag, p}; }
  static FormalSymbol basis(int m) { return {SymbolKind::Basis, m}; }
  static FormalSymbol parse(const std::string& text);

  std::string str() const;

  friend auto operator<=>(const FormalSymbol&, const FormalSymbol&) = default;
};

struct SignedSymbol {
  int sign;  // +1 or -1
  FormalSymbol symbol;

  static SignedSymbol parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const SignedSymbol&, const SignedSymbol&) = default;
};

/// Symmetric integer pairing table on a finite symbol set. Pairs not listed
/// are 0 when the table is declared orthogonal-by-default, and an error
/// otherwise. Symbols outside the set always raise UnknownSymbol.
class GramTable {
public:
  explicit GramTable(bool orthogonal_default = false)
      : orthogonal_default_(orthogonal_default) {}

  void add_symbol(const FormalSymbol& s) { symbols_.insert(s); }
  void set(const FormalSymbol& a, const FormalSymbol& b, int v);
  int value(const FormalSymbol& a, const FormalSymbol& b) const;
  bool contains(const FormalSymbol& s) const { return symbols_.count(s) > 0; }

  const std::set<FormalSymbol>& symbols() const { return symbols_; }
  const std::map<std::pair<FormalSymbol, FormalSymbol>, int>& pairs() const { return pairs_; }
  bool orthogonal_default() const { return orthogonal_default_; }

private:
  bool orthogonal_default_;
  std::set<FormalSymbol> symbols_;
  std::map<std::pair<FormalSymbol, FormalSymbol>, int> pairs_;  // keys sorted (a <= b)
};

/// r x s grid of signed formal symbols, stored row-major with 0-based access.
struct SkeletonArray {
  int rows = 0;
  int cols = 0;
  std::vector<SignedSymbol> cells;

  SignedSymbol& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
  const SignedSymbol& at(int i, int j) const {
    return cells[static_cast<size_t>(i) * cols + j];
  }

  friend bool operator==(const SkeletonArray&, const SkeletonArray&) = default;
};

/// sign(x) * sign(y) * g(symbol(x), symbol(y)).
int formal_dot(const SignedSymbol& x, const SignedSymbol& y, const GramTable& g);

/// The block-assembly rule: partner templates fill the mirrored off-diagonal
/// blocks (P <-> Pt, Y <-> Z; D and S are their own partners).
TemplateName transpose_partner(TemplateName name);

/// Assembles a 4B x 4B skeleton from per-position templates. Diagonal block p
/// uses the support tuple (Diag(p), E2, E3, E4); the f-th off-diagonal face
/// (row-major (p,q), p < q) uses the fresh tuple (E_{5+4f}, ..., E_{8+4f}),
/// with the mirrored block filled by the transpose partner on the same tuple.
SkeletonArray assemble_blocks(int blocks, std::span<const TemplateName> diag,
                              std::span<const TemplateName> offdiag);

/// Gram table for assemble_blocks output: all symbols unit length, Diag pair
/// (p, q) valued from `diag_pair_values` (row-major p < q), everything else
/// orthogonal by default.
GramTable block_gram(int blocks, std::span<const int> diag_pair_values);

/// The 12 x 12 array assembled programmatically from templates D, D, S on the
/// diagonal and P, Y, Y above it.
SkeletonArray skeleton_paper();
/// The same array as a hard-coded cell-for-cell transcription.
SkeletonArray skeleton_paper_literal();
/// A.A = B.B = C.C = 1, A.B = -1, A.C = 1, B.C = 1, E_m orthonormal.
GramTable gram_paper();

struct SkeletonViolation {
  int i, j, k, l;  // 1-based
  int lhs, rhs;
};

struct SkeletonVerifyReport {
  bool pass = true;
  long long equations = 0;
  long long violation_count = 0;
  std::vector<SkeletonViolation> violations;  // lexicographic by (i,j,k,l), capped
};

/// Checks dot(v_ij, v_kl) + dot(v_il, v_kj) = 2 delta_ik delta_jl over all
/// quadruples. jobs <= 0 selects hardware concurrency.
SkeletonVerifyReport verify_skeleton(const SkeletonArray& sk, const GramTable& g,
                                     int jobs = 1, int cap = 32);

/// Fail-fast variant used by the search loop.
bool skeleton_ok(const SkeletonArray& sk, const GramTable& g);

struct SearchConfig {
  int blocks = 3;
  /// Template alphabet per diagonal position (size = blocks).
  std::vector<std::vector<TemplateName>> diag_templates;
  /// Template alphabet per off-diagonal face, row-major p < q.
  std::vector<std::vector<TemplateName>> offdiag_templates;
  /// Gram value alphabet per Diag pair, row-major p < q.
  std::vector<std::vector<int>> gram_values;

  /// Paper block shape with the full template alphabet everywhere and Gram
  /// values in {-1, +1}.
  static SearchConfig defaults(int blocks = 3);
  /// Paper templates fixed; Gram values ranging over {-1, +1}.
  static SearchConfig paper_gram_scan();
};

struct SearchHit {
  std::vector<TemplateName> diag_choice;
  std::vector<TemplateName> offdiag_choice;
  std::vector<int> gram_choice;
  SkeletonArray skeleton;
  GramTable gram;
};

std::uint64_t search_space_size(const SearchConfig& cfg);

/// Enumerates the configured space in a fixed order (positions row-major,
/// diagonal first, then faces, then Gram pairs; the last axis moves fastest;
/// template alphabets in the order D, P, Pt, Y, Z, S; Gram alphabets
/// ascending) and yields the candidates that satisfy verify_skeleton.
/// Throws ConfigTooLarge when the space exceeds `budget`.
std::vector<SearchHit> search_skeletons(const SearchConfig& cfg,
                                        std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace sosf::skel
