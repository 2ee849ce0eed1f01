#include "sosf/skeleton.hpp"

#include <sstream>

#include "sosf/parallel.hpp"

namespace sosf::skel {

namespace {

std::pair<FormalSymbol, FormalSymbol> ordered(const FormalSymbol& a, const FormalSymbol& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Tokens of the displayed table: A, B, C for the diagonal anchors, "+m"/"-m"
// for +E_m and -E_m.
SignedSymbol table_token(const std::string& tok) {
  if (tok == "A") return {+1, FormalSymbol::diag(1)};
  if (tok == "B") return {+1, FormalSymbol::diag(2)};
  if (tok == "C") return {+1, FormalSymbol::diag(3)};
  int sign = tok[0] == '-' ? -1 : +1;
  return {sign, FormalSymbol::basis(std::stoi(tok.substr(1)))};
}

constexpr const char* kPaperTable[12] = {
    "A   +2  +3  +4  +5  +6  +7  +8  +9 +10 +11 +12",
    "-2   A  -4  +3  -6  +5  +8  -7 -10  +9 -12 +11",
    "-3  +4   A  -2  -7  -8  +5  +6 +11 -12  -9 +10",
    "-4  -3  +2   A  -8  +7  -6  +5 -12 -11 +10  +9",
    "+5  -6  -7  -8   B  +2  +3  +4 +13 +14 +15 +16",
    "+6  +5  -8  +7  -2   B  -4  +3 -14 +13 -16 +15",
    "+7  +8  +5  -6  -3  +4   B  -2 +15 -16 -13 +14",
    "+8  -7  +6  +5  -4  -3  +2   B -16 -15 +14 +13",
    "-9 +10 -11 +12 -13 +14 -15 +16   C  -2  +3  -4",
    "-10 -9 +12 +11 -14 -13 +16 +15  +2   C  -4  -3",
    "-11 +12 +9 -10 -15 +16 +13 -14  -3  +4   C  -2",
    "-12 -11 -10 -9 -16 -15 -14 -13  +4  +3  +2   C",
};

struct Face {
  int p, q;  // 1-based block row/col, p < q
};

std::vector<Face> faces_of(int blocks) {
  std::vector<Face> faces;
  for (int p = 1; p <= blocks; ++p)
    for (int q = p + 1; q <= blocks; ++q) faces.push_back({p, q});
  return faces;
}

void place_block(SkeletonArray& sk, int bp, int bq, TemplateName name,
                 const std::array<FormalSymbol, 4>& tuple) {
  const quat::Template& t = quat::template_by_name(name);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      quat::TemplateEntry e = t.at(a, b);
      sk.at(4 * (bp - 1) + a, 4 * (bq - 1) + b) = {e.sign, tuple[static_cast<size_t>(e.t)]};
    }
  }
}

}  // namespace

FormalSymbol FormalSymbol::parse(const std::string& text) {
  if (text == "A") return diag(1);
  if (text == "B") return diag(2);
  if (text == "C") return diag(3);
  if (text.size() >= 2 && text[0] == 'E') {
    try {
      size_t pos = 0;
      int m = std::stoi(text.substr(1), &pos);
      if (pos == text.size() - 1) return basis(m);
    } catch (const std::exception&) {
    }
  }
  throw ParseError("bad symbol '" + text + "' (expected A | B | C | E<m>)");
}

std::string FormalSymbol::str() const {
  if (kind == SymbolKind::Diag) {
    switch (index) {
      case 1: return "A";
      case 2: return "B";
      case 3: return "C";
      default: return "D" + std::to_string(index);
    }
  }
  return "E" + std::to_string(index);
}

SignedSymbol SignedSymbol::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty signed symbol");
  std::string body = text;
  int sign = +1;
  if (body[0] == '+') {
    body = body.substr(1);
  } else if (body[0] == '-') {
    sign = -1;
    body = body.substr(1);
  } else if (body.size() >= 3 && body.compare(0, 3, "\xE2\x88\x92") == 0) {
    sign = -1;  // U+2212 minus sign
    body = body.substr(3);
  }
  return {sign, FormalSymbol::parse(body)};
}

std::string SignedSymbol::str() const {
  return (sign < 0 ? "-" : "+") + symbol.str();
}

void GramTable::set(const FormalSymbol& a, const FormalSymbol& b, int v) {
  symbols_.insert(a);
  symbols_.insert(b);
  pairs_[ordered(a, b)] = v;
}

int GramTable::value(const FormalSymbol& a, const FormalSymbol& b) const {
  if (!contains(a)) throw UnknownSymbol("symbol " + a.str() + " not in Gram table");
  if (!contains(b)) throw UnknownSymbol("symbol " + b.str() + " not in Gram table");
  auto it = pairs_.find(ordered(a, b));
  if (it != pairs_.end()) return it->second;
  if (orthogonal_default_) return 0;
  throw UnknownSymbol("pair (" + a.str() + ", " + b.str() + ") not in Gram table");
}

int formal_dot(const SignedSymbol& x, const SignedSymbol& y, const GramTable& g) {
  return x.sign * y.sign * g.value(x.symbol, y.symbol);
}

TemplateName transpose_partner(TemplateName name) {
  switch (name) {
    case TemplateName::P: return TemplateName::Pt;
    case TemplateName::Pt: return TemplateName::P;
    case TemplateName::Y: return TemplateName::Z;
    case TemplateName::Z: return TemplateName::Y;
    case TemplateName::D: return TemplateName::D;
    case TemplateName::S: return TemplateName::S;
  }
  throw Error("unknown template");
}

SkeletonArray assemble_blocks(int blocks, std::span<const TemplateName> diag,
                              std::span<const TemplateName> offdiag) {
  auto faces = faces_of(blocks);
  if (static_cast<int>(diag.size()) != blocks || offdiag.size() != faces.size()) {
    throw DimensionMismatch("assemble_blocks: template counts do not match block shape");
  }
  SkeletonArray sk;
  sk.rows = sk.cols = 4 * blocks;
  sk.cells.assign(static_cast<size_t>(sk.rows) * sk.cols, SignedSymbol{+1, FormalSymbol::diag(1)});

  for (int p = 1; p <= blocks; ++p) {
    std::array<FormalSymbol, 4> tuple = {FormalSymbol::diag(p), FormalSymbol::basis(2),
                                         FormalSymbol::basis(3), FormalSymbol::basis(4)};
    place_block(sk, p, p, diag[static_cast<size_t>(p - 1)], tuple);
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    int base = 5 + 4 * static_cast<int>(f);
    std::array<FormalSymbol, 4> tuple = {
        FormalSymbol::basis(base), FormalSymbol::basis(base + 1),
        FormalSymbol::basis(base + 2), FormalSymbol::basis(base + 3)};
    TemplateName upper = offdiag[f];
    place_block(sk, faces[f].p, faces[f].q, upper, tuple);
    place_block(sk, faces[f].q, faces[f].p, transpose_partner(upper), tuple);
  }
  return sk;
}

GramTable block_gram(int blocks, std::span<const int> diag_pair_values) {
  auto faces = faces_of(blocks);
  if (diag_pair_values.size() != faces.size()) {
    throw DimensionMismatch("block_gram: Gram value count does not match block shape");
  }
  GramTable g(true);
  for (int p = 1; p <= blocks; ++p) {
    g.set(FormalSymbol::diag(p), FormalSymbol::diag(p), 1);
  }
  for (size_t f = 0; f < faces.size(); ++f) {
    g.set(FormalSymbol::diag(faces[f].p), FormalSymbol::diag(faces[f].q),
          diag_pair_values[f]);
  }
  int basis_top = 4 + 4 * static_cast<int>(faces.size());
  for (int m = 2; m <= basis_top; ++m) {
    g.set(FormalSymbol::basis(m), FormalSymbol::basis(m), 1);
  }
  return g;
}

SkeletonArray skeleton_paper() {
  const TemplateName diag[] = {TemplateName::D, TemplateName::D, TemplateName::S};
  const TemplateName offdiag[] = {TemplateName::P, TemplateName::Y, TemplateName::Y};
  return assemble_blocks(3, diag, offdiag);
}

SkeletonArray skeleton_paper_literal() {
  SkeletonArray sk;
  sk.rows = sk.cols = 12;
  sk.cells.reserve(144);
  for (const char* row : kPaperTable) {
    std::istringstream in(row);
    std::string tok;
    while (in >> tok) sk.cells.push_back(table_token(tok));
  }
  if (sk.cells.size() != 144) throw Error("paper table transcription is malformed");
  return sk;
}

GramTable gram_paper() {
  const int values[] = {-1, +1, +1};  // A.B, A.C, B.C
  return block_gram(3, values);
}

SkeletonVerifyReport verify_skeleton(const SkeletonArray& sk, const GramTable& g,
                                     int jobs, int cap) {
  cap = std::max(cap, 1);  // a failing report always names a quadruple
  for (const SignedSymbol& cell : sk.cells) {
    if (!g.contains(cell.symbol)) {
      throw UnknownSymbol("skeleton symbol " + cell.symbol.str() + " not in Gram table");
    }
  }

  long long outer = static_cast<long long>(sk.rows) * sk.cols;
  int chunk_count = detail::resolve_jobs(jobs);
  chunk_count = static_cast<int>(std::min<long long>(chunk_count, std::max<long long>(outer, 1)));

  struct ChunkResult {
    long long violation_count = 0;
    std::vector<SkeletonViolation> violations;
  };
  std::vector<ChunkResult> results(static_cast<size_t>(chunk_count));

  detail::run_chunked(outer, chunk_count, [&](int chunk, long long begin, long long end) {
    ChunkResult& out = results[static_cast<size_t>(chunk)];
    for (long long ij = begin; ij < end; ++ij) {
      int i = static_cast<int>(ij / sk.cols);
      int j = static_cast<int>(ij % sk.cols);
      for (int k = 0; k < sk.rows; ++k) {
        for (int l = 0; l < sk.cols; ++l) {
          int lhs = formal_dot(sk.at(i, j), sk.at(k, l), g) +
                    formal_dot(sk.at(i, l), sk.at(k, j), g);
          int rhs = (i == k && j == l) ? 2 : 0;
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

  SkeletonVerifyReport report;
  report.equations = outer * outer;
  for (const ChunkResult& r : results) {
    report.violation_count += r.violation_count;
    for (const SkeletonViolation& v : r.violations) {
      if (static_cast<int>(report.violations.size()) < cap) report.violations.push_back(v);
    }
  }
  report.pass = report.violation_count == 0;
  return report;
}

bool skeleton_ok(const SkeletonArray& sk, const GramTable& g) {
  for (int i = 0; i < sk.rows; ++i)
    for (int j = 0; j < sk.cols; ++j)
      for (int k = 0; k < sk.rows; ++k)
        for (int l = 0; l < sk.cols; ++l) {
          int lhs = formal_dot(sk.at(i, j), sk.at(k, l), g) +
                    formal_dot(sk.at(i, l), sk.at(k, j), g);
          int rhs = (i == k && j == l) ? 2 : 0;
          if (lhs != rhs) return false;
        }
  return true;
}

SearchConfig SearchConfig::defaults(int blocks) {
  SearchConfig cfg;
  cfg.blocks = blocks;
  std::vector<TemplateName> all(quat::kTemplateOrder.begin(), quat::kTemplateOrder.end());
  cfg.diag_templates.assign(static_cast<size_t>(blocks), all);
  size_t nfaces = static_cast<size_t>(blocks) * (blocks - 1) / 2;
  cfg.offdiag_templates.assign(nfaces, all);
  cfg.gram_values.assign(nfaces, {-1, +1});
  return cfg;
}

SearchConfig SearchConfig::paper_gram_scan() {
  SearchConfig cfg;
  cfg.blocks = 3;
  cfg.diag_templates = {{TemplateName::D}, {TemplateName::D}, {TemplateName::S}};
  cfg.offdiag_templates = {{TemplateName::P}, {TemplateName::Y}, {TemplateName::Y}};
  cfg.gram_values = {{-1, +1}, {-1, +1}, {-1, +1}};
  return cfg;
}

std::uint64_t search_space_size(const SearchConfig& cfg) {
  std::uint64_t size = 1;
  auto mul = [&size](size_t n) {
    if (n == 0) {
      size = 0;
      return;
    }
    if (size > (std::uint64_t{1} << 62) / n) {
      size = std::uint64_t{1} << 63;  // saturate; only compared against budgets
      return;
    }
    size *= n;
  };
  for (const auto& a : cfg.diag_templates) mul(a.size());
  for (const auto& a : cfg.offdiag_templates) mul(a.size());
  for (const auto& a : cfg.gram_values) mul(a.size());
  return size;
}

std::vector<SearchHit> search_skeletons(const SearchConfig& cfg, std::uint64_t budget) {
  if (cfg.blocks < 1 || cfg.blocks > 3) {
    throw ConfigTooLarge("search supports 1..3 blocks, got " + std::to_string(cfg.blocks));
  }
  size_t nfaces = static_cast<size_t>(cfg.blocks) * (cfg.blocks - 1) / 2;
  if (cfg.diag_templates.size() != static_cast<size_t>(cfg.blocks) ||
      cfg.offdiag_templates.size() != nfaces || cfg.gram_values.size() != nfaces) {
    throw DimensionMismatch("search config alphabets do not match block shape");
  }

  std::uint64_t size = search_space_size(cfg);
  if (size == 0) return {};
  if (size > budget) {
    throw ConfigTooLarge("search space has " + std::to_string(size) +
                         " candidates, budget is " + std::to_string(budget));
  }

  // Odometer axes in enumeration order; the last axis moves fastest. Gram
  // alphabets are scanned in ascending order.
  std::vector<std::vector<int>> axes;
  for (const auto& a : cfg.diag_templates) {
    std::vector<int> axis;
    for (TemplateName t : quat::kTemplateOrder) {
      for (TemplateName choice : a) {
        if (choice == t) axis.push_back(static_cast<int>(t));
      }
    }
    axes.push_back(axis);
  }
  for (const auto& a : cfg.offdiag_templates) {
    std::vector<int> axis;
    for (TemplateName t : quat::kTemplateOrder) {
      for (TemplateName choice : a) {
        if (choice == t) axis.push_back(static_cast<int>(t));
      }
    }
    axes.push_back(axis);
  }
  for (const auto& a : cfg.gram_values) {
    std::vector<int> axis(a.begin(), a.end());
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    axes.push_back(axis);
  }

  std::vector<size_t> pos(axes.size(), 0);
  std::vector<SearchHit> hits;
  size_t b = static_cast<size_t>(cfg.blocks);
  while (true) {
    SearchHit hit;
    for (size_t x = 0; x < b; ++x) {
      hit.diag_choice.push_back(static_cast<TemplateName>(axes[x][pos[x]]));
    }
    for (size_t x = 0; x < nfaces; ++x) {
      hit.offdiag_choice.push_back(static_cast<TemplateName>(axes[b + x][pos[b + x]]));
    }
    for (size_t x = 0; x < nfaces; ++x) {
      hit.gram_choice.push_back(axes[b + nfaces + x][pos[b + nfaces + x]]);
    }

    hit.skeleton = assemble_blocks(cfg.blocks, hit.diag_choice, hit.offdiag_choice);
    hit.gram = block_gram(cfg.blocks, hit.gram_choice);
    if (skeleton_ok(hit.skeleton, hit.gram)) hits.push_back(std::move(hit));

    // advance odometer
    size_t axis = axes.size();
    while (axis > 0) {
      --axis;
      if (++pos[axis] < axes[axis].size()) break;
      pos[axis] = 0;
      if (axis == 0) return hits;
    }
  }
}

}  // namespace sosf::skel
