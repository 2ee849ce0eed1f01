#include <set>

#include "doctest.h"
#include "sosf/skeleton.hpp"

using namespace sosf;
using namespace sosf::skel;

TEST_CASE("symbol parsing and printing") {
  CHECK(FormalSymbol::parse("A") == FormalSymbol::diag(1));
  CHECK(FormalSymbol::parse("E12") == FormalSymbol::basis(12));
  CHECK(FormalSymbol::basis(5).str() == "E5");
  CHECK_THROWS_AS(FormalSymbol::parse("Q9"), ParseError);

  CHECK(SignedSymbol::parse("-E3") == SignedSymbol{-1, FormalSymbol::basis(3)});
  CHECK(SignedSymbol::parse("+B") == SignedSymbol{+1, FormalSymbol::diag(2)});
  CHECK(SignedSymbol::parse("C") == SignedSymbol{+1, FormalSymbol::diag(3)});
  CHECK(SignedSymbol::parse("\xE2\x88\x92" "E7") == SignedSymbol{-1, FormalSymbol::basis(7)});
  CHECK(SignedSymbol{-1, FormalSymbol::basis(12)}.str() == "-E12");
}

TEST_CASE("paper gram table values") {
  GramTable g = gram_paper();
  CHECK(g.value(FormalSymbol::diag(1), FormalSymbol::diag(2)) == -1);
  CHECK(g.value(FormalSymbol::diag(1), FormalSymbol::diag(3)) == 1);
  CHECK(g.value(FormalSymbol::diag(2), FormalSymbol::diag(3)) == 1);
  for (int p = 1; p <= 3; ++p) CHECK(g.value(FormalSymbol::diag(p), FormalSymbol::diag(p)) == 1);
  CHECK(g.value(FormalSymbol::basis(5), FormalSymbol::basis(5)) == 1);
  CHECK(g.value(FormalSymbol::diag(3), FormalSymbol::basis(7)) == 0);
  CHECK(g.value(FormalSymbol::basis(2), FormalSymbol::basis(16)) == 0);
  CHECK_THROWS_AS(g.value(FormalSymbol::basis(17), FormalSymbol::basis(2)), UnknownSymbol);
}

TEST_CASE("formal dot") {
  GramTable g = gram_paper();
  SignedSymbol pa{+1, FormalSymbol::diag(1)};
  SignedSymbol ma{-1, FormalSymbol::diag(1)};
  SignedSymbol pc{+1, FormalSymbol::diag(3)};
  CHECK(formal_dot(pa, ma, g) == -1);
  CHECK(formal_dot(pa, pc, g) == 1);
  CHECK(formal_dot({-1, FormalSymbol::basis(9)}, {+1, FormalSymbol::basis(9)}, g) == -1);
}

TEST_CASE("paper skeleton: assembly equals the literal transcription") {
  SkeletonArray assembled = skeleton_paper();
  SkeletonArray literal = skeleton_paper_literal();
  REQUIRE(assembled.rows == 12);
  REQUIRE(assembled.cols == 12);
  REQUIRE(literal.rows == 12);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(assembled.at(i, j) == literal.at(i, j));
    }
  }
  // spot cells (1-based coordinates of the display)
  CHECK(assembled.at(0, 0) == SignedSymbol{+1, FormalSymbol::diag(1)});
  CHECK(assembled.at(0, 1) == SignedSymbol{+1, FormalSymbol::basis(2)});
  CHECK(assembled.at(11, 0) == SignedSymbol{-1, FormalSymbol::basis(12)});
}

TEST_CASE("verify_skeleton accepts the paper array") {
  SkeletonVerifyReport report = verify_skeleton(skeleton_paper(), gram_paper());
  CHECK(report.pass);
  CHECK(report.equations == 20736);
  CHECK(report.violation_count == 0);

  // multi-threaded run gives the identical report
  SkeletonVerifyReport parallel = verify_skeleton(skeleton_paper(), gram_paper(), 4);
  CHECK(parallel.pass);
  CHECK(parallel.equations == report.equations);
}

TEST_CASE("verify_skeleton rejects a sign flip with the expected quadruple") {
  SkeletonArray sk = skeleton_paper();
  sk.at(0, 1).sign = -sk.at(0, 1).sign;  // cell (1,2)
  SkeletonVerifyReport report = verify_skeleton(sk, gram_paper());
  CHECK_FALSE(report.pass);
  REQUIRE(!report.violations.empty());
  // (-E2).(-E2) + A.A = 2 != 0 shows up at (1,2,2,1); the lexicographically
  // first label of that equation is (1,1,2,2).
  CHECK(report.violations[0].i == 1);
  CHECK(report.violations[0].j == 1);
  CHECK(report.violations[0].k == 2);
  CHECK(report.violations[0].l == 2);
  CHECK(report.violations[0].lhs == 2);
  CHECK(report.violations[0].rhs == 0);
  bool found_1221 = false;
  for (const auto& v : report.violations) {
    if (v.i == 1 && v.j == 2 && v.k == 2 && v.l == 1) {
      found_1221 = true;
      CHECK(v.lhs == 2);
      CHECK(v.rhs == 0);
    }
  }
  CHECK(found_1221);
}

TEST_CASE("degenerate 1x1 skeleton") {
  GramTable g(true);
  g.set(FormalSymbol::diag(1), FormalSymbol::diag(1), 1);
  SkeletonArray sk;
  sk.rows = sk.cols = 1;
  sk.cells = {SignedSymbol{+1, FormalSymbol::diag(1)}};
  SkeletonVerifyReport report = verify_skeleton(sk, g);
  CHECK(report.pass);
  CHECK(report.equations == 1);
}

TEST_CASE("deduplicated equation set gives the same verdict") {
  // (i,j,k,l) ~ (k,l,i,j) ~ (i,l,k,j): checking representatives with
  // (i,j) <= (k,l) and the flipped-cell mutants must agree with the full loop.
  GramTable g = gram_paper();
  auto dedup_pass = [&](const SkeletonArray& sk) {
    for (int i = 0; i < sk.rows; ++i)
      for (int j = 0; j < sk.cols; ++j)
        for (int k = i; k < sk.rows; ++k)
          for (int l = (k == i ? j : 0); l < sk.cols; ++l) {
            int lhs = formal_dot(sk.at(i, j), sk.at(k, l), g) +
                      formal_dot(sk.at(i, l), sk.at(k, j), g);
            int rhs = (i == k && j == l) ? 2 : 0;
            if (lhs != rhs) return false;
          }
    return true;
  };

  SkeletonArray ok = skeleton_paper();
  CHECK(dedup_pass(ok) == verify_skeleton(ok, g).pass);
  for (int cell : {0, 13, 47, 143}) {
    SkeletonArray bad = skeleton_paper();
    bad.cells[static_cast<size_t>(cell)].sign *= -1;
    CHECK(dedup_pass(bad) == verify_skeleton(bad, g).pass);
  }
}

TEST_CASE("all 144 single-flip mutants fail") {
  GramTable g = gram_paper();
  SkeletonArray base = skeleton_paper();
  for (int cell = 0; cell < 144; ++cell) {
    SkeletonArray mutant = base;
    mutant.cells[static_cast<size_t>(cell)].sign *= -1;
    SkeletonVerifyReport report = verify_skeleton(mutant, g, 1, 1);
    CAPTURE(cell);
    CHECK_FALSE(report.pass);
    CHECK(!report.violations.empty());
  }
}

TEST_CASE("search rediscovers the paper Gram assignment") {
  SearchConfig cfg = SearchConfig::paper_gram_scan();
  CHECK(search_space_size(cfg) == 8);
  std::vector<SearchHit> hits = search_skeletons(cfg);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].gram_choice == std::vector<int>{-1, +1, +1});
  CHECK(hits[0].skeleton == skeleton_paper());

  // (+1,+1,+1) fails on the {1,2} face
  GramTable all_plus = block_gram(3, std::vector<int>{+1, +1, +1});
  CHECK_FALSE(skeleton_ok(skeleton_paper(), all_plus));
}

TEST_CASE("search covers template choices and respects budget and order") {
  SearchConfig cfg = SearchConfig::paper_gram_scan();
  cfg.diag_templates = {{TemplateName::D, TemplateName::S},
                        {TemplateName::D, TemplateName::S},
                        {TemplateName::D, TemplateName::S}};
  cfg.offdiag_templates = {{TemplateName::P, TemplateName::Y},
                           {TemplateName::P, TemplateName::Y},
                           {TemplateName::P, TemplateName::Y}};
  CHECK(search_space_size(cfg) == 512);
  std::vector<SearchHit> hits = search_skeletons(cfg, 1024);

  bool has_paper = false;
  for (const SearchHit& hit : hits) {
    if (hit.diag_choice == std::vector<TemplateName>{TemplateName::D, TemplateName::D, TemplateName::S} &&
        hit.offdiag_choice == std::vector<TemplateName>{TemplateName::P, TemplateName::Y, TemplateName::Y} &&
        hit.gram_choice == std::vector<int>{-1, +1, +1}) {
      has_paper = true;
    }
    // every reported hit actually verifies
    CHECK(verify_skeleton(hit.skeleton, hit.gram, 1, 1).pass);
  }
  CHECK(has_paper);

  CHECK_THROWS_AS(search_skeletons(cfg, 100), ConfigTooLarge);

  SearchConfig empty_cfg = SearchConfig::paper_gram_scan();
  empty_cfg.diag_templates[1].clear();
  CHECK(search_skeletons(empty_cfg).empty());
}
