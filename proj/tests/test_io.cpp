#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "sosf/io.hpp"

using namespace sosf;
using namespace sosf::io;

namespace {

std::string data_path(const char* name) { return std::string(SOSF_DATA_DIR) + "/" + name; }

std::string temp_path(const char* name) {
  return std::string("/tmp/sosf_io_test_") + name;
}

}  // namespace

TEST_CASE("scalar encodings round-trip in every field kind") {
  FieldSpec qq = FieldSpec::rationals();
  FieldSpec qi = FieldSpec::gaussian_rationals();
  FieldSpec f13 = FieldSpec::prime_field(13);
  FieldSpec f7i = FieldSpec::prime_field_with_i(7);

  Scalar cases[] = {
      Scalar::of_rational(qq, Rational(-5, 6)),
      Scalar::of_rational(qq, 7),
      Scalar::of_pair(qi, Rational(1, 2), Rational(-3, 4)),
      Scalar::of_int(f13, 11),
      Scalar::of_pair(f7i, 3, 5),
  };
  for (const Scalar& s : cases) {
    CHECK(scalar_from_json(scalar_to_json(s), s.field()) == s);
  }
  CHECK(scalar_to_json(Scalar::of_rational(qq, Rational(5, 6))) == json("5/6"));
  CHECK(scalar_to_json(Scalar::of_rational(qq, 3)) == json("3"));
  CHECK(scalar_to_json(Scalar::of_int(f13, -1)) == json("12"));
  json gauss = scalar_to_json(Scalar::of_pair(qi, 1, -1));
  CHECK(gauss.at("re") == "1");
  CHECK(gauss.at("im") == "-1");

  // lenient inputs: bare integers, negative residues
  CHECK(scalar_from_json(json(3), qq) == Scalar::of_int(qq, 3));
  CHECK(scalar_from_json(json("-1"), f13) == Scalar::of_int(f13, 12));
  CHECK_THROWS_AS(scalar_from_json(json("x/y"), qq), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json("1/0"), qq), ParseError);
}

TEST_CASE("field descriptors round-trip") {
  for (const FieldSpec& spec :
       {FieldSpec::rationals(), FieldSpec::gaussian_rationals(), FieldSpec::prime_field(17),
        FieldSpec::prime_field_with_i(11)}) {
    CHECK(field_from_json(field_to_json(spec)) == spec);
  }
  CHECK_THROWS_AS(field_from_json(json{{"kind", "FP"}, {"p", 2}}), InvalidField);
  CHECK_THROWS_AS(field_from_json(json{{"kind", "XX"}}), ParseError);
  CHECK_THROWS_AS(field_from_json(json{{"kind", "FP"}}), ParseError);
}

TEST_CASE("formula files round-trip losslessly") {
  formula::Formula f = formula::build_12_12_18(FieldSpec::gaussian_rationals());
  std::string path = temp_path("formula.json");
  write_formula(f, path);
  formula::Formula back = read_formula(path);
  CHECK(back == f);
  std::remove(path.c_str());

  formula::Formula fixture = formula::classical_fixture(4);
  CHECK(formula_from_json(formula_to_json(fixture)) == fixture);
}

TEST_CASE("formula parse errors carry diagnostics") {
  // vector of wrong length at (1,2)
  json j = formula_to_json(formula::classical_fixture(2));
  j["coeffs"][0][1].push_back("0");
  try {
    formula_from_json(j);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }

  // characteristic 2 is rejected
  json f2 = formula_to_json(formula::classical_fixture(1));
  f2["field"] = json{{"kind", "FP"}, {"p", 2}};
  CHECK_THROWS_AS(formula_from_json(f2), InvalidField);

  json missing = formula_to_json(formula::classical_fixture(1));
  missing.erase("coeffs");
  CHECK_THROWS_AS(formula_from_json(missing), ParseError);
}

TEST_CASE("skeleton and gram table files round-trip") {
  skel::SkeletonArray sk = skel::skeleton_paper();
  CHECK(skeleton_from_json(skeleton_to_json(sk)) == sk);

  skel::GramTable g = skel::gram_paper();
  skel::GramTable back = gram_table_from_json(gram_table_to_json(g));
  CHECK(back.orthogonal_default() == g.orthogonal_default());
  CHECK(back.symbols() == g.symbols());
  CHECK(back.pairs() == g.pairs());

  // shipped data files parse and agree with the built-in construction
  CHECK(read_skeleton(data_path("skeleton_paper.json")) == sk);
  skel::GramTable shipped = read_gram_table(data_path("gram_paper.json"));
  CHECK(shipped.pairs() == g.pairs());
  CHECK(shipped.orthogonal_default() == g.orthogonal_default());
}

TEST_CASE("gram matrix files round-trip") {
  FieldSpec qq = FieldSpec::rationals();
  std::vector<std::vector<Scalar>> rows = {
      {Scalar::of_int(qq, 1), Scalar::of_int(qq, -1), Scalar::of_int(qq, 1)},
      {Scalar::of_int(qq, -1), Scalar::of_int(qq, 1), Scalar::of_int(qq, 1)},
      {Scalar::of_int(qq, 1), Scalar::of_int(qq, 1), Scalar::of_int(qq, 1)},
  };
  gram::GramMatrix g(qq, rows);
  CHECK(gram_matrix_from_json(gram_matrix_to_json(g)) == g);
  CHECK(read_gram_matrix(data_path("gram_paper_matrix.json")) == g);
}

TEST_CASE("search config parsing") {
  json j;
  j["blocks"] = 3;
  j["diag_templates"] = json::array({json::array({"D"}), json::array({"D"}), json::array({"S"})});
  j["offdiag_templates"] = json::array({json::array({"P"}), json::array({"Y"}), json::array({"Y"})});
  j["gram_values"] = json::array({-1, 1});
  skel::SearchConfig cfg = search_config_from_json(j);
  CHECK(cfg.blocks == 3);
  CHECK(cfg.diag_templates == skel::SearchConfig::paper_gram_scan().diag_templates);
  CHECK(cfg.gram_values == skel::SearchConfig::paper_gram_scan().gram_values);

  json bad = j;
  bad["diag_templates"] = json::array({json::array({"Q"}), json::array({"D"}), json::array({"S"})});
  CHECK_THROWS_AS(search_config_from_json(bad), ParseError);

  // defaults: full alphabet everywhere
  skel::SearchConfig dflt = search_config_from_json(json::object());
  CHECK(dflt.diag_templates.size() == 3);
  CHECK(dflt.diag_templates[0].size() == 6);
  CHECK(search_space_size(dflt) == 6ull * 6 * 6 * 6 * 6 * 6 * 8);
}

TEST_CASE("ledger backing files verify by expansion") {
  obstruct::FactLedger ledger = read_ledger(data_path("ledger.json"));
  int constructive = 0;
  for (const obstruct::FactRecord& rec : ledger.all()) {
    if (rec.status != obstruct::FactStatus::AdmissibleConstructive) continue;
    ++constructive;
    formula::Formula f = read_formula(data_path(rec.backing_file.c_str()));
    CHECK(f.r == rec.r);
    CHECK(f.s == rec.s);
    CHECK(f.n == rec.n);
    CHECK(formula::verify_expansion(f, 2).pass);
  }
  CHECK(constructive >= 5);
}

TEST_CASE("the shipped paper formula file matches the construction") {
  formula::Formula shipped = read_formula(data_path("formula_12_12_18_qi.json"));
  CHECK(shipped == formula::build_12_12_18(FieldSpec::gaussian_rationals()));
}
