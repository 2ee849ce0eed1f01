#include <random>

#include "doctest.h"
#include "sosf/quaternion.hpp"

using namespace sosf;
using namespace sosf::quat;

namespace {

Quaternion random_quaternion(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  Quaternion q;
  for (int t = 0; t < 4; ++t) {
    q.c[t] = Rational(num(rng), den(rng));
    q.c[t].canonicalize();
  }
  return q;
}

}  // namespace

TEST_CASE("basis multiplication") {
  CHECK(Quaternion::basis(1) * Quaternion::basis(2) == Quaternion::basis(3));
  CHECK(Quaternion::basis(1) * Quaternion::basis(1) == -Quaternion::basis(0));
  // (-i) j = -k, which is the (1,2) entry of the D template
  CHECK(conj(Quaternion::basis(1)) * Quaternion::basis(2) == -Quaternion::basis(3));
  CHECK(template_by_name(TemplateName::D).at(1, 2) == TemplateEntry{-1, 3});
}

TEST_CASE("tau is conjugation by j") {
  CHECK(tau(Quaternion::basis(0)) == Quaternion::basis(0));
  CHECK(tau(Quaternion::basis(1)) == -Quaternion::basis(1));
  CHECK(tau(Quaternion::basis(2)) == Quaternion::basis(2));
  CHECK(tau(Quaternion::basis(3)) == -Quaternion::basis(3));

  // involutive algebra automorphism preserving (,)+, exhaustively on the basis
  for (int a = 0; a < 4; ++a) {
    Quaternion qa = Quaternion::basis(a);
    CHECK(tau(tau(qa)) == qa);
    for (int b = 0; b < 4; ++b) {
      Quaternion qb = Quaternion::basis(b);
      CHECK(tau(qa * qb) == tau(qa) * tau(qb));
      CHECK(form_plus(tau(qa), tau(qb)) == form_plus(qa, qb));
    }
  }

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Quaternion x = random_quaternion(rng);
    Quaternion y = random_quaternion(rng);
    CHECK(tau(tau(x)) == x);
    CHECK(tau(x * y) == tau(x) * tau(y));
    CHECK(form_plus(tau(x), tau(y)) == form_plus(x, y));
  }
}

TEST_CASE("forms on the basis") {
  for (int t = 0; t < 4; ++t) {
    CHECK(form_plus(Quaternion::basis(t), Quaternion::basis(t)) == 1);
  }
  CHECK(form_minus(Quaternion::basis(0), Quaternion::basis(0)) == -1);
  for (int t = 1; t < 4; ++t) {
    CHECK(form_minus(Quaternion::basis(t), Quaternion::basis(t)) == 1);
  }
  CHECK(form_plus(Quaternion::basis(1), Quaternion::basis(2)) == 0);

  // symmetry on all basis pairs
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Quaternion qa = Quaternion::basis(a), qb = Quaternion::basis(b);
      CHECK(form_plus(qa, qb) == form_plus(qb, qa));
      CHECK(form_minus(qa, qb) == form_minus(qb, qa));
    }
  }
}

TEST_CASE("entry-level forms agree with quaternion-level forms") {
  for (int sa : {-1, +1}) {
    for (int sb : {-1, +1}) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          TemplateEntry ea{sa, a}, eb{sb, b};
          CHECK(Rational(entry_form_plus(ea, eb)) ==
                form_plus(ea.quaternion(), eb.quaternion()));
          CHECK(Rational(entry_form_minus(ea, eb)) ==
                form_minus(ea.quaternion(), eb.quaternion()));
          CHECK(entry_mul(ea, eb).quaternion() == ea.quaternion() * eb.quaternion());
        }
      }
    }
  }
}

TEST_CASE("cyclic invariance of the real part") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Quaternion r = random_quaternion(rng);
    Quaternion s = random_quaternion(rng);
    CHECK(re(r) == re(conj(r)));
    CHECK(re(r * s) == re(s * r));
  }
}

TEST_CASE("template literals match the closed formulas") {
  TemplateCheckReport report = check_templates();
  CHECK(report.checked == 96);
  CHECK(report.pass());

  // spot values straight from the displays
  CHECK(template_entry_formula(TemplateName::D, 0, 0) == TemplateEntry{+1, 0});
  CHECK(template_entry_formula(TemplateName::D, 1, 2) == TemplateEntry{-1, 3});
  CHECK(template_entry_formula(TemplateName::Z, 0, 0) == TemplateEntry{-1, 0});

  // a mutated literal is caught at the right coordinates
  auto grids = templates();
  grids[0].entry[0][0] = TemplateEntry{-1, 0};
  TemplateCheckReport mutated = check_templates(std::span<const Template>(grids.data(), grids.size()));
  REQUIRE(mutated.mismatches.size() == 1);
  CHECK(mutated.mismatches[0].name == TemplateName::D);
  CHECK(mutated.mismatches[0].a == 0);
  CHECK(mutated.mismatches[0].b == 0);

  // restricted to Pt alone
  const Template pt = template_by_name(TemplateName::Pt);
  TemplateCheckReport only_pt = check_templates(std::span<const Template>(&pt, 1));
  CHECK(only_pt.checked == 16);
  CHECK(only_pt.pass());
}

TEST_CASE("block identities hold exhaustively") {
  LemmaCheckReport report = check_lemma_identities();
  CHECK(report.total_checked() == 6 * 256 + 256 + 256 + 256);
  CHECK(report.total_failures() == 0);
  for (const auto& fam : report.families) {
    CHECK(fam.checked == 256);
    CHECK(fam.failures == 0);
  }
  // unit case of the D/P identity: -1 + 1 = 0
  CHECK(entry_form_minus({+1, 0}, {+1, 0}) + entry_form_plus({+1, 0}, {+1, 0}) == 0);
}

TEST_CASE("norm multiplicativity of the six bilinear maps") {
  CHECK(norm_multiplicative(TemplateName::D, Quaternion::basis(1), Quaternion::basis(2)));

  // N(1 + 2i) N(3j - k) = 5 * 10 on both sides
  Quaternion x, y;
  x.c = {1, 2, 0, 0};
  y.c = {0, 0, 3, -1};
  CHECK(norm(x) == 5);
  CHECK(norm(y) == 10);
  CHECK(norm_multiplicative(TemplateName::S, x, y));
  CHECK(norm(template_map(TemplateName::S, x, y)) == 50);

  CHECK(norm_multiplicative(TemplateName::Z, Quaternion{}, y));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Quaternion a = random_quaternion(rng);
    Quaternion b = random_quaternion(rng);
    for (TemplateName name : kTemplateOrder) {
      CHECK(norm_multiplicative(name, a, b));
    }
  }
}
