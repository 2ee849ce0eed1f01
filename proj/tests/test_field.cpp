#include <random>
#include <set>

#include "doctest.h"
#include "sosf/field.hpp"

using namespace sosf;

namespace {

Scalar random_scalar(const FieldSpec& spec, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-99, 99);
  std::uniform_int_distribution<int> den(1, 9);
  bool residue_kind =
      spec.kind() == FieldKind::PrimeField || spec.kind() == FieldKind::PrimeFieldWithI;
  auto coord = [&] {
    Rational q(num(rng), residue_kind ? 1 : den(rng));
    q.canonicalize();
    return q;
  };
  Rational a = coord(), b = coord();
  if (!spec.is_extension()) return Scalar::of_rational(spec, a);
  return Scalar::of_pair(spec, a, b);
}

}  // namespace

TEST_CASE("field spec construction and validation") {
  CHECK(FieldSpec::rationals().name() == "qq");
  CHECK(FieldSpec::gaussian_rationals().name() == "qi");
  CHECK(FieldSpec::prime_field(5).name() == "fp:5");
  CHECK(FieldSpec::prime_field_with_i(7).name() == "fpi:7");

  CHECK_THROWS_AS(FieldSpec::prime_field(2), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime_field(9), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), InvalidField);
  // t^2 + 1 splits mod p = 1 (mod 4)
  CHECK_THROWS_AS(FieldSpec::prime_field_with_i(5), InvalidField);
  CHECK_THROWS_AS(FieldSpec::prime_field_with_i(2), InvalidField);

  CHECK(FieldSpec::parse("qq") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("fp:13") == FieldSpec::prime_field(13));
  CHECK(FieldSpec::parse("fpi:3") == FieldSpec::prime_field_with_i(3));
  CHECK_THROWS_AS(FieldSpec::parse("fp:x"), ParseError);
  CHECK_THROWS_AS(FieldSpec::parse("zz"), ParseError);
}

TEST_CASE("scalar arithmetic in each field kind") {
  FieldSpec qq = FieldSpec::rationals();
  FieldSpec qi = FieldSpec::gaussian_rationals();
  FieldSpec f5 = FieldSpec::prime_field(5);

  CHECK(Scalar::of_rational(qq, Rational(1, 2)) + Scalar::of_rational(qq, Rational(1, 3)) ==
        Scalar::of_rational(qq, Rational(5, 6)));

  Scalar i = sqrt_minus_one(qi);
  CHECK(i * i == Scalar::of_int(qi, -1));

  Scalar two = Scalar::of_int(f5, 2);
  CHECK(two * two == Scalar::of_int(f5, 4));
  CHECK(two * two == Scalar::of_int(f5, -1));

  CHECK(Scalar::of_int(f5, 3).str() == "3");
  CHECK(Scalar::of_int(f5, -1).str() == "4");
  CHECK(Scalar::gaussian(1, -2).str() == "1-2i");
}

TEST_CASE("scalar division and error paths") {
  FieldSpec qq = FieldSpec::rationals();
  FieldSpec qi = FieldSpec::gaussian_rationals();
  FieldSpec f5 = FieldSpec::prime_field(5);
  FieldSpec f7i = FieldSpec::prime_field_with_i(7);

  CHECK(Scalar::of_rational(qq, 3) / Scalar::of_rational(qq, 4) ==
        Scalar::of_rational(qq, Rational(3, 4)));
  CHECK_THROWS_AS(Scalar::one(qq) / Scalar::zero(qq), DivisionByZero);
  CHECK_THROWS_AS(Scalar::one(qq) + Scalar::one(f5), FieldMismatch);

  // (1 + i)(1 - i) = 2
  Scalar z = Scalar::gaussian(1, 1);
  CHECK(z * z.inverse() == Scalar::one(qi));

  for (long v = 1; v < 5; ++v) {
    Scalar x = Scalar::of_int(f5, v);
    CHECK(x * x.inverse() == Scalar::one(f5));
  }
  // every nonzero element of F_49 is invertible
  for (long a = 0; a < 7; ++a) {
    for (long b = 0; b < 7; ++b) {
      if (a == 0 && b == 0) continue;
      Scalar x = Scalar::of_pair(f7i, a, b);
      CHECK(x * x.inverse() == Scalar::one(f7i));
    }
  }
  CHECK_THROWS_AS(Scalar::zero(f7i).inverse(), DivisionByZero);
}

TEST_CASE("sqrt_minus_one per field kind") {
  CHECK(sqrt_minus_one(FieldSpec::gaussian_rationals()) == Scalar::gaussian(0, 1));
  CHECK(sqrt_minus_one(FieldSpec::prime_field(5)) == Scalar::of_int(FieldSpec::prime_field(5), 2));
  CHECK_THROWS_AS(sqrt_minus_one(FieldSpec::rationals()), NoSquareRootOfMinusOne);
  CHECK_THROWS_AS(sqrt_minus_one(FieldSpec::prime_field(7)), NoSquareRootOfMinusOne);

  // oracle: the squares mod 7 are {0, 1, 2, 4}, so -1 = 6 is not among them
  std::set<long> squares;
  for (long v = 0; v < 7; ++v) squares.insert((v * v) % 7);
  CHECK(squares == std::set<long>{0, 1, 2, 4});

  FieldSpec f7i = FieldSpec::prime_field_with_i(7);
  Scalar t = sqrt_minus_one(f7i);
  CHECK(t == Scalar::of_pair(f7i, 0, 1));
  CHECK(t * t + Scalar::one(f7i) == Scalar::zero(f7i));

  // u^2 + 1 = 0 exactly in every supported field that has u
  for (const FieldSpec& spec :
       {FieldSpec::gaussian_rationals(), FieldSpec::prime_field(5), FieldSpec::prime_field(13),
        FieldSpec::prime_field(17), FieldSpec::prime_field_with_i(3),
        FieldSpec::prime_field_with_i(7), FieldSpec::prime_field_with_i(11)}) {
    Scalar u = sqrt_minus_one(spec);
    CHECK(u * u + Scalar::one(spec) == Scalar::zero(spec));
  }

  // the canonical residue is the least positive root
  CHECK(sqrt_minus_one(FieldSpec::prime_field(13)) ==
        Scalar::of_int(FieldSpec::prime_field(13), 5));
  CHECK(sqrt_minus_one(FieldSpec::prime_field(17)) ==
        Scalar::of_int(FieldSpec::prime_field(17), 4));
}

TEST_CASE("specialize_scalar examples") {
  FieldSpec f5 = FieldSpec::prime_field(5);
  FieldSpec f13 = FieldSpec::prime_field(13);
  FieldSpec f17 = FieldSpec::prime_field(17);

  // (-1 + i) -> -1 + 2 = 1 mod 5
  CHECK(specialize_scalar(Scalar::gaussian(-1, 1), f5) == Scalar::of_int(f5, 1));
  CHECK(specialize_scalar(Scalar::gaussian(3, 0), f13) == Scalar::of_int(f13, 3));
  CHECK(specialize_scalar(Scalar::gaussian(0, 1), f17) == Scalar::of_int(f17, 4));

  CHECK_THROWS_AS(specialize_scalar(Scalar::gaussian(1, 1), FieldSpec::prime_field(7)),
                  NoSquareRootOfMinusOne);
  CHECK_THROWS_AS(specialize_scalar(Scalar::gaussian(Rational(1, 2), 0), f5),
                  NonIntegralCoefficient);
}

TEST_CASE("specialize_scalar is a ring homomorphism on small Gaussian integers") {
  for (const FieldSpec& spec : {FieldSpec::prime_field(5), FieldSpec::prime_field(13),
                                FieldSpec::prime_field_with_i(7)}) {
    for (int za = -3; za <= 3; ++za) {
      for (int zb = -3; zb <= 3; ++zb) {
        for (int wa = -3; wa <= 3; ++wa) {
          for (int wb = -3; wb <= 3; ++wb) {
            Scalar z = Scalar::gaussian(za, zb);
            Scalar w = Scalar::gaussian(wa, wb);
            CHECK(specialize_scalar(z + w, spec) ==
                  specialize_scalar(z, spec) + specialize_scalar(w, spec));
            CHECK(specialize_scalar(z * w, spec) ==
                  specialize_scalar(z, spec) * specialize_scalar(w, spec));
          }
        }
      }
    }
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937 rng(20240811);
  for (const FieldSpec& spec :
       {FieldSpec::rationals(), FieldSpec::gaussian_rationals(), FieldSpec::prime_field(13),
        FieldSpec::prime_field_with_i(7)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar x = random_scalar(spec, rng);
      CHECK(x.normalized() == x);
      CHECK(x.normalized().normalized() == x.normalized());
    }
  }
  // residues are reduced into [0, p-1]
  FieldSpec f13 = FieldSpec::prime_field(13);
  CHECK(Scalar::of_int(f13, 40) == Scalar::of_int(f13, 1));
  CHECK(Scalar::of_int(f13, -40) == Scalar::of_int(f13, 12));
  CHECK(Scalar::of_rational(f13, Rational(1, 2)) == Scalar::of_int(f13, 7));
}
