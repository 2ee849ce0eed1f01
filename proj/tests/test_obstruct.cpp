#include <gmpxx.h>

#include "doctest.h"
#include "sosf/io.hpp"
#include "sosf/obstruct.hpp"

using namespace sosf;
using namespace sosf::obstruct;

TEST_CASE("submask parity equals big-integer binomial parity up to n = 64") {
  for (unsigned long n = 0; n <= 64; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), n, k);
      bool odd_big = mpz_odd_p(b.get_mpz_t()) != 0;
      CHECK(binom_is_odd(n, k) == odd_big);
    }
  }
}

TEST_CASE("hopf verdicts for the key triples") {
  TripleVerdict good = hopf_check(12, 12, 18);
  CHECK(good.hopf_pass);
  CHECK(good.failing_k.empty());
  // oracle values for the window k = 7..11
  long expected[5] = {31824, 43758, 48620, 43758, 31824};
  for (int k = 7; k <= 11; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 18, static_cast<unsigned long>(k));
    CHECK(b == expected[k - 7]);
    CHECK(mpz_even_p(b.get_mpz_t()));
  }

  CHECK(hopf_check(12, 12, 20).hopf_pass);

  TripleVerdict bad = hopf_check(3, 3, 3);
  CHECK_FALSE(bad.hopf_pass);
  REQUIRE(!bad.failing_k.empty());
  CHECK(bad.failing_k[0] == 1);
  CHECK(bad.failing_k == std::vector<long long>{1, 2});

  TripleVerdict trivial = hopf_check(1, 1, 1);
  CHECK(trivial.hopf_pass);  // empty k range

  CHECK_THROWS_AS(hopf_check(0, 1, 1), Error);
}

TEST_CASE("hurwitz-radon closed form") {
  CHECK(hurwitz_radon(1) == 1);
  CHECK(hurwitz_radon(2) == 2);
  CHECK(hurwitz_radon(4) == 4);
  CHECK(hurwitz_radon(8) == 8);
  CHECK(hurwitz_radon(16) == 9);
  CHECK(hurwitz_radon(32) == 10);
  CHECK(hurwitz_radon(64) == 12);
  CHECK(hurwitz_radon(128) == 16);
  CHECK(hurwitz_radon(256) == 17);

  for (long long odd = 1; odd <= 1023; odd += 2) {
    CHECK(hurwitz_radon(2 * odd) == 2);
  }
  // rho depends only on the 2-adic valuation
  for (long long n = 1; n <= 1024; ++n) {
    long long v = n, pow2 = 1;
    while (v % 2 == 0) {
      v /= 2;
      pow2 *= 2;
    }
    CHECK(hurwitz_radon(n) == hurwitz_radon(pow2));
  }
}

TEST_CASE("fact ledger slices") {
  FactLedger ledger = io::read_ledger(std::string(SOSF_DATA_DIR) + "/ledger.json");

  auto slice = ledger.facts(12, 12);
  REQUIRE(slice.size() == 2);
  CHECK(slice[0].n == 18);
  CHECK(slice[0].status == FactStatus::AdmissibleConstructive);
  CHECK(!slice[0].backing_file.empty());
  CHECK(slice[1].n == 20);
  CHECK(slice[1].status == FactStatus::InadmissibleCited);
  CHECK(slice[1].field_class == "formally-real");
  CHECK(slice[1].citation.find("Yiu") != std::string::npos);

  auto two = ledger.facts(2, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].n == 2);
  CHECK(two[0].status == FactStatus::AdmissibleConstructive);

  CHECK(ledger.facts(5, 7).empty());
}

TEST_CASE("field-uniform obstructions do not decide the separation") {
  // both triples clear the Hopf gate, yet the ledger records the real
  // inadmissibility of [12,12,20]
  CHECK(hopf_check(12, 12, 18).hopf_pass);
  CHECK(hopf_check(12, 12, 20).hopf_pass);
  FactLedger ledger = io::read_ledger(std::string(SOSF_DATA_DIR) + "/ledger.json");
  bool cited_inadmissible = false;
  for (const FactRecord& rec : ledger.facts(12, 12)) {
    if (rec.n == 20 && rec.status == FactStatus::InadmissibleCited &&
        rec.field_class == "formally-real") {
      cited_inadmissible = true;
    }
  }
  CHECK(cited_inadmissible);
}
