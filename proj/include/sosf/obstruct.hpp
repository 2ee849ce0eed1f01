#pragma once

#include <string>
#include <vector>

#include "sosf/field.hpp"

namespace sosf::obstruct {

struct TripleVerdict {
  long long r = 0, s = 0, n = 0;
  bool hopf_pass = true;
  std::vector<long long> failing_k;  // sorted ascending
};

/// binom(n, k) is odd iff k AND (n - k) == 0 bitwise (Kummer / Lucas mod 2).
bool binom_is_odd(unsigned long long n, unsigned long long k);

/// Hopf condition: binom(n, k) must be even for every k with n - s < k < r.
TripleVerdict hopf_check(long long r, long long s, long long n);

/// Hurwitz-Radon function: n = 2^(4a+b) * odd with 0 <= b <= 3 gives
/// rho(n) = 8a + 2^b.
long long hurwitz_radon(long long n);

enum class FactStatus { AdmissibleConstructive, InadmissibleCited };

std::string fact_status_str(FactStatus status);

struct FactRecord {
  int r = 0, s = 0, n = 0;
  std::string field_class;
  FactStatus status = FactStatus::InadmissibleCited;
  std::string citation;
  std::string backing_file;  // relative to the ledger file, constructive records only
};

/// Immutable record set of cited and constructively backed admissibility
/// facts. Constructive records are verified against their backing formula
/// files by the test suite; cited records are never recomputed here.
class FactLedger {
public:
  FactLedger() = default;
  explicit FactLedger(std::vector<FactRecord> records) : records_(std::move(records)) {}

  const std::vector<FactRecord>& all() const { return records_; }
  std::vector<FactRecord> facts(int r, int s) const;

private:
  std::vector<FactRecord> records_;
};

}  // namespace sosf::obstruct
