#include "sosf/obstruct.hpp"

#include <algorithm>

namespace sosf::obstruct {

bool binom_is_odd(unsigned long long n, unsigned long long k) {
  if (k > n) return false;
  return (k & (n - k)) == 0;
}

TripleVerdict hopf_check(long long r, long long s, long long n) {
  if (r < 1 || s < 1 || n < 1) throw Error("hopf_check requires r, s, n >= 1");
  TripleVerdict verdict;
  verdict.r = r;
  verdict.s = s;
  verdict.n = n;
  long long lo = std::max(n - s + 1, 0LL);
  long long hi = std::min(r - 1, n);  // binom(n, k) = 0 for k > n
  for (long long k = lo; k <= hi; ++k) {
    if (binom_is_odd(static_cast<unsigned long long>(n), static_cast<unsigned long long>(k))) {
      verdict.failing_k.push_back(k);
    }
  }
  verdict.hopf_pass = verdict.failing_k.empty();
  return verdict;
}

long long hurwitz_radon(long long n) {
  if (n < 1) throw Error("hurwitz_radon requires n >= 1");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  int a = v / 4, b = v % 4;
  return 8LL * a + (1LL << b);
}

std::string fact_status_str(FactStatus status) {
  switch (status) {
    case FactStatus::AdmissibleConstructive: return "admissible-constructive";
    case FactStatus::InadmissibleCited: return "inadmissible-cited";
  }
  return "?";
}

std::vector<FactRecord> FactLedger::facts(int r, int s) const {
  std::vector<FactRecord> out;
  for (const FactRecord& rec : records_) {
    if (rec.r == r && rec.s == s) out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const FactRecord& a, const FactRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.field_class < b.field_class;
  });
  return out;
}

}  // namespace sosf::obstruct
