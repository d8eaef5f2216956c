#pragma once

#include <utility>
#include <vector>

namespace hamcert {

/// Prime pairs (p, q), p, q <= bound, admitting i, j in {0, 1, 2} with
/// 2^i p = 1 (mod q) and 2^j q = 1 (mod p). Each pair is listed once as
/// (larger, smaller), ordered by the smaller prime and then the larger.
std::vector<std::pair<int, int>> lemma_0modpandq(int bound);

struct Add3Report {
  bool holds = false;
  long long cases = 0;
  long long counterexamples = 0;
};

/// For every x mod pq and every triple of units a_1, a_2, a_3 mod pq, checks
/// that x + sum_{i in I} a_i is a unit for some I in {1, 2, 3}.
Add3Report lemma_add3(int p, int q, int jobs = 1);

/// Distinct primes lo < p, q < hi with cp * p = 1 (mod q) and
/// cq * q = 1 (mod p).
std::vector<std::pair<int, int>> congruence_sweep(int lo, int hi, int cp, int cq);

}  // namespace hamcert
