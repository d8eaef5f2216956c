#include "hamcert/number_lemmas.hpp"

#include "hamcert/explicit_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hamcert {

namespace {

std::vector<int> primes_up_to(int bound) {
  std::vector<int> out;
  for (int n = 2; n <= bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

bool some_power_works(long long p, long long q) {
  for (long long c : {1, 2, 4})
    if ((c * p) % q == 1 % q) return true;
  return false;
}

}  // namespace

std::vector<std::pair<int, int>> lemma_0modpandq(int bound) {
  if (bound < 27) throw std::invalid_argument("bound must be at least 27");
  const auto primes = primes_up_to(bound);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const int small = primes[i], large = primes[j];
      if (some_power_works(small, large) && some_power_works(large, small)) out.emplace_back(large, small);
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.second, x.first) < std::pair(y.second, y.first);
  });
  return out;
}

Add3Report lemma_add3(int p, int q, int jobs) {
  if (p == q || p <= 3 || q <= 3 || !is_prime(p) || !is_prime(q))
    throw std::invalid_argument("p and q must be distinct primes above 3");
  const int n = p * q;
  std::vector<char> unit(static_cast<std::size_t>(n));
  std::vector<int> units;
  for (int r = 0; r < n; ++r) {
    unit[static_cast<std::size_t>(r)] = std::gcd(r, n) == 1;
    if (unit[static_cast<std::size_t>(r)]) units.push_back(r);
  }
  long long bad = 0;
  const auto is_unit = [&](int r) { return unit[static_cast<std::size_t>(r % n)] != 0; };
  auto check_x = [&](int x) {
    long long local_bad = 0;
    for (int a1 : units)
      for (int a2 : units)
        for (int a3 : units) {
          const bool ok = is_unit(x) || is_unit(x + a1) || is_unit(x + a2) || is_unit(x + a3) ||
                          is_unit(x + a1 + a2) || is_unit(x + a1 + a3) || is_unit(x + a2 + a3) ||
                          is_unit(x + a1 + a2 + a3);
          if (!ok) ++local_bad;
        }
    return local_bad;
  };
  if (jobs <= 1) {
    for (int x = 0; x < n; ++x) bad += check_x(x);
  } else {
#pragma omp parallel for num_threads(jobs) schedule(dynamic) reduction(+ : bad)
    for (int x = 0; x < n; ++x) bad += check_x(x);
  }
  const auto u = static_cast<long long>(units.size());
  return {bad == 0, static_cast<long long>(n) * u * u * u, bad};
}

std::vector<std::pair<int, int>> congruence_sweep(int lo, int hi, int cp, int cq) {
  std::vector<int> primes;
  for (int r = lo + 1; r < hi; ++r)
    if (is_prime(r)) primes.push_back(r);
  std::vector<std::pair<int, int>> out;
  for (int p : primes)
    for (int q : primes)
      if (p != q && (static_cast<long long>(cp) * p) % q == 1 && (static_cast<long long>(cq) * q) % p == 1)
        out.emplace_back(p, q);
  return out;
}

}  // namespace hamcert
