#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's evaluators; everything works on plain integers.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// Ascending divisors by scanning candidates up to sqrt(n).
inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

// Counts ordered tuples (f_1, ..., f_m), f_j >= 2, with product n, by walking
// every tuple explicitly. The empty tuple counts for n = 1.
inline std::uint64_t ordered_factorizations_by_enumeration(std::uint64_t n) {
  std::uint64_t count = 0;
  std::function<void(std::uint64_t)> walk = [&](std::uint64_t rest) {
    if (rest == 1) {
      ++count;
      return;
    }
    for (std::uint64_t f = 2; f <= rest; ++f) {
      if (rest % f == 0) walk(rest / f);
    }
  };
  walk(n);
  return count;
}

// Definitional recursions over integers, f(n) = seed(n) + sum_{d | n, d < n} f(d),
// tabulated for 1..limit by scanning every candidate divisor.
inline std::vector<mpz_class> recursion_table(std::uint64_t limit, bool seed_every_n) {
  std::vector<mpz_class> f(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    f[n] = (seed_every_n || n == 1) ? 1 : 0;
    for (auto d : divisors_by_scan(n)) {
      if (d < n) f[n] += f[d];
    }
  }
  return f;
}

// upsilon_1..upsilon_imax over 1..limit by proper-divisor scans.
inline std::vector<std::vector<mpz_class>> upsilon_tables(std::uint64_t limit, std::uint64_t imax) {
  std::vector<std::vector<mpz_class>> t(imax + 1);
  t[1].assign(limit + 1, 1);
  t[1][0] = 0;
  for (std::uint64_t i = 2; i <= imax; ++i) {
    t[i].assign(limit + 1, 0);
    for (std::uint64_t n = 1; n <= limit; ++n) {
      for (auto d : divisors_by_scan(n)) {
        if (d < n) t[i][n] += t[i - 1][d];
      }
    }
  }
  return t;
}

inline mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Conjectured multi-sum written literally as nested loops over i_1..i_{w-1}.
inline mpz_class conjecture_nested(const std::vector<unsigned>& a) {
  if (a.empty()) return 1;
  const std::size_t w = a.size();
  std::vector<unsigned> idx(w - 1, 0);
  mpz_class total = 0;
  while (true) {
    mpz_class term = 1;
    unsigned long partial = 0;
    for (std::size_t k = 0; k + 1 < w; ++k) {
      partial += idx[k];
      term *= binom(a[k], idx[k]) * binom(a[k + 1] + partial, a[k + 1]);
    }
    total += term;
    std::size_t k = 0;
    while (k < idx.size() && idx[k] == a[k]) idx[k++] = 0;
    if (k == idx.size()) break;
    ++idx[k];
  }
  return total << a.back();
}

// Omega(n) and the exponent list of n by trial division.
inline std::vector<unsigned> exponents_by_trial(std::uint64_t n) {
  std::vector<unsigned> e;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned c = 0;
    while (n % p == 0) {
      n /= p;
      ++c;
    }
    if (c) e.push_back(c);
  }
  if (n > 1) e.push_back(1);
  return e;
}

}  // namespace oracle
