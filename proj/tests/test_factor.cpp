#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recdiv/factor.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

using namespace recdiv;

TEST_CASE("smallest prime factor sieve") {
  const auto t = smallest_prime_factor_sieve(12);
  CHECK(t.limit() == 12);
  CHECK(t[12] == 2);
  CHECK(t[9] == 3);
  CHECK(t[7] == 7);
  CHECK(smallest_prime_factor_sieve(2)[2] == 2);
  CHECK_THROWS_AS(smallest_prime_factor_sieve(1), std::invalid_argument);
  CHECK_THROWS_AS(smallest_prime_factor_sieve(0), std::invalid_argument);
}

TEST_CASE("sieve invariants") {
  const auto t = smallest_prime_factor_sieve(5000);
  for (std::uint32_t i = 2; i <= 5000; ++i) {
    CHECK(i % t[i] == 0);
    CHECK((t[i] == i) == is_prime(i));
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(36).pairs() == std::vector<PrimePower>{{2, 2}, {3, 2}});
  CHECK(factorize(1).empty());
  CHECK(factorize(12).pairs() == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  const auto t = smallest_prime_factor_sieve(100);
  CHECK_THROWS_AS(factorize(0, t), std::invalid_argument);
  CHECK_THROWS_AS(factorize(101, t), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n and agrees with the sieve path") {
  const auto t = smallest_prime_factor_sieve(10000);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == to_big(n));
    CHECK(f == factorize(n, t));
    for (const auto& [p, e] : f.pairs()) {
      CHECK(is_prime(p));
      CHECK(e >= 1);
    }
  }
}

TEST_CASE("factorize large 64-bit inputs") {
  // 2^61 - 1 is prime; 18446744073709551557 is the largest 64-bit prime.
  CHECK(factorize((1ull << 61) - 1).pairs() == std::vector<PrimePower>{{(1ull << 61) - 1, 1}});
  CHECK(factorize(18446744073709551557ull).size() == 1);
  const std::uint64_t n = 1000003ull * 1000003ull * 999983ull;
  CHECK(factorize(n).pairs() == std::vector<PrimePower>{{999983, 1}, {1000003, 2}});
  CHECK(factorize(1ull << 63).pairs() == std::vector<PrimePower>{{2, 63}});
}

TEST_CASE("signature_of") {
  auto s = signature_of(PrimeFactorization({{2, 2}, {3, 1}}));
  CHECK(std::vector<std::uint32_t>(s.exponents().begin(), s.exponents().end()) == std::vector<std::uint32_t>{2, 1});
  CHECK(s.omega() == 2);
  CHECK(s.big_omega() == 3);
  CHECK(s.alpha_star() == 2);

  auto one = signature_of(PrimeFactorization{});
  CHECK(one.empty());
  CHECK(one.omega() == 0);
  CHECK(one.big_omega() == 0);
  CHECK(one.alpha_star() == 0);

  auto sq = signature_of(PrimeFactorization({{2, 1}, {3, 1}, {5, 1}}));
  CHECK(sq == Signature({1, 1, 1}));
  CHECK(sq.omega() == 3);

  // canonical order regardless of prime order
  CHECK(signature_of(PrimeFactorization({{2, 1}, {3, 4}})) == Signature({4, 1}));
  CHECK(Signature({1, 3, 2}).to_string() == "(3,2,1)");
  CHECK_THROWS_AS(Signature({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeFactorization({{3, 1}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("n_from_signature") {
  CHECK(n_from_signature(Signature({2, 1})) == 12);
  CHECK(n_from_signature(Signature{}) == 1);
  CHECK(n_from_signature(Signature({1, 1})) == 6);
  CHECK(n_from_signature(Signature({1, 2})) == 12);
}

TEST_CASE("n_from_signature is minimal over a brute-force scan") {
  // For every n <= 20000 the minimal representative of its signature is <= n.
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    CHECK(n_from_signature(signature_of(n)) <= to_big(n));
  }
}

TEST_CASE("signature round trip over canonical signatures with Omega <= 20") {
  // Enumerate every partition of every Omega <= 20 as a non-increasing tuple.
  std::size_t count = 0;
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t remaining, std::uint32_t cap) {
    Signature s(parts);
    const BigCount n = n_from_signature(s);
    if (fits_u64(n)) {
      CHECK(signature_of(to_u64(n)) == s);
    } else {
      // Build the factorization directly when n exceeds 64 bits.
      const auto primes = first_primes(parts.size());
      std::vector<PrimePower> pairs;
      for (std::size_t k = 0; k < parts.size(); ++k) pairs.push_back({primes[k], parts[k]});
      CHECK(signature_of(PrimeFactorization(pairs)) == s);
      CHECK(PrimeFactorization(pairs).value() == n);
    }
    ++count;
    for (std::uint32_t next = std::min(remaining, cap); next >= 1; --next) {
      parts.push_back(next);
      walk(remaining - next, next);
      parts.pop_back();
    }
  };
  walk(20, 20);
  // sum_{k=0}^{20} p(k) = 2714
  CHECK(count == 2714);
}

TEST_CASE("divisors ascending and complete") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto d = divisors(factorize(n));
    std::vector<std::uint64_t> scan;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (n % k == 0) scan.push_back(k);
    }
    CHECK(d == scan);
  }
}

TEST_CASE("is_prime against trial division") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint64_t n = rng() % 100000000ull;
    bool prime = n >= 2;
    for (std::uint64_t p = 2; p * p <= n && prime; ++p) {
      if (n % p == 0) prime = false;
    }
    CHECK(is_prime(n) == prime);
  }
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
}
