#include "recdiv/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recdiv {

PrimeFactorization::PrimeFactorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if (pairs_[k].prime < 2 || pairs_[k].exponent == 0) {
      throw std::invalid_argument("factorization entries need prime >= 2 and exponent >= 1");
    }
    if (k > 0 && pairs_[k - 1].prime >= pairs_[k].prime) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
  }
}

BigCount PrimeFactorization::value() const {
  BigCount n = 1;
  for (const auto& [p, e] : pairs_) {
    BigCount pe;
    mpz_pow_ui(pe.get_mpz_t(), to_big(p).get_mpz_t(), e);
    n *= pe;
  }
  return n;
}

Signature::Signature(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  if (std::find(exponents_.begin(), exponents_.end(), 0u) != exponents_.end()) {
    throw std::invalid_argument("signature exponents must be positive");
  }
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  big_omega_ = std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::string Signature::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(exponents_[k]);
  }
  return out + ")";
}

SpfTable::SpfTable(std::uint32_t limit) : limit_(limit), spf_(std::size_t{limit} + 1, 0) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t m = i * i; m <= limit; m += i) {
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(i);
    }
  }
}

SpfTable smallest_prime_factor_sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
  if (limit > 0xffffffffull) throw std::invalid_argument("sieve limit exceeds 32 bits");
  return SpfTable(static_cast<std::uint32_t>(limit));
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < r; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  std::vector<PrimePower> pairs;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) pairs.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +/- 1 wheel; stop once the cofactor is prime or has no factor <= sqrt.
  bool cofactor_prime = n > 1 && is_prime(n);
  for (std::uint64_t p = 5; n > 1 && !cofactor_prime; p += 6) {
    if (p > n / p) break;
    for (std::uint64_t q : {p, p + 2}) {
      if (n % q == 0) {
        strip(q);
        cofactor_prime = n > 1 && is_prime(n);
      }
    }
  }
  if (n > 1) pairs.push_back({n, 1});
  return PrimeFactorization(std::move(pairs));
}

PrimeFactorization factorize(std::uint64_t n, const SpfTable& table) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  if (n > table.limit()) throw std::invalid_argument("n exceeds the sieve limit");
  std::vector<PrimePower> pairs;
  auto m = static_cast<std::uint32_t>(n);
  while (m > 1) {
    std::uint32_t p = table[m];
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  return PrimeFactorization(std::move(pairs));
}

Signature signature_of(const PrimeFactorization& f) {
  std::vector<std::uint32_t> exps;
  exps.reserve(f.size());
  for (const auto& pp : f.pairs()) exps.push_back(pp.exponent);
  return Signature(std::move(exps));
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  for (std::uint64_t c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (std::uint64_t p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

BigCount n_from_signature(const Signature& s) {
  const auto primes = first_primes(s.omega());
  BigCount n = 1;
  for (std::size_t k = 0; k < s.omega(); ++k) {
    BigCount pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), primes[k], s.exponents()[k]);
    n *= pe;
  }
  return n;
}

std::vector<std::uint64_t> divisors(const PrimeFactorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.pairs()) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace recdiv
