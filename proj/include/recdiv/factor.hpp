#pragma once

#include "recdiv/bigcount.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace recdiv {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer as (prime, exponent) pairs with
/// strictly increasing primes. The integer 1 is the empty factorization.
class PrimeFactorization {
 public:
  PrimeFactorization() = default;
  /// Throws std::invalid_argument unless primes are strictly increasing and
  /// every exponent is positive. Primality itself is not checked.
  explicit PrimeFactorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// Product of prime^exponent.
  BigCount value() const;

  friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

/// Exponent multiset of a factorization, kept in non-increasing order.
class Signature {
 public:
  Signature() = default;
  /// Accepts exponents in any order and canonicalises them. Zero exponents
  /// are rejected with std::invalid_argument.
  explicit Signature(std::vector<std::uint32_t> exponents);

  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::size_t omega() const { return exponents_.size(); }
  std::uint64_t big_omega() const { return big_omega_; }
  std::uint32_t alpha_star() const { return exponents_.empty() ? 0 : exponents_.front(); }
  bool empty() const { return exponents_.empty(); }

  /// "(2,1)" style rendering; "()" for the empty signature.
  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.exponents_ == b.exponents_; }
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
    return a.exponents_ <=> b.exponents_;
  }

 private:
  std::vector<std::uint32_t> exponents_;
  std::uint64_t big_omega_ = 0;
};

/// Smallest-prime-factor table for 2..limit. Immutable once built.
class SpfTable {
 public:
  explicit SpfTable(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  /// Smallest prime factor of i, for 2 <= i <= limit.
  std::uint32_t spf(std::uint32_t i) const { return spf_[i]; }
  std::uint32_t operator[](std::uint32_t i) const { return spf_[i]; }

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

SpfTable smallest_prime_factor_sieve(std::uint64_t limit);

/// Trial division (with a primality test on the remaining cofactor).
PrimeFactorization factorize(std::uint64_t n);
PrimeFactorization factorize(std::uint64_t n, const SpfTable& table);

Signature signature_of(const PrimeFactorization& f);
inline Signature signature_of(std::uint64_t n) { return signature_of(factorize(n)); }

/// Least integer with the given signature: largest exponents on the smallest
/// primes.
BigCount n_from_signature(const Signature& s);

/// The first `count` primes, 2, 3, 5, ...
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// All divisors of the factorized integer, ascending. Requires the integer to
/// fit in 64 bits.
std::vector<std::uint64_t> divisors(const PrimeFactorization& f);

}  // namespace recdiv
