#pragma once

#include "recdiv/bigcount.hpp"
#include "recdiv/core.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace recdiv {

enum class SieveFunction { k, kappa0, upsilon };

std::string_view to_string(SieveFunction f);

/// Values of one arithmetic function on 1..limit.
class SieveTable {
 public:
  SieveTable(SieveFunction function, std::uint64_t index, std::vector<BigCount> values);

  SieveFunction function() const { return function_; }
  /// The i of upsilon_i; 0 for K and kappa0.
  std::uint64_t index() const { return index_; }
  std::uint64_t limit() const { return values_.size() - 1; }

  /// Value at n, 1 <= n <= limit. Throws std::out_of_range otherwise.
  const BigCount& at(std::uint64_t n) const;
  const BigCount& operator[](std::uint64_t n) const { return values_[n]; }
  /// Values for n = 1..limit.
  std::span<const BigCount> values() const { return std::span(values_).subspan(1); }

  friend bool operator==(const SieveTable&, const SieveTable&) = default;

 private:
  SieveFunction function_;
  std::uint64_t index_;
  std::vector<BigCount> values_;  // slot 0 unused
};

/// K on 1..limit by forward propagation: each value is added to every larger
/// multiple. With threads > 1 the range is filled in doubling phases (every
/// proper divisor of m <= 2L is <= L), each phase split into contiguous blocks.
SieveTable k_sieve(std::uint64_t limit, unsigned threads = 1);
SieveTable kappa0_sieve(std::uint64_t limit, unsigned threads = 1);

/// upsilon_1..upsilon_imax on 1..limit; element i-1 holds upsilon_i.
std::vector<SieveTable> upsilon_sieve(std::uint64_t limit, std::uint64_t i_max, unsigned threads = 1);

struct Mismatch {
  std::uint64_t n = 0;
  std::string check;  // method name or identity name
  BigCount got;
  BigCount expected;
};

struct VerifyReport {
  std::uint64_t limit = 0;
  std::vector<Method> methods;
  std::vector<std::string> identities;
  std::vector<Mismatch> mismatches;  // ascending n, then check order
  std::chrono::duration<double> elapsed{};

  bool ok() const { return mismatches.empty(); }
  const Mismatch* first_mismatch() const { return mismatches.empty() ? nullptr : &mismatches.front(); }
};

struct VerifyOptions {
  unsigned threads = 1;
  bool identities = true;
  /// Per-n evaluator for the non-sieve methods; defaults to kappa0_by.
  std::function<BigCount(Method, const Signature&, std::uint64_t n)> evaluate{};
};

/// Compares every selected method's kappa0 against the kappa0 sieve for all
/// n <= limit, and (optionally) checks kappa0 = 2K, 2^{alpha*} | kappa0,
/// kappa0 = sum_{d|n} K(d) and kappa0 = sum_i upsilon_{i+1}. Method::sieve
/// means the K sieve route (2K for n >= 2). Mismatches are collected, not thrown.
VerifyReport verify_range(std::uint64_t limit, std::span<const Method> methods, const VerifyOptions& options = {});

/// Every method, in declaration order.
std::vector<Method> all_methods();

}  // namespace recdiv
