#include "recdiv/sieve.hpp"

#include "parallel.hpp"
#include "recdiv/factor.hpp"

#include <stdexcept>

namespace recdiv {

std::string_view to_string(SieveFunction f) {
  switch (f) {
    case SieveFunction::k: return "K";
    case SieveFunction::kappa0: return "kappa0";
    case SieveFunction::upsilon: return "upsilon";
  }
  return "unknown";
}

SieveTable::SieveTable(SieveFunction function, std::uint64_t index, std::vector<BigCount> values)
    : function_(function), index_(index), values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("sieve table needs at least one value");
}

const BigCount& SieveTable::at(std::uint64_t n) const {
  if (n == 0 || n >= values_.size()) throw std::out_of_range("sieve index " + std::to_string(n) + " out of range");
  return values_[n];
}

namespace {

void require_limit(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("sieve limit must be at least 1");
}

// values[m] += values[d] for every proper divisor d of m, in an order where
// values[d] is final before it is propagated.
void propagate(std::vector<BigCount>& values, unsigned threads) {
  const std::uint64_t limit = values.size() - 1;
  if (threads <= 1) {
    for (std::uint64_t d = 1; 2 * d <= limit; ++d) {
      for (std::uint64_t m = 2 * d; m <= limit; m += d) values[m] += values[d];
    }
    return;
  }
  // [1, done] is final; every proper divisor of m in (done, 2 done] is <= done.
  for (std::uint64_t done = 1; done < limit;) {
    const std::uint64_t hi = std::min(2 * done, limit);
    detail::parallel_blocks(done + 1, hi + 1, threads, [&](std::uint64_t lo, std::uint64_t end, unsigned) {
      const std::uint64_t last = end - 1;
      for (std::uint64_t d = 1; 2 * d <= last; ++d) {
        std::uint64_t m = std::max(2 * d, (lo + d - 1) / d * d);
        for (; m < end; m += d) values[m] += values[d];
      }
    });
    done = hi;
  }
}

}  // namespace

SieveTable k_sieve(std::uint64_t limit, unsigned threads) {
  require_limit(limit);
  std::vector<BigCount> values(limit + 1, 0);
  values[1] = 1;
  propagate(values, threads);
  return SieveTable(SieveFunction::k, 0, std::move(values));
}

SieveTable kappa0_sieve(std::uint64_t limit, unsigned threads) {
  require_limit(limit);
  std::vector<BigCount> values(limit + 1, 1);
  values[0] = 0;
  propagate(values, threads);
  return SieveTable(SieveFunction::kappa0, 0, std::move(values));
}

std::vector<SieveTable> upsilon_sieve(std::uint64_t limit, std::uint64_t i_max, unsigned threads) {
  require_limit(limit);
  if (i_max == 0) throw std::invalid_argument("upsilon sieve needs i_max >= 1");
  std::vector<SieveTable> tables;
  tables.reserve(i_max);
  std::vector<BigCount> prev(limit + 1, 1);
  prev[0] = 0;
  tables.emplace_back(SieveFunction::upsilon, 1, prev);
  for (std::uint64_t i = 2; i <= i_max; ++i) {
    std::vector<BigCount> next(limit + 1, 0);
    // Each worker owns a block of m and reads only the previous table.
    detail::parallel_blocks(2, limit + 1, std::max(threads, 1u), [&](std::uint64_t lo, std::uint64_t end, unsigned) {
      const std::uint64_t last = end - 1;
      for (std::uint64_t d = 1; 2 * d <= last; ++d) {
        if (sgn(prev[d]) == 0) continue;
        std::uint64_t m = std::max(2 * d, (lo + d - 1) / d * d);
        for (; m < end; m += d) next[m] += prev[d];
      }
    });
    tables.emplace_back(SieveFunction::upsilon, i, next);
    prev = std::move(next);
  }
  return tables;
}

std::vector<Method> all_methods() {
  return {Method::recursive, Method::theorem1, Method::theorem2, Method::conjecture, Method::macmahon, Method::sieve};
}

namespace {

constexpr const char* kTwiceK = "kappa0=2K";
constexpr const char* kPowerOfTwo = "2^alpha*|kappa0";
constexpr const char* kDivisorSum = "kappa0=sum_{d|n}K(d)";
constexpr const char* kUpsilonSum = "kappa0=sum_i upsilon_i";

}  // namespace

VerifyReport verify_range(std::uint64_t limit, std::span<const Method> methods, const VerifyOptions& options) {
  require_limit(limit);
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = std::max(options.threads, 1u);

  VerifyReport report;
  report.limit = limit;
  report.methods.assign(methods.begin(), methods.end());
  if (options.identities) report.identities = {kTwiceK, kPowerOfTwo, kDivisorSum, kUpsilonSum};

  const SieveTable kappa = kappa0_sieve(limit, threads);
  const SieveTable k = k_sieve(limit, threads);
  const SpfTable spf = smallest_prime_factor_sieve(std::max<std::uint64_t>(limit, 2));

  std::vector<std::vector<Mismatch>> found(threads);
  detail::parallel_blocks(1, limit + 1, threads, [&](std::uint64_t lo, std::uint64_t end, unsigned worker) {
    auto& out = found[worker];
    auto check = [&](std::uint64_t n, const std::string& name, const BigCount& got, const BigCount& expected) {
      if (got != expected) out.push_back({n, name, got, expected});
    };
    for (std::uint64_t n = lo; n < end; ++n) {
      const auto f = factorize(n, spf);
      const auto s = signature_of(f);
      const BigCount& expected = kappa[n];
      for (Method m : methods) {
        if (m == Method::sieve) {
          check(n, std::string(to_string(m)), n == 1 ? k[1] : BigCount(2 * k[n]), expected);
        } else {
          check(n, std::string(to_string(m)), options.evaluate ? options.evaluate(m, s, n) : kappa0_by(m, s), expected);
        }
      }
      if (!options.identities) continue;
      if (n >= 2) check(n, kTwiceK, 2 * k[n], expected);
      BigCount remainder = expected;
      mpz_fdiv_r_2exp(remainder.get_mpz_t(), expected.get_mpz_t(), s.alpha_star());
      check(n, kPowerOfTwo, remainder, 0);
      BigCount divisor_sum = 0;
      for (auto d : divisors(f)) divisor_sum += k[d];
      check(n, kDivisorSum, divisor_sum, expected);
      BigCount generations = 0;
      for (std::uint64_t i = 1; i <= s.big_omega() + 1; ++i) generations += upsilon_via_tau(s, i);
      check(n, kUpsilonSum, generations, expected);
    }
  });
  // Blocks are contiguous and ascending, so concatenation is ordered by n.
  for (auto& block : found) {
    for (auto& m : block) report.mismatches.push_back(std::move(m));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace recdiv
