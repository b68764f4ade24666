#include "recdiv/records.hpp"

#include "parallel.hpp"
#include "recdiv/core.hpp"
#include "recdiv/factor.hpp"
#include "recdiv/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace recdiv {

std::string_view to_string(RecordFunction f) { return f == RecordFunction::k ? "K" : "kappa0"; }

std::optional<RecordFunction> parse_record_function(std::string_view name) {
  if (name == "K") return RecordFunction::k;
  if (name == "kappa0") return RecordFunction::kappa0;
  return std::nullopt;
}

RecordTable champions_sieve(std::uint64_t limit, RecordFunction which, unsigned threads) {
  const SieveTable table = which == RecordFunction::k ? k_sieve(limit, threads) : kappa0_sieve(limit, threads);
  RecordTable out{which, {}};
  BigCount best = -1;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (table[n] > best) {
      best = table[n];
      out.entries.push_back({to_big(n), best});
    }
  }
  return out;
}

namespace {

struct Candidate {
  BigCount n;
  Signature signature;
};

class CandidateWalk {
 public:
  CandidateWalk(const BigCount& bound, std::vector<Candidate>& out) : bound_(bound), out_(out) {}

  void run() { walk(1, 0, 0); }

 private:
  std::uint64_t prime(std::size_t k) {
    while (primes_.size() <= k) {
      std::uint64_t c = primes_.empty() ? 2 : primes_.back() + 1;
      while (!is_prime(c)) ++c;
      primes_.push_back(c);
    }
    return primes_[k];
  }

  // n carries exponents_ on the first k primes; the next exponent is <= cap
  // (cap 0 means unbounded, only for the first prime).
  void walk(const BigCount& n, std::size_t k, std::uint32_t cap) {
    out_.push_back({n, Signature(exponents_)});
    const std::uint64_t p = prime(k);
    BigCount next = n * to_big(p);
    for (std::uint32_t e = 1; (cap == 0 || e <= cap) && next <= bound_; ++e) {
      exponents_.push_back(e);
      walk(next, k + 1, e);
      exponents_.pop_back();
      next *= to_big(p);
    }
  }

  const BigCount& bound_;
  std::vector<Candidate>& out_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint32_t> exponents_;
};

}  // namespace

RecordTable champions_signature_search(const BigCount& bound, RecordFunction which,
                                       const SignatureSearchOptions& options) {
  if (bound < 1) throw std::invalid_argument("record search bound must be at least 1");
  std::vector<Candidate> candidates;
  CandidateWalk(bound, candidates).run();
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) { return a.n < b.n; });

  std::vector<BigCount> values(candidates.size());
  detail::parallel_blocks(0, candidates.size(), std::max(options.threads, 1u),
                          [&](std::uint64_t lo, std::uint64_t end, unsigned) {
                            for (std::uint64_t c = lo; c < end; ++c) {
                              const Signature& s = candidates[c].signature;
                              BigCount kappa = kappa0_conjecture(s);
                              if (options.cross_check && kappa != kappa0_theorem2(s)) {
                                throw std::logic_error("conjectured sum disagrees with inclusion-exclusion at " +
                                                       s.to_string());
                              }
                              if (which == RecordFunction::k && !s.empty()) kappa >>= 1;
                              values[c] = std::move(kappa);
                            }
                          });

  RecordTable out{which, {}};
  BigCount best = -1;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (values[c] > best) {
      best = values[c];
      out.entries.push_back({candidates[c].n, best});
    }
  }
  return out;
}

std::vector<std::uint64_t> recursively_perfect(std::uint64_t limit, unsigned threads) {
  const SieveTable table = kappa0_sieve(limit, threads);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (table[n] == to_big(n)) out.push_back(n);
  }
  return out;
}

}  // namespace recdiv
