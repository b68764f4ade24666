#include "recdiv/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace recdiv {

namespace {

// ---------------------------------------------------------------------------
// Pascal triangle

class PascalTriangle {
 public:
  // Multiplies acc by C(n, k) for n < kPascalRows, k <= n.
  void multiply(BigCount& acc, std::uint32_t n, std::uint32_t k) {
    acc *= row(n)[k];
  }

  const std::vector<BigCount>& row(std::uint32_t n) {
    {
      std::shared_lock lock(mu_);
      if (n < rows_.size()) return rows_[n];
    }
    std::unique_lock lock(mu_);
    if (rows_.empty()) rows_.push_back({BigCount(1)});
    while (rows_.size() <= n) {
      const auto& prev = rows_.back();
      std::vector<BigCount> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(next));
    }
    return rows_[n];
  }

 private:
  std::shared_mutex mu_;
  // deque: growing never moves existing rows.
  std::deque<std::vector<BigCount>> rows_;
};

PascalTriangle& pascal() {
  static PascalTriangle instance;
  return instance;
}

// acc *= C(n, k)
void mul_binomial(BigCount& acc, std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    acc = 0;
    return;
  }
  if (n < kPascalRows) {
    pascal().multiply(acc, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
    return;
  }
  BigCount b;
  mpz_bin_uiui(b.get_mpz_t(), n, std::min(k, n - k));
  acc *= b;
}

// ---------------------------------------------------------------------------
// Memo caches

using ExponentKey = std::vector<std::uint32_t>;

template <typename Key>
class Memo {
 public:
  std::optional<BigCount> find(const Key& key) const {
    std::shared_lock lock(mu_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  // Last writer wins; concurrent writers store identical values.
  void store(Key key, const BigCount& value) {
    std::unique_lock lock(mu_);
    values_.insert_or_assign(std::move(key), value);
  }

  void clear() {
    std::unique_lock lock(mu_);
    values_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, BigCount> values_;
};

struct Caches {
  Memo<ExponentKey> k;
  Memo<ExponentKey> kappa0;
  Memo<std::pair<std::uint64_t, ExponentKey>> upsilon;
  Memo<std::pair<std::uint64_t, std::uint32_t>> kappa_x;
};

Caches& caches() {
  static Caches instance;
  return instance;
}

ExponentKey key_of(const Signature& s) { return {s.exponents().begin(), s.exponents().end()}; }

// Calls f(sub_signature, multiplicity) once per distinct signature among the
// proper divisors of any n carrying signature s. A divisor is an exponent tuple
// beta <= alpha componentwise with beta != alpha; multiplicity counts how many
// divisors share that signature.
template <typename F>
void for_each_proper_divisor(const Signature& s, F&& f) {
  const auto alpha = s.exponents();
  std::map<ExponentKey, std::uint64_t> grouped;
  std::vector<std::uint32_t> beta(alpha.size(), 0);
  ExponentKey sub;
  sub.reserve(alpha.size());
  while (true) {
    if (!std::equal(beta.begin(), beta.end(), alpha.begin())) {
      sub.clear();
      for (auto b : beta) {
        if (b) sub.push_back(b);
      }
      std::sort(sub.begin(), sub.end(), std::greater<>());
      ++grouped[sub];
    }
    std::size_t k = 0;
    while (k < beta.size() && beta[k] == alpha[k]) beta[k++] = 0;
    if (k == beta.size()) break;
    ++beta[k];
  }
  for (auto& [exps, count] : grouped) f(Signature(exps), count);
}

enum class Seed { epsilon, one };

// f(n) = seed(n) + sum over proper divisors d of f(d), on signatures.
BigCount signature_recursion(Memo<ExponentKey>& memo, Seed seed, const Signature& s) {
  auto key = key_of(s);
  if (auto hit = memo.find(key)) return *hit;
  BigCount total = (seed == Seed::one || s.empty()) ? 1 : 0;
  for_each_proper_divisor(s, [&](const Signature& d, std::uint64_t count) {
    total += signature_recursion(memo, seed, d) * to_big(count);
  });
  memo.store(std::move(key), total);
  return total;
}

BigCount upsilon_signature(const Signature& s, std::uint64_t i) {
  if (i == 1) return 1;
  auto key = std::make_pair(i, key_of(s));
  auto& memo = caches().upsilon;
  if (auto hit = memo.find(key)) return *hit;
  BigCount total = 0;
  for_each_proper_divisor(s, [&](const Signature& d, std::uint64_t count) {
    total += upsilon_signature(d, i - 1) * to_big(count);
  });
  memo.store(std::move(key), total);
  return total;
}

// kappa_x over an explicit factorization of n (n fits in 64 bits).
BigCount kappa_x_factored(const PrimeFactorization& f, std::uint64_t n, std::uint32_t x) {
  auto key = std::make_pair(n, x);
  auto& memo = caches().kappa_x;
  if (auto hit = memo.find(key)) return *hit;
  BigCount total;
  mpz_ui_pow_ui(total.get_mpz_t(), n, x);

  const auto& pairs = f.pairs();
  std::vector<std::uint32_t> beta(pairs.size(), 0);
  std::vector<PrimePower> sub;
  while (true) {
    bool whole = true;
    sub.clear();
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (beta[k] != pairs[k].exponent) whole = false;
      if (beta[k]) sub.push_back({pairs[k].prime, beta[k]});
      for (std::uint32_t e = 0; e < beta[k]; ++e) d *= pairs[k].prime;
    }
    if (!whole) total += kappa_x_factored(PrimeFactorization(sub), d, x);
    std::size_t k = 0;
    while (k < beta.size() && beta[k] == pairs[k].exponent) beta[k++] = 0;
    if (k == beta.size()) break;
    ++beta[k];
  }
  memo.store(key, total);
  return total;
}

std::uint32_t narrow_exponent(std::uint64_t v) {
  if (v > 0xffffffffull) throw std::overflow_error("exponent sum exceeds 32 bits");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

// ---------------------------------------------------------------------------

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  BigCount b = 1;
  mul_binomial(b, n, k);
  return b;
}

BigCount k_recursive(const Signature& s) { return signature_recursion(caches().k, Seed::epsilon, s); }

BigCount k_recursive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("K(n) needs n >= 1");
  return k_recursive(signature_of(n));
}

BigCount kappa0_recursive(const Signature& s) { return signature_recursion(caches().kappa0, Seed::one, s); }

BigCount kappa0_recursive(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("kappa0(n) needs n >= 1");
  return kappa0_recursive(signature_of(n));
}

BigCount kappa0_theorem1(const Signature& s) {
  const mpq_class half(1, 2);
  const mpq_class three_quarters(3, 4);
  mpq_class sum = 0;
  mpq_class term = half;  // t_0 = 1/2
  for (std::uint64_t i = 0;; ++i) {
    sum += term;
    // t_{i+1} / t_i = (1/2) prod_k (a_k + i + 1) / (i + 1), decreasing in i.
    mpq_class ratio = half;
    for (auto a : s.exponents()) {
      mpq_class factor(to_big(a + i + 1), to_big(i + 1));
      factor.canonicalize();
      ratio *= factor;
    }
    // With every later ratio <= 3/4 the remaining tail is at most 3 t_i.
    if (ratio <= three_quarters && 3 * term < half) break;
    term *= ratio;
  }
  mpq_class shifted = sum + half;
  BigCount rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return rounded;
}

BigCount kappa0_theorem2(const Signature& s) {
  const std::uint64_t big_omega = s.big_omega();
  // prod_j = prod_k C(a_k + j, a_k) = tau_{j+1}
  std::vector<BigCount> prod(big_omega + 1, 1);
  for (std::uint64_t j = 0; j <= big_omega; ++j) {
    for (auto a : s.exponents()) mul_binomial(prod[j], a + j, a);
  }
  BigCount total = 0;
  BigCount term;
  for (std::uint64_t i = 0; i <= big_omega; ++i) {
    for (std::uint64_t j = 0; j <= i; ++j) {
      term = prod[j];
      mul_binomial(term, i, j);
      if ((i - j) % 2) {
        total -= term;
      } else {
        total += term;
      }
    }
  }
  return total;
}

BigCount kappa0_conjecture(const Signature& s) {
  const auto a = s.exponents();
  if (a.empty()) return 1;
  // weight[S] accumulates prod_k C(a_k, i_k) C(a_{k+1} + S_k, a_{k+1}) over all
  // choices of i_1..i_k with partial sum S_k = S.
  std::vector<BigCount> weight{BigCount(1)};
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    std::vector<BigCount> next(weight.size() + a[k]);
    BigCount term;
    for (std::size_t prev = 0; prev < weight.size(); ++prev) {
      if (sgn(weight[prev]) == 0) continue;
      for (std::uint32_t step = 0; step <= a[k]; ++step) {
        term = weight[prev];
        mul_binomial(term, a[k], step);
        next[prev + step] += term;
      }
    }
    for (std::size_t sum = 0; sum < next.size(); ++sum) mul_binomial(next[sum], a[k + 1] + sum, a[k + 1]);
    weight = std::move(next);
  }
  BigCount total = 0;
  for (const auto& w : weight) total += w;
  return total << a.back();
}

BigCount k_macmahon(const Signature& s) {
  if (s.empty()) return 1;
  const std::uint64_t big_omega = s.big_omega();
  BigCount total = 0;
  BigCount term;
  for (std::uint64_t i = 1; i <= big_omega; ++i) {
    for (std::uint64_t j = 0; j < i; ++j) {
      term = 1;
      mul_binomial(term, i, j);
      for (auto a : s.exponents()) mul_binomial(term, a + i - j - 1, a);
      if (j % 2) {
        total -= term;
      } else {
        total += term;
      }
    }
  }
  return total;
}

BigCount tau(const Signature& s, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("tau_i needs i >= 1");
  BigCount product = 1;
  for (auto a : s.exponents()) mul_binomial(product, a + i - 1, a);
  return product;
}

BigCount upsilon_recursive(const Signature& s, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("upsilon_i needs i >= 1");
  return upsilon_signature(s, i);
}

BigCount upsilon_recursive(std::uint64_t n, std::uint64_t i) {
  if (n == 0) throw std::invalid_argument("upsilon_i(n) needs n >= 1");
  return upsilon_recursive(signature_of(n), i);
}

BigCount upsilon_via_tau(const Signature& s, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("upsilon_i needs i >= 1");
  BigCount total = 0;
  BigCount term;
  for (std::uint64_t j = 0; j < i; ++j) {
    term = tau(s, j + 1);
    mul_binomial(term, i - 1, j);
    if ((i - 1 - j) % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

BigCount kappa_x_recursive(std::uint64_t n, std::uint32_t x) {
  if (n == 0) throw std::invalid_argument("kappa_x(n) needs n >= 1");
  return kappa_x_factored(factorize(n), n, x);
}

BigCount kappa0_squarefree(std::uint32_t omega) {
  // Row omega + 1 of the Stirling numbers of the second kind.
  const std::uint32_t rows = narrow_exponent(std::uint64_t{omega} + 1);
  std::vector<BigCount> stirling{BigCount(1)};  // S(0, 0)
  for (std::uint32_t n = 1; n <= rows; ++n) {
    std::vector<BigCount> next(n + 1, 0);
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (k < n) next[k] = k * stirling[k];
      next[k] += stirling[k - 1];
    }
    stirling = std::move(next);
  }
  BigCount total = 0;
  BigCount factorial = 1;
  for (std::uint32_t k = 0; k <= omega; ++k) {
    if (k) factorial *= k;
    total += factorial * stirling[k + 1];
  }
  return total;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::deficient: return "deficient";
    case Classification::perfect: return "perfect";
    case Classification::abundant: return "abundant";
  }
  return "unknown";
}

Classification classify_recursive(std::uint64_t n) {
  const BigCount kappa = kappa0_recursive(n);
  const int c = cmp(kappa, to_big(n));
  if (c == 0) return Classification::perfect;
  return c > 0 ? Classification::abundant : Classification::deficient;
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::recursive: return "recursive";
    case Method::theorem1: return "theorem1";
    case Method::theorem2: return "theorem2";
    case Method::conjecture: return "conjecture";
    case Method::macmahon: return "macmahon";
    case Method::sieve: return "sieve";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto m : {Method::recursive, Method::theorem1, Method::theorem2, Method::conjecture, Method::macmahon,
                 Method::sieve}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

BigCount kappa0_by(Method m, const Signature& s) {
  switch (m) {
    case Method::recursive: return kappa0_recursive(s);
    case Method::theorem1: return kappa0_theorem1(s);
    case Method::theorem2: return kappa0_theorem2(s);
    case Method::conjecture: return kappa0_conjecture(s);
    case Method::macmahon: return s.empty() ? BigCount(1) : BigCount(2 * k_macmahon(s));
    case Method::sieve: break;
  }
  throw std::invalid_argument("the sieve route evaluates ranges, not single signatures");
}

BigCount k_by(Method m, const Signature& s) {
  if (m == Method::recursive) return k_recursive(s);
  if (m == Method::macmahon) return k_macmahon(s);
  if (s.empty()) return 1;
  BigCount kappa = kappa0_by(m, s);
  return kappa >> 1;
}

void clear_caches() {
  caches().k.clear();
  caches().kappa0.clear();
  caches().upsilon.clear();
  caches().kappa_x.clear();
}

}  // namespace recdiv
