#pragma once

#include "recdiv/bigcount.hpp"
#include "recdiv/factor.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace recdiv {

// K(n) counts ordered factorizations of n into factors >= 2, with K(1) = 1.
// kappa0(n) counts recursive divisors: 1 + the sum of kappa0 over proper
// divisors. Both depend on n only through its prime signature.

/// K by the recursion K(n) = [n == 1] + sum over proper divisors d of K(d).
/// Memoized on the canonical signature.
BigCount k_recursive(std::uint64_t n);
BigCount k_recursive(const Signature& s);

/// kappa0 by the recursion kappa0(n) = 1 + sum over proper divisors.
BigCount kappa0_recursive(std::uint64_t n);
BigCount kappa0_recursive(const Signature& s);

/// Hypergeometric series (1/2) sum_i 2^-i prod_k C(a_k + i, a_k), summed with
/// exact rationals until a certified tail bound below 1/2 allows rounding.
BigCount kappa0_theorem1(const Signature& s);

/// Inclusion-exclusion double sum
/// sum_{i=0}^{Omega} sum_{j=0}^{i} (-1)^{i-j} C(i,j) prod_k C(a_k + j, a_k).
BigCount kappa0_theorem2(const Signature& s);

/// Conjectured multi-sum
/// 2^{a_w} sum_{i_1..i_{w-1}} prod_k C(a_k, i_k) C(a_{k+1} + i_1 + ... + i_k, a_{k+1}),
/// evaluated on the canonical (non-increasing) exponent order. Returns 1 for
/// the empty signature.
BigCount kappa0_conjecture(const Signature& s);

/// MacMahon's form
/// K = sum_{i=1}^{Omega} sum_{j=0}^{i-1} (-1)^j C(i,j) prod_k C(a_k + i - j - 1, a_k).
/// The outer sum is empty for n = 1; that case returns K(1) = 1.
BigCount k_macmahon(const Signature& s);

/// tau_i = prod_k C(a_k + i - 1, i - 1): the (i-1)-fold iterated divisor count.
/// Throws std::invalid_argument for i = 0.
BigCount tau(const Signature& s, std::uint64_t i);

/// upsilon_i(n) = sum over proper divisors d of upsilon_{i-1}(d), upsilon_1 = 1.
/// Throws std::invalid_argument for n = 0 or i = 0.
BigCount upsilon_recursive(std::uint64_t n, std::uint64_t i);
BigCount upsilon_recursive(const Signature& s, std::uint64_t i);

/// upsilon_i = sum_{j=0}^{i-1} (-1)^{i-1-j} C(i-1, j) tau_{j+1}.
BigCount upsilon_via_tau(const Signature& s, std::uint64_t i);

/// kappa_x(n) = n^x + sum over proper divisors d of kappa_x(d). Not a
/// signature function for x > 0, so it is memoized on (n, x).
BigCount kappa_x_recursive(std::uint64_t n, std::uint32_t x);

/// kappa0 of a product of `omega` distinct primes, i.e. the polylogarithm
/// Li_{-omega}(1/2) = sum_{i>=1} i^omega / 2^i, evaluated through
/// sum_{k=0}^{omega} k! S(omega+1, k+1) with Stirling numbers of the second kind.
BigCount kappa0_squarefree(std::uint32_t omega);

enum class Classification { deficient, perfect, abundant };

std::string_view to_string(Classification c);

/// Compares kappa0(n) with n.
Classification classify_recursive(std::uint64_t n);

/// Binomial coefficient, 0 when k > n. Rows up to kPascalRows come from a
/// shared Pascal triangle grown on demand; larger rows are computed directly.
inline constexpr std::uint32_t kPascalRows = 2048;
BigCount binomial(std::uint64_t n, std::uint64_t k);

/// Evaluation routes that produce kappa0 from a signature.
enum class Method { recursive, theorem1, theorem2, conjecture, macmahon, sieve };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// kappa0 by the given route; macmahon is doubled (with K(1) = kappa0(1) = 1).
/// Method::sieve is a batch route and throws std::invalid_argument here.
BigCount kappa0_by(Method m, const Signature& s);

/// K by the given route; closed forms are halved for n >= 2.
BigCount k_by(Method m, const Signature& s);

/// Drops the memoized signature and kappa_x values. The Pascal triangle is kept.
void clear_caches();

}  // namespace recdiv
