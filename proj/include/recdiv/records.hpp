#pragma once

#include "recdiv/bigcount.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace recdiv {

enum class RecordFunction { k, kappa0 };

std::string_view to_string(RecordFunction f);
std::optional<RecordFunction> parse_record_function(std::string_view name);

struct Record {
  BigCount n;
  BigCount value;

  friend bool operator==(const Record&, const Record&) = default;
};

/// Indices where a function strictly exceeds every earlier value.
struct RecordTable {
  RecordFunction function = RecordFunction::kappa0;
  std::vector<Record> entries;

  friend bool operator==(const RecordTable&, const RecordTable&) = default;
};

/// Scans the sieve table of K or kappa0 on 1..limit.
RecordTable champions_sieve(std::uint64_t limit, RecordFunction which, unsigned threads = 1);

struct SignatureSearchOptions {
  unsigned threads = 1;
  /// Recompute each candidate with the inclusion-exclusion sum and throw
  /// std::logic_error on disagreement.
  bool cross_check = true;
};

/// Records among minimal signature representatives 2^a1 3^a2 5^a3 ... with
/// a1 >= a2 >= ... and product <= bound; values from the conjectured
/// multi-sum. A record index always has this shape, so for any bound this
/// equals champions_sieve(bound).
RecordTable champions_signature_search(const BigCount& bound, RecordFunction which,
                                       const SignatureSearchOptions& options = {});

/// Every n <= limit with kappa0(n) = n, ascending.
std::vector<std::uint64_t> recursively_perfect(std::uint64_t limit, unsigned threads = 1);

}  // namespace recdiv
