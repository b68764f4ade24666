#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace recdiv {

// Arbitrary-precision integer used for every count in the library.
using BigCount = mpz_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "mpz_class conversions assume a 64-bit unsigned long");

inline BigCount to_big(std::uint64_t v) { return BigCount(static_cast<unsigned long>(v)); }

inline std::string to_string(const BigCount& v) { return v.get_str(); }

// Decimal integer with an optional leading '-'. Throws std::invalid_argument
// on anything else.
BigCount parse_big(const std::string& text);

// True when v fits in a std::uint64_t.
inline bool fits_u64(const BigCount& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const BigCount& v) { return static_cast<std::uint64_t>(v.get_ui()); }

}  // namespace recdiv
