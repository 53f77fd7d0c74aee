#ifndef BU_INT128_H_
#define BU_INT128_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bu {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Arbitrary-precision integer used for divisor sums and exact ratios.
using BigInt = mpz_class;

inline constexpr u128 kU128Max = ~u128{0};

// Raised when an input does not fit the supported 128-bit width.
class WidthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

std::string ToString(u128 v);

// Parses a decimal string. Throws std::invalid_argument on malformed input
// and WidthError when the value exceeds 2^128 - 1.
u128 ParseU128(std::string_view s);

BigInt ToBig(u128 v);

// Throws WidthError if v is negative or wider than 128 bits.
u128 FromBig(const BigInt& v);

bool FitsU128(const BigInt& v);

// Floor square root.
u128 ISqrt(u128 n);

}  // namespace bu

#endif  // BU_INT128_H_
