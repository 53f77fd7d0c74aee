#ifndef BU_FACTORINT_H_
#define BU_FACTORINT_H_

#include <string>
#include <vector>

#include "bu/int128.h"

namespace bu {

struct PrimePower {
  u128 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power decomposition. Primes are strictly increasing and
// every exponent is at least 1; the empty list represents 1.
class Factorization {
 public:
  Factorization() = default;

  // Validates ordering and exponents (not primality; use IsCanonical for that).
  explicit Factorization(std::vector<PrimePower> entries);

  const std::vector<PrimePower>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Exponent of p, or 0 when p does not appear.
  int ExponentOf(u128 p) const;

  BigInt Value() const;

  // Product of two factorizations (exponents add on shared primes).
  Factorization operator*(const Factorization& other) const;

  // Strictly increasing primes, each passing IsPrime, exponents >= 1.
  bool IsCanonical() const;

  // "2^4 * 3^3 * 5"; "1" for the empty factorization.
  std::string ToString() const;

  // "2^4*3^3*5^1"; every exponent is written.
  std::string ToRecordString() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> entries_;
};

// Deterministic for n < 3317044064679887385961981 (first thirteen prime
// Miller-Rabin bases). Above that bound, a Baillie-PSW test backed by the
// same thirteen bases.
bool IsPrime(u128 n);

// True when IsPrime(n) is a proof rather than a Baillie-PSW verdict.
bool IsPrimeProvable(u128 n);

// n >= 1. Factor(1) is empty.
Factorization Factor(u128 n);

// Accepts any positive BigInt; throws WidthError above 2^128 - 1.
Factorization Factor(const BigInt& n);

// Largest v with p^v | n. n >= 1, p >= 2.
int Valuation(u128 n, u128 p);
int Valuation(const BigInt& n, u128 p);

}  // namespace bu

#endif  // BU_FACTORINT_H_
