#ifndef BU_ZSIGMONDY_H_
#define BU_ZSIGMONDY_H_

#include <optional>
#include <string>
#include <vector>

#include "bu/int128.h"
#include "bu/report.h"

namespace bu {

enum class Sign { kMinus, kPlus };

// Named cases in which a^n -+ 1 has no primitive prime factor.
enum class ZsigmondyException {
  kNone,
  kA2N1,          // 2^1 - 1 = 1
  kA2N6,          // 2^6 - 1 = 63 = 3^2 * 7
  kN2APlus1Pow2,  // a^2 - 1 with a + 1 a power of two
  kPlus2N3,       // 2^3 + 1 = 9
};

std::string ExceptionLabel(ZsigmondyException e);

// A primitive prime with its certificate data: the multiplicative order of
// a modulo the prime, and the prime reduced modulo n (minus) or 2n (plus).
struct PrimitiveWitness {
  u128 prime;
  u128 order;
  u128 residue;
};

struct PrimitiveFactorResult {
  u64 a;
  u64 n;
  Sign sign;
  bool exists = false;
  std::vector<PrimitiveWitness> witnesses;
  ZsigmondyException exception = ZsigmondyException::kNone;
};

// All primes dividing a^n -+ 1 and no a^m -+ 1 with 1 <= m < n, found by
// factoring a^n -+ 1. Requires a >= 2, n >= 1 and a^n + 1 <= 2^128 - 1
// (WidthError otherwise).
PrimitiveFactorResult PrimitivePrimeFactors(u64 a, u64 n, Sign sign);

// Independent re-check of one witness: a^n = 1 and a^d != 1 mod p for every
// proper divisor d of n (minus), or a^n = -1 and a^m != -1 mod p for
// every m < n (plus).
bool VerifyWitnessCertificate(u64 a, u64 n, Sign sign, u128 prime);

// Every 2 <= a <= a_max, 2 <= n <= n_max: a primitive prime = 1 (mod n)
// exists, or (a, n) is (2, 6) or has n = 2 with a + 1 a power of two.
LemmaReport CheckBangRange(u64 a_max, u64 n_max);

// Every 2 <= a <= a_max, 1 <= n <= n_max: a^n + 1 has a primitive prime
// unless (a, n) = (2, 3), and every primitive prime is 1 (mod 2n).
LemmaReport CheckLemmaCRange(u64 a_max, u64 n_max);

}  // namespace bu

#endif  // BU_ZSIGMONDY_H_
