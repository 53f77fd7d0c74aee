#include "bu/zsigmondy.h"

#include <sstream>
#include <stdexcept>

#include "bu/factorint.h"

namespace bu {

namespace {

BigInt PowMod(u64 a, u64 e, const BigInt& m) {
  BigInt r;
  const BigInt base = a;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, m.get_mpz_t());
  return r;
}

bool Divides(const BigInt& p, u64 a, u64 m, Sign sign) {
  const BigInt r = PowMod(a, m, p);
  if (sign == Sign::kMinus) return r == 1 % p;
  return (r + 1) % p == 0;
}

bool IsPowerOfTwo(u64 v) { return v != 0 && (v & (v - 1)) == 0; }

// Smallest d >= 1 with a^d = 1 (mod p), searched over divisors of bound.
u128 OrderDividing(u64 a, const BigInt& p, u64 bound) {
  for (u64 d = 1; d <= bound; ++d) {
    if (bound % d == 0 && PowMod(a, d, p) == 1 % p) return d;
  }
  return 0;
}

std::string Pair(u64 a, u64 n) {
  return "(" + std::to_string(a) + "," + std::to_string(n) + ")";
}

}  // namespace

std::string ExceptionLabel(ZsigmondyException e) {
  switch (e) {
    case ZsigmondyException::kNone:
      return "none";
    case ZsigmondyException::kA2N1:
      return "A_N_2_1";
    case ZsigmondyException::kA2N6:
      return "A_N_2_6";
    case ZsigmondyException::kN2APlus1Pow2:
      return "N2_APLUS1_POW2";
    case ZsigmondyException::kPlus2N3:
      return "PLUS_2_3";
  }
  return "?";
}

PrimitiveFactorResult PrimitivePrimeFactors(u64 a, u64 n, Sign sign) {
  if (a < 2) throw std::invalid_argument("PrimitivePrimeFactors: a must be >= 2");
  if (n < 1) throw std::invalid_argument("PrimitivePrimeFactors: n must be >= 1");
  if (n > 128) throw WidthError("PrimitivePrimeFactors: a^n exceeds 128 bits");
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), a, n);
  const BigInt value = sign == Sign::kMinus ? BigInt(power - 1) : BigInt(power + 1);
  if (!FitsU128(value)) {
    throw WidthError("PrimitivePrimeFactors: a^n -+ 1 exceeds 2^128-1 for " +
                     Pair(a, n));
  }

  PrimitiveFactorResult result{a, n, sign};
  const u64 modulus = sign == Sign::kMinus ? n : 2 * n;
  if (value > 1) {
    for (const auto& [p, e] : Factor(value)) {
      const BigInt bp = ToBig(p);
      bool primitive = true;
      for (u64 m = 1; m < n && primitive; ++m) {
        if (Divides(bp, a, m, sign)) primitive = false;
      }
      if (!primitive) continue;
      result.witnesses.push_back(
          {p, OrderDividing(a, bp, 2 * n), p % modulus});
    }
  }
  result.exists = !result.witnesses.empty();
  if (!result.exists) {
    if (sign == Sign::kMinus) {
      if (a == 2 && n == 1) {
        result.exception = ZsigmondyException::kA2N1;
      } else if (a == 2 && n == 6) {
        result.exception = ZsigmondyException::kA2N6;
      } else if (n == 2 && IsPowerOfTwo(a + 1)) {
        result.exception = ZsigmondyException::kN2APlus1Pow2;
      }
    } else if (a == 2 && n == 3) {
      result.exception = ZsigmondyException::kPlus2N3;
    }
  }
  return result;
}

bool VerifyWitnessCertificate(u64 a, u64 n, Sign sign, u128 prime) {
  const BigInt p = ToBig(prime);
  if (!IsPrime(prime)) return false;
  if (sign == Sign::kPlus) {
    if ((PowMod(a, n, p) + 1) % p != 0) return false;
    for (u64 m = 1; m < n; ++m) {
      if ((PowMod(a, m, p) + 1) % p == 0) return false;
    }
    return true;
  }
  if (PowMod(a, n, p) != 1 % p) return false;
  for (u64 d = 1; d < n; ++d) {
    if (n % d == 0 && PowMod(a, d, p) == 1 % p) return false;
  }
  return true;
}

LemmaReport CheckBangRange(u64 a_max, u64 n_max) {
  LemmaReport report{"bang", "a<=" + std::to_string(a_max) +
                                 ",n<=" + std::to_string(n_max)};
  std::string exceptions;
  for (u64 a = 2; a <= a_max; ++a) {
    for (u64 n = 2; n <= n_max; ++n) {
      const auto r = PrimitivePrimeFactors(a, n, Sign::kMinus);
      if (!r.exists) {
        if (r.exception == ZsigmondyException::kNone) {
          report.Fail(Pair(a, n) + ":no-primitive-prime");
        } else {
          exceptions += " " + Pair(a, n);
        }
        continue;
      }
      for (const auto& w : r.witnesses) {
        if (!VerifyWitnessCertificate(a, n, Sign::kMinus, w.prime) ||
            w.order != n) {
          report.Fail(Pair(a, n) + ":bad-certificate:" + ToString(w.prime));
        }
        if (w.residue != 1 % n) {
          report.Fail(Pair(a, n) + ":" + ToString(w.prime) + "!=1mod" +
                      std::to_string(n));
        }
      }
    }
  }
  report.Note("exceptions:" + (exceptions.empty() ? " none" : exceptions));
  return report;
}

LemmaReport CheckLemmaCRange(u64 a_max, u64 n_max) {
  LemmaReport report{"lemma_c", "a<=" + std::to_string(a_max) +
                                    ",n<=" + std::to_string(n_max)};
  std::string exceptions, none_congruent;
  for (u64 a = 2; a <= a_max; ++a) {
    for (u64 n = 1; n <= n_max; ++n) {
      const auto r = PrimitivePrimeFactors(a, n, Sign::kPlus);
      if (!r.exists) {
        if (r.exception == ZsigmondyException::kNone) {
          report.Fail(Pair(a, n) + ":no-primitive-prime");
        } else {
          exceptions += " " + Pair(a, n);
        }
        continue;
      }
      bool any_congruent = false;
      for (const auto& w : r.witnesses) {
        if (w.residue == 1) any_congruent = true;
        if (!VerifyWitnessCertificate(a, n, Sign::kPlus, w.prime)) {
          report.Fail(Pair(a, n) + ":bad-certificate:" + ToString(w.prime));
        }
        if (w.residue != 1) {
          report.Fail(Pair(a, n) + ":" + ToString(w.prime) + "!=1mod" +
                      std::to_string(2 * n));
        }
      }
      if (!any_congruent) none_congruent += " " + Pair(a, n);
    }
  }
  report.Note("exceptions:" + (exceptions.empty() ? " none" : exceptions));
  // Reading the congruence as "some primitive prime is 1 mod 2n" instead of
  // "every one is" leaves only these pairs.
  report.Note("no primitive prime 1 mod 2n at:" +
              (none_congruent.empty() ? std::string(" none")
                                      : none_congruent));
  return report;
}

}  // namespace bu
