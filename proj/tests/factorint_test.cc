#include <random>
#include <vector>

#include "bu/factorint.h"
#include "doctest.h"

using bu::Factorization;
using bu::PrimePower;
using bu::u128;
using bu::u64;

namespace {

bool TrialPrime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> TrialFactor(u64 n) {
  std::vector<PrimePower> out;
  for (u64 d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u128 Parse(const char* s) { return bu::ParseU128(s); }

}  // namespace

TEST_CASE("IsPrime agrees with trial division below 200000") {
  for (u64 n = 0; n < 200000; ++n) {
    REQUIRE_MESSAGE(bu::IsPrime(n) == TrialPrime(n), n);
  }
}

TEST_CASE("strong pseudoprimes and Carmichael numbers are composite") {
  for (u128 n : {u128{561}, u128{41041}, u128{3215031751},
                 u128{3825123056546413051ULL}, Parse("318665857834031151167461"),
                 Parse("3317044064679887385961981")}) {
    CHECK_FALSE(bu::IsPrime(n));
  }
}

TEST_CASE("large primes") {
  CHECK(bu::IsPrime(18446744073709551557ULL));
  CHECK(bu::IsPrime(Parse("1152921504606847009")));
  const u128 m127 = (u128{1} << 127) - 1;
  CHECK(bu::IsPrime(m127));
  CHECK_FALSE(bu::IsPrimeProvable(m127));
  CHECK(bu::IsPrimeProvable(18446744073709551557ULL));
  CHECK(bu::IsPrime(Parse("3317044064679887385962123")));
  CHECK_FALSE(bu::IsPrime(m127 - 2));
}

TEST_CASE("Factor matches trial division on random 40-bit inputs") {
  std::mt19937_64 rng(20260419);
  for (int i = 0; i < 3000; ++i) {
    const u64 n = (rng() >> 24) | 1u;
    const auto expect = TrialFactor(n);
    const Factorization got = bu::Factor(u128{n});
    REQUIRE_MESSAGE(got.entries() == expect, n);
  }
}

TEST_CASE("Factor splits wide semiprimes and prime squares") {
  const Factorization f = bu::Factor(
      Parse("2658455991569831839194255993715294703"));
  REQUIRE(f.size() == 2);
  CHECK(f.entries()[0].prime == Parse("1152921504606847009"));
  CHECK(f.entries()[1].prime == Parse("2305843009213693967"));

  const Factorization sq = bu::Factor(u128{3} * Parse(
      "1000000000000000006000000000000000009"));
  CHECK(sq == Factorization({{3, 1}, {Parse("1000000000000000003"), 2}}));

  const Factorization psi = bu::Factor(Parse("3317044064679887385961981"));
  CHECK(psi == Factorization({{1287836182261ULL, 1}, {2575672364521ULL, 1}}));
}

TEST_CASE("2^128 - 1 factors completely") {
  const Factorization f = bu::Factor(bu::kU128Max);
  CHECK(f.ToString() ==
        "3 * 5 * 17 * 257 * 641 * 65537 * 274177 * 6700417 * 67280421310721");
  CHECK(f.IsCanonical());
  CHECK(f.Value() == bu::ToBig(bu::kU128Max));
}

TEST_CASE("Factorization formatting and arithmetic") {
  const Factorization f({{2, 4}, {3, 3}, {5, 1}});
  CHECK(f.ToString() == "2^4 * 3^3 * 5");
  CHECK(f.ToRecordString() == "2^4*3^3*5^1");
  CHECK(bu::Factor(u128{1}).ToString() == "1");
  CHECK(bu::Factor(u128{1}).empty());
  CHECK(f.Value() == 2160);
  CHECK(f.ExponentOf(3) == 3);
  CHECK(f.ExponentOf(7) == 0);
  CHECK((f * Factorization({{3, 1}, {7, 2}})) ==
        Factorization({{2, 4}, {3, 4}, {5, 1}, {7, 2}}));
  CHECK(bu::Factor(u128{9760}).ToString() == "2^5 * 5 * 61");
}

TEST_CASE("Factorization rejects malformed entries") {
  CHECK_THROWS(Factorization({{3, 1}, {2, 1}}));
  CHECK_THROWS(Factorization({{2, 0}}));
  CHECK_THROWS(Factorization({{2, 1}, {2, 1}}));
  CHECK_FALSE(Factorization({{4, 1}}).IsCanonical());
}

TEST_CASE("Factor of BigInt and width limits") {
  CHECK(bu::Factor(bu::BigInt(2160)).ToString() == "2^4 * 3^3 * 5");
  bu::BigInt wide = bu::ToBig(bu::kU128Max);
  wide += 1;
  CHECK_THROWS_AS(bu::Factor(wide), bu::WidthError);
  CHECK_THROWS_AS(bu::ParseU128("340282366920938463463374607431768211456"),
                  bu::WidthError);
  CHECK_THROWS_AS(bu::ParseU128("12x"), std::invalid_argument);
  CHECK(bu::ToString(bu::ParseU128("340282366920938463463374607431768211455")) ==
        "340282366920938463463374607431768211455");
}

TEST_CASE("Valuation") {
  CHECK(bu::Valuation(u128{2160}, 2) == 4);
  CHECK(bu::Valuation(u128{2160}, 3) == 3);
  CHECK(bu::Valuation(u128{2160}, 7) == 0);
  CHECK(bu::Valuation(bu::BigInt(1) << 200, 2) == 200);
}

TEST_CASE("ISqrt is a floor square root") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const u128 n = (u128{rng()} << 64) | rng();
    const u128 r = bu::ISqrt(n);
    CHECK(bu::ToBig(r) * bu::ToBig(r) <= bu::ToBig(n));
    CHECK((bu::ToBig(r) + 1) * (bu::ToBig(r) + 1) > bu::ToBig(n));
  }
}
