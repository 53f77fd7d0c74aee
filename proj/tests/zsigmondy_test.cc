#include <algorithm>

#include "bu/divfun.h"
#include "bu/zsigmondy.h"
#include "doctest.h"

using bu::Sign;
using bu::ZsigmondyException;
using bu::u128;
using bu::u64;

namespace {

std::vector<u128> Primes(const bu::PrimitiveFactorResult& r) {
  std::vector<u128> out;
  for (const auto& w : r.witnesses) out.push_back(w.prime);
  return out;
}

// Primitive primes by definition: divide a^n -+ 1 but no a^m -+ 1, m < n.
std::vector<u128> NaivePrimitive(u64 a, u64 n, Sign sign) {
  auto value = [&](u64 m) {
    bu::BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), a, m);
    return sign == Sign::kMinus ? bu::BigInt(v - 1) : bu::BigInt(v + 1);
  };
  std::vector<u128> out;
  for (const auto& pp : bu::Factor(value(n))) {
    bool fresh = true;
    for (u64 m = 1; m < n && fresh; ++m) {
      const bu::BigInt v = value(m);
      if (v != 0 && v % bu::ToBig(pp.prime) == 0) fresh = false;
    }
    if (fresh) out.push_back(pp.prime);
  }
  return out;
}

}  // namespace

TEST_CASE("listed exceptions") {
  auto r = bu::PrimitivePrimeFactors(2, 6, Sign::kMinus);
  CHECK_FALSE(r.exists);
  CHECK(r.exception == ZsigmondyException::kA2N6);
  CHECK(bu::ExceptionLabel(r.exception) == "A_N_2_6");

  r = bu::PrimitivePrimeFactors(2, 3, Sign::kPlus);
  CHECK_FALSE(r.exists);
  CHECK(r.exception == ZsigmondyException::kPlus2N3);

  for (u64 a : {3, 7, 15}) {
    r = bu::PrimitivePrimeFactors(a, 2, Sign::kMinus);
    CHECK_FALSE(r.exists);
    CHECK(r.exception == ZsigmondyException::kN2APlus1Pow2);
  }
  r = bu::PrimitivePrimeFactors(2, 1, Sign::kMinus);
  CHECK_FALSE(r.exists);
  CHECK(r.exception == ZsigmondyException::kA2N1);
}

TEST_CASE("small witnesses") {
  auto r = bu::PrimitivePrimeFactors(2, 4, Sign::kMinus);
  REQUIRE(r.exists);
  CHECK(Primes(r) == std::vector<u128>{5});
  CHECK(r.witnesses[0].order == 4);
  CHECK(r.witnesses[0].residue == 1);

  r = bu::PrimitivePrimeFactors(2, 1, Sign::kPlus);
  REQUIRE(r.exists);
  CHECK(Primes(r) == std::vector<u128>{3});
  CHECK(r.witnesses[0].residue == 1);

  // 3^1 + 1 = 4: the only primitive prime is 2, which is 0 mod 2.
  r = bu::PrimitivePrimeFactors(3, 1, Sign::kPlus);
  REQUIRE(r.exists);
  CHECK(Primes(r) == std::vector<u128>{2});
  CHECK(r.witnesses[0].residue == 0);
}

TEST_CASE("primitive primes match the definition on a grid") {
  for (u64 a = 2; a <= 12; ++a) {
    for (u64 n = 1; n <= 16; ++n) {
      for (Sign s : {Sign::kMinus, Sign::kPlus}) {
        const auto r = bu::PrimitivePrimeFactors(a, n, s);
        REQUIRE(Primes(r) == NaivePrimitive(a, n, s));
        REQUIRE(r.exists == !r.witnesses.empty());
        for (const auto& w : r.witnesses) {
          REQUIRE(bu::VerifyWitnessCertificate(a, n, s, w.prime));
        }
      }
    }
  }
}

TEST_CASE("certificates reject non-witnesses") {
  CHECK_FALSE(bu::VerifyWitnessCertificate(2, 4, Sign::kMinus, 3));
  CHECK_FALSE(bu::VerifyWitnessCertificate(2, 4, Sign::kMinus, 4));
  CHECK(bu::VerifyWitnessCertificate(2, 4, Sign::kMinus, 5));
  CHECK(bu::VerifyWitnessCertificate(3, 3, Sign::kPlus, 7));
  CHECK_FALSE(bu::VerifyWitnessCertificate(3, 3, Sign::kPlus, 2));
}

TEST_CASE("width limits") {
  CHECK_NOTHROW(bu::PrimitivePrimeFactors(2, 127, Sign::kPlus));
  CHECK_NOTHROW(bu::PrimitivePrimeFactors(2, 128, Sign::kMinus));
  CHECK_THROWS_AS(bu::PrimitivePrimeFactors(2, 128, Sign::kPlus), bu::WidthError);
  CHECK_THROWS_AS(bu::PrimitivePrimeFactors(3, 81, Sign::kMinus), bu::WidthError);
  CHECK_THROWS_AS(bu::PrimitivePrimeFactors(2, 200, Sign::kMinus), bu::WidthError);
}

TEST_CASE("primitive primes of 3^t + 1 divide sigma**(3^f) for f = 2t-1, 2t-2") {
  for (u64 t = 2; t <= 40; ++t) {
    const auto r = bu::PrimitivePrimeFactors(3, t, Sign::kPlus);
    for (const auto& w : r.witnesses) {
      for (int f : {static_cast<int>(2 * t - 1), static_cast<int>(2 * t - 2)}) {
        const bu::BigInt s = bu::SigmaBuPrimePower(3, f);
        REQUIRE_MESSAGE(s % bu::ToBig(w.prime) == 0, "t=" << t << " f=" << f);
      }
    }
  }
}

TEST_CASE("range checks") {
  const auto bang = bu::CheckBangRange(20, 20);
  CHECK(bang.passed());
  REQUIRE(bang.notes.size() == 1);
  CHECK(bang.notes[0] == "exceptions: (2,6) (3,2) (7,2) (15,2)");

  // Read literally, every primitive prime must be 1 mod 2n; for odd a and
  // n = 1 the prime 2 divides a + 1 and is not.
  const auto c = bu::CheckLemmaCRange(20, 15);
  CHECK_FALSE(c.passed());
  CHECK(c.counterexamples.size() == 9);
  CHECK(c.counterexamples.front() == "(3,1):2!=1mod2");
  CHECK(std::find(c.notes.begin(), c.notes.end(), "exceptions: (2,3)") !=
        c.notes.end());

  const auto c_from_two = bu::CheckLemmaCRange(2, 15);
  CHECK(c_from_two.passed());
}
