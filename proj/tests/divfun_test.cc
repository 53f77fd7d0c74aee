#include <numeric>
#include <random>
#include <vector>

#include "bu/divfun.h"
#include "doctest.h"

using bu::BigInt;
using bu::DivisorClass;
using bu::ExactRatio;
using bu::Factorization;
using bu::u128;
using bu::u64;

namespace {

constexpr DivisorClass kClasses[] = {DivisorClass::kAll, DivisorClass::kUnitary,
                                     DivisorClass::kBiunitary};

// Definitions written out directly, without factoring.
u64 NaiveUnitaryGcd(u64 a, u64 b) {
  u64 best = 1;
  for (u64 d = 1; d <= std::min(a, b); ++d) {
    if (a % d == 0 && b % d == 0 && std::gcd(d, a / d) == 1 &&
        std::gcd(d, b / d) == 1) {
      best = d;
    }
  }
  return best;
}

bool NaiveIsBiunitary(u64 d, u64 n) { return NaiveUnitaryGcd(d, n / d) == 1; }

u64 NaiveSigma(u64 n, DivisorClass c) {
  u64 sum = 0;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const bool take = c == DivisorClass::kAll
                          ? true
                          : c == DivisorClass::kUnitary
                                ? std::gcd(d, n / d) == 1
                                : NaiveIsBiunitary(d, n);
    if (take) sum += d;
  }
  return sum;
}

}  // namespace

TEST_CASE("class names round trip") {
  for (auto c : kClasses) CHECK(bu::ParseClass(bu::ClassName(c)) == c);
  CHECK(bu::ParseClass("biunitary") == DivisorClass::kBiunitary);
  CHECK(bu::ParseClass("unitary") == DivisorClass::kUnitary);
  CHECK(bu::ParseClass("all") == DivisorClass::kAll);
  CHECK_FALSE(bu::ParseClass("Biunitary").has_value());
}

TEST_CASE("ExactRatio is reduced and ordered") {
  const ExactRatio r(6480, 2160);
  CHECK(r.ToString() == "3/1");
  CHECK(r == ExactRatio::FromInt(3));
  CHECK(ExactRatio(28, 9) > ExactRatio::FromInt(3));
  CHECK(ExactRatio(49911, 16640) < ExactRatio::FromInt(3));
  CHECK((ExactRatio(1, 2) + ExactRatio(1, 3)).ToString() == "5/6");
  CHECK((ExactRatio(2, 3) * ExactRatio(9, 4)).ToString() == "3/2");
  CHECK((ExactRatio(2, 3) / ExactRatio(4, 9)).ToString() == "3/2");
  CHECK_THROWS(ExactRatio(1, 0));
  CHECK_THROWS(ExactRatio(1, 2) / ExactRatio(0, 1));
}

TEST_CASE("biunitary prime-power closed forms") {
  CHECK(bu::SigmaBuPrimePower(2, 4) == 27);
  CHECK(bu::SigmaBuPrimePower(3, 5) == 364);
  CHECK(bu::SigmaBuPrimePower(3, 6) == 1066);
  CHECK(bu::SigmaBuPrimePower(2, 1) == 3);
  CHECK(bu::SigmaBuPrimePower(2, 2) == 5);
  for (u64 p : {2, 3, 5, 7, 13, 41, 127}) {
    for (int e = 1; e <= 40; ++e) {
      REQUIRE(bu::SigmaBuPrimePower(p, e) == bu::SigmaBuPrimePowerUnified(p, e));
    }
  }
  CHECK_THROWS_AS(bu::SigmaBuPrimePower(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(bu::SigmaBuPrimePower(3, 0), std::invalid_argument);
  CHECK(bu::SigmaPrimePower(3, 2, DivisorClass::kAll) == 13);
  CHECK(bu::SigmaPrimePower(3, 2, DivisorClass::kUnitary) == 10);
  CHECK(bu::SigmaPrimePower(3, 2, DivisorClass::kBiunitary) == 10);
}

TEST_CASE("DivisorSum equals the direct definition for n <= 3000") {
  for (u64 n = 1; n <= 3000; ++n) {
    const Factorization f = bu::Factor(u128{n});
    for (auto c : kClasses) {
      REQUIRE_MESSAGE(bu::DivisorSum(f, c) == NaiveSigma(n, c),
                      n << " " << bu::ClassName(c));
    }
  }
}

TEST_CASE("ListDivisors and DivisorSum agree for n <= 20000") {
  for (u64 n = 1; n <= 20000; ++n) {
    const Factorization f = bu::Factor(u128{n});
    for (auto c : kClasses) {
      const auto divs = bu::ListDivisors(f, c);
      REQUIRE(std::is_sorted(divs.begin(), divs.end()));
      BigInt sum = 0;
      for (u64 d : divs) sum += d;
      REQUIRE(sum == bu::DivisorSum(f, c));
    }
  }
}

TEST_CASE("DivisorSum is multiplicative on random coprime pairs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const u64 a = rng() % 1'000'000'000 + 1;
    const u64 b = rng() % 1'000'000'000 + 1;
    if (std::gcd(a, b) != 1) continue;
    const Factorization fa = bu::Factor(u128{a});
    const Factorization fb = bu::Factor(u128{b});
    for (auto c : kClasses) {
      CHECK(bu::DivisorSum(fa * fb, c) ==
            bu::DivisorSum(fa, c) * bu::DivisorSum(fb, c));
    }
  }
}

TEST_CASE("UnitaryGcd and IsBiunitaryDivisor match enumeration") {
  for (u64 a = 1; a <= 150; ++a) {
    for (u64 b = 1; b <= 150; ++b) {
      REQUIRE(bu::UnitaryGcd(a, b) == NaiveUnitaryGcd(a, b));
    }
  }
  for (u64 n = 1; n <= 400; ++n) {
    for (u64 d = 1; d <= n; ++d) {
      if (n % d == 0) REQUIRE(bu::IsBiunitaryDivisor(d, n) == NaiveIsBiunitary(d, n));
    }
  }
  CHECK_FALSE(bu::IsBiunitaryDivisor(4, 16));
  CHECK(bu::IsBiunitaryDivisor(2, 16));
  CHECK_THROWS_AS(bu::IsBiunitaryDivisor(7, 16), std::invalid_argument);
}

TEST_CASE("known perfect values") {
  const Factorization n2160({{2, 4}, {3, 3}, {5, 1}});
  CHECK(bu::DivisorSum(n2160, DivisorClass::kBiunitary) == 6480);
  CHECK(bu::Abundancy(n2160, DivisorClass::kBiunitary).ToString() == "3/1");
  CHECK(bu::Abundancy(bu::Factor(u128{60}), DivisorClass::kUnitary).ToString() ==
        "2/1");
  CHECK(bu::Abundancy(bu::Factor(u128{87360}), DivisorClass::kUnitary) ==
        ExactRatio::FromInt(2));
  CHECK(bu::DivisorSum(Factorization(), DivisorClass::kAll) == 1);
  CHECK(bu::Omega(n2160) == 3);
  CHECK(bu::Omega(Factorization()) == 0);
}

TEST_CASE("ListDivisors refuses oversized inputs") {
  CHECK_THROWS_AS(bu::ListDivisors(Factorization({{2, 31}}), DivisorClass::kAll),
                  std::length_error);
  CHECK(bu::ListDivisors(Factorization(), DivisorClass::kAll) ==
        std::vector<u64>{1});
}
