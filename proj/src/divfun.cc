#include "bu/divfun.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bu {

std::string_view ClassName(DivisorClass c) {
  switch (c) {
    case DivisorClass::kAll:
      return "ALL";
    case DivisorClass::kUnitary:
      return "UNITARY";
    case DivisorClass::kBiunitary:
      return "BIUNITARY";
  }
  return "?";
}

std::optional<DivisorClass> ParseClass(std::string_view s) {
  if (s == "ALL" || s == "all") return DivisorClass::kAll;
  if (s == "UNITARY" || s == "unitary") return DivisorClass::kUnitary;
  if (s == "BIUNITARY" || s == "biunitary") return DivisorClass::kBiunitary;
  return std::nullopt;
}

ExactRatio::ExactRatio(BigInt numerator, BigInt denominator) {
  if (sgn(denominator) <= 0) {
    throw std::invalid_argument("ExactRatio: denominator must be positive");
  }
  if (sgn(numerator) < 0) {
    throw std::invalid_argument("ExactRatio: numerator must be nonnegative");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

ExactRatio ExactRatio::operator/(const ExactRatio& o) const {
  if (sgn(o.q_) == 0) throw std::domain_error("ExactRatio: division by zero");
  return Wrap(q_ / o.q_);
}

std::string ExactRatio::ToString() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

BigInt PowBig(u128 p, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), ToBig(p).get_mpz_t(), e);
  return r;
}

void RequirePrimePower(u128 p, int e) {
  if (e < 1) throw std::invalid_argument("exponent must be at least 1");
  if (!IsPrime(p)) {
    throw std::invalid_argument("not a prime: " + ToString(p));
  }
}

}  // namespace

BigInt SigmaBuPrimePower(u128 p, int e) {
  RequirePrimePower(p, e);
  const BigInt bp = ToBig(p);
  BigInt full = (PowBig(p, e + 1) - 1) / (bp - 1);
  if (e % 2 == 1) return full;
  return full - PowBig(p, e / 2);
}

BigInt SigmaBuPrimePowerUnified(u128 p, int e) {
  RequirePrimePower(p, e);
  const int delta = e % 2 == 0 ? 1 : 0;
  const int s = (e + 1 + delta) / 2;
  return (PowBig(p, s - delta) - 1) * (PowBig(p, s) + 1) / (ToBig(p) - 1);
}

BigInt SigmaPrimePower(u128 p, int e, DivisorClass c) {
  switch (c) {
    case DivisorClass::kAll:
      RequirePrimePower(p, e);
      return (PowBig(p, e + 1) - 1) / (ToBig(p) - 1);
    case DivisorClass::kUnitary:
      RequirePrimePower(p, e);
      return PowBig(p, e) + 1;
    case DivisorClass::kBiunitary:
      return SigmaBuPrimePower(p, e);
  }
  throw std::invalid_argument("unknown divisor class");
}

BigInt DivisorSum(const Factorization& f, DivisorClass c) {
  BigInt total = 1;
  for (const auto& [p, e] : f) total *= SigmaPrimePower(p, e, c);
  return total;
}

u128 UnitaryGcd(u128 a, u128 b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("UnitaryGcd: arguments must be positive");
  }
  u128 result = 1;
  for (const auto& [p, e] : Factor(a)) {
    if (Valuation(b, p) != e) continue;
    for (int i = 0; i < e; ++i) result *= p;
  }
  return result;
}

bool IsBiunitaryDivisor(u128 d, u128 n) {
  if (d == 0 || n == 0 || n % d != 0) {
    throw std::invalid_argument("IsBiunitaryDivisor: d must divide n");
  }
  return UnitaryGcd(d, n / d) == 1;
}

std::vector<u64> ListDivisors(const Factorization& f, DivisorClass c) {
  const BigInt value = f.Value();
  if (value > kListDivisorsLimit) {
    throw std::length_error("ListDivisors: value exceeds oracle limit " +
                            std::to_string(kListDivisorsLimit));
  }
  const u64 n = value.get_ui();
  std::vector<u64> all = {1};
  for (const auto& [p, e] : f) {
    const std::size_t base = all.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= static_cast<u64>(p);
      for (std::size_t i = 0; i < base; ++i) all.push_back(all[i] * pk);
    }
  }
  std::sort(all.begin(), all.end());
  if (c == DivisorClass::kAll) return all;

  std::vector<u64> out;
  for (u64 d : all) {
    const bool keep = c == DivisorClass::kUnitary
                          ? std::gcd(d, n / d) == 1
                          : IsBiunitaryDivisor(d, n);
    if (keep) out.push_back(d);
  }
  return out;
}

int Omega(const Factorization& f) { return static_cast<int>(f.size()); }

ExactRatio Abundancy(const Factorization& f, DivisorClass c) {
  return ExactRatio(DivisorSum(f, c), f.Value());
}

}  // namespace bu
