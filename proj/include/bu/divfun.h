#ifndef BU_DIVFUN_H_
#define BU_DIVFUN_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bu/factorint.h"
#include "bu/int128.h"

namespace bu {

// ALL <-> sigma, UNITARY <-> sigma*, BIUNITARY <-> sigma**.
enum class DivisorClass { kAll, kUnitary, kBiunitary };

// "ALL", "UNITARY", "BIUNITARY".
std::string_view ClassName(DivisorClass c);

// Accepts the upper-case record names and lower-case CLI spellings
// ("all", "unitary", "biunitary").
std::optional<DivisorClass> ParseClass(std::string_view s);

// Reduced nonnegative fraction of arbitrary-precision integers.
class ExactRatio {
 public:
  ExactRatio() : q_(0) {}
  ExactRatio(BigInt numerator, BigInt denominator);
  static ExactRatio FromInt(const BigInt& v) { return ExactRatio(v, 1); }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  ExactRatio operator*(const ExactRatio& o) const { return Wrap(q_ * o.q_); }
  ExactRatio operator/(const ExactRatio& o) const;
  ExactRatio operator+(const ExactRatio& o) const { return Wrap(q_ + o.q_); }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a,
                                          const ExactRatio& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "p/q", always with a denominator.
  std::string ToString() const;

 private:
  static ExactRatio Wrap(mpq_class q) {
    ExactRatio r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;
};

// sigma**(p^e) by the odd/even closed form. Throws std::invalid_argument if p
// is not prime or e < 1.
BigInt SigmaBuPrimePower(u128 p, int e);

// sigma**(p^e) = (p^(s-delta) - 1)(p^s + 1)/(p - 1) with e = 2s - 1 - delta.
BigInt SigmaBuPrimePowerUnified(u128 p, int e);

// Per-class prime-power value; e >= 1.
BigInt SigmaPrimePower(u128 p, int e, DivisorClass c);

// Multiplicative extension; 1 for the empty factorization.
BigInt DivisorSum(const Factorization& f, DivisorClass c);

// Greatest common unitary divisor. a, b >= 1.
u128 UnitaryGcd(u128 a, u128 b);

// d | n required; throws std::invalid_argument otherwise.
bool IsBiunitaryDivisor(u128 d, u128 n);

inline constexpr u64 kListDivisorsLimit = 1'000'000'000;

// Ascending list of the divisors of f in class c. Brute-force oracle: the
// value of f must be at most kListDivisorsLimit, else std::length_error.
std::vector<u64> ListDivisors(const Factorization& f, DivisorClass c);

int Omega(const Factorization& f);

// DivisorSum(f, c) / value(f), reduced.
ExactRatio Abundancy(const Factorization& f, DivisorClass c);

}  // namespace bu

#endif  // BU_DIVFUN_H_
