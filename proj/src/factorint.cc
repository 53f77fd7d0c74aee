#include "bu/factorint.h"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

namespace bu {

// ---------------------------------------------------------------------------
// 128-bit helpers.

std::string ToString(u128 v) {
  if (v == 0) return "0";
  char buf[40];
  int pos = 40;
  while (v != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(v % 10));
    v /= 10;
  }
  return std::string(buf + pos, buf + 40);
}

u128 ParseU128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal integer: " + std::string(s));
    }
    const u128 digit = static_cast<u128>(c - '0');
    if (v > (kU128Max - digit) / 10) {
      throw WidthError("integer exceeds 2^128-1: " + std::string(s));
    }
    v = v * 10 + digit;
  }
  return v;
}

BigInt ToBig(u128 v) {
  BigInt r;
  const u64 words[2] = {static_cast<u64>(v), static_cast<u64>(v >> 64)};
  mpz_import(r.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, words);
  return r;
}

bool FitsU128(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 128;
}

u128 FromBig(const BigInt& v) {
  if (!FitsU128(v)) {
    throw WidthError("value does not fit 128 bits: " + v.get_str());
  }
  u64 words[2] = {0, 0};
  std::size_t count = 0;
  mpz_export(words, &count, -1, sizeof(u64), 0, 0, v.get_mpz_t());
  return (static_cast<u128>(words[1]) << 64) | words[0];
}

u128 ISqrt(u128 n) {
  if (n < 2) return n;
  // Newton iteration from a power of two above the root.
  int bits = 0;
  for (u128 t = n; t != 0; t >>= 1) ++bits;
  u128 x = u128{1} << ((bits + 1) / 2);
  while (true) {
    const u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

namespace {

u128 Gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Montgomery arithmetic modulo an odd n. Values are kept in [0, n).

class Mont64 {
 public:
  using Word = u64;

  explicit Mont64(u64 n) : n_(n) {
    u64 inv = n;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(-n % n) << 64) % n);
    one_ = To(1);
  }

  u64 n() const { return n_; }
  u64 one() const { return one_; }

  u64 Reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u128 mn = static_cast<u128>(m) * n_;
    const u64 hi = static_cast<u64>(t >> 64);
    const u64 mhi = static_cast<u64>(mn >> 64);
    const u64 carry = static_cast<u64>(t) != 0;
    u64 r = hi + mhi;
    bool overflow = r < hi;
    const u64 r2 = r + carry;
    overflow |= r2 < r;
    return (overflow || r2 >= n_) ? r2 - n_ : r2;
  }

  u64 Mul(u64 a, u64 b) const { return Reduce(static_cast<u128>(a) * b); }
  u64 To(u64 x) const { return Mul(x % n_, r2_); }
  u64 From(u64 x) const { return Reduce(x); }
  u64 Add(u64 a, u64 b) const {
    const u64 s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  u64 Sub(u64 a, u64 b) const { return a >= b ? a - b : a + (n_ - b); }
  u64 Half(u64 a) const {
    return (a & 1) == 0 ? a >> 1 : (a >> 1) + (n_ >> 1) + 1;
  }

 private:
  u64 n_;
  u64 neg_inv_;
  u64 r2_;
  u64 one_;
};

struct Wide {
  u128 hi;
  u128 lo;
};

Wide MulWide(u128 a, u128 b) {
  const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
  const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
  const u128 p00 = static_cast<u128>(a0) * b0;
  const u128 p01 = static_cast<u128>(a0) * b1;
  const u128 p10 = static_cast<u128>(a1) * b0;
  const u128 p11 = static_cast<u128>(a1) * b1;
  const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
  const u128 lo = (mid << 64) | static_cast<u64>(p00);
  const u128 hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return {hi, lo};
}

class Mont128 {
 public:
  using Word = u128;

  explicit Mont128(u128 n) : n_(n) {
    u128 inv = n;
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    u128 r = (~n + 1) % n;  // 2^128 mod n
    for (int i = 0; i < 128; ++i) r = Add(r, r);
    r2_ = r;
    one_ = To(1);
  }

  u128 n() const { return n_; }
  u128 one() const { return one_; }

  u128 Reduce(Wide t) const {
    const u128 m = t.lo * neg_inv_;
    const Wide mn = MulWide(m, n_);
    const u128 carry = t.lo != 0;
    const u128 r = t.hi + mn.hi;
    bool overflow = r < t.hi;
    const u128 r2 = r + carry;
    overflow |= r2 < r;
    return (overflow || r2 >= n_) ? r2 - n_ : r2;
  }

  u128 Mul(u128 a, u128 b) const { return Reduce(MulWide(a, b)); }
  u128 To(u128 x) const { return Mul(x % n_, r2_); }
  u128 From(u128 x) const { return Reduce({0, x}); }
  u128 Add(u128 a, u128 b) const {
    const u128 s = a + b;
    return (s < a || s >= n_) ? s - n_ : s;
  }
  u128 Sub(u128 a, u128 b) const { return a >= b ? a - b : a + (n_ - b); }
  u128 Half(u128 a) const {
    return (a & 1) == 0 ? a >> 1 : (a >> 1) + (n_ >> 1) + 1;
  }

 private:
  u128 n_;
  u128 neg_inv_;
  u128 r2_;
  u128 one_;
};

template <typename M>
typename M::Word Pow(const M& mont, typename M::Word base, u128 exp) {
  typename M::Word result = mont.one();
  while (exp != 0) {
    if (exp & 1) result = mont.Mul(result, base);
    base = mont.Mul(base, base);
    exp >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Primality.

constexpr std::array<u64, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                            19, 23, 29, 31, 37, 41};

template <typename M>
bool StrongProbablePrime(const M& mont, u128 n, u64 base) {
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const auto minus_one = mont.Sub(0, mont.one());
  auto x = Pow(mont, mont.To(static_cast<typename M::Word>(base % n)), d);
  if (x == mont.one() || x == minus_one) return true;
  for (int r = 1; r < s; ++r) {
    x = mont.Mul(x, x);
    if (x == minus_one) return true;
    if (x == mont.one()) return false;
  }
  return false;
}

// Jacobi symbol (a/n) for odd n > 0.
int Jacobi(u128 a, u128 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const int r = static_cast<int>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1).
template <typename M>
bool StrongLucasProbablePrime(const M& mont, u128 n) {
  const u128 root = ISqrt(n);
  if (root * root == n) return false;

  long long d_param = 5;
  while (true) {
    const u128 a = d_param > 0
                       ? static_cast<u128>(d_param)
                       : n - static_cast<u128>(-d_param) % n;
    const int j = Jacobi(a, n);
    if (j == -1) break;
    if (j == 0 && static_cast<u128>(d_param > 0 ? d_param : -d_param) != n) {
      return false;
    }
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  auto to_mont = [&](long long v) {
    if (v >= 0) return mont.To(static_cast<typename M::Word>(v));
    return mont.Sub(0, mont.To(static_cast<typename M::Word>(-v)));
  };
  const auto dm = to_mont(d_param);
  const auto qm = to_mont((1 - d_param) / 4);

  u128 k = n + 1;
  int s = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++s;
  }

  // Left-to-right binary ladder over k computing U_k, V_k, Q^k.
  auto u = mont.one();
  auto v = mont.one();  // V_1 = P = 1
  auto qk = qm;
  int top = 127;
  while (((k >> top) & 1) == 0) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mont.Mul(u, v);
    v = mont.Sub(mont.Mul(v, v), mont.Add(qk, qk));
    qk = mont.Mul(qk, qk);
    if ((k >> bit) & 1) {
      const auto u_next = mont.Half(mont.Add(u, v));
      const auto v_next = mont.Half(mont.Add(mont.Mul(dm, u), v));
      u = u_next;
      v = v_next;
      qk = mont.Mul(qk, qm);
    }
  }
  if (u == 0 || v == 0) return true;
  for (int r = 1; r < s; ++r) {
    v = mont.Sub(mont.Mul(v, v), mont.Add(qk, qk));
    qk = mont.Mul(qk, qk);
    if (v == 0) return true;
  }
  return false;
}

template <typename M>
bool IsPrimeOdd(u128 n, bool provable) {
  const M mont(static_cast<typename M::Word>(n));
  for (u64 w : kWitnesses) {
    if (!StrongProbablePrime(mont, n, w)) return false;
  }
  if (provable) return true;
  return StrongLucasProbablePrime(mont, n);
}

// ---------------------------------------------------------------------------
// Factoring.

constexpr int kTrialLimit = 1024;

const std::vector<u64>& SmallPrimes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<u64> out;
    for (int i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (int j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of the odd composite n, retrying with fresh constants when a cycle closes
// without one.
template <typename M>
u128 RhoFactor(u128 n) {
  const M mont(static_cast<typename M::Word>(n));
  constexpr int kBatch = 128;
  for (u64 c = 1;; ++c) {
    const auto cm = mont.To(static_cast<typename M::Word>(c));
    auto f = [&](typename M::Word x) { return mont.Add(mont.Mul(x, x), cm); };
    typename M::Word y = mont.To(2), x = y, saved = y;
    typename M::Word q = mont.one();
    u128 g = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        saved = y;
        const u64 limit = std::min<u64>(kBatch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = f(y);
          q = mont.Mul(q, x > y ? x - y : y - x);
        }
        g = Gcd(mont.From(q), n);
      }
    }
    if (g == n) {
      // Batched product collapsed; step back one at a time.
      do {
        saved = f(saved);
        g = Gcd(mont.From(x > saved ? x - saved : saved - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void FactorInto(u128 n, std::map<u128, int>& out) {
  if (n == 1) return;
  if (IsPrime(n)) {
    ++out[n];
    return;
  }
  const u128 root = ISqrt(n);
  if (root * root == n) {
    FactorInto(root, out);
    FactorInto(root, out);
    return;
  }
  const u128 d = n >> 64 == 0 ? RhoFactor<Mont64>(n) : RhoFactor<Mont128>(n);
  FactorInto(d, out);
  FactorInto(n / d, out);
}

}  // namespace

bool IsPrimeProvable(u128 n) {
  // 3317044064679887385961981 = psi_13.
  static const u128 bound = ParseU128("3317044064679887385961981");
  return n < bound;
}

bool IsPrime(u128 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  if (n >> 64 == 0) return IsPrimeOdd<Mont64>(n, true);
  return IsPrimeOdd<Mont128>(n, IsPrimeProvable(n));
}

Factorization Factor(u128 n) {
  if (n == 0) throw std::invalid_argument("Factor: n must be positive");
  std::map<u128, int> found;
  for (u64 p : SmallPrimes()) {
    if (static_cast<u128>(p) * p > n) break;
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  }
  if (n != 1) {
    if (n < static_cast<u128>(kTrialLimit) * kTrialLimit) {
      ++found[n];
    } else {
      FactorInto(n, found);
    }
  }
  std::vector<PrimePower> entries;
  entries.reserve(found.size());
  for (const auto& [p, e] : found) entries.push_back({p, e});
  return Factorization(std::move(entries));
}

Factorization Factor(const BigInt& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("Factor: n must be positive");
  return Factor(FromBig(n));
}

int Valuation(u128 n, u128 p) {
  if (n == 0) throw std::invalid_argument("Valuation: n must be positive");
  if (p < 2) throw std::invalid_argument("Valuation: p must be at least 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int Valuation(const BigInt& n, u128 p) {
  if (sgn(n) <= 0) throw std::invalid_argument("Valuation: n must be positive");
  if (p < 2) throw std::invalid_argument("Valuation: p must be at least 2");
  const BigInt bp = ToBig(p);
  BigInt m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t());
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Factorization.

Factorization::Factorization(std::vector<PrimePower> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].exponent < 1 || entries_[i].prime < 2) {
      throw std::invalid_argument("Factorization: bad prime power");
    }
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime) {
      throw std::invalid_argument("Factorization: primes must increase");
    }
  }
}

int Factorization::ExponentOf(u128 p) const {
  for (const auto& pp : entries_) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

BigInt Factorization::Value() const {
  BigInt v = 1;
  for (const auto& [p, e] : entries_) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), ToBig(p).get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization Factorization::operator*(const Factorization& other) const {
  std::map<u128, int> merged;
  for (const auto& [p, e] : entries_) merged[p] += e;
  for (const auto& [p, e] : other.entries_) merged[p] += e;
  std::vector<PrimePower> out;
  for (const auto& [p, e] : merged) out.push_back({p, e});
  return Factorization(std::move(out));
}

bool Factorization::IsCanonical() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const PrimePower& pp) { return IsPrime(pp.prime); });
}

std::string Factorization::ToString() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : entries_) {
    if (!s.empty()) s += " * ";
    s += bu::ToString(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Factorization::ToRecordString() const {
  if (entries_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : entries_) {
    if (!s.empty()) s += "*";
    s += bu::ToString(p) + "^" + std::to_string(e);
  }
  return s;
}

}  // namespace bu
