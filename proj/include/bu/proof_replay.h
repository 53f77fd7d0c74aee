#ifndef BU_PROOF_REPLAY_H_
#define BU_PROOF_REPLAY_H_

#include <optional>
#include <string>
#include <vector>

#include "bu/divfun.h"
#include "bu/factorint.h"
#include "bu/int128.h"
#include "bu/report.h"

namespace bu {

// Exponent split e = 2s - 1 - delta with delta in {0, 1}. The same shape
// carries f = 2t - 1 - eta for the exponent of 3.
struct ExponentSplit {
  int half;  // s or t
  int bit;   // delta or eta

  static ExponentSplit Of(int exponent);
  int Exponent() const { return 2 * half - 1 - bit; }
};

// Exponents of 2 and 3 in a candidate N, with their splits.
struct CaseParams {
  int e;
  int f;
  ExponentSplit two;
  ExponentSplit three;

  static CaseParams Of(int e, int f);
};

// sigma**(p^e) factored through (p^(s-delta) - 1)/(p - 1) * (p^s + 1);
// both pieces must fit 128 bits. The product is checked against the closed
// form before returning.
Factorization SigmaBuFactored(u128 p, int e);

// Parity and 2-adic valuation bound for sigma** over 1 <= n <= n_max.
LemmaReport CheckLemmaA(u64 n_max);

// The five lower bounds for sigma**(p^e)/p^e over primes p <= p_max,
// 1 <= e <= e_max, 1 <= m <= m_max, in exact arithmetic.
LemmaReport CheckLemmaB(u64 p_max, int e_max, int m_max);

// Branches are reported by letter: 'A'..'D' for the exponent of 3, 'a'..'c'
// for the exponent of 2.
struct Lemma22Branch {
  char branch = '?';
  u128 witness = 0;
  std::vector<char> holding;  // every branch whose condition holds
};

// f >= 5, f <= 80. Preference order A, C, B, D.
Lemma22Branch ClassifyLemma22Branch(int f);

// Re-checks a branch claim by divisibility and primality only.
bool VerifyLemma22Branch(int f, char branch, u128 witness);

LemmaReport CheckLemma22(int f_min, int f_max);

struct Lemma23Branch {
  char branch = '?';
  u128 q1 = 0;
  u128 q2 = 0;
  std::vector<char> holding;
};

// e >= 6, e not in {8, 12}, e <= 80. Preference order a, c, b.
Lemma23Branch ClassifyLemma23Branch(int e);

bool VerifyLemma23Branch(int e, char branch, u128 q1, u128 q2);

// Every e in [e_min, e_max] except 8 and 12.
LemmaReport CheckLemma23(int e_min, int e_max);

enum class Lemma24Part { kI, kII, kIII, kIV, kV };

struct Lemma24Range {
  u64 p_max = 50;   // parts I and II
  int g_min = 0;    // 0 selects the part's default
  int g_max = 0;
  int f_max = 40;   // part III: f in {13, 14} and [18, f_max]
};

LemmaReport CheckLemma24(Lemma24Part part, const Lemma24Range& range = {});

// "sigma**(3^f) has at least three odd prime factors >= 31" for 15 <= f <= 17.
LemmaReport CheckLargeExponentPrimeCount();

// ---------------------------------------------------------------------------
// Ledger of displayed relations.

enum class Comparator { kGreater, kLess, kEqual };

struct LedgerEntry {
  std::string id;
  // The tested ratio is Abundancy(*n_factored, BIUNITARY) when set, else
  // *explicit_ratio (a displayed quotient of products).
  std::optional<Factorization> n_factored;
  std::optional<ExactRatio> explicit_ratio;
  // Displayed exact value; absent when only the inequality is displayed.
  std::optional<ExactRatio> claimed_ratio;
  Comparator comparator;
  ExactRatio bound;
};

// divisor | sigma**(fixed * prod q^x) for every exponent x in [1, 12] of
// each free prime q.
struct DivisibilityClaim {
  std::string id;
  BigInt divisor;
  Factorization fixed;
  std::vector<u128> free_primes;
};

// value == product of claimed, where value is sigma**(of) or a plain integer.
struct FactorizationClaim {
  std::string id;
  std::optional<Factorization> sigma_of;
  BigInt plain_value;
  Factorization claimed;
};

inline constexpr int kFreeExponentMax = 12;

const std::vector<LedgerEntry>& RatioLedger();
const std::vector<DivisibilityClaim>& DivisibilityLedger();
const std::vector<FactorizationClaim>& FactorizationLedger();

LemmaReport VerifyLedgerEntry(const LedgerEntry& entry);
LemmaReport VerifyDivisibilityClaim(const DivisibilityClaim& claim);
LemmaReport VerifyFactorizationClaim(const FactorizationClaim& claim);

// One report per ledger row, ratios first.
std::vector<LemmaReport> VerifyLedgerEntries();

// All rows folded into one report; failing rows are named.
LemmaReport VerifyLedger();

// ---------------------------------------------------------------------------
// Symbolic lower bounds for the 2-part and 3-part of N.

// One report per family: a, b, c', d (threshold 2) then A, B, C, D
// (threshold 3/2). 4 <= s <= s_max, 3 <= t <= t_max, e >= 7 with
// e not in {8, 12}, f >= 5.
std::vector<LemmaReport> CheckBranchBoundFamilies(int s_max, int t_max);

LemmaReport CheckBranchBounds(int s_max, int t_max);

// Exhaustive k = 3 biunitary search below bound restricted to 27 | n;
// passes when the hits are exactly [2160] (or none for bound < 2160).
LemmaReport VerifyTheoremDesk(u64 bound, unsigned workers = 1);

}  // namespace bu

#endif  // BU_PROOF_REPLAY_H_
