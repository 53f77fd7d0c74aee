#include <algorithm>
#include <string>

#include "bu/proof_replay.h"
#include "doctest.h"

using bu::ExactRatio;
using bu::Factorization;
using bu::LemmaReport;

namespace {

bool HasCounterexample(const LemmaReport& r, const std::string& c) {
  return std::find(r.counterexamples.begin(), r.counterexamples.end(), c) !=
         r.counterexamples.end();
}

const LemmaReport& ById(const std::vector<LemmaReport>& rs,
                        const std::string& id) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const LemmaReport& r) {
    return r.lemma_id == id;
  });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("exponent splits round trip") {
  for (int e = 1; e <= 80; ++e) {
    const auto s = bu::ExponentSplit::Of(e);
    REQUIRE((s.bit == 0 || s.bit == 1));
    REQUIRE(s.Exponent() == e);
    const auto c = bu::CaseParams::Of(e, e + 1);
    REQUIRE(c.two.Exponent() == e);
    REQUIRE(c.three.Exponent() == e + 1);
  }
  CHECK(bu::ExponentSplit::Of(7).half == 4);
  CHECK(bu::ExponentSplit::Of(7).bit == 0);
  CHECK(bu::ExponentSplit::Of(6).half == 4);
  CHECK(bu::ExponentSplit::Of(6).bit == 1);
}

TEST_CASE("factored biunitary sums of prime powers") {
  CHECK(bu::SigmaBuFactored(3, 5).ToString() == "2^2 * 7 * 13");
  CHECK(bu::SigmaBuFactored(3, 14).ToString() == "2 * 17 * 193 * 1093");
  CHECK(bu::SigmaBuFactored(2, 8).ToString() == "3^2 * 5 * 11");
  CHECK(bu::SigmaBuFactored(2, 4).ToString() == "3^3");
  CHECK(bu::SigmaBuFactored(3, 13).ToString() == "2^2 * 547 * 1093");
  for (int e = 1; e <= 60; ++e) {
    REQUIRE(bu::SigmaBuFactored(3, e).Value() == bu::SigmaBuPrimePower(3, e));
  }
}

TEST_CASE("parity and 2-adic bound") {
  CHECK(bu::CheckLemmaA(20000).passed());
  CHECK_THROWS(bu::CheckLemmaA(20'000'000));
}

TEST_CASE("prime-power lower bounds") {
  CHECK(bu::CheckLemmaB(30, 10, 3).passed());
}

TEST_CASE("branches for the exponent of 3") {
  auto b = bu::ClassifyLemma22Branch(5);
  CHECK(b.branch == 'A');
  CHECK(b.witness == 7);
  b = bu::ClassifyLemma22Branch(6);
  CHECK(b.branch == 'D');
  CHECK(b.witness == 13);
  CHECK(bu::ClassifyLemma22Branch(7).branch == 'B');
  CHECK(bu::ClassifyLemma22Branch(8).branch == 'B');
  CHECK(bu::VerifyLemma22Branch(5, 'A', 13));
  CHECK_FALSE(bu::VerifyLemma22Branch(5, 'A', 11));
  CHECK_FALSE(bu::VerifyLemma22Branch(5, 'B', 5));
  CHECK_FALSE(bu::VerifyLemma22Branch(6, 'A', 13));
  CHECK_THROWS(bu::ClassifyLemma22Branch(4));
  for (int f = 5; f <= 60; ++f) {
    const auto r = bu::ClassifyLemma22Branch(f);
    REQUIRE(r.branch != '?');
    for (char h : r.holding) {
      if (h == r.branch) REQUIRE(bu::VerifyLemma22Branch(f, h, r.witness));
    }
  }
  CHECK(bu::CheckLemma22(5, 40).passed());
}

TEST_CASE("branches for the exponent of 2") {
  auto b = bu::ClassifyLemma23Branch(7);
  CHECK(b.branch == 'b');
  b = bu::ClassifyLemma23Branch(16);
  CHECK(b.branch == 'c');
  CHECK(b.q1 == 17);
  CHECK(b.q2 == 19);
  CHECK_FALSE(bu::VerifyLemma23Branch(16, 'a', 17, 19));
  CHECK_FALSE(bu::VerifyLemma23Branch(16, 'c', 17, 17));
  CHECK_THROWS(bu::ClassifyLemma23Branch(8));
  CHECK_THROWS(bu::ClassifyLemma23Branch(12));
  CHECK(bu::CheckLemma23(6, 40).passed());
}

TEST_CASE("miscellaneous divisibility facts") {
  const auto one = bu::CheckLemma24(bu::Lemma24Part::kI);
  CHECK_FALSE(one.passed());
  CHECK(one.counterexamples == std::vector<std::string>{"p=2,g=4:sigma=3^3"});

  CHECK(bu::CheckLemma24(bu::Lemma24Part::kII).passed());

  const auto three = bu::CheckLemma24(bu::Lemma24Part::kIII);
  CHECK(three.counterexamples.size() == 4);
  CHECK(HasCounterexample(three,
                          "f=19:sigma=2^3*5^2*11^2*61^1*1181^1"));
  REQUIRE(three.notes.size() == 1);
  CHECK(three.notes[0].find("disagrees") != std::string::npos);

  const auto four = bu::CheckLemma24(bu::Lemma24Part::kIV);
  CHECK(four.passed());
  CHECK(bu::CheckLemma24(bu::Lemma24Part::kV).passed());

  const auto big = bu::CheckLargeExponentPrimeCount();
  CHECK(big.counterexamples.size() == 3);
}

TEST_CASE("ledger rows") {
  const auto rows = bu::VerifyLedgerEntries();
  CHECK(rows.size() == bu::RatioLedger().size() + bu::DivisibilityLedger().size() +
                           bu::FactorizationLedger().size());
  for (const auto& r : rows) CHECK_MESSAGE(r.passed(), r.lemma_id);
  CHECK(bu::VerifyLedger().passed());

  const auto& first = bu::RatioLedger().front();
  CHECK(first.id == "lm31-e3");
  CHECK(bu::Abundancy(*first.n_factored, bu::DivisorClass::kBiunitary) ==
        ExactRatio(28, 9));
}

TEST_CASE("ledger rows fail on transcription errors") {
  bu::LedgerEntry wrong = bu::RatioLedger().front();
  wrong.claimed_ratio = ExactRatio(29, 9);
  CHECK_FALSE(bu::VerifyLedgerEntry(wrong).passed());

  bu::LedgerEntry flipped = bu::RatioLedger().front();
  flipped.comparator = bu::Comparator::kLess;
  CHECK_FALSE(bu::VerifyLedgerEntry(flipped).passed());

  bu::DivisibilityClaim div{"x", 128, Factorization({{3, 4}}), {7}};
  const auto r = bu::VerifyDivisibilityClaim(div);
  CHECK_FALSE(r.passed());

  bu::FactorizationClaim fac{"y", Factorization({{3, 14}}), 0,
                             Factorization({{2, 1}, {17, 1}, {193, 1}, {547, 1}})};
  CHECK_FALSE(bu::VerifyFactorizationClaim(fac).passed());
}

TEST_CASE("symbolic branch bounds") {
  const auto a4 = ExactRatio(255 * 226, 128 * 225);
  CHECK(a4 > ExactRatio::FromInt(2));
  const auto b3 = ExactRatio(26 * 26 * 28, 2 * 25 * 243);
  CHECK(b3 > ExactRatio(3, 2));

  const auto families = bu::CheckBranchBoundFamilies(64, 64);
  REQUIRE(families.size() == 8);
  for (const char* id : {"bound_a", "bound_b", "bound_A", "bound_B", "bound_C",
                         "bound_D"}) {
    CHECK_MESSAGE(ById(families, id).passed(), id);
  }
  const auto& c = ById(families, "bound_c'");
  CHECK_FALSE(c.passed());
  for (const auto& x : c.counterexamples) CHECK(x.find(":bound=") != std::string::npos);
  const auto& d = ById(families, "bound_d");
  CHECK_FALSE(d.passed());
  CHECK(HasCounterexample(d, "s=8,1:bound=16383/8192<=2/1"));
  CHECK_FALSE(bu::CheckBranchBounds(64, 64).passed());
  CHECK(bu::CheckBranchBounds(5, 64).passed());
}

TEST_CASE("desk-scale theorem") {
  const auto below = bu::VerifyTheoremDesk(2159);
  CHECK(below.passed());
  CHECK(below.notes == std::vector<std::string>{"hits: none"});
  const auto at = bu::VerifyTheoremDesk(2160);
  CHECK(at.passed());
  CHECK(at.notes == std::vector<std::string>{"hits: 2160"});
  CHECK(bu::VerifyTheoremDesk(1'000'000, 2).passed());
}
