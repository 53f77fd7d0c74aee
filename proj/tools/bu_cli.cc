// Command-line front end: factor, sigma, divisors, search, zsigmondy, verify,
// export-bfile. Every subcommand exits nonzero on bad input or failed checks.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bu/divfun.h"
#include "bu/factorint.h"
#include "bu/proof_replay.h"
#include "bu/report.h"
#include "bu/sieve_search.h"
#include "bu/zsigmondy.h"

namespace {

using bu::u128;
using bu::u64;

// Flag error carrying the flag name, reported as "<flag>: <message>".
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

u128 ParseNumber(const std::string& flag, const std::string& text) {
  try {
    return bu::ParseU128(text);
  } catch (const std::exception& e) {
    throw FlagError(flag, e.what());
  }
}

bu::DivisorClass ParseClassFlag(const std::string& text) {
  const auto c = bu::ParseClass(text);
  if (!c) throw FlagError("--class", "expected all, unitary or biunitary");
  return *c;
}

int CmdFactor(const std::string& n_text) {
  const u128 n = ParseNumber("n", n_text);
  if (n == 0) throw FlagError("n", "must be positive");
  std::cout << bu::ToString(n) << " = " << bu::Factor(n).ToString() << '\n';
  return 0;
}

int CmdSigma(const std::string& n_text, const std::string& cls) {
  const u128 n = ParseNumber("n", n_text);
  if (n == 0) throw FlagError("n", "must be positive");
  const auto c = ParseClassFlag(cls);
  const auto f = bu::Factor(n);
  std::cout << bu::DivisorSum(f, c).get_str() << " (ratio "
            << bu::Abundancy(f, c).ToString() << ")\n";
  return 0;
}

int CmdDivisors(const std::string& n_text, const std::string& cls) {
  const u128 n = ParseNumber("n", n_text);
  if (n == 0) throw FlagError("n", "must be positive");
  const auto c = ParseClassFlag(cls);
  const auto divs = bu::ListDivisors(bu::Factor(n), c);
  for (size_t i = 0; i < divs.size(); ++i) {
    std::cout << (i ? " " : "") << divs[i];
  }
  std::cout << '\n';
  return 0;
}

struct SearchFlags {
  u64 k = 2;
  u64 bound = 0;
  std::string cls = "biunitary";
  u64 modulus = 0;
  u64 residue = 0;
  bool residue_set = false;
  u64 segment = bu::kDefaultSegmentSize;
  unsigned workers = 1;
  std::string checkpoint;
  std::string out;
  std::string bfile;
  std::string format = "records";
  bool progress = false;
};

int CmdSearch(const SearchFlags& flags) {
  bu::SearchConfig config;
  config.k = flags.k;
  config.bound = flags.bound;
  config.divisor_class = ParseClassFlag(flags.cls);
  config.segment_size = flags.segment;
  config.worker_count = flags.workers;
  if (flags.modulus != 0) {
    config.residue_filter = bu::ResidueFilter{flags.modulus, flags.residue};
  } else if (flags.residue_set) {
    throw FlagError("--residue", "requires --mod");
  }
  if (!flags.checkpoint.empty()) config.checkpoint_path = flags.checkpoint;
  if (flags.progress) {
    config.progress = [](u64 hi) { std::cerr << "sieved " << hi << '\n'; };
  }
  try {
    config.Validate();
  } catch (const std::invalid_argument& e) {
    // Validate() messages open with the field name, which matches the flag.
    const std::string what = e.what();
    throw FlagError("--" + what.substr(0, what.find(' ')), what);
  }

  const bu::SearchResult result = bu::SearchKPerfect(config);

  std::ofstream file;
  if (!flags.out.empty()) {
    file.open(flags.out);
    if (!file) throw FlagError("--out", "cannot open " + flags.out);
  }
  std::ostream& out = flags.out.empty() ? std::cout : file;
  for (const auto& hit : result.hits) {
    if (flags.format == "text") {
      out << hit.n << " = " << hit.factorization.ToString() << '\n';
    } else {
      out << bu::FormatHitRecord(hit) << '\n';
    }
  }
  if (!flags.bfile.empty()) bu::ExportBFile(result.hits, flags.bfile);
  return 0;
}

int CmdZsigmondy(const std::string& a_text, const std::string& n_text,
                 const std::string& sign_text) {
  const u128 a = ParseNumber("a", a_text);
  const u128 n = ParseNumber("n", n_text);
  if (a < 2) throw FlagError("a", "must be at least 2");
  if (n < 1) throw FlagError("n", "must be at least 1");
  bu::Sign sign;
  if (sign_text == "minus") {
    sign = bu::Sign::kMinus;
  } else if (sign_text == "plus") {
    sign = bu::Sign::kPlus;
  } else {
    throw FlagError("--sign", "expected minus or plus");
  }
  const auto r = bu::PrimitivePrimeFactors(static_cast<u64>(a),
                                           static_cast<u64>(n), sign);
  const std::string pair =
      "(" + bu::ToString(a) + "," + bu::ToString(n) + ")";
  if (!r.exists) {
    if (r.exception != bu::ZsigmondyException::kNone) {
      std::cout << "exception: " << pair << '\n';
    } else {
      std::cout << "none: " << pair << '\n';
    }
    return 0;
  }
  const u128 mod = sign == bu::Sign::kMinus ? n : 2 * n;
  std::cout << "primitive:";
  for (size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    std::cout << (i ? ", " : " ") << bu::ToString(w.prime) << " (≡"
              << bu::ToString(w.residue) << " mod " << bu::ToString(mod)
              << ")";
  }
  std::cout << '\n';
  return 0;
}

struct VerifyFlags {
  std::string suite = "all";
  u64 n_max = 1'000'000;
  u64 p_max = 100;
  int g_e_max = 20;
  int m_max = 5;
  int f_max = 40;
  int e_max = 40;
  int s_max = 64;
  int t_max = 64;
  u64 bound = 1'000'000;
  unsigned workers = 1;
  u64 a_max = 20;
  u64 zn_max = 20;
  u64 zc_max = 15;
};

std::vector<bu::LemmaReport> LemmaSuite(const VerifyFlags& v) {
  using bu::Lemma24Part;
  bu::Lemma24Range r24;
  r24.f_max = v.f_max;
  std::vector<bu::LemmaReport> out = {
      bu::CheckLemmaA(v.n_max),
      bu::CheckLemmaB(v.p_max, v.g_e_max, v.m_max),
      bu::CheckLemma22(5, v.f_max),
      bu::CheckLemma23(6, v.e_max),
  };
  for (auto part : {Lemma24Part::kI, Lemma24Part::kII, Lemma24Part::kIII,
                    Lemma24Part::kIV, Lemma24Part::kV}) {
    out.push_back(bu::CheckLemma24(part, r24));
  }
  out.push_back(bu::CheckLargeExponentPrimeCount());
  for (auto& r : bu::CheckBranchBoundFamilies(v.s_max, v.t_max)) {
    out.push_back(std::move(r));
  }
  return out;
}

int CmdVerify(const VerifyFlags& v) {
  const bool all = v.suite == "all";
  if (!all && v.suite != "lemmas" && v.suite != "ledger" &&
      v.suite != "theorem" && v.suite != "zsigmondy") {
    throw FlagError("--suite", "expected lemmas, ledger, theorem, zsigmondy or all");
  }
  if (v.f_max < 5 || v.f_max > 80) throw FlagError("--f-max", "range 5..80");
  if (v.e_max < 6 || v.e_max > 80) throw FlagError("--e-max", "range 6..80");
  if (v.s_max < 4 || v.s_max > 64) throw FlagError("--s-max", "range 4..64");
  if (v.t_max < 3 || v.t_max > 64) throw FlagError("--t-max", "range 3..64");
  if (v.n_max > 10'000'000) throw FlagError("--n-max", "at most 10000000");
  if (v.bound == 0 || v.bound > bu::kMaxSearchBound) {
    throw FlagError("--bound", "range 1..1000000000000");
  }

  std::vector<bu::LemmaReport> reports;
  if (all || v.suite == "ledger") {
    for (auto& r : bu::VerifyLedgerEntries()) reports.push_back(std::move(r));
  }
  if (all || v.suite == "lemmas") {
    for (auto& r : LemmaSuite(v)) reports.push_back(std::move(r));
  }
  if (all || v.suite == "zsigmondy") {
    reports.push_back(bu::CheckBangRange(v.a_max, v.zn_max));
    reports.push_back(bu::CheckLemmaCRange(v.a_max, v.zc_max));
  }
  if (all || v.suite == "theorem") {
    reports.push_back(bu::VerifyTheoremDesk(v.bound, v.workers));
  }
  return bu::WriteReport(std::cout, reports) ? 0 : 1;
}

int CmdExportBFile(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw FlagError("--in", "cannot open " + in_path);
  std::vector<bu::PerfectHit> hits;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      hits.push_back(bu::ParseHitRecord(line));
    } catch (const std::invalid_argument& e) {
      throw FlagError("--in", "line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  if (out_path.empty()) {
    bu::WriteBFile(std::cout, hits);
  } else {
    bu::ExportBFile(hits, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biunitary and unitary multiperfect number toolkit"};
  app.require_subcommand(1);

  std::string n_text, cls = "biunitary";
  auto* factor = app.add_subcommand("factor", "factor a positive integer");
  factor->add_option("n", n_text)->required();

  auto* sigma = app.add_subcommand("sigma", "divisor sum and abundancy");
  sigma->add_option("n", n_text)->required();
  sigma->add_option("--class", cls, "all|unitary|biunitary");

  auto* divisors = app.add_subcommand("divisors", "list divisors of a class");
  divisors->add_option("n", n_text)->required();
  divisors->add_option("--class", cls, "all|unitary|biunitary");

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "sieve for k-perfect numbers");
  search->add_option("--k", sf.k)->required();
  search->add_option("--bound", sf.bound)->required();
  search->add_option("--class", sf.cls, "all|unitary|biunitary");
  search->add_option("--mod", sf.modulus, "residue filter modulus");
  auto* residue_opt =
      search->add_option("--residue", sf.residue, "residue filter value");
  search->add_option("--segment", sf.segment, "segment length");
  search->add_option("--workers", sf.workers, "worker threads");
  search->add_option("--checkpoint", sf.checkpoint, "checkpoint file");
  search->add_option("--out", sf.out, "record output file");
  search->add_option("--bfile", sf.bfile, "also write a b-file here");
  search->add_option("--format", sf.format, "records|text")
      ->check(CLI::IsMember({"records", "text"}));
  search->add_flag("--progress", sf.progress, "progress on stderr");

  std::string a_text, zn_text, sign_text = "minus";
  auto* zsig = app.add_subcommand("zsigmondy", "primitive prime factors");
  zsig->add_option("a", a_text)->required();
  zsig->add_option("n", zn_text)->required();
  zsig->add_option("--sign", sign_text, "minus|plus");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "replay finite checks");
  verify->add_option("--suite", vf.suite,
                     "lemmas|ledger|theorem|zsigmondy|all");
  verify->add_option("--n-max", vf.n_max, "parity/valuation range");
  verify->add_option("--p-max", vf.p_max, "prime range for the lower bounds");
  verify->add_option("--g-max", vf.g_e_max, "exponent range for the lower bounds");
  verify->add_option("--m-max", vf.m_max, "m range for the lower bounds");
  verify->add_option("--f-max", vf.f_max, "largest exponent of 3");
  verify->add_option("--e-max", vf.e_max, "largest exponent of 2");
  verify->add_option("--s-max", vf.s_max);
  verify->add_option("--t-max", vf.t_max);
  verify->add_option("--bound", vf.bound, "desk search bound");
  verify->add_option("--workers", vf.workers);
  verify->add_option("--a-max", vf.a_max);
  verify->add_option("--bang-n-max", vf.zn_max);
  verify->add_option("--plus-n-max", vf.zc_max);

  std::string in_path, out_path;
  auto* bfile = app.add_subcommand("export-bfile", "records to b-file");
  bfile->add_option("--in", in_path)->required();
  bfile->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  sf.residue_set = residue_opt->count() > 0;

  try {
    if (*factor) return CmdFactor(n_text);
    if (*sigma) return CmdSigma(n_text, cls);
    if (*divisors) return CmdDivisors(n_text, cls);
    if (*search) return CmdSearch(sf);
    if (*zsig) return CmdZsigmondy(a_text, zn_text, sign_text);
    if (*verify) return CmdVerify(vf);
    if (*bfile) return CmdExportBFile(in_path, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
