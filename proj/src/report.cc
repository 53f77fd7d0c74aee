#include "bu/report.h"

#include <algorithm>
#include <utility>

namespace bu {

namespace {
constexpr size_t kPrintedLimit = 8;
}  // namespace

void LemmaReport::Fail(std::string counterexample) {
  counterexamples.push_back(std::move(counterexample));
  status = Status::kFail;
}

LemmaReport Merge(std::string lemma_id, std::string range,
                  const std::vector<LemmaReport>& parts) {
  LemmaReport merged{std::move(lemma_id), std::move(range)};
  for (const auto& part : parts) {
    for (const auto& c : part.counterexamples) {
      merged.Fail(part.lemma_id + ":" + c);
    }
    for (const auto& n : part.notes) merged.Note(part.lemma_id + ": " + n);
  }
  return merged;
}

void WriteReportLine(std::ostream& out, const LemmaReport& r) {
  out << r.lemma_id << ' ' << r.range_description << ' '
      << (r.passed() ? "PASS" : "FAIL");
  const size_t shown = std::min(r.counterexamples.size(), kPrintedLimit);
  for (size_t i = 0; i < shown; ++i) out << ' ' << r.counterexamples[i];
  if (shown < r.counterexamples.size()) {
    out << " (+" << r.counterexamples.size() - shown << " more)";
  }
  out << '\n';
  for (const auto& n : r.notes) out << "# " << r.lemma_id << ": " << n << '\n';
}

bool WriteReport(std::ostream& out, const std::vector<LemmaReport>& reports) {
  int passes = 0;
  for (const auto& r : reports) {
    WriteReportLine(out, r);
    if (r.passed()) ++passes;
  }
  out << "TOTAL " << passes << '/' << reports.size() << '\n';
  return passes == static_cast<int>(reports.size());
}

}  // namespace bu
