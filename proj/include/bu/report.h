#ifndef BU_REPORT_H_
#define BU_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

namespace bu {

enum class Status { kPass, kFail };

// Verdict for one lemma or ledger entry over a stated finite range.
// status is kPass exactly when counterexamples is empty.
struct LemmaReport {
  std::string lemma_id;
  std::string range_description;
  Status status = Status::kPass;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::kPass; }

  // Appends a counterexample and flips the status to kFail.
  void Fail(std::string counterexample);
  void Note(std::string note) { notes.push_back(std::move(note)); }
};

// Folds several reports into one; the merged report fails if any part does.
LemmaReport Merge(std::string lemma_id, std::string range,
                  const std::vector<LemmaReport>& parts);

// "<lemma_id> <range> <PASS|FAIL> [counterexamples...]" (at most eight,
// then "(+N more)") followed by one "# <lemma_id>: <note>" line per note.
void WriteReportLine(std::ostream& out, const LemmaReport& r);

// One line per report, then "TOTAL <passes>/<checks>". Returns true when every
// report passed.
bool WriteReport(std::ostream& out, const std::vector<LemmaReport>& reports);

}  // namespace bu

#endif  // BU_REPORT_H_
