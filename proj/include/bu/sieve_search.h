#ifndef BU_SIEVE_SEARCH_H_
#define BU_SIEVE_SEARCH_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bu/divfun.h"
#include "bu/factorint.h"
#include "bu/int128.h"

namespace bu {

inline constexpr u64 kMaxSearchBound = 1'000'000'000'000;
inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;

// A solution of DivisorSum(n, class) = k * n.
struct PerfectHit {
  u64 n;
  u64 k;
  DivisorClass divisor_class;
  Factorization factorization;
  BigInt sigma_value;

  friend bool operator==(const PerfectHit& a, const PerfectHit& b) {
    return a.n == b.n && a.k == b.k && a.divisor_class == b.divisor_class &&
           a.factorization == b.factorization &&
           a.sigma_value == b.sigma_value;
  }
};

struct ResidueFilter {
  u64 modulus;
  u64 residue;
};

struct SearchConfig {
  u64 bound = 0;
  u64 k = 2;
  DivisorClass divisor_class = DivisorClass::kBiunitary;
  u64 segment_size = kDefaultSegmentSize;
  unsigned worker_count = 1;
  std::optional<ResidueFilter> residue_filter;
  std::optional<std::filesystem::path> checkpoint_path;
  // Stop once every n below this value has been sieved; the checkpoint then
  // allows the run to be resumed.
  std::optional<u64> stop_before;
  // Receives the completed prefix after each merge step.
  std::function<void(u64 completed_hi)> progress;

  // Throws std::invalid_argument naming the offending field.
  void Validate() const;
};

struct SearchResult {
  std::vector<PerfectHit> hits;
  // Every n < last_completed_hi has been sieved.
  u64 last_completed_hi = 1;
  bool complete = false;
};

// Precomputed primes and prime-power tables for sieving n < limit.
class SegmentSiever {
 public:
  SegmentSiever(u64 limit, DivisorClass c);

  // Values sigma_class(n) for n in [lo, hi), hi <= limit.
  std::vector<u64> Sieve(u64 lo, u64 hi) const;

  DivisorClass divisor_class() const { return class_; }

 private:
  struct PrimeTable {
    u64 prime;
    // sigma_class(prime^e) for e = 0, 1, ...
    std::vector<u64> sigma;
  };

  u64 limit_;
  DivisorClass class_;
  std::vector<PrimeTable> tables_;
};

// sigma_class(n) for n in [lo, hi). Throws std::overflow_error if a product
// leaves 64 bits (not reachable for hi <= kMaxSearchBound + 1).
std::vector<u64> SieveSegment(u64 lo, u64 hi, DivisorClass c);

// Ascending hits n in [2, bound]; every hit is re-verified by factoring n.
SearchResult SearchKPerfect(const SearchConfig& config);

// "k=<k> class=<CLASS> n=<n> sigma=<value> fact=<p1^e1*p2^e2*...>"
std::string FormatHitRecord(const PerfectHit& hit);

// Parses and re-verifies a record line. Throws std::invalid_argument on
// malformed or inconsistent records.
PerfectHit ParseHitRecord(std::string_view line);

// OEIS b-file: "<index> <n>\n" per hit, index from 1.
void WriteBFile(std::ostream& out, const std::vector<PerfectHit>& hits);
void ExportBFile(const std::vector<PerfectHit>& hits,
                 const std::filesystem::path& path);

// Checkpoint: "last_completed_hi=<integer>" then one hit record per line.
struct Checkpoint {
  u64 last_completed_hi = 1;
  std::vector<PerfectHit> hits;
};

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& cp);
std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path);

}  // namespace bu

#endif  // BU_SIEVE_SEARCH_H_
