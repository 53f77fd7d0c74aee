#include "bu/sieve_search.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace bu {

namespace {

std::vector<u64> PrimesUpTo(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

u64 CheckedMul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("sieve accumulator overflow");
  }
  return r;
}

u64 FirstMultipleAtLeast(u64 lo, u64 m) { return (lo + m - 1) / m * m; }

std::string_view Field(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) {
    throw std::invalid_argument("hit record: expected field " +
                                std::string(key));
  }
  return token.substr(key.size());
}

}  // namespace

void SearchConfig::Validate() const {
  if (bound < 1 || bound > kMaxSearchBound) {
    throw std::invalid_argument("bound must be in [1, 10^12]");
  }
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (segment_size < 2) throw std::invalid_argument("segment must be >= 2");
  if (worker_count < 1) throw std::invalid_argument("workers must be >= 1");
  if (residue_filter) {
    if (residue_filter->modulus < 1) {
      throw std::invalid_argument("mod must be >= 1");
    }
    if (residue_filter->residue >= residue_filter->modulus) {
      throw std::invalid_argument("residue must be below mod");
    }
  }
}

SegmentSiever::SegmentSiever(u64 limit, DivisorClass c)
    : limit_(limit), class_(c) {
  if (limit > kMaxSearchBound + 1) {
    throw std::invalid_argument("sieve limit exceeds 10^12 + 1");
  }
  const u64 root = limit < 2 ? 0 : static_cast<u64>(ISqrt(limit - 1));
  for (u64 p : PrimesUpTo(root)) {
    PrimeTable t{p, {1}};
    u64 pe = 1;
    for (int e = 1; pe <= (limit - 1) / p; ++e) {
      pe *= p;
      t.sigma.push_back(static_cast<u64>(FromBig(SigmaPrimePower(p, e, c))));
    }
    tables_.push_back(std::move(t));
  }
}

std::vector<u64> SegmentSiever::Sieve(u64 lo, u64 hi) const {
  if (lo < 1 || hi < lo || hi > limit_) {
    throw std::invalid_argument("Sieve: need 1 <= lo <= hi <= limit");
  }
  const std::size_t size = hi - lo;
  std::vector<u64> sigma(size, 1);
  std::vector<u64> factored(size, 1);
  std::vector<std::uint8_t> exponent(size, 0);

  for (const PrimeTable& t : tables_) {
    const u64 p = t.prime;
    if (p * p > hi - 1) break;
    for (u64 pk = p;; pk *= p) {
      for (u64 m = FirstMultipleAtLeast(lo, pk); m < hi; m += pk) {
        ++exponent[m - lo];
        factored[m - lo] *= p;
      }
      if (pk > (hi - 1) / p) break;
    }
    for (u64 m = FirstMultipleAtLeast(lo, p); m < hi; m += p) {
      const std::size_t i = m - lo;
      sigma[i] = CheckedMul(sigma[i], t.sigma[exponent[i]]);
      exponent[i] = 0;
    }
  }
  // What is left over is 1 or a single prime above the square root.
  for (std::size_t i = 0; i < size; ++i) {
    const u64 cofactor = (lo + i) / factored[i];
    if (cofactor > 1) sigma[i] = CheckedMul(sigma[i], cofactor + 1);
  }
  return sigma;
}

std::vector<u64> SieveSegment(u64 lo, u64 hi, DivisorClass c) {
  return SegmentSiever(hi, c).Sieve(lo, hi);
}

namespace {

PerfectHit VerifiedHit(u64 n, u64 k, DivisorClass c) {
  Factorization f = Factor(n);
  BigInt sigma = DivisorSum(f, c);
  if (f.Value() != n || sigma != BigInt(n) * k) {
    throw std::logic_error("sieve/closed-form disagreement at n=" +
                           std::to_string(n));
  }
  return {n, k, c, std::move(f), std::move(sigma)};
}

std::vector<PerfectHit> ScanSegment(const SegmentSiever& siever,
                                    const SearchConfig& config, u64 lo,
                                    u64 hi) {
  const std::vector<u64> sigma = siever.Sieve(lo, hi);
  std::vector<PerfectHit> hits;
  for (u64 n = std::max<u64>(lo, 2); n < hi; ++n) {
    if (static_cast<u128>(sigma[n - lo]) !=
        static_cast<u128>(n) * config.k) {
      continue;
    }
    if (config.residue_filter &&
        n % config.residue_filter->modulus != config.residue_filter->residue) {
      continue;
    }
    hits.push_back(VerifiedHit(n, config.k, config.divisor_class));
  }
  return hits;
}

}  // namespace

SearchResult SearchKPerfect(const SearchConfig& config) {
  config.Validate();
  SearchResult result;
  if (config.checkpoint_path) {
    if (auto cp = ReadCheckpoint(*config.checkpoint_path)) {
      for (const auto& h : cp->hits) {
        if (h.k != config.k || h.divisor_class != config.divisor_class) {
          throw std::runtime_error("checkpoint " +
                                   config.checkpoint_path->string() +
                                   " belongs to a different search");
        }
      }
      result.last_completed_hi = cp->last_completed_hi;
      result.hits = std::move(cp->hits);
    }
  }

  u64 end = config.bound + 1;
  if (config.stop_before) end = std::min(end, *config.stop_before);
  const u64 start = result.last_completed_hi;
  if (start >= end) {
    result.complete = result.last_completed_hi >= config.bound + 1;
    return result;
  }

  const SegmentSiever siever(end, config.divisor_class);
  const u64 segment_count =
      (end - start + config.segment_size - 1) / config.segment_size;
  auto segment_lo = [&](u64 i) { return start + i * config.segment_size; };
  auto segment_hi = [&](u64 i) {
    return std::min(end, segment_lo(i) + config.segment_size);
  };

  std::mutex mu;
  std::vector<std::optional<std::vector<PerfectHit>>> pending(segment_count);
  u64 merged = 0;
  std::exception_ptr error;
  std::atomic<u64> next{0};
  std::atomic<bool> stop{false};

  // Called with mu held.
  auto merge_ready = [&] {
    const u64 before = merged;
    while (merged < segment_count && pending[merged]) {
      auto& hits = *pending[merged];
      std::move(hits.begin(), hits.end(), std::back_inserter(result.hits));
      pending[merged].reset();
      result.last_completed_hi = segment_hi(merged);
      ++merged;
    }
    if (merged == before) return;
    if (config.checkpoint_path) {
      WriteCheckpoint(*config.checkpoint_path,
                      {result.last_completed_hi, result.hits});
    }
    if (config.progress) config.progress(result.last_completed_hi);
  };

  auto worker = [&] {
    try {
      while (!stop.load()) {
        const u64 i = next.fetch_add(1);
        if (i >= segment_count) break;
        auto hits = ScanSegment(siever, config, segment_lo(i), segment_hi(i));
        std::lock_guard<std::mutex> lock(mu);
        pending[i] = std::move(hits);
        merge_ready();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      stop.store(true);
    }
  };

  if (config.worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < config.worker_count; ++w) {
      threads.emplace_back(worker);
    }
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  result.complete = result.last_completed_hi >= config.bound + 1;
  return result;
}

std::string FormatHitRecord(const PerfectHit& hit) {
  std::ostringstream out;
  out << "k=" << hit.k << " class=" << ClassName(hit.divisor_class)
      << " n=" << hit.n << " sigma=" << hit.sigma_value.get_str()
      << " fact=" << hit.factorization.ToRecordString();
  return out.str();
}

PerfectHit ParseHitRecord(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t sp = line.find(' ', pos);
    const std::size_t stop = sp == std::string_view::npos ? line.size() : sp;
    if (stop > pos) tokens.push_back(line.substr(pos, stop - pos));
    pos = stop + 1;
  }
  if (tokens.size() != 5) {
    throw std::invalid_argument("hit record: expected 5 fields: " +
                                std::string(line));
  }
  const u64 k = static_cast<u64>(ParseU128(Field(tokens[0], "k=")));
  const auto c = ParseClass(Field(tokens[1], "class="));
  if (!c) throw std::invalid_argument("hit record: bad class");
  const u128 n128 = ParseU128(Field(tokens[2], "n="));
  if (n128 > kMaxSearchBound) {
    throw std::invalid_argument("hit record: n out of range");
  }
  const u64 n = static_cast<u64>(n128);
  const BigInt sigma(std::string(Field(tokens[3], "sigma=")));

  std::vector<PrimePower> entries;
  std::string_view fact = Field(tokens[4], "fact=");
  if (fact != "1") {
    while (!fact.empty()) {
      const std::size_t star = fact.find('*');
      const std::string_view pp = fact.substr(0, star);
      const std::size_t caret = pp.find('^');
      if (caret == std::string_view::npos) {
        throw std::invalid_argument("hit record: factor without exponent");
      }
      entries.push_back(
          {ParseU128(pp.substr(0, caret)),
           static_cast<int>(ParseU128(pp.substr(caret + 1)))});
      fact = star == std::string_view::npos ? std::string_view{}
                                            : fact.substr(star + 1);
    }
  }
  Factorization f(std::move(entries));
  if (!f.IsCanonical() || f.Value() != n) {
    throw std::invalid_argument("hit record: factorization does not match n");
  }
  if (sigma != DivisorSum(f, *c) || sigma != BigInt(n) * k) {
    throw std::invalid_argument("hit record: sigma does not verify");
  }
  return {n, k, *c, std::move(f), sigma};
}

void WriteBFile(std::ostream& out, const std::vector<PerfectHit>& hits) {
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i > 0 && hits[i - 1].n >= hits[i].n) {
      throw std::invalid_argument("b-file: hits must be ascending");
    }
    out << (i + 1) << ' ' << hits[i].n << '\n';
  }
}

void ExportBFile(const std::vector<PerfectHit>& hits,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteBFile(out, hits);
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

void WriteCheckpoint(const std::filesystem::path& path, const Checkpoint& cp) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << "last_completed_hi=" << cp.last_completed_hi << '\n';
    for (const auto& h : cp.hits) out << FormatHitRecord(h) << '\n';
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Checkpoint> ReadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::string line;
  if (!std::getline(in, line) ||
      line.rfind("last_completed_hi=", 0) != 0) {
    throw std::runtime_error("corrupt checkpoint header in " + path.string());
  }
  try {
    const u128 hi = ParseU128(std::string_view(line).substr(18));
    if (hi < 1 || hi > kMaxSearchBound + 1) throw std::invalid_argument("range");
    cp.last_completed_hi = static_cast<u64>(hi);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      cp.hits.push_back(ParseHitRecord(line));
      if (cp.hits.size() > 1 &&
          cp.hits[cp.hits.size() - 2].n >= cp.hits.back().n) {
        throw std::invalid_argument("hits out of order");
      }
      if (cp.hits.back().n >= cp.last_completed_hi) {
        throw std::invalid_argument("hit beyond completed prefix");
      }
    }
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("corrupt checkpoint " + path.string() + ": " +
                             e.what());
  }
  return cp;
}

}  // namespace bu
