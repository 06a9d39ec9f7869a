#include "msv/survey.hpp"

#include <algorithm>
#include <fstream>
#include <thread>

#include "msv/errors.hpp"
#include "msv/random.hpp"
#include "msv/serialize.hpp"

namespace msv {

namespace {

// Enough to carry all maximizers whenever the count is humanly small;
// for n <= 3 everything ties at 0 and n! <= 6 still fits.
constexpr uint64_t kMaximizerKeep = 24;

void check_exhaustive_limit(int n, int max_exhaustive_n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > max_exhaustive_n || n > 20) {
    throw limit_error("exhaustive enumeration of S_" + std::to_string(n) +
                      " exceeds the configured limit of n = " +
                      std::to_string(std::min(max_exhaustive_n, 20)) +
                      "; use sampling instead");
  }
}

// Per-worker fold state. Chunks scan in lexicographic order, so the first
// permutation seen at each complexity is the chunk's lexicographic minimum.
struct ScanAccumulator {
  std::map<int, uint64_t> counts;
  std::map<int, Permutation> first_witness;
  int local_max = -1;
  std::vector<Permutation> at_max;  // capped at kMaximizerKeep + 1

  void add(int complexity, const Permutation& w) {
    auto [it, inserted] = counts.try_emplace(complexity, 0);
    ++it->second;
    if (inserted) first_witness.emplace(complexity, w);
    if (complexity > local_max) {
      local_max = complexity;
      at_max.clear();
      at_max.push_back(w);
    } else if (complexity == local_max &&
               at_max.size() <= kMaximizerKeep) {
      at_max.push_back(w);
    }
  }

  void merge(ScanAccumulator&& other) {
    for (auto& [d, c] : other.counts) counts[d] += c;
    for (auto& [d, w] : other.first_witness) {
      auto [it, inserted] = first_witness.try_emplace(d, w);
      if (!inserted && w < it->second) it->second = w;
    }
    if (other.local_max > local_max) {
      local_max = other.local_max;
      at_max = std::move(other.at_max);
    } else if (other.local_max == local_max) {
      at_max.insert(at_max.end(), other.at_max.begin(), other.at_max.end());
    }
  }
};

struct ScanResult {
  SpectrumResult spectrum;
  std::map<int, uint64_t> counts;
};

ScanAccumulator scan_range(int n, uint64_t lo, uint64_t hi) {
  ScanAccumulator acc;
  if (lo >= hi) return acc;
  Permutation p = permutation_at_lex_rank(n, lo);
  std::vector<int> word = p.word();
  for (uint64_t r = lo; r < hi; ++r) {
    const Permutation w = Permutation::from_one_line(word);
    acc.add(analyze(w).complexity, w);
    if (!std::next_permutation(word.begin(), word.end())) break;
  }
  return acc;
}

ScanResult scan(int n, int workers, int max_exhaustive_n) {
  check_exhaustive_limit(n, max_exhaustive_n);
  const uint64_t total = factorial(n);
  workers = std::clamp(workers, 1, 64);
  if (static_cast<uint64_t>(workers) > total) {
    workers = static_cast<int>(total);
  }

  ScanAccumulator acc;
  if (workers == 1) {
    acc = scan_range(n, 0, total);
  } else {
    std::vector<ScanAccumulator> parts(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const uint64_t chunk = total / static_cast<uint64_t>(workers);
    const uint64_t rest = total % static_cast<uint64_t>(workers);
    uint64_t lo = 0;
    for (int i = 0; i < workers; ++i) {
      const uint64_t hi = lo + chunk + (static_cast<uint64_t>(i) < rest);
      pool.emplace_back([&parts, i, n, lo, hi] {
        parts[static_cast<size_t>(i)] = scan_range(n, lo, hi);
      });
      lo = hi;
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts) acc.merge(std::move(part));
  }

  ScanResult out;
  out.counts = acc.counts;
  SpectrumResult& s = out.spectrum;
  s.n = n;
  s.total_enumerated = total;
  for (const auto& [d, c] : acc.counts) s.achieved.push_back(d);
  s.witnesses = std::move(acc.first_witness);
  s.max_complexity = acc.local_max;
  std::sort(acc.at_max.begin(), acc.at_max.end());
  if (acc.at_max.size() > kMaximizerKeep) {
    acc.at_max.erase(acc.at_max.begin() + kMaximizerKeep, acc.at_max.end());
  }
  s.maximizers = std::move(acc.at_max);
  return out;
}

}  // namespace

uint64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("factorial overflow for n = " +
                                std::to_string(n));
  }
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

Permutation permutation_at_lex_rank(int n, uint64_t rank) {
  if (rank >= factorial(n)) {
    throw std::out_of_range("rank " + std::to_string(rank) +
                            " outside S_" + std::to_string(n));
  }
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const uint64_t f = factorial(i);
    const auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    word.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Permutation::from_one_line(std::move(word));
}

void enumerate_reports(
    int n, const std::function<void(const ComplexityReport&)>& visit,
    int max_exhaustive_n) {
  check_exhaustive_limit(n, max_exhaustive_n);
  std::vector<int> word = Permutation::identity(n).word();
  do {
    visit(analyze(Permutation::from_one_line(word)));
  } while (std::next_permutation(word.begin(), word.end()));
}

SpectrumResult spectrum(int n, int workers, int max_exhaustive_n) {
  return scan(n, workers, max_exhaustive_n).spectrum;
}

VerificationOutcome verify(TheoremId theorem, int n, int workers,
                           int max_exhaustive_n) {
  if (theorem != TheoremId::no_complexity_one && n < 4) {
    throw std::invalid_argument(std::string(theorem_name(theorem)) +
                                " is stated for n >= 4");
  }
  const ScanResult res = scan(n, workers, max_exhaustive_n);
  const SpectrumResult& s = res.spectrum;
  VerificationOutcome out;
  out.theorem = theorem;
  out.n = n;
  out.passed = true;

  switch (theorem) {
    case TheoremId::max_value: {
      const int expected = (n - 1) * (n - 3);
      out.note = "d_max = " + std::to_string(s.max_complexity);
      if (s.max_complexity != expected) {
        out.passed = false;
        out.note += ", expected " + std::to_string(expected);
        out.counterexample = s.witnesses.at(s.max_complexity);
      }
      break;
    }
    case TheoremId::unique_maximizer: {
      std::vector<int> expected_word(static_cast<size_t>(n));
      for (int i = 0; i < n - 2; ++i) expected_word[static_cast<size_t>(i)] = n - i;
      expected_word[static_cast<size_t>(n - 2)] = 1;
      expected_word[static_cast<size_t>(n - 1)] = 2;
      const Permutation expected =
          Permutation::from_one_line(std::move(expected_word));
      const uint64_t ties = res.counts.at(s.max_complexity);
      if (ties != 1) {
        out.passed = false;
        out.note = std::to_string(ties) + " permutations achieve d_max = " +
                   std::to_string(s.max_complexity);
        for (const Permutation& m : s.maximizers) {
          if (!(m == expected)) {
            out.counterexample = m;
            break;
          }
        }
        if (!out.counterexample) out.counterexample = s.maximizers.front();
      } else if (!(s.maximizers.front() == expected)) {
        out.passed = false;
        out.note = "maximizer " + s.maximizers.front().to_string() +
                   " differs from " + expected.to_string();
        out.counterexample = s.maximizers.front();
      } else {
        out.note = "maximizer " + expected.to_string();
      }
      break;
    }
    case TheoremId::full_spectrum: {
      std::vector<int> expected{0};
      for (int d = 2; d <= (n - 1) * (n - 3); ++d) expected.push_back(d);
      if (s.achieved == expected) {
        out.note = "achieved = {0} ∪ {2, ..., " +
                   std::to_string((n - 1) * (n - 3)) + "}";
      } else {
        out.passed = false;
        for (int d : s.achieved) {
          if (std::find(expected.begin(), expected.end(), d) ==
              expected.end()) {
            out.note = "unexpected complexity " + std::to_string(d);
            out.counterexample = s.witnesses.at(d);
            break;
          }
        }
        if (out.passed == false && out.note.empty()) {
          for (int d : expected) {
            if (std::find(s.achieved.begin(), s.achieved.end(), d) ==
                s.achieved.end()) {
              out.note = "complexity " + std::to_string(d) + " never achieved";
              break;
            }
          }
        }
      }
      break;
    }
    case TheoremId::no_complexity_one: {
      if (res.counts.count(1)) {
        out.passed = false;
        out.note = std::to_string(res.counts.at(1)) +
                   " permutations of complexity 1";
        out.counterexample = s.witnesses.at(1);
      } else {
        out.note = "complexity 1 never occurs";
      }
      break;
    }
  }
  return out;
}

void sample_reports(int n, int count, uint64_t seed,
                    const std::function<void(const ComplexityReport&)>& visit) {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  SplitMix64 gen(seed);
  for (int i = 0; i < count; ++i) {
    visit(analyze(random_permutation(n, gen)));
  }
}

void save_cache(const SpectrumResult& result,
                const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open cache file for writing: " +
                             path.string());
  }
  out << to_json(result).dump(2) << '\n';
  if (!out) {
    throw std::runtime_error("failed writing cache file: " + path.string());
  }
}

SpectrumResult load_cache(int n, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cache file not found: " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cache file is not valid JSON: " +
                             std::string(e.what()));
  }
  SpectrumResult s = spectrum_from_json(j);
  if (s.n != n) {
    throw std::runtime_error("cache holds n = " + std::to_string(s.n) +
                             ", requested n = " + std::to_string(n));
  }

  // Integrity: every stored witness and maximizer must re-analyze to its
  // claimed complexity.
  std::vector<int> keys;
  for (const auto& [d, w] : s.witnesses) {
    keys.push_back(d);
    if (w.size() != n) {
      throw verification_error("cache witness " + w.to_string() +
                               " is not in S_" + std::to_string(n));
    }
    const int found = analyze(w).complexity;
    if (found != d) {
      throw verification_error("cache witness " + w.to_string() +
                               " re-analyzes to " + std::to_string(found) +
                               ", claimed " + std::to_string(d));
    }
  }
  if (keys != s.achieved) {
    throw verification_error("cache achieved set disagrees with witnesses");
  }
  if (!s.achieved.empty() && s.max_complexity != s.achieved.back()) {
    throw verification_error("cache max_complexity disagrees with achieved");
  }
  for (const Permutation& m : s.maximizers) {
    if (m.size() != n || analyze(m).complexity != s.max_complexity) {
      throw verification_error("cache maximizer " + m.to_string() +
                               " fails re-verification");
    }
  }
  return s;
}

const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::max_value: return "max_value";
    case TheoremId::unique_maximizer: return "unique_maximizer";
    case TheoremId::full_spectrum: return "full_spectrum";
    case TheoremId::no_complexity_one: return "no_complexity_one";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  if (name == "max" || name == "max_value") return TheoremId::max_value;
  if (name == "unique" || name == "unique_maximizer") {
    return TheoremId::unique_maximizer;
  }
  if (name == "spectrum" || name == "full_spectrum") {
    return TheoremId::full_spectrum;
  }
  if (name == "no-one" || name == "no_complexity_one") {
    return TheoremId::no_complexity_one;
  }
  return std::nullopt;
}

}  // namespace msv
