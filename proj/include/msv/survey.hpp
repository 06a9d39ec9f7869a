#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msv/complexity.hpp"
#include "msv/permutation.hpp"

namespace msv {

// Default ceiling for exhaustive S_n scans (11! ≈ 4.0e7 permutations).
inline constexpr int kDefaultMaxExhaustiveN = 11;

// Achieved complexities over all of S_n with one witness per value.
// Witnesses are the lexicographically smallest permutations per value, so
// serial and parallel scans produce identical results.
struct SpectrumResult {
  int n = 0;
  std::vector<int> achieved;             // sorted
  std::map<int, Permutation> witnesses;  // complexity -> lex-min witness
  int max_complexity = 0;
  std::vector<Permutation> maximizers;   // sorted, all permutations at max
  uint64_t total_enumerated = 0;

  friend bool operator==(const SpectrumResult&, const SpectrumResult&) =
      default;
};

enum class TheoremId {
  max_value,          // d_max(n) = (n-1)(n-3)
  unique_maximizer,   // achieved only by [n, n-1, ..., 3, 1, 2]
  full_spectrum,      // achieved set = {0} ∪ {2, ..., (n-1)(n-3)}
  no_complexity_one,  // complexity 1 never occurs
};

struct VerificationOutcome {
  TheoremId theorem = TheoremId::max_value;
  int n = 0;
  bool passed = false;
  std::string note;                        // always populated on failure
  std::optional<Permutation> counterexample;
};

uint64_t factorial(int n);

// Permutation at the given 0-based rank of the lexicographic order on S_n.
Permutation permutation_at_lex_rank(int n, uint64_t rank);

// Visits the report of every w in S_n in lexicographic one-line order.
// Throws limit_error above max_exhaustive_n with guidance to sample.
void enumerate_reports(int n,
                       const std::function<void(const ComplexityReport&)>& visit,
                       int max_exhaustive_n = kDefaultMaxExhaustiveN);

// Exhaustive spectrum of S_n. Worker chunks scan disjoint lexicographic
// ranges and merge by an associative fold; the result does not depend on
// the worker count.
SpectrumResult spectrum(int n, int workers = 1,
                        int max_exhaustive_n = kDefaultMaxExhaustiveN);

VerificationOutcome verify(TheoremId theorem, int n, int workers = 1,
                           int max_exhaustive_n = kDefaultMaxExhaustiveN);

// count reports of uniformly random permutations, deterministic per seed.
void sample_reports(int n, int count, uint64_t seed,
                    const std::function<void(const ComplexityReport&)>& visit);

// JSON cache, one file per n, schema-versioned. load_cache re-analyzes every
// stored witness and maximizer; tampering raises verification_error.
void save_cache(const SpectrumResult& result, const std::filesystem::path& path);
SpectrumResult load_cache(int n, const std::filesystem::path& path);

const char* theorem_name(TheoremId t);
// Accepts both the short CLI names (max, unique, spectrum, no-one) and the
// full enum names.
std::optional<TheoremId> theorem_from_name(std::string_view name);

}  // namespace msv
