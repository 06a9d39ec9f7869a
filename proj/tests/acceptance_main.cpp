// Acceptance suite: one criterion per numbered case, one pass/fail line
// each. Run with no arguments for all criteria or with a number to run one.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "msv/complexity.hpp"
#include "msv/constructions.hpp"
#include "msv/diagrams.hpp"
#include "msv/errors.hpp"
#include "msv/graph_cone.hpp"
#include "msv/random.hpp"
#include "msv/serialize.hpp"
#include "msv/survey.hpp"

using namespace msv;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

template <typename T>
void require_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    throw Failure(msg.str());
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// 1. worked example 3412: the full tuple, exactly, in under a millisecond
std::string criterion_1() {
  analyze(Permutation::parse("3412"));  // warm-up
  const auto start = std::chrono::steady_clock::now();
  const ComplexityReport r = analyze(Permutation::parse("3412"));
  const double elapsed = seconds_since(start);
  require_eq(r.card_opposite_rothe, 2, "|D°|");
  require_eq(r.card_dominant, 1, "|dom|");
  require_eq(r.card_southwest, 9, "|sw|");
  require_eq(r.card_l, 8, "|L|");
  require_eq(r.card_l_prime, 7, "|L'|");
  require_eq(r.dim_msv, 14, "dim MSV");
  require_eq(r.dim_y, 7, "dim Y");
  require_eq(r.vertex_count, 6, "|V(G)|");
  require_eq(r.component_count, 1, "|comp|");
  require_eq(r.complexity, 2, "d");
  require(elapsed < 1e-3, "analyze took " + std::to_string(elapsed) + " s");
  std::ostringstream note;
  note << "analyze(3412) exact in " << elapsed * 1e6 << " us";
  return note.str();
}

// 2. worked example 54132
std::string criterion_2() {
  const ComplexityReport r = analyze(Permutation::parse("54132"));
  require_eq(r.card_l, 12, "|L|");
  require_eq(r.card_dominant, 0, "|dom|");
  require_eq(r.card_opposite_rothe, 2, "|D°|");
  require_eq(r.vertex_count, 7, "|V|");
  require_eq(r.component_count, 1, "|comp|");
  require_eq(r.complexity, 4, "d");
  return "analyze(54132) exact";
}

// 3. essential sets as printed
std::string criterion_3() {
  CellSet e34512(5);
  e34512.insert(2, 4);
  e34512.insert(4, 1);
  e34512.insert(5, 2);
  require(essential_set(Permutation::parse("34512")) == e34512,
          "ess(34512) differs");
  CellSet e3412(4);
  e3412.insert(4, 1);
  e3412.insert(2, 3);
  require(essential_set(Permutation::parse("3412")) == e3412,
          "ess(3412) differs");
  return "ess(34512) and ess(3412) exact";
}

// 4. maximum value and unique maximizer for n = 4..8
std::string criterion_4() {
  std::ostringstream note;
  note << "d_max:";
  double n8_elapsed = 0;
  for (int n = 4; n <= 8; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const VerificationOutcome max_ok = verify(TheoremId::max_value, n, 1);
    if (n == 8) n8_elapsed = seconds_since(start);
    require(max_ok.passed, "max_value failed at n = " + std::to_string(n) +
                               ": " + max_ok.note);
    const VerificationOutcome uniq_ok =
        verify(TheoremId::unique_maximizer, n, 1);
    require(uniq_ok.passed, "unique_maximizer failed at n = " +
                                std::to_string(n) + ": " + uniq_ok.note);
    const SpectrumResult s = spectrum(n, 1);
    require_eq(s.max_complexity, (n - 1) * (n - 3), "d_max");
    const Permutation expected = Permutation::longest_element(n) *
                                 Permutation::adjacent_transposition(n, n - 1);
    require(s.maximizers == std::vector<Permutation>{expected},
            "maximizer differs at n = " + std::to_string(n));
    note << " " << s.max_complexity;
  }
  require(n8_elapsed < 10.0,
          "n = 8 scan took " + std::to_string(n8_elapsed) + " s");

  const auto start9 = std::chrono::steady_clock::now();
  const SpectrumResult s9 = spectrum(9, 1);
  const double n9_elapsed = seconds_since(start9);
  require_eq(s9.max_complexity, 48, "d_max(9)");
  require(n9_elapsed < 120.0,
          "n = 9 scan took " + std::to_string(n9_elapsed) + " s");
  note << " 48; n=8 scan " << n8_elapsed << " s, n=9 scan " << n9_elapsed
       << " s, single-threaded";
  return note.str();
}

// 5. full spectrum for n = 4..8, and no complexity 1 for n = 2..8
std::string criterion_5() {
  for (int n = 2; n <= 8; ++n) {
    const VerificationOutcome none = verify(TheoremId::no_complexity_one, n, 2);
    require(none.passed,
            "complexity 1 occurred at n = " + std::to_string(n));
  }
  for (int n = 4; n <= 8; ++n) {
    const SpectrumResult s = spectrum(n, 2);
    std::vector<int> expected{0};
    for (int d = 2; d <= (n - 1) * (n - 3); ++d) expected.push_back(d);
    require(s.achieved == expected,
            "spectrum differs at n = " + std::to_string(n));
    const VerificationOutcome full = verify(TheoremId::full_spectrum, n, 2);
    require(full.passed, "full_spectrum failed at n = " + std::to_string(n));
  }
  return "spectra exact for n = 4..8, no complexity 1 for n = 2..8";
}

// 6. rank-based cone dimension equals |V| - |comp|: exhaustive n <= 7 plus
// 10^4 seeded random permutations with n <= 30
std::string criterion_6() {
  uint64_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> word = Permutation::identity(n).word();
    do {
      const Permutation w = Permutation::from_one_line(word);
      const CellSet l = l_diagram(w);
      const int by_rank = cone_dim_by_rank(weight_generators(l, n));
      const int by_formula = cone_dim_by_formula(graph_of(l));
      require(by_rank == by_formula,
              "mismatch at " + w.to_string() + ": rank " +
                  std::to_string(by_rank) + " vs formula " +
                  std::to_string(by_formula));
      ++checked;
    } while (std::next_permutation(word.begin(), word.end()));
  }

  SplitMix64 gen(20240801);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 8 + static_cast<int>(gen.below(23));  // 8..30
    const Permutation w = random_permutation(n, gen);
    const CellSet l = l_diagram(w);
    const int by_rank = cone_dim_by_rank(weight_generators(l, n));
    const int by_formula = cone_dim_by_formula(graph_of(l));
    require(by_rank == by_formula, "mismatch at " + w.to_string());
    ++checked;
  }
  return std::to_string(checked) + " permutations, zero mismatches";
}

// 7. composition law on >= 10^3 seeded random valid (alpha, beta, k)
std::string criterion_7() {
  SplitMix64 gen(7070);
  int done = 0;
  while (done < 1000) {
    const int n = 4 + static_cast<int>(gen.below(7));  // 4..10
    const int k =
        2 + static_cast<int>(gen.below(static_cast<uint64_t>(n - 2)));
    const int m = n - k;
    Permutation tail = random_permutation(k, gen);
    if (tail.noninversions().empty()) continue;  // D°(alpha) must be nonempty
    std::vector<int> word;
    for (int i = 1; i <= m; ++i) word.push_back(n + 1 - i);
    for (int i = 1; i <= k; ++i) word.push_back(tail(i));
    const Permutation alpha = Permutation::from_one_line(std::move(word));
    const Permutation beta = random_permutation(m, gen);

    const Permutation w = compose_antidiagonal(alpha, beta, k);
    const int expected =
        analyze(alpha).complexity - opposite_rothe(beta).size();
    require(analyze(w).complexity == expected,
            "composition law failed for alpha = " + alpha.to_string() +
                ", beta = " + beta.to_string() +
                ", k = " + std::to_string(k));
    ++done;
  }
  return "1000 random (alpha, beta, k) triples, exact drop every time";
}

// 8. the w0 s_i family for n <= 12
std::string criterion_8() {
  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    for (int i = 2; i <= n - 1; ++i) {
      const auto [w, predicted] = w0_si(n, i);
      require(predicted == i * (i - 2), "prediction differs");
      require(analyze(w).complexity == i * (i - 2),
              "complexity of w0 s_" + std::to_string(i) + " in S_" +
                  std::to_string(n) + " differs from i(i-2)");
      CellSet expected(n);
      expected.insert(n + 1 - i, i);
      require(opposite_rothe(w) == expected,
              "D°(w0 s_i) is not the single box (n+1-i, i)");
      ++checked;
    }
  }
  return std::to_string(checked) + " (n, i) pairs exact";
}

// 9. witness succeeds and self-verifies for every valid d at n <= 12;
// d = 1 and out-of-range d are refused
std::string criterion_9() {
  int produced = 0;
  for (int n = 4; n <= 12; ++n) {
    const int d_max = (n - 1) * (n - 3);
    require(analyze(witness(n, 0)).complexity == 0, "witness(n, 0)");
    ++produced;
    for (int d = 2; d <= d_max; ++d) {
      require(analyze(witness(n, d)).complexity == d,
              "witness(" + std::to_string(n) + ", " + std::to_string(d) + ")");
      ++produced;
    }
    for (int bad : {1, -1, d_max + 1}) {
      bool refused = false;
      try {
        witness(n, bad);
      } catch (const std::invalid_argument&) {
        refused = true;
      }
      require(refused, "witness(" + std::to_string(n) + ", " +
                           std::to_string(bad) + ") not refused");
    }
  }
  return std::to_string(produced) + " witnesses verified, refusals exact";
}

// 10. determinism: serial == parallel spectra byte for byte (n = 6, 7) and
// the JSON cache round-trips with witness re-verification
std::string criterion_10() {
  for (int n : {6, 7}) {
    const std::string serial = to_json(spectrum(n, 1)).dump();
    const std::string parallel = to_json(spectrum(n, 4)).dump();
    require(serial == parallel,
            "serial and parallel spectra differ at n = " + std::to_string(n));
  }

  const auto path =
      std::filesystem::temp_directory_path() / "msv_acceptance_cache.json";
  const SpectrumResult s = spectrum(5, 2);
  save_cache(s, path);
  const SpectrumResult loaded = load_cache(5, path);
  require(loaded == s, "cache round-trip changed the spectrum");

  nlohmann::json j = to_json(s);
  j["witnesses"]["2"] = "12345";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  bool rejected = false;
  try {
    load_cache(5, path);
  } catch (const verification_error&) {
    rejected = true;
  }
  std::filesystem::remove(path);
  require(rejected, "tampered witness was not rejected");
  return "byte-identical spectra; cache verified and tamper-proof";
}

struct Criterion {
  int id;
  const char* title;
  std::function<std::string()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "worked example 3412", criterion_1},
    {2, "worked example 54132", criterion_2},
    {3, "essential sets", criterion_3},
    {4, "maximum complexity and unique maximizer, n = 4..8", criterion_4},
    {5, "achieved spectrum and the gap at 1, n <= 8", criterion_5},
    {6, "cone dimension oracle equivalence", criterion_6},
    {7, "antidiagonal composition law", criterion_7},
    {8, "w0 s_i family, n <= 12", criterion_8},
    {9, "witness construction, n <= 12", criterion_9},
    {10, "determinism and cache integrity", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.id != only) continue;
    try {
      const std::string note = c.run();
      std::printf("[PASS] %2d. %s — %s\n", c.id, c.title, note.c_str());
    } catch (const std::exception& e) {
      std::printf("[FAIL] %2d. %s — %s\n", c.id, c.title, e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
