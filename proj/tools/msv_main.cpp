// msv: diagrams, edge cones and torus-action complexity for the varieties
// attached to matrix Schubert varieties.
//
// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
// 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msv/complexity.hpp"
#include "msv/constructions.hpp"
#include "msv/diagrams.hpp"
#include "msv/errors.hpp"
#include "msv/ideal.hpp"
#include "msv/render.hpp"
#include "msv/serialize.hpp"
#include "msv/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitLimit = 3;

int default_workers() {
  if (const char* env = std::getenv("MSV_WORKERS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1 && parsed <= 64) {
      return static_cast<int>(parsed);
    }
    std::cerr << "warning: ignoring invalid MSV_WORKERS='" << env << "'\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

void print_report_human(const msv::ComplexityReport& r) {
  std::cout << "permutation      " << r.w.to_string() << "  (n = " << r.n
            << ")\n"
            << "|D°(w)|          " << r.card_opposite_rothe << "\n"
            << "|dom(w)|         " << r.card_dominant << "\n"
            << "|sw(w)|          " << r.card_southwest << "\n"
            << "|L(w)|           " << r.card_l << "\n"
            << "|L'(w)|          " << r.card_l_prime << "\n"
            << "|V(G(w))|        " << r.vertex_count << "\n"
            << "|comp(G(w))|     " << r.component_count << "\n"
            << "dim σ_w          " << r.cone_dim << "\n"
            << "dim MSV_w        " << r.dim_msv << "\n"
            << "dim Y_w          " << r.dim_y << "\n"
            << "length ℓ(w)      " << r.length << "\n"
            << "complexity d_w   " << r.complexity << "\n";
}

struct RangeSpec {
  int lo = 0;
  int hi = 0;
};

// "4..8" or a single "5"
RangeSpec parse_range(const std::string& text) {
  RangeSpec out;
  const size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      out.lo = out.hi = std::stoi(text);
    } else {
      out.lo = std::stoi(text.substr(0, dots));
      out.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "cannot parse range '" + text + "'");
  }
  if (out.lo > out.hi) {
    throw CLI::ValidationError("range", "empty range '" + text + "'");
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{
      "diagrams, edge cones and torus-action complexity of the varieties "
      "Y_w attached to matrix Schubert varieties"};
  app.require_subcommand(1);

  std::string format = "human";
  const std::vector<std::string> formats{"human", "json", "csv"};

  // ---- compute ----
  auto* compute = app.add_subcommand(
      "compute", "full complexity report for one permutation");
  std::string compute_perm;
  bool compute_check_rank = false;
  compute->add_option("permutation", compute_perm,
                      "one-line notation, e.g. 3412 or 3,4,1,2")
      ->required();
  compute->add_option("--format", format, "human, json or csv")
      ->check(CLI::IsMember(formats));
  compute->add_flag("--check-rank", compute_check_rank,
                    "also run the exact integer-rank cone oracle");

  // ---- render ----
  auto* render_cmd =
      app.add_subcommand("render", "draw the grid as ascii or tikz");
  std::string render_perm;
  std::string render_target = "ascii";
  std::string render_layers = "dots,opposite_rothe";
  bool render_labels = false;
  render_cmd->add_option("permutation", render_perm)->required();
  render_cmd->add_option("--target", render_target, "ascii or tikz")
      ->check(CLI::IsMember({"ascii", "tikz"}));
  render_cmd->add_option(
      "--layers", render_layers,
      "comma list of dots,lasers,opposite_rothe,essential,dominant,"
      "southwest,l,l_prime,graph");
  render_cmd->add_flag("--labels", render_labels, "label cells with (row,col)");

  // ---- ideal ----
  auto* ideal = app.add_subcommand(
      "ideal", "determinantal generators from the essential set");
  std::string ideal_perm;
  bool ideal_y = false;
  uint64_t ideal_cap = msv::kDefaultMinorCap;
  ideal->add_option("permutation", ideal_perm)->required();
  ideal->add_flag("--y", ideal_y,
                  "the Y_w form: dominant entries forced to zero");
  ideal->add_option("--cap", ideal_cap, "refuse above this many descriptors");
  ideal->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

  // ---- spectrum ----
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "achieved complexities over S_n with witnesses");
  int spectrum_n = 0;
  int sample_count = 0;
  uint64_t sample_seed = 0;
  bool exhaustive = false;
  int max_n = msv::kDefaultMaxExhaustiveN;
  std::string cache_path;
  std::string dump_reports;
  spectrum_cmd->add_option("n", spectrum_n, "grid size")->required();
  auto* exhaustive_flag =
      spectrum_cmd->add_flag("--exhaustive", exhaustive,
                             "scan all of S_n (the default when n is small)");
  spectrum_cmd
      ->add_option("--sample", sample_count,
                   "sample this many random permutations instead")
      ->excludes(exhaustive_flag);
  spectrum_cmd->add_option("--seed", sample_seed, "sampling seed");
  spectrum_cmd->add_option("--cache", cache_path,
                           "write the spectrum JSON cache here");
  spectrum_cmd->add_option("--max-n", max_n, "raise the exhaustive limit");
  spectrum_cmd->add_option("--dump-reports", dump_reports,
                           "write one CSV report row per permutation");
  spectrum_cmd->add_option("--format", format)->check(CLI::IsMember(formats));

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand(
      "verify", "check a classification statement over a range of n");
  std::string theorem_text;
  std::string range_text;
  verify_cmd
      ->add_option("theorem", theorem_text, "max, unique, spectrum or no-one")
      ->required();
  verify_cmd->add_option("range", range_text, "e.g. 4..8 or 5")->required();
  verify_cmd->add_option("--max-n", max_n, "raise the exhaustive limit");
  verify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"human", "json"}));

  // ---- witness ----
  auto* witness_cmd = app.add_subcommand(
      "witness", "construct a permutation of prescribed complexity");
  int witness_n = 0;
  int witness_d = 0;
  witness_cmd->add_option("n", witness_n)->required();
  witness_cmd->add_option("d", witness_d)->required();

  // ---- compose ----
  auto* compose_cmd = app.add_subcommand(
      "compose", "antidiagonal composition of alpha with beta");
  std::string compose_alpha, compose_beta;
  int compose_k = 0;
  compose_cmd->add_option("alpha", compose_alpha)->required();
  compose_cmd->add_option("beta", compose_beta)->required();
  compose_cmd->add_option("k", compose_k, "northeastern block size")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const int workers = default_workers();

  if (compute->parsed()) {
    const msv::Permutation w = msv::Permutation::parse(compute_perm);
    const msv::ComplexityReport r = msv::analyze(w, compute_check_rank);
    if (format == "json") {
      std::cout << msv::to_json(r).dump(2) << "\n";
    } else if (format == "csv") {
      std::cout << msv::report_csv_header() << "\n"
                << msv::report_csv_row(r) << "\n";
    } else {
      print_report_human(r);
    }
    return kExitOk;
  }

  if (render_cmd->parsed()) {
    msv::RenderSpec spec;
    spec.target = (render_target == "tikz") ? msv::RenderTarget::tikz
                                            : msv::RenderTarget::ascii;
    spec.cell_labels = render_labels;
    std::stringstream layers(render_layers);
    std::string token;
    while (std::getline(layers, token, ',')) {
      if (token.empty()) continue;
      const auto layer = msv::layer_from_name(token);
      if (!layer) {
        std::cerr << "error: unknown layer '" << token << "'\n";
        return kExitUsage;
      }
      spec.show.push_back(*layer);
    }
    std::cout << msv::render(msv::Permutation::parse(render_perm), spec);
    return kExitOk;
  }

  if (ideal->parsed()) {
    const msv::Permutation w = msv::Permutation::parse(ideal_perm);
    if (format == "json") {
      nlohmann::json out;
      out["permutation"] = w.to_string();
      out["rank_conditions"] = nlohmann::json::array();
      for (const msv::RankCondition& rc : msv::rank_conditions(w)) {
        out["rank_conditions"].push_back(msv::to_json(rc));
      }
      out["minors"] = nlohmann::json::array();
      msv::for_each_minor(w, ideal_y, ideal_cap,
                          [&out](const msv::MinorDescriptor& m) {
                            out["minors"].push_back(msv::to_json(m));
                          });
      std::cout << out.dump(2) << "\n";
    } else {
      for (const msv::RankCondition& rc : msv::rank_conditions(w)) {
        std::cout << "rk(" << rc.cell.row << "," << rc.cell.col
                  << ") <= " << rc.bound << "\n";
      }
      msv::for_each_minor(w, ideal_y, ideal_cap,
                          [](const msv::MinorDescriptor& m) {
                            std::cout << msv::to_string(m) << "\n";
                          });
    }
    return kExitOk;
  }

  if (spectrum_cmd->parsed()) {
    if (sample_count > 0) {
      if (!cache_path.empty()) {
        std::cerr << "error: --cache needs an exhaustive spectrum\n";
        return kExitUsage;
      }
      std::ofstream dump;
      if (!dump_reports.empty()) {
        dump.open(dump_reports);
        dump << msv::report_csv_header() << "\n";
      }
      std::map<int, msv::Permutation> seen;
      msv::sample_reports(spectrum_n, sample_count, sample_seed,
                          [&](const msv::ComplexityReport& r) {
                            if (dump.is_open()) {
                              dump << msv::report_csv_row(r) << "\n";
                            }
                            auto it = seen.find(r.complexity);
                            if (it == seen.end() || r.w < it->second) {
                              seen.insert_or_assign(r.complexity, r.w);
                            }
                          });
      if (format == "json") {
        nlohmann::json out{{"n", spectrum_n},
                           {"sampled", sample_count},
                           {"seed", sample_seed}};
        out["observed"] = nlohmann::json::object();
        for (const auto& [d, w] : seen) {
          out["observed"][std::to_string(d)] = w.to_string();
        }
        std::cout << out.dump(2) << "\n";
      } else if (format == "csv") {
        std::cout << "complexity,witness\n";
        for (const auto& [d, w] : seen) {
          std::cout << d << ",\"" << w.to_string() << "\"\n";
        }
      } else {
        std::cout << "observed complexities for n = " << spectrum_n << " ("
                  << sample_count << " samples, seed " << sample_seed
                  << "; not exhaustive)\n  d  example\n";
        for (const auto& [d, w] : seen) {
          std::cout << std::setw(3) << d << "  " << w.to_string() << "\n";
        }
      }
      return kExitOk;
    }

    const msv::SpectrumResult s = msv::spectrum(spectrum_n, workers, max_n);
    if (!dump_reports.empty()) {
      std::ofstream dump(dump_reports);
      dump << msv::report_csv_header() << "\n";
      msv::enumerate_reports(
          spectrum_n,
          [&dump](const msv::ComplexityReport& r) {
            dump << msv::report_csv_row(r) << "\n";
          },
          max_n);
    }
    if (!cache_path.empty()) msv::save_cache(s, cache_path);
    if (format == "json") {
      std::cout << msv::to_json(s).dump(2) << "\n";
    } else if (format == "csv") {
      std::cout << "complexity,witness\n";
      for (const auto& [d, w] : s.witnesses) {
        std::cout << d << ",\"" << w.to_string() << "\"\n";
      }
    } else {
      std::cout << "spectrum for n = " << spectrum_n << " (exhaustive over "
                << s.total_enumerated << " permutations)\n  d  witness\n";
      for (const auto& [d, w] : s.witnesses) {
        std::cout << std::setw(3) << d << "  " << w.to_string() << "\n";
      }
      std::cout << "max complexity " << s.max_complexity << ", maximizers:";
      for (const msv::Permutation& m : s.maximizers) {
        std::cout << " " << m.to_string();
      }
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    const auto theorem = msv::theorem_from_name(theorem_text);
    if (!theorem) {
      std::cerr << "error: unknown theorem '" << theorem_text
                << "' (use max, unique, spectrum or no-one)\n";
      return kExitUsage;
    }
    const RangeSpec range = parse_range(range_text);
    bool all_passed = true;
    nlohmann::json lines = nlohmann::json::array();
    for (int n = range.lo; n <= range.hi; ++n) {
      const msv::VerificationOutcome outcome =
          msv::verify(*theorem, n, workers, max_n);
      all_passed = all_passed && outcome.passed;
      if (format == "json") {
        lines.push_back(msv::to_json(outcome));
      } else {
        std::cout << theorem_text << " n=" << n << ": "
                  << (outcome.passed ? "PASS" : "FAIL") << "  " << outcome.note;
        if (outcome.counterexample) {
          std::cout << "  counterexample " << outcome.counterexample->to_string();
        }
        std::cout << "\n";
      }
    }
    if (format == "json") std::cout << lines.dump(2) << "\n";
    return all_passed ? kExitOk : kExitVerification;
  }

  if (witness_cmd->parsed()) {
    const msv::Permutation w = msv::witness(witness_n, witness_d);
    std::cout << w.to_string() << ", verified d="
              << msv::analyze(w).complexity << "\n";
    return kExitOk;
  }

  if (compose_cmd->parsed()) {
    const msv::Permutation alpha = msv::Permutation::parse(compose_alpha);
    const msv::Permutation beta = msv::Permutation::parse(compose_beta);
    const msv::Permutation w =
        msv::compose_antidiagonal(alpha, beta, compose_k);
    const int d_alpha = msv::analyze(alpha).complexity;
    const int drop = msv::opposite_rothe(beta).size();
    const int d_w = msv::analyze(w).complexity;
    std::cout << w.to_string() << ", complexity " << d_w << " (= d_alpha "
              << d_alpha << " - |D°(beta)| " << drop << ")\n";
    if (d_w != d_alpha - drop) {
      std::cerr << "error: composed complexity disagrees with the predicted "
                   "drop\n";
      return kExitVerification;
    }
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const msv::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const msv::verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
