#include "msv/constructions.hpp"

#include <stdexcept>
#include <string>

#include "msv/complexity.hpp"
#include "msv/diagrams.hpp"
#include "msv/errors.hpp"

namespace msv {

std::pair<Permutation, int> w0_si(int n, int i) {
  if (n < 2) throw std::invalid_argument("w0_si needs n >= 2");
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("transposition index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n - 1) + "]");
  }
  Permutation w = Permutation::longest_element(n) *
                  Permutation::adjacent_transposition(n, i);
  const int predicted = (i >= 2) ? i * (i - 2) : 0;
  return {std::move(w), predicted};
}

Permutation compose_antidiagonal(const Permutation& alpha,
                                 const Permutation& beta, int k) {
  const int n = alpha.size();
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("block size k must be in [1, n-1]");
  }
  const int m = n - k;
  if (beta.size() != m) {
    throw std::invalid_argument("size mismatch: beta must lie in S_" +
                                std::to_string(m) + ", got S_" +
                                std::to_string(beta.size()));
  }
  const CellSet d_alpha = opposite_rothe(alpha);
  if (d_alpha.empty()) {
    throw std::invalid_argument("D°(alpha) is empty");
  }
  for (Cell c : d_alpha.cells()) {
    if (c.row > k || c.col < n - k + 1) {
      throw std::invalid_argument(
          "D°(alpha) is not confined to the northeastern " +
          std::to_string(k) + "x" + std::to_string(k) + " block");
    }
  }
  // The confinement forces the antidiagonal head alpha(i) = n+1-i, i <= m.
  for (int i = 1; i <= m; ++i) {
    if (alpha(i) != n + 1 - i) {
      throw std::logic_error("confined D°(alpha) without antidiagonal head");
    }
  }

  std::vector<int> word;
  word.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= m; ++i) word.push_back(beta(i) + k);
  for (int i = m + 1; i <= n; ++i) word.push_back(alpha(i));
  return Permutation::from_one_line(std::move(word));
}

Permutation permutation_with_noninversions(int m, int t) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int max_t = m * (m - 1) / 2;
  if (t < 0 || t > max_t) {
    throw std::out_of_range("noninversion count " + std::to_string(t) +
                            " outside [0, " + std::to_string(max_t) + "]");
  }
  std::vector<int> word(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) word[static_cast<size_t>(i)] = m - i;
  // Each swap of the first adjacent descent adds exactly one noninversion.
  for (int step = 0; step < t; ++step) {
    for (int p = 0; p + 1 < m; ++p) {
      if (word[static_cast<size_t>(p)] > word[static_cast<size_t>(p + 1)]) {
        std::swap(word[static_cast<size_t>(p)],
                  word[static_cast<size_t>(p + 1)]);
        break;
      }
    }
  }
  return Permutation::from_one_line(std::move(word));
}

namespace {

// The complexity-4 witness [(n-5)+5, (n-5)+4, (n-5)+1, (n-5)+3, (n-5)+2,
// n-5, n-6, ..., 1], a shifted copy of 54132.
Permutation shifted_54132(int n) {
  const int base = n - 5;
  std::vector<int> word{base + 5, base + 4, base + 1, base + 3, base + 2};
  for (int v = base; v >= 1; --v) word.push_back(v);
  return Permutation::from_one_line(std::move(word));
}

}  // namespace

Permutation witness(int n, int d) {
  if (n < 4) {
    throw std::invalid_argument("witness construction needs n >= 4");
  }
  const int d_max = (n - 1) * (n - 3);
  if (d == 1) {
    throw std::invalid_argument(
        "no Y_w has complexity 1; achievable values are {0} ∪ {2, ..., " +
        std::to_string(d_max) + "}");
  }
  if (d < 0 || d > d_max) {
    throw std::invalid_argument(
        "complexity " + std::to_string(d) + " is not achievable in S_" +
        std::to_string(n) + "; achievable values are {0} ∪ {2, ..., " +
        std::to_string(d_max) + "}");
  }

  Permutation result = [&]() -> Permutation {
    if (d == 0) return Permutation::identity(n);
    if (d == 4 && n >= 5) return shifted_54132(n);
    // Smallest i whose reachable interval [ (i+1)(i-2)/2, i(i-2) ]
    // brackets d; push it down with a tail permutation of the right
    // noninversion count.
    for (int i = 3; i <= n - 1; ++i) {
      if ((i + 1) * (i - 2) / 2 <= d && d <= i * (i - 2)) {
        Permutation alpha = w0_si(n, i).first;
        Permutation beta =
            permutation_with_noninversions(i - 1, i * (i - 2) - d);
        return compose_antidiagonal(alpha, beta, n + 1 - i);
      }
    }
    throw std::logic_error("no bracketing index for d = " + std::to_string(d));
  }();

  const int found = analyze(result).complexity;
  if (found != d) {
    throw verification_error("witness " + result.to_string() +
                             " analyzes to complexity " +
                             std::to_string(found) + ", wanted " +
                             std::to_string(d));
  }
  return result;
}

}  // namespace msv
