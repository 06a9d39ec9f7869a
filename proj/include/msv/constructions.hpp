#pragma once

#include <utility>

#include "msv/permutation.hpp"

namespace msv {

// w0 * s_i together with its predicted complexity: i(i-2) for i >= 2, else 0
// (for i = 1 the single D° box is dominant and Y_w is a point).
// D°(w0 s_i) = {(n+1-i, i)}.
std::pair<Permutation, int> w0_si(int n, int i);

// The antidiagonal composition w = [β₁+k, ..., β_m+k, α_{m+1}, ..., α_n]
// for α in S_n with nonempty D°(α) confined to the northeastern k x k block
// and β in S_m, m = n - k. The composed variety has complexity
// d_α - |D°(β)|.
Permutation compose_antidiagonal(const Permutation& alpha,
                                 const Permutation& beta, int k);

// β in S_m with exactly t noninversions: starting from w0, greedily applies
// the first adjacent swap that adds one noninversion until t is reached.
Permutation permutation_with_noninversions(int m, int t);

// A permutation in S_n whose variety has complexity exactly d, for
// d in {0} ∪ {2, ..., (n-1)(n-3)} and n >= 4. Self-verifies through the
// analyze pipeline before returning; rejects d = 1 (no such variety exists)
// and out-of-range d.
Permutation witness(int n, int d);

}  // namespace msv
