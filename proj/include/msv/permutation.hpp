#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msv {

class CellSet;

// A permutation of [n] in one-line notation w(1), ..., w(n). Immutable after
// construction; safe to share across threads.
class Permutation {
 public:
  // Validates that `word` is a bijection on [n]; rejects empty input,
  // repeated values and values outside [n].
  static Permutation from_one_line(std::vector<int> word);
  static Permutation identity(int n);
  // The longest element w0 = [n, n-1, ..., 1].
  static Permutation longest_element(int n);
  // The adjacent transposition s_i swapping i and i+1, 1 <= i <= n-1.
  static Permutation adjacent_transposition(int n, int i);
  // Accepts comma-separated one-line notation "3,4,1,2" and, for n < 10,
  // the compact word "3412". Optional surrounding brackets are ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const;

  Permutation inverse() const;

  // Pairs (i, j) with i < j and w(i) < w(j), in lexicographic order.
  std::vector<std::pair<int, int>> noninversions() const;

  // Number of inversions.
  int coxeter_length() const;

  // Rank of the submatrix of the permutation matrix on rows a..n, cols 1..b:
  // the number of columns j <= b with w(j) >= a.
  int rank_at(int a, int b) const;

  // The dot cells {(w(j), j) : j in [n]}.
  CellSet dots() const;

  // Compact word for n < 10, comma-separated otherwise.
  std::string to_string() const;

  // Composition convention: (u * v)(i) = u(v(i)).
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

}  // namespace msv
