#include "msv/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "msv/cells.hpp"

namespace msv {

Permutation Permutation::from_one_line(std::vector<int> word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw std::invalid_argument("permutation word is empty");
  if (n <= 64) {
    uint64_t seen = 0;
    for (int v : word) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("value " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
      const uint64_t bit = uint64_t{1} << (v - 1);
      if (seen & bit) {
        throw std::invalid_argument("repeated value " + std::to_string(v));
      }
      seen |= bit;
    }
  } else {
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : word) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("value " + std::to_string(v) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
      if (seen[static_cast<size_t>(v)]) {
        throw std::invalid_argument("repeated value " + std::to_string(v));
      }
      seen[static_cast<size_t>(v)] = true;
    }
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::longest_element(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(word));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (i < 1 || i > n - 1) {
    throw std::out_of_range("transposition index " + std::to_string(i) +
                            " outside [1, " + std::to_string(n - 1) + "]");
  }
  Permutation s = identity(n);
  std::swap(s.word_[static_cast<size_t>(i - 1)],
            s.word_[static_cast<size_t>(i)]);
  return s;
}

namespace {

int parse_int(std::string_view token) {
  size_t begin = token.find_first_not_of(" \t");
  size_t end = token.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw std::invalid_argument("empty entry in permutation text");
  }
  token = token.substr(begin, end - begin + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("cannot parse permutation entry '" +
                                std::string(token) + "'");
  }
  return value;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos) {
    throw std::invalid_argument("empty permutation text");
  }
  text = text.substr(begin, end - begin + 1);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }

  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t comma = text.find(',', pos);
      const size_t stop = (comma == std::string_view::npos) ? text.size() : comma;
      word.push_back(parse_int(text.substr(pos, stop - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    // Compact word: one digit per value, only meaningful for n < 10.
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw std::invalid_argument("unexpected character '" +
                                    std::string(1, ch) +
                                    "' in permutation text");
      }
      word.push_back(ch - '0');
    }
  }
  return from_one_line(std::move(word));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (word_[static_cast<size_t>(i - 1)] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<size_t>(word_[static_cast<size_t>(i - 1)] - 1)] = i;
  }
  return Permutation(std::move(inv));
}

std::vector<std::pair<int, int>> Permutation::noninversions() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((*this)(i) < (*this)(j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int Permutation::coxeter_length() const {
  int inversions = 0;
  const int n = size();
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((*this)(i) > (*this)(j)) ++inversions;
    }
  }
  return inversions;
}

int Permutation::rank_at(int a, int b) const {
  const int n = size();
  if (a < 1 || a > n || b < 1 || b > n) {
    throw std::out_of_range("rank index (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") outside [1, " +
                            std::to_string(n) + "]^2");
  }
  int count = 0;
  for (int j = 1; j <= b; ++j) {
    if ((*this)(j) >= a) ++count;
  }
  return count;
}

CellSet Permutation::dots() const {
  CellSet out(size());
  for (int j = 1; j <= size(); ++j) out.insert((*this)(j), j);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  if (size() < 10) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("composition of permutations of different n");
  }
  std::vector<int> word(u.word_.size());
  for (int i = 1; i <= u.size(); ++i) word[static_cast<size_t>(i - 1)] = u(v(i));
  return Permutation(std::move(word));
}

}  // namespace msv
