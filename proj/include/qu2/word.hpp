#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qu2/numeric.hpp"

namespace qu2 {

/// A finite word over {1,2}, read left to right as outermost to innermost
/// isometry factor: Word("21") stands for S_2 S_1.
///
/// Letters are stored as the characters '1' and '2', so the natural string
/// order is the lexicographic order with 1 < 2 and a proper prefix first.
class Word {
 public:
  Word() = default;

  /// Throws UsageError unless every character is '1' or '2'.
  explicit Word(std::string letters);

  /// Text syntax: digit string such as "112", or "e" for the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  Word child(char letter) const;
  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n), Trusted{}); }
  Word suffix_from(std::size_t n) const { return Word(letters_.substr(n), Trusted{}); }
  bool is_prefix_of(const Word& other) const noexcept;

  /// "e" for the empty word.
  std::string str() const { return empty() ? std::string("e") : letters_; }

  friend Word operator+(const Word& a, const Word& b) {
    return Word(a.letters_ + b.letters_, Trusted{});
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

/// S_w maps e_m to e_{2^length * m + offset}.
struct Encoded {
  std::size_t length;
  Int offset;
};

/// offset = sum_j c(w_j) 2^{j-1}, c(1) = 1, c(2) = 0, j = 1 the leftmost letter.
/// The convention comes from S_1 = U S_2 and S_2 e_k = e_{2k}.
Encoded encode(const Word& w);

/// Inverse of encode. Throws DomainError unless 0 <= offset < 2^length.
Word decode(std::size_t length, const Int& offset);

/// Prefix-free and sum of 2^{-|w|} equal to 1. Repeated words fail.
bool is_partition(std::span<const Word> words);

/// All words of length n in lexicographic order.
std::vector<Word> words_of_length(std::size_t n);

/// Position of w among the words of its length in lexicographic order.
std::uint64_t lex_rank(const Word& w);
Word lex_unrank(std::size_t length, std::uint64_t rank);

}  // namespace qu2

template <>
struct std::hash<qu2::Word> {
  std::size_t operator()(const qu2::Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
