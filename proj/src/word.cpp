#include "qu2/word.hpp"

#include <algorithm>

#include "qu2/errors.hpp"

namespace qu2 {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != '1' && letters_[i] != '2') {
      throw UsageError("word letters must be 1 or 2", i);
    }
  }
}

Word Word::parse(std::string_view text) {
  if (text == "e") return Word();
  if (text.empty()) throw UsageError("empty word must be written as 'e'", 0);
  return Word(std::string(text));
}

Word Word::child(char letter) const {
  std::string s = letters_;
  s.push_back(letter);
  return Word(std::move(s), Trusted{});
}

bool Word::is_prefix_of(const Word& other) const noexcept {
  return letters_.size() <= other.letters_.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

Encoded encode(const Word& w) {
  Int offset = 0;
  for (std::size_t j = w.size(); j-- > 0;) {
    offset <<= 1;
    if (w[j] == '1') offset += 1;
  }
  return {w.size(), offset};
}

Word decode(std::size_t length, const Int& offset) {
  if (offset < 0 || offset >= pow2(length)) {
    throw DomainError("decode: offset " + offset.str() + " out of range for length " +
                      std::to_string(length));
  }
  std::string letters(length, '2');
  Int rest = offset;
  for (std::size_t j = 0; j < length; ++j) {
    if (boost::multiprecision::bit_test(rest, 0)) letters[j] = '1';
    rest >>= 1;
  }
  return Word(std::move(letters));
}

bool is_partition(std::span<const Word> words) {
  if (words.empty()) return false;
  std::vector<Word> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  // In sorted order a word that is a prefix of another is a prefix of its successor.
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].is_prefix_of(sorted[i + 1])) return false;
  }
  std::size_t longest = 0;
  for (const auto& w : sorted) longest = std::max(longest, w.size());
  Int kraft = 0;
  for (const auto& w : sorted) kraft += pow2(longest - w.size());
  return kraft == pow2(longest);
}

std::vector<Word> words_of_length(std::size_t n) {
  if (n >= 63) throw CapacityError("words_of_length: length too large");
  std::vector<Word> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(lex_unrank(n, r));
  return out;
}

std::uint64_t lex_rank(const Word& w) {
  if (w.size() >= 64) throw CapacityError("lex_rank: word too long");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) r = (r << 1) | (w[i] == '2' ? 1u : 0u);
  return r;
}

Word lex_unrank(std::size_t length, std::uint64_t rank) {
  std::string letters(length, '1');
  for (std::size_t i = 0; i < length; ++i) {
    if ((rank >> (length - 1 - i)) & 1u) letters[i] = '2';
  }
  return Word(std::move(letters));
}

}  // namespace qu2
