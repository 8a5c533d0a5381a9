#include "qu2/parse.hpp"

#include <cctype>
#include <string>

#include "qu2/errors.hpp"

namespace qu2 {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Element parse() {
    Element e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("parse error at position " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_with(std::string_view s) {
    skip();
    return text_.substr(pos_).starts_with(s);
  }

  Element expr() {
    Element sum;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      Element t = term();
      sum = negative ? sub(sum, t) : add(sum, t);
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return sum;
      }
    }
  }

  bool factor_starts() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'U' || c == 'S' ||
           c == 'P' || c == 'f' || c == 'F' || starts_with("phi");
  }

  Element term() {
    if (!factor_starts()) fail("expected a factor");
    Element product = factor();
    while (factor_starts()) product = mul(product, factor());
    return product;
  }

  Element factor() {
    bool scalar = false;
    Element e = atom(scalar);
    for (;;) {
      if (scalar) {
        // "3/2*" is a coefficient followed by multiplication
        accept('*');
        return e;
      }
      if (accept('*')) {
        e = adjoint(e);
      } else if (accept('^')) {
        const long n = integer();
        e = power(e, n);
      } else {
        return e;
      }
    }
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto value = parse_int(text_.substr(start, pos_ - start));
    if (!value) {
      pos_ = start;
      fail("expected an integer");
    }
    if (!fits_int64(*value)) {
      pos_ = start;
      fail("integer out of range");
    }
    return static_cast<long>(*value);
  }

  Word bracket_word() {
    expect('[');
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    std::string_view body = text_.substr(start, pos_ - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    Word w;
    try {
      w = Word::parse(body);
    } catch (const UsageError& err) {
      pos_ = start + (err.position() == UsageError::npos ? 0 : err.position());
      fail("bad word '" + std::string(body) + "'");
    }
    expect(']');
    return w;
  }

  Element atom(bool& scalar) {
    skip();
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      auto q = parse_rational(text_.substr(start, pos_ - start));
      if (!q) {
        pos_ = start;
        fail("bad number");
      }
      scalar = true;
      return scale(Element::identity(), *q);
    }
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      expect(')');
      return inner;
    }
    if (starts_with("phi")) {
      pos_ += 3;
      std::size_t h = 1;
      if (accept('^')) {
        const long n = integer();
        if (n < 0) fail("phi power must be non-negative");
        h = static_cast<std::size_t>(n);
      }
      expect('(');
      Element inner = expr();
      expect(')');
      return phi_power(inner, h);
    }
    ++pos_;
    switch (c) {
      case 'U':
        return Element::u_power(1);
      case 'f':
        return flip();
      case 'F':
        return big_F();
      case 'P':
        return Element::projection(bracket_word());
      case 'S':
        if (pos_ < text_.size() && (text_[pos_] == '1' || text_[pos_] == '2')) {
          return Element::isometry(Word(std::string(1, text_[pos_++])));
        }
        if (pos_ < text_.size() && text_[pos_] == '*' && peek_bracket(pos_ + 1)) {
          ++pos_;
          return Element::co_isometry(bracket_word());
        }
        if (peek('[')) return Element::isometry(bracket_word());
        fail("expected S1, S2, S[w] or S*[w]");
      default:
        --pos_;
        fail("unknown symbol");
    }
  }

  bool peek_bracket(std::size_t at) const {
    while (at < text_.size() && std::isspace(static_cast<unsigned char>(text_[at]))) ++at;
    return at < text_.size() && text_[at] == '[';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) { return Parser(text).parse(); }

}  // namespace qu2
