#include "qu2/canrep.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "qu2/errors.hpp"
#include "qu2/kernels.hpp"

namespace qu2 {

namespace {

bool is_power_of_two(const Int& n) { return n > 0 && (n & (n - 1)) == 0; }

// S_1^* e_j = e_{(j-1)/2} for odd j, S_2^* e_j = e_{j/2} for even j.
std::optional<Int> co_isometry_letter(char letter, const Int& j) {
  const bool odd = boost::multiprecision::bit_test(j, 0);
  if (letter == '1') {
    if (!odd) return std::nullopt;
    return Int((j - 1) / 2);
  }
  if (odd) return std::nullopt;
  return Int(j / 2);
}

Int isometry_letter(char letter, const Int& j) { return letter == '1' ? Int(2 * j + 1) : Int(2 * j); }

}  // namespace

DyadicAngle::DyadicAngle(const Rational& value) {
  const Int den = boost::multiprecision::denominator(value);
  if (!is_power_of_two(den)) {
    throw DomainError("phase " + to_string(value) + " is not a dyadic fraction");
  }
  const Int num = boost::multiprecision::numerator(value);
  Int r = num % den;
  if (r < 0) r += den;
  value_ = Rational(r, den);
}

DyadicAngle DyadicAngle::parse(std::string_view text) {
  auto q = parse_rational(text);
  if (!q) throw UsageError("bad phase '" + std::string(text) + "'", 0);
  try {
    return DyadicAngle(*q);
  } catch (const DomainError& e) {
    throw UsageError(e.what(), 0);
  }
}

std::string to_string(const DyadicAngle& a) { return to_string(a.value()); }

std::optional<Int> apply_monomial(const Monomial& m, const Int& n) {
  Int j = n;
  // S_beta^* = S_{beta_last}^* ... S_{beta_first}^*, so beta_first acts first
  for (std::size_t i = 0; i < m.beta.size(); ++i) {
    auto next = co_isometry_letter(m.beta[i], j);
    if (!next) return std::nullopt;
    j = std::move(*next);
  }
  j += m.k;
  for (std::size_t i = m.alpha.size(); i-- > 0;) j = isometry_letter(m.alpha[i], j);
  return j;
}

std::vector<std::pair<Rational, Int>> apply_basis(const Element& e, const Int& n) {
  std::map<Int, Rational> image;
  for (const auto& [m, c] : e.terms()) {
    if (auto j = apply_monomial(m, n)) image[*j] += c;
  }
  std::vector<std::pair<Rational, Int>> out;
  for (auto& [j, c] : image) {
    if (c != 0) out.emplace_back(c, j);
  }
  return out;
}

bool residue_class_agrees(const Element& e1, const Element& e2, std::size_t depth,
                          std::uint64_t residue) {
  const Int step = pow2(depth);
  const Int r(residue);
  // On this class every monomial is an affine map m -> a m + b of n = r + step*m
  // with a >= 1, and b is its value at r. Two distinct maps agree at most at
  // m = (d - b)/(a - c), so any m > 2 max|b| separates all of them.
  Int bound = 0;
  for (const Element* e : {&e1, &e2}) {
    for (const auto& [m, c] : e->terms()) {
      if (auto j = apply_monomial(m, r)) bound = std::max(bound, Int(abs(*j)));
    }
  }
  const Int far = r + step * (2 * bound + 1);
  for (const Int& n : {Int(r - step), r, Int(r + step), far}) {
    if (apply_basis(e1, n) != apply_basis(e2, n)) return false;
  }
  return true;
}

bool semantic_eq(const Element& e1, const Element& e2) {
  return oracle_sweep(e1, e2, std::max(e1.depth(), e2.depth()));
}

std::vector<GeneratorToken> parse_generator_word(std::string_view text) {
  std::vector<GeneratorToken> out;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at, const std::string& what) {
    throw UsageError("generator word error at position " + std::to_string(at) + ": " + what, at);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(start, end - start);
    pos = end;
    GeneratorToken t{Generator::U, std::nullopt};
    if (tok == "U") {
      t.g = Generator::U;
    } else if (tok == "U*") {
      t.g = Generator::Ustar;
    } else if (tok == "S1") {
      t.g = Generator::S1;
    } else if (tok == "S1*") {
      t.g = Generator::S1star;
    } else if (tok == "S2") {
      t.g = Generator::S2;
    } else if (tok == "S2*") {
      t.g = Generator::S2star;
    } else if (tok.starts_with("Uz")) {
      std::string_view rest = tok.substr(2);
      t.g = Generator::Uz;
      if (rest.starts_with("*")) {
        t.g = Generator::Uzstar;
        rest.remove_prefix(1);
      }
      if (!rest.empty()) {
        if (rest.front() != '[' || rest.back() != ']') fail(start, "bad token '" + std::string(tok) + "'");
        try {
          t.angle = DyadicAngle::parse(rest.substr(1, rest.size() - 2));
        } catch (const UsageError&) {
          fail(start, "bad phase in '" + std::string(tok) + "'");
        }
      }
    } else {
      fail(start, "unknown generator '" + std::string(tok) + "'");
    }
    out.push_back(t);
  }
  return out;
}

std::optional<BasisVector> phase_apply(const DyadicAngle& z, const std::vector<GeneratorToken>& word,
                                       const Int& k) {
  BasisVector v{DyadicAngle(), k};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->g) {
      case Generator::U:
        v.index += 1;
        break;
      case Generator::Ustar:
        v.index -= 1;
        break;
      case Generator::S1:
        v.index = isometry_letter('1', v.index);
        break;
      case Generator::S2:
        v.index = isometry_letter('2', v.index);
        break;
      case Generator::S1star:
      case Generator::S2star: {
        auto j = co_isometry_letter(it->g == Generator::S1star ? '1' : '2', v.index);
        if (!j) return std::nullopt;
        v.index = std::move(*j);
        break;
      }
      case Generator::Uz:
        v.phase = v.phase + v.index * it->angle.value_or(z);
        break;
      case Generator::Uzstar:
        v.phase = v.phase - v.index * it->angle.value_or(z);
        break;
    }
  }
  return v;
}

void validate(const DecoratedPermutative& v) {
  std::vector<Word> alphas, betas;
  for (const auto& [phase, m] : v.terms) {
    alphas.push_back(m.alpha);
    betas.push_back(m.beta);
  }
  if (!is_partition(alphas) || !is_partition(betas)) {
    throw DomainError("decorated permutative: alpha and beta words must be partitions");
  }
}

std::optional<BasisVector> apply_basis(const DecoratedPermutative& v, const Int& n) {
  for (const auto& [phase, m] : v.terms) {
    if (auto j = apply_monomial(m, n)) return BasisVector{phase, std::move(*j)};
  }
  return std::nullopt;
}

DpSplit dp_split(const DecoratedPermutative& v) {
  validate(v);
  DpSplit out;
  std::map<Word, DyadicAngle> leaves;
  for (const auto& [phase, m] : v.terms) {
    leaves[m.alpha] = phase;
    out.P.add_term(m, 1);
  }
  // merge sibling leaves carrying the same phase, deepest first
  for (bool merged = true; merged;) {
    merged = false;
    for (auto it = leaves.begin(); it != leaves.end(); ++it) {
      const Word& w = it->first;
      if (w.empty() || w[w.size() - 1] != '1') continue;
      const Word parent = w.prefix(w.size() - 1);
      auto sib = leaves.find(parent.child('2'));
      if (sib == leaves.end() || sib->second != it->second) continue;
      const DyadicAngle phase = it->second;
      leaves.erase(sib);
      leaves.erase(it);
      leaves.emplace(parent, phase);
      merged = true;
      break;
    }
  }
  out.d.assign(leaves.begin(), leaves.end());
  return out;
}

DyadicAngle phase_at(const std::vector<std::pair<Word, DyadicAngle>>& d, const Int& n) {
  for (const auto& [w, phase] : d) {
    if (apply_monomial(Monomial::co_isometry(w), n)) return phase;
  }
  throw DomainError("phase table does not cover index " + n.str());
}

bool dp_recomposes(const DecoratedPermutative& v, const DpSplit& split, const Int& lo, const Int& hi) {
  for (Int n = lo; n <= hi; ++n) {
    const auto expected = apply_basis(v, n);
    const auto image = apply_basis(split.P, n);
    if (!expected || image.size() != 1 || image[0].first != 1) return false;
    const BasisVector got{phase_at(split.d, image[0].second), image[0].second};
    if (!(got == *expected)) return false;
  }
  return true;
}

}  // namespace qu2
