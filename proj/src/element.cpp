#include "qu2/element.hpp"

#include <algorithm>

#include "qu2/errors.hpp"
#include "qu2/word.hpp"

namespace qu2 {

Element::Element(Monomial m, Rational c) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t Element::depth() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.beta.size());
  return d;
}

Element normalize(const Element& e, std::optional<std::size_t> depth) {
  const std::size_t current = e.depth();
  const std::size_t target = depth.value_or(current);
  if (target < current) {
    throw DomainError("normalize: depth " + std::to_string(target) +
                      " is below the longest beta word (" + std::to_string(current) + ")");
  }
  Element out;
  for (const auto& [m, c] : e.terms()) {
    const std::size_t extra = target - m.beta.size();
    if (extra == 0) {
      out.add_term(m, c);
      continue;
    }
    // S_a U^k S_b^* = sum_g S_a U^k S_g S_g^* S_b^*, and U^k S_g = S_g' U^q.
    for (const Word& g : words_of_length(extra)) {
      PushResult pushed = push_u_through(m.k, g);
      out.add_term(Monomial{m.alpha + pushed.word, std::move(pushed.power), m.beta + g}, c);
    }
  }
  return out;
}

Element add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

Element sub(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

Element scale(const Element& a, const Rational& c) {
  Element out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : a.terms()) out.add_term(m, coeff * c);
  return out;
}

namespace {

struct ByAlpha {
  const Monomial* m;
  const Rational* c;
};

}  // namespace

Element mul(const Element& a, const Element& b) {
  // Right factors sorted by alpha so that, for a left term with inner word beta,
  // the matching right terms are those whose alpha is a prefix of beta or
  // extends it. Extensions of beta form the contiguous block [beta, beta + '3').
  std::vector<ByAlpha> right;
  right.reserve(b.size());
  for (const auto& [m, c] : b.terms()) right.push_back({&m, &c});
  std::stable_sort(right.begin(), right.end(), [](const ByAlpha& x, const ByAlpha& y) {
    return x.m->alpha.letters() < y.m->alpha.letters();
  });
  auto lower = [&right](const std::string& key) {
    return std::lower_bound(right.begin(), right.end(), key,
                            [](const ByAlpha& x, const std::string& k) {
                              return x.m->alpha.letters() < k;
                            });
  };

  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    const std::string& beta = ma.beta.letters();
    auto emit = [&](const ByAlpha& r) {
      if (auto prod = mono_mul(ma, *r.m)) out.add_term(*prod, ca * *r.c);
    };
    // alpha a proper prefix of beta
    for (std::size_t len = 0; len < beta.size(); ++len) {
      const std::string key = beta.substr(0, len);
      for (auto it = lower(key); it != right.end() && it->m->alpha.letters() == key; ++it) emit(*it);
    }
    // alpha extends beta (including equality)
    const auto end = lower(beta + '3');
    for (auto it = lower(beta); it != end; ++it) emit(*it);
  }
  return out;
}

Element adjoint(const Element& e) {
  Element out;
  for (const auto& [m, c] : e.terms()) out.add_term(adjoint(m), c);
  return out;
}

bool eq(const Element& a, const Element& b) { return normalize(sub(a, b)).is_zero(); }

Element power(const Element& e, long n) {
  if (n < 0) return power(adjoint(e), -n);
  Element result = Element::identity();
  Element base = e;
  auto m = static_cast<unsigned long>(n);
  while (m > 0) {
    if (m & 1u) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

bool is_unitary(const Element& e) {
  const Element canon = normalize(e);
  if (canon.is_zero()) return false;
  std::vector<Word> alphas;
  std::vector<Word> betas;
  for (const auto& [m, c] : canon.terms()) {
    if (c != 1) return false;
    alphas.push_back(m.alpha);
    betas.push_back(m.beta);
  }
  return is_partition(alphas) && is_partition(betas);
}

bool is_unitary_algebraic(const Element& e) {
  const Element one = Element::identity();
  const Element star = adjoint(e);
  return eq(mul(e, star), one) && eq(mul(star, e), one);
}

Membership membership(const Element& e) {
  Membership flags;
  flags.in_O2 = true;
  flags.in_QT = true;
  bool diagonal = true;
  const Element canon = normalize(e);
  for (const auto& [m, c] : canon.terms()) {
    if (m.k != 0) flags.in_O2 = false;
    if (m.alpha.size() != m.beta.size()) flags.in_QT = false;
    if (m.alpha != m.beta) diagonal = false;
  }
  flags.in_F2 = flags.in_O2 && flags.in_QT;
  flags.in_D2 = flags.in_F2 && diagonal;
  return flags;
}

std::vector<PutnamTerm> putnam_form(const Element& e) {
  if (!is_unitary(e)) throw DomainError("putnam_form: input is not a unitary of W");
  const Element canon = normalize(e);
  std::map<Int, Element> grouped;
  for (const auto& [m, c] : canon.terms()) {
    if (m.alpha.size() != m.beta.size()) {
      throw DomainError("putnam_form: input is not in the Bunce-Deddens subalgebra");
    }
    const std::size_t len = m.alpha.size();
    Int n = encode(m.alpha).offset - encode(m.beta).offset + pow2(len) * m.k;
    grouped[n].add_term(Monomial::projection(m.alpha), 1);
  }
  std::vector<PutnamTerm> out;
  for (auto& [n, p] : grouped) out.push_back({std::move(p), n});
  return out;
}

PutnamCheck check_putnam(const std::vector<PutnamTerm>& form) {
  Element sum;
  Element shifted;
  for (const auto& [p, n] : form) {
    sum = add(sum, p);
    shifted = add(shifted, mul(mul(Element::u_power(-n), p), Element::u_power(n)));
  }
  const Element one = Element::identity();
  return {eq(sum, one), eq(shifted, one)};
}

Element putnam_sum(const std::vector<PutnamTerm>& form) {
  Element out;
  for (const auto& [p, n] : form) out = add(out, mul(p, Element::u_power(n)));
  return out;
}

BdvFactor bd_v_factor(const Element& e) {
  if (!is_unitary(e)) throw DomainError("bd_v_factor: input is not a unitary of W");
  BdvFactor out;
  const Element canon = normalize(e);
  for (const auto& [m, c] : canon.terms()) {
    out.bd.add_term(Monomial{m.alpha, m.k, m.alpha}, 1);
    out.v.add_term(Monomial{m.alpha, 0, m.beta}, 1);
  }
  return out;
}

Int total_charge(const Element& e) {
  if (!is_unitary(e)) throw DomainError("total_charge: input is not a unitary of W");
  Int sum = 0;
  const Element canon = normalize(e);
  for (const auto& [m, c] : canon.terms()) sum += m.k;
  return sum;
}

Element phi(const Element& e) {
  static const Word one("1");
  static const Word two("2");
  Element out;
  for (const auto& [m, c] : e.terms()) {
    out.add_term(Monomial{one + m.alpha, m.k, one + m.beta}, c);
    out.add_term(Monomial{two + m.alpha, m.k, two + m.beta}, c);
  }
  return out;
}

Element phi_power(const Element& e, std::size_t h) {
  Element out = e;
  for (std::size_t i = 0; i < h; ++i) out = phi(out);
  return out;
}

Element flip() {
  Element f;
  f.add_term(Monomial{Word("1"), 0, Word("2")}, 1);
  f.add_term(Monomial{Word("2"), 0, Word("1")}, 1);
  return f;
}

Element big_F() {
  Element F;
  for (const char* ij : {"11", "12", "21", "22"}) {
    const Word w(ij);
    const Word rev(std::string{ij[1], ij[0]});
    F.add_term(Monomial{w, 0, rev}, 1);
  }
  return F;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational mag = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += to_string(m);
    first = false;
  }
  return out;
}

}  // namespace qu2
