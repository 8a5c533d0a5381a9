#pragma once

// Random generators shared by the property tests and the acceptance gate.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qu2/element.hpp"
#include "qu2/kernels.hpp"
#include "qu2/wgroup.hpp"

namespace qu2::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, std::size_t max_len) {
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(uniform(rng, 0, 1) ? '2' : '1');
  return Word(s);
}

inline Monomial random_monomial(Rng& rng, std::size_t max_len, long max_charge) {
  return {random_word(rng, max_len), Int(uniform(rng, -max_charge, max_charge)), random_word(rng, max_len)};
}

inline Rational random_coeff(Rng& rng) {
  static const long nums[] = {1, 1, 1, -1, -1, 2, -3, 1, 3};
  static const long dens[] = {1, 1, 1, 1, 2, 3};
  return Rational(nums[uniform(rng, 0, 8)], dens[uniform(rng, 0, 5)]);
}

inline Element random_element(Rng& rng, std::size_t max_depth, std::size_t max_terms, long max_charge) {
  Element e;
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_terms)));
  for (std::size_t i = 0; i < n; ++i) e.add_term(random_monomial(rng, max_depth, max_charge), random_coeff(rng));
  return e;
}

/// Leaves of a random binary tree with n leaves, left to right.
inline std::vector<Word> random_tree(Rng& rng, std::size_t n) {
  std::vector<Word> leaves{Word()};
  while (leaves.size() < n) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(leaves.size()) - 1));
    const Word w = leaves[i];
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
    leaves.push_back(w.child('1'));
    leaves.push_back(w.child('2'));
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

inline Diagram random_diagram(Rng& rng, std::size_t max_leaves, long max_charge) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_leaves)));
  Diagram d;
  d.tplus = random_tree(rng, n);
  d.tminus = random_tree(rng, n);
  d.tau.resize(n);
  std::iota(d.tau.begin(), d.tau.end(), std::size_t{0});
  std::shuffle(d.tau.begin(), d.tau.end(), rng);
  for (std::size_t i = 0; i < n; ++i) d.v.emplace_back(uniform(rng, -max_charge, max_charge));
  return d;
}

inline Element random_w_element(Rng& rng, std::size_t max_leaves, long max_charge) {
  return to_element(random_diagram(rng, max_leaves, max_charge));
}

/// An element equal to e written differently: deeper normal form, one term
/// split by the Cuntz relation, and a cancelling pair.
inline Element rewrite(Rng& rng, const Element& e) {
  Element out = normalize(e, e.depth() + static_cast<std::size_t>(uniform(rng, 0, 1)));
  if (!out.is_zero()) {
    auto it = out.terms().begin();
    std::advance(it, uniform(rng, 0, static_cast<long>(out.size()) - 1));
    const Monomial m = it->first;
    const Rational c = it->second;
    out.add_term(m, -c);
    auto [a, b] = expand_right(m);
    out.add_term(a, c);
    out.add_term(b, c);
  }
  const Monomial extra = random_monomial(rng, 3, 5);
  auto [a, b] = expand_right(extra);
  out.add_term(extra, 1);
  out.add_term(a, -1);
  out.add_term(b, -1);
  return out;
}

}  // namespace qu2::testing
