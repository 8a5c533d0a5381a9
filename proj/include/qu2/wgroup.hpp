#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "qu2/element.hpp"
#include "qu2/word.hpp"

namespace qu2 {

/// Tree-pair diagram with charges.
///
/// A binary tree is stored as its leaf words in left-to-right order (a sorted
/// partition). Leaf p of tplus is matched with leaf tau[p] of tminus and
/// carries charge v[p]; tau is 0-based here and 1-based in JSON and text.
struct Diagram {
  std::vector<Word> tplus;
  std::vector<Word> tminus;
  std::vector<std::size_t> tau;
  std::vector<Int> v;

  static Diagram identity();

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Throws DomainError unless both leaf lists are sorted partitions of equal
/// size, tau is a permutation and v has one entry per leaf.
void validate(const Diagram& d);

/// sum_p S_{tplus[p]} U^{v[p]} S_{tminus[tau[p]]}^*
Element to_element(const Diagram& d);

/// Reads the canonical form of a unitary of W. Throws DomainError otherwise.
Diagram from_element(const Element& e);

/// Merges sibling leaf pairs matching an expansion pattern until none is left.
/// Moves are taken deepest parent first, ties broken lexicographically.
Diagram reduce(const Diagram& d);

/// Same as reduce but applies the available moves in random order.
Diagram reduce_shuffled(const Diagram& d, std::mt19937_64& rng);

/// Product through the element algebra, reduced.
Diagram group_mul(const Diagram& a, const Diagram& b);

/// (tminus, tplus, tau^{-1}, v') with v'[tau(p)] = -v[p].
Diagram group_inv(const Diagram& d);

/// Nested-array tree: a leaf is [], an inner node is [left, right].
nlohmann::json tree_to_json(const std::vector<Word>& leaves);
std::vector<Word> tree_from_json(const nlohmann::json& j);

/// {tplus, tminus, tau (1-based), v}
nlohmann::json to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

/// One-line text form, "tplus=[1,21,22] tminus=[...] tau=[2,1,3] v=[0,1,0]".
std::string to_string(const Diagram& d);

/// "dot" or "tikz"; anything else throws UsageError.
std::string render(const Diagram& d, const std::string& format);

}  // namespace qu2
