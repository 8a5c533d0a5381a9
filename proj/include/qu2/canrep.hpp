#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qu2/element.hpp"

namespace qu2 {

/// The angle a/2^n in [0,1), standing for the scalar exp(2 pi i a/2^n).
class DyadicAngle {
 public:
  DyadicAngle() = default;
  /// Reduces mod 1. Throws DomainError unless the denominator is a power of two.
  explicit DyadicAngle(const Rational& value);
  static DyadicAngle parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend DyadicAngle operator+(const DyadicAngle& a, const DyadicAngle& b) {
    return DyadicAngle(a.value_ + b.value_);
  }
  friend DyadicAngle operator-(const DyadicAngle& a, const DyadicAngle& b) {
    return DyadicAngle(a.value_ - b.value_);
  }
  friend DyadicAngle operator*(const Int& k, const DyadicAngle& a) {
    return DyadicAngle(Rational(k) * a.value_);
  }
  friend bool operator==(const DyadicAngle&, const DyadicAngle&) = default;

 private:
  Rational value_ = 0;
};

std::string to_string(const DyadicAngle& a);

/// phase * e_index
struct BasisVector {
  DyadicAngle phase;
  Int index;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// Image of e_n under a single monomial, computed letter by letter from
/// U e_k = e_{k+1}, S_2 e_k = e_{2k}, S_1 e_k = e_{2k+1}. nullopt means zero.
std::optional<Int> apply_monomial(const Monomial& m, const Int& n);

/// Image of e_n as a list of (coefficient, index), sorted by index, zeros dropped.
std::vector<std::pair<Rational, Int>> apply_basis(const Element& e, const Int& n);

/// True iff e1 and e2 act identically, decided on the residue classes mod 2^L
/// (L the larger depth): three nearby points per class plus one point far
/// enough that distinct affine maps cannot collide. Parallel over classes.
bool semantic_eq(const Element& e1, const Element& e2);

/// One residue class of the sweep above.
bool residue_class_agrees(const Element& e1, const Element& e2, std::size_t depth,
                          std::uint64_t residue);

enum class Generator { U, Ustar, S1, S1star, S2, S2star, Uz, Uzstar };

struct GeneratorToken {
  Generator g;
  std::optional<DyadicAngle> angle;  // Uz[a/b] overrides the ambient angle
};

/// Whitespace-separated tokens U, U*, S1, S1*, S2, S2*, Uz, Uz*, Uz[a/b], Uz*[a/b].
/// Throws UsageError with position on a bad token.
std::vector<GeneratorToken> parse_generator_word(std::string_view text);

/// Applies the word to e_k, rightmost generator first. U_z e_j = z^j e_j.
std::optional<BasisVector> phase_apply(const DyadicAngle& z, const std::vector<GeneratorToken>& word,
                                       const Int& k);

/// sum_i phase_i S_{alpha_i} U^{k_i} S_{beta_i}^* with alpha and beta partitions.
struct DecoratedPermutative {
  std::vector<std::pair<DyadicAngle, Monomial>> terms;
};

/// Throws DomainError unless the alpha words and the beta words are partitions.
void validate(const DecoratedPermutative& v);

std::optional<BasisVector> apply_basis(const DecoratedPermutative& v, const Int& n);

struct DpSplit {
  /// Phase of d on each leaf; sibling leaves of equal phase are merged.
  std::vector<std::pair<Word, DyadicAngle>> d;
  /// The phase-free unitary.
  Element P;
};

DpSplit dp_split(const DecoratedPermutative& v);

/// Phase of d on e_n.
DyadicAngle phase_at(const std::vector<std::pair<Word, DyadicAngle>>& d, const Int& n);

/// d P e_n == V e_n for every n in [lo, hi].
bool dp_recomposes(const DecoratedPermutative& v, const DpSplit& split, const Int& lo, const Int& hi);

}  // namespace qu2
