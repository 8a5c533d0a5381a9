#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qu2/numeric.hpp"
#include "qu2/word.hpp"

namespace qu2 {

/// The canonical monomial S_alpha U^k S_beta^*.
///
/// Two monomials are equal as operators iff their triples agree. On the
/// canonical representation the monomial sends e_n, n = t(beta) mod 2^|beta|,
/// to e_{2^|alpha| ((n - t(beta)) / 2^|beta| + k) + t(alpha)} and kills the rest.
struct Monomial {
  Word alpha;
  Int k = 0;
  Word beta;

  static Monomial identity() { return {}; }
  static Monomial u_power(Int k) { return {Word(), std::move(k), Word()}; }
  static Monomial isometry(Word w) { return {std::move(w), 0, Word()}; }
  static Monomial co_isometry(Word w) { return {Word(), 0, std::move(w)}; }
  static Monomial projection(const Word& w) { return {w, 0, w}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Deterministic order: alpha, then beta, then k.
bool operator<(const Monomial& a, const Monomial& b);

/// Text syntax: "S[112] U^3 S*[21]", "U^-4", "S[2]", "1".
std::string to_string(const Monomial& m);

struct PushResult {
  Word word;
  Int power;
};

/// U^k S_a = S_{a2} U^q with |a2| = |a| and t(a) + k = 2^|a| q + t(a2).
PushResult push_u_through(const Int& k, const Word& a);

/// Operator product in canonical form; nullopt when the inner words are
/// incomparable (S_beta^* S_gamma = 0).
std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b);

/// (alpha, k, beta) -> (beta, -k, alpha).
Monomial adjoint(const Monomial& m);

/// One insertion of S_1 S_1^* + S_2 S_2^* on the right:
///   even k = 2k': (alpha1, k', beta1) + (alpha2, k', beta2)
///   odd  k = 2k'+1: (alpha1, k', beta2) + (alpha2, k'+1, beta1)
std::pair<Monomial, Monomial> expand_right(const Monomial& m);

}  // namespace qu2
