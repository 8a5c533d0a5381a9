#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qu2/monomial.hpp"
#include "qu2/numeric.hpp"

namespace qu2 {

/// A finite sum of rational multiples of monomials.
///
/// Terms are kept collected (no zero coefficients) in Monomial order. The
/// arithmetic below does not equalize depths; normalize() produces the
/// canonical form where every beta word has the same length.
class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  Element() = default;
  explicit Element(Monomial m, Rational c = 1);

  static Element zero() { return {}; }
  static Element identity() { return Element(Monomial::identity()); }
  static Element u_power(const Int& k) { return Element(Monomial::u_power(k)); }
  static Element isometry(const Word& w) { return Element(Monomial::isometry(w)); }
  static Element co_isometry(const Word& w) { return Element(Monomial::co_isometry(w)); }
  static Element projection(const Word& w) { return Element(Monomial::projection(w)); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c*m, dropping the entry if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Longest beta word (0 for the zero element).
  std::size_t depth() const;

 private:
  Terms terms_;
};

/// Rewrites every term at beta-length `depth` (default: the current maximum).
/// Throws DomainError if depth is below the longest beta word.
Element normalize(const Element& e, std::optional<std::size_t> depth = std::nullopt);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& c);
Element mul(const Element& a, const Element& b);
Element adjoint(const Element& e);

/// Operator equality, decided on the common-depth canonical form of a - b.
bool eq(const Element& a, const Element& b);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// n-th power; negative n uses the adjoint, so it is the inverse only for unitaries.
Element power(const Element& e, long n);

/// Membership in the group W: canonical coefficients all 1 and the alpha and
/// beta words each form a partition.
bool is_unitary(const Element& e);

/// e e^* = 1 and e^* e = 1, checked by the symbolic engine.
bool is_unitary_algebraic(const Element& e);

struct Membership {
  bool in_O2 = false;
  bool in_QT = false;
  bool in_F2 = false;
  bool in_D2 = false;
};

/// Flags read off the canonical form term by term.
Membership membership(const Element& e);

struct PutnamTerm {
  Element projection;
  Int exponent;
};

/// e = sum_j p_j U^{n_j}, ordered by exponent. Throws DomainError unless e is
/// a unitary with |alpha| = |beta| on every canonical term.
std::vector<PutnamTerm> putnam_form(const Element& e);

struct PutnamCheck {
  bool sums_to_one = false;          // sum_j p_j = 1
  bool shifted_sums_to_one = false;  // sum_j U^{-n_j} p_j U^{n_j} = 1
};
PutnamCheck check_putnam(const std::vector<PutnamTerm>& form);

/// Reassembles sum_j p_j U^{n_j}.
Element putnam_sum(const std::vector<PutnamTerm>& form);

struct BdvFactor {
  Element bd;
  Element v;
};

/// e = bd * v with bd = sum S_a U^k S_a^*, v = sum S_a S_b^*. Throws DomainError
/// for non-unitary input.
BdvFactor bd_v_factor(const Element& e);

/// Sum of the charges of the canonical form. Throws DomainError for non-unitary input.
Int total_charge(const Element& e);

/// phi(x) = S_1 x S_1^* + S_2 x S_2^*.
Element phi(const Element& e);
Element phi_power(const Element& e, std::size_t h);

/// f = S_1 S_2^* + S_2 S_1^*.
Element flip();
/// F = S_11 S_11^* + S_12 S_21^* + S_21 S_12^* + S_22 S_22^*.
Element big_F();

/// Terms joined by " + " / " - ", coefficients written as "3/2*". Zero prints "0".
std::string to_string(const Element& e);

}  // namespace qu2
