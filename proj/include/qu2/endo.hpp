#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qu2/element.hpp"
#include "qu2/kernels.hpp"

namespace qu2 {

/// A permutation unitary u = sum_beta S_{perm(beta)} S_beta^* of level k.
/// Words of length k are indexed by lex_rank; perm[lex_rank(beta)] = lex_rank(alpha).
struct PermUnitary {
  std::size_t level = 0;
  Perm perm;
  Element element;

  static PermUnitary from_perm(std::size_t level, Perm perm);
  /// Reads a level-k permutation unitary; throws DomainError if e is not one.
  static PermUnitary from_element(const Element& e, std::size_t level);
  static PermUnitary identity(std::size_t level);

  /// 1-based cycle notation over lex ranks, "(1 2 3)(4 5)", or "id".
  std::string cycles() const;
  /// Accepts "id", "()", "(1 2 3)(4 5)"; single digits may be packed as "(123)".
  static PermUnitary from_cycles(std::size_t level, std::string_view text);

  friend bool operator==(const PermUnitary& a, const PermUnitary& b) {
    return a.level == b.level && a.perm == b.perm;
  }
};

/// Largest level accepted for explicit permutation unitaries.
inline constexpr std::size_t kMaxLevel = 12;

/// Candidate images of U for level-k permutation unitaries.
struct Template {
  enum class Kind { Pure, Mixed, Inner, Custom };

  std::string name;
  Kind kind = Kind::Custom;
  int sign = 1;                   // pure: U^{+-2^{k-1}}; inner: pUp^* (+1) or pU^*p^* (-1)
  std::size_t h = 0;              // mixed
  int variant = 1;                // mixed: 1 puts phi^h(P_1) on U^{+2^{k-1}}, 2 swaps
  std::optional<PermUnitary> p;   // inner, level k-1
  Element u_tilde;
};

/// Pure, mixed (h = 0..k-2, both variants) and inner templates. Throws DomainError for k < 2.
std::vector<Template> u_templates(std::size_t k);

/// Just the pure and mixed templates (the menu without inner ones).
std::vector<Template> shift_templates(std::size_t k);

/// Looks up "pure+", "pure-", "mixed1:h=0", "mixed2:h=1", "inner:(1 2)",
/// "inner*:id"; any other text is parsed as an element expression.
Template template_by_name(std::size_t k, std::string_view name);

struct ExtensionCheck {
  bool ext1 = false;  // U~ S~_2 = S~_1
  bool ext2 = false;  // U~ S~_1 = S~_2 U~
  bool holds() const { return ext1 && ext2; }
};

/// Both equations with S~_i = u S_i. Throws DomainError if u_tilde is not unitary.
ExtensionCheck check_extension_detail(const PermUnitary& u, const Element& u_tilde);
bool check_extension(const PermUnitary& u, const Element& u_tilde);

/// u_p^+ = sum_{mu,i} S_{mu i} S_{i p(mu)}^*, u_p^- = sum_mu S_{mu1} S_{2p(mu)}^* + S_{mu2} S_{1p(mu)}^*,
/// with p a permutation of the words of length k-1.
PermUnitary make_u_p(std::size_t k, const Perm& p, int sign);

/// Data for the mixed family of level k and parameter h. The words are split as
/// alpha (length h), a letter, and a tail (length k-h-2). For each half
/// (1: the letter of the variant, 2: the other letter) pi permutes the alpha
/// prefixes and sigma[rank alpha] permutes the tails.
struct SigmaFamily {
  std::size_t k = 2;
  std::size_t h = 0;
  int variant = 1;
  Perm pi1, pi2;
  std::vector<Perm> sigma1, sigma2;

  /// Identity data.
  static SigmaFamily trivial(std::size_t k, std::size_t h, int variant);
};

/// Throws DomainError when the data do not fit k, h.
PermUnitary make_u_sigma(const SigmaFamily& s);

/// The mixed template for (h, variant).
Element mixed_template(std::size_t k, std::size_t h, int variant);

/// The constructive mixed family: odometer shift of the alpha prefix by c in
/// Z/2^h and one tail permutation shared by all alpha, chosen per half.
/// Exactly N_{k,h} = (2^{k-h-2}! 2^h)^2 members.
std::vector<PermUnitary> mixed_family(std::size_t k, std::size_t h, int variant);

std::uint64_t n_kh(std::size_t k, std::size_t h);

struct ExtendedEndo {
  PermUnitary u;
  Element u_tilde;
  bool verified = false;
};

/// Checks the extension equations and records the result.
ExtendedEndo make_extended(const PermUnitary& u, const Element& u_tilde);

/// u = p phi(p^*) (times f when with_flip), U~ = p U p^* (resp. p U^* p^*).
ExtendedEndo make_inner_phi(const PermUnitary& p, bool with_flip);

enum class EnumMode { Brute, Constructive };

/// Brute force over all of P_2^k (k <= 3, CapacityError beyond) or the
/// constructive family of the template. Output sorted by perm.
std::vector<PermUnitary> enumerate_extendible(std::size_t k, const Template& t, EnumMode mode,
                                              int jobs = 0);

/// Serial brute force, for testing the parallel sweep.
std::vector<PermUnitary> enumerate_extendible_serial(std::size_t k, const Template& t);

/// The multiplicative extension S_2 -> u S_2, S_1 -> u S_1, U -> U~.
/// Throws DomainError unless endo.verified.
Element lambda_apply(const ExtendedEndo& endo, const Element& e);

/// lambda_u on an element of O_2 (every charge zero). Throws DomainError otherwise.
Element lambda_cuntz(const Element& u, const Element& e);

struct ProbeResult {
  bool stabilized = false;
  std::size_t stabilized_at = 0;
  Element witness;  // w with lambda_u(w) = u^*, so lambda_w inverts lambda_u
};

/// Computes u_j = u phi(u) ... phi^{j-1}(u) and w_j = u_j^* u^* u_j for j <= depth.
/// Reports the first j with w_j = w_{j+1} and lambda_u(w_j) = u^*; otherwise not stabilized.
ProbeResult automorphism_probe(const PermUnitary& u, std::size_t depth);

/// F_0 = 1, F_j = phi(F_{j-1}) F.
Element F_tower(std::size_t j);

}  // namespace qu2
