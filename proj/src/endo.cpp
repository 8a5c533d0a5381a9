#include "qu2/endo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "qu2/errors.hpp"
#include "qu2/parse.hpp"

namespace qu2 {

namespace {

std::uint64_t words_at(std::size_t level) { return std::uint64_t{1} << level; }

void check_level(std::size_t level) {
  if (level > kMaxLevel) {
    throw CapacityError("permutation unitaries above level " + std::to_string(kMaxLevel) + " refused");
  }
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

const Element& s_letter(char letter) {
  static const Element s1 = Element::isometry(Word("1"));
  static const Element s2 = Element::isometry(Word("2"));
  return letter == '1' ? s1 : s2;
}

}  // namespace

PermUnitary PermUnitary::from_perm(std::size_t level, Perm perm) {
  check_level(level);
  if (perm.size() != words_at(level) || !is_permutation(perm)) {
    throw DomainError("not a permutation of the words of length " + std::to_string(level));
  }
  PermUnitary u{level, std::move(perm), Element()};
  for (std::uint64_t b = 0; b < u.perm.size(); ++b) {
    u.element.add_term(Monomial{lex_unrank(level, u.perm[b]), 0, lex_unrank(level, b)}, 1);
  }
  return u;
}

PermUnitary PermUnitary::identity(std::size_t level) {
  return from_perm(level, identity_perm(words_at(level)));
}

PermUnitary PermUnitary::from_element(const Element& e, std::size_t level) {
  check_level(level);
  if (e.depth() > level) {
    throw DomainError("element is deeper than level " + std::to_string(level));
  }
  Perm perm(words_at(level), 0);
  std::vector<bool> hit(perm.size(), false);
  const Element canon = normalize(e, level);
  if (canon.size() != perm.size()) throw DomainError("not a permutation unitary of this level");
  for (const auto& [m, c] : canon.terms()) {
    if (c != 1 || m.k != 0 || m.alpha.size() != level) {
      throw DomainError("not a permutation unitary of this level");
    }
    const auto b = lex_rank(m.beta);
    if (hit[b]) throw DomainError("not a permutation unitary of this level");
    hit[b] = true;
    perm[b] = static_cast<std::uint32_t>(lex_rank(m.alpha));
  }
  if (!is_permutation(perm)) throw DomainError("not a permutation unitary of this level");
  return from_perm(level, std::move(perm));
}

std::string PermUnitary::cycles() const {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(" + std::to_string(s + 1);
    seen[s] = true;
    for (std::size_t x = perm[s]; x != s; x = perm[x]) {
      out += " " + std::to_string(x + 1);
      seen[x] = true;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

PermUnitary PermUnitary::from_cycles(std::size_t level, std::string_view text) {
  check_level(level);
  const std::size_t n = words_at(level);
  Perm perm = identity_perm(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw UsageError("cycle notation error at position " + std::to_string(pos) + ": " + what, pos);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos).starts_with("id")) {
    pos += 2;
    skip();
    if (pos != text.size()) fail("trailing text");
    return from_perm(level, perm);
  }
  std::vector<bool> used(n, false);
  while (skip(), pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) fail("missing ')'");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::size_t> cycle;
    const bool packed = body.find_first_of(" ,") == std::string_view::npos && n <= 9;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ' ' || body[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (packed) {
        j = i + 1;
      } else {
        while (j < body.size() && body[j] != ' ' && body[j] != ',') ++j;
      }
      auto v = parse_int(body.substr(i, j - i));
      if (!v || *v < 1 || *v > static_cast<long>(n)) fail("bad entry in cycle");
      const auto x = static_cast<std::size_t>(*v) - 1;
      if (used[x]) fail("entry repeated");
      used[x] = true;
      cycle.push_back(x);
      i = j;
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) {
      perm[cycle[c]] = static_cast<std::uint32_t>(cycle[(c + 1) % cycle.size()]);
    }
    pos = close + 1;
  }
  return from_perm(level, perm);
}

Element mixed_template(std::size_t k, std::size_t h, int variant) {
  if (k < 2 || h > k - 2 || (variant != 1 && variant != 2)) {
    throw DomainError("mixed template needs k >= 2, 0 <= h <= k-2 and variant 1 or 2");
  }
  const Int shift = pow2(k - 1);
  const Element plus = Element::u_power(shift);
  const Element minus = Element::u_power(-shift);
  const Element p1 = phi_power(Element::projection(Word("1")), h);
  const Element p2 = phi_power(Element::projection(Word("2")), h);
  return variant == 1 ? add(mul(p1, plus), mul(p2, minus)) : add(mul(p2, plus), mul(p1, minus));
}

std::vector<Template> shift_templates(std::size_t k) {
  if (k < 2) throw DomainError("templates need level k >= 2");
  check_level(k);
  std::vector<Template> out;
  const Int shift = pow2(k - 1);
  out.push_back({"pure+", Template::Kind::Pure, 1, 0, 1, std::nullopt, Element::u_power(shift)});
  out.push_back({"pure-", Template::Kind::Pure, -1, 0, 1, std::nullopt, Element::u_power(-shift)});
  for (std::size_t h = 0; h + 2 <= k; ++h) {
    for (int variant : {1, 2}) {
      out.push_back({"mixed" + std::to_string(variant) + ":h=" + std::to_string(h), Template::Kind::Mixed,
                     1, h, variant, std::nullopt, mixed_template(k, h, variant)});
    }
  }
  return out;
}

std::vector<Template> u_templates(std::size_t k) {
  std::vector<Template> out = shift_templates(k);
  const Element u = Element::u_power(1);
  const Element ustar = Element::u_power(-1);
  const std::size_t n = words_at(k - 1);
  Perm p = identity_perm(n);
  do {
    PermUnitary pu = PermUnitary::from_perm(k - 1, p);
    const Element pstar = adjoint(pu.element);
    out.push_back({"inner:" + pu.cycles(), Template::Kind::Inner, 1, 0, 1, pu,
                   mul(mul(pu.element, u), pstar)});
    out.push_back({"inner*:" + pu.cycles(), Template::Kind::Inner, -1, 0, 1, pu,
                   mul(mul(pu.element, ustar), pstar)});
  } while (std::next_permutation(p.begin(), p.end()));
  for (const Template& t : out) {
    if (!is_unitary(t.u_tilde)) throw DomainError("template " + t.name + " is not unitary");
  }
  return out;
}

Template template_by_name(std::size_t k, std::string_view name) {
  if (k < 2) throw DomainError("templates need level k >= 2");
  for (Template& t : shift_templates(k)) {
    if (t.name == name) return t;
  }
  for (const auto& [prefix, sign] : {std::pair{std::string_view("inner:"), 1},
                                     std::pair{std::string_view("inner*:"), -1}}) {
    if (name.starts_with(prefix)) {
      PermUnitary p = PermUnitary::from_cycles(k - 1, name.substr(prefix.size()));
      const Element u = Element::u_power(sign);
      std::string label = std::string(prefix) + p.cycles();
      Element ut = mul(mul(p.element, u), adjoint(p.element));
      return {std::move(label), Template::Kind::Inner, sign, 0, 1, std::move(p), std::move(ut)};
    }
  }
  Element e = parse_element(name);
  // an expression equal to a named template inherits its constructive family
  for (Template& t : shift_templates(k)) {
    if (eq(t.u_tilde, e)) return t;
  }
  return {std::string(name), Template::Kind::Custom, 1, 0, 1, std::nullopt, std::move(e)};
}

namespace {

ExtensionCheck extension_equations(const Element& u, const Element& u_tilde) {
  const Element s1 = mul(u, s_letter('1'));
  const Element s2 = mul(u, s_letter('2'));
  ExtensionCheck r;
  r.ext1 = eq(mul(u_tilde, s2), s1);
  r.ext2 = eq(mul(u_tilde, s1), mul(s2, u_tilde));
  return r;
}

}  // namespace

ExtensionCheck check_extension_detail(const PermUnitary& u, const Element& u_tilde) {
  if (!is_unitary(u_tilde)) throw DomainError("check_extension: U~ is not unitary");
  return extension_equations(u.element, u_tilde);
}

bool check_extension(const PermUnitary& u, const Element& u_tilde) {
  return check_extension_detail(u, u_tilde).holds();
}

PermUnitary make_u_p(std::size_t k, const Perm& p, int sign) {
  if (k < 2) throw DomainError("make_u_p needs k >= 2");
  check_level(k);
  if (p.size() != words_at(k - 1) || !is_permutation(p)) {
    throw DomainError("make_u_p: p must permute the words of length k-1");
  }
  const Word one("1"), two("2");
  Element u;
  for (std::uint64_t r = 0; r < p.size(); ++r) {
    const Word mu = lex_unrank(k - 1, r);
    const Word pmu = lex_unrank(k - 1, p[r]);
    if (sign > 0) {
      u.add_term(Monomial{mu + one, 0, one + pmu}, 1);
      u.add_term(Monomial{mu + two, 0, two + pmu}, 1);
    } else {
      u.add_term(Monomial{mu + one, 0, two + pmu}, 1);
      u.add_term(Monomial{mu + two, 0, one + pmu}, 1);
    }
  }
  return PermUnitary::from_element(u, k);
}

SigmaFamily SigmaFamily::trivial(std::size_t k, std::size_t h, int variant) {
  if (k < 2 || h > k - 2) throw DomainError("sigma family needs k >= 2 and 0 <= h <= k-2");
  SigmaFamily s{k, h, variant, identity_perm(words_at(h)), identity_perm(words_at(h)), {}, {}};
  s.sigma1.assign(words_at(h), identity_perm(words_at(k - h - 2)));
  s.sigma2 = s.sigma1;
  return s;
}

PermUnitary make_u_sigma(const SigmaFamily& s) {
  if (s.k < 2 || s.h > s.k - 2 || (s.variant != 1 && s.variant != 2)) {
    throw DomainError("make_u_sigma: need k >= 2, 0 <= h <= k-2, variant 1 or 2");
  }
  check_level(s.k);
  const std::size_t tail = s.k - s.h - 2;
  const std::uint64_t na = words_at(s.h);
  const std::uint64_t nt = words_at(tail);
  auto ok = [&](const Perm& p, std::uint64_t n) { return p.size() == n && is_permutation(p); };
  if (!ok(s.pi1, na) || !ok(s.pi2, na) || s.sigma1.size() != na || s.sigma2.size() != na) {
    throw DomainError("make_u_sigma: prefix data do not match h");
  }
  for (std::uint64_t a = 0; a < na; ++a) {
    if (!ok(s.sigma1[a], nt) || !ok(s.sigma2[a], nt)) {
      throw DomainError("make_u_sigma: tail permutations do not match k-h-2");
    }
  }
  const Word one("1"), two("2");
  const Word a = s.variant == 1 ? one : two;
  const Word b = s.variant == 1 ? two : one;
  Element u;
  for (std::uint64_t ra = 0; ra < na; ++ra) {
    const Word alpha = lex_unrank(s.h, ra);
    const Word pi1 = lex_unrank(s.h, s.pi1[ra]);
    const Word pi2 = lex_unrank(s.h, s.pi2[ra]);
    for (std::uint64_t rt = 0; rt < nt; ++rt) {
      const Word beta = lex_unrank(tail, rt);
      const Word sb1 = lex_unrank(tail, s.sigma1[ra][rt]);
      const Word sb2 = lex_unrank(tail, s.sigma2[ra][rt]);
      u.add_term(Monomial{alpha + a + beta + two, 0, two + pi1 + a + sb1}, 1);
      u.add_term(Monomial{alpha + a + beta + one, 0, one + pi1 + a + sb1}, 1);
      u.add_term(Monomial{alpha + b + beta + one, 0, two + pi2 + b + sb2}, 1);
      u.add_term(Monomial{alpha + b + beta + two, 0, one + pi2 + b + sb2}, 1);
    }
  }
  return PermUnitary::from_element(u, s.k);
}

std::uint64_t n_kh(std::size_t k, std::size_t h) {
  if (k < 2 || h > k - 2) throw DomainError("N_{k,h} needs k >= 2 and 0 <= h <= k-2");
  const std::uint64_t f = factorial(static_cast<std::size_t>(words_at(k - h - 2)));
  const std::uint64_t per_half = f * words_at(h);
  return per_half * per_half;
}

std::vector<PermUnitary> mixed_family(std::size_t k, std::size_t h, int variant) {
  SigmaFamily base = SigmaFamily::trivial(k, h, variant);
  const std::size_t tail = k - h - 2;
  if (words_at(tail) > 8) throw CapacityError("mixed family too large to enumerate");
  const std::uint64_t na = words_at(h);
  // odometer shift: alpha -> decode(t(alpha) + c)
  auto shift = [&](std::uint64_t c) {
    Perm p(na);
    for (std::uint64_t r = 0; r < na; ++r) {
      const Word alpha = lex_unrank(h, r);
      Int rem;
      floor_div_pow2(encode(alpha).offset + c, h, &rem);
      p[r] = static_cast<std::uint32_t>(lex_rank(decode(h, rem)));
    }
    return p;
  };
  std::vector<Perm> tails;
  Perm t = identity_perm(words_at(tail));
  do tails.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));

  std::vector<PermUnitary> out;
  for (std::uint64_t c1 = 0; c1 < na; ++c1) {
    for (const Perm& s1 : tails) {
      for (std::uint64_t c2 = 0; c2 < na; ++c2) {
        for (const Perm& s2 : tails) {
          SigmaFamily s = base;
          s.pi1 = shift(c1);
          s.pi2 = shift(c2);
          s.sigma1.assign(na, s1);
          s.sigma2.assign(na, s2);
          out.push_back(make_u_sigma(s));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PermUnitary& x, const PermUnitary& y) { return x.perm < y.perm; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedEndo make_extended(const PermUnitary& u, const Element& u_tilde) {
  const bool ok = check_extension(u, u_tilde);
  return {u, u_tilde, ok};
}

ExtendedEndo make_inner_phi(const PermUnitary& p, bool with_flip) {
  const Element pstar = adjoint(p.element);
  Element u = mul(p.element, phi(pstar));
  if (with_flip) u = mul(u, flip());
  const Element ut = mul(mul(p.element, Element::u_power(with_flip ? -1 : 1)), pstar);
  return make_extended(PermUnitary::from_element(u, p.level + 1), ut);
}

namespace {

std::vector<PermUnitary> constructive(std::size_t k, const Template& t) {
  std::vector<PermUnitary> out;
  switch (t.kind) {
    case Template::Kind::Pure: {
      Perm p = identity_perm(words_at(k - 1));
      do out.push_back(make_u_p(k, p, t.sign));
      while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Template::Kind::Mixed:
      out = mixed_family(k, t.h, t.variant);
      break;
    case Template::Kind::Inner:
      out.push_back(make_inner_phi(*t.p, t.sign < 0).u);
      break;
    case Template::Kind::Custom:
      break;
  }
  std::sort(out.begin(), out.end(), [](const PermUnitary& x, const PermUnitary& y) { return x.perm < y.perm; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_brute(std::size_t k, const Template& t) {
  if (k < 2) throw DomainError("enumeration needs level k >= 2");
  if (k > 3) throw CapacityError("brute force over P_2^" + std::to_string(k) + " refused (k <= 3)");
  if (!is_unitary(t.u_tilde)) throw DomainError("template " + t.name + " is not unitary");
}

std::vector<PermUnitary> to_unitaries(std::size_t k, const std::vector<Perm>& perms) {
  std::vector<PermUnitary> out;
  out.reserve(perms.size());
  for (const Perm& p : perms) out.push_back(PermUnitary::from_perm(k, p));
  return out;
}

}  // namespace

std::vector<PermUnitary> enumerate_extendible(std::size_t k, const Template& t, EnumMode mode, int jobs) {
  if (mode == EnumMode::Constructive) {
    if (k < 2) throw DomainError("enumeration needs level k >= 2");
    return constructive(k, t);
  }
  check_brute(k, t);
  const Element& ut = t.u_tilde;
  auto pred = [k, &ut](std::span<const std::uint32_t> p) {
    const PermUnitary u = PermUnitary::from_perm(k, Perm(p.begin(), p.end()));
    return extension_equations(u.element, ut).holds();
  };
  return to_unitaries(k, permutation_sweep(words_at(k), pred, jobs));
}

std::vector<PermUnitary> enumerate_extendible_serial(std::size_t k, const Template& t) {
  check_brute(k, t);
  const Element& ut = t.u_tilde;
  auto pred = [k, &ut](std::span<const std::uint32_t> p) {
    const PermUnitary u = PermUnitary::from_perm(k, Perm(p.begin(), p.end()));
    return extension_equations(u.element, ut).holds();
  };
  return to_unitaries(k, reference::permutation_sweep(words_at(k), pred));
}

namespace {

// lambda on every monomial, given the images of S_1, S_2 and of U, U^*.
Element lambda_terms(const Element& e, const Element& s1, const Element& s2,
                     const std::optional<std::pair<Element, Element>>& u_images) {
  std::map<Word, Element> iso_cache;
  auto iso = [&](const Word& w) -> const Element& {
    auto it = iso_cache.find(w);
    if (it != iso_cache.end()) return it->second;
    Element img = Element::identity();
    for (std::size_t i = 0; i < w.size(); ++i) img = mul(img, w[i] == '1' ? s1 : s2);
    return iso_cache.emplace(w, std::move(img)).first->second;
  };
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Element img = iso(m.alpha);
    if (m.k != 0) {
      if (!u_images) throw DomainError("lambda_cuntz: element has a nonzero charge");
      if (!fits_int64(m.k) || abs(m.k) > 4096) throw CapacityError("lambda: charge too large");
      img = mul(img, power(m.k > 0 ? u_images->first : u_images->second,
                           static_cast<long>(abs(m.k))));
    }
    img = mul(img, adjoint(iso(m.beta)));
    out = add(out, scale(img, c));
  }
  return out;
}

}  // namespace

Element lambda_apply(const ExtendedEndo& endo, const Element& e) {
  if (!endo.verified) throw DomainError("lambda_apply: the extension is not verified");
  const Element s1 = mul(endo.u.element, s_letter('1'));
  const Element s2 = mul(endo.u.element, s_letter('2'));
  return lambda_terms(e, s1, s2, std::pair{endo.u_tilde, adjoint(endo.u_tilde)});
}

Element lambda_cuntz(const Element& u, const Element& e) {
  return lambda_terms(e, mul(u, s_letter('1')), mul(u, s_letter('2')), std::nullopt);
}

ProbeResult automorphism_probe(const PermUnitary& u, std::size_t depth) {
  const Element ustar = adjoint(u.element);
  ProbeResult result;
  Element uj = u.element;             // u_1
  Element phi_j = phi(u.element);     // phi^1(u)
  Element wj = mul(mul(adjoint(uj), ustar), uj);
  for (std::size_t j = 1; j <= depth; ++j) {
    Element next_u = mul(uj, phi_j);
    Element next_w = mul(mul(adjoint(next_u), ustar), next_u);
    if (eq(wj, next_w) && eq(lambda_cuntz(u.element, wj), ustar)) {
      result.stabilized = true;
      result.stabilized_at = j;
      result.witness = normalize(wj);
      return result;
    }
    uj = std::move(next_u);
    wj = std::move(next_w);
    phi_j = phi(phi_j);
  }
  return result;
}

Element F_tower(std::size_t j) {
  Element F = Element::identity();
  const Element big = big_F();
  for (std::size_t i = 0; i < j; ++i) F = mul(phi(F), big);
  return F;
}

}  // namespace qu2
