#include "qu2/monomial.hpp"

#include <limits>

namespace qu2 {

bool operator<(const Monomial& a, const Monomial& b) {
  if (auto c = a.alpha <=> b.alpha; c != 0) return c < 0;
  if (auto c = a.beta <=> b.beta; c != 0) return c < 0;
  return a.k < b.k;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += ' ';
    out += piece;
  };
  if (!m.alpha.empty()) append("S[" + m.alpha.letters() + "]");
  if (m.k == 1) {
    append("U");
  } else if (m.k != 0) {
    append("U^" + m.k.str());
  }
  if (!m.beta.empty()) append("S*[" + m.beta.letters() + "]");
  return out.empty() ? std::string("1") : out;
}

namespace {

// Adds k to the dyadic integer spelled by a (leftmost letter least significant,
// '1' a set bit) and splits off the carry.
PushResult push_small(std::int64_t k, const Word& a) {
  const std::size_t len = a.size();
  __int128 t = 0;
  for (std::size_t j = len; j-- > 0;) t = (t << 1) | (a[j] == '1' ? 1 : 0);
  const __int128 modulus = static_cast<__int128>(1) << len;
  const __int128 n = t + k;
  __int128 r = n % modulus;
  if (r < 0) r += modulus;
  const __int128 q = (n - r) / modulus;
  std::string letters(len, '2');
  for (std::size_t j = 0; j < len; ++j) {
    if ((r >> j) & 1) letters[j] = '1';
  }
  return {Word(std::move(letters)), Int(static_cast<std::int64_t>(q))};
}

}  // namespace

PushResult push_u_through(const Int& k, const Word& a) {
  constexpr std::int64_t kSmall = std::int64_t{1} << 60;
  if (a.size() <= 60 && k > -kSmall && k < kSmall) {
    return push_small(static_cast<std::int64_t>(k), a);
  }
  const Int n = encode(a).offset + k;
  Int r;
  Int q = floor_div_pow2(n, a.size(), &r);
  return {decode(a.size(), r), std::move(q)};
}

std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b) {
  // S_{a.alpha} U^{a.k} (S_{a.beta}^* S_{b.alpha}) U^{b.k} S_{b.beta}^*
  if (a.beta.is_prefix_of(b.alpha)) {
    // S_{a.beta}^* S_{b.alpha} = S_gamma
    const Word gamma = b.alpha.suffix_from(a.beta.size());
    PushResult pushed = push_u_through(a.k, gamma);
    return Monomial{a.alpha + pushed.word, pushed.power + b.k, b.beta};
  }
  if (b.alpha.is_prefix_of(a.beta)) {
    // S_{a.beta}^* S_{b.alpha} = S_gamma^*, and S_gamma^* U^{b.k} = U^{-q} S_{gamma'}^*
    // where U^{-b.k} S_gamma = S_{gamma'} U^q.
    const Word gamma = a.beta.suffix_from(b.alpha.size());
    PushResult pushed = push_u_through(-b.k, gamma);
    return Monomial{a.alpha, a.k - pushed.power, b.beta + pushed.word};
  }
  return std::nullopt;
}

Monomial adjoint(const Monomial& m) { return {m.beta, -m.k, m.alpha}; }

std::pair<Monomial, Monomial> expand_right(const Monomial& m) {
  Int rem;
  const Int half = floor_div_pow2(m.k, 1, &rem);
  if (rem == 0) {
    return {Monomial{m.alpha.child('1'), half, m.beta.child('1')},
            Monomial{m.alpha.child('2'), half, m.beta.child('2')}};
  }
  return {Monomial{m.alpha.child('1'), half, m.beta.child('2')},
          Monomial{m.alpha.child('2'), half + 1, m.beta.child('1')}};
}

}  // namespace qu2
