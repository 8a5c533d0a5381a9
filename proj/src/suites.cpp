#include "qu2/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <fmt/format.h>

#include "qu2/endo.hpp"

namespace qu2 {

namespace {

std::uint64_t distinct_count(const std::vector<PermUnitary>& us) {
  std::set<Perm> perms;
  for (const auto& u : us) perms.insert(u.perm);
  return perms.size();
}

}  // namespace

std::vector<CountCheck> count_suite(std::size_t max_k, std::size_t sample, std::uint64_t seed) {
  std::vector<CountCheck> out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 2; k <= max_k; ++k) {
    for (const Template& t : shift_templates(k)) {
      CountCheck c;
      c.k = k;
      c.family = t.name;
      std::vector<PermUnitary> family = enumerate_extendible(k, t, EnumMode::Constructive);
      c.distinct = distinct_count(family);
      if (t.kind == Template::Kind::Pure) {
        c.expected = factorial(std::size_t{1} << (k - 1));
      } else {
        c.expected = n_kh(k, t.h);
      }
      std::vector<std::size_t> idx(family.size());
      std::iota(idx.begin(), idx.end(), 0);
      if (idx.size() > sample) {
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(sample);
        std::sort(idx.begin(), idx.end());
      }
      for (std::size_t i : idx) {
        ++c.checked;
        if (check_extension(family[i], t.u_tilde)) ++c.extend;
      }
      out.push_back(c);
    }
  }
  return out;
}

std::string to_string(const CountCheck& c) {
  return fmt::format("k={} {:<12} distinct {}/{} extend {}/{} {}", c.k, c.family, c.distinct, c.expected,
                     c.extend, c.checked, c.ok() ? "ok" : "MISMATCH");
}

}  // namespace qu2
