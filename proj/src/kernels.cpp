#include "qu2/kernels.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

#include "qu2/canrep.hpp"
#include "qu2/errors.hpp"

namespace qu2 {

namespace {

constexpr std::size_t kMaxPermSize = 10;
constexpr std::size_t kMaxOracleDepth = 24;

void check_perm_size(std::size_t n) {
  if (n > kMaxPermSize) {
    throw CapacityError("permutation sweep over " + std::to_string(n) + "! elements refused");
  }
}

void check_depth(std::size_t depth) {
  if (depth > kMaxOracleDepth) {
    throw CapacityError("oracle sweep over 2^" + std::to_string(depth) + " classes refused");
  }
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Perm unrank_permutation(std::size_t n, std::uint64_t rank) {
  // factorial number system, most significant digit first
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  Perm out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

std::vector<Perm> permutation_sweep(std::size_t n, const PermPredicate& pred, int jobs) {
  check_perm_size(n);
  const auto total = static_cast<std::int64_t>(factorial(n));
  std::vector<char> hit(static_cast<std::size_t>(total), 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t r = 0; r < total; ++r) {
    const Perm p = unrank_permutation(n, static_cast<std::uint64_t>(r));
    hit[static_cast<std::size_t>(r)] = pred(p) ? 1 : 0;
  }
  std::vector<Perm> out;
  for (std::int64_t r = 0; r < total; ++r) {
    if (hit[static_cast<std::size_t>(r)]) out.push_back(unrank_permutation(n, static_cast<std::uint64_t>(r)));
  }
  return out;
}

bool oracle_sweep(const Element& a, const Element& b, std::size_t depth, int jobs) {
  check_depth(depth);
  const auto classes = static_cast<std::int64_t>(std::uint64_t{1} << depth);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  bool agree = true;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(&& : agree)
  for (std::int64_t r = 0; r < classes; ++r) {
    agree = agree && residue_class_agrees(a, b, depth, static_cast<std::uint64_t>(r));
  }
  return agree;
}

namespace reference {

std::vector<Perm> permutation_sweep(std::size_t n, const PermPredicate& pred) {
  check_perm_size(n);
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (pred(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool oracle_sweep(const Element& a, const Element& b, std::size_t depth) {
  check_depth(depth);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << depth); ++r) {
    if (!residue_class_agrees(a, b, depth, r)) return false;
  }
  return true;
}

}  // namespace reference

}  // namespace qu2
