#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qu2 {

/// One family of constructive unitaries: how many distinct members it has
/// against the closed formula, and how many of the checked members extend.
struct CountCheck {
  std::size_t k = 0;
  std::string family;      // template name
  std::uint64_t expected = 0;
  std::uint64_t distinct = 0;
  std::uint64_t checked = 0;
  std::uint64_t extend = 0;
  bool ok() const { return distinct == expected && extend == checked; }
};

/// Pure families (2^{k-1}! per sign) and mixed families (N_{k,h} per h and
/// variant) for k = 2..max_k. Pure families with more than `sample` members
/// are checked on a random sample of that size drawn with `seed`.
std::vector<CountCheck> count_suite(std::size_t max_k, std::size_t sample, std::uint64_t seed);

std::string to_string(const CountCheck& c);

}  // namespace qu2
