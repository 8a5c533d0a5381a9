#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qu2/element.hpp"

// The two exhaustive sweeps of the engine. The default versions use OpenMP;
// qu2::reference holds the plain loops they are tested against.

namespace qu2 {

using Perm = std::vector<std::uint32_t>;
using PermPredicate = std::function<bool(std::span<const std::uint32_t>)>;

/// Every permutation of {0..n-1} accepted by pred, in lexicographic order.
/// pred must be safe to call concurrently. jobs <= 0 means the OpenMP default.
/// Throws CapacityError for n > 10.
std::vector<Perm> permutation_sweep(std::size_t n, const PermPredicate& pred, int jobs = 0);

/// Runs residue_class_agrees over all 2^depth classes.
/// Throws CapacityError for depth > 24.
bool oracle_sweep(const Element& a, const Element& b, std::size_t depth, int jobs = 0);

/// The permutation of {0..n-1} with the given rank in lexicographic order.
Perm unrank_permutation(std::size_t n, std::uint64_t rank);

std::uint64_t factorial(std::size_t n);

namespace reference {

std::vector<Perm> permutation_sweep(std::size_t n, const PermPredicate& pred);
bool oracle_sweep(const Element& a, const Element& b, std::size_t depth);

}  // namespace reference

}  // namespace qu2
