#pragma once

#include <cstddef>
#include <vector>

#include "coxdepth/groups.hpp"

namespace coxdepth {

// Definitional depth of every element: shortest path from the identity in
// the Cayley graph whose edges are right multiplications by reflections,
// weighted by reflection_depth. Indexed by ElementIndex.
std::vector<int> depth_oracle(const GroupBackend& backend);

// Unweighted distance from the identity in the same graph.
std::vector<int> reflection_length_oracle(const GroupBackend& backend);

inline constexpr int kMaxFactorizationBudget = 6;
inline constexpr std::size_t kMaxFactorizationOrder = 720;

// A factorization is a list of positions into backend.reflections().
using ReflectionWord = std::vector<std::size_t>;

// Every sequence t_1 ... t_k (k = budget) of reflections with product g,
// sorted lexicographically by reflection position. Throws CapExceeded when
// budget > 6 or the group has more than 720 elements.
std::vector<ReflectionWord> enumerate_min_factorizations(const GroupBackend& backend, ElementIndex g,
                                                         int budget);

}  // namespace coxdepth
