#pragma once

#include <optional>
#include <vector>

#include "coxdepth/permutation.hpp"

namespace coxdepth {

// Positions i_1 < ... < i_k (1-indexed) with w(i_1) ... w(i_k) order-isomorphic
// to p, choosing the lexicographically least such set; nullopt if w avoids p.
std::optional<std::vector<int>> contains_pattern(const Permutation& w, const Permutation& p);

inline bool avoids(const Permutation& w, const Permutation& p)
{
    return !contains_pattern(w, p).has_value();
}

// 321-avoiding (fully commutative).
bool is_fc(const Permutation& w);

// 321- and 3412-avoiding.
bool is_boolean(const Permutation& w);

// 231-, 312- and 321-avoiding.
bool is_free(const Permutation& w);

bool cycles_are_intervals(const Permutation& w);

// Indices k such that s_k occurs in the reduced words of w: exactly those k
// for which {w(1), ..., w(k)} != {1, ..., k}. Sorted ascending.
std::vector<int> support(const Permutation& w);

}  // namespace coxdepth
