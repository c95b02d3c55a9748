#pragma once

#include "coxdepth/permutation.hpp"

namespace coxdepth {

// Largest n accepted by the closed-form extremal counts; (k!)^2 and n(k!)^2
// stay inside 64 bits up to here.
inline constexpr int kMaxFormulaN = 20;

// Number of inversions; equals Coxeter length in S_n.
Count length(const Permutation& w);

// n minus the number of cycles (fixed points included).
Count reflection_length(const Permutation& w);

// Sum of w(i) - i over excedances.
Count depth(const Permutation& w);

// Descent drop: sum of w(i) - w(i+1) over descents.
Count drop(const Permutation& w);

Count descents(const Permutation& w);
Count excedances(const Permutation& w);

/// Depth of w * t_ij, evaluated from dep(w) without forming the product.
/// Requires i < j and w(i) < w(j); anything else throws std::invalid_argument.
Count depth_after_transposition(const Permutation& w, int i, int j);

// floor(n^2 / 4)
Count max_depth_bound(int n);
// Number of permutations in S_n attaining max_depth_bound(n).
Count max_depth_count(int n);

}  // namespace coxdepth
