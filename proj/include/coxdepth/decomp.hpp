#pragma once

#include <string>
#include <vector>

#include "coxdepth/permutation.hpp"

namespace coxdepth {

enum class Side { left, right };

// A reflection factorization w = u * v where u = left[0] left[1] ... and
// v = right[0] right[1] ...
struct Factorization {
    std::vector<Transposition> left;
    std::vector<Transposition> right;

    // left factors followed by right factors, in multiplication order
    std::vector<Transposition> factors() const;
    std::vector<Side> sides() const;
    std::vector<Count> depth_weights() const;

    std::size_t size() const noexcept { return left.size() + right.size(); }
    Count total_weight() const;
    Permutation evaluate(int n) const;
};

struct SortStep {
    Permutation before;
    Transposition transposition;
    Side side;
    Permutation after;
};

struct SortTrace {
    std::vector<SortStep> steps;
};

// Straight selection sort by right multiplication: at each step the largest
// value not in its home position is swapped into place.
SortTrace selection_sort_trace(const Permutation& w);

// w = t_k ... t_1 where t_1, ..., t_k are the selection sort steps; all
// factors are recorded on the right.
Factorization selection_factorization(const Permutation& w);

Count sorting_index(const Permutation& w);

Factorization shallow_decomp(const Permutation& w);

// The peeling sequence behind shallow_decomp. Left steps are the u factors
// (value swaps), right steps are the v factors (position swaps).
SortTrace shallow_trace(const Permutation& w);

struct CheckEntry {
    std::string name;
    bool passed;
    std::string detail;
};

struct FactorizationReport {
    std::vector<CheckEntry> checks;

    bool all_passed() const;
    const CheckEntry* find(const std::string& name) const;
};

// Checks "product" (factors multiply to w), "reflection_length" (factor
// count equals n - c(w)) and "depth" (total weight equals dep(w)).
FactorizationReport verify_factorization(const Permutation& w, const Factorization& f);

// Rendering: one line per step, "<window> --(i j)[L|R]--> <window>".
std::string render_trace(const SortTrace& trace);

}  // namespace coxdepth
