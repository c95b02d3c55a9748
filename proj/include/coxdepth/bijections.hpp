#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxdepth/permutation.hpp"

namespace coxdepth {

// Lattice path from (0,0) to (n,n) with North/East steps that never passes
// below y = x. Text form is the step string, e.g. "NNENEENE".
class DyckPath {
public:
    // Throws std::invalid_argument for anything that is not a Dyck path.
    explicit DyckPath(std::string steps);

    static DyckPath staircase(int n);

    int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
    const std::string& steps() const noexcept { return steps_; }

    // Points (x, y) where a North step is followed by an East step, in path order.
    std::vector<std::pair<int, int>> outer_corners() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

private:
    std::string steps_;
};

// All Dyck paths of semilength n in lexicographic order of step strings.
std::vector<DyckPath> all_dyck_paths(int n);

// Pairs (i, w(i)) with w(i) larger than every earlier value.
struct LeftRightMaxima {
    std::vector<std::pair<int, int>> pairs;
};

// Steingrimsson's bijection: carries descents to excedances and descent drop
// to depth.
Permutation steingrimsson_phi(const Permutation& w);
Permutation steingrimsson_phi_inverse(const Permutation& v);

LeftRightMaxima lr_maxima(const Permutation& w);

// Dyck path with outer corners at (i-1, w(i)) for the left-right maxima of w.
DyckPath dyck_of_perm(const Permutation& w);

// The unique shortest element of the fiber over p: left-right maxima at the
// outer corners of p, all other values filled in increasing order.
Permutation minimal_fiber_rep(const DyckPath& p);

}  // namespace coxdepth
