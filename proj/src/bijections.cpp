#include "coxdepth/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxdepth {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps))
{
    if (steps_.empty() || steps_.size() % 2 != 0) {
        throw std::invalid_argument("Dyck path needs a positive even number of steps");
    }
    int height = 0;
    for (char c : steps_) {
        if (c == 'N') ++height;
        else if (c == 'E') --height;
        else throw std::invalid_argument(std::string("Dyck path step must be N or E, got '") + c + "'");
        if (height < 0) throw std::invalid_argument("path '" + steps_ + "' passes below the diagonal");
    }
    if (height != 0) throw std::invalid_argument("path '" + steps_ + "' does not end at (n,n)");
}

DyckPath DyckPath::staircase(int n)
{
    std::string s;
    for (int k = 0; k < n; ++k) s += "NE";
    return DyckPath(std::move(s));
}

std::vector<std::pair<int, int>> DyckPath::outer_corners() const
{
    std::vector<std::pair<int, int>> corners;
    int x = 0;
    int y = 0;
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (steps_[k] == 'N') {
            ++y;
            if (k + 1 < steps_.size() && steps_[k + 1] == 'E') corners.emplace_back(x, y);
        } else {
            ++x;
        }
    }
    return corners;
}

namespace {

void grow(std::string& prefix, int open, int close, int n, std::vector<DyckPath>& out)
{
    if (open == n && close == n) {
        out.emplace_back(prefix);
        return;
    }
    if (open > close) {
        prefix.push_back('E');
        grow(prefix, open, close + 1, n, out);
        prefix.pop_back();
    }
    if (open < n) {
        prefix.push_back('N');
        grow(prefix, open + 1, close, n, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> all_dyck_paths(int n)
{
    std::vector<DyckPath> out;
    if (n < 1) return out;
    std::string prefix;
    grow(prefix, 0, 0, n, out);
    return out;
}

Permutation steingrimsson_phi(const Permutation& w)
{
    const int n = w.size();
    auto value_at = [&](int i) { return i == 0 ? 0 : w(i); };

    // suffix_min[j] = min of w(j+1..n)
    std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
    for (int j = n - 1; j >= 1; --j) {
        suffix_min[static_cast<std::size_t>(j)] = std::min(suffix_min[static_cast<std::size_t>(j + 1)], w(j + 1));
    }

    std::vector<int> v(static_cast<std::size_t>(n), 0);
    auto place = [&](int position, int value) {
        int& slot = v[static_cast<std::size_t>(position - 1)];
        if (slot != 0) throw std::logic_error("steingrimsson_phi: position filled twice");
        slot = value;
    };

    for (int j = 1; j <= n; ++j) {
        if (suffix_min[static_cast<std::size_t>(j)] < w(j)) {
            place(w(j + 1), w(j));
        } else {
            int i = j - 1;
            while (value_at(i) >= w(j)) --i;
            place(w(i + 1), w(j));
        }
    }
    return Permutation(std::move(v));
}

Permutation steingrimsson_phi_inverse(const Permutation& v)
{
    // phi cuts w into blocks b_1 ... b_k, each ending at its minimum, with the
    // minima increasing; each block becomes the cycle b_1 -> b_k -> b_{k-1} ->
    // ... -> b_2 -> b_1 of v. Reading each cycle of v backwards from its
    // minimum recovers the block.
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(v.size()));
    for (const auto& cycle : cycle_decomposition(v).cycles) {
        // cycle = (m, v(m), v^2(m), ...); the block is (..., v^2(m), v(m), m)
        w.insert(w.end(), cycle.rbegin(), cycle.rend() - 1);
        w.push_back(cycle.front());
    }
    return Permutation(std::move(w));
}

LeftRightMaxima lr_maxima(const Permutation& w)
{
    LeftRightMaxima out;
    int best = 0;
    for (int i = 1; i <= w.size(); ++i) {
        if (w(i) > best) {
            best = w(i);
            out.pairs.emplace_back(i, w(i));
        }
    }
    return out;
}

DyckPath dyck_of_perm(const Permutation& w)
{
    const int n = w.size();
    const auto maxima = lr_maxima(w).pairs;
    std::string steps;
    int y = 0;
    for (std::size_t k = 0; k < maxima.size(); ++k) {
        const int corner_y = maxima[k].second;
        const int next_x = (k + 1 < maxima.size()) ? maxima[k + 1].first - 1 : n;
        const int corner_x = maxima[k].first - 1;
        steps.append(static_cast<std::size_t>(corner_y - y), 'N');
        steps.append(static_cast<std::size_t>(next_x - corner_x), 'E');
        y = corner_y;
    }
    return DyckPath(std::move(steps));
}

Permutation minimal_fiber_rep(const DyckPath& p)
{
    const int n = p.semilength();
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& [x, y] : p.outer_corners()) {
        w[static_cast<std::size_t>(x)] = y;
        used[static_cast<std::size_t>(y)] = true;
    }
    int next_value = 1;
    for (auto& slot : w) {
        if (slot != 0) continue;
        while (used[static_cast<std::size_t>(next_value)]) ++next_value;
        slot = next_value++;
    }
    return Permutation(std::move(w));
}

}  // namespace coxdepth
