#include "coxdepth/patterns.hpp"

#include <algorithm>

namespace coxdepth {

namespace {

bool search(const Permutation& w, const Permutation& p, int next_position, std::vector<int>& chosen)
{
    const int k = static_cast<int>(chosen.size());
    if (k == p.size()) return true;
    // leave room for the remaining pattern letters
    for (int pos = next_position; pos <= w.size() - (p.size() - k - 1); ++pos) {
        bool consistent = true;
        for (int r = 0; r < k && consistent; ++r) {
            consistent = (w(pos) < w(chosen[static_cast<std::size_t>(r)])) == (p(k + 1) < p(r + 1));
        }
        if (!consistent) continue;
        chosen.push_back(pos);
        if (search(w, p, pos + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

const Permutation p231 = parse_permutation("231");
const Permutation p312 = parse_permutation("312");
const Permutation p321 = parse_permutation("321");
const Permutation p3412 = parse_permutation("3412");

}  // namespace

std::optional<std::vector<int>> contains_pattern(const Permutation& w, const Permutation& p)
{
    if (p.size() > w.size()) return std::nullopt;
    std::vector<int> chosen;
    if (search(w, p, 1, chosen)) return chosen;
    return std::nullopt;
}

bool is_fc(const Permutation& w)
{
    return avoids(w, p321);
}

bool is_boolean(const Permutation& w)
{
    return avoids(w, p321) && avoids(w, p3412);
}

bool is_free(const Permutation& w)
{
    return avoids(w, p231) && avoids(w, p312) && avoids(w, p321);
}

bool cycles_are_intervals(const Permutation& w)
{
    for (const auto& cycle : cycle_decomposition(w).cycles) {
        const auto [lo, hi] = std::minmax_element(cycle.begin(), cycle.end());
        if (*hi - *lo + 1 != static_cast<int>(cycle.size())) return false;
    }
    return true;
}

std::vector<int> support(const Permutation& w)
{
    std::vector<int> out;
    int prefix_max = 0;
    for (int k = 1; k < w.size(); ++k) {
        prefix_max = std::max(prefix_max, w(k));
        // w(1..k) is {1..k} iff its maximum is k
        if (prefix_max != k) out.push_back(k);
    }
    return out;
}

}  // namespace coxdepth
