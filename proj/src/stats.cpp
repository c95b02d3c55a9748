#include "coxdepth/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coxdepth {

namespace {

void check_formula_n(int n)
{
    if (n < 1 || n > kMaxFormulaN) {
        throw std::out_of_range("n=" + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxFormulaN));
    }
}

}  // namespace

Count length(const Permutation& w)
{
    Count inv = 0;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w(i) > w(j)) ++inv;
        }
    }
    return inv;
}

Count reflection_length(const Permutation& w)
{
    return w.size() - static_cast<Count>(cycle_decomposition(w).count());
}

Count depth(const Permutation& w)
{
    Count d = 0;
    for (int i = 1; i <= w.size(); ++i) {
        if (w(i) > i) d += w(i) - i;
    }
    return d;
}

Count drop(const Permutation& w)
{
    Count d = 0;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) d += w(i) - w(i + 1);
    }
    return d;
}

Count descents(const Permutation& w)
{
    Count d = 0;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) ++d;
    }
    return d;
}

Count excedances(const Permutation& w)
{
    Count e = 0;
    for (int i = 1; i <= w.size(); ++i) {
        if (w(i) > i) ++e;
    }
    return e;
}

Count depth_after_transposition(const Permutation& w, int i, int j)
{
    if (!(1 <= i && i < j && j <= w.size())) {
        throw std::invalid_argument("positions must satisfy 1 <= i < j <= n");
    }
    const int wi = w(i);
    const int wj = w(j);
    if (wi > wj) {
        throw std::invalid_argument("precondition w(i) < w(j) fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    }
    const Count base = depth(w);
    if (j <= wi || wj < i) return base;
    return base + std::min(wj, j) - std::max(wi, i);
}

Count max_depth_bound(int n)
{
    check_formula_n(n);
    return static_cast<Count>(n) * n / 4;
}

Count max_depth_count(int n)
{
    check_formula_n(n);
    const int k = n / 2;
    const Count kf = factorial(k);
    return (n % 2 == 0) ? kf * kf : n * kf * kf;
}

}  // namespace coxdepth
