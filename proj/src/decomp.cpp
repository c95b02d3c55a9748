#include "coxdepth/decomp.hpp"

#include <algorithm>
#include <sstream>

#include "coxdepth/stats.hpp"

namespace coxdepth {

std::vector<Transposition> Factorization::factors() const
{
    std::vector<Transposition> all(left);
    all.insert(all.end(), right.begin(), right.end());
    return all;
}

std::vector<Side> Factorization::sides() const
{
    std::vector<Side> out(left.size(), Side::left);
    out.insert(out.end(), right.size(), Side::right);
    return out;
}

std::vector<Count> Factorization::depth_weights() const
{
    std::vector<Count> out;
    out.reserve(size());
    for (const auto& t : factors()) out.push_back(t.weight());
    return out;
}

Count Factorization::total_weight() const
{
    Count total = 0;
    for (const auto& t : left) total += t.weight();
    for (const auto& t : right) total += t.weight();
    return total;
}

Permutation Factorization::evaluate(int n) const
{
    const auto all = factors();
    return product(n, all);
}

SortTrace selection_sort_trace(const Permutation& w)
{
    SortTrace trace;
    Permutation current = w;
    for (int value = w.size(); value >= 1; --value) {
        const auto win = current.window();
        const int pos = static_cast<int>(std::find(win.begin(), win.end(), value) - win.begin()) + 1;
        if (pos == value) continue;
        const Transposition t(pos, value);
        Permutation next = apply_transposition_right(current, t);
        trace.steps.push_back({current, t, Side::right, next});
        current = std::move(next);
    }
    return trace;
}

Factorization selection_factorization(const Permutation& w)
{
    // w * t_1 * ... * t_k = e, so w = t_k * ... * t_1.
    Factorization f;
    const auto trace = selection_sort_trace(w);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        f.right.push_back(it->transposition);
    }
    return f;
}

Count sorting_index(const Permutation& w)
{
    Count total = 0;
    for (const auto& step : selection_sort_trace(w).steps) total += step.transposition.weight();
    return total;
}

SortTrace shallow_trace(const Permutation& w)
{
    // Peels off the largest letter m = n, n-1, ..., 2. If w(m) = m the letter
    // is already home. Otherwise t_{w(m),m} * w = w * t_{w^-1(m),m} fixes m;
    // the step is recorded on the right when w(m) < w^-1(m) and on the left
    // otherwise. When w(m) = w^-1(m) the two transpositions coincide and the
    // step goes to the left factor.
    SortTrace trace;
    Permutation current = w;
    for (int m = w.size(); m >= 2; --m) {
        if (current(m) == m) continue;
        int pos = 1;
        while (current(pos) != m) ++pos;
        const int image = current(m);
        if (image < pos) {
            const Transposition t(pos, m);
            Permutation next = apply_transposition_right(current, t);
            trace.steps.push_back({current, t, Side::right, next});
            current = std::move(next);
        } else {
            const Transposition t(image, m);
            Permutation next = apply_transposition_left(t, current);
            trace.steps.push_back({current, t, Side::left, next});
            current = std::move(next);
        }
    }
    return trace;
}

Factorization shallow_decomp(const Permutation& w)
{
    // u := t * u(w') prepends at each level, so with levels visited from the
    // top down the left factors are already in order. v := v(w') * t appends,
    // so the right factors come out reversed.
    Factorization f;
    for (const auto& step : shallow_trace(w).steps) {
        if (step.side == Side::left) f.left.push_back(step.transposition);
        else f.right.push_back(step.transposition);
    }
    std::reverse(f.right.begin(), f.right.end());
    return f;
}

bool FactorizationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

const CheckEntry* FactorizationReport::find(const std::string& name) const
{
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

FactorizationReport verify_factorization(const Permutation& w, const Factorization& f)
{
    FactorizationReport report;

    bool in_range = true;
    for (const auto& t : f.factors()) in_range = in_range && t.j <= w.size();
    if (!in_range) {
        report.checks.push_back({"product", false, "factor outside 1..n"});
    } else {
        const Permutation got = f.evaluate(w.size());
        report.checks.push_back({"product", got == w,
                                 "product " + format_permutation(got) + ", expected " +
                                     format_permutation(w)});
    }

    const Count rl = reflection_length(w);
    report.checks.push_back({"reflection_length", static_cast<Count>(f.size()) == rl,
                             std::to_string(f.size()) + " factors, reflection length " +
                                 std::to_string(rl)});

    const Count dep = depth(w);
    const Count weight = f.total_weight();
    report.checks.push_back({"depth", weight == dep,
                             "weight " + std::to_string(weight) + ", depth " + std::to_string(dep)});
    return report;
}

std::string render_trace(const SortTrace& trace)
{
    std::ostringstream out;
    for (const auto& step : trace.steps) {
        out << format_permutation(step.before) << " --" << format_transposition(step.transposition)
            << (step.side == Side::left ? "[L]" : "[R]") << "--> " << format_permutation(step.after)
            << '\n';
    }
    return out.str();
}

}  // namespace coxdepth
