#include "coxdepth/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "coxdepth/bijections.hpp"
#include "coxdepth/enumeration.hpp"
#include "coxdepth/groups.hpp"
#include "coxdepth/oracle.hpp"
#include "coxdepth/patterns.hpp"
#include "coxdepth/reference_data.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

std::optional<Suite> parse_suite(std::string_view text)
{
    if (text == "all") return Suite::all;
    if (text == "core") return Suite::core;
    if (text == "bijection") return Suite::bijection;
    if (text == "oracle") return Suite::oracle;
    if (text == "patterns") return Suite::patterns;
    return std::nullopt;
}

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

namespace {

std::string range_label(int lo, int hi)
{
    return lo == hi ? "n=" + std::to_string(lo) : "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// Runs `property` on every permutation of S_1 .. S_max_n and records one
// check; the detail names the first counterexample.
void for_all_perms(VerifyReport& report, const std::string& name, int max_n,
                   const std::function<bool(const Permutation&)>& property)
{
    std::string failure;
    for (int n = 1; n <= max_n && failure.empty(); ++n) {
        for_each_permutation(n, [&](const Permutation& w) {
            if (failure.empty() && !property(w)) failure = "counterexample " + format_permutation(w);
        });
    }
    report.checks.push_back({name + " " + range_label(1, max_n), failure.empty(),
                             failure.empty() ? "exhaustive" : failure});
}

std::string join(const std::vector<std::int64_t>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

void core_suite(VerifyReport& report, int n)
{
    for_all_perms(report, "core/compose-inverse", n, [](const Permutation& w) {
        return compose(w, inverse(w)).is_identity() && compose(inverse(w), w).is_identity();
    });
    for_all_perms(report, "core/parse-format", n,
                  [](const Permutation& w) { return parse_permutation(format_permutation(w)) == w; });
    for_all_perms(report, "core/cycles-partition", n, [](const Permutation& w) {
        std::vector<int> seen;
        for (const auto& c : cycle_decomposition(w).cycles) seen.insert(seen.end(), c.begin(), c.end());
        std::sort(seen.begin(), seen.end());
        const Permutation e = Permutation::identity(w.size());
        return seen == std::vector<int>(e.window().begin(), e.window().end());
    });
    for_all_perms(report, "core/rlength<=depth<=length", n, [](const Permutation& w) {
        return reflection_length(w) <= depth(w) && depth(w) <= length(w);
    });
    for_all_perms(report, "core/depth=rlength iff length=rlength", n, [](const Permutation& w) {
        return (depth(w) == reflection_length(w)) == (length(w) == reflection_length(w));
    });
    for_all_perms(report, "core/depth(w)=depth(w^-1)", n,
                  [](const Permutation& w) { return depth(w) == depth(inverse(w)); });
    for_all_perms(report, "core/transposition-delta", n, [](const Permutation& w) {
        for (int i = 1; i <= w.size(); ++i) {
            for (int j = i + 1; j <= w.size(); ++j) {
                if (w(i) > w(j)) continue;
                const Count predicted = depth_after_transposition(w, i, j);
                if (predicted != depth(apply_transposition_right(w, {i, j})) || predicted < depth(w)) {
                    return false;
                }
            }
        }
        return true;
    });
    for_all_perms(report, "core/excedance-inversion-bound", n, [](const Permutation& w) {
        int running_max = 0;
        for (int i = 1; i <= w.size(); ++i) {
            const bool lr_max = w(i) > running_max;
            running_max = std::max(running_max, w(i));
            if (w(i) <= i) continue;
            int smaller_later = 0;
            for (int j = i + 1; j <= w.size(); ++j) smaller_later += w(j) < w(i);
            if (smaller_later < w(i) - i) return false;
            if ((smaller_later == w(i) - i) != lr_max) return false;
        }
        return true;
    });
    for_all_perms(report, "core/shallow-decomp-certificate", n, [](const Permutation& w) {
        return verify_factorization(w, shallow_decomp(w)).all_passed();
    });
    for_all_perms(report, "core/sorting-index>=depth", n, [](const Permutation& w) {
        return sorting_index(w) >= depth(w) &&
               static_cast<Count>(selection_sort_trace(w).steps.size()) == reflection_length(w);
    });

    for (int m = 1; m <= n; ++m) {
        const DepthTable table = depth_distribution(GroupKind::A(m));
        const bool extremal = table.max_value() == max_depth_bound(m) &&
                              table.counts.back() == max_depth_count(m);
        report.checks.push_back({"core/max-depth " + range_label(m, m), extremal,
                                 "max " + std::to_string(table.max_value()) + " attained " +
                                     std::to_string(table.counts.back()) + " times"});
        const auto& expected = reference::depth_row_a(m);
        report.checks.push_back({"core/depth-table-A " + range_label(m, m), table.counts == expected,
                                 join(table.counts)});
    }
}

void bijection_suite(VerifyReport& report, int n)
{
    for (int m = 1; m <= n; ++m) {
        std::set<Permutation> images;
        bool statistics = true;
        bool round_trip = true;
        for_each_permutation(m, [&](const Permutation& w) {
            const Permutation v = steingrimsson_phi(w);
            images.insert(v);
            statistics = statistics && descents(w) == excedances(v) && drop(w) == depth(v);
            round_trip = round_trip && steingrimsson_phi_inverse(v) == w &&
                         steingrimsson_phi(steingrimsson_phi_inverse(w)) == w;
        });
        report.checks.push_back({"bijection/phi-bijective " + range_label(m, m),
                                 images.size() == static_cast<std::size_t>(factorial(m)),
                                 std::to_string(images.size()) + " distinct images"});
        report.checks.push_back({"bijection/phi-des-exc-drop-dep " + range_label(m, m), statistics, "pointwise"});
        report.checks.push_back({"bijection/phi-inverse " + range_label(m, m), round_trip, "round trip"});
        const bool joint = joint_distribution(m, JointPair::drop_des).poly ==
                           joint_distribution(m, JointPair::dep_exc).poly;
        report.checks.push_back({"bijection/joint-equidistribution " + range_label(m, m), joint,
                                 "(drop,des) vs (dep,exc)"});

        const auto paths = all_dyck_paths(m);
        std::set<Permutation> reps;
        bool fiber_ok = true;
        for (const auto& p : paths) {
            const Permutation rep = minimal_fiber_rep(p);
            reps.insert(rep);
            fiber_ok = fiber_ok && dyck_of_perm(rep) == p && depth(rep) == length(rep) && is_fc(rep);
        }
        report.checks.push_back({"bijection/minimal-fiber-reps " + range_label(m, m),
                                 fiber_ok && reps.size() == paths.size() &&
                                     static_cast<std::int64_t>(paths.size()) == catalan(m),
                                 std::to_string(paths.size()) + " Dyck paths"});
    }
    for_all_perms(report, "bijection/fixed-exactly-on-321-avoiders", n, [](const Permutation& w) {
        return (minimal_fiber_rep(dyck_of_perm(w)) == w) == is_fc(w);
    });
    for_all_perms(report, "bijection/length>=depth>=lr-excess", n, [](const Permutation& w) {
        Count lr_sum = 0;
        for (const auto& [i, value] : lr_maxima(w).pairs) lr_sum += value - i;
        return length(w) >= depth(w) && depth(w) >= lr_sum;
    });
    for_all_perms(report, "bijection/non-minimal-fiber-depth<length", std::min(n, 7), [](const Permutation& w) {
        if (minimal_fiber_rep(dyck_of_perm(w)) == w) return true;
        return depth(w) < length(w);
    });
}

void oracle_suite(VerifyReport& report, int n)
{
    for (int m = 1; m <= std::min(n, kMaxA); ++m) {
        const GroupBackend backend = build_backend(GroupKind::A(m));
        const auto dep = depth_oracle(backend);
        const auto rl = reflection_length_oracle(backend);
        bool three_way = true;
        bool rlength_ok = true;
        bool length_ok = true;
        std::string first_bad;
        for (ElementIndex g = 0; g < backend.order(); ++g) {
            const Permutation w = backend.permutation(g);
            const bool agree = dep[g] == depth(w) && shallow_decomp(w).total_weight() == depth(w);
            if (!agree && first_bad.empty()) first_bad = format_permutation(w);
            three_way = three_way && agree;
            rlength_ok = rlength_ok && rl[g] == reflection_length(w);
            length_ok = length_ok && backend.length(g) == length(w);
        }
        bool reflections_ok = backend.reflections().size() == static_cast<std::size_t>(m * (m - 1) / 2);
        for (ElementIndex t : backend.reflections()) {
            const Permutation w = backend.permutation(t);
            const auto cycles = cycle_decomposition(w).cycles;
            const auto moved = std::find_if(cycles.begin(), cycles.end(), [](const auto& c) { return c.size() == 2; });
            reflections_ok = reflections_ok && moved != cycles.end() && reflection_length(w) == 1 &&
                             reflection_depth(backend, t) == (*moved)[1] - (*moved)[0];
        }
        report.checks.push_back({"oracle/three-way-depth A " + range_label(m, m), three_way,
                                 first_bad.empty() ? "formula = oracle = shallow weight" : "mismatch at " + first_bad});
        report.checks.push_back({"oracle/reflection-length A " + range_label(m, m), rlength_ok, "n - c(w)"});
        report.checks.push_back({"oracle/backend-length A " + range_label(m, m), length_ok, "inversions"});
        report.checks.push_back({"oracle/reflections A " + range_label(m, m), reflections_ok, "transpositions, depth j-i"});
    }
    for (int m = 1; m <= std::min(n, kMaxB); ++m) {
        const GroupBackend backend = build_backend(GroupKind::B(m));
        bool odd = true;
        for (ElementIndex t : backend.reflections()) odd = odd && backend.length(t) % 2 == 1;
        const DepthTable table = depth_distribution(GroupKind::B(m));
        report.checks.push_back({"oracle/reflections-odd-length B " + range_label(m, m), odd,
                                 std::to_string(backend.reflections().size()) + " reflections"});
        report.checks.push_back({"oracle/depth-table-B " + range_label(m, m),
                                 table.counts == reference::depth_row_b(m), join(table.counts)});
        report.notes.push_back("B(" + std::to_string(m) + ") observed max depth " +
                               std::to_string(table.max_value()) + "; conjectured bound C(n+1,2) = " +
                               std::to_string(binomial(m + 1, 2)));
    }
    for (int m = kMinI2; m <= kMaxI2; ++m) {
        const GroupBackend backend = build_backend(GroupKind::I2(m));
        const auto dep = depth_oracle(backend);
        BivariatePolynomial from_oracle;
        bool formula_ok = true;
        for (ElementIndex g = 0; g < backend.order(); ++g) {
            const DihedralElement e = backend.dihedral(g);
            formula_ok = formula_ok && dihedral_depth_formula(m, e) == dep[g] &&
                         dihedral_length(e) == backend.length(g);
            from_oracle.add(backend.length(g), dep[g], 1);
        }
        report.checks.push_back({"oracle/dihedral I2(" + std::to_string(m) + ")",
                                 formula_ok && from_oracle == dihedral_gf(m), from_oracle.to_string()});
    }
    for (int m = 1; m <= std::min(n, 6); ++m) {
        const GroupBackend backend = build_backend(GroupKind::A(m));
        bool ok = true;
        std::string bad;
        for (ElementIndex g = 0; g < backend.order(); ++g) {
            const Permutation w = backend.permutation(g);
            if (length(w) != reflection_length(w)) continue;
            const auto words = enumerate_min_factorizations(backend, g, static_cast<int>(length(w)));
            bool all_simple = !words.empty();
            for (const auto& word : words) {
                for (std::size_t k : word) all_simple = all_simple && backend.length(backend.reflections()[k]) == 1;
            }
            if (all_simple != is_free(w)) {
                ok = false;
                if (bad.empty()) bad = format_permutation(w);
            }
        }
        report.checks.push_back({"oracle/free-iff-all-simple-factorizations " + range_label(m, m), ok,
                                 bad.empty() ? "exhaustive over length = reflection length" : "counterexample " + bad});
    }
}

void patterns_suite(VerifyReport& report, int n)
{
    for_all_perms(report, "patterns/depth=length iff 321-avoiding", n,
                  [](const Permutation& w) { return (depth(w) == length(w)) == is_fc(w); });
    for_all_perms(report, "patterns/boolean iff length=rlength iff depth=rlength", n, [](const Permutation& w) {
        const bool b = is_boolean(w);
        return b == (length(w) == reflection_length(w)) && b == (depth(w) == reflection_length(w));
    });
    const int small = std::min(n, 7);
    for_all_perms(report, "patterns/boolean iff length=|support|", small, [](const Permutation& w) {
        return is_boolean(w) == (length(w) == static_cast<Count>(support(w).size()));
    });
    for_all_perms(report, "patterns/boolean implies interval cycles", small,
                  [](const Permutation& w) { return !is_boolean(w) || cycles_are_intervals(w); });
    for_all_perms(report, "patterns/free implies boolean with sparse support", small, [](const Permutation& w) {
        if (!is_free(w)) return true;
        const auto s = support(w);
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (s[k] == s[k - 1] + 1) return false;
        }
        return is_boolean(w);
    });
    for (int m = 1; m <= n; ++m) {
        for (auto cls : {PermClass::fc, PermClass::boolean, PermClass::free}) {
            const ClassCount c = count_class(m, cls);
            report.checks.push_back({std::string("patterns/count-") + to_string(cls) + " " + range_label(m, m),
                                     c.consistent(),
                                     std::to_string(c.exhaustive) + " vs closed form " +
                                         std::to_string(c.closed_form.value_or(-1))});
        }
        if (m >= 3) {
            const ClassCount c = count_class(m, PermClass::depth_eq, 2);
            report.checks.push_back({"patterns/count-depth2 " + range_label(m, m), c.consistent(),
                                     std::to_string(c.exhaustive)});
        }
    }
    for (int m = 1; m <= small; ++m) {
        bool ok = true;
        for (int k = 0; k < m; ++k) ok = ok && count_class(m, PermClass::boolean_by_length, k).consistent();
        report.checks.push_back({"patterns/boolean-by-length " + range_label(m, m), ok, "double sum"});
    }
}

}  // namespace

VerifyReport run_verification(int n, Suite suite)
{
    if (n < 1 || n > kMaxVerifyN) {
        throw CapExceeded("verify --n " + std::to_string(n) + " exceeds cap: n must lie in 1.." +
                          std::to_string(kMaxVerifyN));
    }
    VerifyReport report;
    if (suite == Suite::all || suite == Suite::core) core_suite(report, n);
    if (suite == Suite::all || suite == Suite::bijection) bijection_suite(report, n);
    if (suite == Suite::all || suite == Suite::oracle) oracle_suite(report, n);
    if (suite == Suite::all || suite == Suite::patterns) patterns_suite(report, n);
    return report;
}

}  // namespace coxdepth
