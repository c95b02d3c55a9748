// coxdepth: command-line access to depth statistics, decompositions, oracle
// tables and the exhaustive verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxdepth/decomp.hpp"
#include "coxdepth/enumeration.hpp"
#include "coxdepth/groups.hpp"
#include "coxdepth/oracle.hpp"
#include "coxdepth/patterns.hpp"
#include "coxdepth/permutation.hpp"
#include "coxdepth/stats.hpp"
#include "coxdepth/verify.hpp"

namespace {

using namespace coxdepth;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const char* boolstr(bool b) { return b ? "true" : "false"; }

int cmd_stat(const std::string& text, const std::string& format)
{
    const Permutation w = parse_permutation(text);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["permutation"] = format_permutation(w);
        j["depth"] = depth(w);
        j["length"] = length(w);
        j["rlength"] = reflection_length(w);
        j["drop"] = drop(w);
        j["des"] = descents(w);
        j["exc"] = excedances(w);
        j["fc"] = is_fc(w);
        j["boolean"] = is_boolean(w);
        j["free"] = is_free(w);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "depth=" << depth(w) << " length=" << length(w) << " rlength=" << reflection_length(w)
                  << " drop=" << drop(w) << " des=" << descents(w) << " exc=" << excedances(w)
                  << " fc=" << boolstr(is_fc(w)) << " boolean=" << boolstr(is_boolean(w))
                  << " free=" << boolstr(is_free(w)) << '\n';
    }
    return kExitOk;
}

std::string word(const std::vector<Transposition>& factors)
{
    if (factors.empty()) return "e";
    std::string s;
    for (const auto& t : factors) s += format_transposition(t);
    return s;
}

int cmd_decompose(const std::string& text, const std::string& method, bool trace)
{
    const Permutation w = parse_permutation(text);
    Factorization f;
    if (method == "shallow") {
        f = shallow_decomp(w);
        std::cout << "u = " << word(f.left) << "; v = " << word(f.right) << "; weight " << f.total_weight()
                  << '\n';
    } else {
        f = selection_factorization(w);
        std::cout << "w = " << word(f.factors()) << "; weight " << f.total_weight() << '\n';
    }
    std::cout << "weights:";
    for (Count c : f.depth_weights()) std::cout << ' ' << c;
    std::cout << '\n';
    if (trace) {
        std::cout << render_trace(method == "shallow" ? shallow_trace(w) : selection_sort_trace(w));
    }
    return kExitOk;
}

GroupKind group_kind(const std::string& group, std::optional<int> n, std::optional<int> m)
{
    if (group == "A" || group == "B") {
        if (!n) throw UsageError("--n is required for group " + group);
        return group == "A" ? GroupKind::A(*n) : GroupKind::B(*n);
    }
    if (!m) throw UsageError("--m is required for group I2");
    return GroupKind::I2(*m);
}

int cmd_table(const std::string& what, const std::string& group, std::optional<int> n, std::optional<int> m,
              const std::string& format_text, const std::string& pair_text, const std::string& class_text,
              int k)
{
    const TableFormat format = *parse_table_format(format_text);
    if (what == "depth") {
        std::cout << export_table(depth_distribution(group_kind(group, n, m)), format);
        return kExitOk;
    }
    if (group != "A") throw UsageError("table " + what + " is only defined for group A");
    if (!n) throw UsageError("--n is required");
    if (what == "joint") {
        const JointPair pair = pair_text == "drop-des" ? JointPair::drop_des : JointPair::dep_exc;
        std::cout << export_joint(joint_distribution(*n, pair), format);
        return kExitOk;
    }
    PermClass cls = PermClass::fc;
    if (class_text == "boolean") cls = PermClass::boolean;
    else if (class_text == "free") cls = PermClass::free;
    else if (class_text == "depth-eq") cls = PermClass::depth_eq;
    else if (class_text == "boolean-by-length") cls = PermClass::boolean_by_length;
    const ClassCount c = count_class(*n, cls, k);
    const std::string closed = c.closed_form ? std::to_string(*c.closed_form) : "none";
    switch (format) {
    case TableFormat::plain:
        std::cout << "class=" << to_string(cls) << " n=" << c.n << " k=" << c.k << " count=" << c.exhaustive
                  << " closed_form=" << closed << '\n';
        break;
    case TableFormat::csv:
        std::cout << "class,n,k,count,closed_form\n"
                  << to_string(cls) << ',' << c.n << ',' << c.k << ',' << c.exhaustive << ',' << closed << '\n';
        break;
    case TableFormat::json: {
        nlohmann::ordered_json j;
        j["class"] = to_string(cls);
        j["n"] = c.n;
        j["k"] = c.k;
        j["count"] = c.exhaustive;
        j["closed_form"] = c.closed_form ? nlohmann::ordered_json(*c.closed_form) : nlohmann::ordered_json();
        std::cout << j.dump() << '\n';
        break;
    }
    }
    if (!c.consistent()) {
        std::cerr << "closed form disagrees with exhaustive count\n";
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_verify(int n, const std::string& suite_text)
{
    const VerifyReport report = run_verification(n, *parse_suite(suite_text));
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
    for (const auto& note : report.notes) std::cout << "INFO " << note << '\n';
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const CheckEntry& c) { return !c.passed; });
    std::cout << report.checks.size() - static_cast<std::size_t>(failed) << "/" << report.checks.size()
              << " checks passed\n";
    return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_dihedral(int m)
{
    const GroupBackend backend = build_backend(GroupKind::I2(m));
    const auto dep = depth_oracle(backend);
    BivariatePolynomial from_formula;
    BivariatePolynomial from_oracle;
    for (ElementIndex g = 0; g < backend.order(); ++g) {
        const DihedralElement e = backend.dihedral(g);
        from_formula.add(dihedral_length(e), dihedral_depth_formula(m, e), 1);
        from_oracle.add(backend.length(g), dep[g], 1);
    }
    const BivariatePolynomial closed = dihedral_gf(m);
    const bool formula_ok = closed == from_formula;
    const bool oracle_ok = closed == from_oracle;
    std::cout << "I2(" << m << "): " << closed.to_string() << '\n';
    std::cout << "element formula: " << (formula_ok ? "match" : "MISMATCH " + from_formula.to_string()) << '\n';
    std::cout << "oracle: " << (oracle_ok ? "match" : "MISMATCH " + from_oracle.to_string()) << '\n';
    return formula_ok && oracle_ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Depth, length and reflection length in Coxeter groups"};
    app.require_subcommand(1);

    std::string perm_text;
    std::string format = "plain";
    auto* stat = app.add_subcommand("stat", "Statistics and class flags of a permutation");
    stat->add_option("perm", perm_text, "Permutation, e.g. 2431756 or 10,2,3,4,5,6,7,8,9,1")->required();
    stat->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

    std::string method = "shallow";
    bool trace = false;
    auto* decompose = app.add_subcommand("decompose", "Reflection factorization of a permutation");
    decompose->add_option("perm", perm_text)->required();
    decompose->add_option("--method", method)->check(CLI::IsMember({"shallow", "selection"}));
    decompose->add_flag("--trace", trace, "Print the sorting steps");

    std::string what;
    std::string group = "A";
    std::optional<int> n;
    std::optional<int> m;
    std::string pair = "dep-exc";
    std::string cls = "fc";
    int k = 0;
    auto* table = app.add_subcommand("table", "Distribution tables and class counts");
    table->add_option("what", what)->required()->check(CLI::IsMember({"depth", "joint", "class"}));
    table->add_option("--group", group)->check(CLI::IsMember({"A", "B", "I2"}));
    table->add_option("--n", n);
    table->add_option("--m", m);
    table->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));
    table->add_option("--pair", pair)->check(CLI::IsMember({"drop-des", "dep-exc"}));
    table->add_option("--class", cls)->check(
        CLI::IsMember({"fc", "boolean", "free", "depth-eq", "boolean-by-length"}));
    table->add_option("--k", k)->check(CLI::NonNegativeNumber);

    int verify_n = 0;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run the exhaustive property suites");
    verify->add_option("--n", verify_n)->required();
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "core", "bijection", "oracle", "patterns"}));

    int dihedral_m = 0;
    auto* dihedral = app.add_subcommand("dihedral", "Length/depth generating polynomial of I2(m)");
    dihedral->add_option("--m", dihedral_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*stat) return cmd_stat(perm_text, format);
        if (*decompose) return cmd_decompose(perm_text, method, trace);
        if (*table) return cmd_table(what, group, n, m, format, pair, cls, k);
        if (*verify) return cmd_verify(verify_n, suite);
        if (*dihedral) return cmd_dihedral(dihedral_m);
    } catch (const PermutationError& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
