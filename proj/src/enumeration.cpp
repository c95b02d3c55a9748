#include "coxdepth/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "coxdepth/oracle.hpp"
#include "coxdepth/patterns.hpp"
#include "coxdepth/stats.hpp"

namespace coxdepth {

const char* to_string(Statistic s)
{
    switch (s) {
    case Statistic::depth: return "depth";
    case Statistic::length: return "length";
    case Statistic::reflection_length: return "reflection_length";
    case Statistic::drop: return "drop";
    }
    return "?";
}

const char* to_string(JointPair p)
{
    return p == JointPair::drop_des ? "drop-des" : "dep-exc";
}

const char* to_string(PermClass c)
{
    switch (c) {
    case PermClass::fc: return "fc";
    case PermClass::boolean: return "boolean";
    case PermClass::free: return "free";
    case PermClass::depth_eq: return "depth-eq";
    case PermClass::boolean_by_length: return "boolean-by-length";
    }
    return "?";
}

std::int64_t DepthTable::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

namespace {

void check_enumeration_n(int n)
{
    if (n < 1 || n > kMaxEnumerationN) {
        throw CapExceeded("n=" + std::to_string(n) + " exceeds enumeration cap: n must lie in 1.." +
                          std::to_string(kMaxEnumerationN));
    }
}

void bump(std::vector<std::int64_t>& counts, Count value)
{
    const auto k = static_cast<std::size_t>(value);
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
}

Count evaluate(Statistic stat, const Permutation& w)
{
    switch (stat) {
    case Statistic::depth: return depth(w);
    case Statistic::length: return length(w);
    case Statistic::reflection_length: return reflection_length(w);
    case Statistic::drop: return drop(w);
    }
    return 0;
}

}  // namespace

DepthTable distribution_a(int n, Statistic stat)
{
    check_enumeration_n(n);
    DepthTable table{GroupKind::A(n), stat, {}};
    for_each_permutation(n, [&](const Permutation& w) { bump(table.counts, evaluate(stat, w)); });
    return table;
}

DepthTable depth_distribution(GroupKind kind)
{
    if (kind.family == GroupFamily::A) return distribution_a(kind.parameter, Statistic::depth);
    const GroupBackend backend = build_backend(kind);
    DepthTable table{kind, Statistic::depth, {}};
    for (int d : depth_oracle(backend)) bump(table.counts, d);
    return table;
}

JointTable joint_distribution(int n, JointPair pair)
{
    check_enumeration_n(n);
    JointTable table{n, pair, {}};
    for_each_permutation(n, [&](const Permutation& w) {
        if (pair == JointPair::drop_des) {
            table.poly.add(static_cast<int>(drop(w)), static_cast<int>(descents(w)), 1);
        } else {
            table.poly.add(static_cast<int>(depth(w)), static_cast<int>(excedances(w)), 1);
        }
    });
    return table;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t catalan(int n)
{
    return binomial(2 * n, n) / (n + 1);
}

std::int64_t fibonacci(int k)
{
    if (k < 0) throw std::invalid_argument("fibonacci index must be nonnegative");
    std::int64_t a = 0;  // F_0
    std::int64_t b = 1;  // F_1
    for (int i = 0; i < k; ++i) {
        const std::int64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

std::int64_t boolean_by_length_formula(int n, int k)
{
    if (k == 0) return 1;
    std::int64_t sum = 0;
    for (int i = 1; i <= k; ++i) sum += binomial(n - i, k + 1 - i) * binomial(k - 1, i - 1);
    return sum;
}

ClassCount count_class(int n, PermClass cls, int k)
{
    check_enumeration_n(n);
    ClassCount result{cls, n, k, 0, std::nullopt};
    for_each_permutation(n, [&](const Permutation& w) {
        bool member = false;
        switch (cls) {
        case PermClass::fc: member = is_fc(w); break;
        case PermClass::boolean: member = is_boolean(w); break;
        case PermClass::free: member = is_free(w); break;
        case PermClass::depth_eq: member = depth(w) == k; break;
        case PermClass::boolean_by_length: member = is_boolean(w) && length(w) == k; break;
        }
        if (member) ++result.exhaustive;
    });
    switch (cls) {
    case PermClass::fc: result.closed_form = catalan(n); break;
    case PermClass::boolean: result.closed_form = fibonacci(2 * n - 1); break;
    case PermClass::free: result.closed_form = fibonacci(n + 1); break;
    case PermClass::depth_eq:
        if (k == 0) result.closed_form = 1;
        else if (k == 1) result.closed_form = n - 1;
        else if (k == 2 && n >= 3) result.closed_form = static_cast<std::int64_t>(n + 3) * (n - 2) / 2;
        break;
    case PermClass::boolean_by_length: result.closed_form = boolean_by_length_formula(n, k); break;
    }
    return result;
}

std::optional<TableFormat> parse_table_format(std::string_view text)
{
    if (text == "plain") return TableFormat::plain;
    if (text == "csv") return TableFormat::csv;
    if (text == "json") return TableFormat::json;
    return std::nullopt;
}

namespace {

const char* family_name(GroupFamily f)
{
    switch (f) {
    case GroupFamily::A: return "A";
    case GroupFamily::B: return "B";
    case GroupFamily::I2: return "I2";
    }
    return "?";
}

GroupFamily family_from_name(const std::string& s)
{
    if (s == "A") return GroupFamily::A;
    if (s == "B") return GroupFamily::B;
    if (s == "I2") return GroupFamily::I2;
    throw std::invalid_argument("unknown group kind '" + s + "'");
}

Statistic statistic_from_name(const std::string& s)
{
    for (auto stat : {Statistic::depth, Statistic::length, Statistic::reflection_length, Statistic::drop}) {
        if (s == to_string(stat)) return stat;
    }
    throw std::invalid_argument("unknown statistic '" + s + "'");
}

}  // namespace

std::string export_table(const DepthTable& table, TableFormat format)
{
    std::ostringstream out;
    switch (format) {
    case TableFormat::plain:
        for (std::size_t k = 0; k < table.counts.size(); ++k) {
            if (k > 0) out << ' ';
            out << table.counts[k];
        }
        out << '\n';
        break;
    case TableFormat::csv:
        out << "n,k,count\n";
        for (std::size_t k = 0; k < table.counts.size(); ++k) {
            out << table.n() << ',' << k << ',' << table.counts[k] << '\n';
        }
        break;
    case TableFormat::json: {
        nlohmann::ordered_json j;
        j["kind"] = family_name(table.kind.family);
        j["stat"] = to_string(table.stat);
        j["n"] = table.n();
        j["counts"] = table.counts;
        out << j.dump() << '\n';
        break;
    }
    }
    return out.str();
}

DepthTable import_table_json(std::string_view text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        DepthTable table;
        table.kind = GroupKind{family_from_name(j.at("kind").get<std::string>()), j.at("n").get<int>()};
        table.stat = statistic_from_name(j.at("stat").get<std::string>());
        table.counts = j.at("counts").get<std::vector<std::int64_t>>();
        return table;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed table json: ") + e.what());
    }
}

std::string export_joint(const JointTable& table, TableFormat format)
{
    std::ostringstream out;
    switch (format) {
    case TableFormat::plain:
        out << table.poly.to_string() << '\n';
        break;
    case TableFormat::csv:
        out << "n,q,t,count\n";
        for (const auto& [e, c] : table.poly.terms()) {
            out << table.n << ',' << e.first << ',' << e.second << ',' << c << '\n';
        }
        break;
    case TableFormat::json: {
        nlohmann::ordered_json j;
        j["n"] = table.n;
        j["pair"] = to_string(table.pair);
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [e, c] : table.poly.terms()) terms.push_back({e.first, e.second, c});
        j["terms"] = terms;
        out << j.dump() << '\n';
        break;
    }
    }
    return out.str();
}

}  // namespace coxdepth
