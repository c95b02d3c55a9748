#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdepth/groups.hpp"
#include "coxdepth/polynomial.hpp"

namespace coxdepth {

enum class Statistic { depth, length, reflection_length, drop };

const char* to_string(Statistic s);

// counts[k] = |{w : stat(w) = k}|, dense from k = 0 to the observed maximum.
struct DepthTable {
    GroupKind kind;
    Statistic stat = Statistic::depth;
    std::vector<std::int64_t> counts;

    int n() const noexcept { return kind.parameter; }
    std::int64_t total() const;
    int max_value() const noexcept { return static_cast<int>(counts.size()) - 1; }

    friend bool operator==(const DepthTable&, const DepthTable&) = default;
};

// Type A iterates S_n directly (n <= 8); types B (n <= 5) and I2 (2 <= m <= 12)
// go through depth_oracle on the group backend.
DepthTable depth_distribution(GroupKind kind);

// Any of the four statistics over S_n, n <= 8.
DepthTable distribution_a(int n, Statistic stat);

enum class JointPair { drop_des, dep_exc };

const char* to_string(JointPair p);

// sum over S_n of q^weight t^count for (drop, des) or (dep, exc).
struct JointTable {
    int n = 0;
    JointPair pair = JointPair::dep_exc;
    BivariatePolynomial poly;
};

JointTable joint_distribution(int n, JointPair pair);

enum class PermClass { fc, boolean, free, depth_eq, boolean_by_length };

const char* to_string(PermClass c);

struct ClassCount {
    PermClass cls;
    int n = 0;
    int k = 0;  // used by depth_eq and boolean_by_length
    std::int64_t exhaustive = 0;
    std::optional<std::int64_t> closed_form;  // nullopt where no formula applies

    bool consistent() const { return !closed_form || *closed_form == exhaustive; }
};

inline constexpr int kMaxEnumerationN = 8;

// Counts the class over S_n by exhaustion and evaluates its closed form:
// Cat_n for fc, F_{2n-1} for boolean, F_{n+1} for free, (n+3)(n-2)/2 for
// depth_eq with k = 2 and n >= 3, and the binomial double sum for
// boolean_by_length. Fibonacci numbers use F_1 = F_2 = 1.
ClassCount count_class(int n, PermClass cls, int k = 0);

std::int64_t catalan(int n);
std::int64_t fibonacci(int k);
std::int64_t binomial(int n, int k);
// sum_{i=1}^{k} C(n-i, k+1-i) C(k-1, i-1); the k = 0 count is the identity alone
std::int64_t boolean_by_length_formula(int n, int k);

enum class TableFormat { plain, csv, json };

std::optional<TableFormat> parse_table_format(std::string_view text);

// plain: counts separated by spaces; csv: header "n,k,count" and one row per
// k; json: {"kind","stat","n","counts"}.
std::string export_table(const DepthTable& table, TableFormat format);
// Inverse of the json form.
DepthTable import_table_json(std::string_view text);

// plain: polynomial text; csv: header "n,q,t,count"; json: {"n","pair","terms"}.
std::string export_joint(const JointTable& table, TableFormat format);

}  // namespace coxdepth
