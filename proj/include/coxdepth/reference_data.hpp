#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Reference depth distributions and small-group statistics, used as golden
// values by `coxdepth verify` and the test suites.
namespace coxdepth::reference {

// |{w in S_n : dep(w) = k}|, n = 1..8.
const std::vector<std::int64_t>& depth_row_a(int n);

// |{w in B_n : dep(w) = k}|, n = 1..5.
const std::vector<std::int64_t>& depth_row_b(int n);

struct StatTriple {
    std::string element;  // one-line permutation, or a word like "s1s2s1" for I2(6)
    int reflection_length;
    int depth;
    int length;
};

const std::vector<StatTriple>& small_group_rows_s3();
const std::vector<StatTriple>& small_group_rows_s4();
const std::vector<StatTriple>& small_group_rows_g2();

}  // namespace coxdepth::reference
