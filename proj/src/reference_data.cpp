#include "coxdepth/reference_data.hpp"

#include <stdexcept>

namespace coxdepth::reference {

const std::vector<std::int64_t>& depth_row_a(int n)
{
    static const std::vector<std::vector<std::int64_t>> rows = {
        {1},
        {1, 1},
        {1, 2, 3},
        {1, 3, 7, 9, 4},
        {1, 4, 12, 24, 35, 24, 20},
        {1, 5, 18, 46, 93, 137, 148, 136, 100, 36},
        {1, 6, 25, 76, 187, 366, 591, 744, 884, 832, 716, 360, 252},
        {1, 7, 33, 115, 327, 765, 1523, 2553, 3696, 4852, 5708, 5892, 5452, 4212, 2844, 1764, 576},
    };
    if (n < 1 || n > static_cast<int>(rows.size())) throw std::out_of_range("no reference row for S_n");
    return rows[static_cast<std::size_t>(n - 1)];
}

const std::vector<std::int64_t>& depth_row_b(int n)
{
    static const std::vector<std::vector<std::int64_t>> rows = {
        {1, 1},
        {1, 2, 3, 2},
        {1, 3, 7, 12, 16, 8, 1},
        {1, 4, 12, 28, 53, 70, 89, 54, 60, 12, 1},
        {1, 5, 18, 51, 118, 215, 347, 456, 594, 558, 505, 466, 325, 164, 16, 1},
    };
    if (n < 1 || n > static_cast<int>(rows.size())) throw std::out_of_range("no reference row for B_n");
    return rows[static_cast<std::size_t>(n - 1)];
}

const std::vector<StatTriple>& small_group_rows_s3()
{
    static const std::vector<StatTriple> rows = {
        {"123", 0, 0, 0}, {"213", 1, 1, 1}, {"132", 1, 1, 1},
        {"312", 2, 2, 2}, {"231", 2, 2, 2}, {"321", 1, 2, 3},
    };
    return rows;
}

const std::vector<StatTriple>& small_group_rows_s4()
{
    static const std::vector<StatTriple> rows = {
        {"1234", 0, 0, 0}, {"2134", 1, 1, 1}, {"1324", 1, 1, 1}, {"1243", 1, 1, 1},
        {"2314", 2, 2, 2}, {"2143", 2, 2, 2}, {"3124", 2, 2, 2}, {"1342", 2, 2, 2},
        {"1423", 2, 2, 2}, {"3214", 1, 2, 3}, {"1432", 1, 2, 3}, {"2341", 3, 3, 3},
        {"2413", 3, 3, 3}, {"3142", 3, 3, 3}, {"4123", 3, 3, 3}, {"3241", 2, 3, 4},
        {"2431", 2, 3, 4}, {"4132", 2, 3, 4}, {"4213", 2, 3, 4}, {"3412", 2, 4, 4},
        {"4231", 1, 3, 5}, {"4312", 3, 4, 5}, {"3421", 3, 4, 5}, {"4321", 2, 4, 6},
    };
    return rows;
}

const std::vector<StatTriple>& small_group_rows_g2()
{
    static const std::vector<StatTriple> rows = {
        {"e", 0, 0, 0},
        {"s1", 1, 1, 1},
        {"s2", 1, 1, 1},
        {"s1s2", 2, 2, 2},
        {"s2s1", 2, 2, 2},
        {"s1s2s1", 1, 2, 3},
        {"s2s1s2", 1, 2, 3},
        {"s1s2s1s2", 2, 3, 4},
        {"s2s1s2s1", 2, 3, 4},
        {"s1s2s1s2s1", 1, 3, 5},
        {"s2s1s2s1s2", 1, 3, 5},
        {"s1s2s1s2s1s2", 2, 4, 6},
    };
    return rows;
}

}  // namespace coxdepth::reference
