#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coxdepth {

using Count = std::int64_t;

enum class PermErrc {
    empty,
    malformed_token,
    repeated_value,
    value_out_of_range,
    size_mismatch,
    position_out_of_range,
};

const char* to_string(PermErrc code);

class PermutationError : public std::invalid_argument {
public:
    PermutationError(PermErrc code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    PermErrc code() const noexcept { return code_; }

private:
    PermErrc code_;
};

// The transposition t_ij, exchanging i and j. Always stored with i < j.
struct Transposition {
    int i;
    int j;

    Transposition(int a, int b);

    int weight() const noexcept { return j - i; }
    bool is_simple() const noexcept { return j == i + 1; }

    friend bool operator==(const Transposition&, const Transposition&) = default;
    friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

// A bijection of [n] in one-line notation. Positions and values are 1-indexed
// on the whole public surface: w(i) for 1 <= i <= n.
class Permutation {
public:
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation from_transposition(int n, Transposition t);

    int size() const noexcept { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> window() const noexcept { return window_; }

    bool is_identity() const noexcept;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> window_;
};

struct CycleDecomposition {
    // Each cycle starts at its minimum; cycles are sorted by minimum. Fixed
    // points appear as singletons.
    std::vector<std::vector<int>> cycles;

    std::size_t count() const noexcept { return cycles.size(); }
};

// (a*b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& w);
CycleDecomposition cycle_decomposition(const Permutation& w);

// w * t_ij: exchanges the entries in positions i and j.
Permutation apply_transposition_right(const Permutation& w, Transposition t);
// t_ij * w: exchanges the values i and j.
Permutation apply_transposition_left(Transposition t, const Permutation& w);

// Product t_1 t_2 ... t_k as a permutation of [n].
Permutation product(int n, std::span<const Transposition> factors);

// Accepts contiguous digits ("2431756", only meaningful for n <= 9) or
// integers separated by commas and/or whitespace ("10,2,3,4,5,6,7,8,9,1").
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);

std::string format_transposition(Transposition t);

// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

Count factorial(int n);
// Position of w in the lexicographic order of S_n.
std::size_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::size_t rank);

}  // namespace coxdepth
