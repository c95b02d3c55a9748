#include "coxdepth/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace coxdepth {

const char* to_string(PermErrc code)
{
    switch (code) {
    case PermErrc::empty: return "empty";
    case PermErrc::malformed_token: return "malformed token";
    case PermErrc::repeated_value: return "repeated value";
    case PermErrc::value_out_of_range: return "value out of range";
    case PermErrc::size_mismatch: return "size mismatch";
    case PermErrc::position_out_of_range: return "position out of range";
    }
    return "unknown";
}

Transposition::Transposition(int a, int b)
    : i(std::min(a, b)), j(std::max(a, b))
{
    if (i < 1 || i == j) {
        throw PermutationError(PermErrc::position_out_of_range,
                               "transposition needs two distinct positive positions, got (" +
                                   std::to_string(a) + " " + std::to_string(b) + ")");
    }
}

namespace {

void validate_window(const std::vector<int>& window)
{
    if (window.empty()) {
        throw PermutationError(PermErrc::empty, "permutation must have n >= 1");
    }
    const int n = static_cast<int>(window.size());
    std::vector<bool> seen(window.size() + 1, false);
    for (int v : window) {
        if (v < 1 || v > n) {
            throw PermutationError(PermErrc::value_out_of_range,
                                   "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw PermutationError(PermErrc::repeated_value,
                                   "value " + std::to_string(v) + " appears more than once");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

void check_transposition(int n, Transposition t)
{
    if (t.j > n) {
        throw PermutationError(PermErrc::position_out_of_range,
                               format_transposition(t) + " out of range for n=" + std::to_string(n));
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window))
{
    validate_window(window_);
}

Permutation Permutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_transposition(int n, Transposition t)
{
    return apply_transposition_right(identity(n), t);
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t k = 0; k < window_.size(); ++k) {
        if (window_[k] != static_cast<int>(k + 1)) return false;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size()) {
        throw PermutationError(PermErrc::size_mismatch,
                               "cannot compose permutations of sizes " + std::to_string(a.size()) +
                                   " and " + std::to_string(b.size()));
    }
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(out));
}

Permutation inverse(const Permutation& w)
{
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(out));
}

CycleDecomposition cycle_decomposition(const Permutation& w)
{
    CycleDecomposition result;
    std::vector<bool> visited(static_cast<std::size_t>(w.size()) + 1, false);
    // Scanning starts in increasing order, so every cycle begins at its minimum
    // and cycles come out sorted by minimum.
    for (int start = 1; start <= w.size(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int x = start; !visited[static_cast<std::size_t>(x)]; x = w(x)) {
            visited[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
        }
        result.cycles.push_back(std::move(cycle));
    }
    return result;
}

Permutation apply_transposition_right(const Permutation& w, Transposition t)
{
    check_transposition(w.size(), t);
    std::vector<int> out(w.window().begin(), w.window().end());
    std::swap(out[static_cast<std::size_t>(t.i - 1)], out[static_cast<std::size_t>(t.j - 1)]);
    return Permutation(std::move(out));
}

Permutation apply_transposition_left(Transposition t, const Permutation& w)
{
    check_transposition(w.size(), t);
    std::vector<int> out(w.window().begin(), w.window().end());
    for (int& v : out) {
        if (v == t.i) v = t.j;
        else if (v == t.j) v = t.i;
    }
    return Permutation(std::move(out));
}

Permutation product(int n, std::span<const Transposition> factors)
{
    // t_1 ... t_k = e * t_1 * ... * t_k, built by right multiplication.
    Permutation acc = Permutation::identity(n);
    for (const auto& t : factors) acc = apply_transposition_right(acc, t);
    return acc;
}

Permutation parse_permutation(std::string_view text)
{
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw PermutationError(PermErrc::empty, "empty permutation text");

    std::vector<int> values;
    const bool separated = std::any_of(text.begin(), text.end(), is_sep);
    if (!separated) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw PermutationError(PermErrc::malformed_token,
                                       std::string("unexpected character '") + c + "'");
            }
            values.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && is_sep(text[pos])) ++pos;
            if (pos == text.size()) break;
            std::size_t end = pos;
            while (end < text.size() && !is_sep(text[end])) ++end;
            std::string_view token = text.substr(pos, end - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec == std::errc::result_out_of_range) {
                throw PermutationError(PermErrc::value_out_of_range,
                                       "value '" + std::string(token) + "' is too large");
            }
            if (ec != std::errc() || ptr != token.data() + token.size() || token.front() == '-' ||
                token.front() == '+') {
                throw PermutationError(PermErrc::malformed_token,
                                       "malformed token '" + std::string(token) + "'");
            }
            values.push_back(value);
            pos = end;
        }
    }
    return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& w)
{
    std::ostringstream out;
    for (int i = 1; i <= w.size(); ++i) {
        if (w.size() > 9 && i > 1) out << ',';
        out << w(i);
    }
    return out.str();
}

std::string format_transposition(Transposition t)
{
    return "(" + std::to_string(t.i) + " " + std::to_string(t.j) + ")";
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit)
{
    std::vector<int> window(static_cast<std::size_t>(n));
    std::iota(window.begin(), window.end(), 1);
    do {
        visit(Permutation(window));
    } while (std::next_permutation(window.begin(), window.end()));
}

Count factorial(int n)
{
    Count f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::size_t lex_rank(const Permutation& w)
{
    const int n = w.size();
    std::size_t rank = 0;
    for (int i = 1; i <= n; ++i) {
        std::size_t smaller_later = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (w(j) < w(i)) ++smaller_later;
        }
        rank += smaller_later * static_cast<std::size_t>(factorial(n - i));
    }
    return rank;
}

Permutation lex_unrank(int n, std::size_t rank)
{
    if (n < 1 || rank >= static_cast<std::size_t>(factorial(n))) {
        throw std::out_of_range("rank " + std::to_string(rank) + " outside S_" + std::to_string(n));
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(pool.size());
    for (int i = 1; i <= n; ++i) {
        const auto block = static_cast<std::size_t>(factorial(n - i));
        const std::size_t pick = rank / block;
        rank %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(out));
}

}  // namespace coxdepth
