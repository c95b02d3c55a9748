#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coxdepth/permutation.hpp"
#include "coxdepth/polynomial.hpp"

namespace coxdepth {

// Raised when a request exceeds a documented size cap.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Element of the hyperoctahedral group B_n in window notation: w(i) is a
// nonzero integer with |w(1)|, ..., |w(n)| a rearrangement of 1..n, and
// w(-i) = -w(i).
class SignedPermutation {
public:
    explicit SignedPermutation(std::vector<int> window);

    static SignedPermutation identity(int n);

    int size() const noexcept { return static_cast<int>(window_.size()); }
    // Accepts negative arguments through w(-i) = -w(i).
    int operator()(int i) const;
    std::span<const int> window() const noexcept { return window_; }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);
// Space-separated signed integers, e.g. "-2 1 -3".
SignedPermutation parse_signed_permutation(std::string_view text);
std::string format_signed_permutation(const SignedPermutation& w);

// rho^rotation * sigma^flip in I_2(m), with rho a rotation of order m and
// sigma a reflection. The simple generators are s1 = sigma and s2 = rho sigma.
struct DihedralElement {
    int m;
    int rotation;  // 0 .. m-1
    bool flip;

    friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

DihedralElement compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement inverse(const DihedralElement& g);

// Coxeter length in I_2(m), from the rotation/flip form.
int dihedral_length(const DihedralElement& g);

enum class GroupFamily { A, B, I2 };

struct GroupKind {
    GroupFamily family;
    int parameter;  // n for A (the group S_n) and B, m for I2

    static GroupKind A(int n) { return {GroupFamily::A, n}; }
    static GroupKind B(int n) { return {GroupFamily::B, n}; }
    static GroupKind I2(int m) { return {GroupFamily::I2, m}; }

    std::string name() const;

    friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

// Size caps for build_backend.
inline constexpr int kMaxA = 8;
inline constexpr int kMaxB = 5;
inline constexpr int kMinI2 = 2;
inline constexpr int kMaxI2 = 12;

using ElementIndex = std::uint32_t;

namespace detail {

struct ModelA {
    int n;
};
struct ModelB {
    int n;
};
struct ModelI2 {
    int m;
};

using Model = std::variant<ModelA, ModelB, ModelI2>;

}  // namespace detail

// Finite Coxeter group with every element enumerated. Element indices are
// perfect ranks: lexicographic rank in type A, rank(|w|) * 2^n + sign mask in
// type B, flip * m + rotation in I_2(m).
class GroupBackend {
public:
    const GroupKind& kind() const noexcept { return kind_; }
    std::size_t order() const noexcept { return lengths_.size(); }
    ElementIndex identity() const noexcept { return identity_; }

    std::span<const ElementIndex> simple_generators() const noexcept { return simple_; }
    // Sorted by (Coxeter length, element index).
    std::span<const ElementIndex> reflections() const noexcept { return reflections_; }

    int length(ElementIndex g) const { return lengths_.at(g); }
    int max_length() const noexcept { return max_length_; }

    bool is_reflection(ElementIndex g) const;
    // Position of t in reflections(); throws std::invalid_argument otherwise.
    std::size_t reflection_position(ElementIndex t) const;

    // g * reflections()[k]
    ElementIndex multiply_reflection(ElementIndex g, std::size_t k) const
    {
        return reflection_table_[static_cast<std::size_t>(g) * reflections_.size() + k];
    }
    // g * simple_generators()[k]
    ElementIndex multiply_generator(ElementIndex g, std::size_t k) const
    {
        return generator_table_[static_cast<std::size_t>(g) * simple_.size() + k];
    }

    // s_{k1} s_{k2} ... for 1-based generator labels: type A uses s_i = (i i+1);
    // type B uses 0 for the sign change and i for (i i+1); I_2 uses 1 and 2.
    ElementIndex element_from_word(std::span<const int> generator_labels) const;

    std::string label(ElementIndex g) const;

    Permutation permutation(ElementIndex g) const;
    SignedPermutation signed_permutation(ElementIndex g) const;
    DihedralElement dihedral(ElementIndex g) const;

    ElementIndex index_of(const Permutation& w) const;
    ElementIndex index_of(const SignedPermutation& w) const;
    ElementIndex index_of(const DihedralElement& g) const;

private:
    friend GroupBackend build_backend(GroupKind kind);

    std::size_t generator_position(int label) const;

    GroupKind kind_{GroupFamily::A, 1};
    detail::Model model_;
    ElementIndex identity_ = 0;
    std::vector<ElementIndex> simple_;
    std::vector<ElementIndex> reflections_;
    std::vector<std::int32_t> reflection_position_;  // -1 for non-reflections
    std::vector<int> lengths_;
    int max_length_ = 0;
    std::vector<ElementIndex> generator_table_;
    std::vector<ElementIndex> reflection_table_;
};

// Enumerates the group, computes Coxeter length by breadth-first search over
// the simple generators and the reflection set as the conjugation closure of
// the simple generators. Throws CapExceeded outside A: 1..8, B: 1..5,
// I2: 2..12.
GroupBackend build_backend(GroupKind kind);

// (length(t) + 1) / 2 for a reflection t.
int reflection_depth(const GroupBackend& backend, ElementIndex t);

// Closed-form depth in I_2(m): (l+1)/2 for odd length l, l/2 + 1 for even
// l > 0, and 0 for the identity.
int dihedral_depth_formula(int m, const DihedralElement& g);

// sum over I_2(m) of q^length t^depth, from the closed case formulas.
BivariatePolynomial dihedral_gf(int m);

}  // namespace coxdepth
