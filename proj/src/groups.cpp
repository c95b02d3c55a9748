#include "coxdepth/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace coxdepth {

// ---------------------------------------------------------------- B_n values

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window))
{
    if (window_.empty()) throw PermutationError(PermErrc::empty, "signed permutation must have n >= 1");
    const int n = size();
    std::vector<bool> seen(window_.size() + 1, false);
    for (int v : window_) {
        const int a = std::abs(v);
        if (a < 1 || a > n) {
            throw PermutationError(PermErrc::value_out_of_range,
                                   "signed value " + std::to_string(v) + " outside +-1..+-" +
                                       std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(a)]) {
            throw PermutationError(PermErrc::repeated_value,
                                   "absolute value " + std::to_string(a) + " appears more than once");
        }
        seen[static_cast<std::size_t>(a)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(w.begin(), w.end(), 1);
    return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const
{
    const int v = window_.at(static_cast<std::size_t>(std::abs(i) - 1));
    return i < 0 ? -v : v;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b)
{
    if (a.size() != b.size()) {
        throw PermutationError(PermErrc::size_mismatch, "signed permutations differ in size");
    }
    std::vector<int> out(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
    return SignedPermutation(std::move(out));
}

SignedPermutation inverse(const SignedPermutation& w)
{
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) {
        const int v = w(i);
        out[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? -i : i;
    }
    return SignedPermutation(std::move(out));
}

SignedPermutation parse_signed_permutation(std::string_view text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        std::string_view token = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw PermutationError(PermErrc::malformed_token, "malformed token '" + std::string(token) + "'");
        }
        values.push_back(value);
        pos = end;
    }
    if (values.empty()) throw PermutationError(PermErrc::empty, "empty signed permutation text");
    return SignedPermutation(std::move(values));
}

std::string format_signed_permutation(const SignedPermutation& w)
{
    std::ostringstream out;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) out << ' ';
        out << w(i);
    }
    return out.str();
}

// ----------------------------------------------------------- I_2(m) values

DihedralElement compose(const DihedralElement& a, const DihedralElement& b)
{
    // sigma rho^k = rho^-k sigma
    const int m = a.m;
    const int shift = a.flip ? (m - b.rotation) % m : b.rotation;
    return {m, (a.rotation + shift) % m, a.flip != b.flip};
}

DihedralElement inverse(const DihedralElement& g)
{
    if (g.flip) return g;
    return {g.m, (g.m - g.rotation) % g.m, false};
}

int dihedral_length(const DihedralElement& g)
{
    const int k = g.rotation;
    if (!g.flip) return 2 * std::min(k, g.m - k);
    // rho^k sigma: s2 s1 s2 ... (k >= 1) or s1 s2 s1 ... (going the other way)
    return std::min(std::abs(2 * k - 1), 2 * (g.m - k) + 1);
}

// ------------------------------------------------------------------ kinds

std::string GroupKind::name() const
{
    switch (family) {
    case GroupFamily::A: return "A(" + std::to_string(parameter) + ")";
    case GroupFamily::B: return "B(" + std::to_string(parameter) + ")";
    case GroupFamily::I2: return "I2(" + std::to_string(parameter) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- models

namespace {

using detail::ModelA;
using detail::ModelB;
using detail::ModelI2;

struct ModelOps {
    static std::size_t order(const ModelA& a) { return static_cast<std::size_t>(factorial(a.n)); }
    static std::size_t order(const ModelB& b)
    {
        return static_cast<std::size_t>(factorial(b.n)) << static_cast<unsigned>(b.n);
    }
    static std::size_t order(const ModelI2& d) { return 2 * static_cast<std::size_t>(d.m); }

    static Permutation unrank(const ModelA& a, std::size_t r) { return lex_unrank(a.n, r); }
    static SignedPermutation unrank(const ModelB& b, std::size_t r)
    {
        const std::size_t mask = r & ((std::size_t{1} << static_cast<unsigned>(b.n)) - 1);
        const Permutation base = lex_unrank(b.n, r >> static_cast<unsigned>(b.n));
        std::vector<int> w(base.window().begin(), base.window().end());
        for (int i = 0; i < b.n; ++i) {
            if (mask & (std::size_t{1} << static_cast<unsigned>(i))) w[static_cast<std::size_t>(i)] *= -1;
        }
        return SignedPermutation(std::move(w));
    }
    static DihedralElement unrank(const ModelI2& d, std::size_t r)
    {
        return {d.m, static_cast<int>(r % static_cast<std::size_t>(d.m)), r >= static_cast<std::size_t>(d.m)};
    }

    static std::size_t rank(const ModelA&, const Permutation& w) { return lex_rank(w); }
    static std::size_t rank(const ModelB& b, const SignedPermutation& w)
    {
        std::vector<int> abs_window;
        std::size_t mask = 0;
        for (int i = 1; i <= w.size(); ++i) {
            abs_window.push_back(std::abs(w(i)));
            if (w(i) < 0) mask |= std::size_t{1} << static_cast<unsigned>(i - 1);
        }
        return (lex_rank(Permutation(std::move(abs_window))) << static_cast<unsigned>(b.n)) | mask;
    }
    static std::size_t rank(const ModelI2& d, const DihedralElement& g)
    {
        return static_cast<std::size_t>(g.rotation) + (g.flip ? static_cast<std::size_t>(d.m) : 0);
    }

    static Permutation identity(const ModelA& a) { return Permutation::identity(a.n); }
    static SignedPermutation identity(const ModelB& b) { return SignedPermutation::identity(b.n); }
    static DihedralElement identity(const ModelI2& d) { return {d.m, 0, false}; }

    static std::vector<Permutation> generators(const ModelA& a)
    {
        std::vector<Permutation> gens;
        for (int i = 1; i < a.n; ++i) gens.push_back(Permutation::from_transposition(a.n, {i, i + 1}));
        return gens;
    }
    static std::vector<SignedPermutation> generators(const ModelB& b)
    {
        std::vector<SignedPermutation> gens;
        std::vector<int> s0(static_cast<std::size_t>(b.n));
        std::iota(s0.begin(), s0.end(), 1);
        s0[0] = -1;
        gens.emplace_back(s0);
        for (int i = 1; i < b.n; ++i) {
            std::vector<int> s(static_cast<std::size_t>(b.n));
            std::iota(s.begin(), s.end(), 1);
            std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
            gens.emplace_back(std::move(s));
        }
        return gens;
    }
    static std::vector<DihedralElement> generators(const ModelI2& d)
    {
        return {{d.m, 0, true}, {d.m, 1 % d.m, true}};
    }

    static std::string label(const Permutation& w) { return format_permutation(w); }
    static std::string label(const SignedPermutation& w) { return format_signed_permutation(w); }
    static std::string label(const DihedralElement& g)
    {
        // shortest word, starting with s1 on ties
        const int len = dihedral_length(g);
        if (len == 0) return "e";
        std::string word;
        for (int first : {1, 2}) {
            word.clear();
            DihedralElement acc{g.m, 0, false};
            int next = first;
            for (int k = 0; k < len; ++k) {
                acc = compose(acc, DihedralElement{g.m, next == 1 ? 0 : 1 % g.m, true});
                word += "s" + std::to_string(next);
                next = 3 - next;
            }
            if (acc == g) return word;
        }
        return word;
    }
};

template <class Model>
void populate(const Model& model, std::vector<ElementIndex>& simple,
              std::vector<ElementIndex>& reflections, std::vector<int>& lengths,
              std::vector<ElementIndex>& generator_table, std::vector<ElementIndex>& reflection_table,
              ElementIndex& identity)
{
    const std::size_t order = ModelOps::order(model);
    using Element = decltype(ModelOps::unrank(model, 0));
    std::vector<Element> elements;
    elements.reserve(order);
    for (std::size_t r = 0; r < order; ++r) elements.push_back(ModelOps::unrank(model, r));

    identity = static_cast<ElementIndex>(ModelOps::rank(model, ModelOps::identity(model)));
    const auto gens = ModelOps::generators(model);
    simple.clear();
    for (const auto& s : gens) simple.push_back(static_cast<ElementIndex>(ModelOps::rank(model, s)));

    generator_table.assign(order * gens.size(), 0);
    for (std::size_t g = 0; g < order; ++g) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            generator_table[g * gens.size() + k] =
                static_cast<ElementIndex>(ModelOps::rank(model, compose(elements[g], gens[k])));
        }
    }

    lengths.assign(order, -1);
    std::deque<ElementIndex> queue{identity};
    lengths[identity] = 0;
    while (!queue.empty()) {
        const ElementIndex g = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const ElementIndex h = generator_table[g * gens.size() + k];
            if (lengths[h] < 0) {
                lengths[h] = lengths[g] + 1;
                queue.push_back(h);
            }
        }
    }

    std::vector<bool> is_reflection(order, false);
    for (std::size_t g = 0; g < order; ++g) {
        const Element g_inv = inverse(elements[g]);
        for (const auto& s : gens) {
            is_reflection[ModelOps::rank(model, compose(compose(elements[g], s), g_inv))] = true;
        }
    }
    reflections.clear();
    for (std::size_t g = 0; g < order; ++g) {
        if (is_reflection[g]) reflections.push_back(static_cast<ElementIndex>(g));
    }
    std::stable_sort(reflections.begin(), reflections.end(),
                     [&](ElementIndex a, ElementIndex b) { return lengths[a] < lengths[b]; });

    reflection_table.assign(order * reflections.size(), 0);
    for (std::size_t g = 0; g < order; ++g) {
        for (std::size_t k = 0; k < reflections.size(); ++k) {
            reflection_table[g * reflections.size() + k] = static_cast<ElementIndex>(
                ModelOps::rank(model, compose(elements[g], elements[reflections[k]])));
        }
    }
}

[[noreturn]] void wrong_family(const GroupKind& kind, const char* wanted)
{
    throw std::invalid_argument(kind.name() + " backend does not hold " + wanted);
}

}  // namespace

// ---------------------------------------------------------------- backend

GroupBackend build_backend(GroupKind kind)
{
    auto cap = [&](int lo, int hi) {
        if (kind.parameter < lo || kind.parameter > hi) {
            throw CapExceeded(kind.name() + " exceeds cap: parameter must lie in " + std::to_string(lo) +
                              ".." + std::to_string(hi));
        }
    };
    GroupBackend b;
    b.kind_ = kind;
    switch (kind.family) {
    case GroupFamily::A:
        cap(1, kMaxA);
        b.model_ = ModelA{kind.parameter};
        break;
    case GroupFamily::B:
        cap(1, kMaxB);
        b.model_ = ModelB{kind.parameter};
        break;
    case GroupFamily::I2:
        cap(kMinI2, kMaxI2);
        b.model_ = ModelI2{kind.parameter};
        break;
    }
    std::visit(
        [&](const auto& model) {
            populate(model, b.simple_, b.reflections_, b.lengths_, b.generator_table_,
                     b.reflection_table_, b.identity_);
        },
        b.model_);
    b.max_length_ = *std::max_element(b.lengths_.begin(), b.lengths_.end());
    b.reflection_position_.assign(b.lengths_.size(), -1);
    for (std::size_t k = 0; k < b.reflections_.size(); ++k) {
        b.reflection_position_[b.reflections_[k]] = static_cast<std::int32_t>(k);
    }
    return b;
}

bool GroupBackend::is_reflection(ElementIndex g) const
{
    return reflection_position_.at(g) >= 0;
}

std::size_t GroupBackend::reflection_position(ElementIndex t) const
{
    if (!is_reflection(t)) throw std::invalid_argument(label(t) + " is not a reflection");
    return static_cast<std::size_t>(reflection_position_[t]);
}

std::size_t GroupBackend::generator_position(int label) const
{
    int pos = -1;
    switch (kind_.family) {
    case GroupFamily::A: pos = label - 1; break;
    case GroupFamily::B: pos = label; break;
    case GroupFamily::I2: pos = label - 1; break;
    }
    if (pos < 0 || pos >= static_cast<int>(simple_.size())) {
        throw std::invalid_argument("no simple generator s" + std::to_string(label) + " in " + kind_.name());
    }
    return static_cast<std::size_t>(pos);
}

ElementIndex GroupBackend::element_from_word(std::span<const int> generator_labels) const
{
    ElementIndex g = identity_;
    for (int label : generator_labels) g = multiply_generator(g, generator_position(label));
    return g;
}

std::string GroupBackend::label(ElementIndex g) const
{
    return std::visit([&](const auto& model) { return ModelOps::label(ModelOps::unrank(model, g)); },
                      model_);
}

Permutation GroupBackend::permutation(ElementIndex g) const
{
    if (const auto* a = std::get_if<ModelA>(&model_)) return ModelOps::unrank(*a, g);
    wrong_family(kind_, "permutations");
}

SignedPermutation GroupBackend::signed_permutation(ElementIndex g) const
{
    if (const auto* b = std::get_if<ModelB>(&model_)) return ModelOps::unrank(*b, g);
    wrong_family(kind_, "signed permutations");
}

DihedralElement GroupBackend::dihedral(ElementIndex g) const
{
    if (const auto* d = std::get_if<ModelI2>(&model_)) return ModelOps::unrank(*d, g);
    wrong_family(kind_, "dihedral elements");
}

ElementIndex GroupBackend::index_of(const Permutation& w) const
{
    const auto* a = std::get_if<ModelA>(&model_);
    if (a == nullptr) wrong_family(kind_, "permutations");
    if (w.size() != a->n) throw PermutationError(PermErrc::size_mismatch, "permutation size differs from backend");
    return static_cast<ElementIndex>(ModelOps::rank(*a, w));
}

ElementIndex GroupBackend::index_of(const SignedPermutation& w) const
{
    const auto* b = std::get_if<ModelB>(&model_);
    if (b == nullptr) wrong_family(kind_, "signed permutations");
    if (w.size() != b->n) throw PermutationError(PermErrc::size_mismatch, "signed permutation size differs from backend");
    return static_cast<ElementIndex>(ModelOps::rank(*b, w));
}

ElementIndex GroupBackend::index_of(const DihedralElement& g) const
{
    const auto* d = std::get_if<ModelI2>(&model_);
    if (d == nullptr) wrong_family(kind_, "dihedral elements");
    if (g.m != d->m || g.rotation < 0 || g.rotation >= g.m) {
        throw std::invalid_argument("dihedral element does not belong to " + kind_.name());
    }
    return static_cast<ElementIndex>(ModelOps::rank(*d, g));
}

int reflection_depth(const GroupBackend& backend, ElementIndex t)
{
    if (!backend.is_reflection(t)) {
        throw std::invalid_argument(backend.label(t) + " is not a reflection of " + backend.kind().name());
    }
    return (backend.length(t) + 1) / 2;
}

// ---------------------------------------------------------------- dihedral

int dihedral_depth_formula(int m, const DihedralElement& g)
{
    if (g.m != m) throw std::invalid_argument("element is not in I2(" + std::to_string(m) + ")");
    const int len = dihedral_length(g);
    if (len == 0) return 0;
    return len % 2 == 1 ? (len + 1) / 2 : len / 2 + 1;
}

BivariatePolynomial dihedral_gf(int m)
{
    if (m < 2) throw std::invalid_argument("dihedral_gf needs finite m >= 2");
    BivariatePolynomial gf;
    gf.add(0, 0, 1);
    gf.add(1, 1, 2);
    // 2(1+q) t sum_i q^{2i} t^i, over i = 1..m/2-1 (even) or 1..(m-3)/2 (odd)
    const int upper = (m % 2 == 0) ? m / 2 - 1 : (m - 3) / 2;
    for (int i = 1; i <= upper; ++i) {
        gf.add(2 * i, i + 1, 2);
        gf.add(2 * i + 1, i + 1, 2);
    }
    if (m % 2 == 0) {
        gf.add(m, m / 2 + 1, 1);
    } else {
        // q^{m-1} t^{(m+1)/2} (2 + q)
        gf.add(m - 1, (m + 1) / 2, 2);
        gf.add(m, (m + 1) / 2, 1);
    }
    return gf;
}

}  // namespace coxdepth
