#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace coxdepth {

// Integer polynomial in q and t, stored sparsely. Zero coefficients are never
// kept, so two polynomials compare equal iff their term maps are equal.
class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;  // (q degree, t degree)

    void add(int q_degree, int t_degree, std::int64_t coefficient);
    std::int64_t coefficient(int q_degree, int t_degree) const;

    // sum of all coefficients, i.e. the value at q = t = 1
    std::int64_t total() const;
    int max_q_degree() const;
    int max_t_degree() const;
    bool empty() const noexcept { return terms_.empty(); }

    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    static BivariatePolynomial monomial(int q_degree, int t_degree, std::int64_t coefficient = 1);

    // "1 + 2qt + 2q^2t^2", ordered by q degree then t degree.
    std::string to_string() const;

private:
    std::map<Exponents, std::int64_t> terms_;
};

}  // namespace coxdepth
