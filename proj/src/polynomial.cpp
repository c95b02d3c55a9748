#include "coxdepth/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace coxdepth {

void BivariatePolynomial::add(int q_degree, int t_degree, std::int64_t coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_degree, t_degree}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t BivariatePolynomial::coefficient(int q_degree, int t_degree) const
{
    auto it = terms_.find({q_degree, t_degree});
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t BivariatePolynomial::total() const
{
    std::int64_t sum = 0;
    for (const auto& [_, c] : terms_) sum += c;
    return sum;
}

int BivariatePolynomial::max_q_degree() const
{
    int d = 0;
    for (const auto& [e, _] : terms_) d = std::max(d, e.first);
    return d;
}

int BivariatePolynomial::max_t_degree() const
{
    int d = 0;
    for (const auto& [e, _] : terms_) d = std::max(d, e.second);
    return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other)
{
    for (const auto& [e, c] : other.terms_) add(e.first, e.second, c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b)
{
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::monomial(int q_degree, int t_degree, std::int64_t coefficient)
{
    BivariatePolynomial p;
    p.add(q_degree, t_degree, coefficient);
    return p;
}

namespace {

void write_power(std::ostringstream& out, char var, int degree)
{
    if (degree == 0) return;
    out << var;
    if (degree > 1) out << '^' << degree;
}

}  // namespace

std::string BivariatePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        const std::int64_t mag = std::llabs(c);
        const bool constant = e.first == 0 && e.second == 0;
        if (mag != 1 || constant) out << mag;
        write_power(out, 'q', e.first);
        write_power(out, 't', e.second);
    }
    return out.str();
}

}  // namespace coxdepth
