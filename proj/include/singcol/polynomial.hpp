#pragma once

#include <map>
#include <optional>
#include <vector>

#include "singcol/monomial.hpp"
#include "singcol/order.hpp"
#include "singcol/rational.hpp"

namespace singcol {

// Sparse multivariate polynomial over Q in {x, y, e}. Terms with zero
// coefficient are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, Monomial::LexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    static Polynomial term(const Rational& c, const Monomial& m) {
        Polynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    static Polynomial variable(Var v) {
        Monomial m;
        m.exp(v) = 1;
        return term(1, m);
    }
    static Polynomial constant(long c) { return Polynomial(Rational(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool uses(Var v) const {
        for (auto& [m, c] : terms_)
            if (m.exp(v) > 0) return true;
        return false;
    }

    // Smallest total degree among terms; nullopt for the zero polynomial.
    std::optional<long> min_total_degree() const;
    std::optional<long> max_total_degree() const;
    long degree_in(Var v) const;

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned n) const;
    bool operator==(const Polynomial& q) const { return terms_ == q.terms_; }
    bool operator!=(const Polynomial& q) const { return !(*this == q); }

    Polynomial derivative(Var v) const;

    // Simultaneous substitution of every variable present in `subs`.
    Polynomial substitute(const std::map<Var, Polynomial>& subs) const;

    // Evaluation at a point. The point arity must cover every variable the
    // polynomial uses: 2 values = (x, y), 3 values = (x, y, e).
    Rational evaluate(const std::vector<Rational>& point) const;

    // Drop all terms of total degree >= cap.
    Polynomial truncated(long cap) const;

    // Leading term with respect to an order.
    const std::pair<const Monomial, Rational>& leading_term(const MonomialOrder& ord) const;

    // Divide every coefficient so the result is primitive with positive
    // leading (in storage order) numerator; returns the removed content.
    Rational normalize_content();

    std::vector<Monomial> support() const;
    std::string str() const;

private:
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

} // namespace singcol
