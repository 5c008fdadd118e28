#pragma once

#include "singcol/monomial.hpp"

namespace singcol {

// Total orders compatible with multiplication on the {x, y, e} alphabet.
// EliminationE sorts anything containing e above everything e-free.
enum class OrderKind { DegRevLex, Lex, EliminationE };

struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;

    // true iff a < b in this order
    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Lex: {
                if (a.x != b.x) return a.x < b.x;
                if (a.y != b.y) return a.y < b.y;
                return a.e < b.e;
            }
            case OrderKind::EliminationE: {
                if (a.e != b.e) return a.e < b.e;
                return degrevlex_less(a, b);
            }
            case OrderKind::DegRevLex:
            default:
                return degrevlex_less(a, b);
        }
    }

    bool equal(const Monomial& a, const Monomial& b) const { return a == b; }

    static bool degrevlex_less(const Monomial& a, const Monomial& b) {
        long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        // revlex on x > y > e: compare last variable with *greater* exponent losing
        if (a.e != b.e) return a.e > b.e;
        if (a.y != b.y) return a.y > b.y;
        return a.x > b.x; // equal monomials -> false
    }
};

inline MonomialOrder degrevlex() { return {OrderKind::DegRevLex}; }
inline MonomialOrder lex_order() { return {OrderKind::Lex}; }
inline MonomialOrder elimination_e() { return {OrderKind::EliminationE}; }

} // namespace singcol
