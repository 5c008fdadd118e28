#pragma once

#include <optional>
#include <vector>

#include "singcol/polynomial.hpp"

namespace singcol {

struct GroebnerOptions {
    // Drop terms of total degree > cap during reduction. Only valid when the
    // generators include every monomial of degree cap (the ideal then
    // contains m^cap, so anything above is redundant).
    long degree_cap = 0; // 0 = no cap
};

// Full normal form of p modulo basis (every term reduced).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord);

// Reduced Groebner basis via Buchberger with sugar selection and full
// inter-reduction. Generators must be polynomials in {x, y} only.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators,
                                   const MonomialOrder& ord,
                                   const GroebnerOptions& opts = {});

// Number of monomials not divisible by any leading monomial of the basis;
// nullopt when that set is infinite.
std::optional<long> standard_monomial_count(const std::vector<Polynomial>& groebner_basis,
                                            const MonomialOrder& ord);

} // namespace singcol
