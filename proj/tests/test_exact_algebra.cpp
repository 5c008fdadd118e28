#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "singcol/groebner.hpp"
#include "singcol/matrix.hpp"
#include "singcol/parse.hpp"

using namespace singcol;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

std::mt19937_64 rng(20240817);

Polynomial random_poly(int max_terms, long max_exp, long coeff_range) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> exp(0, max_exp), coeff(-coeff_range, coeff_range);
    Polynomial p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(Monomial::of(std::uint32_t(exp(rng)), std::uint32_t(exp(rng))), Rational(c));
    }
    return p;
}

// independent elimination for the rref cross-check: fraction-free (Bareiss
// style) forward pass, then ordinary back substitution
RationalMatrix rref_oracle(const RationalMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < rows; ++col) {
        std::size_t sel = prow;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        for (std::size_t i = prow + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            Rational piv = a[prow][col], f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] * piv - f * a[prow][j];
        }
        pivots.push_back(col);
        ++prow;
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        Rational piv = a[r][pivots[r]];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] /= piv;
        for (std::size_t i = 0; i < r; ++i) {
            Rational f = a[i][pivots[r]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
    }
    RationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a[i][j];
    return out;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    CHECK(P("y^2 - x^3").derivative(Var::X) == P("-3x^2"));
    CHECK(P("x^2 + y^2").evaluate({Rational(0), Rational(0)}) == 0);
    std::map<Var, Polynomial> sub{{Var::X, P("x + 1")}};
    CHECK(P("y^2 - x^3").substitute(sub) == P("y^2 - x^3 - 3x^2 - 3x - 1"));
    CHECK_THROWS(P("x*e").evaluate({Rational(1), Rational(1)}));
}

TEST_CASE("parser grammar and errors") {
    CHECK(P("y^2*x + x^5") == P("x*y^2+x^5"));
    CHECK(P("3/2*x^2 - y").coeff(Monomial::of(2, 0)) == Rational(3, 2));
    CHECK(P("2*x^2*y^3*e") == Polynomial::term(2, Monomial::of(2, 3, 1)));
    CHECK_THROWS_AS(P("x + + y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x^"), ParseError);
}

TEST_CASE("polynomial ring laws on random triples") {
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_poly(5, 6, 9), b = random_poly(5, 6, 9), c = random_poly(5, 6, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("buchberger on the stated ideals") {
    auto gb1 = buchberger({P("x^3"), P("y")}, degrevlex());
    REQUIRE(gb1.size() == 2);
    CHECK(gb1[0] == P("y"));
    CHECK(gb1[1] == P("x^3"));

    auto gb2 = buchberger({P("x^2 - y"), P("y^2 - x")}, degrevlex());
    CHECK(gb2.size() >= 2);
    CHECK(gb2.size() <= 3);
    // the system x^2 = y, y^2 = x has exactly 4 solutions (x^4 = x), so the
    // quotient has dimension 4
    CHECK(standard_monomial_count(gb2, degrevlex()) == 4);

    auto gb3 = buchberger({P("3x^2"), P("3y^2")}, degrevlex());
    REQUIRE(gb3.size() == 2);
    CHECK(gb3[0] == P("y^2"));
    CHECK(gb3[1] == P("x^2"));

    CHECK(buchberger({}, degrevlex()).empty());
}

TEST_CASE("ideal membership: generators reduce to zero") {
    std::vector<Polynomial> gens = {P("x^2 - y"), P("y^2 - x"), P("x*y - 1")};
    auto gb = buchberger(gens, degrevlex());
    for (auto& g : gens) CHECK(reduce(g, gb, degrevlex()).is_zero());
}

TEST_CASE("standard monomial count") {
    CHECK(standard_monomial_count({P("x^2"), P("y^2")}, degrevlex()) == 4);
    CHECK(standard_monomial_count({P("y"), P("x^3")}, degrevlex()) == 3);
    CHECK(!standard_monomial_count({P("x")}, degrevlex()).has_value());
}

TEST_CASE("count is order independent for zero-dimensional ideals") {
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<long> e(2, 5);
        long a = e(rng), b = e(rng);
        std::vector<Polynomial> gens = {
            Polynomial::term(1, Monomial::of(std::uint32_t(a), 0)) + random_poly(3, 1, 5),
            Polynomial::term(1, Monomial::of(0, std::uint32_t(b))) + random_poly(3, 1, 5)};
        auto c1 = standard_monomial_count(buchberger(gens, degrevlex()), degrevlex());
        auto c2 = standard_monomial_count(buchberger(gens, lex_order()), lex_order());
        REQUIRE(c1.has_value());
        CHECK(*c1 == *c2);
    }
}

TEST_CASE("rref basics and idempotence") {
    RationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.matrix == id);

    RationalMatrix dep(2, 2);
    dep.at(0, 0) = 1;
    dep.at(0, 1) = 2;
    dep.at(1, 0) = 2;
    dep.at(1, 1) = 4;
    auto r2 = rref(dep);
    CHECK(r2.rank == 1);
    CHECK(r2.matrix.at(0, 0) == 1);
    CHECK(r2.matrix.at(0, 1) == 2);
    CHECK(r2.matrix.at(1, 0) == 0);
    CHECK(r2.matrix.at(1, 1) == 0);

    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(5, 8);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 8; ++j) m.at(i, j) = entry(rng);
        auto a = rref(m);
        CHECK(rref(a.matrix).matrix == a.matrix); // idempotent
        CHECK(a.matrix == rref_oracle(m));        // independent elimination agrees
    }
}
