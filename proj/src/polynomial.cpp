#include "singcol/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace singcol {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    auto part = [&](const char* name, std::uint32_t p) {
        if (p == 0) return;
        if (!first) os << "*";
        os << name;
        if (p > 1) os << "^" << p;
        first = false;
    };
    part("x", x);
    part("y", y);
    part("e", e);
    return os.str();
}

std::optional<long> Polynomial::min_total_degree() const {
    if (terms_.empty()) return std::nullopt;
    long best = terms_.begin()->first.total_degree();
    for (auto& [m, c] : terms_) best = std::min(best, m.total_degree());
    return best;
}

std::optional<long> Polynomial::max_total_degree() const {
    if (terms_.empty()) return std::nullopt;
    long best = 0;
    for (auto& [m, c] : terms_) best = std::max(best, m.total_degree());
    return best;
}

long Polynomial::degree_in(Var v) const {
    long best = 0;
    for (auto& [m, c] : terms_) best = std::max(best, long(m.exp(v)));
    return best;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    Polynomial r = *this;
    for (auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    Polynomial r = *this;
    for (auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    Polynomial r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r = Polynomial::constant(1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        std::uint32_t p = m.exp(v);
        if (p == 0) continue;
        Monomial n = m;
        n.exp(v) = p - 1;
        r.add_term(n, c * Rational(long(p)));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<Var, Polynomial>& subs) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(1);
        Monomial untouched = Monomial::one();
        for (Var v : {Var::X, Var::Y, Var::E}) {
            std::uint32_t p = m.exp(v);
            if (p == 0) continue;
            auto it = subs.find(v);
            if (it == subs.end()) {
                untouched.exp(v) = p;
            } else {
                t = t * it->second.pow(p);
            }
        }
        r = r + Polynomial::term(c, untouched) * t;
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != 2 && point.size() != 3)
        throw std::invalid_argument("evaluate: point must have 2 or 3 coordinates");
    if (point.size() == 2 && uses(Var::E))
        throw std::invalid_argument("evaluate: polynomial uses e but point has arity 2");
    Rational total = 0;
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (std::uint32_t i = 0; i < m.x; ++i) t *= point[0];
        for (std::uint32_t i = 0; i < m.y; ++i) t *= point[1];
        for (std::uint32_t i = 0; i < m.e; ++i) t *= point[2];
        total += t;
    }
    return total;
}

Polynomial Polynomial::truncated(long cap) const {
    Polynomial r;
    for (auto& [m, c] : terms_)
        if (m.total_degree() < cap) r.terms_.emplace(m, c);
    return r;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return *best;
}

Rational Polynomial::normalize_content() {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (terms_.rbegin()->second < 0) content = -content;
    for (auto& [m, c] : const_cast<TermMap&>(terms_)) {
        c /= content;
    }
    return content;
}

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (auto& [m, c] : terms_) s.push_back(m);
    return s;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // print highest degree first for readability
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return Monomial::LexLess{}(a.first, b.first);
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << m.str();
        }
    }
    return os.str();
}

} // namespace singcol
