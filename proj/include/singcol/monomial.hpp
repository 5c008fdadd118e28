#pragma once

#include <cstdint>
#include <string>
#include <tuple>

namespace singcol {

// Fixed variable alphabet. `E` is the deformation parameter (printed as "e").
enum class Var : int { X = 0, Y = 1, E = 2 };

struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t e = 0;

    static Monomial one() { return {}; }
    static Monomial of(std::uint32_t a, std::uint32_t b, std::uint32_t c = 0) {
        return Monomial{a, b, c};
    }

    std::uint32_t exp(Var v) const {
        switch (v) {
            case Var::X: return x;
            case Var::Y: return y;
            default: return e;
        }
    }
    std::uint32_t& exp(Var v) {
        switch (v) {
            case Var::X: return x;
            case Var::Y: return y;
            default: return e;
        }
    }

    long total_degree() const { return long(x) + long(y) + long(e); }
    bool is_one() const { return x == 0 && y == 0 && e == 0; }

    bool divides(const Monomial& m) const {
        return x <= m.x && y <= m.y && e <= m.e;
    }
    Monomial operator*(const Monomial& m) const {
        return {x + m.x, y + m.y, e + m.e};
    }
    // Precondition: divides(m) on the *denominator* side, i.e. this | m.
    Monomial divide_into(const Monomial& m) const {
        return {m.x - x, m.y - y, m.e - e};
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y, a.e > b.e ? a.e : b.e};
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y, a.e < b.e ? a.e : b.e};
    }

    bool operator==(const Monomial& m) const { return x == m.x && y == m.y && e == m.e; }
    bool operator!=(const Monomial& m) const { return !(*this == m); }

    // Storage order for polynomial term maps (not a monomial order for GB use).
    struct LexLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return std::tie(a.x, a.y, a.e) < std::tie(b.x, b.y, b.e);
        }
    };

    std::string str() const;
};

} // namespace singcol
