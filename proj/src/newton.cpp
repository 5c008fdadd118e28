#include "singcol/newton.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace singcol {

long Face::lattice_length() const {
    long da = to.a - from.a, db = from.b - to.b;
    return std::gcd(da, db);
}

Rational Face::slope() const {
    long da = to.a - from.a, db = from.b - to.b;
    Rational s(db, da);
    s.canonicalize();
    return s;
}

std::vector<Face> NewtonDiagram::faces() const {
    std::vector<Face> fs;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        fs.push_back({vertices[i], vertices[i + 1]});
    return fs;
}

long NewtonDiagram::mult() const {
    long best = LONG_MAX;
    for (auto& v : vertices) best = std::min(best, v.a + v.b);
    return best;
}

NewtonDiagram NewtonDiagram::swapped() const {
    std::vector<LatticePoint> pts;
    pts.reserve(vertices.size());
    for (auto& v : vertices) pts.push_back({v.b, v.a});
    return diagram_of(std::move(pts));
}

bool NewtonDiagram::contains(const LatticePoint& p) const {
    if (vertices.empty()) return false;
    if (p.a < x_offset || p.b < y_offset) return false;
    // above or on every face line, i.e. above the staircase's lower boundary
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const auto &u = vertices[i], &w = vertices[i + 1];
        if (p.a < u.a || p.a > w.a) continue;
        // cross product (w-u) x (p-u) >= 0 means p on/above the segment line
        long cross = (w.a - u.a) * (p.b - u.b) - (w.b - u.b) * (p.a - u.a);
        return cross >= 0;
    }
    // beyond the last vertex horizontally or above the first vertically
    return true;
}

NewtonDiagram diagram_of(std::vector<LatticePoint> support) {
    if (support.empty()) throw std::invalid_argument("diagram_of: empty support");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    long xo = LONG_MAX, yo = LONG_MAX;
    for (auto& p : support) {
        xo = std::min(xo, p.a);
        yo = std::min(yo, p.b);
    }

    // lower-left hull: walk support sorted by (a asc, b asc), keep only points
    // that decrease b, then enforce convexity by cross products
    std::vector<LatticePoint> chain;
    long best_b = LONG_MAX;
    // for each a keep the minimal b
    for (std::size_t i = 0; i < support.size();) {
        std::size_t j = i;
        long a = support[i].a;
        long bmin = support[i].b;
        while (j < support.size() && support[j].a == a) {
            bmin = std::min(bmin, support[j].b);
            ++j;
        }
        if (bmin < best_b) {
            chain.push_back({a, bmin});
            best_b = bmin;
        }
        i = j;
    }
    // convex hull (lower-left): pop while the middle point v lies on or above
    // the segment u -> p, i.e. (v-u) x (p-u) <= 0
    std::vector<LatticePoint> hull;
    for (auto& p : chain) {
        while (hull.size() >= 2) {
            const auto &u = hull[hull.size() - 2], &v = hull[hull.size() - 1];
            long cross = (v.a - u.a) * (p.b - u.b) - (v.b - u.b) * (p.a - u.a);
            if (cross <= 0)
                hull.pop_back(); // v is not a strict corner
            else
                break;
        }
        hull.push_back(p);
    }
    NewtonDiagram d;
    d.vertices = std::move(hull);
    d.x_offset = xo;
    d.y_offset = yo;
    return d;
}

NewtonDiagram diagram_of(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("diagram_of: zero polynomial");
    if (f.uses(Var::E)) throw std::invalid_argument("diagram_of: polynomial must use {x, y} only");
    std::vector<LatticePoint> pts;
    for (auto& m : f.support()) pts.push_back({long(m.x), long(m.y)});
    return diagram_of(std::move(pts));
}

bool equal_up_to_swap(const NewtonDiagram& a, const NewtonDiagram& b) {
    return a == b || a == b.swapped();
}

bool is_linear_type(const NewtonDiagram& d) {
    for (auto& f : d.faces()) {
        Rational s = f.slope();
        if (s < Rational(1, 2) || s > Rational(2)) return false;
    }
    return true;
}

namespace {

// value linear in the symbolic extension heights M, M'
struct SymLin {
    long c = 0;   // constant part
    long m = 0;   // coefficient of M  (virtual vertex (0, M))
    long mp = 0;  // coefficient of M' (virtual vertex (M', 0))
    SymLin operator+(const SymLin& o) const { return {c + o.c, m + o.m, mp + o.mp}; }
    SymLin operator-(const SymLin& o) const { return {c - o.c, m - o.m, mp - o.mp}; }
};

} // namespace

long newton_number(const NewtonDiagram& d) {
    if (d.vertices.empty()) throw std::invalid_argument("newton_number: empty diagram");
    if (d.x_offset >= 2 || d.y_offset >= 2)
        throw std::domain_error("newton_number: offset >= 2, germ is non-reduced or non-isolated");

    // Work with symbolic virtual vertices so the required cancellation of the
    // extension heights is checked, not assumed.
    struct Pt {
        SymLin a, b;
    };
    std::vector<Pt> vs;
    if (d.x_offset == 1) vs.push_back({SymLin{0, 0, 0}, SymLin{0, 1, 0}}); // (0, M)
    for (auto& v : d.vertices) vs.push_back({SymLin{v.a, 0, 0}, SymLin{v.b, 0, 0}});
    if (d.y_offset == 1) vs.push_back({SymLin{0, 0, 1}, SymLin{0, 0, 0}}); // (M', 0)

    for (auto& v : d.vertices)
        if (v.a == 0 && v.b == 0)
            throw std::domain_error("newton_number: support contains a constant term, not a germ");

    SymLin twoV{0, 0, 0};
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        // 2 * trapezoid area: (b_i + b_{i+1}) * (a_{i+1} - a_i); the products
        // below stay linear because virtual coordinates never multiply each other
        const SymLin &b1 = vs[i].b, &b2 = vs[i + 1].b, &a1 = vs[i].a, &a2 = vs[i + 1].a;
        SymLin bsum = b1 + b2, adiff = a2 - a1;
        if ((bsum.m != 0 || bsum.mp != 0) && (adiff.m != 0 || adiff.mp != 0))
            throw std::logic_error("newton_number: nonlinear symbolic area");
        SymLin prod{bsum.c * adiff.c,
                    bsum.m * adiff.c + adiff.m * bsum.c,
                    bsum.mp * adiff.c + adiff.mp * bsum.c};
        twoV = twoV + prod;
    }
    SymLin a_int = vs.back().a;  // a-axis intercept
    SymLin b_int = vs.front().b; // b-axis intercept
    SymLin mu = twoV - a_int - b_int;
    mu.c += 1;
    if (mu.m != 0 || mu.mp != 0)
        throw std::domain_error("newton_number: virtual-vertex dependence does not cancel (non-isolated)");
    return mu.c;
}

long generic_branch_count(const NewtonDiagram& d) {
    if (d.x_offset >= 2 || d.y_offset >= 2)
        throw std::domain_error("generic_branch_count: offset >= 2, non-reduced");
    long r = d.x_offset + d.y_offset;
    for (auto& f : d.faces()) r += f.lattice_length();
    return r;
}

namespace {

// univariate polynomials as coefficient vectors, index = degree
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(long(i)) * p[i]);
    uni_trim(d);
    return d;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

bool uni_coprime_with_derivative(UniPoly p) {
    uni_trim(p);
    if (p.size() <= 1) return true;
    UniPoly a = p, b = uni_derivative(p);
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1; // constant gcd
}

} // namespace

bool nnd_check(const Polynomial& f, const NewtonDiagram& d) {
    for (auto& face : d.faces()) {
        long da = face.to.a - face.from.a;
        long db = face.from.b - face.to.b;
        long g = std::gcd(da, db);
        long sa = da / g, sb = db / g;
        // face polynomial as a one-variable polynomial in the primitive step
        UniPoly p(std::size_t(g) + 1, Rational(0));
        for (long k = 0; k <= g; ++k) {
            Monomial m = Monomial::of(std::uint32_t(face.from.a + k * sa),
                                      std::uint32_t(face.from.b - k * sb));
            p[std::size_t(k)] = f.coeff(m);
        }
        if (p.front() == 0 || p.back() == 0)
            throw std::invalid_argument("nnd_check: diagram does not match the support of f");
        if (!uni_coprime_with_derivative(p)) return false;
    }
    return true;
}

std::string NewtonDiagram::json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (auto& v : vertices) j["vertices"].push_back({v.a, v.b});
    return j.dump();
}

NewtonDiagram NewtonDiagram::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json& arr = j.is_array() ? j : j.at("vertices");
    std::vector<LatticePoint> pts;
    for (auto& v : arr) pts.push_back({v.at(0).get<long>(), v.at(1).get<long>()});
    return diagram_of(std::move(pts));
}

} // namespace singcol
