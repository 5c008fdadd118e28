#include "singcol/catalog.hpp"

#include <cctype>
#include <climits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "singcol/parse.hpp"

namespace singcol {

namespace {

Polynomial mono(long a, long b) {
    return Polynomial::term(1, Monomial::of(std::uint32_t(a), std::uint32_t(b)));
}

[[noreturn]] void bad_name(const std::string& msg) { throw std::domain_error("type name: " + msg); }

} // namespace

TypeName TypeName::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) bad_name("empty");

    auto parse_args = [&](const std::string& inner, std::size_t want) {
        std::vector<long> args;
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) args.push_back(std::stol(tok));
        if (args.size() != want) bad_name("expected " + std::to_string(want) + " arguments: " + text);
        return args;
    };

    auto paren = s.find('(');
    if (paren != std::string::npos) {
        if (s.back() != ')') bad_name("missing ')': " + text);
        std::string head = s.substr(0, paren);
        std::string inner = s.substr(paren + 1, s.size() - paren - 2);
        if (head == "omp") return {Series::OMP, parse_args(inner, 1)};
        if (head == "sqh") return {Series::SQH, parse_args(inner, 2)};
        if (head == "cuspfree") return {Series::CUSPFREE, parse_args(inner, 2)};
        bad_name("unknown family: " + head);
    }

    char series = s[0];
    std::string rest = s.substr(1);
    auto under = rest.find('_');
    std::vector<long> idx;
    try {
        if (under == std::string::npos) {
            idx.push_back(std::stol(rest));
        } else {
            idx.push_back(std::stol(rest.substr(0, under)));
            idx.push_back(std::stol(rest.substr(under + 1)));
        }
    } catch (const std::exception&) {
        bad_name("bad index in " + text);
    }

    switch (series) {
        case 'A': return {Series::A, idx};
        case 'D': return {Series::D, idx};
        case 'E': return {Series::E, idx};
        case 'J':
            if (idx.size() == 1) {
                if (idx[0] == 10) return {Series::J, {2, 0}}; // J10 = J2_0
                bad_name("single-index J names: only the J10 alias is defined");
            }
            return {Series::J, idx};
        case 'X':
            if (idx.size() == 1) {
                if (idx[0] == 9) return {Series::X, {1, 0}}; // X9 = X1_0
                bad_name("single-index X names: only the X9 alias is defined");
            }
            return {Series::X, idx};
        case 'Z': return {Series::Z, idx};
        case 'W': return {Series::W, idx};
        default: bad_name(std::string("unknown series '") + series + "'");
    }
}

std::string TypeName::str() const {
    std::ostringstream os;
    switch (series) {
        case Series::A: os << "A" << idx[0]; break;
        case Series::D: os << "D" << idx[0]; break;
        case Series::E: os << "E" << idx[0]; break;
        case Series::J: os << "J" << idx[0] << "_" << idx[1]; break;
        case Series::X: os << "X" << idx[0] << "_" << idx[1]; break;
        case Series::Z: os << "Z" << idx[0]; break;
        case Series::W: os << "W" << idx[0]; break;
        case Series::OMP: os << "omp(" << idx[0] << ")"; break;
        case Series::SQH: os << "sqh(" << idx[0] << "," << idx[1] << ")"; break;
        case Series::CUSPFREE: os << "cuspfree(" << idx[0] << "," << idx[1] << ")"; break;
        case Series::COMPOSITE: os << "composite"; break;
    }
    return os.str();
}

NormalForm normal_form(const TypeName& name) {
    Polynomial p;
    const auto& idx = name.idx;
    switch (name.series) {
        case Series::A: {
            if (idx.size() != 1 || idx[0] < 1) bad_name("A_k needs k >= 1");
            p = mono(0, 2) + mono(idx[0] + 1, 0); // y^2 + x^{k+1}
            break;
        }
        case Series::D: {
            if (idx.size() != 1 || idx[0] < 4) bad_name("D_k needs k >= 4");
            p = mono(1, 2) + mono(idx[0] - 1, 0); // y^2 x + x^{k-1}
            break;
        }
        case Series::E: {
            if (idx.size() != 1 || idx[0] < 6) bad_name("E_k needs k >= 6");
            long n = idx[0], k = n / 6, r = n % 6;
            if (r == 0) p = mono(0, 3) + mono(3 * k + 1, 0);       // E_{6k}
            else if (r == 1) p = mono(0, 3) + mono(2 * k + 1, 1);  // E_{6k+1}
            else if (r == 2) p = mono(0, 3) + mono(3 * k + 2, 0);  // E_{6k+2}
            else bad_name("E_k defined for k = 6m, 6m+1, 6m+2");
            break;
        }
        case Series::J: {
            if (idx.size() != 2 || idx[0] < 1 || idx[1] < 0) bad_name("J_{k,i} needs k >= 1, i >= 0");
            long k = idx[0], i = idx[1];
            p = mono(0, 3) + mono(k, 2) + mono(3 * k + i, 0); // y^3 + y^2 x^k + x^{3k+i}
            break;
        }
        case Series::Z: {
            if (idx.size() != 1 || idx[0] < 11) bad_name("Z_k needs k >= 11");
            long n = idx[0], k;
            if ((n + 1) % 6 == 0) { k = (n + 1) / 6; p = mono(1, 3) + mono(3 * k - 1, 0); }      // Z_{6k-1}
            else if (n % 6 == 0) { k = n / 6; p = mono(1, 3) + mono(2 * k, 1); }                 // Z_{6k}
            else if ((n - 1) % 6 == 0) { k = (n - 1) / 6; p = mono(1, 3) + mono(3 * k, 0); }     // Z_{6k+1}
            else bad_name("Z_k defined for k = 6m-1, 6m, 6m+1");
            break;
        }
        case Series::X: {
            if (idx.size() != 2 || idx[0] < 1 || idx[1] < 0) bad_name("X_{k,i} needs k >= 1, i >= 0");
            long k = idx[0], i = idx[1];
            // y^4 + y^3 x^k + y^2 x^{2k} + x^{4k+i}
            p = mono(0, 4) + mono(k, 3) + mono(2 * k, 2) + mono(4 * k + i, 0);
            break;
        }
        case Series::W: {
            if (idx.size() != 1 || idx[0] < 12) bad_name("W_k needs k >= 12");
            long n = idx[0];
            if (n % 12 == 0) p = mono(0, 4) + mono(n / 3 + 1, 0);               // W_{12k}: y^4 + x^{4k+1}
            else if (n % 12 == 1) p = mono(0, 4) + mono((n - 1) / 4 + 1, 1);    // W_{12k+1}: y^4 + y x^{3k+1}
            else bad_name("W_k defined for k = 12m, 12m+1");
            break;
        }
        case Series::OMP: {
            if (idx.size() != 1 || idx[0] < 2) bad_name("omp(m) needs m >= 2");
            p = mono(idx[0], 0) + mono(0, idx[0]);
            break;
        }
        case Series::SQH: {
            if (idx.size() != 2 || idx[0] < 2 || idx[1] < idx[0]) bad_name("sqh(p,q) needs 2 <= p <= q");
            p = mono(idx[0], 0) + mono(0, idx[1]);
            break;
        }
        case Series::CUSPFREE: {
            if (idx.size() != 2 || idx[0] < 2 || idx[1] < 0)
                bad_name("cuspfree(p,r) needs p >= 2, r >= 0");
            long pp = idx[0], r = idx[1];
            p = mono(pp, 0) + mono(0, pp + 1); // cusp x^p + y^{p+1}, tangent x = 0
            for (long i = 1; i <= r; ++i) {
                // distinct generic lines y - i*x
                Polynomial line = mono(0, 1) - Rational(i) * mono(1, 0);
                p = p * line;
            }
            break;
        }
        default: bad_name("no normal form for this name");
    }
    NormalForm nf;
    nf.name = name;
    nf.poly = p;
    nf.diagram = diagram_of(p);
    return nf;
}

namespace {

// Minkowski sum of supports; for the generic-frame extension the coefficients
// never cancel, so the support sum is the support of the product.
std::vector<LatticePoint> minkowski(const std::vector<LatticePoint>& a,
                                    const std::vector<LatticePoint>& b) {
    std::vector<LatticePoint> out;
    out.reserve(a.size() * b.size());
    for (auto& p : a)
        for (auto& q : b) out.push_back({p.a + q.a, p.b + q.b});
    return out;
}

} // namespace

NewtonDiagram recognition_diagram(const TypeName& name) {
    NormalForm nf = normal_form(name);
    long c = nf.diagram.x_offset, d = nf.diagram.y_offset;
    if (c == 0 && d == 0) return nf.diagram;
    if (c > 1 || d > 1) throw std::domain_error("recognition_diagram: non-reduced normal form");

    // strip the axis factors
    std::vector<LatticePoint> core;
    for (auto& m : nf.poly.support()) core.push_back({long(m.x) - c, long(m.y) - d});

    // An axis line is free only when the remaining germ is transverse to it,
    // i.e. the axis is not in the tangent cone of the core. Only free axis
    // lines may be moved to generic position; the others stay on the axis.
    long m0 = LONG_MAX;
    for (auto& p : core) m0 = std::min(m0, p.a + p.b);
    bool x_axis_in_cone = true, y_axis_in_cone = true;
    for (auto& p : core) {
        if (p.a + p.b != m0) continue;
        if (p.a == 0) x_axis_in_cone = false; // cone form not divisible by x
        if (p.b == 0) y_axis_in_cone = false;
    }
    std::vector<LatticePoint> line = {{1, 0}, {0, 1}};
    if (c == 1) {
        if (x_axis_in_cone)
            for (auto& p : core) ++p.a; // keep the non-free factor on the axis
        else
            core = minkowski(core, line);
    }
    if (d == 1) {
        if (y_axis_in_cone)
            for (auto& p : core) ++p.b;
        else
            core = minkowski(core, line);
    }
    return diagram_of(std::move(core));
}

std::vector<TypeName> catalog_names() {
    std::vector<TypeName> names;
    for (long k = 1; k <= 13; ++k) names.push_back({Series::A, {k}});
    for (long k = 4; k <= 13; ++k) names.push_back({Series::D, {k}});
    for (long k : {6, 7, 8, 12, 13, 14, 18, 19, 20}) names.push_back({Series::E, {k}});
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= 3; ++i) names.push_back({Series::J, {k, i}});
    for (long k = 1; k <= 3; ++k)
        for (long i = 0; i <= 3; ++i) names.push_back({Series::X, {k, i}});
    for (long k : {11, 12, 13, 17, 18, 19}) names.push_back({Series::Z, {k}});
    for (long k : {12, 13, 24, 25}) names.push_back({Series::W, {k}});
    for (long m = 2; m <= 8; ++m) names.push_back({Series::OMP, {m}});
    return names;
}

Recognition recognize(const NewtonDiagram& d) {
    if (d.x_offset >= 2 || d.y_offset >= 2)
        throw std::domain_error("recognize: diagram is non-reduced");
    Recognition rec{{}, d, invariant_record(d)};
    for (auto& name : catalog_names()) {
        NewtonDiagram raw = normal_form(name).diagram;
        if (equal_up_to_swap(d, raw)) {
            rec.names.push_back(name);
            continue;
        }
        NewtonDiagram ext = recognition_diagram(name);
        if (!(ext == raw) && equal_up_to_swap(d, ext)) rec.names.push_back(name);
    }
    return rec;
}

} // namespace singcol
