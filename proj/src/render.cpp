#include "singcol/render.hpp"

#include <algorithm>
#include <sstream>

namespace singcol {

std::string ascii_diagram(const NewtonDiagram& d) {
    long amax = 0, bmax = 0;
    for (auto& v : d.vertices) {
        amax = std::max(amax, v.a);
        bmax = std::max(bmax, v.b);
    }
    amax += 1;
    bmax += 1;
    std::vector<std::string> grid(std::size_t(bmax) + 1, std::string(std::size_t(amax) + 1, ' '));
    auto put = [&](long a, long b, char c) {
        grid[std::size_t(bmax - b)][std::size_t(a)] = c;
    };
    // dots on lattice points of compact faces
    for (auto& f : d.faces()) {
        long g = f.lattice_length();
        long sa = (f.to.a - f.from.a) / g, sb = (f.from.b - f.to.b) / g;
        for (long k = 0; k <= g; ++k) put(f.from.a + k * sa, f.from.b - k * sb, '+');
    }
    for (auto& v : d.vertices) put(v.a, v.b, '*');
    std::ostringstream os;
    for (long b = bmax; b >= 0; --b) {
        os << (b % 5 == 0 ? std::to_string(b) : " ");
        os << " |" << grid[std::size_t(bmax - b)] << "\n";
    }
    os << "   +";
    for (long a = 0; a <= amax; ++a) os << '-';
    os << "\n    ";
    for (long a = 0; a <= amax; ++a) os << (a % 5 == 0 ? std::to_string(a % 10) : " ");
    os << "\n";
    return os.str();
}

std::string svg_diagram(const NewtonDiagram& d) {
    long amax = 1, bmax = 1;
    for (auto& v : d.vertices) {
        amax = std::max(amax, v.a);
        bmax = std::max(bmax, v.b);
    }
    const long cell = 24, margin = 30;
    long w = margin * 2 + amax * cell, h = margin * 2 + bmax * cell;
    auto X = [&](long a) { return margin + a * cell; };
    auto Y = [&](long b) { return h - margin - b * cell; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (long a = 0; a <= amax; ++a)
        for (long b = 0; b <= bmax; ++b)
            os << "<circle cx=\"" << X(a) << "\" cy=\"" << Y(b)
               << "\" r=\"1.5\" fill=\"#bbb\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(amax) << "\" y2=\""
       << Y(0) << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(bmax) << "\" stroke=\"black\"/>\n";
    for (auto& f : d.faces())
        os << "<line x1=\"" << X(f.from.a) << "\" y1=\"" << Y(f.from.b) << "\" x2=\""
           << X(f.to.a) << "\" y2=\"" << Y(f.to.b)
           << "\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";
    for (auto& v : d.vertices) {
        os << "<circle cx=\"" << X(v.a) << "\" cy=\"" << Y(v.b)
           << "\" r=\"4\" fill=\"#1f6feb\"/>\n";
        os << "<text x=\"" << X(v.a) + 6 << "\" y=\"" << Y(v.b) - 6
           << "\" font-size=\"11\" font-family=\"monospace\">(" << v.a << "," << v.b
           << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace singcol
