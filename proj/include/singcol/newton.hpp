#pragma once

#include <string>
#include <vector>

#include "singcol/polynomial.hpp"

namespace singcol {

struct LatticePoint {
    long a = 0;
    long b = 0;
    bool operator==(const LatticePoint& o) const { return a == o.a && b == o.b; }
    bool operator<(const LatticePoint& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

struct Face {
    LatticePoint from, to;   // from.a < to.a, from.b > to.b
    long lattice_length() const;
    Rational slope() const;  // |db/da|
};

// Lower-left convex staircase of a support set. Vertices are sorted by
// strictly increasing a and strictly decreasing b; collinear interior points
// are not vertices.
struct NewtonDiagram {
    std::vector<LatticePoint> vertices;
    long x_offset = 0; // min a over the support
    long y_offset = 0; // min b over the support

    std::vector<Face> faces() const;
    long mult() const; // min of a+b over vertices
    bool operator==(const NewtonDiagram& o) const { return vertices == o.vertices; }

    NewtonDiagram swapped() const; // mirror (a,b) -> (b,a)

    // Point weakly above/on the staircase region (support hull + R+^2).
    bool contains(const LatticePoint& p) const;

    std::string json() const; // {"vertices": [[a,b], ...]}
    static NewtonDiagram from_json(const std::string& text);
};

NewtonDiagram diagram_of(std::vector<LatticePoint> support);
NewtonDiagram diagram_of(const Polynomial& f);

bool equal_up_to_swap(const NewtonDiagram& a, const NewtonDiagram& b);

// Every compact face slope lies in [1/2, 2].
bool is_linear_type(const NewtonDiagram& d);

// Kouchnirenko count 2V - a - b + 1 with the virtual-vertex extension for
// non-convenient diagrams (offset <= 1 on a missing axis). Throws on
// offset >= 2 or if the symbolic extension fails to cancel.
long newton_number(const NewtonDiagram& d);

// Sum of face lattice lengths plus both offsets; offsets must be <= 1.
long generic_branch_count(const NewtonDiagram& d);

// Newton-non-degeneracy: each face polynomial of f is square-free in the
// torus (checked via gcd with its derivative after dehomogenizing).
bool nnd_check(const Polynomial& f, const NewtonDiagram& d);
inline bool nnd_check(const Polynomial& f) { return nnd_check(f, diagram_of(f)); }

} // namespace singcol
