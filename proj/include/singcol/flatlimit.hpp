#pragma once

#include <map>
#include <string>
#include <vector>

#include "singcol/collision.hpp"
#include "singcol/matrix.hpp"

namespace singcol {

// Dense univariate polynomial in the deformation parameter; index = power.
struct EpsPoly {
    std::vector<Rational> c;

    static EpsPoly zero() { return {}; }
    static EpsPoly constant(const Rational& v) {
        EpsPoly p;
        if (v != 0) p.c = {v};
        return p;
    }
    static EpsPoly eps() { return EpsPoly{{Rational(0), Rational(1)}}; }

    bool is_zero() const { return c.empty(); }
    long degree() const { return long(c.size()) - 1; }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rational at(std::size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    // lowest power with a nonzero coefficient (valuation); -1 for zero
    long valuation() const;

    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator*(const EpsPoly& o) const;
    EpsPoly scaled(const Rational& k) const;
    EpsPoly shifted_down(long k) const; // divide by eps^k (valuation >= k required)
    Rational eval(const Rational& v) const;
};

// All monomials x^a y^b with a+b <= N in a fixed deterministic order.
struct JetSpace {
    long degree_bound = 0;
    std::vector<Monomial> basis;

    static JetSpace make(long n);
    int index_of(long a, long b) const; // -1 when out of range
};

// A row is a linear functional on jet coefficients with Q[eps] entries.
using EpsRow = std::vector<std::pair<int, EpsPoly>>; // sorted by column
using QRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// The local frame for writing singularity conditions: the point (px(eps), 0)
// and two independent coordinate directions, all allowed to depend on eps.
struct Frame {
    EpsPoly px;           // x-coordinate of the point (y-coordinate is 0)
    EpsPoly e1x, e1y;     // first local direction
    EpsPoly e2x, e2y;     // second local direction; tangent line = span(e2)
    static Frame at_origin();
    static Frame at_moving_point(const std::vector<Rational>& trajectory);
    void set_directions(const std::pair<Rational, Rational>& e1,
                        const std::pair<Rational, Rational>& e2);
};

struct LinearConditionSystem {
    long jet_degree = 0;
    std::vector<EpsRow> rows;
};

struct LimitSystem {
    long jet_degree = 0;
    std::vector<QRow> rows; // in reduced row echelon form
    std::vector<int> pivot_columns;
    long rank = 0;
    std::vector<char> forced; // per basis monomial: functional lies in the row space

    std::string json(const JetSpace& jet) const;
    bool same_row_space(const LimitSystem& o) const;
};

// How a linear type is encoded: its diagram in the frame where the
// distinguished tangent is the second axis (the line u = 0).
struct LinearTypeSpec {
    NewtonDiagram own_diagram;
    bool tangent_matters = false;
    std::string label;
};

// Encodings for the types the lab accepts: omp(m), A_k, sqh(p, p+1)-shaped
// cusps; throws for non-linear requests.
LinearTypeSpec lab_type_spec(const TypeName& name);

// Lattice points of degree <= n outside the diagram's hull region.
std::vector<LatticePoint> condition_points(const NewtonDiagram& own_diagram, long n);

// Rows forcing the type's coefficient conditions at the frame's point.
LinearConditionSystem conditions_at(const LinearTypeSpec& type, const Frame& frame,
                                    const JetSpace& jet);

LinearConditionSystem concat(LinearConditionSystem a, const LinearConditionSystem& b);

// Exact rank over Q(eps); specialization fast path with an exact
// fraction-free fallback.
long rank_over_qeps(const LinearConditionSystem& sys);

// Grassmannian limit of the row space as eps -> 0: divide rows by their eps
// content, row-reduce the eps = 0 parts, and replace dependent combinations
// by their eps-divided counterparts until the rank matches the generic rank.
LimitSystem flat_limit(const LinearConditionSystem& sys);

// Direct construction of the omp(p+1) + omp(q+1) limit rows: the conditions
// of order <= p at the point plus the staircase of contracted higher
// derivative blocks. Must agree with flat_limit on the same setup.
LimitSystem triangular_system(long p, long q, const JetSpace& jet);

NewtonDiagram staircase_of(const LimitSystem& limit, const JetSpace& jet);

// A member of the limit stratum: free coefficients are nonzero random
// integers in [-range, range], pivot coefficients are back-substituted.
// Retries up to 8 seeds until the sample is Newton-non-degenerate.
Polynomial generic_member(const LimitSystem& limit, const JetSpace& jet, unsigned long seed,
                          long range = 9);

struct LabOptions {
    long jet_degree = 0; // 0 = automatic: 2 (m_x + m_y + 1), doubled on guard failure
    unsigned long seed = 1;
    long coeff_range = 9;
    std::vector<Rational> trajectory = {Rational(1)}; // coefficients of eps, eps^2, ...
    bool emit_limit_system = false;
};

struct VerifyReport {
    std::string x_label, y_label;
    CollisionData data;
    long jet_degree = 0;
    unsigned long seed = 0;
    long rank_generic = 0, rank_limit = 0;
    NewtonDiagram staircase, predicted;
    long mu_predicted = 0, mu_sample = 0, mu_newton = 0;
    bool staircase_ok = false, mu_sample_ok = false, mu_newton_ok = false;
    std::string limit_system_json;

    bool pass() const { return staircase_ok && mu_sample_ok && mu_newton_ok; }
    std::string json() const;
};

// Run the full pipeline for S_x at the origin and S_y at (eps, 0) and compare
// with a predicted collision result.
VerifyReport verify_collision(const CollisionResult& prediction, const TypeName& x,
                              const TypeName& y, const CollisionData& data,
                              const LabOptions& opts = {});

} // namespace singcol
