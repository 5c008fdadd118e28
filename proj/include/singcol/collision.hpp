#pragma once

#include <string>
#include <vector>

#include "singcol/catalog.hpp"

namespace singcol {

// Which of the collision line l and the non-free tangents l_x, l_y coincide.
struct CollisionData {
    bool l_eq_lx = false;
    bool l_eq_ly = false;
    bool lx_eq_ly = false;
    long trajectory_order = 1;

    // comma list over {l=lx, l!=lx, l=ly, lx=ly}
    static CollisionData parse(const std::string& flags);
    std::string str() const;
    void check_consistent() const; // l=lx and l=ly force lx=ly
};

// One table formula compared against the value recomputed from the diagram.
// The diagram is authoritative; a mismatch is flagged, never patched over.
struct FormulaCheck {
    std::string quantity;
    long tabulated = 0;
    long computed = 0;
    bool matches() const { return tabulated == computed; }
};

struct CollisionResult {
    NewtonDiagram result_diagram;
    Polynomial result_poly; // support representative behind the diagram
    std::vector<TypeName> result_names;
    InvariantRecord invariants;
    std::string rule_id;
    bool primitive_claimed = false;
    bool generic = true; // straight vs wavy arrow for the ADE data
    CollisionData data;
    std::vector<FormulaCheck> formula_checks;
    std::vector<std::string> notes;

    bool formulas_all_match() const;
    std::string json() const;
};

// omp(p+1) + omp(q+1) under the minimal lifting; requires 1 <= q <= p.
CollisionResult collide_omp_omp(long p, long q);

// Uni-branch semi-quasi-homogeneous S_x. Variant Pp1 is x^p + y^{p+1}
// (the tabulated family); variant P1p2 is x^{p+1} + y^{p+2}.
enum class SqhVariant { Pp1, P1p2 };
CollisionResult collide_sqh_omp(SqhVariant variant, long p, long q, const CollisionData& data);

// S_x = cuspfree(p, r) = mult-p cusp with r free lines; S_y = omp(q+1).
CollisionResult collide_cuspfree_omp(long p, long r, long q, const CollisionData& data);

// The ADE arrow tables; throws when the pair is not tabulated.
std::vector<CollisionResult> collide_ade(const TypeName& x, const TypeName& y);

// Degeneration arrows between ADE collision results (source, target).
std::vector<std::pair<TypeName, TypeName>> ade_degeneration_arrows();

struct BoundSide {
    InvariantRecord inv;
    long free_branches = 0;
};

struct BoundCheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct BoundReport {
    std::vector<BoundCheckItem> items;
    bool all_pass() const;
    std::string json() const;
};

// Multiplicity rule, Le-Ramanujam bound, kappa-semicontinuity bound.
BoundReport bound_check(const BoundSide& x, const BoundSide& y, const InvariantRecord& result);

// Compose a germ with disjoint tangent cone onto an inner collision result.
CollisionResult branchwise_collide(const Polynomial& part1, long mult_x2, long mult_y,
                                   const CollisionResult& inner);

// Free branches (multiplicity-1 tangent lines) of a catalog type.
long free_branch_count(const TypeName& name);

} // namespace singcol
