#pragma once

#include <optional>
#include <string>
#include <vector>

#include "singcol/catalog.hpp"
#include "singcol/invariants.hpp"

namespace singcol {

// Rooted tree of infinitely-near-point multiplicities. Only the vertex
// multiset and adjacency matter here; proximity bookkeeping is out of scope.
struct ResolutionTree {
    long m = 1;
    std::vector<ResolutionTree> children;

    bool is_leaf() const { return children.empty(); }
    long leaf_count() const;
    void validate() const; // m >= 1, non-increasing along root-to-leaf paths

    std::string json() const; // nested {"m": 3, "children": [...]}
    static ResolutionTree from_json(const std::string& text);
    bool operator==(const ResolutionTree& o) const {
        return m == o.m && children == o.children;
    }
};

// mult = root m, delta = sum m_i (m_i - 1)/2, r = leaves, mu = 2 delta - r + 1.
InvariantRecord tree_invariants(const ResolutionTree& t);

// Path from the root (child indices) to the vertex owning a potentially free
// subtree: a vertex with at least k multiplicity-1 leaf children. Ties break
// deepest-then-leftmost.
struct GlueSpec {
    std::vector<std::size_t> path_to_vertex;
    long free_leaves = 0;
};
std::optional<GlueSpec> find_potentially_free(const ResolutionTree& t, long k);

struct GlueOutcome {
    ResolutionTree tree;
    InvariantRecord invariants;
    struct Identity {
        std::string name;
        long expected = 0, actual = 0;
        bool holds() const { return expected == actual; }
    };
    std::vector<Identity> identity_report;
    bool identities_hold() const;
};

// Replace mult(t_y) unit leaves under the located vertex of t_x by the whole
// tree t_y; checks the delta/mult/mu/r gluing identities.
GlueOutcome delta_const_collide(const ResolutionTree& t_x, const ResolutionTree& t_y);

// Stored blowup trees for A_k, D_k, omp(m), J10 (= J2_0).
ResolutionTree catalog_tree(const TypeName& name);

} // namespace singcol
