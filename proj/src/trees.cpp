#include "singcol/trees.hpp"

#include <stdexcept>

#include "json.hpp"

namespace singcol {

long ResolutionTree::leaf_count() const {
    if (is_leaf()) return 1;
    long n = 0;
    for (auto& c : children) n += c.leaf_count();
    return n;
}

void ResolutionTree::validate() const {
    if (m < 1) throw std::domain_error("resolution tree: multiplicities must be >= 1");
    for (auto& c : children) {
        if (c.m > m)
            throw std::domain_error("resolution tree: multiplicities must not increase downward");
        c.validate();
    }
}

namespace {

nlohmann::json tree_to_json(const ResolutionTree& t) {
    nlohmann::json j;
    j["m"] = t.m;
    if (!t.children.empty()) {
        j["children"] = nlohmann::json::array();
        for (auto& c : t.children) j["children"].push_back(tree_to_json(c));
    }
    return j;
}

ResolutionTree tree_from_json(const nlohmann::json& j) {
    ResolutionTree t;
    t.m = j.at("m").get<long>();
    if (j.contains("children"))
        for (auto& c : j.at("children")) t.children.push_back(tree_from_json(c));
    return t;
}

} // namespace

std::string ResolutionTree::json() const { return tree_to_json(*this).dump(); }

ResolutionTree ResolutionTree::from_json(const std::string& text) {
    ResolutionTree t = tree_from_json(nlohmann::json::parse(text));
    t.validate();
    return t;
}

namespace {

long delta_sum(const ResolutionTree& t) {
    long d = t.m * (t.m - 1) / 2;
    for (auto& c : t.children) d += delta_sum(c);
    return d;
}

} // namespace

InvariantRecord tree_invariants(const ResolutionTree& t) {
    t.validate();
    long delta = delta_sum(t);
    long r = t.leaf_count();
    long mu = 2 * delta - r + 1;
    return InvariantRecord::make(t.m, mu, r);
}

namespace {

// depth-first search for the deepest (then leftmost) vertex with >= k unit
// leaf children
void find_pf(const ResolutionTree& t, long k, std::vector<std::size_t>& path, long depth,
             long& best_depth, std::optional<GlueSpec>& best) {
    long units = 0;
    for (auto& c : t.children)
        if (c.is_leaf() && c.m == 1) ++units;
    if (units >= k && depth > best_depth) {
        best_depth = depth;
        best = GlueSpec{path, units};
    }
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        path.push_back(i);
        find_pf(t.children[i], k, path, depth + 1, best_depth, best);
        path.pop_back();
    }
}

ResolutionTree* descend(ResolutionTree& t, const std::vector<std::size_t>& path) {
    ResolutionTree* cur = &t;
    for (auto i : path) cur = &cur->children[i];
    return cur;
}

} // namespace

std::optional<GlueSpec> find_potentially_free(const ResolutionTree& t, long k) {
    if (k < 1) throw std::domain_error("find_potentially_free: k >= 1");
    std::optional<GlueSpec> best;
    long best_depth = -1;
    std::vector<std::size_t> path;
    find_pf(t, k, path, 0, best_depth, best);
    return best;
}

GlueOutcome delta_const_collide(const ResolutionTree& t_x, const ResolutionTree& t_y) {
    t_x.validate();
    t_y.validate();
    if (t_x.m < t_y.m)
        throw std::domain_error("delta_const_collide: requires mult(t_x) >= mult(t_y)");
    auto spot = find_potentially_free(t_x, t_y.m);
    if (!spot)
        throw std::domain_error(
            "delta_const_collide: no vertex with enough free leaves (no potentially free subset)");

    InvariantRecord ix = tree_invariants(t_x), iy = tree_invariants(t_y);

    GlueOutcome out;
    out.tree = t_x;
    ResolutionTree* v = descend(out.tree, spot->path_to_vertex);
    long to_remove = t_y.m;
    for (std::size_t i = v->children.size(); i-- > 0 && to_remove > 0;) {
        if (v->children[i].is_leaf() && v->children[i].m == 1) {
            v->children.erase(v->children.begin() + long(i));
            --to_remove;
        }
    }
    v->children.push_back(t_y);
    out.invariants = tree_invariants(out.tree);

    out.identity_report = {
        {"delta_f = delta_x + delta_y", ix.delta + iy.delta, out.invariants.delta},
        {"m_f = m_x", ix.mult, out.invariants.mult},
        {"mu_f = mu_x + mu_y - 1 + m_y", ix.mu + iy.mu - 1 + iy.mult, out.invariants.mu},
        {"r_f = r_x + r_y - m_y", ix.r + iy.r - iy.mult, out.invariants.r},
    };
    return out;
}

bool GlueOutcome::identities_hold() const {
    for (auto& i : identity_report)
        if (!i.holds()) return false;
    return true;
}

ResolutionTree catalog_tree(const TypeName& name) {
    auto leaf = [](long m) { return ResolutionTree{m, {}}; };
    switch (name.series) {
        case Series::OMP: {
            long m = name.idx[0];
            ResolutionTree t{m, {}};
            for (long i = 0; i < m; ++i) t.children.push_back(leaf(1));
            return t;
        }
        case Series::A: {
            long k = name.idx[0];
            // A_{2j}: chain of j 2's ending in one unit leaf;
            // A_{2j+1}: chain of j+1 2's ending in two unit leaves
            long twos = (k % 2 == 0) ? k / 2 : (k - 1) / 2 + 1;
            long leaves = (k % 2 == 0) ? 1 : 2;
            ResolutionTree t = leaf(2);
            ResolutionTree* cur = &t;
            for (long i = 1; i < twos; ++i) {
                cur->children.push_back(leaf(2));
                cur = &cur->children.back();
            }
            for (long i = 0; i < leaves; ++i) cur->children.push_back(leaf(1));
            return t;
        }
        case Series::D: {
            long k = name.idx[0];
            if (k == 4) return catalog_tree({Series::OMP, {3}});
            // free line + tangential A_{k-3} cluster whose first blowup is the
            // root blowup, so the cluster hangs below the root minus its own root
            ResolutionTree t{3, {leaf(1)}};
            long rest = k - 3;
            long twos = (rest % 2 == 0) ? rest / 2 - 1 : (rest - 1) / 2;
            long leaves = (rest % 2 == 0) ? 1 : 2;
            ResolutionTree* cur = &t;
            for (long i = 0; i < twos; ++i) {
                cur->children.push_back(leaf(2));
                cur = &cur->children.back();
            }
            for (long i = 0; i < leaves; ++i) cur->children.push_back(leaf(1));
            return t;
        }
        case Series::J: {
            if (name.idx == std::vector<long>{2, 0}) {
                ResolutionTree t{3, {{3, {leaf(1), leaf(1), leaf(1)}}}};
                return t;
            }
            break;
        }
        default: break;
    }
    throw std::domain_error("catalog_tree: no stored blowup tree for " + name.str() +
                            "; pass an explicit tree");
}

} // namespace singcol
