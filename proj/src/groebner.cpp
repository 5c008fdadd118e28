#include "singcol/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace singcol {

namespace {

struct OrdCmp {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.less(a, b); }
};

// Term map sorted by the active monomial order; leading term is rbegin().
using OP = std::map<Monomial, Rational, OrdCmp>;

OP to_op(const Polynomial& p, const MonomialOrder& ord) {
    OP r(OrdCmp{ord});
    for (auto& [m, c] : p.terms()) r.emplace(m, c);
    return r;
}

Polynomial from_op(const OP& p) {
    Polynomial r;
    for (auto& [m, c] : p) r.add_term(m, c);
    return r;
}

void op_axpy(OP& dst, const Rational& a, const Monomial& shift, const OP& src, long cap) {
    for (auto& [m, c] : src) {
        Monomial n = m * shift;
        if (cap > 0 && n.total_degree() > cap) continue;
        auto it = dst.find(n);
        if (it == dst.end()) {
            Rational v = a * c;
            if (v != 0) dst.emplace(n, std::move(v));
        } else {
            it->second += a * c;
            if (it->second == 0) dst.erase(it);
        }
    }
}

// divide by the content; result is primitive with a positive leading coefficient
void op_normalize(OP& p) {
    if (p.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : p) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.rbegin()->second < 0) content = -content;
    for (auto& [m, c] : p) c /= content;
}

long op_degree(const OP& p) {
    long d = 0;
    for (auto& [m, c] : p) d = std::max(d, m.total_degree());
    return d;
}

// The evolving basis, kept fully auto-reduced: leading terms form an
// antichain and every tail is in normal form against the rest. That keeps
// all coefficients close to their canonical (small) sizes.
struct Basis {
    long cap = 0;
    std::vector<OP> elems;    // dead slots are empty
    std::vector<long> version;
    long clock = 0;

    bool live(std::size_t i) const { return !elems[i].empty(); }

    const OP* find_reducer(const Monomial& m, int skip) const {
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (int(i) == skip || elems[i].empty()) continue;
            if (elems[i].rbegin()->first.divides(m)) return &elems[i];
        }
        return nullptr;
    }

    OP normal_form(OP work, int skip = -1) const {
        OP out(work.key_comp());
        while (!work.empty()) {
            auto lt = *work.rbegin();
            const OP* g = find_reducer(lt.first, skip);
            if (!g) {
                out.emplace(lt.first, lt.second);
                work.erase(std::prev(work.end()));
                continue;
            }
            Monomial shift = g->rbegin()->first.divide_into(lt.first);
            op_axpy(work, -lt.second / g->rbegin()->second, shift, *g, cap);
        }
        return out;
    }

    // re-reduce every element against the others until nothing changes
    void autoreduce() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (elems[i].empty()) continue;
                bool reducible = false;
                for (auto& [m, c] : elems[i])
                    if (find_reducer(m, int(i))) {
                        reducible = true;
                        break;
                    }
                if (!reducible) continue;
                OP r = normal_form(std::move(elems[i]), int(i));
                op_normalize(r);
                elems[i] = std::move(r);
                version[i] = ++clock;
                changed = true;
            }
        }
    }

    void install(OP g) {
        op_normalize(g);
        elems.push_back(std::move(g));
        version.push_back(++clock);
        autoreduce();
    }
};

} // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord) {
    Basis b;
    for (auto& g : basis) {
        if (g.is_zero()) continue;
        b.elems.push_back(to_op(g, ord));
        b.version.push_back(0);
    }
    return from_op(b.normal_form(to_op(p, ord)));
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators,
                                   const MonomialOrder& ord,
                                   const GroebnerOptions& opts) {
    for (auto& g : generators)
        if (g.uses(Var::E))
            throw std::invalid_argument("buchberger: generators must use {x, y} only");

    Basis basis;
    basis.cap = opts.degree_cap;
    for (auto& g : generators) {
        Polynomial h = basis.cap > 0 ? g.truncated(basis.cap + 1) : g;
        if (h.is_zero()) continue;
        OP r = basis.normal_form(to_op(h, ord));
        if (!r.empty()) basis.install(std::move(r));
    }
    if (basis.elems.empty()) return {};

    // Pair scan ordered by sugar; verified pairs are cached by element
    // versions so only pairs touching changed elements are re-checked.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<long, long>> verified;

    auto sugar_of = [&](std::size_t i, std::size_t j, const Monomial& l) {
        const OP &fi = basis.elems[i], &fj = basis.elems[j];
        long si = op_degree(fi) + (l.total_degree() - fi.rbegin()->first.total_degree());
        long sj = op_degree(fj) + (l.total_degree() - fj.rbegin()->first.total_degree());
        return std::max(si, sj);
    };

    struct Cand {
        std::size_t i, j;
        Monomial lcm;
        long sugar;
    };

    long guard = long(basis.elems.size());
    if (basis.cap > 0) guard += (basis.cap + 2) * (basis.cap + 2);
    else guard += 4096;

    while (true) {
        // collect unverified pairs
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < basis.elems.size(); ++i) {
            if (!basis.live(i)) continue;
            for (std::size_t j = i + 1; j < basis.elems.size(); ++j) {
                if (!basis.live(j)) continue;
                auto it = verified.find({i, j});
                if (it != verified.end() &&
                    it->second == std::make_pair(basis.version[i], basis.version[j]))
                    continue;
                const Monomial &mi = basis.elems[i].rbegin()->first,
                               &mj = basis.elems[j].rbegin()->first;
                Monomial l = Monomial::lcm(mi, mj);
                cands.push_back({i, j, l, sugar_of(i, j, l)});
            }
        }
        if (cands.empty()) break;
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (a.lcm.total_degree() != b.lcm.total_degree())
                return a.lcm.total_degree() < b.lcm.total_degree();
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });

        bool installed = false;
        for (auto& c : cands) {
            if (!basis.live(c.i) || !basis.live(c.j)) continue;
            const OP &fi = basis.elems[c.i], &fj = basis.elems[c.j];
            const Monomial &mi = fi.rbegin()->first, &mj = fj.rbegin()->first;
            Monomial l = Monomial::lcm(mi, mj);
            if (!(l == c.lcm)) continue; // element changed since collection
            verified[{c.i, c.j}] = {basis.version[c.i], basis.version[c.j]};
            if (Monomial::gcd(mi, mj).is_one()) continue; // product criterion
            // chain criterion, well-founded: both sub-lcms strictly smaller
            bool skip = false;
            for (std::size_t k = 0; k < basis.elems.size() && !skip; ++k) {
                if (k == c.i || k == c.j || !basis.live(k)) continue;
                const Monomial& mk = basis.elems[k].rbegin()->first;
                if (!mk.divides(l)) continue;
                Monomial lik = Monomial::lcm(mi, mk), ljk = Monomial::lcm(mj, mk);
                if (lik != l && ljk != l) skip = true;
            }
            if (skip) continue;

            OP s(fi.key_comp());
            op_axpy(s, fj.rbegin()->second, mi.divide_into(l), fi, basis.cap);
            op_axpy(s, -fi.rbegin()->second, mj.divide_into(l), fj, basis.cap);
            OP r = basis.normal_form(std::move(s));
            if (r.empty()) continue;
            if (--guard < 0) throw std::logic_error("buchberger: runaway completion");
            basis.install(std::move(r));
            installed = true;
            break; // restart the scan against the refreshed basis
        }
        if (!installed) break;
    }

    std::vector<OP> live;
    for (auto& g : basis.elems)
        if (!g.empty()) live.push_back(std::move(g));
    for (auto& g : live) {
        Rational lc = g.rbegin()->second;
        for (auto& [m, c] : g) c /= lc;
    }
    std::sort(live.begin(), live.end(), [&](const OP& a, const OP& b) {
        return ord.less(a.rbegin()->first, b.rbegin()->first);
    });
    std::vector<Polynomial> out;
    out.reserve(live.size());
    for (auto& g : live) out.push_back(from_op(g));
    return out;
}

std::optional<long> standard_monomial_count(const std::vector<Polynomial>& groebner_basis,
                                            const MonomialOrder& ord) {
    std::vector<Monomial> lts;
    for (auto& g : groebner_basis) {
        if (g.is_zero()) continue;
        Monomial m = g.leading_term(ord).first;
        if (m.is_one()) return 0; // ideal is the whole ring
        lts.push_back(m);
    }
    if (lts.empty()) return std::nullopt; // zero ideal, all monomials survive

    // A(b) = min x-exponent among leading monomials with y-exponent <= b.
    // Standard monomials at level b are x^0..x^{A(b)-1}; finite iff A(b)
    // eventually reaches 0.
    std::uint32_t pure_y = UINT32_MAX;
    for (auto& m : lts)
        if (m.x == 0) pure_y = std::min(pure_y, m.y);
    if (pure_y == UINT32_MAX) return std::nullopt;
    long count = 0;
    for (std::uint32_t b = 0; b < pure_y; ++b) {
        long A = -1;
        for (auto& m : lts)
            if (m.y <= b) A = (A < 0) ? long(m.x) : std::min(A, long(m.x));
        if (A < 0) return std::nullopt; // no pure x power reachable at this level
        count += A;
    }
    return count;
}

} // namespace singcol
