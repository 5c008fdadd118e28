#include "singcol/flatlimit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "singcol/invariants.hpp"

namespace singcol {

long EpsPoly::valuation() const {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return long(i);
    return -1;
}

EpsPoly EpsPoly::operator+(const EpsPoly& o) const {
    EpsPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

EpsPoly EpsPoly::operator*(const EpsPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    EpsPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

EpsPoly EpsPoly::scaled(const Rational& k) const {
    if (k == 0) return {};
    EpsPoly r = *this;
    for (auto& v : r.c) v *= k;
    return r;
}

EpsPoly EpsPoly::shifted_down(long k) const {
    if (k == 0) return *this;
    EpsPoly r;
    if (long(c.size()) <= k) return r;
    r.c.assign(c.begin() + k, c.end());
    return r;
}

Rational EpsPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

JetSpace JetSpace::make(long n) {
    JetSpace j;
    j.degree_bound = n;
    for (long d = 0; d <= n; ++d)
        for (long b = 0; b <= d; ++b)
            j.basis.push_back(Monomial::of(std::uint32_t(d - b), std::uint32_t(b)));
    return j;
}

int JetSpace::index_of(long a, long b) const {
    if (a < 0 || b < 0 || a + b > degree_bound) return -1;
    long d = a + b;
    return int(d * (d + 1) / 2 + b);
}

Frame Frame::at_origin() {
    Frame f;
    f.px = EpsPoly::zero();
    f.set_directions({1, 0}, {0, 1});
    return f;
}

Frame Frame::at_moving_point(const std::vector<Rational>& trajectory) {
    Frame f;
    f.px.c.assign(trajectory.size() + 1, Rational(0));
    for (std::size_t i = 0; i < trajectory.size(); ++i) f.px.c[i + 1] = trajectory[i];
    f.px.trim();
    if (f.px.is_zero()) throw std::domain_error("moving point needs a nonzero trajectory");
    f.set_directions({1, 0}, {0, 1});
    return f;
}

void Frame::set_directions(const std::pair<Rational, Rational>& e1,
                           const std::pair<Rational, Rational>& e2) {
    e1x = EpsPoly::constant(e1.first);
    e1y = EpsPoly::constant(e1.second);
    e2x = EpsPoly::constant(e2.first);
    e2y = EpsPoly::constant(e2.second);
    if ((e1.first * e2.second - e1.second * e2.first) == 0)
        throw std::domain_error("frame directions must be independent");
}

LinearTypeSpec lab_type_spec(const TypeName& name) {
    LinearTypeSpec spec;
    spec.label = name.str();
    switch (name.series) {
        case Series::OMP: {
            long m = name.idx[0];
            spec.own_diagram = diagram_of({{0, m}, {m, 0}});
            spec.tangent_matters = false;
            return spec;
        }
        case Series::A: {
            long k = name.idx[0];
            if (k == 1) return lab_type_spec({Series::OMP, {2}});
            // germ x^2 + y^{k+1}, tangent = the second frame axis
            spec.own_diagram = diagram_of({{0, k + 1}, {2, 0}});
            spec.tangent_matters = true;
            if (!is_linear_type(spec.own_diagram))
                throw std::domain_error("lab_type_spec: " + name.str() + " is not a linear type");
            return spec;
        }
        case Series::D: {
            if (name.idx[0] == 4) return lab_type_spec({Series::OMP, {3}});
            break;
        }
        case Series::X: {
            if (name.idx == std::vector<long>{1, 0}) return lab_type_spec({Series::OMP, {4}});
            break;
        }
        case Series::SQH: {
            long p = name.idx[0], q = name.idx[1];
            if (p == q) return lab_type_spec({Series::OMP, {p}});
            spec.own_diagram = diagram_of({{0, q}, {p, 0}});
            spec.tangent_matters = true;
            if (!is_linear_type(spec.own_diagram))
                throw std::domain_error("lab_type_spec: " + name.str() + " is not a linear type");
            return spec;
        }
        default: break;
    }
    throw std::domain_error("lab_type_spec: no linear-condition encoding for " + name.str());
}

std::vector<LatticePoint> condition_points(const NewtonDiagram& own_diagram, long n) {
    std::vector<LatticePoint> pts;
    for (long a = 0; a <= n; ++a)
        for (long b = 0; a + b <= n; ++b)
            if (!own_diagram.contains({a, b})) pts.push_back({a, b});
    return pts;
}

namespace {

// binomial and multinomial coefficients over Q
Rational binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

struct PowerTable {
    std::vector<EpsPoly> pow; // pow[k] = base^k
    explicit PowerTable(const EpsPoly& base, long n) {
        pow.resize(std::size_t(n) + 1);
        pow[0] = EpsPoly::constant(1);
        for (long k = 1; k <= n; ++k) pow[std::size_t(k)] = pow[std::size_t(k - 1)] * base;
    }
    const EpsPoly& operator[](long k) const { return pow[std::size_t(k)]; }
};

} // namespace

LinearConditionSystem conditions_at(const LinearTypeSpec& type, const Frame& frame,
                                    const JetSpace& jet) {
    const long n = jet.degree_bound;
    LinearConditionSystem sys;
    sys.jet_degree = n;

    PowerTable PX(frame.px, n), A(frame.e1x, n), B(frame.e2x, n), C(frame.e1y, n),
        D(frame.e2y, n);

    // Coefficient of u^a w^b in f(px + u e1x + w e2x, u e1y + w e2y) as a
    // functional on the jet coefficients c_{alpha,beta}.
    for (auto& kill : condition_points(type.own_diagram, n)) {
        long a = kill.a, b = kill.b;
        EpsRow row;
        for (int col = 0; col < int(jet.basis.size()); ++col) {
            long alpha = jet.basis[std::size_t(col)].x, beta = jet.basis[std::size_t(col)].y;
            // split (a, b) between the two binomial powers; the y-power has no
            // constant part, so it must absorb exactly beta factors
            // the second binomial power has no constant part, so it absorbs
            // exactly beta of the u/w factors: a2 + b2 = beta
            EpsPoly entry;
            for (long a2 = std::max(0L, beta - b); a2 <= std::min(a, beta); ++a2) {
                long b2 = beta - a2;
                long a1 = a - a2, b1 = b - b2;
                if (a1 < 0 || b1 < 0 || a1 + b1 > alpha) continue;
                // multinomial(alpha; a1, b1) e1x^a1 e2x^b1 px^{alpha-a1-b1}
                // * multinomial(beta; a2, b2) e1y^a2 e2y^b2
                Rational m1 = binom(alpha, a1) * binom(alpha - a1, b1);
                Rational m2 = binom(beta, a2);
                EpsPoly term = A[a1] * B[b1] * PX[alpha - a1 - b1] * C[a2] * D[b2];
                entry = entry + term.scaled(m1 * m2);
            }
            if (!entry.is_zero()) row.push_back({col, std::move(entry)});
        }
        if (!row.empty()) sys.rows.push_back(std::move(row));
    }
    return sys;
}

LinearConditionSystem concat(LinearConditionSystem a, const LinearConditionSystem& b) {
    if (a.jet_degree != b.jet_degree) throw std::logic_error("concat: jet degree mismatch");
    for (auto& r : b.rows) a.rows.push_back(r);
    return a;
}

namespace {

QRow eval_row(const EpsRow& row, const Rational& v) {
    QRow q;
    for (auto& [col, p] : row) {
        Rational x = p.eval(v);
        if (x != 0) q.push_back({col, x});
    }
    return q;
}

QRow eps0_row(const EpsRow& row) {
    QRow q;
    for (auto& [col, p] : row) {
        Rational x = p.at(0);
        if (x != 0) q.push_back({col, x});
    }
    return q;
}

// dst += k * src for sparse rows
QRow qrow_axpy(const QRow& dst, const Rational& k, const QRow& src) {
    QRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i >= dst.size() || src[j].first < dst[i].first) {
            Rational v = k * src[j].second;
            if (v != 0) out.push_back({src[j].first, v});
            ++j;
        } else {
            Rational v = dst[i].second + k * src[j].second;
            if (v != 0) out.push_back({dst[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

EpsRow eps_axpy(const EpsRow& dst, const Rational& k, const EpsRow& src) {
    EpsRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i >= dst.size() || src[j].first < dst[i].first) {
            EpsPoly v = src[j].second.scaled(k);
            if (!v.is_zero()) out.push_back({src[j].first, std::move(v)});
            ++j;
        } else {
            EpsPoly v = dst[i].second + src[j].second.scaled(k);
            if (!v.is_zero()) out.push_back({dst[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

long row_valuation(const EpsRow& row) {
    long v = -1;
    for (auto& [col, p] : row) {
        long pv = p.valuation();
        if (pv >= 0) v = v < 0 ? pv : std::min(v, pv);
        if (v == 0) break;
    }
    return v;
}

EpsRow row_shift_down(const EpsRow& row, long k) {
    EpsRow out;
    for (auto& [col, p] : row) {
        EpsPoly q = p.shifted_down(k);
        if (!q.is_zero()) out.push_back({col, std::move(q)});
    }
    return out;
}

// Gauss elimination on sparse Q-rows; returns rank. `ops`, when given,
// receives the combination applied (for dependent-row extraction).
struct QElim {
    std::vector<QRow> pivots;         // echelon rows
    std::vector<int> pivot_cols;

    // reduce a row against current pivots; record coefficients used
    QRow reduce(QRow row, std::vector<std::pair<std::size_t, Rational>>* used) const {
        while (!row.empty()) {
            int lead = row.front().first;
            bool hit = false;
            for (std::size_t p = 0; p < pivots.size(); ++p) {
                if (pivot_cols[p] == lead) {
                    Rational k = -row.front().second / pivots[p].front().second;
                    if (used) used->push_back({p, k});
                    row = qrow_axpy(row, k, pivots[p]);
                    hit = true;
                    break;
                }
            }
            if (!hit) break;
        }
        return row;
    }

    void insert(QRow row) {
        pivot_cols.push_back(row.front().first);
        pivots.push_back(std::move(row));
    }
};

} // namespace

long rank_over_qeps(const LinearConditionSystem& sys) {
    // Specializing eps only ever loses rank, so a specialization reaching the
    // row count is exact. Otherwise fall back to exact elimination over Q(eps).
    const Rational probes[] = {Rational(3), Rational(7, 2), Rational(11), Rational(13, 5)};
    long best = 0;
    for (auto& v : probes) {
        QElim elim;
        for (auto& row : sys.rows) {
            QRow q = elim.reduce(eval_row(row, v), nullptr);
            if (!q.empty()) elim.insert(std::move(q));
        }
        best = std::max(best, long(elim.pivots.size()));
        if (best == long(sys.rows.size())) return best;
    }

    // exact fraction-free elimination on eps-polynomial rows
    std::vector<EpsRow> rows = sys.rows;
    long rank = 0;
    std::vector<EpsRow> echelon;
    for (auto& r : rows) {
        EpsRow cur = r;
        for (auto& piv : echelon) {
            if (cur.empty()) break;
            if (piv.front().first > cur.front().first) continue;
            // eliminate cur's entry at piv's lead column if present
            const int pc = piv.front().first;
            const EpsPoly* entry = nullptr;
            for (auto& [col, p] : cur)
                if (col == pc) {
                    entry = &p;
                    break;
                }
            if (!entry) continue;
            // cur <- cur * piv_lead - entry * piv (polynomial cross-multiplication)
            EpsRow scaled_cur;
            for (auto& [col, p] : cur) scaled_cur.push_back({col, p * piv.front().second});
            EpsRow scaled_piv;
            for (auto& [col, p] : piv) scaled_piv.push_back({col, p * *entry});
            EpsRow next;
            std::size_t i = 0, j = 0;
            while (i < scaled_cur.size() || j < scaled_piv.size()) {
                if (j >= scaled_piv.size() ||
                    (i < scaled_cur.size() && scaled_cur[i].first < scaled_piv[j].first)) {
                    next.push_back(std::move(scaled_cur[i++]));
                } else if (i >= scaled_cur.size() ||
                           scaled_piv[j].first < scaled_cur[i].first) {
                    EpsPoly v = scaled_piv[j].second.scaled(-1);
                    if (!v.is_zero()) next.push_back({scaled_piv[j].first, std::move(v)});
                    ++j;
                } else {
                    EpsPoly v = scaled_cur[i].second + scaled_piv[j].second.scaled(-1);
                    if (!v.is_zero()) next.push_back({scaled_cur[i].first, std::move(v)});
                    ++i;
                    ++j;
                }
            }
            // strip eps content to keep degrees down
            long val = row_valuation(next);
            if (val > 0) next = row_shift_down(next, val);
            cur = std::move(next);
        }
        if (!cur.empty()) {
            echelon.push_back(std::move(cur));
            std::sort(echelon.begin(), echelon.end(),
                      [](const EpsRow& a, const EpsRow& b) {
                          return a.front().first < b.front().first;
                      });
            ++rank;
        }
    }
    return rank;
}

LimitSystem flat_limit(const LinearConditionSystem& sys) {
    const long generic_rank = rank_over_qeps(sys);

    std::vector<EpsRow> rows;
    long degree_budget = long(sys.rows.size()) + 8;
    for (auto& r : sys.rows) {
        if (r.empty()) continue;
        rows.push_back(r);
        for (auto& [col, p] : r) degree_budget += p.degree() + 1;
    }

    long guard = degree_budget;
    while (true) {
        if (--guard < 0)
            throw std::runtime_error(
                "flat_limit: iteration guard exceeded; generic rank drops, malformed input");
        // normalize eps content
        for (auto& r : rows) {
            long v = row_valuation(r);
            if (v > 0) r = row_shift_down(r, v);
        }
        // eliminate the eps = 0 parts, tracking combinations over current rows
        QElim elim;
        std::vector<std::size_t> owner; // pivot index -> row index
        bool changed = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<std::pair<std::size_t, Rational>> used;
            QRow q = elim.reduce(eps0_row(rows[i]), &used);
            if (!q.empty()) {
                elim.insert(std::move(q));
                owner.push_back(i);
                continue;
            }
            // dependent at eps = 0: replace by the eps-divided combination
            EpsRow combo = rows[i];
            for (auto& [p, k] : used) combo = eps_axpy(combo, k, rows[owner[p]]);
            long v = row_valuation(combo);
            if (v < 0) {
                rows.erase(rows.begin() + long(i)); // genuine Q(eps) dependency
            } else {
                rows[i] = row_shift_down(combo, v);
            }
            changed = true;
            break;
        }
        if (!changed) {
            if (long(rows.size()) != generic_rank)
                throw std::runtime_error("flat_limit: limit rank differs from generic rank");
            break;
        }
    }

    // assemble the RREF of the eps = 0 rows
    LimitSystem lim;
    lim.jet_degree = sys.jet_degree;
    QElim elim;
    for (auto& r : rows) {
        QRow q = elim.reduce(eps0_row(r), nullptr);
        if (!q.empty()) elim.insert(std::move(q));
    }
    std::vector<QRow> work = elim.pivots;
    std::sort(work.begin(), work.end(),
              [](const QRow& a, const QRow& b) { return a.front().first < b.front().first; });
    for (std::size_t i = work.size(); i-- > 0;) {
        Rational inv = 1 / work[i].front().second;
        for (auto& [c, v] : work[i]) v *= inv;
        int lead = work[i].front().first;
        for (std::size_t j = 0; j < i; ++j) {
            for (auto& [c, v] : work[j]) {
                if (c == lead) {
                    work[j] = qrow_axpy(work[j], -v, work[i]);
                    break;
                }
                if (c > lead) break;
            }
        }
    }
    lim.rows = std::move(work);
    for (auto& r : lim.rows) lim.pivot_columns.push_back(r.front().first);
    lim.rank = long(lim.rows.size());

    // forced monomial <=> its unit functional is a row of the reduced system
    JetSpace jet = JetSpace::make(sys.jet_degree);
    lim.forced.assign(jet.basis.size(), 0);
    for (auto& r : lim.rows)
        if (r.size() == 1) lim.forced[std::size_t(r.front().first)] = 1;
    return lim;
}

bool LimitSystem::same_row_space(const LimitSystem& o) const {
    return jet_degree == o.jet_degree && rows == o.rows;
}

std::string LimitSystem::json(const JetSpace& jet) const {
    nlohmann::json j;
    j["columns"] = nlohmann::json::array();
    for (auto& m : jet.basis) j["columns"].push_back(m.str());
    j["rows"] = nlohmann::json::array();
    for (auto& r : rows) {
        nlohmann::json row = nlohmann::json::array();
        std::size_t k = 0;
        for (std::size_t c = 0; c < jet.basis.size(); ++c) {
            if (k < r.size() && r[k].first == int(c)) {
                row.push_back(to_string(r[k].second));
                ++k;
            } else {
                row.push_back("0");
            }
        }
        j["rows"].push_back(row);
    }
    return j.dump();
}

LimitSystem triangular_system(long p, long q, const JetSpace& jet) {
    if (q < 1 || q > p) throw std::domain_error("triangular_system: requires 1 <= q <= p");
    LimitSystem lim;
    lim.jet_degree = jet.degree_bound;
    std::set<int> cols;
    for (long a = 0; a <= p; ++a)
        for (long b = 0; a + b <= p; ++b) cols.insert(jet.index_of(a, b));
    for (long j = 0; j <= q; ++j)
        for (long b = 0; b <= q - j; ++b) cols.insert(jet.index_of(p + 1 + j - b, b));
    lim.forced.assign(jet.basis.size(), 0);
    for (int c : cols) {
        if (c < 0) throw std::domain_error("triangular_system: jet degree too small");
        lim.rows.push_back({{c, Rational(1)}});
        lim.pivot_columns.push_back(c);
        lim.forced[std::size_t(c)] = 1;
    }
    lim.rank = long(lim.rows.size());
    return lim;
}

NewtonDiagram staircase_of(const LimitSystem& limit, const JetSpace& jet) {
    std::vector<LatticePoint> survivors;
    std::vector<char> pivot_unit(jet.basis.size(), 0);
    for (std::size_t i = 0; i < jet.basis.size(); ++i)
        if (limit.forced[i]) pivot_unit[i] = 1;
    for (std::size_t i = 0; i < jet.basis.size(); ++i)
        if (!pivot_unit[i]) survivors.push_back({long(jet.basis[i].x), long(jet.basis[i].y)});
    if (survivors.empty())
        throw std::runtime_error("staircase_of: every jet coefficient is forced to zero");
    return diagram_of(std::move(survivors));
}

Polynomial generic_member(const LimitSystem& limit, const JetSpace& jet, unsigned long seed,
                          long range) {
    int origin = jet.index_of(0, 0);
    if (origin < 0 || !limit.forced[std::size_t(origin)])
        throw std::domain_error("generic_member: the system must force f(0,0) = 0");

    std::set<int> pivot_set(limit.pivot_columns.begin(), limit.pivot_columns.end());
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + std::uint64_t(attempt) * 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<long> pick(1, range);
        std::uniform_int_distribution<int> signpick(0, 1);
        std::vector<Rational> coeff(jet.basis.size(), Rational(0));
        for (std::size_t i = 0; i < jet.basis.size(); ++i) {
            if (pivot_set.count(int(i))) continue;
            long v = pick(rng);
            coeff[i] = Rational(signpick(rng) ? v : -v);
        }
        // pivots from back-substitution (rows are in reduced form)
        for (auto& row : limit.rows) {
            Rational acc = 0;
            for (std::size_t k = 1; k < row.size(); ++k)
                acc += row[k].second * coeff[std::size_t(row[k].first)];
            coeff[std::size_t(row.front().first)] = -acc;
        }
        Polynomial f;
        for (std::size_t i = 0; i < jet.basis.size(); ++i)
            if (coeff[i] != 0) f.add_term(jet.basis[i], coeff[i]);
        if (f.is_zero()) continue;
        if (nnd_check(f, diagram_of(f))) return f;
    }
    throw std::runtime_error(
        "generic_member: failed the non-degeneracy gate 8 times; widen the coefficient range");
}

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["x"] = x_label;
    j["y"] = y_label;
    j["data"] = data.str();
    j["jet_degree"] = jet_degree;
    j["seed"] = seed;
    j["rank_generic"] = rank_generic;
    j["rank_limit"] = rank_limit;
    j["staircase"] = nlohmann::json::parse(staircase.json());
    j["predicted"] = nlohmann::json::parse(predicted.json());
    j["mu_predicted"] = mu_predicted;
    j["mu_sample"] = mu_sample;
    j["mu_newton"] = mu_newton;
    j["checks"] = {{"staircase", staircase_ok}, {"mu_sample", mu_sample_ok},
                   {"mu_newton", mu_newton_ok}};
    j["pass"] = pass();
    if (!limit_system_json.empty()) j["limit_system"] = nlohmann::json::parse(limit_system_json);
    return j.dump();
}

VerifyReport verify_collision(const CollisionResult& prediction, const TypeName& x,
                              const TypeName& y, const CollisionData& data,
                              const LabOptions& opts) {
    data.check_consistent();
    LinearTypeSpec sx = lab_type_spec(x), sy = lab_type_spec(y);

    VerifyReport rep;
    rep.x_label = sx.label;
    rep.y_label = sy.label;
    rep.data = data;
    rep.seed = opts.seed;
    rep.predicted = prediction.result_diagram;
    rep.mu_predicted = prediction.invariants.mu;

    long mx = sx.own_diagram.mult(), my = sy.own_diagram.mult();
    long n = opts.jet_degree > 0 ? opts.jet_degree : 2 * (mx + my + 1);

    for (int guard_round = 0;; ++guard_round) {
        JetSpace jet = JetSpace::make(n);

        Frame fx = Frame::at_origin();
        if (sx.tangent_matters) {
            // tangent line along the collision axis when l = l_x, otherwise
            // along the transverse axis
            if (data.l_eq_lx)
                fx.set_directions({0, 1}, {1, 0});
            else
                fx.set_directions({1, 0}, {0, 1});
        }
        Frame fy = Frame::at_moving_point(opts.trajectory);
        if (sy.tangent_matters) {
            if (data.l_eq_ly)
                fy.set_directions({0, 1}, {1, 0});
            else if (data.lx_eq_ly && sx.tangent_matters && !data.l_eq_lx)
                fy.set_directions({1, 0}, {0, 1});
            else
                fy.set_directions({1, 0}, {0, 1});
        }

        LinearConditionSystem sys =
            concat(conditions_at(sx, fx, jet), conditions_at(sy, fy, jet));
        rep.rank_generic = rank_over_qeps(sys);
        LimitSystem lim = flat_limit(sys);
        rep.rank_limit = lim.rank;
        rep.jet_degree = n;

        NewtonDiagram stair = staircase_of(lim, jet);
        long mu_newton = newton_number(stair);
        if (n < mu_newton + 2 && guard_round < 8) {
            n *= 2; // jet space too small to certify the staircase; rerun
            continue;
        }

        rep.staircase = stair;
        rep.mu_newton = mu_newton;
        rep.staircase_ok = equal_up_to_swap(stair, prediction.result_diagram);

        Polynomial sample = generic_member(lim, jet, opts.seed, opts.coeff_range);
        MilnorOptions mopts;
        mopts.n_max = std::max(40L, 2 * mu_newton + 8);
        rep.mu_sample = milnor_local(sample, mopts);
        rep.mu_sample_ok = rep.mu_sample == rep.mu_predicted;
        rep.mu_newton_ok = rep.mu_newton == rep.mu_predicted;

        if (opts.emit_limit_system || !rep.pass()) rep.limit_system_json = lim.json(jet);
        return rep;
    }
}

} // namespace singcol
