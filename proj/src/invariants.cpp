#include "singcol/invariants.hpp"

#include <stdexcept>

#include "json.hpp"
#include "singcol/groebner.hpp"

namespace singcol {

std::atomic<long>& InvariantRecord::constructed_count() {
    static std::atomic<long> count{0};
    return count;
}

InvariantRecord InvariantRecord::make(long mult, long mu, long r) {
    if ((mu + r - 1) % 2 != 0)
        throw std::logic_error("InvariantRecord: mu + r - 1 is odd, inconsistent inputs");
    InvariantRecord rec;
    rec.mult = mult;
    rec.mu = mu;
    rec.r = r;
    rec.delta = (mu + r - 1) / 2;
    rec.kappa = mu + mult - 1;
    if (rec.mu != 2 * rec.delta - rec.r + 1 || rec.kappa != rec.mu + rec.mult - 1 ||
        rec.delta < 0 || rec.mult > rec.mu + 1)
        throw std::logic_error("InvariantRecord: identity check failed");
    ++constructed_count();
    return rec;
}

std::string InvariantRecord::json() const {
    nlohmann::json j;
    j["mult"] = mult;
    j["mu"] = mu;
    j["r"] = r;
    j["delta"] = delta;
    j["kappa"] = kappa;
    return j.dump();
}

long multiplicity(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("multiplicity: zero polynomial");
    auto d = f.min_total_degree();
    if (*d == 0) throw std::domain_error("multiplicity: f(0,0) != 0, not a germ");
    return *d;
}

namespace {

std::optional<long> truncated_quotient_dim(const Polynomial& fx, const Polynomial& fy, long n) {
    // single-term generators first so reductions try them before the dense ones
    std::vector<Polynomial> gens;
    for (long i = 0; i <= n; ++i)
        gens.push_back(Polynomial::term(1, Monomial::of(std::uint32_t(i), std::uint32_t(n - i))));
    gens.push_back(fx.truncated(n + 1));
    gens.push_back(fy.truncated(n + 1));
    GroebnerOptions opts;
    opts.degree_cap = n;
    auto gb = buchberger(std::move(gens), degrevlex(), opts);
    return standard_monomial_count(gb, degrevlex());
}

} // namespace

long milnor_local(const Polynomial& f, const MilnorOptions& opts) {
    if (f.uses(Var::E)) throw std::invalid_argument("milnor_local: polynomial must use {x, y} only");
    long m = multiplicity(f);
    Polynomial fx = f.derivative(Var::X), fy = f.derivative(Var::Y);

    long n = m + 2;
    long step = 1;
    std::optional<long> prev;
    while (n <= opts.n_max) {
        auto count = truncated_quotient_dim(fx, fy, n);
        if (!count)
            throw std::domain_error("milnor_local: quotient not finite at jet order " + std::to_string(n));
        if (prev && *prev == *count) return *count;
        prev = count;
        n += step;
        step *= 2;
    }
    throw std::domain_error(
        "milnor_local: dimension did not stabilize by N_max = " + std::to_string(opts.n_max) +
        "; singularity is non-isolated or too degenerate for this ceiling");
}

InvariantRecord invariant_record(const NewtonDiagram& d) {
    if (d.x_offset >= 2 || d.y_offset >= 2)
        throw std::domain_error("invariant_record: offsets >= 2, non-reduced");
    long mu = newton_number(d);
    long r = generic_branch_count(d);
    return InvariantRecord::make(d.mult(), mu, r);
}

InvariantRecord invariant_record(const Polynomial& f, const MilnorOptions& opts) {
    NewtonDiagram d = diagram_of(f);
    if (!nnd_check(f, d))
        throw std::domain_error(
            "invariant_record: polynomial is degenerate for its Newton diagram; resample coefficients");
    long mu = milnor_local(f, opts);
    long r = generic_branch_count(d);
    return InvariantRecord::make(d.mult(), mu, r);
}

} // namespace singcol
