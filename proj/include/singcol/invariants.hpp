#pragma once

#include <atomic>

#include "singcol/newton.hpp"
#include "singcol/polynomial.hpp"

namespace singcol {

// The five basic numbers of a germ. Construction goes through `make`, which
// enforces mu = 2*delta - r + 1 and kappa = mu + mult - 1; every record built
// anywhere in the program has passed that check.
struct InvariantRecord {
    long mult = 1;
    long mu = 0;
    long r = 1;
    long delta = 0;
    long kappa = 0;

    static InvariantRecord make(long mult, long mu, long r);
    static std::atomic<long>& constructed_count();

    bool operator==(const InvariantRecord& o) const {
        return mult == o.mult && mu == o.mu && r == o.r && delta == o.delta && kappa == o.kappa;
    }

    std::string json() const;
};

struct MilnorOptions {
    long n_max = 40; // jet-order ceiling for the stabilization loop
};

// Smallest total degree of a term; requires f(0,0) = 0 and f != 0.
long multiplicity(const Polynomial& f);

// Milnor number at the origin via the Jacobian ideal: the count
// dim Q[x,y] / (<df/dx, df/dy> + m^N) stabilized over increasing N.
long milnor_local(const Polynomial& f, const MilnorOptions& opts = {});

InvariantRecord invariant_record(const NewtonDiagram& d);
InvariantRecord invariant_record(const Polynomial& f, const MilnorOptions& opts = {});

} // namespace singcol
