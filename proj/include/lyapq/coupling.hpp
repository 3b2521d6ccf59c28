#ifndef LYAPQ_COUPLING_HPP
#define LYAPQ_COUPLING_HPP

#include <cmath>

#include "lyapq/errors.hpp"

namespace lyapq {

// Hopping triple (l1, l2, l3): nearest-neighbor amplitude l2 and the two
// next-nearest amplitudes l1, l3. Admissible means all nonnegative with at
// least one positive; the constructor enforces this, so a Coupling value is
// always valid.
struct Coupling {
    double l1, l2, l3;

    Coupling(double lambda1, double lambda2, double lambda3) : l1(lambda1), l2(lambda2), l3(lambda3) {
        if (!(l1 >= 0.0) || !(l2 >= 0.0) || !(l3 >= 0.0))
            throw InadmissibleCoupling("amplitudes must be nonnegative");
        if (l1 == 0.0 && l2 == 0.0 && l3 == 0.0)
            throw InadmissibleCoupling("at least one amplitude must be positive");
    }

    double sum13() const { return l1 + l3; }
};

} // namespace lyapq

#endif
