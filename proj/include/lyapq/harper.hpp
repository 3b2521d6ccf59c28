#ifndef LYAPQ_HARPER_HPP
#define LYAPQ_HARPER_HPP

#include <string>

#include "lyapq/cocycle.hpp"
#include "lyapq/coupling.hpp"
#include "lyapq/frequency.hpp"
#include "lyapq/jensen.hpp"

namespace lyapq {

enum class Region { I, II, III };

std::string to_string(Region r);

// Region tag plus the active boundary equalities (at 1e-12). Points on a
// boundary get the lowest-numbered matching tag; criticality tests use the
// inclusive inequalities, not the tag.
struct RegionTag {
    Region tag;
    bool on_sum13_eq_1 = false;
    bool on_l2_eq_1 = false;
    bool on_sum13_eq_l2 = false;
    bool on_l1_eq_l3 = false;
};

enum class Criticality { subcritical, critical, supercritical };

std::string to_string(Criticality c);

struct HarperVerdict {
    double le_on_spectrum;  // nats
    double delta;           // L_M - I(lambda)
    Criticality criticality;
    double L_M;
};

enum class TransferKind { A, B };

// c_lambda(x) = l3 e^{-2 pi i (x + beta/2)} + l2 + l1 e^{2 pi i (x + beta/2)}
TrigPoly harper_c(const Coupling& lambda, double beta);

// Jacobi transfer cocycle: A = ((E - 2cos(2 pi x), -cbar(x - beta)), (c(x), 0));
// B divides by c pointwise (carried as a denominator, never expanded).
Cocycle build_cocycle(const Coupling& lambda, const Frequency& beta, double E, TransferKind which);

RegionTag region(const Coupling& lambda);

// Exponent of the constant matrix governing the large-|eps| asymptotics:
// log |(1 + sqrt(1 - 4 l1 l3)) / 2|, principal branch when the argument is negative.
double L_M(const Coupling& lambda);

// Closed-form Lyapunov exponent on the spectrum: zero in regions II and III,
// the three-case formula in region I. Equals max(delta, 0).
double thouless_le(const Coupling& lambda);

// Delta = L_M - I(lambda), in the three-case closed form valid for all
// admissible couplings.
double delta(const Coupling& lambda);

struct ComplexLe {
    double le_A_lower;        // max(I(lambda), L_M + 2 pi |eps|); equality on the spectrum
    double le_B_on_spectrum;  // le_A_lower - I_eps(lambda)
};

ComplexLe complex_le(const Coupling& lambda, double eps);

// The involution (l1, l2, l3) -> (l3/l2, 1/l2, l1/l2) exchanging regions I
// and II and fixing III.
Coupling duality(const Coupling& lambda);

HarperVerdict criticality(const Coupling& lambda);

struct IterOptions {
    int n = 10000;
    int phase_samples = 8;
};

// Residual of the duality identity
//   L(B_lambda^E) = Int log |l2 c_{sigma(lambda)} / c_lambda| dx + L(B_{sigma(lambda)}^{E/l2}),
// both exponents estimated numerically, the integral taken in closed form.
double duality_le_identity_check(const Coupling& lambda, const Frequency& beta, double E,
                                 const IterOptions& opts = {});

} // namespace lyapq

#endif
