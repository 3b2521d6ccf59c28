#ifndef LYAPQ_ERRORS_HPP
#define LYAPQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lyapq {

// Precondition violations and computation failures carry their own type so
// callers (and the CLI exit-code logic) can tell them apart.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IdenticallyZero : Error {
    IdenticallyZero() : Error("trigonometric polynomial is identically zero") {}
};

struct ZeroCocycle : Error {
    ZeroCocycle() : Error("cocycle matrix is identically zero (Lyapunov exponent -inf)") {}
};

struct NotRational : Error {
    NotRational() : Error("operation requires a rational frequency") {}
};

struct AtKink : Error {
    explicit AtKink(double eps)
        : Error("epsilon " + std::to_string(eps) + " is within one grid step of a detected kink") {}
};

struct SingularInverse : Error {
    SingularInverse() : Error("backward iteration hit |det| < 1e-12") {}
};

struct InadmissibleCoupling : Error {
    explicit InadmissibleCoupling(const std::string& what) : Error("inadmissible coupling: " + what) {}
};

struct ZeroLambda2 : Error {
    ZeroLambda2() : Error("duality map undefined for lambda2 = 0") {}
};

struct SingularGauge : Error {
    SingularGauge() : Error("every phase sample hit |c| below the gauge threshold") {}
};

struct EmptySet : Error {
    EmptySet() : Error("Hausdorff distance of an empty set is undefined") {}
};

struct BadInput : Error {
    using Error::Error;
};

} // namespace lyapq

#endif
