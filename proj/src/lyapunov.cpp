#include "lyapq/lyapunov.hpp"

#include <cmath>
#include <limits>

#include "lyapq/errors.hpp"
#include "lyapq/quadrature.hpp"

namespace lyapq {

namespace {

constexpr double kLogFloor = 1e-300;

struct TrajectoryLog {
    double log_norm = 0.0;  // log ||D^(n)|| accumulated with renormalization
    bool flagged = false;
    std::vector<std::pair<int, double>> partials;  // (m, log||D^(m)||) at doubling m
};

// One renormalized product along the orbit of x. Records partial log norms at
// powers of two; subtracts the pointwise log |denom| when the cocycle carries one.
TrajectoryLog run_product(const Cocycle& c, double x, double eps, int n, bool record_partials) {
    TrajectoryLog out;
    Mat2C prod = Mat2C::identity();
    double log_acc = 0.0;
    const long double beta = c.freq.value();
    int next_record = 1;
    for (int j = 0; j < n; ++j) {
        const double phase = static_cast<double>(std::fmod(static_cast<long double>(x) + j * beta, 1.0L));
        const cplx z{phase, eps};
        prod = c.numer_value(z) * prod;
        double nrm = prod.norm();
        if (nrm < kLogFloor) {
            nrm = kLogFloor;
            out.flagged = true;
        }
        log_acc += std::log(nrm);
        prod *= 1.0 / nrm;
        if (c.denom) {
            double d = std::abs(c.denom->eval(z));
            if (d < kLogFloor) {
                d = kLogFloor;
                out.flagged = true;
            }
            log_acc -= std::log(d);
        }
        if (record_partials && (j + 1 == next_record || j + 1 == n)) {
            out.partials.emplace_back(j + 1, log_acc);
            if (j + 1 == next_record) next_record *= 2;
        }
    }
    out.log_norm = log_acc;
    return out;
}

} // namespace

LeEstimate le_iterative(const Cocycle& c, double eps, int n, int phase_samples) {
    if (n < 1 || phase_samples < 1) throw BadInput("le_iterative needs n >= 1 and phase_samples >= 1");
    if (c.matrix_is_zero()) throw ZeroCocycle();

    std::vector<TrajectoryLog> trajectories;
    trajectories.reserve(phase_samples);
    for (int i = 0; i < phase_samples; ++i)
        trajectories.push_back(run_product(c, (i + 0.5) / phase_samples, eps, n, true));

    LeEstimate out;
    int used = 0;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& t : trajectories) {
        if (t.flagged) {
            ++out.flagged_samples;
            continue;
        }
        const double v = t.log_norm / n;
        sum += v;
        sum_sq += v * v;
        ++used;
    }
    if (used == 0) {
        out.estimate = -std::numeric_limits<double>::infinity();
        return out;
    }
    out.estimate = sum / used;
    if (used > 1) out.phase_stderr = std::sqrt(std::max(0.0, sum_sq / used - out.estimate * out.estimate) / used);

    // average the partial sequences over unflagged trajectories (all share
    // the same doubling schedule)
    const size_t levels = trajectories.front().partials.size();
    for (size_t l = 0; l < levels; ++l) {
        double acc = 0.0;
        int cnt = 0;
        int m = 0;
        for (const auto& t : trajectories) {
            if (t.flagged) continue;
            m = t.partials[l].first;
            acc += t.partials[l].second / m;
            ++cnt;
        }
        if (cnt > 0) out.upper_sequence.emplace_back(m, acc / cnt);
    }
    return out;
}

double le_rational(const Cocycle& c, double eps, int quad_points) {
    if (!c.freq.is_rational()) throw NotRational();
    if (c.matrix_is_zero()) throw ZeroCocycle();
    const auto q = c.freq.q();
    if (quad_points < q) throw BadInput("le_rational needs quad_points >= q");

    // log rho(D^(q)(x + i eps)) with the scale carried separately
    auto log_rho = [&](double x) {
        Mat2C prod = Mat2C::identity();
        double log_scale = 0.0;
        const long double beta = c.freq.value();
        for (std::int64_t j = 0; j < q; ++j) {
            const double phase = static_cast<double>(std::fmod(static_cast<long double>(x) + j * beta, 1.0L));
            const cplx z{phase, eps};
            prod = c.numer_value(z) * prod;
            double nrm = prod.norm();
            if (nrm < kLogFloor) nrm = kLogFloor;
            log_scale += std::log(nrm);
            prod *= 1.0 / nrm;
            if (c.denom) {
                double d = std::abs(c.denom->eval(z));
                if (d < kLogFloor) d = kLogFloor;
                log_scale -= std::log(d);
            }
        }
        double rho = spectral_radius(prod);
        if (rho < kLogFloor) rho = kLogFloor;
        return log_scale + std::log(rho);
    };

    // composite panels over one fold; L = Int_0^{1/q} log rho dx
    const int nodes_per_fold = std::max<int>(static_cast<int>((quad_points + q - 1) / q), 24);
    static const GaussLegendre rule(12);
    const int panels = (nodes_per_fold + 11) / 12;
    const double fold = 1.0 / static_cast<double>(q);
    double acc = 0.0;
    for (int p = 0; p < panels; ++p)
        acc += rule.integrate(log_rho, fold * p / panels, fold * (p + 1) / panels);
    return acc;
}

GrowthRates solution_growth(const Cocycle& c, double x, std::array<cplx, 2> w0, int n) {
    if (n < 1) throw BadInput("solution_growth needs n >= 1");
    const double nw0 = std::sqrt(std::norm(w0[0]) + std::norm(w0[1]));
    if (std::abs(nw0 - 1.0) > 1e-9) throw BadInput("solution_growth needs a unit initial vector");

    GrowthRates out;
    const long double beta = c.freq.value();

    auto vec_norm = [](const std::array<cplx, 2>& w) { return std::sqrt(std::norm(w[0]) + std::norm(w[1])); };

    {
        std::array<cplx, 2> w = w0;
        double log_acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double phase = static_cast<double>(std::fmod(static_cast<long double>(x) + j * beta, 1.0L));
            w = c.value(cplx{phase, 0.0}).apply(w);
            double nrm = vec_norm(w);
            if (nrm < kLogFloor) nrm = kLogFloor;
            log_acc += std::log(nrm);
            w[0] /= nrm;
            w[1] /= nrm;
        }
        out.forward_rate = log_acc / n;
    }

    try {
        std::array<cplx, 2> w = w0;
        double log_acc = 0.0;
        for (int j = 1; j <= n; ++j) {
            long double ph = std::fmod(static_cast<long double>(x) - j * beta, 1.0L);
            if (ph < 0.0L) ph += 1.0L;
            const Mat2C m = c.value(cplx{static_cast<double>(ph), 0.0});
            if (std::abs(m.det()) < 1e-12) throw SingularInverse();
            w = m.inverse().apply(w);
            double nrm = vec_norm(w);
            if (nrm < kLogFloor) nrm = kLogFloor;
            log_acc += std::log(nrm);
            w[0] /= nrm;
            w[1] /= nrm;
        }
        out.backward_rate = log_acc / n;
    } catch (const SingularInverse&) {
        out.backward_rate.reset();
    }
    return out;
}

} // namespace lyapq
