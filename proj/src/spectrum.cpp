#include "lyapq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <complex>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "lyapq/harper.hpp"
#include "lyapq/parallel.hpp"

namespace lyapq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double gauge_floor = 1e-8;

double norm_bound(const Coupling& l) { return 2.0 + 2.0 * (l.l1 + l.l2 + l.l3); }

double median_spacing(const std::vector<double>& sorted_pts) {
    if (sorted_pts.size() < 2) return 1e-6;
    std::vector<double> gaps;
    gaps.reserve(sorted_pts.size() - 1);
    for (size_t i = 1; i < sorted_pts.size(); ++i) gaps.push_back(sorted_pts[i] - sorted_pts[i - 1]);
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    return std::max(gaps[gaps.size() / 2], 1e-12);
}

std::vector<std::pair<double, double>> merge_points(const std::vector<double>& pts, double tol) {
    std::vector<std::pair<double, double>> out;
    if (pts.empty()) return out;
    double lo = pts.front(), hi = pts.front();
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] - hi <= tol) {
            hi = pts[i];
        } else {
            out.emplace_back(lo, hi);
            lo = hi = pts[i];
        }
    }
    out.emplace_back(lo, hi);
    return out;
}

std::vector<double> truncation_eigenvalues(const TrigPoly& c, long double beta, long double theta, int N) {
    const int size = 2 * N + 1;
    Eigen::VectorXd diag(size), subdiag(size - 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        bool ok = true;
        for (int k = -N; k <= N; ++k) {
            long double ph = std::fmod(theta + k * beta, 1.0L);
            if (ph < 0.0L) ph += 1.0L;
            const double x = static_cast<double>(ph);
            diag(k + N) = 2.0 * std::cos(two_pi * x);
            if (k < N) {
                const double a = std::abs(c.eval(x));
                subdiag(k + N) = a;
                if (a < gauge_floor) ok = false;
            }
        }
        if (ok || attempt == 3) break;
        theta += 1e-6L;  // a measure-zero bad phase; nudge and rebuild
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + size};
}

} // namespace

SpectrumApprox spectrum_truncation(const Coupling& lambda, const Frequency& beta, int theta_samples,
                                   int N, int threads) {
    if (N < 50) throw BadInput("spectrum_truncation needs N >= 50");
    if (theta_samples < 1) throw BadInput("spectrum_truncation needs at least one phase");

    const long double b = beta.value();
    const TrigPoly c = harper_c(lambda, static_cast<double>(b));

    std::vector<std::vector<double>> per_theta(theta_samples);
    std::vector<double> per_theta_spacing(theta_samples, 1e-6);
    parallel_for(theta_samples, threads, [&](size_t t) {
        const long double theta = (static_cast<long double>(t) + 0.5L) / theta_samples;
        const std::vector<double> main = truncation_eigenvalues(c, b, theta, N);
        // Hard truncation parks spurious eigenvalues in the spectral gaps
        // (boundary-bound states). They move when the chain length changes
        // while band eigenvalues stay put, so keep only eigenvalues that
        // persist under a size change.
        const std::vector<double> alt = truncation_eigenvalues(c, b, theta, N + 13);
        const double spacing = median_spacing(main);
        per_theta_spacing[t] = spacing;
        const double match_tol = 4.0 * spacing;
        std::vector<double> kept;
        kept.reserve(main.size());
        size_t j = 0;
        for (const double e : main) {
            while (j + 1 < alt.size() && alt[j + 1] < e) ++j;
            double best = std::abs(alt[j] - e);
            if (j + 1 < alt.size()) best = std::min(best, std::abs(alt[j + 1] - e));
            if (best <= match_tol) kept.push_back(e);
        }
        per_theta[t] = std::move(kept);
    });

    SpectrumApprox out;
    out.method = "truncation";
    out.size_param = N;
    out.theta_samples = theta_samples;
    for (const auto& v : per_theta) out.points.insert(out.points.end(), v.begin(), v.end());
    std::sort(out.points.begin(), out.points.end());

    std::sort(per_theta_spacing.begin(), per_theta_spacing.end());
    const double tol = 2.0 * per_theta_spacing[per_theta_spacing.size() / 2];
    out.merged_intervals = merge_points(out.points, tol);
    return out;
}

namespace {

// log |tr M(E)| and sign(tr) for the normalized q-step transfer product,
// renormalized every step so huge gap values stay representable
struct DiscEval {
    const std::vector<double>& a;  // off-diagonals, a[k] couples k and k+1 (periodic)
    const std::vector<double>& v;

    std::pair<double, double> scaled_trace(double E) const {
        const size_t q = v.size();
        double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
        double log_scale = 0.0;
        for (size_t k = 0; k < q; ++k) {
            const double prev = a[(k + q - 1) % q];
            const double t11 = (E - v[k]) / a[k], t12 = -prev / a[k];
            const double n11 = t11 * m11 + t12 * m21, n12 = t11 * m12 + t12 * m22;
            const double n21 = m11, n22 = m12;
            m11 = n11;
            m12 = n12;
            m21 = n21;
            m22 = n22;
            const double nrm = std::sqrt(m11 * m11 + m12 * m12 + m21 * m21 + m22 * m22);
            if (nrm > 0.0) {
                m11 /= nrm;
                m12 /= nrm;
                m21 /= nrm;
                m22 /= nrm;
                log_scale += std::log(nrm);
            }
        }
        const double tr = m11 + m22;
        return {log_scale + std::log(std::max(std::abs(tr), 1e-300)), tr >= 0.0 ? 1.0 : -1.0};
    }

    double log_abs(double E) const { return scaled_trace(E).first; }
};

double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 60) {
    double flo = f(lo);
    for (int it = 0; it < iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

SpectrumApprox spectrum_floquet(const Coupling& lambda, std::int64_t p, std::int64_t q,
                                int theta_samples, int threads) {
    const Frequency beta = Frequency::rational(p, q);
    if (beta.q() != q) throw BadInput("spectrum_floquet needs gcd(p, q) = 1");
    if (theta_samples < 1) throw BadInput("spectrum_floquet needs at least one phase");

    const TrigPoly c = harper_c(lambda, static_cast<double>(beta.value()));
    const double bound = norm_bound(lambda) + 0.5;
    const double log2v = std::log(2.0);

    std::vector<std::vector<std::pair<double, double>>> bands_by_theta(theta_samples);
    std::vector<int> skipped(theta_samples, 0);

    parallel_for(theta_samples, threads, [&](size_t t) {
        const double theta = (static_cast<double>(t) + 0.5) / (theta_samples * static_cast<double>(q));
        std::vector<double> a(q), v(q);
        bool degenerate = false;
        for (std::int64_t k = 0; k < q; ++k) {
            double ph = std::fmod(theta + static_cast<double>(k) * static_cast<double>(beta.value()), 1.0);
            if (ph < 0.0) ph += 1.0;
            a[k] = std::abs(c.eval(ph));
            v[k] = 2.0 * std::cos(two_pi * ph);
            if (a[k] < gauge_floor) degenerate = true;
        }
        if (degenerate) {
            skipped[t] = 1;
            return;
        }
        DiscEval disc{a, v};

        // The q real zeros of the trace sit one per band, and narrow bands
        // come in nearly degenerate pairs, so a plain scan drops them. For
        // large q take the zeros as the eigenvalues of the quarter-phase
        // periodic matrix (det(E - H(phi)) = prod a * (disc(E) - 2 cos phi)),
        // which is complete by construction; small q gets a dense scan.
        std::vector<double> zeros;
        if (q >= 9) {
            Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(q, q);
            for (std::int64_t k = 0; k < q; ++k) H(k, k) = v[k];
            for (std::int64_t k = 0; k + 1 < q; ++k) {
                H(k, k + 1) = a[k];
                H(k + 1, k) = a[k];
            }
            const cplx corner = a[q - 1] * std::exp(cplx{0.0, std::numbers::pi / 2.0});
            H(q - 1, 0) = corner;
            H(0, q - 1) = std::conj(corner);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H, Eigen::EigenvaluesOnly);
            zeros.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + q);
            // polish each bracket against the trace itself
            for (double& z : zeros) {
                const double w = 1e-6 * bound;
                const auto lo = disc.scaled_trace(z - w), hi = disc.scaled_trace(z + w);
                if (lo.second != hi.second)
                    z = bisect([&](double e) { return disc.scaled_trace(e).second; }, z - w, z + w);
            }
        } else {
            const int grid_n = std::max<int>(512 * static_cast<int>(q), 512);
            double prev_E = -bound;
            auto prev = disc.scaled_trace(prev_E);
            for (int g = 1; g <= grid_n; ++g) {
                const double E = -bound + 2.0 * bound * g / grid_n;
                const auto cur = disc.scaled_trace(E);
                if (cur.second != prev.second) {
                    const double z =
                        bisect([&](double e) { return disc.scaled_trace(e).second; }, prev_E, E);
                    zeros.push_back(z);
                }
                prev = cur;
                prev_E = E;
            }
        }

        auto& bands = bands_by_theta[t];
        for (size_t i = 0; i < zeros.size(); ++i) {
            // walk outward from the trace zero to |disc| = 2 on either side
            const double lo_lim = (i == 0) ? -bound : 0.5 * (zeros[i - 1] + zeros[i]);
            const double hi_lim = (i + 1 == zeros.size()) ? bound : 0.5 * (zeros[i] + zeros[i + 1]);
            auto g2 = [&](double e) { return disc.log_abs(e) - log2v; };
            if (g2(zeros[i]) > 0.0) {
                // band narrower than the floating-point resolution of E
                // (|disc| blows past 2 one ulp away from the zero)
                bands.emplace_back(zeros[i], zeros[i]);
                continue;
            }
            double lo = zeros[i], hi = zeros[i];
            if (g2(lo_lim) > 0.0)
                lo = bisect(g2, lo_lim, zeros[i]);
            else
                lo = lo_lim;  // closed gap: band reaches the midpoint toward the neighbor
            if (g2(hi_lim) > 0.0)
                hi = bisect(g2, zeros[i], hi_lim);
            else
                hi = hi_lim;
            bands.emplace_back(lo, hi);
        }
    });

    SpectrumApprox out;
    out.method = "floquet";
    out.size_param = q;
    out.theta_samples = theta_samples;
    for (int s : skipped) out.skipped_thetas += s;
    if (out.skipped_thetas == theta_samples) throw SingularGauge();

    std::vector<std::pair<double, double>> all;
    for (const auto& bs : bands_by_theta) all.insert(all.end(), bs.begin(), bs.end());
    std::sort(all.begin(), all.end());
    // exact union of the band intervals
    for (const auto& iv : all) {
        if (!out.merged_intervals.empty() && iv.first <= out.merged_intervals.back().second + 1e-12)
            out.merged_intervals.back().second = std::max(out.merged_intervals.back().second, iv.second);
        else
            out.merged_intervals.push_back(iv);
    }
    for (const auto& iv : out.merged_intervals) {
        const int extra = std::min(2000, static_cast<int>(std::floor((iv.second - iv.first) / 1e-3)));
        out.points.push_back(iv.first);
        for (int e = 1; e <= extra; ++e)
            out.points.push_back(iv.first + (iv.second - iv.first) * e / (extra + 1));
        out.points.push_back(iv.second);
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

double hausdorff(const SpectrumApprox& a, const SpectrumApprox& b) {
    if (a.points.empty() || b.points.empty()) throw EmptySet();
    auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0.0;
        size_t j = 0;
        for (const double x : from) {
            while (j + 1 < to.size() && to[j + 1] < x) ++j;
            double best = std::abs(to[j] - x);
            if (j + 1 < to.size()) best = std::min(best, std::abs(to[j + 1] - x));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a.points, b.points), directed(b.points, a.points));
}

std::vector<double> sample_midband(const SpectrumApprox& spec, int count) {
    std::vector<std::pair<double, double>> ivs = spec.merged_intervals;
    std::stable_sort(ivs.begin(), ivs.end(), [](const auto& a, const auto& b) {
        return (a.second - a.first) > (b.second - b.first);
    });
    std::vector<double> out;
    for (const auto& iv : ivs) {
        if (static_cast<int>(out.size()) >= count) break;
        out.push_back(0.5 * (iv.first + iv.second));
    }
    // not enough bands: add interior quartiles of the widest ones
    for (int pass = 0; static_cast<int>(out.size()) < count && pass < 2; ++pass) {
        const double frac = pass == 0 ? 0.25 : 0.75;
        for (const auto& iv : ivs) {
            if (static_cast<int>(out.size()) >= count) break;
            if (iv.second - iv.first <= 0.0) continue;
            out.push_back(iv.first + frac * (iv.second - iv.first));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lyapq
