#include "lyapq/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "lyapq/harper.hpp"
#include "lyapq/jensen.hpp"
#include "lyapq/lyapunov.hpp"
#include "lyapq/parallel.hpp"
#include "lyapq/sweep.hpp"

namespace lyapq {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const double kLog2 = std::log(2.0);

CheckRow row(const std::string& name, double target, double computed, double tol, std::string note = "") {
    CheckRow r;
    r.name = name;
    r.target = target;
    r.computed = computed;
    r.tolerance = tol;
    r.pass = std::isfinite(computed) && std::abs(computed - target) <= tol;
    r.note = std::move(note);
    return r;
}

// pass iff computed <= limit (one-sided checks)
CheckRow bound_row(const std::string& name, double computed, double limit, std::string note = "") {
    CheckRow r;
    r.name = name;
    r.target = limit;
    r.computed = computed;
    r.tolerance = limit;
    r.pass = std::isfinite(computed) && computed <= limit;
    r.note = std::move(note);
    return r;
}

std::string lam_str(const Coupling& l) {
    std::ostringstream os;
    os << "(" << l.l1 << "," << l.l2 << "," << l.l3 << ")";
    return os.str();
}

} // namespace

const std::map<std::string, std::vector<int>>& VerifySuite::panels() {
    static const std::map<std::string, std::vector<int>> table = {
        {"thouless", {1, 2, 3}},   {"quantization", {4}}, {"asymptotics", {5, 7}},
        {"jensen", {6}},           {"duality", {8}},      {"continuity", {9, 10}},
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
    };
    return table;
}

const SpectrumApprox& VerifySuite::truncation_spectrum(double l1, double l2, double l3, int theta, int N) {
    std::ostringstream key;
    key << l1 << "," << l2 << "," << l3 << ":" << theta << ":" << N;
    auto it = spectra_.find(key.str());
    if (it == spectra_.end()) {
        const Coupling lam{l1, l2, l3};
        it = spectra_.emplace(key.str(), spectrum_truncation(lam, Frequency::golden(), theta, N, threads_)).first;
    }
    return it->second;
}

CriterionResult VerifySuite::run_criterion(int k) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    switch (k) {
        case 1: res = aubry_andre(); break;
        case 2: res = thouless_region_one(); break;
        case 3: res = thouless_regions_23(); break;
        case 4: res = quantization(); break;
        case 5: res = asymptotics(); break;
        case 6: res = jensen_suite(); break;
        case 7: res = profile_extrapolation(); break;
        case 8: res = duality_identity(); break;
        case 9: res = frequency_continuity(); break;
        case 10: res = oseledets(); break;
        default: throw BadInput("criterion index must be 1..10");
    }
    res.criterion = k;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<CriterionResult> VerifySuite::run_panel(const std::string& panel) {
    const auto& table = panels();
    const auto it = table.find(panel);
    if (it == table.end()) throw BadInput("unknown verify panel '" + panel + "'");
    std::vector<CriterionResult> out;
    for (int k : it->second) out.push_back(run_criterion(k));
    return out;
}

// 1. Almost Mathieu at coupling 1/l2 = 2: LE on the spectrum equals log 2,
//    checked with the rational 233/377 backend and the golden-mean iterative one.
CriterionResult VerifySuite::aubry_andre() {
    CriterionResult res;
    res.title = "almost Mathieu LE = log 2 on the spectrum";
    const Coupling lam{0.0, 0.5, 0.0};
    const auto& spec = truncation_spectrum(0.0, 0.5, 0.0, 32, 1000);
    const auto energies = sample_midband(spec, 7);

    const Frequency fib = Frequency::rational(233, 377);
    const Frequency gold = Frequency::golden();
    std::vector<CheckRow> rows(2 * energies.size());
    parallel_for(energies.size(), threads_, [&](size_t i) {
        const double E = energies[i];
        const double le_rat = le_rational(build_cocycle(lam, fib, E, TransferKind::B), 0.0, 32 * 377);
        const double le_it =
            le_iterative(build_cocycle(lam, gold, E, TransferKind::B), 0.0, 10000, 8).estimate;
        std::ostringstream n1;
        n1 << "E=" << E << " beta=233/377";
        rows[2 * i] = row("amo_rational_" + std::to_string(i), kLog2, le_rat, 0.02, n1.str());
        std::ostringstream n2;
        n2 << "E=" << E << " beta=golden";
        rows[2 * i + 1] = row("amo_iterative_" + std::to_string(i), kLog2, le_it, 0.02, n2.str());
    });
    res.rows = rows;
    return res;
}

// 2. Closed-form LE in region I vs the iterative estimate on sampled spectrum.
CriterionResult VerifySuite::thouless_region_one() {
    CriterionResult res;
    res.title = "region I closed-form LE matches numeric LE";
    const std::vector<Coupling> panel = {{0.25, 0.25, 0.25}, {0.5, 0.2, 0.2}, {0.1, 0.7, 0.3}};
    const Frequency gold = Frequency::golden();
    for (const auto& lam : panel) {
        const auto& spec = truncation_spectrum(lam.l1, lam.l2, lam.l3, 16, 500);
        const auto energies = sample_midband(spec, 7);
        const double target = thouless_le(lam);
        std::vector<CheckRow> rows(energies.size());
        parallel_for(energies.size(), threads_, [&](size_t i) {
            const double le =
                le_iterative(build_cocycle(lam, gold, energies[i], TransferKind::B), 0.0, 30000, 8).estimate;
            std::ostringstream note;
            note << lam_str(lam) << " E=" << energies[i];
            rows[i] = row("regionI_" + lam_str(lam) + "_" + std::to_string(i), target, le, 0.02, note.str());
        });
        res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    }
    return res;
}

// 3. Zero LE on the spectrum in regions II and III.
CriterionResult VerifySuite::thouless_regions_23() {
    CriterionResult res;
    res.title = "regions II and III have zero LE on the spectrum";
    const std::vector<Coupling> panel = {{0.2, 2.0, 0.3}, {1.0, 0.5, 0.5}, {0.8, 0.5, 0.7}};
    const Frequency gold = Frequency::golden();
    for (const auto& lam : panel) {
        const auto& spec = truncation_spectrum(lam.l1, lam.l2, lam.l3, 16, 500);
        const auto energies = sample_midband(spec, 7);
        std::vector<CheckRow> rows(energies.size());
        parallel_for(energies.size(), threads_, [&](size_t i) {
            const double le =
                le_iterative(build_cocycle(lam, gold, energies[i], TransferKind::B), 0.0, 100000, 8)
                    .estimate;
            std::ostringstream note;
            note << lam_str(lam) << " E=" << energies[i];
            rows[i] =
                bound_row("region23_" + lam_str(lam) + "_" + std::to_string(i), std::abs(le), 0.02, note.str());
        });
        res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    }
    return res;
}

// 4. Quantization of acceleration and convexity of the eps-profile for the
//    couplings of criteria 1-2 lying in the transversal set (l1 != l3,
//    l2 != l1 + l3).
CriterionResult VerifySuite::quantization() {
    CriterionResult res;
    res.title = "acceleration quantized away from kinks; profile convex";
    const std::vector<Coupling> panel = {{0.5, 0.2, 0.2}, {0.1, 0.7, 0.3}};
    const Frequency gold = Frequency::golden();
    for (const auto& lam : panel) {
        const auto& spec = truncation_spectrum(lam.l1, lam.l2, lam.l3, 16, 500);
        const double E = sample_midband(spec, 1).at(0);
        SweepOptions opt;
        opt.backend = LeBackend::iterative;
        opt.n = 10000;
        opt.phase_samples = 8;
        opt.threads = threads_;
        const Cocycle coc = build_cocycle(lam, gold, E, TransferKind::A);
        const LEProfile prof = epsilon_sweep(coc, -0.5, 0.5, 21, opt);

        for (double eps : {-0.4, -0.25, 0.25, 0.4}) {
            const Acceleration acc = acceleration_at(prof, eps);
            const double expected = eps < 0 ? -1.0 : 1.0;
            std::ostringstream id;
            id << "quant_omega_" << lam_str(lam) << (eps < 0 ? "_m" : "_p") << std::abs(eps);
            std::ostringstream note;
            note << lam_str(lam) << " eps=" << eps << " residual=" << acc.residual;
            res.rows.push_back(row(id.str(), expected, acc.omega, 0.05, note.str()));
        }
        // discrete convexity: second differences above -3x the noise floor of
        // the second-difference statistic
        const double floor2 = 3.0 * std::sqrt(6.0) * prof.noise_floor;
        double worst = 0.0;
        for (size_t i = 1; i + 1 < prof.le_values.size(); ++i)
            worst = std::min(worst,
                             prof.le_values[i + 1] - 2.0 * prof.le_values[i] + prof.le_values[i - 1]);
        std::ostringstream note;
        note << lam_str(lam) << " noise_floor=" << prof.noise_floor;
        res.rows.push_back(bound_row("convexity_" + lam_str(lam), -worst, floor2, note.str()));
    }
    return res;
}

// 5. Large-|eps| asymptotics L(A_eps) = 2 pi |eps| + L_M at eps = +-2.
CriterionResult VerifySuite::asymptotics() {
    CriterionResult res;
    res.title = "L(A_eps) - 2 pi |eps| approaches L_M at |eps| = 2";
    const std::vector<Coupling> panel = {{0.25, 0.25, 0.25}, {0.5, 0.2, 0.2}, {0.1, 0.7, 0.3}, {1.0, 0.5, 0.0}};
    const Frequency fib = Frequency::rational(233, 377);
    for (const auto& lam : panel) {
        const auto& spec = truncation_spectrum(lam.l1, lam.l2, lam.l3, 16, 300);
        const double E = sample_midband(spec, 1).at(0);
        const Cocycle coc = build_cocycle(lam, fib, E, TransferKind::A);
        for (double eps : {-2.0, 2.0}) {
            const double le = le_rational(coc, eps, 32 * 377);
            std::ostringstream note;
            note << lam_str(lam) << " eps=" << eps << " E=" << E;
            res.rows.push_back(row("asym_" + lam_str(lam) + (eps > 0 ? "_p2" : "_m2"),
                                   two_pi * std::abs(eps) + L_M(lam), le, 5e-3, note.str()));
        }
    }
    return res;
}

// 6. Exact piecewise-linear I_eps vs log-singular quadrature; integer slopes.
CriterionResult VerifySuite::jensen_suite() {
    CriterionResult res;
    res.title = "Jensen: exact vs quadrature agreement, integer slopes";
    std::mt19937 rng(20240611u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> deg(1, 6);

    double worst_off_kink = 0.0;
    double worst_slope_dev = 0.0;
    int off_kink_checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        TrigPoly p(deg(rng));
        for (int k = -p.degree(); k <= p.degree(); ++k) p.set_coeff(k, cplx{unit(rng), unit(rng)});
        if (p.is_zero(1e-12)) continue;
        const JensenProfile prof = i_eps_exact(p);
        for (const auto& seg : prof.segments) {
            const double ratio = seg.slope / two_pi;
            worst_slope_dev = std::max(worst_slope_dev, std::abs(ratio - std::round(ratio)));
        }
        for (double eps : {-0.8, -0.15, 0.3, 0.75}) {
            bool near_kink = false;
            for (double k : prof.kink_eps)
                if (std::abs(eps - k) < 1e-3) near_kink = true;
            if (near_kink) continue;
            const double exact = prof.eval(eps);
            const double quad = i_eps_quadrature(p, eps, 1e-9);
            worst_off_kink = std::max(worst_off_kink, std::abs(exact - quad));
            ++off_kink_checks;
        }
    }
    res.rows.push_back(bound_row("jensen_random_polys", worst_off_kink, 1e-6,
                                 std::to_string(off_kink_checks) + " eps checks off kinks"));
    res.rows.push_back(bound_row("jensen_integer_slopes", worst_slope_dev, 1e-12, "slopes/(2 pi) vs nearest int"));

    // Harper coefficient sweep: closed form vs quadrature
    const double beta = static_cast<double>(Frequency::golden().value());
    double worst_harper = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Coupling lam{0.05 + 1.2 * std::abs(unit(rng)), 0.05 + 1.5 * std::abs(unit(rng)),
                           0.05 + 1.2 * std::abs(unit(rng))};
        const double eps = unit(rng);
        const TrigPoly c = harper_c(lam, beta);
        // skip eps landing on a kink of the exact profile
        const JensenProfile prof = i_eps_exact(c);
        bool near_kink = false;
        for (double k : prof.kink_eps)
            if (std::abs(eps - k) < 1e-3) near_kink = true;
        if (near_kink) continue;
        const double closed = harper_i_eps_closed(lam, eps);
        const double quad = i_eps_quadrature(c, eps, 1e-9);
        worst_harper = std::max(worst_harper, std::abs(closed - quad));
    }
    res.rows.push_back(bound_row("jensen_harper_sweep", worst_harper, 1e-6, "closed form vs quadrature"));
    return res;
}

// 7. Full complexified profile for (0.25, 0.25, 0.25) against
//    max(I(lambda), L_M + 2 pi |eps|) pointwise on [-1, 1].
CriterionResult VerifySuite::profile_extrapolation() {
    CriterionResult res;
    res.title = "complexified LE profile matches the extrapolated formula";
    const Coupling lam{0.25, 0.25, 0.25};
    const auto& spec = truncation_spectrum(0.25, 0.25, 0.25, 16, 500);
    const double E = sample_midband(spec, 1).at(0);
    const Frequency gold = Frequency::golden();
    const Cocycle coc = build_cocycle(lam, gold, E, TransferKind::A);

    const int steps = 21;
    std::vector<CheckRow> rows(steps);
    parallel_for(steps, threads_, [&](size_t i) {
        const double eps = -1.0 + 2.0 * static_cast<double>(i) / (steps - 1);
        const double le = le_iterative(coc, eps, 20000, 8).estimate;
        const double target = complex_le(lam, eps).le_A_lower;
        std::ostringstream note;
        note << "eps=" << eps << " E=" << E;
        rows[i] = row("profile_" + std::to_string(i), target, le, 0.02, note.str());
    });
    res.rows = rows;
    return res;
}

// 8. Duality identity residual for three region-I couplings.
CriterionResult VerifySuite::duality_identity() {
    CriterionResult res;
    res.title = "duality identity holds with independently computed LEs";
    const std::vector<Coupling> panel = {{0.25, 0.25, 0.25}, {0.3, 0.9, 0.2}, {0.5, 0.2, 0.2}};
    const Frequency gold = Frequency::golden();
    for (const auto& lam : panel) {
        const auto& spec = truncation_spectrum(lam.l1, lam.l2, lam.l3, 16, 500);
        const auto energies = sample_midband(spec, 3);
        std::vector<CheckRow> rows(energies.size());
        parallel_for(energies.size(), threads_, [&](size_t i) {
            IterOptions opts;
            opts.n = 40000;
            opts.phase_samples = 8;
            const double resid = duality_le_identity_check(lam, gold, energies[i], opts);
            std::ostringstream note;
            note << lam_str(lam) << " E=" << energies[i];
            rows[i] = bound_row("duality_" + lam_str(lam) + "_" + std::to_string(i), resid, 0.03, note.str());
        });
        res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    }
    return res;
}

// 9. Continuity along the Fibonacci convergents 13/21 -> 233/377 at eps = 0.1:
//    rational LE Cauchy, spectra Hausdorff-converging.
CriterionResult VerifySuite::frequency_continuity() {
    CriterionResult res;
    res.title = "rational approximants converge (LE Cauchy, spectra shrinking)";
    const Coupling lam{0.25, 0.25, 0.25};
    const std::vector<Convergent> convs = {{13, 21}, {21, 34}, {34, 55}, {55, 89},
                                           {89, 144}, {144, 233}, {233, 377}};
    const auto& spec_gold = truncation_spectrum(0.25, 0.25, 0.25, 16, 500);
    const double E = sample_midband(spec_gold, 1).at(0);

    std::vector<double> les(convs.size());
    parallel_for(convs.size(), threads_, [&](size_t i) {
        const Frequency f = Frequency::rational(convs[i].p, convs[i].q);
        les[i] = le_rational(build_cocycle(lam, f, E, TransferKind::A), 0.1, 32 * static_cast<int>(convs[i].q));
    });
    std::vector<double> gaps;
    for (size_t i = 1; i < les.size(); ++i) gaps.push_back(std::abs(les[i] - les[i - 1]));
    std::ostringstream note;
    note << "gaps:";
    for (double g : gaps) note << " " << g;
    res.rows.push_back(bound_row("le_cauchy_last_gap", gaps.back(), 0.01, note.str()));

    std::vector<SpectrumApprox> specs(convs.size());
    parallel_for(convs.size(), threads_, [&](size_t i) {
        specs[i] = spectrum_floquet(lam, convs[i].p, convs[i].q, 64, 1);
    });
    double prev = -1.0;
    bool decreasing = true;
    std::ostringstream hnote;
    hnote << "hausdorff:";
    for (size_t i = 1; i < specs.size(); ++i) {
        const double h = hausdorff(specs[i - 1], specs[i]);
        hnote << " " << h;
        if (prev >= 0.0 && h > prev) decreasing = false;
        prev = h;
    }
    res.rows.push_back(bound_row("spectra_hausdorff_decreasing", decreasing ? 0.0 : 1.0, 0.5, hnote.str()));
    return res;
}

// 10. Oseledets growth rates: generic vectors see +LE; for constant diagonal
//     cocycles the contracting subspace realizes -L + 2m exactly.
CriterionResult VerifySuite::oseledets() {
    CriterionResult res;
    res.title = "solution growth rates match the Oseledets splitting";
    const Frequency gold = Frequency::golden();

    const Coupling amo{0.0, 0.5, 0.0};
    const auto& spec = truncation_spectrum(0.0, 0.5, 0.0, 32, 1000);
    const auto energies = sample_midband(spec, 3);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t i = 0; i < energies.size(); ++i) {
        const Cocycle coc = build_cocycle(amo, gold, energies[i], TransferKind::B);
        const GrowthRates g = solution_growth(coc, 0.137, {cplx{inv_sqrt2}, cplx{inv_sqrt2}}, 20000);
        std::ostringstream note;
        note << "E=" << energies[i];
        res.rows.push_back(row("oseledets_generic_" + std::to_string(i), kLog2, g.forward_rate, 0.05, note.str()));
    }

    {
        const Cocycle d = Cocycle::constant(gold, Mat2C::diag(2.0, 0.5));
        const GrowthRates stable = solution_growth(d, 0.2, {cplx{0.0}, cplx{1.0}}, 512);
        res.rows.push_back(row("oseledets_diag_S", -kLog2, stable.forward_rate, 1e-12, "w0 = e2, det = 1 (m = 0)"));
        const GrowthRates top = solution_growth(d, 0.2, {cplx{1.0}, cplx{0.0}}, 512);
        res.rows.push_back(row("oseledets_diag_top", kLog2, top.forward_rate, 1e-12, "w0 = e1"));
    }
    {
        // det = 3: m = log(3)/2, so the S rate is -L + 2m = 0
        const Cocycle d = Cocycle::constant(gold, Mat2C::diag(3.0, 1.0));
        const GrowthRates stable = solution_growth(d, 0.2, {cplx{0.0}, cplx{1.0}}, 512);
        res.rows.push_back(row("oseledets_diag_det3_S", 0.0, stable.forward_rate, 1e-12, "-L + 2m with m = log(3)/2"));
    }
    return res;
}

} // namespace lyapq
