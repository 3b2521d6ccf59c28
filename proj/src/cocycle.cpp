#include "lyapq/cocycle.hpp"

#include <cmath>

#include <json.hpp>

#include "lyapq/errors.hpp"
#include "lyapq/rootfind.hpp"

namespace lyapq {

bool Cocycle::singular(double tol) const {
    const TrigPoly det = det_poly().trimmed(1e-14);
    if (det.is_zero()) return true;  // identically vanishing determinant
    const RootList rl = roots_on_cylinder(det);
    for (const auto& r : rl.roots)
        if (std::abs(r.eps) < tol) return true;
    return false;
}

Cocycle Cocycle::constant(const Frequency& beta, const Mat2C& m) {
    Cocycle c;
    c.freq = beta;
    c.matrix[0][0] = TrigPoly::constant(m.a11);
    c.matrix[0][1] = TrigPoly::constant(m.a12);
    c.matrix[1][0] = TrigPoly::constant(m.a21);
    c.matrix[1][1] = TrigPoly::constant(m.a22);
    return c;
}

Cocycle Cocycle::from_json(const Frequency& beta, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput(std::string("cocycle: bad JSON: ") + e.what());
    }
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 2)
        throw BadInput("cocycle JSON needs \"matrix\": [[p11, p12], [p21, p22]]");
    Cocycle c;
    c.freq = beta;
    for (int i = 0; i < 2; ++i) {
        if (!j["matrix"][i].is_array() || j["matrix"][i].size() != 2)
            throw BadInput("cocycle JSON needs a 2x2 matrix of trig polynomials");
        for (int k = 0; k < 2; ++k) c.matrix[i][k] = TrigPoly::from_json(j["matrix"][i][k].dump());
    }
    if (j.contains("denom")) c.denom = TrigPoly::from_json(j["denom"].dump());
    return c;
}

std::string Cocycle::matrix_json() const {
    nlohmann::json j;
    j["matrix"] = {{nlohmann::json::parse(matrix[0][0].to_json()), nlohmann::json::parse(matrix[0][1].to_json())},
                   {nlohmann::json::parse(matrix[1][0].to_json()), nlohmann::json::parse(matrix[1][1].to_json())}};
    if (denom) j["denom"] = nlohmann::json::parse(denom->to_json());
    return j.dump();
}

Mat2C transfer_product(const Cocycle& c, double x, int n, double eps) {
    if (n < 1) throw BadInput("transfer_product needs n >= 1");
    Mat2C prod = Mat2C::identity();
    const long double beta = c.freq.value();
    for (int j = 0; j < n; ++j) {
        const double phase = static_cast<double>(std::fmod(static_cast<long double>(x) + j * beta, 1.0L));
        prod = c.value(cplx{phase, eps}) * prod;
    }
    return prod;
}

} // namespace lyapq
