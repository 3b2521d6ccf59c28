#include "lyapq/trigpoly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "lyapq/errors.hpp"

namespace lyapq {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TrigPoly::TrigPoly(int degree, std::vector<cplx> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0 || coeffs_.size() != static_cast<size_t>(2 * degree_ + 1))
        throw BadInput("TrigPoly: coefficient vector must have length 2*degree+1");
}

TrigPoly TrigPoly::constant(cplx value) {
    TrigPoly p(0);
    p.coeffs_[0] = value;
    return p;
}

TrigPoly TrigPoly::two_cos() {
    TrigPoly p(1);
    p.set_coeff(-1, 1.0);
    p.set_coeff(1, 1.0);
    return p;
}

cplx TrigPoly::coeff(int k) const {
    if (k < -degree_ || k > degree_) return {0.0, 0.0};
    return coeffs_[static_cast<size_t>(k + degree_)];
}

void TrigPoly::set_coeff(int k, cplx value) {
    if (k < -degree_ || k > degree_) throw BadInput("TrigPoly::set_coeff: harmonic out of range");
    coeffs_[static_cast<size_t>(k + degree_)] = value;
}

bool TrigPoly::is_zero(double tol) const {
    for (const auto& c : coeffs_)
        if (std::abs(c) > tol) return false;
    return true;
}

cplx TrigPoly::eval(cplx z) const {
    // p(z) = u^{-N} * q(u) with u = e^{2 pi i z}; Horner on q keeps the sum finite
    // and exactly 1-periodic in Re z.
    const cplx u = std::exp(cplx{0.0, two_pi} * z);
    cplx q{0.0, 0.0};
    for (size_t m = coeffs_.size(); m-- > 0;) q = q * u + coeffs_[m];
    if (degree_ == 0) return q;
    return q * std::pow(u, -degree_);
}

TrigPoly TrigPoly::conj_reflect() const {
    TrigPoly out(degree_);
    for (int k = -degree_; k <= degree_; ++k) out.set_coeff(k, std::conj(coeff(-k)));
    return out;
}

TrigPoly TrigPoly::shifted(double shift) const {
    TrigPoly out(degree_);
    for (int k = -degree_; k <= degree_; ++k)
        out.set_coeff(k, coeff(k) * std::exp(cplx{0.0, two_pi * k * shift}));
    return out;
}

TrigPoly TrigPoly::operator*(const TrigPoly& other) const {
    TrigPoly out(degree_ + other.degree_);
    for (int j = -degree_; j <= degree_; ++j) {
        if (coeff(j) == cplx{0.0}) continue;
        for (int k = -other.degree_; k <= other.degree_; ++k)
            out.set_coeff(j + k, out.coeff(j + k) + coeff(j) * other.coeff(k));
    }
    return out;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
    TrigPoly out(std::max(degree_, other.degree_));
    for (int k = -out.degree_; k <= out.degree_; ++k) out.set_coeff(k, coeff(k) + other.coeff(k));
    return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const {
    TrigPoly out(std::max(degree_, other.degree_));
    for (int k = -out.degree_; k <= out.degree_; ++k) out.set_coeff(k, coeff(k) - other.coeff(k));
    return out;
}

TrigPoly TrigPoly::operator*(cplx s) const {
    TrigPoly out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

TrigPoly TrigPoly::trimmed(double tol) const {
    int n = degree_;
    while (n > 0 && std::abs(coeff(n)) <= tol && std::abs(coeff(-n)) <= tol) --n;
    TrigPoly out(n);
    for (int k = -n; k <= n; ++k) out.set_coeff(k, coeff(k));
    return out;
}

std::string TrigPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = -degree_; k <= degree_; ++k) {
        const cplx c = coeff(k);
        if (c == cplx{0.0}) continue;
        arr.push_back({k, c.real(), c.imag()});
    }
    return nlohmann::json{{"coeffs", arr}}.dump();
}

TrigPoly TrigPoly::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadInput(std::string("TrigPoly: bad JSON: ") + e.what());
    }
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw BadInput("TrigPoly: expected {\"coeffs\": [[k, re, im], ...]}");
    int max_k = 0;
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 3) throw BadInput("TrigPoly: coeff entries are [k, re, im]");
        max_k = std::max(max_k, std::abs(entry[0].get<int>()));
    }
    TrigPoly p(max_k);
    for (const auto& entry : j["coeffs"])
        p.set_coeff(entry[0].get<int>(), cplx{entry[1].get<double>(), entry[2].get<double>()});
    return p;
}

} // namespace lyapq
