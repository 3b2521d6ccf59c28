#include "lyapq/frequency.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "lyapq/errors.hpp"

namespace lyapq {

namespace {

std::vector<Convergent> continued_fraction(long double x, int depth) {
    // standard CF recursion p_n = a_n p_{n-1} + p_{n-2}; stops when the
    // denominator outgrows what long double can certify
    std::vector<Convergent> out;
    std::int64_t p_prev = 1, q_prev = 0, p_cur = 0, q_cur = 1;  // p_{-1}/q_{-1}, p_0/q_0 seeds
    long double frac = x - std::floor(x);
    long double rem = frac;
    for (int n = 0; n < depth; ++n) {
        if (rem < 1e-18L) break;
        rem = 1.0L / rem;
        const long double a_ld = std::floor(rem);
        if (a_ld > 9e17L) break;
        const auto a = static_cast<std::int64_t>(a_ld);
        rem -= a_ld;
        const std::int64_t p_next = a * p_cur + p_prev;
        const std::int64_t q_next = a * q_cur + q_prev;
        // beyond q ~ 3e8 the 1/q^2 quality bound drops under the long-double
        // resolution of `value` and convergents stop being certifiable
        if (q_next <= 0 || q_next > 300000000) break;
        out.push_back({p_next, q_next});
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if (std::fabs(static_cast<long double>(p_next) / q_next - frac) < 1e-18L) break;
    }
    return out;
}

} // namespace

Frequency Frequency::rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw BadInput("frequency p/q needs q >= 1");
    p %= q;
    if (p < 0) p += q;
    const std::int64_t g = std::gcd(p, q);
    Frequency f;
    f.rational_ = true;
    f.p_ = p / g;
    f.q_ = q / g;
    f.value_ = static_cast<long double>(f.p_) / static_cast<long double>(f.q_);
    f.convergents_ = {{f.p_, f.q_}};
    return f;
}

Frequency Frequency::irrational(long double value, int depth) {
    Frequency f;
    f.rational_ = false;
    f.value_ = value - std::floor(value);
    f.convergents_ = continued_fraction(f.value_, depth);
    if (f.convergents_.empty()) throw BadInput("value has no continued-fraction expansion (is it rational 0?)");
    return f;
}

Frequency Frequency::golden() {
    Frequency f;
    f.rational_ = false;
    f.value_ = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    std::int64_t a = 1, b = 1;  // F_1, F_2
    for (int n = 0; n < 40; ++n) {
        f.convergents_.push_back({a, b});
        const std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return f;
}

Frequency Frequency::sqrt2m1() {
    Frequency f;
    f.rational_ = false;
    f.value_ = std::sqrt(2.0L) - 1.0L;
    // CF [0; 2, 2, 2, ...]: q_n are the Pell numbers
    std::int64_t p_prev = 1, q_prev = 0, p_cur = 0, q_cur = 1;
    for (int n = 0; n < 20; ++n) {
        const std::int64_t p_next = 2 * p_cur + p_prev;
        const std::int64_t q_next = 2 * q_cur + q_prev;
        f.convergents_.push_back({p_next, q_next});
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return f;
}

Frequency Frequency::parse(const std::string& text) {
    if (text == "golden") return golden();
    if (text == "sqrt2m1") return sqrt2m1();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            const std::int64_t p = std::stoll(text.substr(0, slash));
            const std::int64_t q = std::stoll(text.substr(slash + 1));
            return rational(p, q);
        } catch (const std::exception&) {
            throw BadInput("cannot parse frequency '" + text + "'");
        }
    }
    try {
        size_t used = 0;
        const long double v = std::stold(text, &used);
        if (used != text.size()) throw BadInput("cannot parse frequency '" + text + "'");
        return irrational(v);
    } catch (const BadInput&) {
        throw;
    } catch (const std::exception&) {
        throw BadInput("cannot parse frequency '" + text + "'");
    }
}

Convergent Frequency::convergent_below(std::int64_t max_q) const {
    Convergent best{0, 1};
    for (const auto& c : convergents_)
        if (c.q <= max_q) best = c;
    return best;
}

std::string Frequency::str() const {
    std::ostringstream os;
    if (rational_) {
        os << p_ << "/" << q_;
    } else {
        os.precision(19);
        os << static_cast<double>(value_);
    }
    return os.str();
}

} // namespace lyapq
