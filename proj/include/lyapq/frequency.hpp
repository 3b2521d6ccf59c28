#ifndef LYAPQ_FREQUENCY_HPP
#define LYAPQ_FREQUENCY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lyapq {

struct Convergent {
    std::int64_t p;
    std::int64_t q;
};

// Frequency of the circle rotation: an exact rational p/q or an irrational
// carried as a high-precision value together with its continued-fraction
// convergents.
class Frequency {
  public:
    static Frequency rational(std::int64_t p, std::int64_t q);
    static Frequency irrational(long double value, int depth = 40);
    static Frequency golden();   // (sqrt(5)-1)/2, Fibonacci convergents
    static Frequency sqrt2m1();  // sqrt(2)-1, Pell convergents

    // accepts "p/q", a decimal literal, "golden" or "sqrt2m1"
    static Frequency parse(const std::string& text);

    bool is_rational() const { return rational_; }
    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    long double value() const { return value_; }
    const std::vector<Convergent>& convergents() const { return convergents_; }

    // best rational approximation with denominator at most max_q
    Convergent convergent_below(std::int64_t max_q) const;

    std::string str() const;

  private:
    Frequency() = default;
    bool rational_ = false;
    std::int64_t p_ = 0, q_ = 1;
    long double value_ = 0.0L;
    std::vector<Convergent> convergents_;
};

} // namespace lyapq

#endif
