#include "equivox/erasure.hpp"

#include <cmath>
#include <stdexcept>

namespace equivox {

namespace {

void check_q(double q, const char* what) {
    if (std::isnan(q) || q < 0.0 || q > 1.0) throw std::domain_error(std::string(what) + ": q outside [0,1]");
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 50) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

// q^a (1-q)^b without 0^0 surprises at the endpoints.
double weight(double q, int a, int b) {
    double r = 1.0;
    if (a > 0) r *= std::pow(q, a);
    if (b > 0) r *= std::pow(1.0 - q, b);
    return r;
}

}  // namespace

double erasure_capacity(double q, int d) {
    check_q(q, "erasure_capacity");
    if (d < 2) throw std::domain_error("erasure_capacity: d must be >= 2");
    return std::max(0.0, (1.0 - 2.0 * q) * std::log2(static_cast<double>(d)));
}

double q4(double q) {
    check_q(q, "q4");
    const double u = 1.0 - q;
    return 6.0 * q * q * u * u + 4.0 * q * q * q * u + q * q * q * q;
}

double improvement_threshold() {
    return (5.0 - std::sqrt(13.0)) / 6.0;
}

ErasureReport erasure_report(double q) {
    const double sim = q4(q);
    return ErasureReport{q, sim, q - sim, q >= improvement_threshold()};
}

double r4_bound(double q) {
    check_q(q, "r4_bound");
    const double u = 1.0 - q;
    return u * u * (3.0 * q * q + 4.0 * q * u + u * u);
}

double ekr_recovery_bound(int n, double q) {
    if (n < 1) throw std::domain_error("ekr_recovery_bound: n must be >= 1");
    check_q(q, "ekr_recovery_bound");
    const int half = n / 2;
    double s = 0.0;
    for (int l = 1; l <= half; ++l) s += binomial(n - 1, l - 1) * weight(q, n - l, l);
    for (int l = half + 1; l <= n; ++l) s += binomial(n, l) * weight(q, n - l, l);
    return s;
}

}  // namespace equivox
