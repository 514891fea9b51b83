#include "alphacalc/gamma.hpp"

#include <array>
#include <cmath>

namespace alphacalc {

namespace {

// Lanczos rational coefficients for double precision,
// g = 6.024680040776729583740234375, N = 13 (Pugh-style optimum; the
// denominator is the rising factorial z(z+1)...(z+11)).
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408,
};

constexpr std::array<double, 13> kLanczosDen = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kPi = 3.141592653589793238462643383279502884;

double lanczos_sum(double z) {
    // Horner in z; |z| stays modest (< 40) on our domain, no overflow.
    double num = 0.0;
    double den = 0.0;
    for (int i = 12; i >= 0; --i) {
        num = num * z + kLanczosNum[static_cast<std::size_t>(i)];
        den = den * z + kLanczosDen[static_cast<std::size_t>(i)];
    }
    return num / den;
}

// Gamma on [0.5, inf): sum(z) * zgh^(z-0.5) * exp(-zgh).
double gamma_positive(double x) {
    double zgh = x + kLanczosG - 0.5;
    return lanczos_sum(x) * std::pow(zgh, x - 0.5) * std::exp(-zgh);
}

// Exact factorials through 18! (largest below 2^53).
double small_factorial(long n) {
    double f = 1.0;
    for (long k = 2; k <= n; ++k)
        f *= static_cast<double>(k);
    return f;
}

double gamma_impl(double x) {
    if (x >= 1.0 && x <= 19.0 && x == std::rint(x))
        return small_factorial(static_cast<long>(x) - 1);
    if (x >= 0.5)
        return gamma_positive(x);
    // Reflection: gamma(x) = pi / (sin(pi x) * gamma(1 - x)).
    return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

} // namespace

double sin_pi(double x) {
    // Reduce by the nearest integer first; the subtraction is exact for
    // |x| < 2^52, so accuracy survives arbitrarily close to integers.
    double n = std::rint(x);
    double r = x - n;
    double s = std::sin(kPi * r);
    return (std::fmod(n, 2.0) != 0.0) ? -s : s;
}

bool is_gamma_pole(double x) {
    double n = std::rint(x);
    return n <= 0.0 && std::abs(x - n) < 1e-15;
}

double gamma_eval(double x) {
    if (is_gamma_pole(x))
        throw PoleError("gamma pole at nonpositive integer " + std::to_string(x));
    return gamma_impl(x);
}

double gamma_eval(const Rational& x) {
    if (x.is_nonpositive_integer())
        throw PoleError("gamma pole at nonpositive integer " + x.str());
    return gamma_impl(x.to_double());
}

} // namespace alphacalc
