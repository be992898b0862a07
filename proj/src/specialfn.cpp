#include "fracadm/specialfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracadm/errors.hpp"

namespace fracadm {
namespace {

// Lanczos approximation with g = 671/128 and 14 correction terms
// (Numerical Recipes, 3rd ed., gammln). For z >= 0.5:
//   Gamma(z) = sqrt(2 pi) * S(z) / z * t^(z + 1/2) * exp(-t),  t = z + g - 1/2,
//   S(z)     = c0 + sum_j c_j / (z + j).
constexpr double kLanczosShift = 5.24218750000000000; // g - 1/2
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

constexpr double kSqrtTwoPi = 2.5066282746310005024;

// Largest z with finite Gamma(z) in binary64.
constexpr double kGammaOverflow = 171.62;
constexpr int kMaxFactorialArg = 171;

// (n - 1)! for n = 1 .. 171, i.e. Gamma at the positive integers.
constexpr std::array<double, kMaxFactorialArg + 1> make_integer_gamma() {
    std::array<double, kMaxFactorialArg + 1> table{};
    table[0] = std::numeric_limits<double>::infinity();
    table[1] = 1.0;
    for (int n = 2; n <= kMaxFactorialArg; ++n) table[n] = table[n - 1] * (n - 1);
    return table;
}
constexpr auto kIntegerGamma = make_integer_gamma();

double lanczos_sum(double z) {
    double sum = kLanczosC0;
    for (std::size_t j = 0; j < kLanczosCoeffs.size(); ++j)
        sum += kLanczosCoeffs[j] / (z + static_cast<double>(j + 1));
    return sum;
}

// Gamma(z) for z >= 0.5. The power is split in two to survive z near 171.
double gamma_lanczos(double z) {
    const double t = z + kLanczosShift;
    const double half_pow = std::pow(t, 0.5 * (z + 0.5));
    return kSqrtTwoPi * lanczos_sum(z) / z * (half_pow * std::exp(-t)) * half_pow;
}

double lgamma_lanczos(double z) {
    const double t = z + kLanczosShift;
    return (z + 0.5) * std::log(t) - t + std::log(kSqrtTwoPi * lanczos_sum(z) / z);
}

// sin(pi z) with exact argument reduction.
double sin_pi(double z) {
    double r = std::fmod(z, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

bool is_small_positive_integer(double z) {
    return z >= 1.0 && z <= kMaxFactorialArg && z == std::floor(z);
}

} // namespace

bool is_gamma_pole(double z) noexcept {
    if (z > kPoleTolerance) return false;
    return std::abs(z - std::round(z)) <= kPoleTolerance;
}

double gamma(double z) {
    if (is_gamma_pole(z)) throw PoleError(z);
    if (is_small_positive_integer(z)) return kIntegerGamma[static_cast<int>(z)];
    if (z >= kGammaOverflow) return std::numeric_limits<double>::infinity();
    if (z >= 0.5) return gamma_lanczos(z);
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::numbers::pi / (sin_pi(z) * gamma(1.0 - z));
}

double rgamma(double z) noexcept {
    if (is_gamma_pole(z)) return 0.0;
    if (is_small_positive_integer(z)) return 1.0 / kIntegerGamma[static_cast<int>(z)];
    if (z >= kGammaOverflow) return std::exp(-lgamma_lanczos(z));
    if (z >= 0.5) return 1.0 / gamma_lanczos(z);
    return sin_pi(z) * gamma(1.0 - z) / std::numbers::pi;
}

double lgamma_signed(double z, int* sign) {
    if (is_gamma_pole(z)) throw PoleError(z);
    if (z >= 0.5) {
        if (sign) *sign = 1;
        if (is_small_positive_integer(z)) return std::log(kIntegerGamma[static_cast<int>(z)]);
        return lgamma_lanczos(z);
    }
    const double s = sin_pi(z);
    if (sign) *sign = s < 0.0 ? -1 : 1;
    return std::log(std::numbers::pi) - std::log(std::abs(s)) - lgamma_signed(1.0 - z);
}

double gamma_ratio(double num, double den) {
    if (is_gamma_pole(num)) throw PoleError(num);
    if (is_gamma_pole(den)) return 0.0;

    auto log_space = [&] {
        int sn = 1;
        int sd = 1;
        const double ln = lgamma_signed(num, &sn);
        const double ld = lgamma_signed(den, &sd);
        return sn * sd * std::exp(ln - ld);
    };

    if (num > 20.0 && den > 20.0) return log_space();
    const double g = gamma(num);
    const double r = rgamma(den);
    if (!std::isfinite(g) || r == 0.0 || !std::isfinite(r)) return log_space();
    return g * r;
}

} // namespace fracadm
