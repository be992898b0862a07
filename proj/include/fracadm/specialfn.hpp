#pragma once

// Gamma-function machinery behind the fractional power rules.
//
// All functions are pure and thread-safe. Arguments within kPoleTolerance of a
// non-positive integer are treated as poles.

namespace fracadm {

inline constexpr double kPoleTolerance = 1e-12;

/// True when z lies within kPoleTolerance of 0, -1, -2, ...
bool is_gamma_pole(double z) noexcept;

/// Gamma function. Throws PoleError at poles.
double gamma(double z);

/// Reciprocal gamma 1/Gamma(z). Total; exactly 0.0 at poles.
double rgamma(double z) noexcept;

/// log|Gamma(z)|, with the sign of Gamma(z) written to *sign when non-null.
/// Throws PoleError at poles.
double lgamma_signed(double z, int* sign = nullptr);

/// Gamma(num) / Gamma(den). Zero when den is a pole; evaluated through
/// log-gamma when both arguments exceed 20 or when a direct quotient would
/// overflow. Throws PoleError when num is a pole.
double gamma_ratio(double num, double den);

} // namespace fracadm
