#pragma once

// Finite generalized power series in two variables,
//
//     s(x, y) = sum_k c_k * x^{p_k} * y^{q_k},
//
// with real (possibly fractional, possibly negative in x) exponents, together
// with the term-wise Caputo derivative and Riemann-Liouville integral.
//
// A Series is always normalized: terms are sorted by (px, py), no two terms
// share exponents within kExponentTolerance, and negligible coefficients are
// dropped. Values are immutable once built.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fracadm {

inline constexpr double kExponentTolerance = 1e-12;
/// Relative drop threshold: |c| <= kDropThreshold * max(1, max |c|) is removed.
inline constexpr double kDropThreshold = 1e-15;
inline constexpr std::size_t kDefaultTermCap = 10000;

enum class Axis { X, Y };

struct Term {
    double coeff = 0.0;
    double px = 0.0;
    double py = 0.0;

    double exponent(Axis axis) const noexcept { return axis == Axis::X ? px : py; }

    friend bool operator==(const Term&, const Term&) = default;
};

class Series {
public:
    Series() = default;
    Series(std::initializer_list<Term> terms);
    explicit Series(std::vector<Term> terms);

    static Series constant(double c);
    static Series monomial(double coeff, double px, double py = 0.0);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Smallest exponent on the given axis; 0 for the zero series.
    double min_exponent(Axis axis) const noexcept;
    /// True when no term depends on the given axis.
    bool independent_of(Axis axis) const noexcept;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Term> terms_;
};

/// Merge terms with matching exponents, sort, drop negligible coefficients.
/// Exponents within kExponentTolerance of an integer are snapped to it.
std::vector<Term> normalize(std::vector<Term> terms);

Series add(const Series& a, const Series& b);
Series scale(const Series& a, double c);
/// Cauchy product. Throws TermCapExceeded when |a|*|b| > term_cap.
Series mul(const Series& a, const Series& b, std::size_t term_cap = kDefaultTermCap);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return add(a, scale(b, -1.0)); }
inline Series operator*(double c, const Series& a) { return scale(a, c); }

/// Term-wise Caputo derivative of order in (0, 1] on one axis:
///   c x^p -> c Gamma(p+1)/Gamma(p+1-order) x^{p-order} for p != 0, constants -> 0.
/// Negative exponents take the same formal rule. Throws InvalidArgument for an
/// order outside (0, 1] and PoleError when p is a negative integer.
Series caputo_derivative(const Series& s, double order, Axis axis);

/// Term-wise Riemann-Liouville integral of order > 0 on one axis:
///   c y^q -> c Gamma(q+1)/Gamma(q+1+order) y^{q+order}.
/// Throws InvalidArgument for order <= 0 and DomainError for an exponent <= -1.
Series rl_integral(const Series& s, double order, Axis axis);

/// Point evaluation with 0^0 = 1. Throws DomainError when a zero coordinate
/// meets a negative exponent or a negative coordinate meets a non-integer one.
double evaluate(const Series& s, double x, double y);
/// Same as evaluate, accumulated in extended precision.
long double evaluate_extended(const Series& s, long double x, long double y);

/// Display form "c*x^p*y^q" joined by " + " / " - ", coefficients printed with
/// the given number of significant digits. Unit coefficients and unit
/// exponents are elided; the zero series prints as "0".
std::string to_string(const Series& s, int digits = 17);

} // namespace fracadm
