#pragma once

// Adomian decomposition for
//
//     D_y^alpha u + u * D_x^beta u = g(x),   u(x, 0) = f(x),
//
// with Caputo derivatives of order alpha, beta in (0, 1]. The solution is built
// as u = sum_n u_n with
//
//     u_0     = f + J_y^alpha g
//     u_{n+1} = -J_y^alpha A_n,   A_n = sum_{i=0}^{n} u_i * D_x^beta u_{n-i}
//
// where A_n is the Adomian polynomial of the bilinear term u * D_x^beta u.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fracadm/fracseries.hpp"

namespace fracadm {

struct ProblemSpec {
    double alpha = 1.0;
    double beta = 1.0;
    Series ic;      ///< f(x), x only
    Series forcing; ///< g(x), x only
    int n_terms = 6;
    std::size_t term_cap = kDefaultTermCap;

    /// Throws InvalidArgument when an invariant is violated.
    void validate() const;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

class SolutionSeries {
public:
    SolutionSeries(ProblemSpec problem, std::vector<Series> components);

    const ProblemSpec& problem() const noexcept { return problem_; }
    const std::vector<Series>& components() const noexcept { return components_; }
    const Series& component(int n) const;

    /// Phi_n = u_0 + ... + u_{n-1}, 1 <= n <= n_terms.
    const Series& partial_sum(int n) const;
    const Series& truncated() const { return partial_sums_.back(); }

private:
    ProblemSpec problem_;
    std::vector<Series> components_;
    std::vector<Series> partial_sums_;
};

/// A_n = sum_{i=0}^{n} u_i * D_x^beta u_{n-i}; uses components[0..n] only.
Series adomian_polynomial(std::span<const Series> components, int n, double beta,
                          std::size_t term_cap = kDefaultTermCap);

/// Runs the recursion to problem.n_terms components. Errors raised while
/// building u_n are rethrown as a SolveError carrying n, with the original
/// error nested.
SolutionSeries solve(const ProblemSpec& problem);

/// max over points of |D_y^alpha s + s * D_x^beta s - g|.
double residual(const ProblemSpec& problem, const Series& s, std::span<const Point> points);

} // namespace fracadm
