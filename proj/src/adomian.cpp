#include "fracadm/adomian.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "fracadm/errors.hpp"

namespace fracadm {
namespace {

bool order_in_range(double v) { return v > 0.0 && v <= 1.0; }

// Convolution sum with D_x^beta u_j already available.
Series convolve(std::span<const Series> components, std::span<const Series> derivatives, int n,
                std::size_t term_cap) {
    std::vector<Term> terms;
    for (int i = 0; i <= n; ++i) {
        const Series product = mul(components[i], derivatives[n - i], term_cap);
        terms.insert(terms.end(), product.terms().begin(), product.terms().end());
    }
    return Series(std::move(terms));
}

} // namespace

void ProblemSpec::validate() const {
    if (!order_in_range(alpha)) throw InvalidArgument("alpha must lie in (0, 1]");
    if (!order_in_range(beta)) throw InvalidArgument("beta must lie in (0, 1]");
    if (n_terms < 1) throw InvalidArgument("number of terms must be positive");
    if (!ic.independent_of(Axis::Y))
        throw InvalidArgument("initial condition must not depend on y");
    if (!forcing.independent_of(Axis::Y))
        throw InvalidArgument("forcing term must not depend on y");
}

SolutionSeries::SolutionSeries(ProblemSpec problem, std::vector<Series> components)
    : problem_(std::move(problem)), components_(std::move(components)) {
    if (components_.size() != static_cast<std::size_t>(problem_.n_terms))
        throw InvalidArgument("component count does not match the truncation depth");
    partial_sums_.reserve(components_.size());
    Series running;
    for (const auto& u : components_) {
        running = add(running, u);
        partial_sums_.push_back(running);
    }
}

const Series& SolutionSeries::component(int n) const {
    if (n < 0 || n >= static_cast<int>(components_.size()))
        throw InvalidArgument("component index " + std::to_string(n) + " out of range");
    return components_[n];
}

const Series& SolutionSeries::partial_sum(int n) const {
    if (n < 1 || n > static_cast<int>(partial_sums_.size()))
        throw InvalidArgument("partial sum index " + std::to_string(n) + " out of range [1, " +
                              std::to_string(partial_sums_.size()) + "]");
    return partial_sums_[n - 1];
}

Series adomian_polynomial(std::span<const Series> components, int n, double beta,
                          std::size_t term_cap) {
    if (n < 0 || components.size() < static_cast<std::size_t>(n) + 1)
        throw InvalidArgument("Adomian polynomial A_" + std::to_string(n) + " needs " +
                              std::to_string(n + 1) + " components");
    std::vector<Series> derivatives;
    derivatives.reserve(n + 1);
    for (int j = 0; j <= n; ++j) derivatives.push_back(caputo_derivative(components[j], beta, Axis::X));
    return convolve(components, derivatives, n, term_cap);
}

SolutionSeries solve(const ProblemSpec& problem) {
    problem.validate();
    std::vector<Series> components;
    std::vector<Series> derivatives;
    components.reserve(problem.n_terms);
    derivatives.reserve(problem.n_terms);

    int depth = 0;
    try {
        components.push_back(add(problem.ic, rl_integral(problem.forcing, problem.alpha, Axis::Y)));
        for (depth = 1; depth < problem.n_terms; ++depth) {
            derivatives.push_back(caputo_derivative(components.back(), problem.beta, Axis::X));
            const Series a = convolve(components, derivatives, depth - 1, problem.term_cap);
            components.push_back(scale(rl_integral(a, problem.alpha, Axis::Y), -1.0));
        }
    } catch (const Error& e) {
        std::throw_with_nested(SolveError(depth, e.what()));
    }
    return SolutionSeries(problem, std::move(components));
}

double residual(const ProblemSpec& problem, const Series& s, std::span<const Point> points) {
    const Series lhs = add(caputo_derivative(s, problem.alpha, Axis::Y),
                           mul(s, caputo_derivative(s, problem.beta, Axis::X), problem.term_cap));
    const Series r = lhs - problem.forcing;
    double worst = 0.0;
    for (const auto& p : points) worst = std::max(worst, std::abs(evaluate(r, p.x, p.y)));
    return worst;
}

} // namespace fracadm
