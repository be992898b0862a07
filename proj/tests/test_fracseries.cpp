#include <doctest.h>

#include <cmath>
#include <random>

#include "fracadm/errors.hpp"
#include "fracadm/fracseries.hpp"
#include "fracadm/specialfn.hpp"
#include "support/oracles.hpp"
#include "support/series_testing.hpp"

using namespace fracadm;
using fracadm::testing::caputo_quadrature_oracle;
using fracadm::testing::random_series;
using fracadm::testing::rel_close;
using fracadm::testing::series_close;

TEST_CASE("normalize merges, drops and cancels") {
    CHECK(Series{{1.0, 1.0, 0.0}, {2.0, 1.0, 0.0}} == Series{{3.0, 1.0, 0.0}});
    CHECK(Series{{0.0, 2.0, 0.0}}.empty());
    CHECK(Series{{1.0, 0.5, 1.0}, {-1.0, 0.5, 1.0}}.empty());

    // tolerance-equal exponents merge even when interleaved with other terms
    const Series s{{1.0, 1.0, 0.5}, {1.0, 1.0 + 5e-13, 0.3}, {2.0, 1.0 + 5e-13, 0.5}};
    CHECK(s.size() == 2);

    // near-integer exponents snap
    const Series snapped{{1.0, 1.0 - 1e-14, 0.0}};
    CHECK(snapped.terms()[0].px == 1.0);

    // relative drop threshold
    CHECK(Series{{1.0, 0.0, 0.0}, {1e-16, 1.0, 0.0}}.size() == 1);
    CHECK(Series{{1e-16, 1.0, 0.0}}.size() == 0);
    CHECK(Series{{1e-10, 1.0, 0.0}}.size() == 1);
    CHECK(Series{{1.0, 0.0, 0.0}, {1e-14, 1.0, 0.0}}.size() == 2);
}

TEST_CASE("normalize is idempotent and sorted") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const Series s = random_series(rng, 10);
        CHECK(Series(s.terms()) == s);
        for (std::size_t k = 1; k < s.size(); ++k) {
            const Term& a = s.terms()[k - 1];
            const Term& b = s.terms()[k];
            CHECK((a.px < b.px || (a.px == b.px && a.py < b.py)));
        }
    }
}

TEST_CASE("add and scale") {
    const Series one = Series::constant(1.0);
    const Series x = Series::monomial(1.0, 1.0);
    CHECK(add(one, x) == Series{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}});
    CHECK(add(x, Series{}) == x);
    CHECK(add(x, Series::monomial(-1.0, 1.0)).empty());
    CHECK(scale(x, -1.0) == Series::monomial(-1.0, 1.0));
    CHECK(scale(x, 0.0).empty());
    CHECK(scale(Series::monomial(2.0, 0.5), 0.5) == Series::monomial(1.0, 0.5));
}

TEST_CASE("mul") {
    const Series x = Series::monomial(1.0, 1.0);
    CHECK(mul(x, x) == Series::monomial(1.0, 2.0));
    const Series one_plus_x{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}};
    const Series one_minus_x{{1.0, 0.0, 0.0}, {-1.0, 1.0, 0.0}};
    CHECK(mul(one_plus_x, one_minus_x) == Series{{1.0, 0.0, 0.0}, {-1.0, 2.0, 0.0}});
    CHECK(mul(Series::monomial(1.0, 0.5), Series::monomial(2.0, 0.0, 0.5)) == Series{{2.0, 0.5, 0.5}});
    CHECK(mul(x, Series{}).empty());
}

TEST_CASE("mul enforces the term cap") {
    std::vector<Term> many;
    for (int i = 0; i < 101; ++i) many.push_back({1.0, static_cast<double>(i), 0.0});
    const Series big(many);
    try {
        (void)mul(big, big);
        FAIL("expected TermCapExceeded");
    } catch (const TermCapExceeded& e) {
        CHECK(e.would_be() == 10201);
        CHECK(e.cap() == kDefaultTermCap);
    }
    CHECK(mul(big, big, 20000).size() == 201);
}

TEST_CASE("mul is commutative and associative") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const Series a = random_series(rng);
        const Series b = random_series(rng);
        const Series c = random_series(rng);
        CHECK(series_close(mul(a, b), mul(b, a)));
        CHECK(series_close(mul(mul(a, b), c), mul(a, mul(b, c))));
    }
}

TEST_CASE("caputo_derivative examples") {
    const Series x = Series::monomial(1.0, 1.0);
    CHECK(series_close(caputo_derivative(x, 1.0, Axis::X), Series::constant(1.0)));
    CHECK(caputo_derivative(Series::constant(1.0), 0.5, Axis::X).empty());

    const Series half = caputo_derivative(x, 0.5, Axis::X);
    REQUIRE(half.size() == 1);
    CHECK(half.terms()[0].px == 0.5);
    // Frozen from the quadrature oracle below: D^0.5 x = 1.1283791671 x^0.5.
    CHECK(std::abs(half.terms()[0].coeff - 1.1283791671) < 1e-10);
    for (double at : {0.25, 1.0, 2.0, 3.5}) {
        const double fitted = caputo_quadrature_oracle(1.0, 0.5, at) / std::sqrt(at);
        CHECK(std::abs(fitted - 1.1283791671) < 1e-10);
    }

    // y-constant terms vanish under D_y, x-dependence is untouched
    const Series xy{{2.0, 1.5, 0.0}, {3.0, 0.0, 2.0}};
    CHECK(series_close(caputo_derivative(xy, 1.0, Axis::Y), Series{{6.0, 0.0, 1.0}}));
}

TEST_CASE("caputo_derivative formal rule on negative exponents") {
    const Series neg = Series::monomial(1.0, -0.5);
    const Series d = caputo_derivative(neg, 0.25, Axis::X);
    REQUIRE(d.size() == 1);
    CHECK(rel_close(d.terms()[0].coeff, fracadm::gamma(0.5) / fracadm::gamma(0.25), 1e-14));
    CHECK(d.terms()[0].px == -0.75);
    // exponent landing on a pole of the denominator vanishes
    CHECK(caputo_derivative(Series::monomial(1.0, -1.25), 0.75, Axis::X).empty());
    // a negative-integer exponent has no finite image
    CHECK_THROWS_AS(caputo_derivative(Series::monomial(1.0, -1.0), 0.5, Axis::X), PoleError);
}

TEST_CASE("caputo_derivative rejects orders outside (0, 1]") {
    const Series x = Series::monomial(1.0, 1.0);
    CHECK_THROWS_AS(caputo_derivative(x, 0.0, Axis::X), InvalidArgument);
    CHECK_THROWS_AS(caputo_derivative(x, 1.5, Axis::X), InvalidArgument);
    CHECK_THROWS_AS(caputo_derivative(x, -0.5, Axis::Y), InvalidArgument);
}

TEST_CASE("rl_integral examples") {
    CHECK(series_close(rl_integral(Series::constant(1.0), 1.0, Axis::Y), Series::monomial(1.0, 0.0, 1.0)));
    const Series jx = rl_integral(Series::monomial(1.0, 1.0), 0.5, Axis::Y);
    REQUIRE(jx.size() == 1);
    CHECK(jx.terms()[0].px == 1.0);
    CHECK(jx.terms()[0].py == 0.5);
    CHECK(std::abs(jx.terms()[0].coeff - 1.0 / fracadm::gamma(1.5)) < 1e-15);
    CHECK(std::abs(jx.terms()[0].coeff - 1.1283791671) < 1e-10);
    CHECK(series_close(rl_integral(Series::monomial(1.0, 0.0, 1.0), 1.0, Axis::Y),
                       Series::monomial(0.5, 0.0, 2.0)));
}

TEST_CASE("rl_integral errors") {
    CHECK_THROWS_AS(rl_integral(Series::constant(1.0), 0.0, Axis::Y), InvalidArgument);
    CHECK_THROWS_AS(rl_integral(Series::monomial(1.0, -1.0), 0.5, Axis::X), DomainError);
    CHECK_NOTHROW(rl_integral(Series::monomial(1.0, -0.5), 0.5, Axis::X));
    // x exponents do not matter when integrating in y
    CHECK_NOTHROW(rl_integral(Series::monomial(1.0, -3.0), 0.5, Axis::Y));
}

TEST_CASE("evaluate") {
    CHECK(std::abs(evaluate(Series{{1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}}, 0.3, 0.1) - 1.03) < 1e-15);
    CHECK(evaluate(Series::monomial(1.0, 0.5), 0.25, 0.0) == 0.5);
    CHECK_THROWS_AS(evaluate(Series::monomial(1.0, -1.0), 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(evaluate(Series::monomial(1.0, 0.5), -1.0, 0.0), DomainError);
    CHECK(evaluate(Series::monomial(1.0, 2.0), -2.0, 0.0) == 4.0);
    CHECK(evaluate(Series::monomial(1.0, 0.5), 0.0, 0.0) == 0.0);
    CHECK(evaluate(Series::constant(2.0), 0.0, 0.0) == 2.0);
    CHECK(evaluate(Series{}, 1.0, 1.0) == 0.0);
    CHECK(std::abs(static_cast<double>(evaluate_extended(Series{{1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}}, 0.3L, 0.1L)) -
                   1.03) < 1e-15);
}

TEST_CASE("display form") {
    CHECK(to_string(Series{}) == "0");
    CHECK(to_string(Series{{1.0, 0.0, 0.0}, {1.0, 1.0, 0.0}, {-1.0, 0.0, 1.0}, {-1.0, 1.0, 1.0}}) ==
          "1 - y + x - x*y");
    CHECK(to_string(Series::monomial(-2.5, 1.5, 0.5)) == "-2.5*x^1.5*y^0.5");
    CHECK(to_string(Series::monomial(0.1, 0.0)) == "0.1");
    CHECK(to_string(Series::monomial(0.1, 0.0), 6) == "0.1");
}

TEST_CASE("Caputo derivative inverts the fractional integral") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> order(1e-3, 1.0);
    std::uniform_real_distribution<double> coord(0.01, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Series s = random_series(rng);
        const double a = trial == 0 ? 1.0 : order(rng);
        const Series back = caputo_derivative(rl_integral(s, a, Axis::Y), a, Axis::Y);
        const Series diff = back - s;
        for (int k = 0; k < 10; ++k) CHECK(std::abs(evaluate(diff, coord(rng), coord(rng))) <= 1e-10);
    }
}

TEST_CASE("fractional integral semigroup and commutation") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> order(0.01, 1.5);
    for (int trial = 0; trial < 200; ++trial) {
        const Series s = random_series(rng);
        const double a = order(rng);
        const double b = order(rng);
        const Series ab = rl_integral(rl_integral(s, a, Axis::Y), b, Axis::Y);
        const Series ba = rl_integral(rl_integral(s, b, Axis::Y), a, Axis::Y);
        CHECK(series_close(ab, rl_integral(s, a + b, Axis::Y)));
        CHECK(series_close(ab, ba));
    }
}

TEST_CASE("operators are linear") {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> order(0.01, 1.0);
    std::uniform_real_distribution<double> factor(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const Series s = random_series(rng);
        const Series t = random_series(rng);
        const double a = order(rng);
        const double c = factor(rng);
        for (Axis axis : {Axis::X, Axis::Y}) {
            CHECK(series_close(rl_integral(s + t, a, axis), rl_integral(s, a, axis) + rl_integral(t, a, axis)));
            CHECK(series_close(rl_integral(scale(s, c), a, axis), scale(rl_integral(s, a, axis), c)));
            CHECK(series_close(caputo_derivative(s + t, a, axis),
                               caputo_derivative(s, a, axis) + caputo_derivative(t, a, axis)));
            CHECK(series_close(caputo_derivative(scale(s, c), a, axis), scale(caputo_derivative(s, a, axis), c)));
        }
    }
}

TEST_CASE("integer order matches the classical power rule") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        const Series s = random_series(rng);
        std::vector<Term> classical;
        for (const auto& t : s.terms())
            if (t.px != 0.0) classical.push_back({t.coeff * t.px, t.px - 1.0, t.py});
        CHECK(series_close(caputo_derivative(s, 1.0, Axis::X), Series(classical)));
    }
}

TEST_CASE("quadrature oracle examples") {
    CHECK(std::abs(caputo_quadrature_oracle(1.0, 0.5, 1.0) - 1.1283791671) < 1e-10);
    // Gamma(3)/Gamma(2.5)
    CHECK(std::abs(caputo_quadrature_oracle(2.0, 0.5, 1.0) - 1.5045055561) < 1e-10);
    CHECK(std::abs(caputo_quadrature_oracle(2.0, 0.5, 1.0) - gamma_ratio(3.0, 2.5)) < 1e-10);
    CHECK(std::abs(caputo_quadrature_oracle(1.0, 0.25, 4.0) - gamma_ratio(2.0, 1.75) * std::pow(4.0, 0.75)) <
          1e-10);
    CHECK_THROWS(caputo_quadrature_oracle(0.0, 0.5, 1.0));
    CHECK_THROWS(caputo_quadrature_oracle(1.0, 1.0, 1.0));
}

TEST_CASE("term rule agrees with direct quadrature") {
    std::mt19937_64 rng(27);
    std::uniform_real_distribution<double> pd(0.1, 4.0);
    std::uniform_real_distribution<double> od(0.05, 0.95);
    std::uniform_real_distribution<double> xd(0.1, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = pd(rng);
        const double order = od(rng);
        const double x = xd(rng);
        const double rule = evaluate(caputo_derivative(Series::monomial(1.0, p), order, Axis::X), x, 0.0);
        INFO("p=" << p << " order=" << order << " x=" << x);
        CHECK(std::abs(rule - caputo_quadrature_oracle(p, order, x)) <= 1e-8);
    }
}
