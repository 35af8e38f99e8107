#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "umbra/quadrature.hpp"

using namespace umbra;
using testutil::close;
using testutil::tol;

TEST_CASE("real arithmetic is deterministic and precise") {
    Context::set_precision(30);
    Real a("1.5");
    Real b = Real(3) / Real(2);
    CHECK(a == b);
    CHECK(Real::pi().str(10).substr(0, 6) == "3.1415");
    Real x = exp(log(Real(7)));
    CHECK(close(x, Real(7), tol(-28)));
    CHECK(Real::nan().is_nan());
    CHECK_THROWS_AS(Real("not-a-number"), Error);
}

TEST_CASE("precision context clamps and applies globally") {
    int got = Context::set_precision(5);
    CHECK(got == Context::kMinDigits);
    got = Context::set_precision(1000);
    CHECK(got == Context::kMaxDigits);
    Context::set_precision(30);
    CHECK(Context::digits() == 30);
}

TEST_CASE("complex arithmetic and functions") {
    Context::set_precision(30);
    Complex z(Real(3), Real(4));
    CHECK(close(abs(z), Real(5), tol(-28)));
    Complex w = exp(log(z));
    CHECK(close(w, z, tol(-27)));
    Complex s = sin(Complex(Real(0), Real(1)));
    CHECK(close(s, Complex(Real(0), sinh(Real(1))), tol(-27)));
    CHECK(close(pow_si(Complex(Real(1), Real(1)), 4), Complex(Real(-4)), tol(-27)));
}

TEST_CASE("quadrature reproduces closed forms") {
    Context::set_precision(30);
    QuadOptions opt(tol(-20));
    SUBCASE("polynomial") {
        auto r = integrate([](const Real& t) { return t * t; }, Real(0), Real(1), opt);
        CHECK(close(r.value, Real::ratio(1, 3), tol(-19)));
        CHECK(r.converged);
    }
    SUBCASE("ten closed forms at 10x slack") {
        struct Case {
            std::function<Real(const Real&)> f;
            Real a, b;
            Real want;
        };
        Real pi = Real::pi();
        std::vector<Case> cases = {
            {[](const Real& t) { return sin(t); }, Real(0), pi, Real(2)},
            {[](const Real& t) { return exp(t); }, Real(0), Real(1), exp(Real(1)) - Real(1)},
            {[](const Real& t) { return Real(1) / t; }, Real(1), Real(2), Real::log2()},
            {[](const Real& t) { return log(t); }, Real(1), Real(2), Real(2) * Real::log2() - Real(1)},
            {[](const Real& t) { return Real(1) / (Real(1) + t * t); }, Real(0), Real(1), pi / Real(4)},
            {[](const Real& t) { return sqrt(t); }, Real(0), Real(1), Real::ratio(2, 3)},
            {[](const Real& t) { return cos(t) * cos(t); }, Real(0), pi, pi / Real(2)},
            {[](const Real& t) { return t * exp(-t * t); }, Real(0), Real(2),
             (Real(1) - exp(Real(-4))) / Real(2)},
            {[pi](const Real& t) { return sin(pi * t) / pi; }, Real(0), Real(1), Real(2) / (pi * pi)},
            {[](const Real& t) { return Real(1) / (t * t); }, Real(1), Real(10), Real::ratio(9, 10)},
        };
        for (const auto& c : cases) {
            auto r = integrate(c.f, c.a, c.b, opt);
            CHECK(close(r.value, c.want, tol(-19)));
            CHECK(abs(r.value - c.want) <= max(r.err_estimate * Real(10), tol(-25)));
        }
    }
    SUBCASE("semi-infinite, exponential decay") {
        auto r = integrate_to_inf([](const Real& t) { return exp(-t); }, Real(1), opt);
        CHECK(close(r.value, exp(Real(-1)), tol(-18)));
    }
    SUBCASE("semi-infinite, algebraic decay") {
        auto r = integrate_to_inf([](const Real& t) { return Real(1) / (t * t); }, Real(1), opt);
        CHECK(close(r.value, Real(1), tol(-18)));
    }
    SUBCASE("NaN propagates as evaluation error") {
        CHECK_THROWS_AS(integrate([](const Real&) { return Real::nan(); }, Real(0), Real(1), opt), Error);
    }
}

TEST_CASE("principal value pair") {
    Context::set_precision(30);
    QuadOptions opt(tol(-20));
    SUBCASE("log singularity: PV of 1/(t-1) over [0,3] is log 2") {
        auto f = [](const Real& t) { return Real(1) / (t - Real(1)); };
        auto r = principal_value_pair(f, Real(3), tol(-12), PvSchedule(), opt);
        CHECK(close(r.value, Real::log2(), tol(-12)));
    }
    SUBCASE("exact symmetric cancellation at x=2") {
        auto f = [](const Real& t) { return Real(1) / (t - Real(1)); };
        auto r = principal_value_pair(f, Real(2), tol(-12), PvSchedule(), opt);
        CHECK(close(r.value, Real(0), tol(-12)));
    }
    SUBCASE("odd-about-1 integrand gives zero") {
        // (t-1)^3/(t-1) shifted: any odd function of (t-1) over the symmetric pair
        auto f = [](const Real& t) { return (t - Real(1)) / ((t - Real(1)) * (t - Real(1)) + Real(1)); };
        auto r = principal_value_pair(f, Real(2), tol(-12), PvSchedule(), opt);
        CHECK(close(r.value, Real(0), tol(-12)));
    }
    SUBCASE("oscillatory zero-pair integrand, two independent eps schedules") {
        Real g("14.1347");
        auto f = [&g](const Real& t) {
            return Real(2) * cos(g * log(t)) / (sqrt(t) * (t - Real(1)));
        };
        // evaluated through the substituted side integrals in the explicit-formula
        // module; here exercise the generic adapter on the right-hand side only
        auto left = [&](const Real& eps) {
            return integrate(f, Real(0), Real(1) - eps, QuadOptions(tol(-16))).value;
        };
        auto right = [&](const Real& eps) {
            return integrate(f, Real(1) + eps, Real(10), QuadOptions(tol(-16))).value;
        };
        auto r1 = principal_value_pair(left, right, tol(-8), PvSchedule(Real("0.01"), Real::ratio(1, 10), 4));
        auto r2 = principal_value_pair(left, right, tol(-8), PvSchedule(Real("0.02"), Real::ratio(1, 5), 5));
        CHECK(close(r1.value, r2.value, tol(-8)));
    }
    SUBCASE("divergence detected for a non-PV singularity") {
        auto f = [](const Real& t) { return Real(1) / ((t - Real(1)) * (t - Real(1))); };
        CHECK_THROWS_AS(principal_value_pair(f, Real(2), tol(-10), PvSchedule(), opt), Error);
    }
}

TEST_CASE("alternating series acceleration") {
    Context::set_precision(30);
    SUBCASE("log 2") {
        auto term = [](int k) {
            Real t = Real(1) / Real(k + 1);
            return k % 2 == 0 ? t : -t;
        };
        auto r = accelerate_alternating(term);
        CHECK(close(r.limit, Real::log2(), tol(-25)));
    }
    SUBCASE("pi^2/12") {
        auto term = [](int k) {
            Real t = Real(1) / Real((k + 1)) / Real(k + 1);
            return k % 2 == 0 ? t : -t;
        };
        auto r = accelerate_alternating(term);
        Real want = Real::pi() * Real::pi() / Real(12);
        CHECK(close(r.limit, want, tol(-25)));
    }
    SUBCASE("Leibniz pi/4") {
        auto term = [](int k) {
            Real t = Real(1) / Real(2 * k + 1);
            return k % 2 == 0 ? t : -t;
        };
        auto r = accelerate_alternating(term);
        CHECK(close(r.limit, Real::pi() / Real(4), tol(-25)));
    }
    SUBCASE("non-alternating input is diagnosed") {
        auto term = [](int k) { return Real(1) / Real(k + 1); };
        CHECK_THROWS_AS(accelerate_alternating(term), Error);
    }
}

TEST_CASE("sign-change scan and bisection refinement") {
    Context::set_precision(30);
    auto f = [](const Real& t) { return cos(t); };
    SUBCASE("three brackets for cos on (0,10)") {
        auto brackets = find_sign_changes(f, Real::ratio(1, 100), Real(10), Real::ratio(1, 2));
        CHECK(brackets.size() == 3);
        Real root = refine_bracket(f, brackets[0], tol(-10));
        CHECK(close(root, Real::pi() / Real(2), tol(-9)));
    }
    SUBCASE("no sign change for a positive function") {
        auto g = [](const Real& t) { return t * t + Real(1); };
        CHECK(find_sign_changes(g, Real(0), Real(10), Real::ratio(1, 2)).empty());
    }
    SUBCASE("contract violations") {
        CHECK_THROWS_AS(find_sign_changes(f, Real(0), Real(10), Real(0)), Error);
        CHECK_THROWS_AS(refine_bracket(f, {Real(1), Real("1.2")}, tol(-10)), Error);
    }
}

TEST_CASE("determinism: identical inputs give identical bits") {
    Context::set_precision(30);
    auto run = [] {
        auto r = integrate([](const Real& t) { return exp(-t) * sin(t * t); }, Real(0), Real(3),
                           QuadOptions(tol(-22)));
        return r.value.str(30);
    };
    CHECK(run() == run());
}
