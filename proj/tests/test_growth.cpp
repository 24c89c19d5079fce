#include "labelkit/error.hpp"
#include "labelkit/growth.hpp"
#include "labelkit/proof_constants.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace labelkit;

namespace {

constexpr double e = std::numbers::e;

bool passes_falsifier(const GrowthFunction& f)
{
    const DecencyCertificate cert = certify_builtin(f);
    if (cert.s > 1e6)
        return true; // nothing to test below the product cap
    const auto grid = geometric_grid(cert.s, 1e6, 400);
    return !falsify_decency(f, cert, grid).has_value();
}

} // namespace

TEST_CASE("eval examples")
{
    CHECK(eval(GrowthFunction::power(1.0, 0.5), 100.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(eval(GrowthFunction::log_scaled(), 1024.0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(eval(GrowthFunction::exp_polylog(1.0, 0.5), std::exp(4.0)) == doctest::Approx(e * e).epsilon(1e-12));
    CHECK(eval(GrowthFunction::exp_polyloglog(2.0, 1.0), 256.0) == doctest::Approx(std::pow(8.0, 2.0)).epsilon(1e-12));
    CHECK(eval(GrowthFunction::scaled(3.0, GrowthFunction::log_scaled()), 8.0) == doctest::Approx(9.0));
    CHECK(eval(GrowthFunction::product(GrowthFunction::log_scaled(), GrowthFunction::power(2.0, 0.5)), 16.0)
          == doctest::Approx(32.0));
    CHECK_THROWS_AS(eval(GrowthFunction::log_scaled(), 1.5), DomainError);
}

TEST_CASE("built-ins are non-decreasing along a grid")
{
    for (const char* spec : {"log", "log*3", "pow:2:0.3", "explog:0.5:0.7", "exploglog:1:2", "scale:2(pow:1:0.5)",
                             "prod(log,pow:1:0.25)"}) {
        const GrowthFunction f = parse_growth_spec(spec);
        double prev = 0.0;
        for (double x : geometric_grid(2.0, 1e9, 500)) {
            const double y = f(x);
            CHECK(y >= 0.0);
            CHECK(y >= prev * (1 - 1e-12));
            prev = y;
        }
    }
}

TEST_CASE("growth-function syntax round trip")
{
    for (const char* spec : {"log", "log*2", "pow:1:0.5", "explog:1:0.5", "exploglog:1:1", "scale:2(log)",
                             "prod(log,pow:1:0.5)", "scale:3(prod(log*2,pow:0.5:0.25))"}) {
        const GrowthFunction f = parse_growth_spec(spec);
        CHECK(f.spec() == spec);
        CHECK(parse_growth_spec(f.spec())(1000.0) == doctest::Approx(f(1000.0)));
    }
    for (const char* bad : {"", "logg", "pow:1", "pow:a:0.5", "prod(log)", "scale:2log", "prod(log,log", "explog:1:0.5x"})
        CHECK_THROWS_AS(parse_growth_spec(bad), DomainError);
}

TEST_CASE("certificates of the built-ins")
{
    const auto lg = certify_builtin(GrowthFunction::log_scaled());
    CHECK(lg.delta == 0.5);
    CHECK(lg.C == 1.0);
    CHECK(lg.s == 16.0);

    const auto lg3 = certify_builtin(GrowthFunction::log_scaled(3.0));
    CHECK(lg3.C == 3.0);
    CHECK(lg3.s == 64.0);

    const auto p = certify_builtin(GrowthFunction::power(2.0, 0.5));
    CHECK(p.delta == doctest::Approx(0.5));
    CHECK(p.C == doctest::Approx(2.0));
    CHECK(p.s == doctest::Approx(16.0)); // (2 / (d max(alpha,1)))^(2/d)

    const auto p3 = certify_builtin(GrowthFunction::power(3.0, 0.25));
    CHECK(p3.delta == doctest::Approx(0.75));
    CHECK(p3.C == doctest::Approx(3.0));
    CHECK(p3.s == doctest::Approx(std::pow(8.0 / 3.0, 8.0)));

    // For alpha = 1, d = 1/2 the closed form gives 256.
    CHECK(certify_builtin(GrowthFunction::power(1.0, 0.5)).s == doctest::Approx(256.0));

    const auto g = GrowthFunction::power(2.0, 0.5);
    const auto sc = certify_builtin(GrowthFunction::scaled(3.0, g));
    CHECK(sc.delta == doctest::Approx(p.delta));
    CHECK(sc.C == doctest::Approx(3.0 * p.C));
    CHECK(sc.s == doctest::Approx(p.s));

    CHECK_THROWS_AS(certify_builtin(GrowthFunction::log_scaled(0.5)), DomainError);
    CHECK_THROWS_AS(certify_builtin(GrowthFunction::power(1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(certify_builtin(GrowthFunction::power(-1.0, 0.5)), DomainError);
    CHECK_THROWS_AS(certify_builtin(GrowthFunction::exp_polyloglog(1.0, 0.5)), DomainError);
    CHECK_THROWS_AS(certify_builtin(GrowthFunction::scaled(0.5, g)), DomainError);
    CHECK_THROWS_AS(certify_builtin(parse_growth_spec("prod(log,log)")), DomainError);
}

TEST_CASE("attached certificates take precedence")
{
    const DecencyCertificate mine{0.5, 1.0, 16.0};
    const GrowthFunction f = GrowthFunction::power(1.0, 0.5).with_certificate(mine);
    CHECK(certificate_of(f).s == 16.0);
    CHECK_THROWS_AS(GrowthFunction::log_scaled().with_certificate({1.5, 1.0, 2.0}), DomainError);
    CHECK_THROWS_AS((DecencyCertificate{0.5, 0.9, 2.0}.validate()), DomainError);
    CHECK_THROWS_AS((DecencyCertificate{0.5, 1.0, 1.0}.validate()), DomainError);
}

TEST_CASE("every certified built-in passes the falsifier")
{
    for (const char* spec : {"log", "log*2", "log*5", "pow:1:0.5", "pow:2:0.5", "pow:0.5:0.5", "pow:4:0.75",
                             "explog:1:0.5", "explog:2:0.25", "exploglog:1:1", "exploglog:1:2",
                             "exploglog:2:1.5", "scale:2(log)", "scale:3(pow:1:0.5)", "prod(pow:1:0.25,pow:1:0.25)",
                             "prod(log,pow:1:0.2)"}) {
        const std::string name = spec;
        CAPTURE(name);
        CHECK(passes_falsifier(parse_growth_spec(spec)));
    }
    // The smaller certificate for sqrt also survives.
    const auto grid = geometric_grid(16, 1e6, 400);
    CHECK_FALSE(falsify_decency(GrowthFunction::power(1.0, 0.5), {0.5, 1.0, 16.0}, grid).has_value());
}

TEST_CASE("falsifier finds counterexamples")
{
    const RealFunction identity = [](double x) { return x; };
    const std::vector<double> grid{4.0, 8.0, 16.0};
    const auto ce = falsify_decency(identity, {0.5, 1.0, 2.0}, grid);
    REQUIRE(ce.has_value());
    CHECK(ce->kind == DecencyCounterexample::Kind::UpperGrowth);
    CHECK(ce->x == 4.0);
    CHECK(ce->lhs == 4.0);
    CHECK(ce->rhs == doctest::Approx(2.0));

    const RealFunction tiny = [](double x) { return std::log2(x) / 2; };
    CHECK_THROWS_AS(falsify_decency(tiny, {0.5, 1.0, 16.0}, grid), DomainError); // 4 < s
    const auto low4 = falsify_decency(tiny, {0.5, 1.0, 4.0}, grid);
    REQUIRE(low4.has_value());
    CHECK(low4->kind == DecencyCounterexample::Kind::LowerGrowth);

    const RealFunction dip = [](double x) { return x < 100 ? std::sqrt(x) : std::log2(x); };
    const auto mono = falsify_decency(dip, {0.5, 1.0, 16.0}, std::vector<double>{16, 81, 128});
    REQUIRE(mono.has_value());
    CHECK(mono->kind == DecencyCounterexample::Kind::Monotonicity);
    CHECK(mono->x == 81);
    CHECK(mono->y == 128);

    // Growth bounds and monotonicity hold at 16 and 64, but f(16*16) = 40 > f(16)^2.
    const RealFunction jump = [](double x) { return x >= 200 ? 40.0 : std::log2(x); };
    const auto sub = falsify_decency(jump, {0.1, 1.0, 16.0}, std::vector<double>{16.0, 64.0});
    REQUIRE(sub.has_value());
    CHECK(sub->kind == DecencyCounterexample::Kind::SubMultiplicativity);
    CHECK(sub->x == 16.0);
    CHECK(sub->y == 16.0);
    CHECK(sub->lhs == 40.0);
    CHECK(sub->rhs == doctest::Approx(16.0));
    // Out of reach when the product cap excludes 256.
    CHECK_FALSE(falsify_decency(jump, {0.1, 1.0, 16.0}, std::vector<double>{16.0, 64.0}, {.max_product = 200})
                    .has_value());
}

TEST_CASE("parity function is caught within the first hundred pairs")
{
    CHECK(parity_function(17.0) == doctest::Approx(std::log2(17.0)));
    CHECK(parity_function(16.0) == doctest::Approx(4.0));
    const auto grid = geometric_grid(16, 1e6, 400, true);
    const auto ce = falsify_decency(RealFunction(parity_function), {0.5, 1.0, 16.0}, grid);
    REQUIRE(ce.has_value());
    CHECK(ce->pair_index >= 1);
    CHECK(ce->pair_index <= 100);
}

TEST_CASE("geometric grid")
{
    const auto g = geometric_grid(16, 1e6, 400);
    REQUIRE(g.size() == 400);
    CHECK(g.front() == 16.0);
    CHECK(g.back() == doctest::Approx(1e6));
    CHECK(std::is_sorted(g.begin(), g.end()));
    const auto gi = geometric_grid(16, 1e6, 400, true);
    CHECK(gi.front() == 16.0);
    CHECK(gi.back() == 1e6);
    CHECK(std::adjacent_find(gi.begin(), gi.end()) == gi.end());
    for (double x : gi)
        CHECK(x == std::floor(x));
    CHECK(geometric_grid(5, 5, 1).size() == 1);
}

TEST_CASE("proof constants")
{
    const auto a = constant_c({0.5, 1.0, 2.0}, 2.0);
    CHECK(a.c2 == doctest::Approx(4 * e * e).epsilon(1e-12));
    CHECK(a.c2 == doctest::Approx(29.556).epsilon(1e-4));
    CHECK(a.c1 == doctest::Approx(60 * e).epsilon(1e-12));
    CHECK(a.c == a.c1);

    const auto b = constant_c({0.5, 1.0, 16.0}, 8.0);
    CHECK(b.c2 == doctest::Approx(128 * e * e).epsilon(1e-12));
    CHECK(b.c2 == doctest::Approx(945.8).epsilon(1e-4));
    CHECK(b.c1 == doctest::Approx(240 * e).epsilon(1e-12));
    CHECK(b.c == b.c2);

    const auto big_s = constant_c({0.9, 1.0, 1000.0}, 1.01);
    CHECK(big_s.c == doctest::Approx(1000.0 * 999.0 / 2));

    CHECK(constant_c({0.5, 1.0, 2.0}, 1.0 + 1e-9).c2 > 6.0);
    CHECK_THROWS_AS(constant_c({0.5, 1.0, 2.0}, 1.0), DomainError);
    CHECK_THROWS_AS(constant_c({0.5, 0.5, 2.0}, 2.0), DomainError);
}

TEST_CASE("ratio inequalities examples")
{
    const DecencyCertificate cert{0.5, 1.0, 16.0};
    const GrowthFunction lg = GrowthFunction::log_scaled();

    const auto r = ratio_inequalities(lg, cert, 2.0, 10000, 1000);
    CHECK(r.regime == DensityRegime::Large);
    CHECK(r.ratio == doctest::Approx(0.75));
    CHECK(r.ratio_bound == doctest::Approx(1.0 / 160));
    CHECK(r.ratio_holds);

    const auto s = ratio_inequalities(lg, cert, 2.0, 10000, 64);
    CHECK(s.regime == DensityRegime::Small);
    CHECK(s.ratio == doctest::Approx(6.0 / std::log2(10000.0)));
    CHECK(s.ratio_bound == doctest::Approx(64 * 6.0 / 10000 * std::pow(10000.0, 0.5 / 3)));
    CHECK(s.ratio_holds);

    const auto eq = ratio_inequalities(lg, cert, 2.0, 5000, 5000);
    CHECK(eq.ratio == doctest::Approx(1.0));
    CHECK(eq.ratio_bound == doctest::Approx(1.0 / 16));
    CHECK(eq.holds());

    CHECK_THROWS_AS(ratio_inequalities(lg, cert, 2.0, 100, 8), DomainError);
    CHECK_THROWS_AS(ratio_inequalities(lg, cert, 2.0, 100, 101), DomainError);
    CHECK_THROWS_AS(ratio_inequalities(lg, cert, 1.0, 100, 20), DomainError);
}
