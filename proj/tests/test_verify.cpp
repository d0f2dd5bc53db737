#include <doctest.h>

#include <algorithm>

#include <hilbert_euler/series.hpp>
#include <hilbert_euler/strata.hpp>
#include <hilbert_euler/verify.hpp>

using namespace hilbert_euler;

TEST_CASE("injective_tuple_count")
{
    CHECK(injective_tuple_count(3, 2) == 6);
    CHECK(injective_tuple_count(5, 0) == 1);
    CHECK(injective_tuple_count(2, 3) == 0);
    CHECK(injective_tuple_count(0, 0) == 1);
    CHECK(injective_tuple_count(8, 8) == 40320);
}

TEST_CASE("polynomial_power_coeff")
{
    CHECK(polynomial_power_coeff(0, 0) == 1);
    CHECK(polynomial_power_coeff(0, 3) == 0);
    CHECK(polynomial_power_coeff(1, 5) == 7);
    CHECK(polynomial_power_coeff(2, 2) == 5);
}

TEST_CASE("multinomial_sum_coeff")
{
    CHECK(multinomial_sum_coeff(1, 3) == 3);
    CHECK(multinomial_sum_coeff(0, 1) == 0);
    CHECK(multinomial_sum_coeff(24, 1) == 24);
    CHECK(multinomial_sum_coeff(2, 2) == 5);
    CHECK_THROWS_AS(multinomial_sum_coeff(2, 0), std::invalid_argument);
}

TEST_CASE("oracles agree with the formula routes on their grids")
{
    for (unsigned e = 0; e <= 8; ++e) {
        for (unsigned m = 0; m <= 8; ++m) {
            CHECK(injective_tuple_count(e, m) == falling_factorial(e, m));
        }
    }
    for (unsigned e = 0; e <= 6; ++e) {
        const auto product = euler_product(e, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(polynomial_power_coeff(e, n) == product.coefficient(n));
            if (n >= 1) {
                CHECK(multinomial_sum_coeff(e, n) == hilbert_euler_strata(n, e));
            }
        }
    }
}

TEST_CASE("run_all on an empty grid")
{
    const auto report = run_all({{3, 2}, {0, 5}, mutation::none});
    CHECK(report.checks.empty());
    CHECK(report.all_passed());
    CHECK(run_all({{0, 2}, {4, 3}, mutation::none}).checks.empty());
}

TEST_CASE("run_all on a one-cell grid")
{
    const auto report = run_all({{1, 1}, {0, 0}, mutation::none});
    CHECK(report.all_passed());
    CHECK(report.passed == report.checks.size());
    for (const auto& c : report.checks) {
        CHECK(c.cell == "e=1,n=0");
    }
}

TEST_CASE("run_all passes on a mixed-sign grid and is deterministic")
{
    const verify_config config{{-3, 7}, {0, 14}, mutation::none};
    const auto report = run_all(config);
    CHECK(report.failed == 0);
    CHECK(report.passed == report.checks.size());
    CHECK(report.passed > 0);

    const auto again = run_all(config);
    REQUIRE(again.checks.size() == report.checks.size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        CHECK(again.checks[i].cell == report.checks[i].cell);
        CHECK(again.checks[i].name == report.checks[i].name);
        CHECK(again.checks[i].actual == report.checks[i].actual);
    }
}

TEST_CASE("negative controls produce failures naming the cell")
{
    for (auto kind : {mutation::power_for_falling_factorial, mutation::drop_fiber_factor}) {
        const auto report = run_all({{0, 4}, {0, 6}, kind});
        CHECK_FALSE(report.all_passed());
        CHECK(report.failed > 0);
        const auto failing = std::find_if(report.checks.begin(), report.checks.end(),
                                          [](const check_result& c) { return !c.passed; });
        REQUIRE(failing != report.checks.end());
        CHECK(failing->name == "route_equality");
        CHECK(failing->expected != failing->actual);
        CHECK(failing->cell.starts_with("e="));
    }
    // e = 1, n = 2: strata (2) and (1,1) contribute 2 + 1/2 when e^k replaces the falling factorial.
    const auto report = run_all({{1, 1}, {2, 2}, mutation::power_for_falling_factorial});
    const auto route = std::find_if(report.checks.begin(), report.checks.end(),
                                    [](const check_result& c) { return c.name == "route_equality"; });
    REQUIRE(route != report.checks.end());
    CHECK(route->cell == "e=1,n=2");
    CHECK(route->expected == "2");
    CHECK(route->actual == "5/2");
}

TEST_CASE("run_all rejects negative point counts")
{
    CHECK_THROWS_AS(run_all({{0, 1}, {-1, 3}, mutation::none}), std::invalid_argument);
}
