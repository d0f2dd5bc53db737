#include <doctest.h>

#include <random>

#include <hilbert_euler/partitions.hpp>
#include <hilbert_euler/series.hpp>

using namespace hilbert_euler;

namespace {

truncated_series series_of(std::vector<long> coeffs, std::size_t order)
{
    std::vector<rational> q(coeffs.begin(), coeffs.end());
    return truncated_series(std::move(q), order);
}

truncated_series one_minus_q(std::size_t order)
{
    return series_of({1, -1}, order);
}

// Small random rationals; constant term forced non-zero when asked.
truncated_series random_series(std::mt19937& rng, std::size_t order, bool invertible)
{
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<rational> c(order + 1);
    for (auto& x : c) {
        x = rational(num(rng), den(rng));
        x.canonicalize();
    }
    if (invertible && sgn(c[0]) == 0) {
        c[0] = 1;
    }
    return truncated_series(std::move(c), order);
}

constexpr int property_iterations = 40;

} // namespace

TEST_CASE("construction and coefficient access")
{
    const auto one = truncated_series::one(5);
    CHECK(coefficient(one, 0) == 1);
    CHECK(coefficient(one, 5) == 0);
    CHECK_THROWS_AS(coefficient(one, 6), std::out_of_range);
    CHECK_THROWS_AS(series_of({1, 2, 3}, 1), std::invalid_argument);
    CHECK(truncated_series::monomial(3, 7, 5) == truncated_series::zero(5));
}

TEST_CASE("add")
{
    CHECK(add(series_of({1, 1}, 4), series_of({1, -1}, 4)) == series_of({2}, 4));
    const auto a = series_of({1, 2, 3}, 2);
    CHECK(add(a, truncated_series::zero(2)) == a);
    CHECK(add(a, series_of({1, 1}, 2)) == series_of({2, 3, 3}, 2));
    CHECK_THROWS_AS(add(a, series_of({1}, 3)), order_mismatch);
}

TEST_CASE("mul")
{
    const std::size_t order = 9;
    const auto geometric = series_of(std::vector<long>(order + 1, 1), order);
    CHECK(mul(one_minus_q(order), geometric) == truncated_series::one(order));

    const auto a = series_of({3, -1, 4, 1, 5}, order);
    CHECK(mul(a, truncated_series::one(order)) == a);
    CHECK(mul(series_of({1, 1}, 2), series_of({1, 1}, 2)) == series_of({1, 2, 1}, 2));
    CHECK_THROWS_AS(mul(a, truncated_series::one(order + 1)), order_mismatch);
}

TEST_CASE("inverse")
{
    const std::size_t order = 12;
    CHECK(inverse(one_minus_q(order)) == series_of(std::vector<long>(order + 1, 1), order));
    CHECK(inverse(truncated_series::one(order)) == truncated_series::one(order));

    const auto a = series_of({1, 3, -2}, 10);
    CHECK(mul(a, inverse(a)) == truncated_series::one(10));

    CHECK_THROWS_AS(inverse(series_of({0, 1}, 4)), not_invertible);
    CHECK(inverse(series_of({2}, 3)) == truncated_series(std::vector<rational>{rational(1, 2)}, 3));
}

TEST_CASE("int_pow")
{
    const std::size_t order = 10;
    CHECK(int_pow(series_of({1, 1}, order), 0) == truncated_series::one(order));
    CHECK(int_pow(one_minus_q(order), -1) == series_of(std::vector<long>(order + 1, 1), order));
    // binomial(3 + 4 - 1, 4) = 15
    CHECK(int_pow(one_minus_q(order), -3).coefficient(4) == 15);
    CHECK(int_pow(series_of({1, 1}, 4), 4) == series_of({1, 4, 6, 4, 1}, 4));
    CHECK(int_pow(series_of({0, 1}, 4), 0) == truncated_series::one(4));
    CHECK(int_pow(series_of({0, 1}, 4), 3) == series_of({0, 0, 0, 1}, 4));
    CHECK_THROWS_AS(int_pow(series_of({0, 1}, 4), -1), not_invertible);
}

TEST_CASE("euler_product golden coefficients")
{
    // Reference expansions computed independently by binomial series in Python.
    CHECK(euler_product(1, 6).integer_coefficients() == std::vector<big_int>{1, 1, 2, 3, 5, 7, 11});
    CHECK(euler_product(0, 8) == truncated_series::one(8));
    CHECK(euler_product(24, 3).integer_coefficients() == std::vector<big_int>{1, 24, 324, 3200});
    CHECK(euler_product(24, 10).integer_coefficients()
          == std::vector<big_int>{1, 24, 324, 3200, 25650, 176256, 1073720, 5930496, 30178575, 143184000,
                                  639249300});
    CHECK(euler_product(-6, 12).integer_coefficients()
          == std::vector<big_int>{1, -6, 9, 10, -30, 0, 11, 42, 0, -70, 18, -54, 49});
    // Pentagonal number theorem.
    CHECK(euler_product(-1, 15).integer_coefficients()
          == std::vector<big_int>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1});
    // Ramanujan tau(2..6).
    CHECK(euler_product(-24, 6).integer_coefficients()
          == std::vector<big_int>{1, -24, 252, -1472, 4830, -6048, -16744});
    CHECK(euler_product(2, 8).integer_coefficients() == std::vector<big_int>{1, 2, 5, 10, 20, 36, 65, 110, 185});
    CHECK(euler_product(5, 0) == truncated_series::one(0));
}

TEST_CASE("euler_product(1) is the partition generating function")
{
    CHECK(coefficient(euler_product(1, 10), 10) == 42);
    const auto product = euler_product(1, 60);
    const auto p = partition_counts(60);
    for (unsigned n = 0; n <= 60; ++n) {
        CHECK(product.coefficient(n) == p[n]);
    }
}

TEST_CASE("euler_product(-1) is the inverse of euler_product(1)")
{
    for (std::size_t order : {0u, 1u, 7u, 30u}) {
        CHECK(euler_product(-1, order) == inverse(euler_product(1, order)));
    }
}

TEST_CASE("euler_product coefficients are integral for every sign of e")
{
    for (std::int64_t e = -12; e <= 30; ++e) {
        CHECK(euler_product(e, 15).has_integer_coefficients());
    }
}

TEST_CASE("(1 - q)^(-e) has binomial coefficients")
{
    for (std::int64_t e = 1; e <= 10; ++e) {
        const auto s = int_pow(one_minus_q(20), -e);
        for (unsigned n = 0; n <= 20; ++n) {
            CHECK(s.coefficient(n) == binomial(big_int(static_cast<long>(e + n - 1)), n));
        }
    }
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(20261019);
    for (int it = 0; it < property_iterations; ++it) {
        const std::size_t order = 1 + it % 7;
        const auto a = random_series(rng, order, false);
        const auto b = random_series(rng, order, false);
        const auto c = random_series(rng, order, false);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == truncated_series::zero(order));
    }
}

TEST_CASE("inverse is two sided")
{
    std::mt19937 rng(7);
    for (int it = 0; it < property_iterations; ++it) {
        const std::size_t order = it % 9;
        const auto a = random_series(rng, order, true);
        const auto b = inverse(a);
        CHECK(a * b == truncated_series::one(order));
        CHECK(b * a == truncated_series::one(order));
    }
}

TEST_CASE("int_pow adds exponents")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exponent(-8, 8);
    for (int it = 0; it < property_iterations; ++it) {
        const auto a = random_series(rng, 5, true);
        const int e1 = exponent(rng);
        const int e2 = exponent(rng);
        CHECK(int_pow(a, e1 + e2) == int_pow(a, e1) * int_pow(a, e2));
    }
}
