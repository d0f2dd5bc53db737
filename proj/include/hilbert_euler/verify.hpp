#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <hilbert_euler/numeric.hpp>

namespace hilbert_euler {

// Brute-force oracles. None of them calls into the series or strata code
// they are used to check.

/// Number of m-tuples of pairwise distinct elements of a set of size E,
/// counted by walking the tuples.
big_int injective_tuple_count(unsigned set_size, unsigned m);

/// Coefficient of q^n in (p(0) + p(1) q + ... + p(n) q^n)^e, expanded by
/// e schoolbook polynomial products with p(s) counted by enumeration.
big_int polynomial_power_coeff(unsigned e, unsigned n);

/// The double sum over lengths k and multiplicity vectors alpha with
/// sum i alpha_i = n of p(1)^alpha_1 ... p(n)^alpha_n / (alpha_1! ... alpha_n!)
/// times e (e - 1) ... (e - k + 1). Requires n >= 1.
big_int multinomial_sum_coeff(unsigned e, unsigned n);

/// Closed range [first, last]; empty when first > last.
struct int_range {
    std::int64_t first = 0;
    std::int64_t last = -1;

    bool empty() const noexcept { return first > last; }
    bool contains(std::int64_t v) const noexcept { return first <= v && v <= last; }
};

/// Deliberately wrong variants of the strata route, used as negative
/// controls for the harness itself.
enum class mutation {
    none,
    power_for_falling_factorial, // e^k in place of e (e - 1) ... (e - k + 1)
    drop_fiber_factor,           // fiber Euler numbers replaced by 1
};

struct verify_config {
    int_range euler_chars{-6, 24};
    int_range point_counts{0, 30};
    mutation negative_control = mutation::none;
};

struct check_result {
    std::string name;
    std::string cell; // "e=<e>,n=<n>"
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct verification_report {
    std::vector<check_result> checks;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool all_passed() const noexcept { return failed == 0; }
};

/// Runs every identity check over the grid of (e, n) cells. Checks are
/// emitted cell by cell, ordered by e then n, in a fixed per-cell order.
///
/// Per cell:
///   route_equality         strata sum vs Euler product coefficient
///   macdonald_series       symmetric strata sum vs (1 - q)^(-e)
///   macdonald_binomial     symmetric strata sum vs binomial(e + n - 1, n), e >= 1
///   punctual_strata        strata sum vs p(n) by recurrence, e = 1
///   punctual_product       Euler product coefficient vs p(n) by recurrence, e = 1
///   partition_count        p(n) by enumeration vs p(n) by recurrence, e = 1
///   integrality            number of non-integral stratum values, expected 0
///   falling_factorial      vs injective_tuple_count(e, n), 0 <= e, n <= 8
///   polynomial_power       product route vs polynomial_power_coeff, 0 <= e <= 6, n <= 12
///   multinomial_sum        strata route vs multinomial_sum_coeff, 0 <= e <= 6, 1 <= n <= 12
///
/// Throws `std::invalid_argument` for a grid with negative n.
verification_report run_all(const verify_config& config);

} // namespace hilbert_euler
