#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <hilbert_euler/numeric.hpp>
#include <hilbert_euler/partitions.hpp>

namespace hilbert_euler {

/// A surface enters only through its topological Euler characteristic,
/// which may be any signed integer.
struct surface_model {
    std::int64_t euler_char = 1;
    unsigned max_n = 20;
};

/// Euler numbers attached to one partition nu of n: the stratum S_nu of the
/// symmetric product, the punctual fiber over it, and its preimage in the
/// Hilbert scheme. tilde_euler == fiber_euler * stratum_euler.
struct stratum_report {
    partition nu;
    rational stratum_euler;
    big_int fiber_euler;
    rational tilde_euler;
};

/// e (e - 1) ... (e - m + 1); 1 for m = 0.
big_int falling_factorial(std::int64_t e, unsigned m);

/// falling_factorial(e, length(nu)) / (alpha_1! ... alpha_n!).
/// Always an integer; `integrality_error` otherwise.
rational stratum_euler(const partition& nu, std::int64_t e);

/// Product of p(nu_j) over the parts of nu.
big_int fiber_euler(const partition& nu);

/// fiber_euler(nu) * stratum_euler(nu, e), checked integral.
rational tilde_stratum_euler(const partition& nu, std::int64_t e);

/// One report per partition of n, in enumeration order. n = 0 yields the
/// empty partition with all three values equal to 1.
std::vector<stratum_report> stratum_reports(unsigned n, std::int64_t e);

/// e(X^[n]) as the sum of tilde_stratum_euler over all partitions of n.
big_int hilbert_euler_strata(unsigned n, std::int64_t e);

/// e(X^(n)) as the sum of stratum_euler over all partitions of n.
big_int symmetric_euler_strata(unsigned n, std::int64_t e);

namespace detail {

// Variants that take a precomputed table p(0..m), m >= largest part.
big_int fiber_euler(const partition& nu, std::span<const big_int> p_table);
rational tilde_stratum_euler(const partition& nu, std::int64_t e, std::span<const big_int> p_table);

} // namespace detail

} // namespace hilbert_euler
