#include <hilbert_euler/strata.hpp>

#include <string>

namespace hilbert_euler {

namespace {

std::string describe(const partition& nu, std::int64_t e)
{
    return "partition (" + nu.to_string() + ") at e = " + std::to_string(e);
}

big_int multiplicity_factorials(const partition& nu)
{
    big_int denom = 1;
    for (unsigned a : to_multiplicity(nu).alpha) {
        if (a > 1) {
            denom *= factorial(a);
        }
    }
    return denom;
}

} // namespace

big_int falling_factorial(std::int64_t e, unsigned m)
{
    big_int out = 1;
    const big_int top = static_cast<long>(e);
    for (unsigned i = 0; i < m; ++i) {
        out *= top - i;
    }
    return out;
}

rational stratum_euler(const partition& nu, std::int64_t e)
{
    rational value(falling_factorial(e, static_cast<unsigned>(nu.length())), multiplicity_factorials(nu));
    value.canonicalize();
    if (!is_integer(value)) {
        require_integer(value, "stratum Euler number for " + describe(nu, e));
    }
    return value;
}

big_int detail::fiber_euler(const partition& nu, std::span<const big_int> p_table)
{
    big_int out = 1;
    for (unsigned part : nu.parts()) {
        out *= p_table[part];
    }
    return out;
}

big_int fiber_euler(const partition& nu)
{
    const unsigned largest = nu.parts().empty() ? 0 : nu.parts().front();
    return detail::fiber_euler(nu, partition_counts(largest));
}

rational detail::tilde_stratum_euler(const partition& nu, std::int64_t e, std::span<const big_int> p_table)
{
    rational value = stratum_euler(nu, e) * detail::fiber_euler(nu, p_table);
    if (!is_integer(value)) {
        require_integer(value, "tilde stratum Euler number for " + describe(nu, e));
    }
    return value;
}

rational tilde_stratum_euler(const partition& nu, std::int64_t e)
{
    return stratum_euler(nu, e) * fiber_euler(nu);
}

std::vector<stratum_report> stratum_reports(unsigned n, std::int64_t e)
{
    const auto p_table = partition_counts(n);
    std::vector<stratum_report> out;
    for (auto& nu : enumerate_partitions(n)) {
        auto stratum = stratum_euler(nu, e);
        auto fiber = detail::fiber_euler(nu, p_table);
        rational tilde = stratum * fiber;
        out.push_back({std::move(nu), std::move(stratum), std::move(fiber), std::move(tilde)});
    }
    return out;
}

big_int hilbert_euler_strata(unsigned n, std::int64_t e)
{
    const auto p_table = partition_counts(n);
    rational total = 0;
    for (const auto& nu : enumerate_partitions(n)) {
        total += detail::tilde_stratum_euler(nu, e, p_table);
    }
    return require_integer(total, "strata sum for n = " + std::to_string(n));
}

big_int symmetric_euler_strata(unsigned n, std::int64_t e)
{
    rational total = 0;
    for (const auto& nu : enumerate_partitions(n)) {
        total += stratum_euler(nu, e);
    }
    return require_integer(total, "symmetric strata sum for n = " + std::to_string(n));
}

} // namespace hilbert_euler
