#include <hilbert_euler/verify.hpp>

#include <functional>
#include <stdexcept>

#include <hilbert_euler/partitions.hpp>
#include <hilbert_euler/series.hpp>
#include <hilbert_euler/strata.hpp>

namespace hilbert_euler {

namespace {

void count_injective(unsigned set_size, unsigned remaining, std::vector<bool>& used, big_int& count)
{
    if (remaining == 0) {
        ++count;
        return;
    }
    for (unsigned x = 0; x < set_size; ++x) {
        if (used[x]) {
            continue;
        }
        used[x] = true;
        count_injective(set_size, remaining - 1, used, count);
        used[x] = false;
    }
}

using polynomial = std::vector<big_int>;

polynomial schoolbook_product(const polynomial& a, const polynomial& b)
{
    polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Walks all alpha with sum_{i <= part} i * alpha_i == weight, largest part
// size first, calling visit(alpha) for each.
void for_each_multiplicity(unsigned part, unsigned weight, std::vector<unsigned>& alpha,
                           const std::function<void(const std::vector<unsigned>&)>& visit)
{
    if (part == 0) {
        if (weight == 0) {
            visit(alpha);
        }
        return;
    }
    for (unsigned a = 0; a * part <= weight; ++a) {
        alpha[part - 1] = a;
        for_each_multiplicity(part - 1, weight - a * part, alpha, visit);
    }
    alpha[part - 1] = 0;
}

std::string cell_name(std::int64_t e, std::int64_t n)
{
    return "e=" + std::to_string(e) + ",n=" + std::to_string(n);
}

// The strata route with a deliberately wrong ingredient.
rational mutated_strata_route(unsigned n, std::int64_t e, mutation kind)
{
    const auto p_table = partition_counts(n);
    rational total = 0;
    for (const auto& nu : enumerate_partitions(n)) {
        big_int lead = falling_factorial(e, static_cast<unsigned>(nu.length()));
        if (kind == mutation::power_for_falling_factorial) {
            mpz_pow_ui(lead.get_mpz_t(), big_int(static_cast<long>(e)).get_mpz_t(), nu.length());
        }
        big_int denom = 1;
        for (unsigned a : to_multiplicity(nu).alpha) {
            denom *= factorial(a);
        }
        rational term(lead, denom);
        term.canonicalize();
        if (kind != mutation::drop_fiber_factor) {
            term *= detail::fiber_euler(nu, p_table);
        }
        total += term;
    }
    return total;
}

class report_builder {
public:
    void add(std::string name, std::string cell, std::string expected, std::string actual)
    {
        const bool ok = expected == actual;
        (ok ? report_.passed : report_.failed) += 1;
        report_.checks.push_back({std::move(name), std::move(cell), std::move(expected), std::move(actual), ok});
    }

    verification_report take() { return std::move(report_); }

private:
    verification_report report_;
};

} // namespace

big_int injective_tuple_count(unsigned set_size, unsigned m)
{
    big_int count = 0;
    std::vector<bool> used(set_size, false);
    count_injective(set_size, m, used, count);
    return count;
}

big_int polynomial_power_coeff(unsigned e, unsigned n)
{
    polynomial base(n + 1);
    for (unsigned s = 0; s <= n; ++s) {
        base[s] = static_cast<unsigned long>(enumerate_partitions(s).size());
    }
    polynomial power{1};
    for (unsigned i = 0; i < e; ++i) {
        power = schoolbook_product(power, base);
    }
    return n < power.size() ? power[n] : big_int(0);
}

big_int multinomial_sum_coeff(unsigned e, unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("multinomial_sum_coeff requires n >= 1");
    }
    const auto p = partition_counts(n);

    // Group terms by length k, then weight each group by e (e - 1) ... (e - k + 1).
    std::vector<rational> by_length(n + 1);
    std::vector<unsigned> alpha(n, 0);
    for_each_multiplicity(n, n, alpha, [&](const std::vector<unsigned>& a) {
        unsigned k = 0;
        rational term = 1;
        for (unsigned i = 1; i <= n; ++i) {
            const unsigned ai = a[i - 1];
            k += ai;
            big_int power;
            mpz_pow_ui(power.get_mpz_t(), p[i].get_mpz_t(), ai);
            term *= rational(power, factorial(ai));
        }
        by_length[k] += term;
    });

    rational total = 0;
    for (unsigned k = 1; k <= n; ++k) {
        big_int lead = 1;
        for (unsigned j = 0; j < k; ++j) {
            lead *= static_cast<long>(e) - static_cast<long>(j);
        }
        total += by_length[k] * lead;
    }
    return require_integer(total, "multinomial sum for n = " + std::to_string(n));
}

verification_report run_all(const verify_config& config)
{
    const auto& es = config.euler_chars;
    const auto& ns = config.point_counts;
    report_builder report;
    if (es.empty() || ns.empty()) {
        return report.take();
    }
    if (ns.first < 0) {
        throw std::invalid_argument("point counts must be non-negative");
    }
    const auto max_n = static_cast<unsigned>(ns.last);
    const auto p = partition_counts(max_n);

    for (std::int64_t e = es.first; e <= es.last; ++e) {
        const auto product = euler_product(e, max_n);
        const auto one_minus_q = truncated_series::one(max_n) - truncated_series::monomial(1, 1, max_n);
        const auto macdonald = int_pow(one_minus_q, -e);

        for (std::int64_t n_signed = ns.first; n_signed <= ns.last; ++n_signed) {
            const auto n = static_cast<unsigned>(n_signed);
            const auto cell = cell_name(e, n_signed);
            const auto product_coeff = to_string(product.coefficient(n));

            const std::string strata = config.negative_control == mutation::none
                                           ? to_string(hilbert_euler_strata(n, e))
                                           : to_string(mutated_strata_route(n, e, config.negative_control));
            const auto symmetric = to_string(symmetric_euler_strata(n, e));

            report.add("route_equality", cell, product_coeff, strata);
            report.add("macdonald_series", cell, to_string(macdonald.coefficient(n)), symmetric);
            if (e >= 1) {
                report.add("macdonald_binomial", cell, to_string(binomial(big_int(static_cast<long>(e + n_signed - 1)), n)),
                           symmetric);
            }
            if (e == 1) {
                report.add("punctual_strata", cell, to_string(p[n]), strata);
                report.add("punctual_product", cell, to_string(p[n]), product_coeff);
                report.add("partition_count", cell, to_string(p[n]),
                           std::to_string(enumerate_partitions(n).size()));
            }

            std::size_t non_integral = 0;
            for (const auto& nu : enumerate_partitions(n)) {
                try {
                    stratum_euler(nu, e);
                    detail::tilde_stratum_euler(nu, e, p);
                } catch (const integrality_error&) {
                    ++non_integral;
                }
            }
            report.add("integrality", cell, "0", std::to_string(non_integral));

            if (e >= 0 && e <= 8 && n <= 8) {
                report.add("falling_factorial", cell, to_string(injective_tuple_count(static_cast<unsigned>(e), n)),
                           to_string(falling_factorial(e, n)));
            }
            if (e >= 0 && e <= 6 && n <= 12) {
                report.add("polynomial_power", cell, to_string(polynomial_power_coeff(static_cast<unsigned>(e), n)),
                           product_coeff);
                if (n >= 1) {
                    report.add("multinomial_sum", cell,
                               to_string(multinomial_sum_coeff(static_cast<unsigned>(e), n)), strata);
                }
            }
        }
    }
    return report.take();
}

} // namespace hilbert_euler
