#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <hilbert_euler/numeric.hpp>

namespace hilbert_euler {

/// Arithmetic between series of different truncation orders.
class order_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inverting (or raising to a negative power) a series whose constant term
/// is zero.
class not_invertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Formal power series c_0 + c_1 q + ... + c_N q^N over the rationals, with
/// every term of degree above N discarded. The order N is part of the value:
/// binary operations require equal orders and never re-truncate silently.
class truncated_series {
public:
    /// Zero series of the given order.
    explicit truncated_series(std::size_t order);

    /// Coefficients c_0, c_1, ...; missing high coefficients are zero.
    /// Throws `std::invalid_argument` if more than order + 1 are given.
    truncated_series(std::vector<rational> coeffs, std::size_t order);

    static truncated_series zero(std::size_t order) { return truncated_series(order); }
    static truncated_series one(std::size_t order);

    /// c * q^degree; the zero series when degree > order.
    static truncated_series monomial(const rational& c, std::size_t degree, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// Throws `std::out_of_range` for s > order().
    const rational& coefficient(std::size_t s) const;

    std::span<const rational> coefficients() const noexcept { return coeffs_; }

    bool has_integer_coefficients() const;

    /// Throws `integrality_error` if any coefficient has a denominator.
    std::vector<big_int> integer_coefficients() const;

    truncated_series& operator+=(const truncated_series& rhs);
    truncated_series& operator-=(const truncated_series& rhs);
    truncated_series& operator*=(const truncated_series& rhs);

    friend truncated_series operator+(truncated_series a, const truncated_series& b) { return a += b; }
    friend truncated_series operator-(truncated_series a, const truncated_series& b) { return a -= b; }
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b);
    friend truncated_series operator-(truncated_series a);

    friend bool operator==(const truncated_series&, const truncated_series&) = default;

private:
    std::vector<rational> coeffs_;
};

truncated_series add(const truncated_series& a, const truncated_series& b);
truncated_series mul(const truncated_series& a, const truncated_series& b);

/// Multiplicative inverse up to truncation. Throws `not_invertible` when the
/// constant term vanishes.
truncated_series inverse(const truncated_series& a);

/// a^exponent by square-and-multiply; negative exponents go through
/// `inverse`. a^0 is one, even when a has zero constant term.
truncated_series int_pow(const truncated_series& a, std::int64_t exponent);

/// prod_{k=1}^{order} (1 - q^k)^(-e), truncated at `order`. Factors with
/// k > order do not touch degrees <= order. The result always has integer
/// coefficients; this is checked and `integrality_error` thrown otherwise.
truncated_series euler_product(std::int64_t e, std::size_t order);

/// Same as `a.coefficient(s)`.
const rational& coefficient(const truncated_series& a, std::size_t s);

} // namespace hilbert_euler
