#include <hilbert_euler/series.hpp>

#include <limits>
#include <string>
#include <utility>

namespace hilbert_euler {

namespace {

void require_same_order(const truncated_series& a, const truncated_series& b)
{
    if (a.order() != b.order()) {
        throw order_mismatch("series orders differ: " + std::to_string(a.order()) + " vs "
                             + std::to_string(b.order()));
    }
}

} // namespace

truncated_series::truncated_series(std::size_t order) : coeffs_(order + 1) {}

truncated_series::truncated_series(std::vector<rational> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() > order + 1) {
        throw std::invalid_argument("more coefficients than the truncation order allows");
    }
    coeffs_.resize(order + 1);
}

truncated_series truncated_series::one(std::size_t order)
{
    return monomial(1, 0, order);
}

truncated_series truncated_series::monomial(const rational& c, std::size_t degree, std::size_t order)
{
    truncated_series out(order);
    if (degree <= order) {
        out.coeffs_[degree] = c;
    }
    return out;
}

const rational& truncated_series::coefficient(std::size_t s) const
{
    if (s >= coeffs_.size()) {
        throw std::out_of_range("coefficient index " + std::to_string(s) + " exceeds order "
                                + std::to_string(order()));
    }
    return coeffs_[s];
}

bool truncated_series::has_integer_coefficients() const
{
    for (const auto& c : coeffs_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

std::vector<big_int> truncated_series::integer_coefficients() const
{
    std::vector<big_int> out;
    out.reserve(coeffs_.size());
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        out.push_back(require_integer(coeffs_[s], "coefficient of q^" + std::to_string(s)));
    }
    return out;
}

truncated_series& truncated_series::operator+=(const truncated_series& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        coeffs_[s] += rhs.coeffs_[s];
    }
    return *this;
}

truncated_series& truncated_series::operator-=(const truncated_series& rhs)
{
    require_same_order(*this, rhs);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        coeffs_[s] -= rhs.coeffs_[s];
    }
    return *this;
}

truncated_series& truncated_series::operator*=(const truncated_series& rhs)
{
    *this = *this * rhs;
    return *this;
}

truncated_series operator*(const truncated_series& a, const truncated_series& b)
{
    require_same_order(a, b);
    const std::size_t order = a.order();
    truncated_series out(order);
    // Zero coefficients are skipped: the factors of the Euler product are
    // very sparse.
    for (std::size_t i = 0; i <= order; ++i) {
        const rational& ai = a.coeffs_[i];
        if (sgn(ai) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (sgn(b.coeffs_[j]) != 0) {
                out.coeffs_[i + j] += ai * b.coeffs_[j];
            }
        }
    }
    return out;
}

truncated_series operator-(truncated_series a)
{
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

truncated_series add(const truncated_series& a, const truncated_series& b)
{
    return a + b;
}

truncated_series mul(const truncated_series& a, const truncated_series& b)
{
    return a * b;
}

truncated_series inverse(const truncated_series& a)
{
    const auto a0 = a.coefficient(0);
    if (sgn(a0) == 0) {
        throw not_invertible("series with zero constant term has no inverse");
    }
    const std::size_t order = a.order();
    const rational inv_a0 = 1 / a0;
    std::vector<rational> b(order + 1);
    b[0] = inv_a0;
    // b_s = -(1/a_0) * sum_{k=1}^{s} a_k b_{s-k}
    for (std::size_t s = 1; s <= order; ++s) {
        rational acc = 0;
        for (std::size_t k = 1; k <= s; ++k) {
            const rational& ak = a.coefficient(k);
            if (sgn(ak) != 0) {
                acc += ak * b[s - k];
            }
        }
        b[s] = -acc * inv_a0;
    }
    return truncated_series(std::move(b), order);
}

truncated_series int_pow(const truncated_series& a, std::int64_t exponent)
{
    if (exponent == 0) {
        return truncated_series::one(a.order());
    }
    truncated_series base = exponent < 0 ? inverse(a) : a;
    auto remaining = exponent < 0 ? 0 - static_cast<std::uint64_t>(exponent) : static_cast<std::uint64_t>(exponent);

    truncated_series result = truncated_series::one(a.order());
    while (true) {
        if (remaining & 1u) {
            result *= base;
        }
        remaining >>= 1;
        if (remaining == 0) {
            break;
        }
        base *= base;
    }
    return result;
}

truncated_series euler_product(std::int64_t e, std::size_t order)
{
    if (e == std::numeric_limits<std::int64_t>::min()) {
        throw std::out_of_range("Euler characteristic out of range");
    }
    truncated_series product = truncated_series::one(order);
    for (std::size_t k = 1; k <= order; ++k) {
        const auto factor = truncated_series::one(order) - truncated_series::monomial(1, k, order);
        product *= int_pow(factor, -e);
    }
    for (std::size_t s = 0; s <= order; ++s) {
        require_integer(product.coefficient(s),
                        "Euler product coefficient of q^" + std::to_string(s) + " for e = " + std::to_string(e));
    }
    return product;
}

const rational& coefficient(const truncated_series& a, std::size_t s)
{
    return a.coefficient(s);
}

} // namespace hilbert_euler
