#include <hilbert_euler/numeric.hpp>

namespace hilbert_euler {

big_int require_integer(const rational& q, std::string_view what)
{
    if (!is_integer(q)) {
        throw integrality_error(std::string(what) + " is not an integer: " + q.get_str());
    }
    return q.get_num();
}

big_int factorial(unsigned m)
{
    big_int out;
    mpz_fac_ui(out.get_mpz_t(), m);
    return out;
}

// Generalised binomial top (top-1) ... (top-bottom+1) / bottom!, valid for
// negative top as well.
big_int binomial(const big_int& top, unsigned bottom)
{
    big_int out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), bottom);
    return out;
}

} // namespace hilbert_euler
