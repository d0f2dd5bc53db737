#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hilbert_euler {

using big_int = mpz_class;
using rational = mpq_class;

/// Thrown when a quantity that must be an integer comes out with a
/// denominator other than 1.
class integrality_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline bool is_integer(const rational& q) { return q.get_den() == 1; }

/// Returns the numerator of `q`, throwing `integrality_error` (mentioning
/// `what`) if `q` is not an integer.
big_int require_integer(const rational& q, std::string_view what);

big_int factorial(unsigned m);

big_int binomial(const big_int& top, unsigned bottom);

inline std::string to_string(const big_int& z) { return z.get_str(); }
inline std::string to_string(const rational& q) { return q.get_str(); }

} // namespace hilbert_euler
