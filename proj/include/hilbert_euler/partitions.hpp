#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <hilbert_euler/numeric.hpp>

namespace hilbert_euler {

/// An integer partition nu_1 >= nu_2 >= ... >= nu_k > 0 of its weight n.
///
/// Default construction yields the empty partition of 0. The constructor
/// from a parts list rejects unsorted sequences and zero parts with
/// `std::invalid_argument`.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    unsigned weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }

    /// Parts joined by '+', e.g. "2+1+1". The empty partition renders as "".
    std::string to_string() const;

    friend bool operator==(const partition&, const partition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// Dense multiplicity vector: alpha[i - 1] is the number of parts equal to i,
/// for i = 1..weight.
struct multiplicity_form {
    std::vector<unsigned> alpha;
    unsigned weight = 0;

    friend bool operator==(const multiplicity_form&, const multiplicity_form&) = default;
};

multiplicity_form to_multiplicity(const partition& nu);

/// Inverse of `to_multiplicity`. Throws `std::invalid_argument` unless
/// alpha has exactly `weight` entries with sum of i * alpha_i equal to weight.
partition from_multiplicity(const multiplicity_form& m);

inline std::size_t length(const partition& nu) noexcept { return nu.length(); }

/// Every partition of n exactly once, in reverse-lexicographic order on the
/// parts sequence: (n), (n-1, 1), ..., (1, ..., 1). n = 0 gives the single
/// empty partition.
std::vector<partition> enumerate_partitions(unsigned n);

/// p(0), ..., p(max_n) from Euler's pentagonal-number recurrence.
std::vector<big_int> partition_counts(unsigned max_n);

/// p(n) from the pentagonal-number recurrence, without enumerating.
big_int count_p_recurrence(unsigned n);

} // namespace hilbert_euler
