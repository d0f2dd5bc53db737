#include <hilbert_euler/partitions.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hilbert_euler {

partition::partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (j > 0 && parts_[j] > parts_[j - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
        weight_ += parts_[j];
    }
}

std::string partition::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j > 0) {
            out += '+';
        }
        out += std::to_string(parts_[j]);
    }
    return out;
}

multiplicity_form to_multiplicity(const partition& nu)
{
    multiplicity_form m{std::vector<unsigned>(nu.weight(), 0u), nu.weight()};
    for (unsigned part : nu.parts()) {
        ++m.alpha[part - 1];
    }
    return m;
}

partition from_multiplicity(const multiplicity_form& m)
{
    if (m.alpha.size() != m.weight) {
        throw std::invalid_argument("multiplicity vector length must equal the weight");
    }
    unsigned long long total = 0;
    std::vector<unsigned> parts;
    for (std::size_t i = m.alpha.size(); i-- > 0;) {
        const auto size = static_cast<unsigned>(i + 1);
        total += static_cast<unsigned long long>(size) * m.alpha[i];
        parts.insert(parts.end(), m.alpha[i], size);
    }
    if (total != m.weight) {
        throw std::invalid_argument("sum of i * alpha_i must equal the weight");
    }
    return partition(std::move(parts));
}

std::vector<partition> enumerate_partitions(unsigned n)
{
    std::vector<partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }

    // Reverse-lexicographic successor: take the rightmost part greater than
    // one, decrease it by one, then refill the tail greedily with parts no
    // larger than the decreased value.
    std::vector<unsigned> current{n};
    while (true) {
        out.emplace_back(current);

        unsigned ones = 0;
        while (!current.empty() && current.back() == 1) {
            current.pop_back();
            ++ones;
        }
        if (current.empty()) {
            break;
        }
        const unsigned cap = --current.back();
        unsigned rest = ones + 1;
        while (rest > 0) {
            const unsigned part = std::min(cap, rest);
            current.push_back(part);
            rest -= part;
        }
    }
    return out;
}

std::vector<big_int> partition_counts(unsigned max_n)
{
    // p(m) = sum_{k >= 1} (-1)^(k+1) [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
    std::vector<big_int> p(max_n + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= max_n; ++m) {
        big_int acc = 0;
        for (unsigned long k = 1;; ++k) {
            const unsigned long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const unsigned long g2 = k * (3 * k + 1) / 2;
            big_int term = p[m - g1];
            if (g2 <= m) {
                term += p[m - g2];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = std::move(acc);
    }
    return p;
}

big_int count_p_recurrence(unsigned n)
{
    return partition_counts(n).back();
}

} // namespace hilbert_euler
