#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "partition.hpp"

namespace seqcong {

namespace detail {

/// floor(sqrt(n)) for n ≥ 0.
inline Part isqrt(Part n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    auto r = static_cast<Part>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// floor root: largest b with b^e ≤ n (e ≥ 1, n ≥ 0).
inline Part iroot(Part n, int e) {
    if (n <= 0) return 0;
    auto b = static_cast<Part>(std::pow(static_cast<double>(n), 1.0 / e));
    while (b > 0 && checked_pow(b, e) > n) --b;
    while (checked_pow(b + 1, e) <= n) ++b;
    return b;
}

} // namespace detail

/// Partition into squares, stored as exponent counts: base i with count e_i
/// means the part i² occurs e_i times. Size is Σ i²·e_i.
class SquarePartition {
public:
    SquarePartition() = default;

    explicit SquarePartition(std::map<Part, Part> exps) : exps_(std::move(exps)) {
        for (const auto& [base, count] : exps_) {
            if (base <= 0)
                throw std::invalid_argument("base must be positive, got " + std::to_string(base));
            if (count <= 0)
                throw std::invalid_argument("exponent count of base " + std::to_string(base) +
                                            " must be positive, got " + std::to_string(count));
        }
    }

    SquarePartition(std::initializer_list<std::pair<const Part, Part>> exps)
        : SquarePartition(std::map<Part, Part>(exps)) {}

    /// Reads a partition whose parts are all perfect squares; throws
    /// std::domain_error naming the first part that is not a square.
    static SquarePartition from_partition(const Partition& p) {
        std::map<Part, Part> exps;
        for (const auto& [value, mult] : p.to_frequency().entries()) {
            Part root = detail::isqrt(value);
            if (root * root != value)
                throw std::domain_error("part " + std::to_string(value) +
                                        " is not a perfect square");
            exps[root] = mult;
        }
        return SquarePartition(std::move(exps));
    }

    /// The represented partition, with explicit square parts.
    [[nodiscard]] Partition to_partition() const {
        std::vector<Part> parts;
        for (auto it = exps_.rbegin(); it != exps_.rend(); ++it)
            parts.insert(parts.end(), static_cast<std::size_t>(it->second),
                         detail::checked_mul(it->first, it->first));
        return Partition::from_descending(std::move(parts));
    }

    [[nodiscard]] const std::map<Part, Part>& exponents() const noexcept { return exps_; }
    [[nodiscard]] bool empty() const noexcept { return exps_.empty(); }

    [[nodiscard]] Part size() const {
        Part total = 0;
        for (const auto& [base, count] : exps_)
            total = detail::checked_add(total,
                                        detail::checked_mul(detail::checked_mul(base, base), count));
        return total;
    }

    friend bool operator==(const SquarePartition&, const SquarePartition&) = default;
    friend auto operator<=>(const SquarePartition& a, const SquarePartition& b) {
        return std::lexicographical_compare_three_way(
            a.exps_.begin(), a.exps_.end(), b.exps_.begin(), b.exps_.end());
    }

private:
    std::map<Part, Part> exps_;
};

/// Partition into perfect powers i^power with uniform multiplicity: every
/// base in `bases` contributes the part base^power exactly `mult` times.
/// The uniform multiplicity is structural; repeated parts are never stored.
class PowerPartition {
public:
    PowerPartition() = default;

    PowerPartition(int power, Part mult, std::vector<Part> bases)
        : power_(power), mult_(mult), bases_(std::move(bases)) {
        if (power_ < 1)
            throw std::invalid_argument("power must be at least 1, got " + std::to_string(power_));
        if (mult_ <= 0)
            throw std::invalid_argument("multiplicity must be positive, got " +
                                        std::to_string(mult_));
        for (std::size_t i = 0; i < bases_.size(); ++i) {
            if (bases_[i] <= 0)
                throw std::invalid_argument("base must be positive, got " +
                                            std::to_string(bases_[i]));
            if (i > 0 && bases_[i] <= bases_[i - 1])
                throw std::invalid_argument("bases must be strictly increasing");
        }
    }

    [[nodiscard]] int power() const noexcept { return power_; }
    [[nodiscard]] Part mult() const noexcept { return mult_; }
    [[nodiscard]] const std::vector<Part>& bases() const noexcept { return bases_; }
    [[nodiscard]] bool empty() const noexcept { return bases_.empty(); }

    [[nodiscard]] Part size() const {
        Part total = 0;
        for (Part b : bases_)
            total = detail::checked_add(total,
                                        detail::checked_mul(mult_, detail::checked_pow(b, power_)));
        return total;
    }

    [[nodiscard]] Partition to_partition() const {
        std::vector<Part> parts;
        for (auto it = bases_.rbegin(); it != bases_.rend(); ++it)
            parts.insert(parts.end(), static_cast<std::size_t>(mult_),
                         detail::checked_pow(*it, power_));
        return Partition::from_descending(std::move(parts));
    }

    friend auto operator<=>(const PowerPartition&, const PowerPartition&) = default;

private:
    int power_ = 1;
    Part mult_ = 1;
    std::vector<Part> bases_;
};

/// Squaring map on frequency congruent partitions: a part value i occurring
/// i·e_i times becomes the square i² occurring e_i times. Size-preserving
/// since i·(i·e_i) = i²·e_i. Throws std::domain_error on input outside the
/// frequency congruent class, naming the offending part.
[[nodiscard]] inline SquarePartition pi_map(const Partition& lambda) {
    std::map<Part, Part> exps;
    for (const auto& [value, mult] : lambda.to_frequency().entries()) {
        if (mult % value != 0)
            throw std::domain_error("not frequency congruent: part " + std::to_string(value) +
                                    " has multiplicity " + std::to_string(mult));
        exps[value] = mult / value;
    }
    return SquarePartition(std::move(exps));
}

/// Inverse of pi_map: base i with count e_i becomes the part i with
/// multiplicity i·e_i. Always lands in the frequency congruent class.
[[nodiscard]] inline Partition pi_inverse(const SquarePartition& mu) {
    std::map<Part, Part> freq;
    for (const auto& [base, count] : mu.exponents())
        freq[base] = detail::checked_mul(base, count);
    return Partition::from_frequency(FrequencyRepr(std::move(freq)));
}

/// Composite bijection from sequentially congruent partitions to partitions
/// into squares: conjugate, then apply the squaring map. Size-preserving.
/// Throws std::domain_error on non-members.
[[nodiscard]] inline SquarePartition seq_to_square(const Partition& lambda) {
    if (!is_sequentially_congruent(lambda))
        throw std::domain_error("partition is not sequentially congruent");
    return pi_map(lambda.conjugate());
}

/// Inverse of seq_to_square; the result is always sequentially congruent.
[[nodiscard]] inline Partition square_to_seq(const SquarePartition& mu) {
    return pi_inverse(mu).conjugate();
}

/// Weighted frequency statistic 𝓛 = Σ i·e_i over a partition into squares.
/// Equals the length of its preimage under the squaring map, and therefore
/// the largest part of the corresponding sequentially congruent partition.
[[nodiscard]] inline Part l_stat(const SquarePartition& mu) {
    Part total = 0;
    for (const auto& [base, count] : mu.exponents())
        total = detail::checked_add(total, detail::checked_mul(base, count));
    return total;
}

/// Power-map analogue of pi_map: input must have multiplicity exactly
/// j·i^k on every part value i it contains (the conjugate shape of an
/// 𝓢(j,k) member); each such value becomes the part i^{k+1} occurring j
/// times. Throws std::domain_error naming the first violating part.
[[nodiscard]] inline PowerPartition pi_jk_map(const Partition& lambda, Part j, int k) {
    if (j <= 0) throw std::invalid_argument("j must be positive, got " + std::to_string(j));
    if (k < 0) throw std::invalid_argument("k must be nonnegative, got " + std::to_string(k));
    std::vector<Part> bases;
    for (const auto& [value, mult] : lambda.to_frequency().entries()) {
        Part expected = detail::checked_mul(j, detail::checked_pow(value, k));
        if (mult != expected)
            throw std::domain_error("part " + std::to_string(value) + " has multiplicity " +
                                    std::to_string(mult) + ", expected " +
                                    std::to_string(expected));
        bases.push_back(value);
    }
    return PowerPartition(k + 1, j, std::move(bases));
}

/// Inverse of pi_jk_map: every base i becomes the part i with multiplicity
/// j·i^k, where j and k are carried by the PowerPartition itself.
[[nodiscard]] inline Partition pi_jk_inverse(const PowerPartition& rho) {
    const int k = rho.power() - 1;
    std::map<Part, Part> freq;
    for (Part base : rho.bases())
        freq[base] = detail::checked_mul(rho.mult(), detail::checked_pow(base, k));
    return Partition::from_frequency(FrequencyRepr(std::move(freq)));
}

} // namespace seqcong
