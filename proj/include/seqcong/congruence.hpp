#pragma once

#include <stdexcept>
#include <string>

#include "partition.hpp"

namespace seqcong {

/// Sequentially congruent: λ_i ≡ λ_{i+1} (mod i) for 1 ≤ i ≤ r−1 and
/// λ_r ≡ 0 (mod r). The empty partition is vacuously a member.
[[nodiscard]] inline bool is_sequentially_congruent(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const auto r = static_cast<Part>(parts.size());
    if (r == 0) return true;
    for (Part i = 1; i < r; ++i)
        if ((parts[static_cast<std::size_t>(i - 1)] - parts[static_cast<std::size_t>(i)]) % i != 0)
            return false;
    return parts.back() % r == 0;
}

/// Frequency congruent: every part value i divides its own multiplicity
/// m_i. The empty partition is vacuously a member.
[[nodiscard]] inline bool is_frequency_congruent(const Partition& lambda) {
    for (const auto& [value, mult] : lambda.to_frequency().entries())
        if (mult % value != 0) return false;
    return true;
}

/// Member of 𝓢(j,k): consecutive differences λ_i − λ_{i+1} are 0 or
/// exactly j·i^k, and the smallest part is exactly j·r^k. Equivalently the
/// conjugate has multiplicity j·i^k on every part value i it contains,
/// which is the class the squaring-style map for k-th powers acts on.
/// Throws on j ≤ 0 or k < 0.
[[nodiscard]] inline bool is_member_s_jk(const Partition& lambda, Part j, int k) {
    if (j <= 0) throw std::invalid_argument("j must be positive, got " + std::to_string(j));
    if (k < 0) throw std::invalid_argument("k must be nonnegative, got " + std::to_string(k));
    const auto& parts = lambda.parts();
    const auto r = static_cast<Part>(parts.size());
    if (r == 0) return true;
    for (Part i = 1; i < r; ++i) {
        Part diff = parts[static_cast<std::size_t>(i - 1)] - parts[static_cast<std::size_t>(i)];
        if (diff != 0 && diff != detail::checked_mul(j, detail::checked_pow(i, k)))
            return false;
    }
    return parts.back() == detail::checked_mul(j, detail::checked_pow(r, k));
}

} // namespace seqcong
