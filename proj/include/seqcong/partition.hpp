#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqcong {

/// Integer type for parts, sizes and multiplicities. Counting tables use
/// arbitrary precision (see counting.hpp); part values never need it.
using Part = std::int64_t;

namespace detail {

inline Part checked_add(Part a, Part b) {
    Part out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("partition size overflows part type");
    return out;
}

inline Part checked_mul(Part a, Part b) {
    Part out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("product overflows part type");
    return out;
}

/// a^e with overflow checking; 0^0 = 1.
inline Part checked_pow(Part a, int e) {
    Part out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, a);
    return out;
}

} // namespace detail

class FrequencyRepr;

/// Integer partition in canonical form: a weakly decreasing sequence of
/// positive parts. The default-constructed value is the empty partition
/// (size 0, length 0). Immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Builds the canonical arrangement of `values` (any order accepted).
    /// Throws std::invalid_argument naming the first nonpositive entry.
    explicit Partition(std::vector<Part> values) : parts_(std::move(values)) {
        for (Part v : parts_)
            if (v <= 0)
                throw std::invalid_argument("partition part must be positive, got " +
                                            std::to_string(v));
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        size_ = sum_parts(parts_);
    }

    Partition(std::initializer_list<Part> values)
        : Partition(std::vector<Part>(values)) {}

    /// Trusted constructor for generators that produce parts already in
    /// weakly decreasing order. Still validates; avoids the sort.
    static Partition from_descending(std::vector<Part> values) {
        Partition p;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] <= 0)
                throw std::invalid_argument("partition part must be positive, got " +
                                            std::to_string(values[i]));
            if (i > 0 && values[i] > values[i - 1])
                throw std::invalid_argument("parts are not weakly decreasing");
        }
        p.parts_ = std::move(values);
        p.size_ = sum_parts(p.parts_);
        return p;
    }

    static Partition from_frequency(const FrequencyRepr& f);

    [[nodiscard]] const std::vector<Part>& parts() const noexcept { return parts_; }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// |λ| = sum of parts.
    [[nodiscard]] Part size() const noexcept { return size_; }

    /// Number of parts r.
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }

    /// λ_1, or 0 for the empty partition.
    [[nodiscard]] Part largest_part() const noexcept {
        return parts_.empty() ? 0 : parts_.front();
    }

    /// Conjugate λ*: λ*_j = #{i : λ_i ≥ j}. Transposes the Young diagram,
    /// so size is preserved and largest part and length swap.
    [[nodiscard]] Partition conjugate() const {
        Partition out;
        if (parts_.empty()) return out;
        out.parts_.reserve(static_cast<std::size_t>(parts_.front()));
        std::size_t rows = parts_.size();
        for (Part col = 1; col <= parts_.front(); ++col) {
            while (parts_[rows - 1] < col) --rows;
            out.parts_.push_back(static_cast<Part>(rows));
        }
        out.size_ = size_;
        return out;
    }

    [[nodiscard]] FrequencyRepr to_frequency() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    static Part sum_parts(const std::vector<Part>& parts) {
        Part total = 0;
        for (Part v : parts) total = detail::checked_add(total, v);
        return total;
    }

    std::vector<Part> parts_;
    Part size_ = 0;
};

/// Frequency notation (1^{m_1} 2^{m_2} ...): sparse map from part value to
/// multiplicity. Absent keys mean multiplicity 0; zero entries are never
/// stored.
class FrequencyRepr {
public:
    FrequencyRepr() = default;

    explicit FrequencyRepr(std::map<Part, Part> freq) : freq_(std::move(freq)) {
        for (const auto& [value, mult] : freq_) {
            if (value <= 0)
                throw std::invalid_argument("part value must be positive, got " +
                                            std::to_string(value));
            if (mult <= 0)
                throw std::invalid_argument("multiplicity of part " + std::to_string(value) +
                                            " must be positive, got " + std::to_string(mult));
        }
    }

    FrequencyRepr(std::initializer_list<std::pair<const Part, Part>> freq)
        : FrequencyRepr(std::map<Part, Part>(freq)) {}

    /// m_i, or 0 when i does not occur.
    [[nodiscard]] Part multiplicity(Part value) const noexcept {
        auto it = freq_.find(value);
        return it == freq_.end() ? 0 : it->second;
    }

    [[nodiscard]] const std::map<Part, Part>& entries() const noexcept { return freq_; }
    [[nodiscard]] bool empty() const noexcept { return freq_.empty(); }

    friend bool operator==(const FrequencyRepr&, const FrequencyRepr&) = default;

private:
    std::map<Part, Part> freq_;
};

inline FrequencyRepr Partition::to_frequency() const {
    std::map<Part, Part> freq;
    for (Part v : parts_) ++freq[v];
    return FrequencyRepr(std::move(freq));
}

inline Partition Partition::from_frequency(const FrequencyRepr& f) {
    std::vector<Part> parts;
    for (auto it = f.entries().rbegin(); it != f.entries().rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition::from_descending(std::move(parts));
}

/// Free-function forms of the conversions; equivalent to the members.
inline FrequencyRepr to_frequency(const Partition& p) { return p.to_frequency(); }
inline Partition from_frequency(const FrequencyRepr& f) { return Partition::from_frequency(f); }
inline Partition conjugate(const Partition& p) { return p.conjugate(); }

} // namespace seqcong
