#pragma once

// Integer partitions and the descendant / child / multiplicity combinatorics
// that drive the pullback decompositions of higher associated varieties.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crl_atlas {

/// Weakly decreasing list of positive parts; canonicalized on construction.
class Partition {
public:
    /// Sorts the parts; throws std::invalid_argument on an empty list or a
    /// non-positive part.
    explicit Partition(std::vector<int> parts);

    /// "4,3,2,2" or with exponent shorthand "3,2^4".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_.at(i); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int sum() const noexcept;
    /// m_value: number of parts equal to value.
    int count_of(int value) const noexcept;
    int largest() const noexcept { return parts_.front(); }
    int smallest() const noexcept { return parts_.back(); }

    /// Every part increased by one.
    Partition incremented() const;
    /// Every part decreased by one; throws when some part equals 1.
    Partition decremented() const;

    /// "4,3,2,2".
    std::string str() const;
    /// "4,3,2^2": runs of length >= 2 use the exponent shorthand.
    std::string compact_str() const;

    /// Lexicographic on the part list.
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Partitions of r with every part >= min_part (and exactly `length` parts if
/// given), in lexicographically decreasing order.
std::vector<Partition> enumerate_partitions(int r, int min_part = 1, std::optional<int> length = std::nullopt);

/// Same count as enumerate_partitions(...).size() without materializing.
std::int64_t count_partitions(int r, int min_part, int length);

/// D_j(lambda): subtract 1 from exactly j parts, dropping parts that reach 0.
/// The empty partition (all parts dropped) is not representable and is
/// omitted. Sorted decreasing, without duplicates. Requires 0 <= j <= |lambda|.
std::vector<Partition> descendants(const Partition& lambda, int j);

/// F_j(lambda): the descendants that keep all |lambda| parts.
/// Requires 0 <= j <= |lambda| - m_1(lambda).
std::vector<Partition> children(const Partition& lambda, int j);

/// m(child, lambda): number of 0/1 vectors iota over the positions of child,
/// padded with zero parts up to |lambda|, for which child + iota equals
/// lambda as a multiset. Zero when child is not a descendant of lambda.
std::int64_t multiplicity(const Partition& child, const Partition& lambda);

enum class Parity { odd, even };

struct CountRow {
    int d = 0;
    int k = 0;
    std::vector<std::int64_t> counts;  // indexed by i
    friend bool operator==(const CountRow&, const CountRow&) = default;
};

/// Odd: d = 2k-1, counts of partitions of d with parts >= 2 and length k-i-1,
/// i = 0..k-2. Even: d = 2k, length k-i, i = 0..k-1. Rows k = 3..max_k.
std::vector<CountRow> count_table(Parity parity, int max_k);

/// Transcribed published rows k = 3..13.
const std::string& count_table_reference_text(Parity parity);
/// Rows "d,k,c_0,c_1,..."; blank lines and '#' comments are skipped.
std::vector<CountRow> parse_count_table(const std::string& text);

}  // namespace crl_atlas
