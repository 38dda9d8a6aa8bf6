#pragma once

// Integer partitions, chains of gap inequalities and exhaustive enumeration.
//
// Nothing here depends on the series algebra: every count produced by this
// module comes from visiting concrete vectors, so it can serve as an
// independent oracle for generating-function identities.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rrid/residue.hpp"

namespace rrid {

using Vector = std::vector<std::int64_t>;

/// A weakly decreasing sequence of positive parts. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(Vector parts);

    /// Drops trailing zeros of a weakly decreasing nonnegative vector.
    static Partition from_vector(std::span<const std::int64_t> v);
    /// Parses "[7,6,4,2,1]" (or "[]"). Rejects anything not weakly decreasing.
    static Partition parse(std::string_view text);

    const Vector &parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t weight() const noexcept { return weight_; }
    std::int64_t operator[](std::size_t i) const { return parts_.at(i); }

    /// "[7,6,4,2,1]"
    std::string to_string() const;

    friend bool operator==(const Partition &a, const Partition &b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

private:
    Vector parts_;
    std::int64_t weight_ = 0;
};

/// Bound r <= a - b (<= s when upper is present).
struct GapBound {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;

    bool admits(std::int64_t difference) const
    {
        return difference >= lower && (!upper || difference <= *upper);
    }

    friend bool operator==(const GapBound &, const GapBound &) = default;
};

/// a_1 >=_{g_1} a_2 >=_{g_2} ... >=_{g_{m-1}} a_m >=_{terminal} 0.
///
/// A chain with zero slots admits only the empty vector.
class ChainConstraint {
public:
    /// Throws std::invalid_argument if gaps.size() != slots - 1 (for slots > 0),
    /// a bound is negative, or an upper bound is below its lower bound.
    ChainConstraint(std::size_t slots, std::vector<GapBound> gaps, GapBound terminal);

    std::size_t slots() const noexcept { return slots_; }
    const std::vector<GapBound> &gaps() const noexcept { return gaps_; }
    const GapBound &terminal() const noexcept { return terminal_; }

    /// Bound on a_s - a_{s+1} for 0-based slot s, with a_{m} = 0 at s = m - 1.
    const GapBound &bound_after(std::size_t s) const { return s + 1 == slots_ ? terminal_ : gaps_.at(s); }

    /// Smallest weight of any satisfying vector.
    std::int64_t minimum_weight() const;

    /// "a1 >=_1 a2 >=_0 a3 >=_1 0"; bounded gaps render as ">=_0^1".
    std::string to_string() const;

    friend bool operator==(const ChainConstraint &, const ChainConstraint &) = default;

private:
    std::size_t slots_;
    std::vector<GapBound> gaps_;
    GapBound terminal_;
};

/// Index (0-based) of the first violated bound, or nullopt if v satisfies c.
/// Throws std::invalid_argument if v.size() != c.slots().
std::optional<std::size_t> first_violation(std::span<const std::int64_t> v, const ChainConstraint &c);

bool satisfies_chain(std::span<const std::int64_t> v, const ChainConstraint &c);

/// Calls visit(v) for each vector satisfying c with the given weight.
/// Visiting order is unspecified.
void for_each_chain_vector(const ChainConstraint &c, std::int64_t weight,
                           const std::function<void(std::span<const std::int64_t>)> &visit);

/// All satisfying vectors of the given weight, lexicographically decreasing.
std::vector<Vector> enumerate_chain(const ChainConstraint &c, std::int64_t weight);

/// counts[N] = number of satisfying vectors of weight N, for N = 0..max_weight.
std::vector<std::uint64_t> count_chain_by_weight(const ChainConstraint &c, std::int64_t max_weight);

/// a_1 >=_0^{M-1} ... >=_0^{M-1} a_n >=_1^{M-1} 0: the conjugates of partitions
/// whose parts repeat fewer than M times and whose largest part is n.
ChainConstraint bounded_repetition_conjugate_chain(std::int64_t modulus, std::size_t slots);

Partition conjugate(const Partition &p);

/// Every partition of weight, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(std::int64_t weight);

/// Partitions of weight whose parts k all satisfy allowed(k),
/// lexicographically decreasing.
std::vector<Partition> enumerate_partitions_with_parts(std::int64_t weight,
                                                       const std::function<bool(std::int64_t)> &allowed);

std::vector<Partition> enumerate_partitions_with_parts(const ResidueClass &rc, std::int64_t weight);

/// Every part repeated fewer than M times.
bool repetition_bounded(const Partition &p, std::int64_t modulus);
/// No part divisible by M.
bool no_part_divisible(const Partition &p, std::int64_t modulus);

/// "[a,b,c]" for raw vectors (zeros kept).
std::string vector_to_string(std::span<const std::int64_t> v);
/// Parses "[a,b,c]" into a raw vector; entries may be any integers.
Vector parse_vector(std::string_view text);

} // namespace rrid
