#pragma once

// Offset profiles: a family n -> (u(n), pi(n, 1..u(n))) turns generic
// partitions with at most u(n) parts into constrained ones by adding pi(n, s)
// to the s-th part. The term q^{S(n)}/(q)_{u(n)} with S(n) = sum_s pi(n, s)
// counts the vectors satisfying
//   a_1 >=_{pi(1)-pi(2)} a_2 ... >=_{pi(u-1)-pi(u)} a_u >=_{pi(u)} 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrid/expr.hpp"
#include "rrid/partition.hpp"
#include "rrid/series.hpp"

namespace rrid {

/// One piece of a piecewise offset rule; a piece without a condition always matches.
struct OffsetPiece {
    std::optional<Condition> when;
    Expr value;
};

/// A subfamily indexed by n >= first_index. Profiles indexed by the part count
/// m split into an even branch (m = 2n) and an odd branch (m = 2n - 1).
struct ProfileBranch {
    enum class Parity { any, even, odd };

    Parity parity = Parity::any;
    std::int64_t first_index = 0;
    Expr slots;  // u(n)
    Expr total;  // S(n)
    std::vector<OffsetPiece> offsets;

    std::int64_t slot_count(std::int64_t n) const { return slots.evaluate({n, 0}); }
    std::int64_t declared_total(std::int64_t n) const { return total.evaluate({n, 0}); }
    /// pi(n, 1..u(n)). Throws std::domain_error if no piece matches some slot.
    std::vector<std::int64_t> offset_values(std::int64_t n) const;
};

std::string to_string(ProfileBranch::Parity parity);
ProfileBranch::Parity parse_parity(const std::string &text);

struct ProfileFamily {
    std::string name;
    std::vector<ProfileBranch> branches;
};

/// Which term of a profile family: branch index plus the branch's n.
struct TermIndex {
    std::size_t branch = 0;
    std::int64_t n = 0;

    friend bool operator==(const TermIndex &, const TermIndex &) = default;
};

/// Thrown when a profile yields an invalid chain (increasing or negative offsets).
class ProfileError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gap s is pi(n,s) - pi(n,s+1); the terminal lower bound is pi(n,u(n)).
ChainConstraint profile_to_chain(const ProfileFamily &f, TermIndex term);

/// Terms whose S(n) <= max_weight, per branch in increasing n. Scanning a
/// branch stops at the first n with S(n) > max_weight; S must be
/// nondecreasing until then (NonTerminatingSum otherwise).
std::vector<TermIndex> profile_terms(const ProfileFamily &f, std::int64_t max_weight);

/// sum over branches of sum_n q^{S(n)}/(q)_{u(n)}, using the declared S and u.
TruncatedSeries profile_series(const ProfileFamily &f, std::size_t order);

/// sum over terms with S <= max_weight of the chain-vector counts per weight.
/// Uses enumeration only.
std::vector<std::uint64_t> profile_counts(const ProfileFamily &f, std::int64_t max_weight);

struct ProfileViolation {
    std::size_t branch = 0;
    std::int64_t n = 0;
    std::int64_t slot = 0;  // 1-based; 0 when the violation is not slot-specific
    std::string message;
};

struct ProfileValidation {
    std::string profile;
    std::int64_t checked_up_to = 0;
    std::optional<ProfileViolation> failure;

    bool ok() const { return !failure.has_value(); }
};

/// Checks, for every branch and first_index <= n <= n_max: u(n) >= 0, the
/// branch parity of u(n), nonnegative and weakly decreasing offsets, and
/// sum_s pi(n, s) = S(n). Reports the first violation.
ProfileValidation validate_profile(const ProfileFamily &f, std::int64_t n_max);

} // namespace rrid
