#pragma once

// Explicit bijections between partition sets:
//  * the offset-swap map between two profiles sharing (S, u);
//  * the part-count preserving map from partitions into parts = 2, 3 (mod 5)
//    onto partitions with difference at least 2 and parts > 1 (and back);
//  * Glaisher's map from parts repeated < M times to parts not divisible by M.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrid/partition.hpp"
#include "rrid/profile.hpp"

namespace rrid {

/// Input lies outside a map's domain. position is the 0-based slot of the
/// violated bound (or offending part) when one applies.
class DomainViolation : public std::domain_error {
public:
    DomainViolation(const std::string &what, std::optional<std::size_t> position = std::nullopt)
        : std::domain_error(what), position_(position)
    {
    }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::optional<std::size_t> position_;
};

/// b_s = a_s - pi_a(n, s) + pi_b(n, s). Requires equal slot counts and a
/// satisfying the chain of `from` at the term; the result satisfies the chain
/// of `to`.
Vector profile_bijection(std::span<const std::int64_t> a, const ProfileFamily &from, const ProfileFamily &to,
                         TermIndex term);

/// Weight bookkeeping of one application of the part-count preserving RR2 map.
struct BijectionRecord {
    Vector input;
    Vector output;
    std::int64_t n = 0;
    std::int64_t input_weight = 0;
    std::int64_t output_weight = 0;
};

struct Rr2Image {
    Vector quotients;  // q_s = floor(a_s / 5)
    Vector c;          // after the first step; satisfies c1 >=_{n^2} c2 >=_0 ... >=_0 cn >=_0 1
    Vector b;          // satisfies b1 >=_2 b2 >=_2 ... >=_2 bn >=_0 2
    BijectionRecord record;
};

/// The offsets (n^2 + 1, 1, ..., 1) and 2(n + 1 - s) joined by the second step.
Vector rr2_single_gap_offsets(std::int64_t n);
Vector rr2_classical_offsets(std::int64_t n);
/// b1 >=_2 b2 >=_2 ... >=_2 bn >=_0 2.
ChainConstraint rr2_classical_chain(std::size_t n);
/// c1 >=_{n^2} c2 >=_0 ... >=_0 cn >=_0 1.
ChainConstraint rr2_single_gap_chain(std::size_t n);

/// c_s = a_s - 3 q_s - 1 + n^2 [s = 1], n = number of parts.
Vector rr2_step_c(const Partition &a);
/// Both steps. Throws DomainViolation for an empty partition or a part not
/// congruent to 2 or 3 mod 5.
Rr2Image rr2_forward(const Partition &a);

struct Rr2Preimage {
    Partition a;
    Vector k;  // k_s from the inverse formula; equals the forward q_s
};

/// a_s = b_s + 3 k_s + 1 - n^2 [s = 1] - pi_c(s) + pi_1(s),
/// k_s = floor((b_s - 1 - n^2 [s = 1] - pi_c(s) + pi_1(s)) / 2).
/// Throws DomainViolation if b violates the classical chain.
Rr2Preimage rr2_inverse_detailed(std::span<const std::int64_t> b);
Partition rr2_inverse(std::span<const std::int64_t> b);

/// N_b = N_a + n^2 - sum_s (3 floor(a_s / 5) + 1).
bool weight_relation_check(const BijectionRecord &record);

/// One pass: every part divisible by M becomes M copies of part / M.
Partition glaisher_forward_step(const Partition &p, std::int64_t modulus);
/// Iterates glaisher_forward_step until no part is divisible by M.
Partition glaisher_forward(const Partition &p, std::int64_t modulus);
/// One pass: within each value, every complete group of M copies merges into one part M * value.
Partition glaisher_inverse_step(const Partition &p, std::int64_t modulus);
/// Iterates glaisher_inverse_step until no value repeats M times.
Partition glaisher_inverse(const Partition &p, std::int64_t modulus);

struct CertificationReport {
    std::size_t domain_size = 0;
    std::size_t image_size = 0;
    std::optional<std::size_t> target_size;
    std::optional<std::string> failure;

    bool passed() const { return !failure.has_value(); }
};

/// Checks on a finite domain that forward lands in target, inverse undoes
/// forward, forward is injective and, when target_set is given, the image
/// equals it. Stops at the first failure.
template <typename T>
CertificationReport certify_bijection(const std::vector<T> &domain, const std::function<T(const T &)> &forward,
                                      const std::function<T(const T &)> &inverse,
                                      const std::function<bool(const T &)> &in_target,
                                      const std::function<std::string(const T &)> &show,
                                      const std::vector<T> *target_set = nullptr)
{
    CertificationReport report;
    report.domain_size = domain.size();
    std::set<T> image;
    for (const auto &x : domain) {
        T y;
        try {
            y = forward(x);
        } catch (const std::exception &e) {
            report.failure = "forward undefined on " + show(x) + ": " + e.what();
            return report;
        }
        if (!in_target(y)) {
            report.failure = "forward(" + show(x) + ") = " + show(y) + " is outside the target";
            return report;
        }
        T back;
        try {
            back = inverse(y);
        } catch (const std::exception &e) {
            report.failure = "inverse undefined on " + show(y) + ": " + e.what();
            return report;
        }
        if (!(back == x)) {
            report.failure = "inverse(forward(" + show(x) + ")) = " + show(back);
            return report;
        }
        if (!image.insert(y).second) {
            report.failure = "forward is not injective: " + show(y) + " is hit twice";
            return report;
        }
    }
    report.image_size = image.size();
    if (target_set) {
        report.target_size = target_set->size();
        for (const auto &t : *target_set) {
            if (!image.count(t)) {
                report.failure = "target element " + show(t) + " is not in the image";
                return report;
            }
        }
        if (image.size() != target_set->size()) {
            report.failure = "image size " + std::to_string(image.size()) + " differs from target size "
                             + std::to_string(target_set->size());
        }
    }
    return report;
}

} // namespace rrid
