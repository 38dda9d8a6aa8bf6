#include "rrid/profile.hpp"

namespace rrid {

namespace {

const ProfileBranch &branch_of(const ProfileFamily &f, TermIndex term)
{
    if (term.branch >= f.branches.size()) {
        throw std::out_of_range("profile '" + f.name + "' has no branch " + std::to_string(term.branch));
    }
    const auto &b = f.branches[term.branch];
    if (term.n < b.first_index) {
        throw ProfileError("profile '" + f.name + "': n = " + std::to_string(term.n) + " is below the branch start "
                           + std::to_string(b.first_index));
    }
    return b;
}

} // namespace

std::vector<std::int64_t> ProfileBranch::offset_values(std::int64_t n) const
{
    const std::int64_t u = slot_count(n);
    if (u < 0) {
        throw std::domain_error("u(" + std::to_string(n) + ") is negative");
    }
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(u));
    for (std::int64_t s = 1; s <= u; ++s) {
        const Bindings b{n, s};
        const OffsetPiece *match = nullptr;
        for (const auto &piece : offsets) {
            if (!piece.when || piece.when->holds(b)) {
                match = &piece;
                break;
            }
        }
        if (!match) {
            throw std::domain_error("no offset rule covers n = " + std::to_string(n) + ", s = " + std::to_string(s));
        }
        values.push_back(match->value.evaluate(b));
    }
    return values;
}

std::string to_string(ProfileBranch::Parity parity)
{
    switch (parity) {
    case ProfileBranch::Parity::any: return "any";
    case ProfileBranch::Parity::even: return "even";
    case ProfileBranch::Parity::odd: return "odd";
    }
    return "any";
}

ProfileBranch::Parity parse_parity(const std::string &text)
{
    if (text == "any") return ProfileBranch::Parity::any;
    if (text == "even") return ProfileBranch::Parity::even;
    if (text == "odd") return ProfileBranch::Parity::odd;
    throw std::invalid_argument("unknown branch parity '" + text + "'");
}

ChainConstraint profile_to_chain(const ProfileFamily &f, TermIndex term)
{
    const auto &b = branch_of(f, term);
    const auto pi = b.offset_values(term.n);
    std::vector<GapBound> gaps;
    for (std::size_t s = 0; s + 1 < pi.size(); ++s) {
        const std::int64_t gap = pi[s] - pi[s + 1];
        if (gap < 0) {
            throw ProfileError("profile '" + f.name + "' increases at n = " + std::to_string(term.n) + ", s = "
                               + std::to_string(s + 1));
        }
        gaps.push_back(GapBound{gap, std::nullopt});
    }
    const std::int64_t last = pi.empty() ? 0 : pi.back();
    if (last < 0) {
        throw ProfileError("profile '" + f.name + "' has a negative offset at n = " + std::to_string(term.n));
    }
    return ChainConstraint(pi.size(), std::move(gaps), GapBound{last, std::nullopt});
}

std::vector<TermIndex> profile_terms(const ProfileFamily &f, std::int64_t max_weight)
{
    constexpr std::int64_t scan_limit = 100000;
    std::vector<TermIndex> terms;
    for (std::size_t bi = 0; bi < f.branches.size(); ++bi) {
        const auto &b = f.branches[bi];
        std::optional<std::int64_t> previous;
        std::int64_t n = b.first_index;
        for (;; ++n) {
            if (n - b.first_index > scan_limit) {
                throw NonTerminatingSum("profile '" + f.name + "': S(n) never exceeds " + std::to_string(max_weight));
            }
            const std::int64_t total = b.declared_total(n);
            if (previous && total < *previous) {
                throw NonTerminatingSum("profile '" + f.name + "': S(n) decreases at n = " + std::to_string(n));
            }
            previous = total;
            if (total > max_weight) {
                break;
            }
            terms.push_back(TermIndex{bi, n});
        }
    }
    return terms;
}

TruncatedSeries profile_series(const ProfileFamily &f, std::size_t order)
{
    TruncatedSeries total(order);
    for (const auto &b : f.branches) {
        total += sum_side_standard([&b](std::int64_t n) { return b.declared_total(n); },
                                   [&b](std::int64_t n) { return b.slot_count(n); }, order,
                                   SumOptions{b.first_index, 100000});
    }
    return total;
}

std::vector<std::uint64_t> profile_counts(const ProfileFamily &f, std::int64_t max_weight)
{
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max<std::int64_t>(max_weight, -1) + 1), 0);
    for (const auto &term : profile_terms(f, max_weight)) {
        const auto per_weight = count_chain_by_weight(profile_to_chain(f, term), max_weight);
        for (std::size_t w = 0; w < per_weight.size(); ++w) {
            counts[w] += per_weight[w];
        }
    }
    return counts;
}

ProfileValidation validate_profile(const ProfileFamily &f, std::int64_t n_max)
{
    ProfileValidation report{f.name, n_max, std::nullopt};
    auto fail = [&](std::size_t bi, std::int64_t n, std::int64_t s, std::string message) {
        report.failure = ProfileViolation{bi, n, s, std::move(message)};
        return report;
    };
    for (std::size_t bi = 0; bi < f.branches.size(); ++bi) {
        const auto &b = f.branches[bi];
        for (std::int64_t n = b.first_index; n <= n_max; ++n) {
            std::vector<std::int64_t> pi;
            std::int64_t u = 0;
            try {
                u = b.slot_count(n);
                pi = b.offset_values(n);
            } catch (const std::exception &e) {
                return fail(bi, n, 0, e.what());
            }
            if ((b.parity == ProfileBranch::Parity::even && u % 2 != 0)
                || (b.parity == ProfileBranch::Parity::odd && u % 2 == 0)) {
                return fail(bi, n, 0, "u(n) = " + std::to_string(u) + " contradicts branch parity " + to_string(b.parity));
            }
            std::int64_t sum = 0;
            for (std::size_t s = 0; s < pi.size(); ++s) {
                if (pi[s] < 0) {
                    return fail(bi, n, static_cast<std::int64_t>(s + 1), "negative offset " + std::to_string(pi[s]));
                }
                if (s + 1 < pi.size() && pi[s] < pi[s + 1]) {
                    return fail(bi, n, static_cast<std::int64_t>(s + 1),
                                "offsets increase: " + std::to_string(pi[s]) + " < " + std::to_string(pi[s + 1]));
                }
                sum += pi[s];
            }
            const std::int64_t declared = b.declared_total(n);
            if (sum != declared) {
                return fail(bi, n, 0, "offsets sum to " + std::to_string(sum) + " but S(n) = " + std::to_string(declared));
            }
        }
    }
    return report;
}

} // namespace rrid
