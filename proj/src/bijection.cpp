#include "rrid/bijection.hpp"

#include <algorithm>
#include <map>

namespace rrid {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t sum(std::span<const std::int64_t> v)
{
    std::int64_t total = 0;
    for (auto x : v) {
        total += x;
    }
    return total;
}

// Gaps pi(s) - pi(s+1), terminal pi(last).
ChainConstraint chain_from_offsets(const Vector &pi)
{
    std::vector<GapBound> gaps;
    for (std::size_t s = 0; s + 1 < pi.size(); ++s) {
        gaps.push_back(GapBound{pi[s] - pi[s + 1], std::nullopt});
    }
    return ChainConstraint(pi.size(), std::move(gaps), GapBound{pi.empty() ? 0 : pi.back(), std::nullopt});
}

void check_modulus(std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
}

} // namespace

Vector profile_bijection(std::span<const std::int64_t> a, const ProfileFamily &from, const ProfileFamily &to,
                         TermIndex term)
{
    if (term.branch >= from.branches.size() || term.branch >= to.branches.size()) {
        throw DomainViolation("profiles '" + from.name + "' and '" + to.name + "' have no common branch "
                              + std::to_string(term.branch));
    }
    const auto pi_from = from.branches[term.branch].offset_values(term.n);
    const auto pi_to = to.branches[term.branch].offset_values(term.n);
    if (pi_from.size() != pi_to.size()) {
        throw DomainViolation("slot counts differ: " + std::to_string(pi_from.size()) + " vs "
                              + std::to_string(pi_to.size()));
    }
    const auto chain = profile_to_chain(from, term);
    if (a.size() != chain.slots()) {
        throw DomainViolation("input has " + std::to_string(a.size()) + " entries, the chain has "
                              + std::to_string(chain.slots()) + " slots");
    }
    if (auto bad = first_violation(a, chain)) {
        throw DomainViolation("input violates " + chain.to_string() + " at slot " + std::to_string(*bad + 1), bad);
    }
    Vector b(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        b[s] = a[s] - pi_from[s] + pi_to[s];
    }
    return b;
}

Vector rr2_single_gap_offsets(std::int64_t n)
{
    Vector pi(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 1);
    if (!pi.empty()) {
        pi[0] = n * n + 1;
    }
    return pi;
}

Vector rr2_classical_offsets(std::int64_t n)
{
    Vector pi;
    for (std::int64_t s = 1; s <= n; ++s) {
        pi.push_back(2 * (n + 1 - s));
    }
    return pi;
}

ChainConstraint rr2_classical_chain(std::size_t n)
{
    return chain_from_offsets(rr2_classical_offsets(static_cast<std::int64_t>(n)));
}

ChainConstraint rr2_single_gap_chain(std::size_t n)
{
    return chain_from_offsets(rr2_single_gap_offsets(static_cast<std::int64_t>(n)));
}

Vector rr2_step_c(const Partition &a)
{
    const auto n = static_cast<std::int64_t>(a.size());
    Vector c(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        const std::int64_t part = a[s];
        const std::int64_t residue = part % 5;
        if (residue != 2 && residue != 3) {
            throw DomainViolation("part " + std::to_string(part) + " is not congruent to 2 or 3 mod 5", s);
        }
        c[s] = part - 3 * (part / 5) - 1 + (s == 0 ? n * n : 0);
    }
    return c;
}

Rr2Image rr2_forward(const Partition &a)
{
    if (a.empty()) {
        throw DomainViolation("the map is defined on nonempty partitions");
    }
    const auto n = static_cast<std::int64_t>(a.size());
    Rr2Image image;
    image.c = rr2_step_c(a);
    for (auto part : a.parts()) {
        image.quotients.push_back(part / 5);
    }
    const auto pi_1 = rr2_single_gap_offsets(n);
    const auto pi_c = rr2_classical_offsets(n);
    image.b.resize(a.size());
    for (std::size_t s = 0; s < a.size(); ++s) {
        image.b[s] = image.c[s] - pi_1[s] + pi_c[s];
    }
    image.record = BijectionRecord{a.parts(), image.b, n, a.weight(), sum(image.b)};
    return image;
}

Rr2Preimage rr2_inverse_detailed(std::span<const std::int64_t> b)
{
    if (b.empty()) {
        throw DomainViolation("the map is defined on nonempty vectors");
    }
    const auto chain = rr2_classical_chain(b.size());
    if (auto bad = first_violation(b, chain)) {
        throw DomainViolation("input violates " + chain.to_string() + " at slot " + std::to_string(*bad + 1), bad);
    }
    const auto n = static_cast<std::int64_t>(b.size());
    const auto pi_1 = rr2_single_gap_offsets(n);
    const auto pi_c = rr2_classical_offsets(n);
    Vector a(b.size());
    Vector k(b.size());
    for (std::size_t s = 0; s < b.size(); ++s) {
        const std::int64_t shift = (s == 0 ? n * n : 0) + pi_c[s] - pi_1[s];
        k[s] = floor_div(b[s] - 1 - shift, 2);
        a[s] = b[s] + 3 * k[s] + 1 - shift;
    }
    return Rr2Preimage{Partition(std::move(a)), std::move(k)};
}

Partition rr2_inverse(std::span<const std::int64_t> b)
{
    return rr2_inverse_detailed(b).a;
}

bool weight_relation_check(const BijectionRecord &record)
{
    if (record.input_weight != sum(record.input) || record.output_weight != sum(record.output)) {
        return false;
    }
    std::int64_t correction = 0;
    for (auto part : record.input) {
        correction += 3 * floor_div(part, 5) + 1;
    }
    return record.output_weight == record.input_weight + record.n * record.n - correction;
}

Partition glaisher_forward_step(const Partition &p, std::int64_t modulus)
{
    check_modulus(modulus);
    Vector parts;
    for (auto part : p.parts()) {
        if (part % modulus == 0) {
            parts.insert(parts.end(), static_cast<std::size_t>(modulus), part / modulus);
        } else {
            parts.push_back(part);
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition glaisher_forward(const Partition &p, std::int64_t modulus)
{
    Partition current = p;
    while (!no_part_divisible(current, modulus)) {
        current = glaisher_forward_step(current, modulus);
    }
    return current;
}

Partition glaisher_inverse_step(const Partition &p, std::int64_t modulus)
{
    check_modulus(modulus);
    std::map<std::int64_t, std::int64_t> multiplicity;
    for (auto part : p.parts()) {
        ++multiplicity[part];
    }
    Vector parts;
    for (const auto &[value, count] : multiplicity) {
        parts.insert(parts.end(), static_cast<std::size_t>(count / modulus), value * modulus);
        parts.insert(parts.end(), static_cast<std::size_t>(count % modulus), value);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition glaisher_inverse(const Partition &p, std::int64_t modulus)
{
    Partition current = p;
    while (!repetition_bounded(current, modulus)) {
        current = glaisher_inverse_step(current, modulus);
    }
    return current;
}

} // namespace rrid
