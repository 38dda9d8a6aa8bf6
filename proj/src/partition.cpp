#include "rrid/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rrid {

namespace {

void check_modulus(std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
}

void check_bound(const GapBound &b)
{
    if (b.lower < 0) {
        throw std::invalid_argument("gap lower bound must be nonnegative");
    }
    if (b.upper && *b.upper < b.lower) {
        throw std::invalid_argument("gap upper bound below lower bound");
    }
}

std::string bound_to_string(const GapBound &b)
{
    std::string out = ">=_" + std::to_string(b.lower);
    if (b.upper) {
        out += "^" + std::to_string(*b.upper);
    }
    return out;
}

// Depth-first search over the differences d_s = a_s - a_{s+1} (a_m = 0).
// The weight is sum_s (s+1) d_s, so every slot but the first is chosen
// explicitly and d_0 absorbs what remains of the weight budget.
class DifferenceWalker {
public:
    explicit DifferenceWalker(const ChainConstraint &c) : chain_(c), diffs_(c.slots()), min_below_(c.slots() + 1, 0)
    {
        // min_below_[s] = smallest contribution of slots 0..s-1
        for (std::size_t s = 0; s < c.slots(); ++s) {
            min_below_[s + 1] = min_below_[s] + static_cast<std::int64_t>(s + 1) * c.bound_after(s).lower;
        }
    }

    // leaf(d_0 range [lo, hi], remaining budget) is called once every
    // higher difference is fixed.
    template <typename Leaf>
    void walk(std::int64_t budget, Leaf &&leaf)
    {
        if (chain_.slots() == 0) {
            return;
        }
        descend(chain_.slots() - 1, budget, leaf);
    }

    std::vector<std::int64_t> &diffs() { return diffs_; }

private:
    template <typename Leaf>
    void descend(std::size_t s, std::int64_t budget, Leaf &leaf)
    {
        const GapBound &b = chain_.bound_after(s);
        if (s == 0) {
            leaf(b.lower, b.upper ? std::min(*b.upper, budget) : budget, budget);
            return;
        }
        const auto coefficient = static_cast<std::int64_t>(s + 1);
        for (std::int64_t d = b.lower; !b.upper || d <= *b.upper; ++d) {
            const std::int64_t rest = budget - coefficient * d;
            if (rest < min_below_[s]) {
                break;
            }
            diffs_[s] = d;
            descend(s - 1, rest, leaf);
        }
    }

    const ChainConstraint &chain_;
    std::vector<std::int64_t> diffs_;
    std::vector<std::int64_t> min_below_;
};

Vector accumulate(const std::vector<std::int64_t> &diffs)
{
    Vector v(diffs.size());
    std::int64_t running = 0;
    for (std::size_t s = diffs.size(); s-- > 0;) {
        running += diffs[s];
        v[s] = running;
    }
    return v;
}

void partitions_below(std::int64_t remaining, std::int64_t max_part, Vector &current,
                      const std::function<bool(std::int64_t)> &allowed, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        if (!allowed(part)) {
            continue;
        }
        current.push_back(part);
        partitions_below(remaining - part, part, current, allowed, out);
        current.pop_back();
    }
}

} // namespace

Partition::Partition(Vector parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        if (__builtin_add_overflow(weight_, parts_[i], &weight_)) {
            throw std::overflow_error("partition weight overflows");
        }
    }
}

Partition Partition::from_vector(std::span<const std::int64_t> v)
{
    auto end = v.end();
    while (end != v.begin() && *(end - 1) == 0) {
        --end;
    }
    return Partition(Vector(v.begin(), end));
}

Partition Partition::parse(std::string_view text)
{
    return Partition(parse_vector(text));
}

std::string Partition::to_string() const
{
    return vector_to_string(parts_);
}

ChainConstraint::ChainConstraint(std::size_t slots, std::vector<GapBound> gaps, GapBound terminal)
    : slots_(slots), gaps_(std::move(gaps)), terminal_(terminal)
{
    const std::size_t expected = slots == 0 ? 0 : slots - 1;
    if (gaps_.size() != expected) {
        throw std::invalid_argument("chain with " + std::to_string(slots) + " slots needs "
                                    + std::to_string(expected) + " gaps, got " + std::to_string(gaps_.size()));
    }
    for (const auto &g : gaps_) {
        check_bound(g);
    }
    check_bound(terminal_);
}

std::int64_t ChainConstraint::minimum_weight() const
{
    std::int64_t total = 0;
    for (std::size_t s = 0; s < slots_; ++s) {
        total += static_cast<std::int64_t>(s + 1) * bound_after(s).lower;
    }
    return total;
}

std::string ChainConstraint::to_string() const
{
    if (slots_ == 0) {
        return "(empty chain)";
    }
    std::ostringstream out;
    for (std::size_t s = 0; s < slots_; ++s) {
        out << 'a' << (s + 1) << ' ' << bound_to_string(bound_after(s)) << ' ';
    }
    out << '0';
    return out.str();
}

std::optional<std::size_t> first_violation(std::span<const std::int64_t> v, const ChainConstraint &c)
{
    if (v.size() != c.slots()) {
        throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match chain slots "
                                    + std::to_string(c.slots()));
    }
    for (std::size_t s = 0; s < v.size(); ++s) {
        const std::int64_t next = s + 1 < v.size() ? v[s + 1] : 0;
        if (!c.bound_after(s).admits(v[s] - next)) {
            return s;
        }
    }
    return std::nullopt;
}

bool satisfies_chain(std::span<const std::int64_t> v, const ChainConstraint &c)
{
    return !first_violation(v, c).has_value();
}

void for_each_chain_vector(const ChainConstraint &c, std::int64_t weight,
                           const std::function<void(std::span<const std::int64_t>)> &visit)
{
    if (weight < 0) {
        return;
    }
    if (c.slots() == 0) {
        if (weight == 0) {
            visit({});
        }
        return;
    }
    DifferenceWalker walker(c);
    walker.walk(weight, [&](std::int64_t lo, std::int64_t hi, std::int64_t remaining) {
        if (remaining >= lo && remaining <= hi) {
            walker.diffs()[0] = remaining;
            const Vector v = accumulate(walker.diffs());
            visit(v);
        }
    });
}

std::vector<Vector> enumerate_chain(const ChainConstraint &c, std::int64_t weight)
{
    std::vector<Vector> out;
    for_each_chain_vector(c, weight, [&](std::span<const std::int64_t> v) { out.emplace_back(v.begin(), v.end()); });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<std::uint64_t> count_chain_by_weight(const ChainConstraint &c, std::int64_t max_weight)
{
    if (max_weight < 0) {
        return {};
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_weight) + 1, 0);
    if (c.slots() == 0) {
        counts[0] = 1;
        return counts;
    }
    DifferenceWalker walker(c);
    walker.walk(max_weight, [&](std::int64_t lo, std::int64_t hi, std::int64_t remaining) {
        // weight so far is max_weight - remaining; d_0 adds one per unit
        const std::int64_t used = max_weight - remaining;
        for (std::int64_t d = lo; d <= hi; ++d) {
            ++counts[static_cast<std::size_t>(used + d)];
        }
    });
    return counts;
}

ChainConstraint bounded_repetition_conjugate_chain(std::int64_t modulus, std::size_t slots)
{
    check_modulus(modulus);
    std::vector<GapBound> gaps(slots == 0 ? 0 : slots - 1, GapBound{0, modulus - 1});
    return ChainConstraint(slots, std::move(gaps), GapBound{1, modulus - 1});
}

Partition conjugate(const Partition &p)
{
    if (p.empty()) {
        return {};
    }
    Vector columns(static_cast<std::size_t>(p[0]), 0);
    for (auto part : p.parts()) {
        for (std::int64_t j = 0; j < part; ++j) {
            ++columns[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(columns));
}

std::vector<Partition> enumerate_partitions(std::int64_t weight)
{
    return enumerate_partitions_with_parts(weight, [](std::int64_t) { return true; });
}

std::vector<Partition> enumerate_partitions_with_parts(std::int64_t weight,
                                                       const std::function<bool(std::int64_t)> &allowed)
{
    std::vector<Partition> out;
    if (weight < 0) {
        return out;
    }
    Vector current;
    partitions_below(weight, weight, current, allowed, out);
    return out;
}

std::vector<Partition> enumerate_partitions_with_parts(const ResidueClass &rc, std::int64_t weight)
{
    return enumerate_partitions_with_parts(weight, [&rc](std::int64_t k) { return rc.contains(k); });
}

bool repetition_bounded(const Partition &p, std::int64_t modulus)
{
    check_modulus(modulus);
    const auto &parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        if (static_cast<std::int64_t>(j - i) >= modulus) {
            return false;
        }
        i = j;
    }
    return true;
}

bool no_part_divisible(const Partition &p, std::int64_t modulus)
{
    check_modulus(modulus);
    return std::none_of(p.parts().begin(), p.parts().end(), [modulus](std::int64_t k) { return k % modulus == 0; });
}

std::string vector_to_string(std::span<const std::int64_t> v)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
    }
    out << ']';
    return out.str();
}

Vector parse_vector(std::string_view text)
{
    const auto trim = [](std::string_view v) {
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) {
            v.remove_prefix(1);
        }
        while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) {
            v.remove_suffix(1);
        }
        return v;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw std::invalid_argument("expected a bracketed list like [7,6,4,2,1], got '" + std::string(text) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
    Vector out;
    if (body.empty()) {
        return out;
    }
    while (true) {
        const auto comma = body.find(',');
        const std::string token(trim(body.substr(0, comma)));
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (token.empty() || used != token.size() || std::isspace(static_cast<unsigned char>(token.front()))) {
            throw std::invalid_argument("malformed list entry '" + token + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        body.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace rrid
