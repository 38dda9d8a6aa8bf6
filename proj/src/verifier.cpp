#include "rrid/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rrid/bijection.hpp"

namespace rrid {

namespace {

constexpr std::int64_t sum_side_check_limit = 12;

using Clock = std::chrono::steady_clock;

VerificationReport row(std::string identity, Mode mode, std::string subject, std::int64_t bound)
{
    VerificationReport r;
    r.identity = std::move(identity);
    r.mode = mode;
    r.subject = std::move(subject);
    r.bound = bound;
    return r;
}

template <typename F>
VerificationReport timed(VerificationReport report, F &&body)
{
    const auto start = Clock::now();
    try {
        body(report);
    } catch (const std::exception &e) {
        report.outcome = Outcome::error;
        report.detail = e.what();
    }
    report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    return report;
}

// First exponent where the series differ, recorded as a mismatch.
bool compare_series(VerificationReport &report, const TruncatedSeries &expected, const std::string &expected_label,
                    const TruncatedSeries &actual, const std::string &actual_label)
{
    const std::size_t order = std::min(expected.order(), actual.order());
    if (auto at = expected.first_difference(actual, order)) {
        report.outcome = Outcome::mismatch;
        report.mismatch = Mismatch{static_cast<std::int64_t>(*at), expected_label, expected[*at], actual_label,
                                   actual[*at]};
        return false;
    }
    return true;
}

bool compare_counts(VerificationReport &report, std::span<const Integer> expected, const std::string &expected_label,
                    std::span<const Integer> actual, const std::string &actual_label)
{
    const std::size_t size = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < size; ++i) {
        if (expected[i] != actual[i]) {
            report.outcome = Outcome::mismatch;
            report.mismatch = Mismatch{static_cast<std::int64_t>(i), expected_label, expected[i], actual_label,
                                       actual[i]};
            return false;
        }
    }
    return true;
}

std::vector<Integer> widen(const std::vector<std::uint64_t> &counts)
{
    return {counts.begin(), counts.end()};
}

std::vector<Integer> prefix(const TruncatedSeries &s, std::int64_t max_weight)
{
    std::vector<Integer> out;
    for (std::int64_t i = 0; i <= max_weight; ++i) {
        out.push_back(s[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<Integer> product_counts(const ResidueClass &rc, std::int64_t max_weight)
{
    std::vector<Integer> out;
    for (std::int64_t n = 0; n <= max_weight; ++n) {
        out.emplace_back(enumerate_partitions_with_parts(rc, n).size());
    }
    return out;
}

bool same_branch_sums(const ProfileBranch &a, const ProfileBranch &b)
{
    if (a.first_index != b.first_index) {
        return false;
    }
    for (std::int64_t n = a.first_index; n <= sum_side_check_limit; ++n) {
        if (a.declared_total(n) != b.declared_total(n) || a.slot_count(n) != b.slot_count(n)) {
            return false;
        }
    }
    return true;
}

IdentityDescriptor descriptor_from_group(const std::string &name, const std::vector<const CatalogEntry *> &group)
{
    const CatalogEntry &first = *group.front();
    IdentityDescriptor d{name, first.product, StandardSum{}, {}};
    auto &sum = std::get<StandardSum>(d.sum);
    for (const auto &b : first.profile.branches) {
        sum.branches.push_back(SumBranch{b.first_index, b.total, b.slots});
    }
    for (const auto *entry : group) {
        if (entry->product != first.product) {
            throw CatalogError("identity '" + name + "': " + entry->name() + " and " + first.name()
                               + " disagree on the product side");
        }
        const auto &branches = entry->profile.branches;
        bool same = branches.size() == first.profile.branches.size();
        for (std::size_t i = 0; same && i < branches.size(); ++i) {
            same = same_branch_sums(branches[i], first.profile.branches[i]);
        }
        if (!same) {
            throw CatalogError("identity '" + name + "': " + entry->name() + " and " + first.name()
                               + " disagree on S or u");
        }
        d.interpretations.push_back(entry->name());
    }
    std::sort(d.interpretations.begin(), d.interpretations.end());
    return d;
}

std::optional<std::int64_t> glaisher_modulus(std::string_view name)
{
    constexpr std::string_view prefix_text = "glaisher-";
    if (name.substr(0, prefix_text.size()) != prefix_text) {
        return std::nullopt;
    }
    const auto digits = name.substr(prefix_text.size());
    if (digits.empty() || digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        return std::nullopt;
    }
    const auto m = std::stoll(std::string(digits));
    if (m < 2) {
        return std::nullopt;
    }
    return m;
}

VerificationReport verify_euler_forms(std::size_t order)
{
    return timed(row("glaisher-2", Mode::analytic, "euler forms", static_cast<std::int64_t>(order)), [&](auto &r) {
        const auto product = product_side(ResidueClass::not_divisible_by(2), order);
        const auto staircase = sum_side_standard([](std::int64_t n) { return n * (n + 1) / 2; },
                                                 [](std::int64_t n) { return n; }, order);
        if (compare_series(r, product, "odd parts product", staircase, "sum q^{n(n+1)/2}/(q)_n")
            && compare_series(r, product, "odd parts product", euler_product_sum(order),
                              "sum q^n (-q)_{n-1}")) {
            r.detail = "three expressions agree";
        }
    });
}

VerificationReport verify_glaisher_bijection(std::int64_t m, std::int64_t max_weight)
{
    const std::string name = "glaisher-" + std::to_string(m);
    return timed(row(name, Mode::bijection, "glaisher map", max_weight), [&](auto &r) {
        const std::function<Partition(const Partition &)> forward = [m](const Partition &p) {
            return glaisher_forward(p, m);
        };
        const std::function<Partition(const Partition &)> inverse = [m](const Partition &p) {
            return glaisher_inverse(p, m);
        };
        const std::function<bool(const Partition &)> in_target = [m](const Partition &p) {
            return no_part_divisible(p, m);
        };
        const std::function<std::string(const Partition &)> show = [](const Partition &p) { return p.to_string(); };
        std::size_t total = 0;
        for (std::int64_t n = 0; n <= max_weight; ++n) {
            std::vector<Partition> domain;
            std::vector<Partition> target;
            for (auto &p : enumerate_partitions(n)) {
                if (repetition_bounded(p, m)) {
                    domain.push_back(p);
                }
                if (no_part_divisible(p, m)) {
                    target.push_back(std::move(p));
                }
            }
            const auto cert = certify_bijection(domain, forward, inverse, in_target, show, &target);
            if (!cert.passed()) {
                r.outcome = Outcome::mismatch;
                r.mismatch = Mismatch{n, "target size", Integer(target.size()), "image size",
                                      Integer(cert.image_size)};
                r.detail = *cert.failure;
                return;
            }
            total += domain.size();
        }
        r.detail = std::to_string(total) + " partitions certified";
    });
}

VerificationReport verify_conjugate_chain(std::int64_t m, std::int64_t max_weight)
{
    const std::string name = "glaisher-" + std::to_string(m);
    return timed(row(name, Mode::conjugate_chain, "conjugate chain", max_weight), [&](auto &r) {
        std::size_t total = 0;
        for (std::int64_t n = 0; n <= max_weight; ++n) {
            std::set<Vector> conjugates;
            for (const auto &p : enumerate_partitions(n)) {
                if (repetition_bounded(p, m)) {
                    conjugates.insert(conjugate(p).parts());
                }
            }
            // The empty partition is the single n = 0 term of the chain family.
            std::set<Vector> chains;
            if (n == 0) {
                chains.insert(Vector{});
            }
            for (std::int64_t slots = 1; slots <= n; ++slots) {
                for (auto &v : enumerate_chain(bounded_repetition_conjugate_chain(m, slots), n)) {
                    chains.insert(std::move(v));
                }
            }
            if (conjugates != chains) {
                r.outcome = Outcome::mismatch;
                r.mismatch = Mismatch{n, "conjugates", Integer(conjugates.size()), "chain vectors",
                                      Integer(chains.size())};
                std::vector<Vector> only;
                std::set_symmetric_difference(conjugates.begin(), conjugates.end(), chains.begin(), chains.end(),
                                              std::back_inserter(only));
                if (!only.empty()) {
                    r.detail = "first difference " + vector_to_string(only.front());
                }
                return;
            }
            total += chains.size();
        }
        r.detail = std::to_string(total) + " vectors matched";
    });
}

VerificationReport verify_alpha(std::int64_t m, std::int64_t terms, std::size_t order)
{
    const std::string name = "glaisher-" + std::to_string(m);
    return timed(row(name, Mode::alpha_recurrence, "alpha_0..alpha_" + std::to_string(terms),
                  static_cast<std::int64_t>(order)),
                 [&](auto &r) {
                     const auto recurrence = alpha_sequence(m, terms + 1, order);
                     for (std::int64_t n = 0; n <= terms; ++n) {
                         const auto closed = alpha_closed_form(m, n, order);
                         const auto label = "alpha_" + std::to_string(n);
                         if (!compare_series(r, closed, label + " closed form", recurrence[n],
                                             label + " recurrence")) {
                             return;
                         }
                     }
                 });
}

std::vector<VerificationReport> glaisher_checks(std::int64_t m, std::size_t order, std::int64_t max_weight,
                                                std::int64_t alpha_terms)
{
    std::vector<VerificationReport> out;
    out.push_back(verify_analytic(glaisher_identity(m), order));
    if (m == 2) {
        out.push_back(verify_euler_forms(order));
    }
    out.push_back(verify_glaisher_bijection(m, max_weight));
    out.push_back(verify_conjugate_chain(m, max_weight));
    out.push_back(verify_alpha(m, alpha_terms, order));
    return out;
}

} // namespace

TruncatedSeries sum_series(const IdentityDescriptor &d, std::size_t order)
{
    if (const auto *g = std::get_if<GlaisherSum>(&d.sum)) {
        return sum_side_glaisher(g->modulus, order);
    }
    TruncatedSeries total(order);
    for (const auto &b : std::get<StandardSum>(d.sum).branches) {
        total += sum_side_standard([&](std::int64_t n) { return b.total.evaluate({n, 0}); },
                                   [&](std::int64_t n) { return b.slots.evaluate({n, 0}); }, order,
                                   SumOptions{.first_index = b.first_index});
    }
    return total;
}

std::vector<IdentityDescriptor> catalog_identities(const Catalog &catalog)
{
    std::map<std::string, std::vector<const CatalogEntry *>> groups;
    for (const auto &e : catalog.entries()) {
        groups[e.identity].push_back(&e);
    }
    std::vector<IdentityDescriptor> out;
    for (const auto &[name, group] : groups) {
        out.push_back(descriptor_from_group(name, group));
    }
    return out;
}

IdentityDescriptor glaisher_identity(std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
    return IdentityDescriptor{"glaisher-" + std::to_string(modulus), ResidueClass::not_divisible_by(modulus),
                              GlaisherSum{modulus}, {}};
}

IdentityDescriptor resolve_identity(const Catalog &catalog, std::string_view name)
{
    if (auto m = glaisher_modulus(name)) {
        return glaisher_identity(*m);
    }
    for (auto &d : catalog_identities(catalog)) {
        if (d.name == name) {
            return d;
        }
    }
    throw LookupError("unknown identity '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode)
{
    switch (mode) {
    case Mode::lookup: return "lookup";
    case Mode::analytic: return "analytic";
    case Mode::combinatorial: return "combinatorial";
    case Mode::equinumerosity: return "equinumerosity";
    case Mode::bijection: return "bijection";
    case Mode::conjugate_chain: return "conjugate-chain";
    case Mode::alpha_recurrence: return "alpha-recurrence";
    }
    return "?";
}

std::string_view to_string(Outcome outcome)
{
    switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::mismatch: return "MISMATCH";
    case Outcome::error: return "ERROR";
    case Outcome::skipped: return "skipped";
    }
    return "?";
}

VerificationReport verify_analytic(const IdentityDescriptor &d, std::size_t order)
{
    return timed(row(d.name, Mode::analytic, "product = sum", static_cast<std::int64_t>(order)), [&](auto &r) {
        if (!d.product) {
            r.outcome = Outcome::skipped;
            r.detail = "no product side";
            return;
        }
        compare_series(r, product_side(*d.product, order), "product " + d.product->to_string(),
                       sum_series(d, order), "sum side");
    });
}

VerificationReport verify_combinatorial(const IdentityDescriptor &d, const Catalog &catalog,
                                        std::string_view profile, std::int64_t max_weight)
{
    return timed(row(d.name, Mode::combinatorial, std::string(profile), max_weight), [&](auto &r) {
        if (max_weight < 0) {
            throw std::invalid_argument("max weight must be nonnegative");
        }
        const auto &entry = catalog.lookup(profile);
        const auto counts = widen(profile_counts(entry.profile, max_weight));
        const auto label = std::string(profile) + " chain count";
        const auto order = static_cast<std::size_t>(max_weight + 1);
        if (!compare_counts(r, prefix(sum_series(d, order), max_weight), "sum side", counts, label)) {
            return;
        }
        if (d.product) {
            compare_counts(r, prefix(product_side(*d.product, order), max_weight),
                           "product " + d.product->to_string(), counts, label);
        }
    });
}

VerificationReport verify_equinumerosity(const std::string &identity, const std::vector<ProfileFamily> &profiles,
                                         const std::optional<ResidueClass> &product, std::int64_t max_weight)
{
    std::string subject;
    for (const auto &p : profiles) {
        subject += (subject.empty() ? "" : ",") + p.name;
    }
    if (product) {
        subject += ",product";
    }
    return timed(row(identity, Mode::equinumerosity, subject, max_weight), [&](auto &r) {
        if (profiles.empty()) {
            throw std::invalid_argument("no profiles to compare");
        }
        const auto reference = widen(profile_counts(profiles.front(), max_weight));
        const auto reference_label = profiles.front().name + " chain count";
        for (std::size_t i = 1; i < profiles.size(); ++i) {
            if (!compare_counts(r, reference, reference_label, widen(profile_counts(profiles[i], max_weight)),
                                profiles[i].name + " chain count")) {
                return;
            }
        }
        if (product) {
            compare_counts(r, reference, reference_label, product_counts(*product, max_weight),
                           "partitions into " + product->to_string());
        }
    });
}

std::vector<VerificationReport> verify_glaisher_family(std::int64_t max_modulus, std::size_t order,
                                                       std::int64_t max_weight, std::int64_t alpha_terms)
{
    std::vector<VerificationReport> out;
    for (std::int64_t m = 2; m <= max_modulus; ++m) {
        auto rows = glaisher_checks(m, order, max_weight, alpha_terms);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<VerificationReport> run_suite(const Catalog &catalog, const std::vector<std::string> &names,
                                          const SuiteOptions &options)
{
    const auto identities = catalog_identities(catalog);
    std::vector<std::string> wanted;
    for (const auto &name : names) {
        if (name == "all") {
            for (const auto &d : identities) {
                wanted.push_back(d.name);
            }
            for (std::int64_t m = 2; m <= options.glaisher_max_modulus; ++m) {
                wanted.push_back("glaisher-" + std::to_string(m));
            }
        } else {
            wanted.push_back(name);
        }
    }
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::vector<VerificationReport> out;
    for (const auto &name : wanted) {
        if (auto m = glaisher_modulus(name)) {
            auto rows = glaisher_checks(*m, options.order, options.max_weight, 25);
            out.insert(out.end(), rows.begin(), rows.end());
            continue;
        }
        auto found = std::find_if(identities.begin(), identities.end(),
                                  [&](const IdentityDescriptor &d) { return d.name == name; });
        if (found == identities.end()) {
            auto r = row(name, Mode::lookup, "-", 0);
            r.outcome = Outcome::error;
            r.detail = "unknown identity";
            out.push_back(std::move(r));
            continue;
        }
        const auto &d = *found;
        out.push_back(verify_analytic(d, options.order));
        std::vector<ProfileFamily> profiles;
        for (const auto &p : d.interpretations) {
            out.push_back(verify_combinatorial(d, catalog, p, options.max_weight));
            profiles.push_back(catalog.lookup(p).profile);
        }
        if (!profiles.empty()) {
            out.push_back(verify_equinumerosity(d.name, profiles, d.product, options.max_weight));
        }
    }
    return out;
}

bool all_passed(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const VerificationReport &r) {
        return r.outcome == Outcome::pass || r.outcome == Outcome::skipped;
    });
}

} // namespace rrid
