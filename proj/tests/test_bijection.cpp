#include <map>
#include <set>

#include <gtest/gtest.h>

#include "rrid/bijection.hpp"
#include "rrid/catalog.hpp"

using namespace rrid;

namespace {

// Splits only the smallest part divisible by M, one part per step.
Partition split_one_at_a_time(Partition p, std::int64_t m)
{
    while (true) {
        Vector parts = p.parts();
        auto it = std::find_if(parts.rbegin(), parts.rend(), [m](std::int64_t x) { return x % m == 0; });
        if (it == parts.rend()) {
            return p;
        }
        const auto value = *it;
        parts.erase(std::next(it).base());
        parts.insert(parts.end(), static_cast<std::size_t>(m), value / m);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        p = Partition(parts);
    }
}

// Merges one group of M equal parts per step, largest value first.
Partition merge_one_at_a_time(Partition p, std::int64_t m)
{
    while (true) {
        std::map<std::int64_t, std::int64_t, std::greater<>> mult;
        for (auto x : p.parts()) {
            ++mult[x];
        }
        auto it = std::find_if(mult.begin(), mult.end(), [m](const auto &kv) { return kv.second >= m; });
        if (it == mult.end()) {
            return p;
        }
        Vector parts = p.parts();
        for (std::int64_t k = 0; k < m; ++k) {
            parts.erase(std::find(parts.begin(), parts.end(), it->first));
        }
        parts.push_back(it->first * m);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        p = Partition(parts);
    }
}

std::vector<Partition> rr2_domain(std::int64_t max_weight)
{
    std::vector<Partition> out;
    for (std::int64_t w = 1; w <= max_weight; ++w) {
        for (auto &p : enumerate_partitions_with_parts(ResidueClass(5, {2, 3}), w)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace

TEST(Rr2, WorkedValues)
{
    const auto image = rr2_forward(Partition({3, 2}));
    EXPECT_EQ(image.c, (Vector{6, 1}));
    EXPECT_EQ(image.b, (Vector{5, 2}));
    EXPECT_EQ(image.record.output_weight, 7);
    EXPECT_TRUE(weight_relation_check(image.record));
    EXPECT_EQ(rr2_inverse(Vector{5, 2}), Partition({3, 2}));
}

TEST(Rr2, OffsetVectors)
{
    EXPECT_EQ(rr2_single_gap_offsets(3), (Vector{10, 1, 1}));
    EXPECT_EQ(rr2_classical_offsets(3), (Vector{6, 4, 2}));
    EXPECT_EQ(rr2_classical_chain(3).to_string(), "a1 >=_2 a2 >=_2 a3 >=_2 0");
    EXPECT_EQ(rr2_single_gap_chain(3).to_string(), "a1 >=_9 a2 >=_0 a3 >=_1 0");
}

TEST(Rr2, DomainViolations)
{
    try {
        rr2_forward(Partition({7, 5, 2}));
        FAIL() << "expected a domain violation";
    } catch (const DomainViolation &e) {
        EXPECT_EQ(e.position(), std::optional<std::size_t>(1));
    }
    EXPECT_THROW(rr2_forward(Partition()), DomainViolation);
    try {
        rr2_inverse(Vector{5, 4});
        FAIL() << "expected a domain violation";
    } catch (const DomainViolation &e) {
        EXPECT_EQ(e.position(), std::optional<std::size_t>(0));
    }
    EXPECT_THROW(rr2_inverse(Vector{}), DomainViolation);
}

TEST(Rr2, FirstStepLandsInSingleGapChain)
{
    for (const auto &a : rr2_domain(25)) {
        const auto c = rr2_step_c(a);
        EXPECT_TRUE(satisfies_chain(c, rr2_single_gap_chain(a.size()))) << a.to_string();
    }
}

TEST(Rr2, PartMapIsMonotone)
{
    // x -> x - 3 floor(x/5) - 1 on x = 2, 3 mod 5 is strictly increasing and
    // hits every positive integer exactly once.
    std::vector<std::int64_t> values;
    for (std::int64_t x = 1; x <= 200; ++x) {
        if (x % 5 == 2 || x % 5 == 3) {
            values.push_back(x - 3 * (x / 5) - 1);
        }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        EXPECT_EQ(values[i], static_cast<std::int64_t>(i + 1));
    }
}

TEST(Rr2, RoundTripAndWeightRelation)
{
    std::set<Vector> images;
    for (const auto &a : rr2_domain(22)) {
        const auto image = rr2_forward(a);
        ASSERT_TRUE(satisfies_chain(image.b, rr2_classical_chain(a.size()))) << a.to_string();
        const auto pre = rr2_inverse_detailed(image.b);
        EXPECT_EQ(pre.a, a);
        EXPECT_EQ(pre.k, image.quotients);
        EXPECT_TRUE(weight_relation_check(image.record));
        EXPECT_TRUE(images.insert(image.b).second);
    }
}

TEST(Rr2, WeightRelationDetectsTampering)
{
    auto record = rr2_forward(Partition({8, 3})).record;
    record.output_weight += 1;
    EXPECT_FALSE(weight_relation_check(record));
}

TEST(Glaisher, WorkedExampleSteps)
{
    const Partition lambda({7, 6, 4, 2, 1});
    const auto step1 = glaisher_forward_step(lambda, 2);
    EXPECT_EQ(step1.to_string(), "[7,3,3,2,2,1,1,1]");
    const auto step2 = glaisher_forward_step(step1, 2);
    EXPECT_EQ(step2.to_string(), "[7,3,3,1,1,1,1,1,1,1]");
    EXPECT_EQ(glaisher_forward(lambda, 2), step2);

    const auto back1 = glaisher_inverse_step(step2, 2);
    EXPECT_EQ(back1.to_string(), "[7,6,2,2,2,1]");
    EXPECT_EQ(glaisher_inverse_step(back1, 2), lambda);
    EXPECT_EQ(glaisher_inverse(step2, 2), lambda);
}

TEST(Glaisher, ResultDoesNotDependOnSplittingOrder)
{
    for (std::int64_t m = 2; m <= 5; ++m) {
        for (std::int64_t n = 0; n <= 18; ++n) {
            for (const auto &p : enumerate_partitions(n)) {
                EXPECT_EQ(glaisher_forward(p, m), split_one_at_a_time(p, m)) << p.to_string();
                EXPECT_EQ(glaisher_inverse(p, m), merge_one_at_a_time(p, m)) << p.to_string();
            }
        }
    }
}

TEST(Glaisher, BadModulus)
{
    EXPECT_THROW(glaisher_forward_step(Partition({2}), 1), std::invalid_argument);
}

TEST(ProfileMap, SwapsOffsets)
{
    const auto &c = Catalog::builtin();
    const auto &p2 = c.lookup("P2").profile;
    const auto &p5 = c.lookup("P5").profile;
    for (std::int64_t n = 1; n <= 4; ++n) {
        const TermIndex term{0, n};
        const auto from = profile_to_chain(p2, term);
        const auto to = profile_to_chain(p5, term);
        for (std::int64_t w = 0; w <= 30; ++w) {
            const auto source = enumerate_chain(from, w);
            std::set<Vector> image;
            for (const auto &a : source) {
                const auto b = profile_bijection(a, p2, p5, term);
                EXPECT_TRUE(satisfies_chain(b, to));
                EXPECT_EQ(profile_bijection(b, p5, p2, term), a);
                image.insert(b);
            }
            EXPECT_EQ(image.size(), enumerate_chain(to, w).size());
        }
    }
}

TEST(ProfileMap, RejectsInputsOutsideTheChain)
{
    const auto &c = Catalog::builtin();
    const auto &hirsch = c.lookup("example-hirschhorn").profile;
    const auto &exact = c.lookup("example-exact").profile;
    const Vector a{7, 3, 3, 2, 2, 1};
    EXPECT_EQ(profile_bijection(a, hirsch, exact, {0, 3}), (Vector{13, 1, 1, 1, 1, 1}));
    try {
        profile_bijection(Vector{7, 7, 3, 2, 2, 1}, hirsch, exact, {0, 3});
        FAIL() << "expected a domain violation";
    } catch (const DomainViolation &e) {
        EXPECT_EQ(e.position(), std::optional<std::size_t>(0));
    }
    EXPECT_THROW(profile_bijection(Vector{1, 1}, hirsch, exact, {0, 3}), DomainViolation);
}

TEST(Certification, DetectsFailures)
{
    const std::vector<int> domain{1, 2, 3};
    const std::function<std::string(const int &)> show = [](const int &x) { return std::to_string(x); };
    const std::function<bool(const int &)> any = [](const int &) { return true; };
    const std::function<int(const int &)> id = [](const int &x) { return x; };
    const std::function<int(const int &)> collapse = [](const int &) { return 0; };
    EXPECT_TRUE(certify_bijection(domain, id, id, any, show).passed());
    EXPECT_FALSE(certify_bijection(domain, collapse, id, any, show).passed());
    const std::vector<int> bigger{1, 2, 3, 4};
    const auto r = certify_bijection(domain, id, id, any, show, &bigger);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(*r.failure, "target element 4 is not in the image");
}

TEST(ProfileMap, SpecExamples)
{
    const auto &c = Catalog::builtin();
    const auto &staircase = c.lookup("euler-staircase").profile;
    const auto &layers = c.lookup("euler-layers").profile;
    EXPECT_EQ(profile_bijection(Vector{7, 6, 4, 2, 1}, staircase, layers, {0, 5}), (Vector{11, 7, 2, 0, 0}));
    EXPECT_EQ(profile_bijection(Vector{7, 6, 4, 2, 1}, staircase, staircase, {0, 5}), (Vector{7, 6, 4, 2, 1}));
    EXPECT_EQ(profile_bijection(Vector{5, 1}, c.lookup("P3").profile, c.lookup("P4").profile, {0, 2}),
              (Vector{6, 0}));
}

TEST(ProfileMap, TwoSidedInverseForSharedSumSides)
{
    const auto &c = Catalog::builtin();
    const std::vector<std::vector<const char *>> groups{{"P2", "P3", "P4", "P5"},
                                                        {"euler-staircase", "euler-layers", "appendix-a"},
                                                        {"appendix-d", "appendix-l"}};
    for (const auto &group : groups) {
        for (const char *x : group) {
            for (const char *y : group) {
                const auto &fx = c.lookup(x).profile;
                const auto &fy = c.lookup(y).profile;
                for (std::size_t br = 0; br < fx.branches.size(); ++br) {
                    for (std::int64_t n = fx.branches[br].first_index; n <= 6; ++n) {
                        const TermIndex term{br, n};
                        for (std::int64_t w = 0; w <= 25; ++w) {
                            for (const auto &a : enumerate_chain(profile_to_chain(fx, term), w)) {
                                const auto b = profile_bijection(a, fx, fy, term);
                                ASSERT_TRUE(satisfies_chain(b, profile_to_chain(fy, term))) << x << "->" << y;
                                ASSERT_EQ(profile_bijection(b, fy, fx, term), a);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST(Rr2, SpecExamples)
{
    auto image = rr2_forward(Partition({2}));
    EXPECT_EQ(image.c, (Vector{2}));
    EXPECT_EQ(image.b, (Vector{2}));
    EXPECT_EQ(image.record.output_weight, 2);
    EXPECT_TRUE(weight_relation_check(image.record));
    image = rr2_forward(Partition({7}));
    EXPECT_EQ(image.quotients, (Vector{1}));
    EXPECT_EQ(image.c, (Vector{4}));
    EXPECT_EQ(image.b, (Vector{4}));
    EXPECT_TRUE(weight_relation_check(image.record));
    EXPECT_EQ(rr2_inverse(Vector{2}), Partition({2}));
    EXPECT_EQ(rr2_inverse(Vector{4}), Partition({7}));
}

TEST(Glaisher, SpecExamples)
{
    EXPECT_EQ(glaisher_forward(Partition({9, 2}), 3).to_string(), "[2,1,1,1,1,1,1,1,1,1]");
    EXPECT_EQ(glaisher_inverse(Partition({2, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 3).to_string(), "[9,2]");
}

TEST(Certification, SpecExamples)
{
    std::vector<Partition> domain;
    std::vector<Partition> target;
    for (const auto &p : enumerate_partitions(10)) {
        if (repetition_bounded(p, 2)) {
            domain.push_back(p);
        }
        if (no_part_divisible(p, 2)) {
            target.push_back(p);
        }
    }
    const std::function<Partition(const Partition &)> fwd = [](const Partition &p) { return glaisher_forward(p, 2); };
    const std::function<Partition(const Partition &)> inv = [](const Partition &p) { return glaisher_inverse(p, 2); };
    const std::function<bool(const Partition &)> odd = [](const Partition &p) { return no_part_divisible(p, 2); };
    const std::function<std::string(const Partition &)> show = [](const Partition &p) { return p.to_string(); };
    const auto r = certify_bijection(domain, fwd, inv, odd, show, &target);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.image_size, 10u);
    EXPECT_EQ(r.target_size, std::optional<std::size_t>(10));
    EXPECT_TRUE(certify_bijection(std::vector<Partition>{}, fwd, inv, odd, show).passed());
}
