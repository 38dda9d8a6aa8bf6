#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "rrid/verifier.hpp"

using namespace rrid;

namespace {

IdentityDescriptor rr2_with_product(ResidueClass product)
{
    auto d = resolve_identity(Catalog::builtin(), "rr2");
    d.product = std::move(product);
    return d;
}

} // namespace

TEST(Identities, GroupedFromCatalog)
{
    const auto ids = catalog_identities(Catalog::builtin());
    std::vector<std::string> names;
    for (const auto &d : ids) {
        names.push_back(d.name);
    }
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    const auto rr2 = resolve_identity(Catalog::builtin(), "rr2");
    EXPECT_EQ(rr2.interpretations, (std::vector<std::string>{"P2", "P3", "P4", "P5"}));
    EXPECT_EQ(rr2.product, ResidueClass(5, {2, 3}));
    EXPECT_THROW(resolve_identity(Catalog::builtin(), "rr9"), LookupError);
    EXPECT_THROW(resolve_identity(Catalog::builtin(), "glaisher-1"), LookupError);
    EXPECT_EQ(resolve_identity(Catalog::builtin(), "glaisher-3").product, ResidueClass(3, {1, 2}));
}

TEST(Identities, InconsistentGroupIsRejected)
{
    auto doc = nlohmann::ordered_json::parse(Catalog::builtin().to_json());
    for (auto &e : doc["entries"]) {
        if (e["name"] == "P3") {
            e["product"]["residues"] = {1, 4};
        }
    }
    EXPECT_THROW(catalog_identities(Catalog::parse(doc.dump())), CatalogError);
}

TEST(Verifier, AnalyticPassAndMismatch)
{
    const auto ok = verify_analytic(resolve_identity(Catalog::builtin(), "rr2"), 100);
    EXPECT_EQ(ok.outcome, Outcome::pass);
    EXPECT_EQ(ok.bound, 100);

    const auto bad = verify_analytic(rr2_with_product(ResidueClass(5, {1, 4})), 50);
    ASSERT_EQ(bad.outcome, Outcome::mismatch);
    EXPECT_EQ(bad.mismatch->exponent, 1);
    EXPECT_EQ(bad.mismatch->expected, 1);
    EXPECT_EQ(bad.mismatch->actual, 0);
}

TEST(Verifier, AnalyticSkipsWithoutProduct)
{
    const auto r = verify_analytic(resolve_identity(Catalog::builtin(), "hirschhorn-example"), 30);
    EXPECT_EQ(r.outcome, Outcome::skipped);
}

TEST(Verifier, CombinatorialFindsFirstBadWeight)
{
    // {2,3} mod 6 lacks the part 7, so the counts first differ at weight 7.
    const auto bad = verify_combinatorial(rr2_with_product(ResidueClass(6, {2, 3})), Catalog::builtin(), "P2", 25);
    ASSERT_EQ(bad.outcome, Outcome::mismatch);
    EXPECT_EQ(bad.mismatch->exponent, 7);
    EXPECT_EQ(verify_combinatorial(resolve_identity(Catalog::builtin(), "rr2"), Catalog::builtin(), "P3", 25).outcome,
              Outcome::pass);
}

TEST(Verifier, UnknownProfileIsAnError)
{
    const auto r = verify_combinatorial(resolve_identity(Catalog::builtin(), "rr2"), Catalog::builtin(), "P9", 10);
    EXPECT_EQ(r.outcome, Outcome::error);
}

TEST(Verifier, EquinumerosityDetectsDisagreement)
{
    const auto &c = Catalog::builtin();
    const auto ok = verify_equinumerosity("rr2", {c.lookup("P2").profile, c.lookup("P4").profile},
                                          ResidueClass(5, {2, 3}), 30);
    EXPECT_EQ(ok.outcome, Outcome::pass);
    const auto bad = verify_equinumerosity("mixed", {c.lookup("P2").profile, c.lookup("euler-staircase").profile},
                                           std::nullopt, 10);
    ASSERT_EQ(bad.outcome, Outcome::mismatch);
    EXPECT_EQ(bad.mismatch->exponent, 1);
}

TEST(Verifier, GlaisherFamily)
{
    const auto rows = verify_glaisher_family(3, 60, 15, 10);
    EXPECT_EQ(rows.size(), 9u);
    EXPECT_TRUE(all_passed(rows));
}

TEST(Verifier, SuiteReportsUnknownNamesWithoutAborting)
{
    const auto rows = run_suite(Catalog::builtin(), {"nope", "euler"}, SuiteOptions{40, 15, 6});
    ASSERT_FALSE(rows.empty());
    EXPECT_EQ(rows.back().identity, "nope");
    EXPECT_EQ(rows.back().mode, Mode::lookup);
    EXPECT_EQ(rows.back().outcome, Outcome::error);
    EXPECT_FALSE(all_passed(rows));
    EXPECT_EQ(rows.front().identity, "euler");
}

TEST(Verifier, WholeSuitePasses)
{
    const auto rows = run_suite(Catalog::builtin(), {"all"}, SuiteOptions{});
    EXPECT_TRUE(all_passed(rows)) << render_table(rows);
    EXPECT_GT(rows.size(), 50u);
}

TEST(Report, TableIsDeterministic)
{
    const auto a = run_suite(Catalog::builtin(), {"rr2"}, SuiteOptions{40, 12, 6});
    const auto b = run_suite(Catalog::builtin(), {"rr2"}, SuiteOptions{40, 12, 6});
    EXPECT_EQ(render_table(a), render_table(b));
    EXPECT_EQ(render_records(a), render_records(b));
    EXPECT_EQ(render_table(a).substr(0, 8), "identity");
}

TEST(Report, RecordsRoundTrip)
{
    auto rows = run_suite(Catalog::builtin(), {"rr2", "missing"}, SuiteOptions{40, 12, 6});
    rows.push_back(verify_analytic(rr2_with_product(ResidueClass(5, {1, 4})), 20));
    const auto text = render_records(rows);
    std::istringstream lines(text);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto parsed = nlohmann::ordered_json::parse(line);
        EXPECT_EQ(parsed.dump(), line);
        ++count;
    }
    EXPECT_EQ(count, rows.size());
    EXPECT_NE(text.find("\"expected\":\"1\""), std::string::npos);
}

TEST(Report, MismatchIsDescribed)
{
    const auto r = verify_analytic(rr2_with_product(ResidueClass(5, {1, 4})), 20);
    EXPECT_NE(render_table({r}).find("q^1: product {1,4} mod 5 1, sum side 0"), std::string::npos);
}
