#include "cli.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrid/bijection.hpp"
#include "rrid/catalog.hpp"
#include "rrid/verifier.hpp"

namespace rrid {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::size_t order = 60;
    std::int64_t max_weight = 25;
    std::optional<std::int64_t> modulus;
    std::vector<std::int64_t> residues;
    std::string format = "text";
    std::string catalog_path;

    bool machine() const { return format == "machine"; }
};

class BadFlags : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const Catalog &load_catalog(const Config &config)
{
    if (config.catalog_path.empty()) {
        return Catalog::builtin();
    }
    static std::optional<Catalog> loaded;
    loaded = Catalog::load_file(config.catalog_path);
    return *loaded;
}

std::int64_t require_modulus(const Config &config)
{
    if (!config.modulus) {
        throw BadFlags("--modulus is required");
    }
    return *config.modulus;
}

Vector vector_argument(const std::string &text)
{
    try {
        return parse_vector(text);
    } catch (const std::invalid_argument &e) {
        throw BadFlags(e.what());
    }
}

// Rejects malformed partitions before any map sees them, pointing at the slot.
Partition partition_argument(const std::string &text)
{
    const auto v = vector_argument(text);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) {
            throw DomainViolation("part " + std::to_string(v[i]) + " is not positive", i);
        }
        if (i > 0 && v[i] > v[i - 1]) {
            throw DomainViolation("parts are not weakly decreasing", i);
        }
    }
    return Partition(v);
}

// "(7, 3, 3, 2, 2, 1)", trailing zeros dropped.
std::string tuple_string(const Vector &v)
{
    auto end = v.end();
    while (end != v.begin() && *(end - 1) == 0) {
        --end;
    }
    std::string text = "(";
    for (auto it = v.begin(); it != end; ++it) {
        text += (it == v.begin() ? "" : ", ") + std::to_string(*it);
    }
    return text + ")";
}

std::string aligned(const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::size_t> width;
    for (const auto &row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) {
                line += std::string(width[i] - row[i].size() + 2, ' ');
            }
        }
        out += line + "\n";
    }
    return out;
}

int cmd_verify(const Config &config, std::vector<std::string> names, bool timing, std::ostream &out)
{
    for (auto &name : names) {
        if (name == "glaisher") {
            name = "glaisher-" + std::to_string(require_modulus(config));
        }
    }
    SuiteOptions options;
    options.order = config.order;
    options.max_weight = config.max_weight;
    const auto reports = run_suite(load_catalog(config), names, options);
    if (config.machine()) {
        out << render_records(reports, timing);
    } else {
        out << render_table(reports, timing);
    }
    std::size_t failed = 0;
    bool unknown = false;
    for (const auto &r : reports) {
        failed += (r.outcome == Outcome::mismatch || r.outcome == Outcome::error) ? 1 : 0;
        unknown = unknown || r.mode == Mode::lookup;
    }
    if (!config.machine()) {
        out << reports.size() << " checks, " << failed << " failed\n";
    }
    if (unknown) {
        return exit_unknown_name;
    }
    return failed == 0 ? exit_ok : exit_mismatch;
}

int cmd_enumerate(const Config &config, const std::string &profile, std::int64_t n, std::int64_t weight,
                  std::size_t branch, std::ostream &out)
{
    const auto &entry = load_catalog(config).lookup(profile);
    const auto chain = profile_to_chain(entry.profile, TermIndex{branch, n});
    for (const auto &v : enumerate_chain(chain, weight)) {
        out << (config.machine() ? vector_to_string(v) : tuple_string(v)) << "\n";
    }
    return exit_ok;
}

int cmd_bijection(const Config &config, const std::string &map, const std::string &input, const std::string &from,
                  const std::string &to, std::optional<std::int64_t> n, std::size_t branch, std::ostream &out)
{
    Json record;
    record["map"] = map;
    std::vector<std::pair<std::string, std::string>> lines;
    auto emit = [&](const std::string &key, const Vector &v) {
        record[key] = v;
        lines.emplace_back(key, vector_to_string(v));
    };
    if (map == "profile") {
        if (from.empty() || to.empty() || !n) {
            throw BadFlags("the profile map needs --from, --to and --n");
        }
        const auto &catalog = load_catalog(config);
        const auto a = vector_argument(input);
        const auto b = profile_bijection(a, catalog.lookup(from).profile, catalog.lookup(to).profile,
                                         TermIndex{branch, *n});
        record["from"] = from;
        record["to"] = to;
        record["n"] = *n;
        emit("a", a);
        emit("b", b);
    } else if (map == "rr2") {
        const auto image = rr2_forward(partition_argument(input));
        const auto &r = image.record;
        emit("a", r.input);
        emit("q", image.quotients);
        emit("c", image.c);
        emit("b", image.b);
        const bool holds = weight_relation_check(r);
        record["N_a"] = r.input_weight;
        record["N_b"] = r.output_weight;
        record["n"] = r.n;
        record["weight_relation"] = holds;
        lines.emplace_back("weight", "N_a=" + std::to_string(r.input_weight) + " N_b=" + std::to_string(r.output_weight)
                                         + " n=" + std::to_string(r.n) + " N_b = N_a + n^2 - sum(3q_s + 1): "
                                         + (holds ? "holds" : "FAILS"));
    } else if (map == "rr2-inv") {
        const auto b = vector_argument(input);
        const auto pre = rr2_inverse_detailed(b);
        emit("b", b);
        emit("k", pre.k);
        emit("a", pre.a.parts());
    } else if (map == "glaisher" || map == "glaisher-inv") {
        const auto m = require_modulus(config);
        const bool forward = map == "glaisher";
        Partition current = partition_argument(input);
        Json steps = Json::array();
        lines.emplace_back("input", current.to_string());
        for (int step = 1;; ++step) {
            const bool done = forward ? no_part_divisible(current, m) : repetition_bounded(current, m);
            if (done) {
                break;
            }
            current = forward ? glaisher_forward_step(current, m) : glaisher_inverse_step(current, m);
            steps.push_back(current.parts());
            lines.emplace_back("step " + std::to_string(step), current.to_string());
        }
        record["modulus"] = m;
        record["input"] = partition_argument(input).parts();
        record["steps"] = std::move(steps);
        record["output"] = current.parts();
        lines.emplace_back("output", current.to_string());
    } else {
        throw LookupError("unknown map '" + map + "'");
    }
    if (config.machine()) {
        out << record.dump() << "\n";
    } else {
        for (const auto &[key, value] : lines) {
            out << key << (key.size() == 1 ? "=" : ": ") << value << "\n";
        }
    }
    return exit_ok;
}

std::string sum_summary(const ProfileFamily &f)
{
    std::string text;
    for (const auto &b : f.branches) {
        if (!text.empty()) {
            text += "; ";
        }
        if (b.parity != ProfileBranch::Parity::any) {
            text += to_string(b.parity) + " ";
        }
        text += "n>=" + std::to_string(b.first_index) + " S=" + b.total.to_string() + " u=" + b.slots.to_string();
    }
    return text;
}

int cmd_catalog(const Config &config, bool dump, std::ostream &out)
{
    const auto &catalog = load_catalog(config);
    if (dump) {
        out << catalog.to_json();
        return exit_ok;
    }
    if (config.machine()) {
        for (const auto &e : catalog.entries()) {
            Json record;
            record["name"] = e.name();
            record["identity"] = e.identity;
            record["product"] = e.product ? Json(e.product->to_string()) : Json(nullptr);
            record["sum"] = sum_summary(e.profile);
            record["citation"] = e.citation;
            out << record.dump() << "\n";
        }
        return exit_ok;
    }
    std::vector<std::vector<std::string>> rows{{"name", "identity", "product", "sum side", "citation"}};
    for (const auto &e : catalog.entries()) {
        rows.push_back({e.name(), e.identity, e.product ? e.product->to_string() : "-", sum_summary(e.profile),
                        e.citation});
    }
    out << aligned(rows);
    out << catalog.entries().size() << " entries\n";
    return exit_ok;
}

int cmd_series(const Config &config, const std::string &name, const std::string &identity,
               const std::string &profile, std::optional<std::int64_t> n, std::ostream &out)
{
    const auto order = config.order;
    std::optional<TruncatedSeries> series;
    if (name == "product") {
        if (config.residues.empty()) {
            throw BadFlags("--residues is required");
        }
        series = product_side(ResidueClass(require_modulus(config), config.residues), order);
    } else if (name == "glaisher-sum") {
        series = sum_side_glaisher(require_modulus(config), order);
    } else if (name == "euler-sum") {
        series = euler_product_sum(order);
    } else if (name == "alpha") {
        if (!n) {
            throw BadFlags("--n is required");
        }
        series = alpha_closed_form(require_modulus(config), *n, order);
    } else if (name == "sum") {
        if (identity.empty()) {
            throw BadFlags("--identity is required");
        }
        series = sum_series(resolve_identity(load_catalog(config), identity), order);
    } else if (name == "profile") {
        if (profile.empty()) {
            throw BadFlags("--profile is required");
        }
        series = profile_series(load_catalog(config).lookup(profile).profile, order);
    } else {
        throw LookupError("unknown series '" + name + "'");
    }
    if (config.machine()) {
        out << series->to_list() << "\n";
    } else {
        for (std::size_t e = 0; e < series->order(); ++e) {
            out << e << ":" << (*series)[e] << "\n";
        }
    }
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Check partition identities of Rogers-Ramanujan type", "rrid"};
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    app.add_option("--order", config.order, "Series order (exponents below it are compared)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-weight", config.max_weight, "Largest partition weight enumerated")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--modulus", config.modulus, "Modulus M")->check(CLI::Range(std::int64_t{2}, INT64_MAX));
    app.add_option("--residues", config.residues, "Residues mod M, comma separated")->delimiter(',');
    app.add_option("--format", config.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--catalog", config.catalog_path, "Catalog JSON file")->envname("RRID_CATALOG");

    auto *verify = app.add_subcommand("verify", "Verify identities: a catalog identity, glaisher, or all");
    std::vector<std::string> verify_names;
    bool timing = false;
    verify->add_option("identity", verify_names, "Identity names")->required();
    verify->add_flag("--timing", timing, "Include wall time");

    auto *enumerate = app.add_subcommand("enumerate", "List the chain vectors of one profile term");
    std::string enum_profile;
    std::int64_t enum_n = 0;
    std::int64_t enum_weight = 0;
    std::size_t branch = 0;
    enumerate->add_option("profile", enum_profile)->required();
    enumerate->add_option("n", enum_n)->required();
    enumerate->add_option("weight", enum_weight)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--branch", branch, "Branch index of the profile");

    auto *bijection = app.add_subcommand("bijection", "Apply profile, rr2, rr2-inv, glaisher or glaisher-inv");
    std::string map_name;
    std::string map_input;
    std::string from;
    std::string to;
    std::optional<std::int64_t> term_n;
    bijection->add_option("map", map_name)->required();
    bijection->add_option("input", map_input, "Bracketed list, e.g. [7,6,4,2,1]")->required();
    bijection->add_option("--from", from, "Source profile");
    bijection->add_option("--to", to, "Target profile");
    bijection->add_option("--n", term_n, "Term index n");
    bijection->add_option("--branch", branch, "Branch index");

    auto *catalog = app.add_subcommand("catalog", "List catalog entries");
    bool dump = false;
    catalog->add_flag("--dump", dump, "Print the catalog as canonical JSON");

    auto *series = app.add_subcommand("series", "Print coefficients of product, glaisher-sum, euler-sum, alpha, "
                                                "sum or profile");
    std::string series_name;
    std::string series_identity;
    std::string series_profile;
    series->add_option("name", series_name)->required();
    series->add_option("--identity", series_identity, "Identity for 'sum'");
    series->add_option("--profile", series_profile, "Profile for 'profile'");
    series->add_option("--n", term_n, "Index for 'alpha'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return exit_bad_flags;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(config, verify_names, timing, out);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(config, enum_profile, enum_n, enum_weight, branch, out);
        }
        if (bijection->parsed()) {
            return cmd_bijection(config, map_name, map_input, from, to, term_n, branch, out);
        }
        if (catalog->parsed()) {
            return cmd_catalog(config, dump, out);
        }
        return cmd_series(config, series_name, series_identity, series_profile, term_n, out);
    } catch (const DomainViolation &e) {
        err << "domain violation: " << e.what();
        if (e.position()) {
            err << " (position " << *e.position() + 1 << ")";
        }
        err << "\n";
        return exit_domain;
    } catch (const std::domain_error &e) {
        err << "domain violation: " << e.what() << "\n";
        return exit_domain;
    } catch (const LookupError &e) {
        err << e.what() << "\n";
        return exit_unknown_name;
    } catch (const CatalogError &e) {
        err << "catalog error: " << e.what() << "\n";
        return exit_catalog;
    } catch (const std::invalid_argument &e) {
        err << "bad arguments: " << e.what() << "\n";
        return exit_bad_flags;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
}

} // namespace rrid
