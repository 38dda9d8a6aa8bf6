#pragma once

// Verification pipelines for identities
//
//   prod_{k in residues mod M} 1/(1 - q^k) = sum_n q^{S(n)}/(q)_{u(n)}
//
// and Glaisher's family. The analytic check compares two series built by
// the series algebra; the combinatorial and equinumerosity checks count
// chain vectors and product-side partitions by exhaustive enumeration. The
// enumeration code (rrid_partition) and the series code (rrid_series) are
// separate libraries that do not link each other, so a pass in both modes is
// an agreement between two independent counts.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rrid/catalog.hpp"
#include "rrid/series.hpp"

namespace rrid {

struct SumBranch {
    std::int64_t first_index = 0;
    Expr total;  // S(n)
    Expr slots;  // u(n)
};

/// sum over branches of sum_{n >= first_index} q^{S(n)}/(q)_{u(n)}.
struct StandardSum {
    std::vector<SumBranch> branches;
};

/// 1 + sum_{n>=1} (q^n - q^{nM}) (q^M;q^M)_{n-1}/(q)_n.
struct GlaisherSum {
    std::int64_t modulus = 2;
};

using SumSide = std::variant<StandardSum, GlaisherSum>;

struct IdentityDescriptor {
    std::string name;
    std::optional<ResidueClass> product;
    SumSide sum;
    /// Catalog profile names interpreting the sum side.
    std::vector<std::string> interpretations;
};

TruncatedSeries sum_series(const IdentityDescriptor &d, std::size_t order);

/// Identities formed by grouping catalog entries on their identity field,
/// sorted by name. Throws CatalogError if members of a group disagree on
/// the product side or on (S, u) for n <= 12.
std::vector<IdentityDescriptor> catalog_identities(const Catalog &catalog);

/// Parts not divisible by M against the Glaisher sum side. Named "glaisher-M".
IdentityDescriptor glaisher_identity(std::int64_t modulus);

/// A catalog identity name or "glaisher-M". Throws LookupError.
IdentityDescriptor resolve_identity(const Catalog &catalog, std::string_view name);

enum class Mode { lookup, analytic, combinatorial, equinumerosity, bijection, conjugate_chain, alpha_recurrence };
enum class Outcome { pass, mismatch, error, skipped };

std::string_view to_string(Mode mode);
std::string_view to_string(Outcome outcome);

struct Mismatch {
    std::int64_t exponent = 0;
    std::string expected_label;
    Integer expected;
    std::string actual_label;
    Integer actual;
};

struct VerificationReport {
    std::string identity;
    Mode mode = Mode::analytic;
    /// What was checked within the identity, e.g. a profile name.
    std::string subject;
    /// Series order or maximum weight, depending on the mode.
    std::int64_t bound = 0;
    Outcome outcome = Outcome::pass;
    std::optional<Mismatch> mismatch;
    std::string detail;
    std::chrono::nanoseconds wall_time{0};

    bool passed() const { return outcome == Outcome::pass; }
};

/// Product side against sum side up to the given order. Skipped when the
/// identity has no product side.
VerificationReport verify_analytic(const IdentityDescriptor &d, std::size_t order);

/// Chain-vector counts of one interpretation against the sum side and the
/// product side series, for every weight <= max_weight.
VerificationReport verify_combinatorial(const IdentityDescriptor &d, const Catalog &catalog,
                                        std::string_view profile, std::int64_t max_weight);

/// Chain-vector counts of every profile against each other and against the
/// number of product-side partitions, all by enumeration.
VerificationReport verify_equinumerosity(const std::string &identity, const std::vector<ProfileFamily> &profiles,
                                         const std::optional<ResidueClass> &product, std::int64_t max_weight);

/// For each M in 2..max_modulus: analytic check (plus Euler's other two
/// expressions at M = 2), bijection certification of Glaisher's map on
/// weights <= max_weight, the conjugate-chain characterization, and the
/// alpha_n recurrence against its closed form for n <= alpha_terms.
std::vector<VerificationReport> verify_glaisher_family(std::int64_t max_modulus, std::size_t order,
                                                       std::int64_t max_weight, std::int64_t alpha_terms = 25);

struct SuiteOptions {
    std::size_t order = 60;
    std::int64_t max_weight = 25;
    std::int64_t glaisher_max_modulus = 6;
};

/// Runs every applicable check for each requested identity ("all" expands
/// to every catalog identity plus glaisher-2..glaisher-6). Unknown names are
/// reported as error rows, never thrown. Rows are sorted by identity name.
std::vector<VerificationReport> run_suite(const Catalog &catalog, const std::vector<std::string> &names,
                                          const SuiteOptions &options);

bool all_passed(const std::vector<VerificationReport> &reports);

/// Aligned text table. Timing is left out unless asked for, so output is
/// byte-identical across runs.
std::string render_table(const std::vector<VerificationReport> &reports, bool show_timing = false);
/// One JSON object per line.
std::string render_records(const std::vector<VerificationReport> &reports, bool show_timing = false);

} // namespace rrid
