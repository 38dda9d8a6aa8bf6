#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rrid/verifier.hpp"

namespace rrid {

namespace {

std::string describe(const VerificationReport &r)
{
    if (!r.mismatch) {
        return r.detail;
    }
    const auto &m = *r.mismatch;
    std::string text = "q^" + std::to_string(m.exponent) + ": " + m.expected_label + " " + m.expected.str() + ", "
                       + m.actual_label + " " + m.actual.str();
    if (!r.detail.empty()) {
        text += "; " + r.detail;
    }
    return text;
}

std::string milliseconds(std::chrono::nanoseconds t)
{
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << static_cast<double>(t.count()) / 1e6;
    return out.str();
}

} // namespace

std::string render_table(const std::vector<VerificationReport> &reports, bool show_timing)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"identity", "mode", "subject", "bound", "outcome"};
    if (show_timing) {
        header.push_back("ms");
    }
    header.push_back("detail");
    rows.push_back(header);
    for (const auto &r : reports) {
        std::vector<std::string> row{r.identity, std::string(to_string(r.mode)), r.subject, std::to_string(r.bound),
                                     std::string(to_string(r.outcome))};
        if (show_timing) {
            row.push_back(milliseconds(r.wall_time));
        }
        row.push_back(describe(r));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 == row.size()) {
                line += row[i];
            } else {
                line += row[i] + std::string(width[i] - row[i].size() + 2, ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line + "\n";
    }
    return out;
}

std::string render_records(const std::vector<VerificationReport> &reports, bool show_timing)
{
    std::string out;
    for (const auto &r : reports) {
        nlohmann::ordered_json record;
        record["identity"] = r.identity;
        record["mode"] = to_string(r.mode);
        record["subject"] = r.subject;
        record["bound"] = r.bound;
        record["outcome"] = r.outcome == Outcome::pass       ? "pass"
                            : r.outcome == Outcome::mismatch ? "mismatch"
                            : r.outcome == Outcome::error    ? "error"
                                                             : "skipped";
        if (r.mismatch) {
            // Coefficients are unbounded, so they travel as decimal strings.
            record["mismatch"] = {{"exponent", r.mismatch->exponent},
                                  {"expected_label", r.mismatch->expected_label},
                                  {"expected", r.mismatch->expected.str()},
                                  {"actual_label", r.mismatch->actual_label},
                                  {"actual", r.mismatch->actual.str()}};
        } else {
            record["mismatch"] = nullptr;
        }
        record["detail"] = r.detail;
        if (show_timing) {
            record["wall_ns"] = r.wall_time.count();
        }
        out += record.dump() + "\n";
    }
    return out;
}

} // namespace rrid
