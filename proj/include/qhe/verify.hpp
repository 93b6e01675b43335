#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qhe/params.hpp"

namespace qhe {

enum class Classification { Consistent, KnownDiscrepancy, Failure };

std::string_view classification_name(Classification c);

// One verified identity: two values, their deviation, and the verdict.
struct DiscrepancyEntry {
    std::string id;
    std::string description;   // includes the explanation for known discrepancies
    std::string paper_anchor;  // where the checked claim is printed
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;  // abs_dev / max(|lhs|, |rhs|), 0 when both vanish
    double tolerance = 0.0;
    Classification classification = Classification::Consistent;
};

struct Ledger {
    std::uint64_t seed = 0;
    int draws = 0;
    std::vector<DiscrepancyEntry> entries;
    bool pass = true;  // no Failure and no discrepancy outside the allow-list

    const DiscrepancyEntry* find(std::string_view id) const;
};

enum class ReportFormat { Text, Json };

// Check ids that are allowed to land as KnownDiscrepancy.  Any other id
// that misses its tolerance fails the whole run.
const std::vector<std::string>& known_discrepancy_allowlist();

// Runs the full identity ledger at `p` and at `draws` seeded random valid
// parameter sets.  `tol` is the tolerance of the exact identities whose
// bound is not pinned by the check itself.  Deviations are data, not
// exceptions: the result is the same set of entries for every input.
Ledger run_ledger(const ValidatedParams& p, double tol, std::uint64_t seed,
                  int draws);

// Text is a fixed-width table; Json follows the report schema with numbers
// at 17 significant digits (lossless round-trip).
std::string render_report(const Ledger& ledger, ReportFormat format);

}  // namespace qhe
