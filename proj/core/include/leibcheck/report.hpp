#pragma once

#include "leibcheck/catalogue.hpp"

#include <optional>
#include <string>
#include <vector>

namespace leibcheck {

inline constexpr const char* kToolVersion = "leibcheck 0.1.0";

struct VerifyRun {
    std::string digest;
    std::size_t entries = 0;
    std::size_t samples_per_entry = 0;
    std::vector<EntryReport> reports;  // catalogue order, then sample order

    std::size_t failures() const;
};

// Runs verify_entry over entries x samples; work is spread over threads but
// the output order never depends on scheduling.
VerifyRun verify_catalogue(const Catalogue& cat, const std::string& digest,
                           const std::optional<std::string>& only_entry, std::size_t samples, unsigned threads = 0);

std::string verify_report_json(const VerifyRun& run);
std::string verify_report_table(const VerifyRun& run);

// Groups of distinct entries sharing a full signature at their first sample.
std::vector<std::vector<std::string>> signature_collisions(const VerifyRun& run);

}  // namespace leibcheck
