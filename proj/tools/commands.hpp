#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace leibcheck::cli {

struct VerifyArgs {
    std::string catalogue;
    std::optional<std::string> entry;
    std::size_t samples = 3;
    std::optional<std::string> json_out;
};

struct IsoSearchArgs {
    std::string catalogue;
    std::string a, b;
    std::uint64_t prime = 13;
    std::uint64_t cap = 10'000'000;
    bool adapted = true;
};

struct ReportArgs {
    std::string catalogue;
    std::string fixtures;
    std::size_t samples = 3;
    std::optional<std::string> out;
};

int cmd_verify(const VerifyArgs& args);
int cmd_invariants(const std::string& catalogue, const std::string& ref);
int cmd_iso_verify(const std::string& catalogue, const std::string& fixtures);
int cmd_iso_search(const IsoSearchArgs& args);
int cmd_canon(const std::string& literal);
int cmd_report(const ReportArgs& args);
int cmd_fmt(const std::string& catalogue, bool check_only);

}  // namespace leibcheck::cli
