#include "commands.hpp"

#include "leibcheck/error.hpp"
#include "leibcheck/report.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace leibcheck::cli;
    CLI::App app{"Exact verification kernel for finite-dimensional left Leibniz algebras"};
    app.set_version_flag("--version", leibcheck::kToolVersion);
    app.require_subcommand(1);

    const std::string data_dir = LEIBCHECK_DATA_DIR;
    std::string catalogue = data_dir + "/catalogue.json";
    app.add_option("--catalogue", catalogue, "Catalogue file")->capture_default_str();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check every catalogue entry at sampled parameter points");
    verify->add_option("--entry", va.entry, "Restrict to one entry, e.g. A_17");
    verify->add_option("--samples", va.samples, "Parameter points per entry")->capture_default_str();
    verify->add_option("--json", va.json_out, "Write the machine-readable report here");
    verify->add_option("--catalogue", catalogue, "Catalogue file");

    std::string inv_ref;
    auto* inv = app.add_subcommand("invariants", "Print the invariant signature of one instance");
    inv->add_option("--entry", inv_ref, "NAME[:param=value,...]")->required();
    inv->add_option("--catalogue", catalogue, "Catalogue file");

    auto* iso = app.add_subcommand("iso", "Isomorphism witnesses");
    iso->require_subcommand(1);
    std::string fixtures = data_dir + "/witnesses.json";
    auto* iso_verify = iso->add_subcommand("verify", "Check witness fixtures exactly");
    iso_verify->add_option("--fixtures", fixtures, "Fixture file")->capture_default_str();
    iso_verify->add_option("--catalogue", catalogue, "Catalogue file");
    IsoSearchArgs sa;
    auto* iso_search = iso->add_subcommand("search", "Search a witness over GF(p) and try to lift it");
    iso_search->add_option("--a", sa.a, "Source NAME[:param=value,...]")->required();
    iso_search->add_option("--b", sa.b, "Target NAME[:param=value,...]")->required();
    iso_search->add_option("--prime", sa.prime, "Prime, 1 mod 4")->capture_default_str();
    iso_search->add_option("--cap", sa.cap, "Candidate cap")->capture_default_str();
    iso_search->add_flag("!--no-adapt", sa.adapted, "Search full matrices instead of flag-adapted ones");
    iso_search->add_option("--catalogue", catalogue, "Catalogue file");

    std::string literal;
    auto* canon = app.add_subcommand("canon", "Congruence canonical form of a 2x2 matrix");
    canon->add_option("matrix", literal, "e.g. \"[[0,2],[4,0]]\"")->required();

    ReportArgs ra;
    ra.fixtures = fixtures;
    auto* report = app.add_subcommand("report", "Full verification report");
    report->add_option("--fixtures", ra.fixtures, "Fixture file")->capture_default_str();
    report->add_option("--samples", ra.samples, "Parameter points per entry")->capture_default_str();
    report->add_option("--out", ra.out, "Write the JSON report here instead of stdout");
    report->add_option("--catalogue", catalogue, "Catalogue file");

    bool check_only = false;
    auto* fmt = app.add_subcommand("fmt", "Rewrite the catalogue in canonical formatting");
    fmt->group("");  // maintenance only
    fmt->add_flag("--check", check_only, "Only report whether the file is canonical");
    fmt->add_option("--catalogue", catalogue, "Catalogue file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            va.catalogue = catalogue;
            return cmd_verify(va);
        }
        if (*inv) return cmd_invariants(catalogue, inv_ref);
        if (*iso_verify) return cmd_iso_verify(catalogue, fixtures);
        if (*iso_search) {
            sa.catalogue = catalogue;
            return cmd_iso_search(sa);
        }
        if (*canon) return cmd_canon(literal);
        if (*report) {
            ra.catalogue = catalogue;
            return cmd_report(ra);
        }
        if (*fmt) return cmd_fmt(catalogue, check_only);
    } catch (const leibcheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
