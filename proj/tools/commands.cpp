#include "commands.hpp"

#include "leibcheck/bilinear.hpp"
#include "leibcheck/catalogue.hpp"
#include "leibcheck/error.hpp"
#include "leibcheck/isomorphism.hpp"
#include "leibcheck/report.hpp"
#include "leibcheck/witness.hpp"

#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace leibcheck::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::UnknownEntry, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::UnknownEntry, "cannot write " + path);
    out << text;
}

LeibnizAlgebra<Gaussian> instance_from_ref(const Catalogue& cat, const std::string& ref) {
    auto [name, params] = parse_entry_ref(ref);
    const auto& e = cat.entry(name);
    if (params.empty() && !e.params.empty()) {
        auto samples = sample_params(e, 1);
        params = samples.front();
    }
    if (!admissible(e, params))
        throw Error(Errc::ConstraintViolated, ref + " violates the entry constraints");
    return instantiate(e, params, cat.dimension);
}

// "[[a,b],[c,d]]" with coefficient expressions as entries
GMatrix parse_matrix_literal(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw Error(Errc::SyntaxError, "expected [[a,b],[c,d]]");
    std::vector<std::vector<Gaussian>> rows;
    std::size_t pos = 1;
    while (pos < s.size() - 1) {
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] != '[') throw Error(Errc::SyntaxError, "expected '[' at offset " + std::to_string(pos));
        auto close = s.find(']', pos);
        if (close == std::string::npos) throw Error(Errc::SyntaxError, "unclosed row");
        std::vector<Gaussian> row;
        std::stringstream cells(s.substr(pos + 1, close - pos - 1));
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(CoeffExpr::parse(cell).eval({}));
        rows.push_back(std::move(row));
        pos = close + 1;
    }
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw Error(Errc::DimensionMismatch, "canon expects a 2x2 matrix");
    return GMatrix::from_rows(rows, 2, Gaussian());
}

ojson fixtures_json(const std::vector<FixtureResult>& results) {
    ojson arr = ojson::array();
    for (const auto& r : results) {
        arr.push_back({{"name", r.name},
                       {"expect", r.expect_ok ? "ok" : "fail"},
                       {"ok", r.ok},
                       {"exact", r.exact},
                       {"matches", r.matches()},
                       {"detail", r.detail}});
    }
    return arr;
}

std::vector<FixtureResult> run_fixtures(const Catalogue& cat, const std::string& path) {
    std::vector<FixtureResult> out;
    for (const auto& f : load_fixtures(path)) out.push_back(check_fixture(cat, f));
    return out;
}

}  // namespace

int cmd_verify(const VerifyArgs& args) {
    const std::string text = read_file(args.catalogue);
    const Catalogue cat = parse_catalogue(text);
    if (args.entry) (void)cat.entry(*args.entry);
    const VerifyRun run = verify_catalogue(cat, content_digest(text), args.entry, args.samples);
    std::cout << verify_report_table(run);
    if (args.json_out) write_file(*args.json_out, verify_report_json(run));
    return run.failures() == 0 ? 0 : 1;
}

int cmd_invariants(const std::string& catalogue, const std::string& ref) {
    const Catalogue cat = load_catalogue(catalogue);
    const auto a = instance_from_ref(cat, ref);
    const auto sig = signature(a);
    const auto flags = classify_flags(a);
    ojson out;
    out["instance"] = ref;
    out["signature"] = ojson::parse(sig.to_json());
    out["flags"] = {{"is_lie", flags.is_lie},
                    {"nilpotent", flags.is_nilpotent},
                    {"nilpotency_class", flags.nilpotency_class},
                    {"filiform", flags.is_filiform},
                    {"split_status", flags.split_status == SplitStatus::SplitCertified ? "split-certified" : "not-certified"}};
    out["bounds"] = ojson::parse(bounds_report(sig).to_json());
    if (in_v_form_setting(a)) {
        const auto vf = extract_v_form(a);
        const auto canon = congruence_canonical(vf.m);
        out["v_form"] = {{"matrix", vf.m.to_string()}, {"kind", canon.kind.to_string()}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_iso_verify(const std::string& catalogue, const std::string& fixtures) {
    const Catalogue cat = load_catalogue(catalogue);
    const auto results = run_fixtures(cat, fixtures);
    std::size_t bad = 0;
    for (const auto& r : results) {
        const char* status = r.matches() ? "PASS" : "FAIL";
        std::cout << status << "  " << r.name << "  (" << (r.ok ? "verified" : "rejected")
                  << (r.exact ? ", exact" : r.ok ? ", finite-field" : "") << ")";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
        if (!r.matches()) ++bad;
    }
    std::cout << results.size() - bad << "/" << results.size() << " fixtures behave as expected\n";
    return bad == 0 ? 0 : 1;
}

int cmd_iso_search(const IsoSearchArgs& args) {
    const Catalogue cat = load_catalogue(args.catalogue);
    const auto a = instance_from_ref(cat, args.a);
    const auto b = instance_from_ref(cat, args.b);
    SearchConfig cfg;
    cfg.prime = args.prime;
    cfg.candidate_cap = args.cap;
    cfg.adapted = args.adapted;
    const IsoOutcome out = search_and_certify(a, b, cfg);
    std::cout << iso_verdict_name(out.verdict) << "\n";
    std::cout << "candidates: " << out.candidates << "\n";
    if (!out.note.empty()) std::cout << "note: " << out.note << "\n";
    if (out.exact) std::cout << "witness: " << out.exact->to_string() << "\n";
    for (const auto& [p, w] : out.evidence) std::cout << "mod " << p << ": " << w.to_string() << "\n";
    return out.verdict == IsoVerdict::Inconclusive ? 1 : 0;
}

int cmd_canon(const std::string& literal) {
    const GMatrix m = parse_matrix_literal(literal);
    const Canonicalization c = congruence_canonical(m);
    const QMatrix qm = map_matrix(m, QuadExt(), [](const Gaussian& g) { return QuadExt(g); });
    const bool verified = c.q.transpose() * qm * c.q == canonical_matrix(c.kind);
    std::cout << "kind: " << c.kind.to_string() << "\n";
    std::cout << "canonical: " << canonical_matrix(c.kind).to_string() << "\n";
    std::cout << "Q: " << c.q.to_string() << "\n";
    if (c.extension) std::cout << "extension: sqrt(" << c.extension->to_string() << ")\n";
    std::cout << "Q^T M Q check: " << (verified ? "ok" : "FAILED") << "\n";
    return verified ? 0 : 1;
}

int cmd_report(const ReportArgs& args) {
    const std::string text = read_file(args.catalogue);
    const Catalogue cat = parse_catalogue(text);
    const VerifyRun run = verify_catalogue(cat, content_digest(text), std::nullopt, args.samples);
    const auto fixtures = run_fixtures(cat, args.fixtures);

    ojson out;
    out["tool"] = kToolVersion;
    out["verification"] = ojson::parse(verify_report_json(run));

    ojson coll = ojson::array();
    for (const auto& group : signature_collisions(run)) coll.push_back(group);
    out["signature_collisions"] = coll;

    std::map<std::string, std::size_t> kinds;
    for (const auto& r : run.reports)
        if (r.v_form) ++kinds[form_kind_name(r.v_form->tag)];
    out["v_form_kinds"] = kinds;

    out["fixtures"] = fixtures_json(fixtures);

    std::size_t fixture_failures = 0;
    for (const auto& f : fixtures)
        if (!f.matches()) ++fixture_failures;
    out["summary"] = {{"entry_failures", run.failures()}, {"fixture_failures", fixture_failures}};

    const std::string body = out.dump(2) + "\n";
    if (args.out)
        write_file(*args.out, body);
    else
        std::cout << body;
    return run.failures() == 0 && fixture_failures == 0 ? 0 : 1;
}

int cmd_fmt(const std::string& catalogue, bool check_only) {
    const std::string text = read_file(catalogue);
    const std::string canon = serialize_catalogue(parse_catalogue(text));
    if (canon == text) return 0;
    if (check_only) {
        std::cerr << catalogue << " is not canonically formatted\n";
        return 1;
    }
    write_file(catalogue, canon);
    return 0;
}

}  // namespace leibcheck::cli
