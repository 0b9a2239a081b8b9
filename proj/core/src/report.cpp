#include "leibcheck/report.hpp"

#include "leibcheck/isomorphism.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

namespace leibcheck {

using ojson = nlohmann::ordered_json;

std::size_t VerifyRun::failures() const {
    std::size_t f = 0;
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            if (!c.pass) ++f;
    return f;
}

VerifyRun verify_catalogue(const Catalogue& cat, const std::string& digest,
                           const std::optional<std::string>& only_entry, std::size_t samples, unsigned threads) {
    VerifyRun run;
    run.digest = digest;
    run.samples_per_entry = samples;
    std::vector<const CatalogueEntry*> selected;
    if (only_entry) selected.push_back(&cat.entry(*only_entry));
    else
        for (const auto& e : cat.entries) selected.push_back(&e);
    run.entries = selected.size();

    std::vector<std::vector<EntryReport>> per_entry(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= selected.size()) return;
            const auto& e = *selected[k];
            try {
                for (const auto& p : sample_params(e, samples)) per_entry[k].push_back(verify_entry(cat, e, p));
            } catch (const Error& err) {
                EntryReport r;
                r.entry = e.name;
                r.checks.push_back({"sample_params", false, err.what()});
                per_entry[k].push_back(std::move(r));
            }
        }
    };
    unsigned t = threads ? threads : configured_threads();
    t = std::max(1u, std::min<unsigned>(t, static_cast<unsigned>(selected.size())));
    if (t == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& v : per_entry)
        for (auto& r : v) run.reports.push_back(std::move(r));
    return run;
}

std::string verify_report_json(const VerifyRun& run) {
    ojson root;
    root["tool"] = kToolVersion;
    root["catalogue_digest"] = run.digest;
    root["entries"] = run.entries;
    root["samples_per_entry"] = run.samples_per_entry;
    root["failures"] = run.failures();
    ojson results = ojson::array();
    for (const auto& r : run.reports) {
        ojson jr;
        jr["entry"] = r.entry;
        jr["params"] = assignment_to_string(r.params);
        ojson checks = ojson::object();
        for (const auto& c : r.checks) checks[c.name] = c.pass ? "pass" : "FAIL: " + c.detail;
        jr["checks"] = checks;
        if (r.signature.n) jr["signature"] = ojson::parse(r.signature.to_json());
        if (r.signature.n) jr["bounds"] = ojson::parse(r.bounds.to_json());
        if (r.v_form) jr["v_form"] = r.v_form->to_string();
        results.push_back(jr);
    }
    root["results"] = results;
    return root.dump(2) + "\n";
}

std::string verify_report_table(const VerifyRun& run) {
    std::ostringstream os;
    os << kToolVersion << "  catalogue " << run.digest << "\n";
    os << std::left << std::setw(10) << "entry" << std::setw(16) << "lcs dims" << std::setw(6) << "leib"
       << std::setw(4) << "Z" << std::setw(10) << "v-form" << std::setw(8) << "status" << "params\n";
    for (const auto& r : run.reports) {
        std::string dims;
        for (auto d : r.signature.lower_central_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
        std::string failed;
        for (const auto& c : r.checks)
            if (!c.pass) failed += (failed.empty() ? "" : ",") + c.name;
        std::string params = assignment_to_string(r.params);
        if (params.empty()) params = "-";
        os << std::left << std::setw(10) << r.entry << std::setw(16) << dims << std::setw(6) << r.signature.dim_leib
           << std::setw(4) << r.signature.dim_center << std::setw(10)
           << (r.v_form ? form_kind_name(r.v_form->tag) : "-") << std::setw(8) << (failed.empty() ? "ok" : "FAIL")
           << params << (failed.empty() ? "" : "  [" + failed + "]") << "\n";
    }
    os << "entries: " << run.entries << "  instances: " << run.reports.size() << "  failed checks: " << run.failures()
       << "\n";
    return os.str();
}

std::vector<std::vector<std::string>> signature_collisions(const VerifyRun& run) {
    std::map<std::string, std::vector<std::string>> groups;
    std::map<std::string, bool> seen;
    for (const auto& r : run.reports) {
        if (seen[r.entry] || r.signature.n == 0) continue;
        seen[r.entry] = true;
        groups[r.signature.to_string()].push_back(r.entry);
    }
    std::vector<std::vector<std::string>> out;
    for (auto& [sig, names] : groups)
        if (names.size() > 1) out.push_back(names);
    return out;
}

}  // namespace leibcheck
