// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "leibcheck/bilinear.hpp"
#include "leibcheck/catalogue.hpp"
#include "leibcheck/isomorphism.hpp"
#include "leibcheck/lemmas.hpp"
#include "leibcheck/report.hpp"
#include "leibcheck/witness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace leibcheck;

namespace {

using Clock = std::chrono::steady_clock;
using GMat = Matrix<Gaussian>;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Context {
    Catalogue cat;
    VerifyRun run;
    double verify_seconds = 0;
    std::vector<WitnessFixture> fixtures;
};

const CheckResult* find_check(const EntryReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string short_list(const std::set<std::string>& names) {
    std::string s;
    std::size_t k = 0;
    for (const auto& n : names) {
        if (k++ == 8) return s + ", ...";
        s += (s.empty() ? "" : ", ") + n;
    }
    return s;
}

GMat random_invertible(std::size_t n, std::mt19937_64& rng) {
    auto small = [&] { return Gaussian(Rational(static_cast<long>(rng() % 5) - 2), Rational(rng() % 4 == 0 ? 1 : 0)); };
    GMat lo = GMat::identity(n, Gaussian()), up = lo;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c) lo(r, c) = small();
            if (r < c) up(r, c) = small();
        }
    std::size_t k = rng() % n;
    up(k, k) = Gaussian(Rational(static_cast<long>(rng() % 3) + 2));
    return lo * up;
}

// Twenty entries spread over the catalogue, at their first sample.
std::vector<std::pair<std::string, LeibnizAlgebra<Gaussian>>> spread(const Catalogue& cat) {
    std::vector<std::pair<std::string, LeibnizAlgebra<Gaussian>>> out;
    const std::size_t step = cat.entries.size() / 20;
    for (std::size_t k = 0; k < 20; ++k) {
        const auto& e = cat.entries[k * step];
        out.emplace_back(e.name, instantiate(e, sample_params(e, 1).front(), cat.dimension));
    }
    return out;
}

Outcome completeness(const Context& ctx) {
    Outcome o;
    std::set<std::string> expected;
    for (int k = 1; k <= 261; ++k)
        if (k != 246) expected.insert("A_" + std::to_string(k));
    expected.insert("A_246a");
    expected.insert("A_246b");
    for (int k = 1; k <= 15; ++k) expected.insert("R_" + std::to_string(k));
    std::set<std::string> present;
    for (const auto& e : ctx.cat.entries) present.insert(e.name);
    std::set<std::string> missing, thin, broken;
    for (const auto& n : expected)
        if (!present.count(n)) missing.insert(n);
    std::map<std::string, std::size_t> samples;
    for (const auto& r : ctx.run.reports) {
        ++samples[r.entry];
        const auto* c = find_check(r, "leibniz");
        if (!c || !c->pass) broken.insert(r.entry);
    }
    for (const auto& e : ctx.cat.entries)
        if (!e.params.empty() && samples[e.name] < 3) thin.insert(e.name);
    o.pass = missing.empty() && present.size() == 277 && thin.empty() && broken.empty() && ctx.verify_seconds < 60;
    std::ostringstream ss;
    ss << present.size() << " records, " << ctx.run.reports.size() << " instances, Leibniz failures " << broken.size()
       << ", " << ctx.verify_seconds << " s";
    if (!missing.empty()) ss << "; missing " << short_list(missing);
    if (!thin.empty()) ss << "; < 3 samples: " << short_list(thin);
    if (!broken.empty()) ss << "; not Leibniz: " << short_list(broken);
    o.detail = ss.str();
    return o;
}

Outcome hypotheses(const Context& ctx) {
    Outcome o;
    std::set<std::string> bad;
    std::size_t instances = 0, failures = 0;
    for (const auto& r : ctx.run.reports) {
        ++instances;
        for (const auto& c : r.checks)
            if (c.name.rfind("claim.", 0) == 0 && !c.pass) {
                ++failures;
                bad.insert(r.entry + " " + c.name + " (" + c.detail + ")");
            }
    }
    // the worked examples, spelled out
    for (int k = 1; k <= 7; ++k) {
        const auto& e = ctx.cat.entry("A_" + std::to_string(k));
        for (const auto& p : sample_params(e, 3)) {
            auto s = signature(instantiate(e, p));
            if (s.dim_power(2) != 3 || s.dim_power(3) != 2 || s.dim_power(4) != 1 || s.dim_leib != 1)
                bad.insert(e.name + " is not (3, 2, 1, 1)");
        }
    }
    if (signature(instantiate(ctx.cat.entry("A_16"), {})).dim_power(2) != 4) bad.insert("A_16 dim A^2 != 4");
    o.pass = bad.empty();
    o.detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " failed claims";
    if (!bad.empty()) o.detail += ": " + short_list(bad);
    return o;
}

Outcome non_lie_non_split(const Context& ctx) {
    std::set<std::string> bad;
    for (const auto& r : ctx.run.reports)
        for (const char* name : {"non_lie", "center_in_A2"})
            if (const auto* c = find_check(r, name); !c || !c->pass) bad.insert(r.entry + " " + name);
    Outcome o{bad.empty(), std::to_string(ctx.run.reports.size()) + " instances, " + std::to_string(bad.size()) + " failures"};
    if (!bad.empty()) o.detail += ": " + short_list(bad);
    return o;
}

Outcome lemmas(const Context& ctx) {
    std::size_t applicable4 = 0, applicable5 = 0;
    std::set<std::string> bad;
    for (const auto& r : ctx.run.reports) {
        if (r.bounds.lemma4.applicable) ++applicable4;
        if (r.bounds.lemma5.applicable) ++applicable5;
        if (!r.bounds.lemma4.holds) bad.insert(r.entry + " L4");
        if (!r.bounds.lemma5.holds) bad.insert(r.entry + " L5");
    }
    const long contradiction = lemma5_bound_ii(2, 1);
    Outcome o;
    o.pass = bad.empty() && contradiction == 4 && applicable4 > 0 && applicable5 > 0;
    o.detail = "L4 on " + std::to_string(applicable4) + ", L5 on " + std::to_string(applicable5) +
               " instances; k=2, t=1 gives bound " + std::to_string(contradiction) + " (n = 5)";
    if (!bad.empty()) o.detail += "; violated: " + short_list(bad);
    return o;
}

Outcome canonical_forms(const Context& ctx) {
    auto lift = [](const GMat& m) { return map_matrix(m, QuadExt(), [](const Gaussian& g) { return QuadExt(g); }); };
    auto m2 = [](long a, long b, long c, long d) { return GMat::from_rows({{a, b}, {c, d}}, 2, Gaussian()); };
    const std::vector<std::pair<GMat, FormKind>> listed = {{m2(0, 1, -1, 0), FormKind::Skew_i},
                                                           {m2(1, 0, 0, 0), FormKind::SymRank1_ii},
                                                           {m2(1, 0, 0, 1), FormKind::SymRank2_iii},
                                                           {m2(0, 1, -1, 1), FormKind::Mixed_iv},
                                                           {m2(0, 1, 2, 0), FormKind::MixedC_v}};
    std::set<std::string> bad;
    for (const auto& [m, kind] : listed) {
        auto c = congruence_canonical(m);
        if (c.kind.tag != kind || !(c.q == QMatrix::identity(2, QuadExt()))) bad.insert(m.to_string() + " not fixed");
    }
    std::size_t forms = 0;
    std::map<std::string, std::size_t> kinds;
    for (const auto& e : ctx.cat.entries)
        for (const auto& p : sample_params(e, 3)) {
            auto a = instantiate(e, p, ctx.cat.dimension);
            if (!in_v_form_setting(a)) continue;
            ++forms;
            auto m = extract_v_form(a).m;
            auto c = congruence_canonical(m);
            ++kinds[form_kind_name(c.kind.tag)];
            if (c.kind.tag == FormKind::Skew_i) bad.insert(e.name + " gives (i)");
            if (!(c.q.transpose() * lift(m) * c.q == canonical_matrix(c.kind))) bad.insert(e.name + " Q check");
        }
    Outcome o{bad.empty() && forms > 0, "5 listed matrices fixed; " + std::to_string(forms) + " catalogue forms:"};
    for (const auto& [k, n] : kinds) o.detail += " " + k + " x" + std::to_string(n);
    if (!bad.empty()) o.detail += "; " + short_list(bad);
    return o;
}

Outcome fixtures(const Context& ctx) {
    std::mt19937_64 rng(2024);
    std::size_t exact_ok = 0, l7 = 0, laws = 0;
    std::set<std::string> bad;
    for (const auto& f : ctx.fixtures) {
        auto r = check_fixture(ctx.cat, f);
        if (!r.matches()) bad.insert(f.name);
        if (f.mode != FixtureMode::Exact || !f.expect_ok) continue;
        if (!r.ok || !r.exact) continue;
        ++exact_ok;
        if (f.name.rfind("L7", 0) == 0) ++l7;
        auto a = build_algebra_ext(ctx.cat, f.source);
        auto b = build_algebra_ext(ctx.cat, f.target);
        auto w = fixture_matrix(f);
        auto rr = map_matrix(random_invertible(5, rng), QuadExt(), [](const Gaussian& g) { return QuadExt(g); });
        auto c = base_change(b, rr);
        bool round_trip = verify_witness(c, b, rr).ok;
        bool composed = verify_witness(b, c, invert(rr)).ok && verify_witness(a, c, invert(rr) * w).ok;
        if (round_trip && composed) ++laws;
        else bad.insert(f.name + " laws");
    }
    Outcome o;
    o.pass = bad.empty() && exact_ok >= 10 && l7 >= 2 && laws == exact_ok;
    o.detail = std::to_string(ctx.fixtures.size()) + " fixtures as expected minus " + std::to_string(bad.size()) + "; " +
               std::to_string(exact_ok) + " exact witnesses (" + std::to_string(l7) + " L7 maps), laws hold on " +
               std::to_string(laws);
    if (!bad.empty()) o.detail += "; " + short_list(bad);
    return o;
}

Outcome remark_pairs(const Context& ctx) {
    auto inst = [&](const std::string& ref) {
        auto [name, params] = parse_entry_ref(ref);
        return instantiate(ctx.cat.entry(name), params, ctx.cat.dimension);
    };
    Outcome o;
    for (auto [x, y] : {std::pair{"A_5:alpha=2", "A_5:alpha=-2"}, std::pair{"A_17:alpha=2", "A_17:alpha=1/2"}}) {
        SearchConfig cfg;
        cfg.candidate_cap = 10'000'000;
        auto t0 = Clock::now();
        auto out = search_and_certify(inst(x), inst(y), cfg);
        double secs = seconds_since(t0);
        bool ok = secs < 300 && (out.verdict == IsoVerdict::Certified ||
                                 (out.verdict == IsoVerdict::FiniteFieldEvidence && out.evidence.size() >= 2));
        if (out.verdict == IsoVerdict::Certified) ok = ok && out.exact && verify_witness(inst(x), inst(y), *out.exact).ok;
        o.pass = o.pass && ok;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", secs);
        o.detail += std::string(o.detail.empty() ? "" : "; ") + x + " ~ " + y + ": " + iso_verdict_name(out.verdict) + ", " +
                    std::to_string(out.candidates) + " candidates, " + buf + " s";
    }
    return o;
}

Outcome invariance(const Context& ctx) {
    std::mt19937_64 rng(8);
    std::size_t changes = 0;
    std::set<std::string> bad;
    for (const auto& [name, a] : spread(ctx.cat)) {
        const auto sig = signature(a);
        for (int t = 0; t < 10; ++t) {
            auto p = random_invertible(a.dim(), rng);
            auto b = base_change(a, p);
            ++changes;
            auto sb = signature(b);
            if (!(sb == sig)) bad.insert(name + " " + sig.first_difference(sb));
            if (!verify_witness(b, a, p).ok) bad.insert(name + " round trip");
        }
    }
    std::size_t pairs = 0;
    for (const auto& f : ctx.fixtures) {
        if (f.mode != FixtureMode::Exact || !f.expect_ok) continue;
        auto a = build_algebra_ext(ctx.cat, f.source);
        auto b = build_algebra_ext(ctx.cat, f.target);
        if (!verify_witness(a, b, fixture_matrix(f)).ok) continue;
        ++pairs;
        if (!(signature(a) == signature(b))) bad.insert(f.name + " signatures differ");
    }
    Outcome o{bad.empty() && changes == 200, std::to_string(changes) + " base changes over 20 entries, " +
                                               std::to_string(pairs) + " witnessed fixture pairs"};
    if (!bad.empty()) o.detail += "; " + short_list(bad);
    return o;
}

// A mutation is caught when the mutated entry fails any verify check (Leibniz
// identity, nilpotency, the theorem's claimed dimensions, Z inside A^2, the
// lemma bounds) or its signature differs from the original's.
Outcome mutations(const Context& ctx) {
    std::mt19937_64 rng(9);
    std::size_t total = 0, detected = 0, still_valid = 0, isomorphic = 0;
    const std::size_t step = ctx.cat.entries.size() / 20;
    for (std::size_t k = 0; k < 20; ++k) {
        const auto& e = ctx.cat.entries[k * step];
        const auto p = sample_params(e, 1).front();
        const auto sig = signature(instantiate(e, p, ctx.cat.dimension));
        for (int t = 0; t < 10; ++t) {
            CatalogueEntry m = e;
            std::size_t victim = rng() % m.products.size();
            if (rng() % 2 == 0) {
                m.products.erase(m.products.begin() + static_cast<long>(victim));
            } else {
                for (auto& [out, x] : m.products[victim].terms) x = CoeffExpr::parse("-(" + x.to_string() + ")");
            }
            ++total;
            auto rep = verify_entry(ctx.cat, m, p);
            if (!rep.passed() || !(rep.signature == sig)) {
                ++detected;
            } else if (check_leibniz(instantiate(m, p, ctx.cat.dimension)).ok) {
                ++still_valid;
                // an undetected mutation that is isomorphic to the original cannot be caught by any invariant
                SearchConfig cfg;
                cfg.candidate_cap = 200000;
                auto out = search_and_certify(instantiate(e, p, ctx.cat.dimension), instantiate(m, p, ctx.cat.dimension), cfg, 1);
                if (out.verdict == IsoVerdict::Certified) ++isomorphic;
            }
        }
    }
    const double rate = total ? static_cast<double>(detected) / static_cast<double>(total) : 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * rate);
    Outcome o;
    o.pass = total > 0 && rate >= 0.95 && detected + still_valid == total;
    o.detail = std::to_string(detected) + "/" + std::to_string(total) + " mutations detected (" + buf + "), " +
               std::to_string(still_valid) + " undetected ones re-verified as Leibniz algebras, " + std::to_string(isomorphic) +
               " of them certified isomorphic to the original";
    return o;
}

}  // namespace

int main() {
    Context ctx;
    try {
        const std::string path = std::string(LEIBCHECK_DATA_DIR) + "/catalogue.json";
        std::ifstream in(path, std::ios::binary);
        std::ostringstream text;
        text << in.rdbuf();
        auto t0 = Clock::now();
        ctx.cat = parse_catalogue(text.str());
        ctx.run = verify_catalogue(ctx.cat, content_digest(text.str()), std::nullopt, 3);
        ctx.verify_seconds = seconds_since(t0);
        ctx.fixtures = load_fixtures(std::string(LEIBCHECK_DATA_DIR) + "/witnesses.json");
    } catch (const std::exception& e) {
        std::cout << "FAIL setup: " << e.what() << "\n";
        return 1;
    }

    const std::vector<std::pair<const char*, std::function<Outcome(const Context&)>>> criteria = {
        {"catalogue completeness", completeness},
        {"hypothesis conformance", hypotheses},
        {"non-Lie and Z inside A^2", non_lie_non_split},
        {"lemma bounds", lemmas},
        {"bilinear canonical forms", canonical_forms},
        {"witness fixtures", fixtures},
        {"isomorphic pairs by search", remark_pairs},
        {"base-change invariance", invariance},
        {"mutation detection", mutations},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second(ctx);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << ": " << o.detail << std::endl;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
