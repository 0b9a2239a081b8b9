#include "leibcheck/witness.hpp"

#include "leibcheck/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace leibcheck {

using nlohmann::json;

namespace {

AlgebraRef parse_ref(const json& j, const std::string& where) {
    AlgebraRef ref;
    if (!j.is_object()) throw Error(Errc::SyntaxError, where + ": expected an object");
    if (j.contains("entry")) {
        ref.entry = j["entry"].get<std::string>();
        ref.label = *ref.entry;
        if (j.contains("params")) {
            ref.params = parse_assignment(j["params"].get<std::string>());
            ref.label += ":" + j["params"].get<std::string>();
        }
        return ref;
    }
    if (!j.contains("products")) throw Error(Errc::SyntaxError, where + ": needs 'entry' or 'products'");
    ref.label = j.value("label", std::string("inline"));
    for (const auto& p : j["products"]) {
        EntryProduct ep;
        ep.left = p.at("left").get<std::size_t>();
        ep.right = p.at("right").get<std::size_t>();
        for (const auto& t : p.at("value"))
            ep.terms.emplace_back(t.at(0).get<std::size_t>(), CoeffExpr::parse(t.at(1).get<std::string>(), true));
        ref.products.push_back(std::move(ep));
    }
    return ref;
}

}  // namespace

std::vector<WitnessFixture> parse_fixtures(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::SyntaxError, std::string("fixtures: ") + e.what());
    }
    std::vector<WitnessFixture> out;
    const auto& arr = root.at("fixtures");
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& j = arr[k];
        std::string where = "fixtures[" + std::to_string(k) + "]";
        try {
            WitnessFixture f;
            f.name = j.at("name").get<std::string>();
            f.source = parse_ref(j.at("source"), where + ".source");
            f.target = parse_ref(j.at("target"), where + ".target");
            std::string mode = j.value("mode", std::string("exact"));
            if (mode == "exact") f.mode = FixtureMode::Exact;
            else if (mode == "finite-field") f.mode = FixtureMode::FiniteField;
            else throw Error(Errc::SyntaxError, "unknown mode '" + mode + "'");
            if (j.contains("matrix"))
                for (const auto& row : j["matrix"]) {
                    std::vector<CoeffExpr> r;
                    for (const auto& x : row) r.push_back(CoeffExpr::parse(x.get<std::string>(), true));
                    f.matrix.push_back(std::move(r));
                }
            if (j.contains("primes")) f.primes = j["primes"].get<std::vector<std::uint64_t>>();
            if (f.mode == FixtureMode::Exact && f.matrix.empty()) throw Error(Errc::SyntaxError, "exact fixture without matrix");
            if (f.mode == FixtureMode::FiniteField && f.primes.size() < 2)
                throw Error(Errc::SyntaxError, "finite-field fixtures need at least two primes");
            std::string expect = j.value("expect", std::string("ok"));
            if (expect != "ok" && expect != "fail") throw Error(Errc::SyntaxError, "expect must be ok or fail");
            f.expect_ok = expect == "ok";
            f.note = j.value("note", std::string());
            out.push_back(std::move(f));
        } catch (const json::exception& e) {
            throw Error(Errc::SyntaxError, where + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.code(), where + ": " + e.what());
        }
    }
    return out;
}

std::vector<WitnessFixture> load_fixtures(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::SyntaxError, "cannot open fixtures '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixtures(ss.str());
}

namespace {

template <class S, class Eval>
LeibnizAlgebra<S> inline_algebra(std::size_t n, const AlgebraRef& ref, const S& zero, Eval&& eval) {
    std::vector<Product<S>> prods;
    for (const auto& ep : ref.products) {
        if (ep.left < 1 || ep.left > n || ep.right < 1 || ep.right > n)
            throw Error(Errc::IndexOutOfRange, ref.label + ": product index");
        Vec<S> v(n, zero);
        for (const auto& [k, x] : ep.terms) {
            if (k < 1 || k > n) throw Error(Errc::IndexOutOfRange, ref.label + ": output index");
            v[k - 1] += eval(x);
        }
        prods.push_back({ep.left - 1, ep.right - 1, std::move(v)});
    }
    return LeibnizAlgebra<S>(n, zero, prods);
}

}  // namespace

LeibnizAlgebra<Gaussian> build_algebra(const Catalogue& cat, const AlgebraRef& ref) {
    if (ref.entry) return instantiate(cat.entry(*ref.entry), ref.params, cat.dimension);
    return inline_algebra(cat.dimension, ref, Gaussian(), [](const CoeffExpr& x) { return x.eval(); });
}

LeibnizAlgebra<QuadExt> build_algebra_ext(const Catalogue& cat, const AlgebraRef& ref) {
    if (ref.entry) return to_quad_algebra(build_algebra(cat, ref));
    return inline_algebra(cat.dimension, ref, QuadExt(), [](const CoeffExpr& x) { return x.eval_ext(); });
}

Matrix<QuadExt> fixture_matrix(const WitnessFixture& f) {
    const std::size_t n = f.matrix.size();
    Matrix<QuadExt> m(n, n, QuadExt());
    for (std::size_t r = 0; r < n; ++r) {
        if (f.matrix[r].size() != n) throw Error(Errc::DimensionMismatch, f.name + ": matrix is not square");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = f.matrix[r][c].eval_ext();
    }
    return m;
}

FixtureResult check_fixture(const Catalogue& cat, const WitnessFixture& f, const SearchConfig& cfg) {
    FixtureResult res;
    res.name = f.name;
    res.expect_ok = f.expect_ok;
    try {
        if (f.mode == FixtureMode::Exact) {
            auto p = fixture_matrix(f);
            auto chk = verify_witness(build_algebra_ext(cat, f.source), build_algebra_ext(cat, f.target), p);
            res.ok = chk.ok;
            res.exact = chk.ok;
            if (chk.singular) res.detail = "matrix is singular";
            else if (!chk.ok)
                res.detail = "fails at [e" + std::to_string(chk.i + 1) + ",e" + std::to_string(chk.j + 1) + "]";
            else res.detail = "verified exactly";
        } else {
            auto a = build_algebra(cat, f.source);
            auto b = build_algebra(cat, f.target);
            res.ok = true;
            for (auto p : f.primes) {
                SearchConfig c = cfg;
                c.prime = p;
                c.max_witnesses = 1;
                auto sr = adapted_search(a, b, c);
                if (sr.status != SearchStatus::Found) {
                    res.ok = false;
                    res.detail += "mod " + std::to_string(p) + ": " + search_status_name(sr.status) + "; ";
                } else {
                    res.detail += "witness mod " + std::to_string(p) + "; ";
                }
            }
        }
    } catch (const Error& e) {
        res.ok = false;
        res.detail = e.what();
    }
    return res;
}

}  // namespace leibcheck
