#include "leibcheck/bilinear.hpp"
#include "leibcheck/catalogue.hpp"
#include "leibcheck/isomorphism.hpp"
#include "leibcheck/report.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace leibcheck;

namespace {

const std::string& catalogue_text() {
    static const std::string text = [] {
        std::ifstream in(std::string(LEIBCHECK_DATA_DIR) + "/catalogue.json", std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }();
    return text;
}

const Catalogue& catalogue() {
    static const Catalogue cat = parse_catalogue(catalogue_text());
    return cat;
}

LeibnizAlgebra<Gaussian> inst(const std::string& ref) {
    auto [name, params] = parse_entry_ref(ref);
    return instantiate(catalogue().entry(name), params);
}

void BM_ParseCatalogue(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parse_catalogue(catalogue_text()));
}
BENCHMARK(BM_ParseCatalogue)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalogue(benchmark::State& state) {
    const auto digest = content_digest(catalogue_text());
    for (auto _ : state) {
        auto run = verify_catalogue(catalogue(), digest, std::nullopt, 3, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(run.failures());
    }
}
BENCHMARK(BM_VerifyCatalogue)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Signature(benchmark::State& state) {
    auto a = inst("A_250:alpha=2");
    for (auto _ : state) benchmark::DoNotOptimize(signature(a));
}
BENCHMARK(BM_Signature)->Unit(benchmark::kMicrosecond);

void BM_CheckLeibniz(benchmark::State& state) {
    auto a = inst("A_82:alpha=1,beta=2,gamma=3");
    for (auto _ : state) benchmark::DoNotOptimize(check_leibniz(a).ok);
}
BENCHMARK(BM_CheckLeibniz)->Unit(benchmark::kMicrosecond);

void BM_Canonicalize(benchmark::State& state) {
    auto m = Matrix<Gaussian>::from_rows({{Gaussian(3), Gaussian(1, 2)}, {Gaussian(-1), Gaussian(5)}}, 2, Gaussian());
    for (auto _ : state) benchmark::DoNotOptimize(congruence_canonical(m).kind.tag);
}
BENCHMARK(BM_Canonicalize)->Unit(benchmark::kMicrosecond);

// Search plus exact lift for isomorphic pairs, and a full exhaustive run mod 13.
void BM_SearchAndCertify(benchmark::State& state, const char* x, const char* y) {
    auto a = inst(x), b = inst(y);
    for (auto _ : state) benchmark::DoNotOptimize(search_and_certify(a, b, SearchConfig{}).verdict);
}
BENCHMARK_CAPTURE(BM_SearchAndCertify, a5_sign, "A_5:alpha=2", "A_5:alpha=-2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SearchAndCertify, a17_inverse, "A_17:alpha=2", "A_17:alpha=1/2")->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSearch(benchmark::State& state) {
    auto a = inst("A_22"), b = inst("A_30");
    SearchConfig cfg;
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(adapted_search(a, b, cfg).candidates);
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
