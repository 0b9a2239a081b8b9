#include "leibcheck/isomorphism.hpp"
#include "leibcheck/witness.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace leibcheck;
using testing_support::algebra;
using testing_support::catalogue;

namespace {

using GMat = Matrix<Gaussian>;

GMat diag(std::initializer_list<long> d) {
    GMat m(d.size(), d.size(), Gaussian());
    std::size_t k = 0;
    for (long v : d) m(k, k) = Gaussian(v), ++k;
    return m;
}

const std::vector<WitnessFixture>& fixtures() {
    static const auto f = load_fixtures(std::string(LEIBCHECK_DATA_DIR) + "/witnesses.json");
    return f;
}

SearchConfig quick(unsigned threads = 0) {
    SearchConfig cfg;
    cfg.candidate_cap = 1'000'000;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

TEST(VerifyWitness, SignChangeOnA5) {
    auto a = algebra("A_5:alpha=2");
    auto b = algebra("A_5:alpha=-2");
    EXPECT_TRUE(verify_witness(a, b, diag({-1, -1, 1, -1, 1})).ok);
    auto res = verify_witness(a, b, GMat::identity(5, Gaussian()));
    EXPECT_FALSE(res.ok);
    EXPECT_FALSE(res.singular);
    EXPECT_FALSE(is_zero_vector(res.defect));
}

TEST(VerifyWitness, SingularAndShape) {
    auto a = algebra("A_1");
    auto res = verify_witness(a, a, diag({1, 1, 1, 1, 0}));
    EXPECT_FALSE(res.ok);
    EXPECT_TRUE(res.singular);
    EXPECT_THROW((void)verify_witness(a, a, diag({1, 1})), Error);
}

TEST(VerifyWitness, RoundTripLaw) {
    std::mt19937_64 rng(5);
    for (const char* ref : {"A_1", "A_5:alpha=3", "A_17:alpha=2", "A_82:alpha=1,beta=2,gamma=0", "A_246a"}) {
        auto a = algebra(ref);
        for (int t = 0; t < 5; ++t) {
            auto p = testing_support::random_invertible(5, rng);
            EXPECT_TRUE(verify_witness(base_change(a, p), a, p).ok) << ref;
        }
    }
}

TEST(VerifyWitness, CompositionLaw) {
    std::mt19937_64 rng(6);
    for (const char* ref : {"A_1", "A_16", "A_250:alpha=2"}) {
        auto a = algebra(ref);
        auto p = testing_support::random_invertible(5, rng);
        auto q = testing_support::random_invertible(5, rng);
        auto b = base_change(a, p);  // b -> a by p
        auto c = base_change(b, q);  // c -> b by q
        ASSERT_TRUE(verify_witness(b, a, p).ok);
        ASSERT_TRUE(verify_witness(c, b, q).ok);
        EXPECT_TRUE(verify_witness(c, a, p * q).ok) << ref;
        EXPECT_FALSE(verify_witness(c, a, q * p).ok && !(p * q == q * p)) << ref;
    }
}

// The exact fixtures composed with a change of basis on the target side.
TEST(Fixtures, ComposeWithBaseChange) {
    std::mt19937_64 rng(7);
    std::size_t composed = 0;
    for (const auto& f : fixtures()) {
        if (f.mode != FixtureMode::Exact || !f.expect_ok) continue;
        auto a = build_algebra_ext(catalogue(), f.source);
        auto b = build_algebra_ext(catalogue(), f.target);
        auto w = fixture_matrix(f);
        ASSERT_TRUE(verify_witness(a, b, w).ok) << f.name;
        auto r = map_matrix(testing_support::random_invertible(5, rng), QuadExt(), [](const Gaussian& g) { return QuadExt(g); });
        auto c = base_change(b, r);
        ASSERT_TRUE(verify_witness(b, c, invert(r)).ok) << f.name;
        EXPECT_TRUE(verify_witness(a, c, invert(r) * w).ok) << f.name;
        ++composed;
    }
    EXPECT_GE(composed, 10u);
}

TEST(Fixtures, AllBehaveAsExpected) {
    ASSERT_GE(fixtures().size(), 20u);
    for (const auto& f : fixtures()) {
        auto r = check_fixture(catalogue(), f);
        EXPECT_TRUE(r.matches()) << f.name << ": " << r.detail;
        if (f.mode == FixtureMode::Exact && r.ok) EXPECT_TRUE(r.exact) << f.name;
    }
}

TEST(Reduce, ModThirteen) {
    auto a = reduce_algebra(algebra("A_250:alpha=2"), 13);
    // [x2,x1] = -x4 - (1/2 + 2) x5 and 1/2 = 7 mod 13
    EXPECT_EQ(a.product(1, 0)[3], PrimeFieldElem(12, 13));
    EXPECT_EQ(a.product(1, 0)[4], -(PrimeFieldElem(7, 13) + PrimeFieldElem(2, 13)));
    EXPECT_THROW((void)reduce_algebra(algebra("A_17:alpha=1/13"), 13).dim(), Error);
    EXPECT_EQ(next_prime_1mod4(13), 17u);
    EXPECT_EQ(next_prime_1mod4(17), 29u);
}

TEST(Search, SignChangeIsFoundAndLifted) {
    auto a = algebra("A_5:alpha=2");
    auto b = algebra("A_5:alpha=-2");
    auto res = adapted_search(a, b, quick());
    ASSERT_EQ(res.status, SearchStatus::Found);
    auto w = res.first();
    auto lifted = lift_witness(*w, a, b, quick());
    ASSERT_TRUE(lifted.has_value());
    EXPECT_TRUE(verify_witness(a, b, *lifted).ok);

    auto out = search_and_certify(a, b, quick());
    EXPECT_EQ(out.verdict, IsoVerdict::Certified);
    ASSERT_TRUE(out.exact.has_value());
    EXPECT_TRUE(verify_witness(a, b, *out.exact).ok);
}

TEST(Search, ConjugateIsFound) {
    auto a = algebra("A_16");
    GMat p = GMat::identity(5, Gaussian());
    p(1, 0) = Gaussian(1);
    p(3, 2) = Gaussian::i();
    p(4, 1) = Gaussian(-2);
    auto b = base_change(a, p);
    auto out = search_and_certify(a, b, quick());
    EXPECT_EQ(out.verdict, IsoVerdict::Certified) << out.note;
    if (out.exact) EXPECT_TRUE(verify_witness(a, b, *out.exact).ok);

    // a messy conjugation still has witnesses modulo both primes, whether or not they lift
    std::mt19937_64 rng(11);
    auto c = base_change(a, testing_support::random_invertible(5, rng));
    auto messy = search_and_certify(a, c, quick(), 2);
    EXPECT_TRUE(messy.verdict == IsoVerdict::Certified || messy.verdict == IsoVerdict::FiniteFieldEvidence) << messy.note;
}

TEST(Search, DifferentSignaturesNeedNoSearch) {
    auto out = search_and_certify(algebra("A_1"), algebra("A_16"), quick());
    EXPECT_EQ(out.verdict, IsoVerdict::NonIsomorphic);
    EXPECT_EQ(out.candidates, 0u);
}

TEST(Search, NonIsomorphicPairIsNotFound) {
    // same signature, different algebras: the search has to run dry
    auto res = adapted_search(algebra("A_22"), algebra("A_30"), quick());
    EXPECT_EQ(res.status, SearchStatus::Exhausted);
    auto out = search_and_certify(algebra("A_22"), algebra("A_30"), quick());
    EXPECT_NE(out.verdict, IsoVerdict::Certified);
    EXPECT_NE(out.verdict, IsoVerdict::FiniteFieldEvidence);
}

TEST(Search, CapIsHonoured) {
    SearchConfig cfg = quick();
    cfg.candidate_cap = 5;
    auto res = adapted_search(algebra("A_5:alpha=2"), algebra("A_5:alpha=-2"), cfg);
    EXPECT_EQ(res.status, SearchStatus::CapReached);
    EXPECT_LE(res.candidates, 5u);
}

TEST(Search, DeterministicAcrossThreadCounts) {
    auto a = algebra("A_17:alpha=2");
    auto b = algebra("A_17:alpha=1/2");
    auto one = adapted_search(a, b, quick(1));
    for (unsigned t : {2u, 4u, 8u}) {
        auto many = adapted_search(a, b, quick(t));
        EXPECT_EQ(many.status, one.status);
        EXPECT_EQ(many.candidates, one.candidates) << t << " threads";
        ASSERT_EQ(many.witnesses.size(), one.witnesses.size());
        for (std::size_t k = 0; k < one.witnesses.size(); ++k) EXPECT_EQ(many.witnesses[k], one.witnesses[k]);
    }
    SearchConfig capped = quick(1);
    capped.candidate_cap = 20;
    auto c1 = adapted_search(algebra("A_5:alpha=2"), algebra("A_5:alpha=-2"), capped);
    capped.threads = 6;
    auto c6 = adapted_search(algebra("A_5:alpha=2"), algebra("A_5:alpha=-2"), capped);
    EXPECT_EQ(c1.status, c6.status);
    EXPECT_EQ(c1.candidates, c6.candidates);
}
