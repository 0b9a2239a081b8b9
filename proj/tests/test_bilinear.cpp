#include "leibcheck/bilinear.hpp"
#include "leibcheck/error.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace leibcheck;
using testing_support::algebra;

namespace {

GMatrix m2(Gaussian a, Gaussian b, Gaussian c, Gaussian d) { return GMatrix::from_rows({{a, b}, {c, d}}, 2, Gaussian()); }

bool det2_is_zero(const QMatrix& q) { return (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0)).is_zero(); }

QMatrix lift(const GMatrix& m) { return map_matrix(m, QuadExt(), [](const Gaussian& g) { return QuadExt(g); }); }

void expect_certified(const GMatrix& m, const Canonicalization& c) {
    EXPECT_EQ(c.q.transpose() * lift(m) * c.q, canonical_matrix(c.kind)) << m.to_string() << " -> " << c.kind.to_string();
    EXPECT_FALSE(det2_is_zero(c.q));
}

}  // namespace

TEST(Canonical, ListedMatricesAreFixedPoints) {
    const QMatrix id = QMatrix::identity(2, QuadExt());
    struct Case {
        GMatrix m;
        FormKind kind;
    };
    std::vector<Case> cases = {
        {m2(0, 1, -1, 0), FormKind::Skew_i},
        {m2(1, 0, 0, 0), FormKind::SymRank1_ii},
        {m2(1, 0, 0, 1), FormKind::SymRank2_iii},
        {m2(0, 1, -1, 1), FormKind::Mixed_iv},
        {m2(0, 1, 3, 0), FormKind::MixedC_v},
    };
    for (const auto& c : cases) {
        auto res = congruence_canonical(c.m);
        EXPECT_EQ(res.kind.tag, c.kind) << c.m.to_string();
        EXPECT_EQ(res.q, id) << c.m.to_string();
        expect_certified(c.m, res);
    }
}

TEST(Canonical, ZeroForm) {
    auto res = congruence_canonical(m2(0, 0, 0, 0));
    EXPECT_EQ(res.kind.tag, FormKind::Zero);
    EXPECT_EQ(res.q, QMatrix::identity(2, QuadExt()));
}

TEST(Canonical, MixedCChoosesTwo) {
    GMatrix m = m2(0, 2, 4, 0);
    auto res = congruence_canonical(m);
    ASSERT_EQ(res.kind.tag, FormKind::MixedC_v);
    ASSERT_TRUE(res.kind.c.has_value());
    EXPECT_EQ(*res.kind.c, QuadExt(2));
    expect_certified(m, res);
    EXPECT_EQ(res.kind.to_string(), "(v) c=2");
}

TEST(Canonical, DegenerateMixedIsKindVWithZero) {
    // S = [[1,1/2],[1/2,0]] is nondegenerate and the form has a null vector, so (v) with c = 0
    GMatrix m = m2(1, 1, 0, 0);
    auto res = congruence_canonical(m);
    ASSERT_EQ(res.kind.tag, FormKind::MixedC_v);
    EXPECT_TRUE(res.kind.c->is_zero());
    expect_certified(m, res);
}

TEST(Canonical, SymmetricRankTwoNeedsRoots) {
    GMatrix m = m2(2, 0, 0, 3);
    auto res = congruence_canonical(m);
    EXPECT_EQ(res.kind.tag, FormKind::SymRank2_iii);
    EXPECT_TRUE(res.extension.has_value());
    expect_certified(m, res);
}

TEST(Canonical, RandomFormsAreCertified) {
    std::mt19937_64 rng(99);
    auto small = [&] { return Gaussian(Rational(static_cast<long>(rng() % 7) - 3), Rational(rng() % 3 == 0 ? 1 : 0)); };
    int seen_v = 0, seen_iv = 0;
    for (int t = 0; t < 400; ++t) {
        GMatrix m = m2(small(), small(), small(), small());
        Canonicalization res;
        try {
            res = congruence_canonical(m);
        } catch (const Error& e) {
            // two different square roots would be needed; the canonicalizer must say so rather than guess
            EXPECT_EQ(e.code(), Errc::FieldMismatch) << m.to_string();
            continue;
        }
        expect_certified(m, res);
        EXPECT_EQ(symmetric_rank(m), rank(canonical_matrix(res.kind) + canonical_matrix(res.kind).transpose()));
        if (res.kind.tag == FormKind::MixedC_v) ++seen_v;
        if (res.kind.tag == FormKind::Mixed_iv) ++seen_iv;
    }
    EXPECT_GT(seen_v, 0);
    EXPECT_GT(seen_iv, 0);
}

TEST(Canonical, RanksAreCongruenceInvariants) {
    std::mt19937_64 rng(17);
    auto small = [&] { return Gaussian(Rational(static_cast<long>(rng() % 9) - 4)); };
    for (int t = 0; t < 200; ++t) {
        GMatrix m = m2(small(), small(), small(), small());
        GMatrix q = m2(small(), small(), small(), small());
        if (!is_invertible(q)) continue;
        GMatrix moved = q.transpose() * m * q;
        EXPECT_EQ(symmetric_rank(moved), symmetric_rank(m));
        EXPECT_EQ(skew_rank(moved), skew_rank(m));
        EXPECT_TRUE(congruent(moved, m)) << m.to_string() << " " << congruence_canonical(m).kind.to_string() << " vs "
                                         << moved.to_string() << " " << congruence_canonical(moved).kind.to_string();
    }
}

TEST(Congruent, Examples) {
    EXPECT_TRUE(congruent(m2(1, 0, 0, 1), m2(2, 0, 0, 3)));
    EXPECT_TRUE(congruent(m2(0, 1, 2, 0), m2(0, 1, Gaussian(Rational(1, 2)), 0)));
    EXPECT_FALSE(congruent(m2(0, 1, -1, 0), m2(1, 0, 0, 1)));
    EXPECT_FALSE(congruent(m2(0, 1, 2, 0), m2(0, 1, 3, 0)));
}

TEST(VForm, A1IsKindTwo) {
    auto vf = extract_v_form(algebra("A_1"));
    EXPECT_EQ(vf.m, m2(1, 0, 0, 0));
    EXPECT_EQ(congruence_canonical(vf.m).kind.tag, FormKind::SymRank1_ii);
}

TEST(VForm, A5IsKindThree) {
    for (const char* ref : {"A_5:alpha=0", "A_5:alpha=2", "A_5:alpha=i"}) {
        auto vf = extract_v_form(algebra(ref));
        EXPECT_EQ(vf.m, m2(1, 0, 0, 1)) << ref;
        EXPECT_EQ(congruence_canonical(vf.m).kind.tag, FormKind::SymRank2_iii) << ref;
    }
}

// The e_n coordinate of [u,v] depends on how the rest of A^2 is chosen, so the
// kind may change with the basis (A_1 can show up as (iv)); what must survive
// is that it is never skew.
TEST(VForm, NeverSkewInAnyBasis) {
    std::mt19937_64 rng(8);
    std::set<FormKind> seen;
    for (const char* ref : {"A_1", "A_5:alpha=3", "A_6", "A_12"}) {
        auto a = algebra(ref);
        for (int t = 0; t < 6; ++t) {
            auto b = base_change(a, testing_support::random_invertible(5, rng));
            ASSERT_TRUE(in_v_form_setting(b)) << ref;
            auto res = congruence_canonical(extract_v_form(b).m);
            EXPECT_NE(res.kind.tag, FormKind::Skew_i) << ref;
            seen.insert(res.kind.tag);
        }
    }
    EXPECT_GT(seen.size(), 1u);
}

TEST(VForm, HypothesesEnforced) {
    EXPECT_FALSE(in_v_form_setting(algebra("A_16")));  // dim A^2 = 4
    try {
        (void)extract_v_form(algebra("A_16"));
        FAIL() << "expected HypothesisViolation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::HypothesisViolation);
    }
}

TEST(VForm, NeverSkewOnTheCatalogue) {
    std::size_t in_setting = 0;
    for (const auto& e : testing_support::catalogue().entries)
        for (const auto& p : sample_params(e, 3)) {
            auto a = instantiate(e, p);
            if (!in_v_form_setting(a)) continue;
            ++in_setting;
            auto res = congruence_canonical(extract_v_form(a).m);
            EXPECT_NE(res.kind.tag, FormKind::Skew_i) << e.name;
        }
    EXPECT_GT(in_setting, 0u);
}
