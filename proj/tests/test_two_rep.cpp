#include "cohere/fixtures.hpp"
#include "cohere/two_rep.hpp"

#include <gtest/gtest.h>

using namespace cohere;
using Q = Rational;

namespace {

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

void expect_all_pass(const std::vector<AuditReport>& reps) {
    for (const auto& r : reps) {
        EXPECT_TRUE(r.passed()) << r.law << ": " << (r.failures.empty() ? "" : r.failures[0].instance);
    }
}

bool any_instance_contains(const AuditReport& r, const std::string& s) {
    for (const auto& c : r.failures)
        if (c.instance.find(s) != std::string::npos) return true;
    return false;
}

TwoRepPtr<Q> inner_s3_crossed() {
    auto s = strict_two_group(xm_inner_s3());
    return crossed_2rep<Q>(s, s3_reps<Q>(delooping(s.xm.H)));
}

}  // namespace

TEST(Crossed2Rep, InnerS3AllLawsPass) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = crossed_2rep<Q>(s, s3_reps<Q>(delooping(s.xm.H)));
    // trivial, sign and the six conjugates of the standard rep
    EXPECT_EQ(A->carrier->size(), 8u);
    expect_all_pass(two_rep_audit(*A));
}

TEST(Crossed2Rep, EtaIsEquivariant) {
    // eta(h' . v) = h' .' eta(v), with . the action of rho o alpha(g) and .' of rho o alpha(tgt)
    auto s = strict_two_group(xm_inner_s3());
    auto A = crossed_2rep<Q>(s, s3_reps<Q>(delooping(s.xm.H)));
    const auto& H = *s.xm.H;
    const auto& G = *s.tg->gpd;
    for (std::size_t p = 0; p < s.tg->N(); ++p)
        for (std::size_t i = 0; i < A->carrier->size(); ++i) {
            const auto& rho = *A->carrier->objs[i];
            const auto& e = A->eta[p].comp[i].comp[0];
            std::size_t g = G.src[p], g2 = G.tgt[p];
            for (std::size_t h = 0; h < H.order(); ++h)
                EXPECT_EQ(e * rho.mat[s.xm.action(g, h)], rho.mat[s.xm.action(g2, h)] * e);
        }
}

TEST(Crossed2Rep, EtaInterchange) {
    // both whiskering orders of eta_p and eta_q equal eta_{p x q}
    auto A = inner_s3_crossed();
    const auto& t = *A->tg;
    const auto& G = *t.gpd;
    for (std::size_t p = 0; p < t.N(); ++p)
        for (std::size_t q = 0; q < t.N(); ++q) {
            std::size_t g = G.src[p], h = G.src[q], g2 = G.tgt[p], h2 = G.tgt[q];
            auto one = horizontal(A->eta[p], A->eta[q], A->FF_at(g, h), A->FF_at(g2, h2));
            for (std::size_t i = 0; i < A->carrier->size(); ++i) {
                // F'_g(eta_q) o eta_p at F_h
                std::size_t hi = A->F[h]->obj[i], h2i = A->F[h2]->obj[i];
                auto other = compose((*A->F[g2])(hi, h2i, A->eta[q].comp[i]), A->eta[p].comp[hi]);
                EXPECT_EQ(one.comp[i], other);
                EXPECT_EQ(one.comp[i], A->eta[t.tensor_arr(p, q)].comp[i]);
            }
        }
}

TEST(Crossed2Rep, TrivialHGivesIdentityStructure) {
    auto s = strict_two_group(xm_discrete(cyclic_group(3)));
    auto A = crossed_2rep<Q>(s, {trivial_rep<Q>(delooping(s.xm.H))});
    for (const auto& e : A->eta)
        for (const auto& c : e.comp) EXPECT_TRUE(c.comp[0].is_identity());
    expect_all_pass(two_rep_audit(*A));
}

TEST(Crossed2Rep, RepNotOfH) {
    auto s = strict_two_group(xm_inner_s3());
    EXPECT_EQ(error_kind([&] { crossed_2rep<Q>(s, {trivial_rep<Q>(delooping(cyclic_group(6)))}); }), "RepNotOfH");
}

TEST(Canonical2Rep, TrivialRepOnStrictIsIdentity) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = canonical_2rep<Q>(s.tg, std::vector<RepPtr<Q>>{trivial_rep<Q>(s.tg->gpd)});
    for (const auto& F : A->F) EXPECT_EQ(F->obj[0], 0u);
    for (const auto& e : A->eta) EXPECT_TRUE(e.comp[0] == identity_morphism(A->carrier->objs[0]));
    for (const auto& p : A->phi) EXPECT_TRUE(p.comp[0] == identity_morphism(A->carrier->objs[0]));
    expect_all_pass(two_rep_audit(*A));
}

TEST(Canonical2Rep, Z3InversionNineCharacters) {
    auto s = strict_two_group(xm_z3_inversion());
    auto chars = z3_characters(s);
    auto A = canonical_2rep<QOmega>(s.tg, chars);
    // the nontrivial object swaps the two characters
    for (std::size_t c0 = 0; c0 < 3; ++c0)
        for (std::size_t c1 = 0; c1 < 3; ++c1) EXPECT_EQ(A->F[1]->obj[c0 * 3 + c1], c1 * 3 + c0);
    auto reps = two_rep_audit(*A);
    expect_all_pass(reps);
    EXPECT_EQ(find_law(reps, "hexagon")->instances, 8u * 9);
}

TEST(Canonical2Rep, NotClosed) {
    auto s = strict_two_group(xm_z3_inversion());
    auto chars = z3_characters(s);
    EXPECT_EQ(error_kind([&] { canonical_2rep<QOmega>(s.tg, std::vector<RepPtr<QOmega>>{chars[1]}); }),
              "NotClosedUnderFg");
    auto closed = orbit_closure(*s.tg, std::vector<RepPtr<QOmega>>{chars[1]});
    EXPECT_EQ(closed.size(), 2u);
    EXPECT_NO_THROW(canonical_2rep<QOmega>(s.tg, closed));
}

TEST(Canonical2Rep, TransferredFixtureHasNonidentityPhi) {
    auto d = doubled_z3_inversion();
    auto s = strict_two_group(xm_z3_inversion());
    std::vector<RepPtr<QOmega>> seed;
    for (const auto& c : z3_characters(s)) seed.push_back(pullback_rep(d.qi.xi, *c));
    auto A = canonical_2rep<QOmega>(d.tg, orbit_closure(*d.tg, seed));
    bool nonid = false;
    for (const auto& p : A->phi)
        for (std::size_t i = 0; i < p.comp.size(); ++i) nonid = nonid || !(p.comp[i] == identity_morphism(A->carrier->objs[i]));
    EXPECT_TRUE(nonid);
    expect_all_pass(two_rep_audit(*A));
}

TEST(TwoRepAudit, CorruptEtaNamesArrow) {
    auto A = inner_s3_crossed();
    const auto& t = *A->tg;
    auto B = std::make_shared<TwoRepresentation<Q>>(*A);
    std::size_t p = 7;  // a non-identity arrow
    ASSERT_FALSE(t.gpd->is_identity(p));
    for (auto& c : B->eta[p].comp)
        for (auto& m : c.comp) m = Matrix<Q>::scalar(m.rows(), Q(2)) * m;
    auto reps = two_rep_audit(*B);
    const auto* f = find_law(reps, "functoriality");
    EXPECT_FALSE(f->passed());
    EXPECT_TRUE(any_instance_contains(*f, t.al(p)));
    EXPECT_TRUE(find_law(reps, "psi_naturality")->passed());
}

TEST(Transformation, IdentityPasses) {
    auto A = inner_s3_crossed();
    expect_all_pass(transformation_audit(identity_transformation(A)));
}

TEST(Transformation, CorruptComponentNamesPair) {
    auto A = inner_s3_crossed();
    auto T = identity_transformation(A);
    const auto& t = *A->tg;
    std::size_t g0 = 3;
    auto& c = T.Tg[g0].comp[0];
    c.comp[0] = Matrix<Q>::scalar(1, Q(5));
    auto reps = transformation_audit(T);
    const auto* a1 = find_law(reps, "phi_compat");
    EXPECT_FALSE(a1->passed());
    EXPECT_TRUE(any_instance_contains(*a1, "(" + t.ol(g0) + ","));
}

TEST(Embed, SignRepOfZ2) {
    auto s = strict_two_group(xm_z2_trivial_on_z2());
    auto bh = delooping(s.xm.H);
    auto sign = group_rep<Q>(bh, 1, {Matrix<Q>::scalar(1, Q(1)), Matrix<Q>::scalar(1, Q(-1))}, "sign");
    auto A = embed_rep<Q>(s, sign);
    EXPECT_EQ(A->carrier->size(), 1u);
    expect_all_pass(two_rep_audit(*A));
    auto T = embed_rep_morphism<Q>(A, A, Matrix<Q>::scalar(1, Q(2)));
    expect_all_pass(transformation_audit(T));
    for (const auto& n : T.Tg) EXPECT_TRUE(n.comp[0].comp[0].is_identity());
}

TEST(Embed, TrivialRepFixesUniqueFunctor) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = embed_rep<Q>(s, trivial_rep<Q>(delooping(s.xm.H)));
    for (const auto& F : A->F) EXPECT_EQ(F->obj[0], 0u);
    expect_all_pass(two_rep_audit(*A));
}

TEST(Embed, NotIntertwiner) {
    auto s = strict_two_group(xm_z2_trivial_on_z2());
    auto bh = delooping(s.xm.H);
    auto reg = group_rep<Q>(bh, 2, {Matrix<Q>::identity(2), Matrix<Q>(2, 2, {Q(0), Q(1), Q(1), Q(0)})}, "reg");
    auto A = embed_rep<Q>(s, reg);
    try {
        embed_rep_morphism<Q>(A, A, Matrix<Q>(2, 2, {Q(1), Q(0), Q(0), Q(0)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotIntertwiner");
        EXPECT_NE(std::string(e.what()).find("1"), std::string::npos);
    }
}

TEST(Embed, PreservesIdentityAndComposition) {
    auto s = strict_two_group(xm_z2_trivial_on_z2());
    auto bh = delooping(s.xm.H);
    Matrix<Q> P(2, 2, {Q(0), Q(1), Q(1), Q(0)});
    auto reg = group_rep<Q>(bh, 2, {Matrix<Q>::identity(2), P}, "reg");
    auto triv = trivial_rep<Q>(bh);
    auto R = embed_rep<Q>(s, reg);
    auto T1 = embed_rep<Q>(s, triv);
    auto idR = embed_rep_morphism<Q>(R, R, Matrix<Q>::identity(2));
    EXPECT_TRUE(same_transformation(idR, identity_transformation(R)));
    auto w = embed_rep_morphism<Q>(R, R, P);
    auto aug = embed_rep_morphism<Q>(R, T1, Matrix<Q>(1, 2, {Q(1), Q(1)}));
    expect_all_pass(transformation_audit(w));
    expect_all_pass(transformation_audit(aug));
    auto whole = embed_rep_morphism<Q>(R, T1, Matrix<Q>(1, 2, {Q(1), Q(1)}) * P);
    EXPECT_TRUE(same_transformation(whole, compose(aug, w)));
    // trivial -> regular collapses a relation that regular does not satisfy
    EXPECT_EQ(error_kind([&] { embed_rep_morphism<Q>(T1, R, Matrix<Q>(2, 1, {Q(1), Q(1)})); }), "FunctorNotWellDefined");
}

TEST(Embed, StandardRepOfS3) {
    auto s = strict_two_group(xm_inner_s3());
    auto reps = s3_reps<Q>(delooping(s.xm.H));
    auto A = embed_rep<Q>(s, reps[2]);
    // connected groupoid with trivial vertex groups: End is all of M_2
    EXPECT_EQ(A->carrier->hom(0, 0).dim(), 4u);
    expect_all_pass(two_rep_audit(*A));
}

TEST(Adjoint, IdentityReturnsInput) {
    auto A = inner_s3_crossed();
    auto B = adjoint_pullback(identity_automorphism(A->tg), A);
    EXPECT_TRUE(same_two_rep(*A, *B));
}

TEST(Adjoint, TranspositionTwiceIsIdentity) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = crossed_2rep<Q>(s, s3_reps<Q>(delooping(s.xm.H)));
    auto alpha = inner_automorphism(s, s.xm.H->index("102"));
    auto B = adjoint_pullback(alpha, A);
    expect_all_pass(two_rep_audit(*B));
    EXPECT_FALSE(same_two_rep(*A, *B));
    EXPECT_TRUE(same_two_rep(*A, *adjoint_pullback(alpha, B)));
}

TEST(Adjoint, CompositionLaw) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = crossed_2rep<Q>(s, s3_reps<Q>(delooping(s.xm.H)));
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t k2 = 0; k2 < 6; ++k2) {
            auto a = inner_automorphism(s, k), b = inner_automorphism(s, k2);
            EXPECT_TRUE(same_two_rep(*adjoint_pullback(compose(a, b), A), *adjoint_pullback(a, adjoint_pullback(b, A))));
        }
}

TEST(Adjoint, RejectsForeignAutomorphism) {
    auto s = strict_two_group(xm_inner_s3());
    auto other = strict_two_group(xm_inner_s3());
    auto A = inner_s3_crossed();
    EXPECT_EQ(error_kind([&] { adjoint_pullback(identity_automorphism(other.tg), A); }), "NotAutomorphism");
}

TEST(Adjoint, FixedPointMorphismForEmbeddedReps) {
    auto s = strict_two_group(xm_inner_s3());
    for (const auto& z : s3_reps<Q>(delooping(s.xm.H))) {
        auto A = embed_rep<Q>(s, z);
        for (std::size_t k = 0; k < 6; ++k) {
            auto B = adjoint_pullback(inner_automorphism(s, k), A);
            auto [there, back] = fixed_point_morphism<Q>(s, k, A, B);
            expect_all_pass(transformation_audit(there));
            expect_all_pass(transformation_audit(back));
            EXPECT_TRUE(same_transformation(compose(back, there), identity_transformation(A)));
            EXPECT_TRUE(same_transformation(compose(there, back), identity_transformation(B)));
        }
    }
}
