#include "cohere/linear_category.hpp"
#include "cohere/linrep.hpp"

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

Matrix<Q> perm(std::size_t n, std::size_t shift) {
    Matrix<Q> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m((i + shift) % n, i) = 1;
    return m;
}

RepPtr<Q> regular(std::size_t n) {
    auto b = delooping(cyclic_group(n));
    std::vector<Matrix<Q>> mats;
    for (std::size_t k = 0; k < n; ++k) mats.push_back(perm(n, k));
    return group_rep<Q>(b, n, mats, "reg");
}

// dimension of the commutant, spanned by group averages of the matrix units
std::size_t commutant_dim_by_span(const RepPtr<Q>& r) {
    std::size_t d = r->dim[0];
    std::vector<std::vector<Q>> found;
    for (std::size_t e = 0; e < d * d; ++e) {
        // project unit matrix E_e onto the commutant by averaging
        Matrix<Q> acc(d, d);
        Matrix<Q> E(d, d);
        E(e / d, e % d) = 1;
        for (const auto& g : r->mat) acc = acc + inverse(g) * E * g;
        found.push_back(acc.data());
    }
    Matrix<Q> T(d * d, found.size());
    for (std::size_t k = 0; k < found.size(); ++k)
        for (std::size_t i = 0; i < d * d; ++i) T(i, k) = found[k][i];
    return rank(T);
}

}  // namespace

TEST(Rep, RegularZ3Valid) {
    auto r = regular(3);
    // all 9 composition equations
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(r->mat[(a + b) % 3], r->mat[a] * r->mat[b]);
}

TEST(Rep, ValidationErrors) {
    auto b = delooping(cyclic_group(2));
    Matrix<Q> z(1, 1);
    EXPECT_EQ(error_kind([&] { rep_validate<Q>(b, {1}, {Matrix<Q>::identity(1), z}); }), "NotInvertible");
    EXPECT_EQ(error_kind([&] { rep_validate<Q>(b, {1}, {Matrix<Q>::identity(1), Matrix<Q>::scalar(1, Q(2))}); }),
              "NotFunctorial");
    EXPECT_EQ(error_kind([&] { rep_validate<Q>(b, {2}, {Matrix<Q>::identity(1), Matrix<Q>::identity(1)}); }),
              "DimMismatch");
}

TEST(HomSpace, TrivialOnConnectedGroupoid) {
    auto g = codiscrete_groupoid({"x", "y", "z"});
    auto t = trivial_rep<Q>(g);
    EXPECT_EQ(hom_space_basis(t, t).size(), 1u);
}

TEST(HomSpace, RegularZ3EndomorphismsMatchAveraging) {
    auto r = regular(3);
    auto basis = hom_space_basis(r, r);
    EXPECT_EQ(basis.size(), 3u);
    EXPECT_EQ(basis.size(), commutant_dim_by_span(r));
    for (const auto& f : basis) EXPECT_NO_THROW(rep_hom_validate(f));
}

TEST(HomSpace, CompositionIsBilinear) {
    auto r = regular(3);
    auto B = hom_space_basis(r, r);
    Q c(3, 7);
    for (const auto& f : B)
        for (const auto& g : B)
            for (const auto& h : B) {
                EXPECT_EQ(compose(f, g + c * h), compose(f, g) + c * compose(f, h));
                EXPECT_EQ(compose(g + c * h, f), compose(g, f) + c * compose(h, f));
            }
}

TEST(HomSpace, DirectSumWithZero) {
    auto r = regular(3);
    auto z = zero_rep<Q>(r->gpd);
    auto s = direct_sum(r, z);
    EXPECT_EQ(s->dim, r->dim);
    EXPECT_EQ(s->mat, r->mat);
    EXPECT_EQ(hom_space_basis(r, s).size(), 3u);
}

TEST(HomSpace, CoordinatesAgreeWithDirectSolve) {
    auto r = regular(4);
    auto hs = hom_space(r, r);
    ASSERT_EQ(hs.dim(), 4u);
    // every small integer combination reads back, and matches solving the full system
    for (int a = -1; a <= 1; ++a)
        for (int b = 0; b <= 2; ++b) {
            std::vector<Q> c{Q(a), Q(b), Q(a - b), Q(1, 3)};
            auto f = hs.combine(c);
            EXPECT_EQ(hs.coordinates(f), c);
            std::vector<Q> v(f.comp[0].data().begin(), f.comp[0].data().end());
            EXPECT_EQ(*solve(hs.columns, v), c);
        }
    // a non-intertwiner is rejected
    RepMorphism<Q> g{r, r, {Matrix<Q>(4, 4)}};
    g.comp[0](0, 1) = 1;
    EXPECT_FALSE(solve(hs.columns, std::vector<Q>(g.comp[0].data().begin(), g.comp[0].data().end())));
    EXPECT_EQ(error_kind([&] { hs.coordinates(g); }), "NotInHomSpace");
}

TEST(HomSpace, GroupoidMismatch) {
    auto a = trivial_rep<Q>(delooping(cyclic_group(2)));
    auto b = trivial_rep<Q>(delooping(cyclic_group(2)));
    EXPECT_EQ(error_kind([&] { hom_space_basis(a, b); }), "GroupoidMismatch");
}

TEST(KernelCokernel, AugmentationOfRegularZ2) {
    auto r = regular(2);
    auto t = trivial_rep<Q>(r->gpd);
    RepMorphism<Q> aug{r, t, {Matrix<Q>(1, 2, {Q(1), Q(1)})}};
    auto kc = kernel_cokernel(aug);
    ASSERT_EQ(kc.kernel->dim[0], 1u);
    EXPECT_EQ(kc.kernel->mat[1](0, 0), Q(-1));
    EXPECT_EQ(kc.cokernel->dim[0], 0u);
    EXPECT_TRUE(compose(aug, kc.mono).comp[0].is_zero());
}

TEST(KernelCokernel, ZeroAndIdentity) {
    auto r = regular(3);
    auto z = kernel_cokernel(zero_morphism(r, r));
    EXPECT_EQ(z.kernel->mat, r->mat);
    EXPECT_EQ(z.cokernel->dim[0], 3u);
    auto i = kernel_cokernel(identity_morphism(r));
    EXPECT_EQ(i.kernel->dim[0], 0u);
    EXPECT_EQ(i.cokernel->dim[0], 0u);
}

TEST(KernelCokernel, NonConstantRank) {
    // discrete groupoid on two objects; f is 1 at x and 0 at y
    auto g = action_groupoid(translation_action(trivial_hom(trivial_group(), cyclic_group(2))));
    auto t = trivial_rep<Q>(g);
    RepMorphism<Q> f{t, t, {Matrix<Q>::identity(1), Matrix<Q>(1, 1)}};
    EXPECT_EQ(error_kind([&] { kernel_cokernel(f); }), "NonConstantRank");
}

TEST(KernelCokernel, PermutationRepOfZ2OnActionGroupoidSplits) {
    // Z/2 acting on itself: the regular rep pulled to the action groupoid splits as trivial + sign
    auto r = regular(2);
    auto B = hom_space_basis(r, r);
    ASSERT_EQ(B.size(), 2u);
    Matrix<Q> p(2, 2, {Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2)});
    RepMorphism<Q> e{r, r, {p}};
    EXPECT_NO_THROW(rep_hom_validate(e));
    auto kc = kernel_cokernel(e);
    EXPECT_EQ(kc.kernel->dim[0] + kc.cokernel->dim[0], 2u);
}

TEST(LinearCategory, RestrictedHomSpaceAndFunctor) {
    auto r = regular(3);
    auto c = linear_category<Q>({r});
    EXPECT_EQ(c->hom(0, 0).dim(), 3u);
    auto c1 = linear_category<Q>({r}, {Matrix<Q>::identity(3)});
    EXPECT_EQ(c1->hom(0, 0).dim(), 1u);
    auto id = identity_functor(c);
    EXPECT_TRUE(functor_failures(*id).empty());
    auto tw = compose(id, id);
    EXPECT_TRUE(*tw == *id);
    EXPECT_TRUE(nat_failures(identity_nat(id)).empty());
    // a non-natural family
    LinearNat<Q> bad{id, id, {RepMorphism<Q>{r, r, {Matrix<Q>(3, 3, {Q(1), 0, 0, 0, 0, 0, 0, 0, 0})}}}};
    EXPECT_FALSE(nat_failures(bad).empty());
}
