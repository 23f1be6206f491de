#include "cohere/groupoid.hpp"

#include <gtest/gtest.h>

using namespace cohere;

namespace {

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

// Connected components by union-find over arrows.
std::size_t components(const FiniteGroupoid& g) {
    std::vector<std::size_t> p(g.num_objects());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); };
    for (std::size_t a = 0; a < g.num_arrows(); ++a) p[find(g.src[a])] = find(g.tgt[a]);
    std::size_t c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) c += find(i) == i;
    return c;
}

}  // namespace

TEST(Groupoid, DeloopingOfZ2) {
    auto g = delooping(cyclic_group(2));
    EXPECT_EQ(g->num_objects(), 1u);
    EXPECT_EQ(g->num_arrows(), 2u);
    EXPECT_EQ(g->inv(1), 1u);
}

TEST(Groupoid, ContractibleTwoObjects) {
    auto g = codiscrete_groupoid({"x", "y"});
    EXPECT_EQ(g->num_arrows(), 4u);
    EXPECT_EQ(g->hom(0, 1).size(), 1u);
    EXPECT_EQ(components(*g), 1u);
}

TEST(Groupoid, ValidationErrors) {
    // a: x -> y alone, no identities
    EXPECT_EQ(error_kind([] {
                  groupoid_validate({"x"}, {"e", "f"}, {0, 0}, {0, 0}, {0, 1, 1, 1});
              }),
              "MissingInverse");
    EXPECT_EQ(error_kind([] { groupoid_validate({"x"}, {"f"}, {0}, {0}, {kNone}); }), "BadComposition");
    // two loops at x, composition constant f: no unit
    EXPECT_EQ(error_kind([] { groupoid_validate({"x"}, {"e", "f"}, {0, 0}, {0, 0}, {1, 1, 1, 1}); }), "MissingIdentity");
}

TEST(ActionGroupoid, Z2OnZ2ByTranslation) {
    auto Z2 = cyclic_group(2);
    auto g = action_groupoid(translation_action(identity_hom(Z2)));
    ASSERT_EQ(g->num_arrows(), 4u);
    // brute-force: every (h, x) goes x -> h + x
    for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(g->tgt[a], ((a / 2) + g->src[a]) % 2);
    EXPECT_EQ(components(*g), 1u);
    EXPECT_EQ(g->hom(0, 1).size(), 1u);
}

TEST(ActionGroupoid, TrivialActorIsDiscrete) {
    auto Z4 = cyclic_group(4);
    auto g = action_groupoid(translation_action(trivial_hom(trivial_group(), Z4)));
    EXPECT_EQ(g->num_arrows(), 4u);
    EXPECT_EQ(components(*g), 4u);
}

TEST(ActionGroupoid, TrivialActionGivesTwoCopiesOfBZ2) {
    auto Z2 = cyclic_group(2);
    auto g = action_groupoid(translation_action(trivial_hom(Z2, Z2)));
    EXPECT_EQ(components(*g), 2u);
    EXPECT_EQ(g->hom(0, 0).size(), 2u);
    EXPECT_EQ(g->hom(1, 1).size(), 2u);
}

TEST(ActionGroupoid, InvalidActionRejected) {
    auto Z2 = cyclic_group(2);
    LeftAction bad{Z2, {"a", "b"}, {1, 0, 1, 0}};
    EXPECT_EQ(error_kind([&] { action_groupoid(bad); }), "ActionInvalid");
}

TEST(QuasiInverse, IsomorphismGivesStrictInverse) {
    auto g = delooping(cyclic_group(3));
    auto id = identity_functor(g);
    SubgroupoidInclusion inc{g, g, id, default_section(id)};
    auto qi = quasi_inverse(inc);
    EXPECT_TRUE(qi.xi == id);
    for (auto c : qi.eps.comp) EXPECT_TRUE(g->is_identity(c));
    for (auto c : qi.eta.comp) EXPECT_TRUE(g->is_identity(c));
}

TEST(QuasiInverse, DoubledBZ2CollapsesObjects) {
    auto sub = delooping(cyclic_group(2));
    auto [amb, incl] = double_groupoid(sub);
    ASSERT_EQ(amb->num_objects(), 2u);
    ASSERT_EQ(amb->num_arrows(), 8u);
    // extra object reached along the nonidentity arrow of copy 0 -> 1
    std::vector<std::pair<std::size_t, std::size_t>> sec = {{amb->id(0), 0}, {2 + 1, 0}};
    SubgroupoidInclusion inc{sub, amb, incl, sec};
    auto qi = quasi_inverse(inc);
    EXPECT_EQ(qi.xi.obj[0], 0u);
    EXPECT_EQ(qi.xi.obj[1], 0u);
    // functoriality of xi on every composable pair, by enumeration
    for (std::size_t a = 0; a < amb->num_arrows(); ++a)
        for (std::size_t b = 0; b < amb->num_arrows(); ++b)
            if (amb->comp(a, b) != kNone) {
                EXPECT_EQ(qi.xi.arr[amb->comp(a, b)], sub->comp(qi.xi.arr[a], qi.xi.arr[b]));
            }
}

TEST(QuasiInverse, WrongDirectionRejected) {
    auto sub = delooping(cyclic_group(2));
    auto [amb, incl] = double_groupoid(sub);
    // arrow from the duplicate into the image: wrong direction
    std::vector<std::pair<std::size_t, std::size_t>> sec = {{amb->id(0), 0}, {2 * 2, 0}};
    SubgroupoidInclusion inc{sub, amb, incl, sec};
    EXPECT_EQ(error_kind([&] { quasi_inverse(inc); }), "SectionArrowNotLandingInSub");
}

class AdjointEquivalence : public ::testing::TestWithParam<int> {};

TEST_P(AdjointEquivalence, TriangleIdentitiesAndXiInverse) {
    // codiscrete S3-sized groupoid times Z/2 loops, doubled; sections vary with the parameter
    auto sub = action_groupoid(translation_action(identity_hom(cyclic_group(3))));
    auto [amb, incl] = double_groupoid(sub);
    const auto& A = *sub;
    const auto& B = *amb;
    const std::size_t n = A.num_objects(), NA = A.num_arrows();
    std::vector<std::pair<std::size_t, std::size_t>> sec(2 * n);
    int seed = GetParam();
    for (std::size_t x = 0; x < n; ++x) {
        const auto& into = A.hom((x + seed) % n, x);
        std::size_t a = seed == 0 ? A.id(x) : into[0];
        sec[x] = {a, A.src[a]};
        std::size_t b = A.hom((x + 2 * seed) % n, x)[0];
        sec[n + x] = {NA + b, A.src[b]};
    }
    SubgroupoidInclusion inc{sub, amb, incl, sec};
    auto qi = quasi_inverse(inc);
    // eps_{xi y} o xi(eta_y) = 1 and incl(eps_x) o eta_{incl x} = 1
    for (std::size_t y = 0; y < B.num_objects(); ++y)
        EXPECT_TRUE(A.is_identity(A.comp(qi.eps.comp[qi.xi.obj[y]], qi.xi.arr[qi.eta.comp[y]])));
    for (std::size_t x = 0; x < n; ++x)
        EXPECT_TRUE(B.is_identity(B.comp(incl.arr[qi.eps.comp[x]], qi.eta.comp[incl.obj[x]])));
    // xi(xi(a) xi(b)) = xi(xi(a)) xi(xi(b))
    for (std::size_t a = 0; a < B.num_arrows(); ++a)
        for (std::size_t b = 0; b < B.num_arrows(); ++b) {
            if (B.comp(a, b) == kNone) continue;
            std::size_t lhs = qi.xi.arr[incl.arr[A.comp(qi.xi.arr[a], qi.xi.arr[b])]];
            std::size_t rhs = A.comp(qi.xi.arr[incl.arr[qi.xi.arr[a]]], qi.xi.arr[incl.arr[qi.xi.arr[b]]]);
            EXPECT_EQ(lhs, rhs);
        }
}

INSTANTIATE_TEST_SUITE_P(Sections, AdjointEquivalence, ::testing::Values(0, 1, 2));

TEST(NatTrans, CompositionLaws) {
    // Z/4 acting on {0,1} through parity: two objects, every hom-set of size 2
    auto Z4 = cyclic_group(4), Z2 = cyclic_group(2);
    auto C = action_groupoid(translation_action(hom_validate(Z4, Z2, {0, 1, 0, 1})));
    ASSERT_EQ(C->num_arrows(), 8u);
    auto arrow = [&](std::size_t h, std::size_t x) { return h * 2 + x; };
    auto id = identity_functor(C);
    GroupoidFunctor sw{C, C, {1, 0}, {}};
    for (std::size_t a = 0; a < 8; ++a) sw.arr.push_back(arrow(a / 2, 1 - a % 2));
    functor_validate(sw);
    auto sw2 = compose(sw, sw);
    EXPECT_TRUE(sw2 == id);
    NatTrans alpha{id, id, {arrow(2, 0), arrow(2, 1)}};
    nat_trans_validate(alpha);
    NatTrans beta{sw, sw, {arrow(2, 1), arrow(2, 0)}};
    nat_trans_validate(beta);
    NatTrans gamma{id, sw, {arrow(1, 0), arrow(1, 1)}};
    nat_trans_validate(gamma);
    auto ida = identity_nat(id);
    // alpha o_v id = alpha
    EXPECT_EQ(vertical(alpha, ida).comp, alpha.comp);
    // id_F o_h id_G = id_{F o G}
    EXPECT_EQ(horizontal(identity_nat(sw), identity_nat(sw)).comp, identity_nat(sw2).comp);
    // interchange (b' o b) *h (a' o a) = (b' *h a') o (b *h a)
    for (const auto* a1 : {&alpha, &gamma})
        for (const auto* b1 : {&alpha, &gamma}) {
            NatTrans a2 = a1 == &alpha ? alpha : beta;  // a2: a1.to => a1.to
            NatTrans b2 = b1 == &alpha ? alpha : beta;
            auto lhs = horizontal(vertical(b2, *b1), vertical(a2, *a1));
            auto rhs = vertical(horizontal(b2, a2), horizontal(*b1, *a1));
            EXPECT_EQ(lhs.comp, rhs.comp);
        }
    EXPECT_EQ(error_kind([&] { vertical(alpha, gamma); }), "BoundaryMismatch");
}

TEST(NatTrans, NonNaturalFamilyRejected) {
    auto g = codiscrete_groupoid({"x", "y"});
    auto id = identity_functor(g);
    GroupoidFunctor sw{g, g, {1, 0}, {3, 2, 1, 0}};
    functor_validate(sw);
    // components x -> y, y -> x are natural; x -> y, y -> y is not a valid shape
    EXPECT_NO_THROW(nat_trans_validate(NatTrans{id, sw, {1, 2}}));
    EXPECT_EQ(error_kind([&] { nat_trans_validate(NatTrans{id, sw, {1, 3}}); }), "NotNatural");
}
