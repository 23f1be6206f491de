#include "cohere/equivariant_fixtures.hpp"

#include <gtest/gtest.h>

using namespace cohere;

namespace {

void expect_all_pass(const std::vector<AuditReport>& reps) {
    for (const auto& r : reps)
        EXPECT_TRUE(r.passed()) << r.law << ": " << (r.failures.empty() ? "" : r.failures[0].instance + " | " + r.failures[0].lhs);
}

std::vector<std::string> failing_laws(const std::vector<AuditReport>& reps) {
    std::vector<std::string> out;
    for (const auto& r : reps)
        if (!r.passed()) out.push_back(r.law);
    return out;
}

bool mentions(const std::vector<AuditReport>& reps, const std::string& s) {
    for (const auto& r : reps)
        for (const auto& c : r.failures)
            if (c.instance.find(s) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST(GroupoidAction, TrivialGroupoidWithConstantMoment) {
    auto G = discrete_groupoid({"*"});
    auto A = as_category(*codiscrete_groupoid({"u", "v", "w"}));
    auto act = make_action(
        G, A, std::vector<std::size_t>(3, 0), std::vector<std::size_t>(9, 0), [](std::size_t v, std::size_t) { return v; },
        [](std::size_t f, std::size_t) { return f; });
    expect_all_pass(groupoid_action_validate(act));
}

TEST(GroupoidAction, VectFamilyPasses) {
    for (const auto& act : {swap_vect_family(), shear_vect_family()}) {
        auto reps = groupoid_action_validate(act);
        EXPECT_EQ(reps.size(), 6u);
        expect_all_pass(reps);
    }
    auto act = shear_vect_family();
    EXPECT_EQ(act.target->num_objects(), 8u);
    EXPECT_EQ(act.target->num_arrows(), 128u);
}

TEST(GroupoidAction, VectFamilyActsByConjugation) {
    // brute force: (x, f, v).g for g: y -> x must be (y, M^-1 f M, M^-1 v)
    auto act = shear_vect_family();
    const auto& G = *act.acting;
    F2Matrix S{2, {1, 1, 0, 1}};
    std::size_t g = G.hom(0, 1)[0];  // x>y, acts on the fiber over y
    for (std::size_t f = 0; f < 16; ++f)
        for (std::size_t v = 0; v < 4; ++v) {
            std::size_t a = (1 * 16 + f) * 4 + v;
            auto m = f2_from_index(2, f);
            auto c = f2_mul(S, f2_mul(m, S));
            std::size_t want = (0 * 16 + f2_index(c)) * 4 + f2_apply(S, v);
            EXPECT_EQ(act.act1(a, g), want);
        }
}

TEST(GroupoidAction, BrokenAssociativityNamesTriple) {
    auto act = swap_vect_family();
    // x.s := x on one object only: (x s) s = x s != x = x (s s)
    const std::size_t N = act.acting->num_arrows();
    std::size_t v = 1;  // "*:1" is moved by the swap
    act.mu0[v * N + 1] = v;
    auto reps = groupoid_action_validate(act);
    auto laws = failing_laws(reps);
    EXPECT_NE(std::find(laws.begin(), laws.end(), "associativity"), laws.end());
    EXPECT_TRUE(mentions(reps, "(*:2,1,1)"));
}

TEST(GroupoidAction, UndefinedEntryReported) {
    auto act = *z2_wedge_action();
    act.mu1[0] = kNone;
    auto reps = groupoid_action_validate(act);
    EXPECT_EQ(failing_laws(reps), (std::vector<std::string>{"defined"}));
}

TEST(GroupoidAction, EveryMuMutationIsCaught) {
    auto base = z2_wedge_action();
    const std::size_t N = base->acting->num_arrows();
    for (std::size_t lvl = 0; lvl < 2; ++lvl) {
        std::size_t count = lvl == 0 ? base->target->num_objects() : base->target->num_arrows();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t g = 0; g < N; ++g)
                for (std::size_t r = 0; r < count; ++r) {
                    auto act = *base;
                    auto& slot = lvl == 0 ? act.mu0[a * N + g] : act.mu1[a * N + g];
                    if (slot == r) continue;
                    slot = r;
                    EXPECT_FALSE(all_passed(groupoid_action_validate(act))) << lvl << " " << a << " " << g << " " << r;
                }
    }
}

TEST(EquivariantFunctor, CommutingConjugationPasses) {
    auto act = swap_vect_family();
    F2Matrix P{2, {0, 1, 1, 0}};
    expect_all_pass(equivariant_functor_check(*vect_family_functor(act, 2, {P}), act, act));
    expect_all_pass(equivariant_functor_check(*vect_family_functor(act, 2, {f2_identity(2)}), act, act));
}

TEST(EquivariantFunctor, NonCommutingConjugationFails) {
    auto act = swap_vect_family();
    F2Matrix S{2, {1, 1, 0, 1}};
    auto F = vect_family_functor(act, 2, {S});
    EXPECT_FALSE(functor_problem(*F).has_value());
    auto reps = equivariant_functor_check(*F, act, act);
    EXPECT_EQ(failing_laws(reps), (std::vector<std::string>{"commutes"}));
}

TEST(EquivariantFunctor, AutomorphismsOfWedge) {
    auto autos = equivariant_automorphisms(*z2_wedge_action());
    EXPECT_EQ(autos.size(), 2u);
    // oracle: all 6 object permutations, keep those that are functors commuting with the swap
    auto act = z2_wedge_action();
    std::vector<std::size_t> p{0, 1, 2};
    std::size_t count = 0;
    do {
        if (p[2] != 2) continue;  // c is the only object with incoming non-identity arrows
        CatFunctor F{act->target, act->target, p, {p[0], p[1], 2, p[0] == 0 ? 3u : 4u, p[1] == 1 ? 4u : 3u}};
        if (!functor_problem(F) && all_passed(equivariant_functor_check(F, *act, *act))) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(count, 2u);
}

TEST(ActionPullback, IdentityGivesIsomorphicCategory) {
    auto act = z2_wedge_action();
    auto pb = action_pullback_category(act, identity_functor(act->acting));
    EXPECT_EQ(pb.action->target->num_objects(), 3u);
    EXPECT_EQ(pb.action->target->num_arrows(), 5u);
    expect_all_pass(groupoid_action_validate(*pb.action));
    ASSERT_TRUE(pb.residual);
    expect_all_pass(groupoid_action_validate(*pb.residual));
    EXPECT_NO_THROW(inverse(pb.projection));
    auto v = iota_verify(pb);
    EXPECT_EQ(v.source_count, 2u);
    EXPECT_EQ(v.target_count, 2u);
    EXPECT_TRUE(v.isomorphism());
}

TEST(ActionPullback, NonSurjectiveInclusionCounts) {
    // G = B(Z/2) + {y}, G' = {x'} onto *: 2 automorphisms below, 6 above
    auto act = split_fiber_action({});
    auto Gp = discrete_groupoid({"x'"});
    auto pb = action_pullback_category(act, groupoid_hom(Gp, act->acting, {0}, {0}));
    expect_all_pass(groupoid_action_validate(*pb.action));
    EXPECT_FALSE(pb.residual);
    auto v = iota_verify(pb);
    EXPECT_EQ(v.source_count, 2u);
    EXPECT_EQ(v.target_count, 6u);
    EXPECT_TRUE(v.equivariant);
    EXPECT_TRUE(v.injective_on_objects);
    EXPECT_TRUE(v.fully_faithful);
    EXPECT_FALSE(v.surjective_on_objects);
}

TEST(ActionPullback, FiberOutsideImageMakesIotaNonInjective) {
    auto act = split_fiber_action({"d", "e"});
    auto Gp = discrete_groupoid({"x'"});
    auto pb = action_pullback_category(act, groupoid_hom(Gp, act->acting, {0}, {0}));
    auto v = iota_verify(pb);
    EXPECT_EQ(v.source_count, 4u);
    EXPECT_EQ(v.target_count, 6u);
    EXPECT_FALSE(v.injective_on_objects);
}

TEST(ActionPullback, ObjectSurjectiveButUnfullIsNotIso) {
    auto act = z2_wedge_action();
    auto Gpp = discrete_groupoid({"y1", "y2"});
    auto pb = action_pullback_category(act, groupoid_hom(Gpp, act->acting, {0, 0}, {0, 0}));
    auto v = iota_verify(pb);
    EXPECT_EQ(v.source_count, 2u);
    EXPECT_EQ(v.target_count, 4u);
    EXPECT_TRUE(v.injective_on_objects && v.fully_faithful);
    EXPECT_FALSE(v.isomorphism());
}

TEST(ActionPullback, VectFamilyAlongCodiscreteCover) {
    auto act = std::make_shared<GroupoidActionOnCategory>(swap_vect_family());
    auto t = three_stage_tower(act->acting);
    auto pb = action_pullback_category(act, t.phi);
    EXPECT_EQ(pb.action->target->num_objects(), 8u);
    expect_all_pass(groupoid_action_validate(*pb.action));
    EXPECT_TRUE(all_passed(equivariant_functor_check(*iota(pb, *identity_functor(act->target)), *pb.action, *pb.action)));
}

TEST(ActionPullback, NotAHomomorphism) {
    auto act = z2_wedge_action();
    auto Gp = codiscrete_groupoid({"x1", "x2"});
    GroupoidFunctor bad{Gp, act->acting, {0, 0}, {0, 1, 0, 0}};
    try {
        action_pullback_category(act, bad);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "HomomorphismInvalid");
    }
}

TEST(Tower, ComparisonIsEquivariantIsoAndIotaComposes) {
    for (auto act : {z2_wedge_action(), ActionPtr(std::make_shared<GroupoidActionOnCategory>(swap_vect_family()))}) {
        auto t = three_stage_tower(act->acting);
        auto v = tower_verify(act, t.phi, t.psi);
        EXPECT_TRUE(v.j_isomorphism);
        expect_all_pass(v.j_equivariance);
        EXPECT_GE(v.automorphisms, 2u);
        EXPECT_TRUE(v.mismatches.empty());
    }
}

TEST(Tower, ComparisonTablesByHand) {
    auto act = z2_wedge_action();
    auto t = three_stage_tower(act->acting);
    auto inner = action_pullback_category(act, t.phi);
    auto outer = action_pullback_category(inner.action, t.psi);
    auto direct = action_pullback_category(act, compose(t.phi, t.psi));
    auto j = tower_comparison(outer, inner, direct);
    ASSERT_EQ(outer.objs.size(), 9u);
    for (std::size_t k = 0; k < outer.objs.size(); ++k) {
        auto [u, y] = outer.objs[k];
        auto [v, x] = inner.objs[u];
        EXPECT_EQ(t.psi.obj[y], x);
        EXPECT_EQ(direct.objs[j->obj[k]], std::make_pair(v, y));
    }
}

TEST(EquivariantDescent, TrivialActionTrivialBundle) {
    auto G = discrete_groupoid({"*"});
    auto base = as_category(*discrete_groupoid({"p0", "p1"}));
    auto V = as_category(*discrete_groupoid({"a", "b"}));
    auto triv = [&](const CategoryPtr& C) {
        return std::make_shared<GroupoidActionOnCategory>(make_action(
            G, C, std::vector<std::size_t>(C->num_objects(), 0), std::vector<std::size_t>(C->num_arrows(), 0),
            [](std::size_t v, std::size_t) { return v; }, [](std::size_t f, std::size_t) { return f; }));
    };
    auto n = cech_nerve({{"p0", "p1"}, {{0, 1}, {1}}});
    EquivariantDescent e{triv(base), triv(V), trivial_descent<FiniteCategory>(n, V)};
    expect_all_pass(equivariant_descent_validate(e));
}

TEST(EquivariantDescent, ConstraintForcesMatchingComponents) {
    // gamma_01 on the orbit {m0, m1}: exactly the assignments constant on the orbit pass
    for (int mask = 0; mask < 4; ++mask) {
        std::vector<std::size_t> sw;
        if (mask & 1) sw.push_back(0);
        if (mask & 2) sw.push_back(1);
        auto reps = equivariant_descent_validate(wedge_descent(sw));
        bool ok = all_passed(reps);
        EXPECT_EQ(ok, mask == 0 || mask == 3) << mask;
        if (!ok) {
            EXPECT_EQ(failing_laws(reps), (std::vector<std::string>{"orbit_constraint"}));
            EXPECT_TRUE(mentions(reps, "m0->m1") || mentions(reps, "m1->m0"));
        }
    }
    expect_all_pass(equivariant_descent_validate(wedge_descent({0, 1, 2, 3})));
}

TEST(EquivariantDescent, EverySingleGammaMutationIsCaught) {
    auto good = wedge_descent({2, 3});
    expect_all_pass(equivariant_descent_validate(good));
    auto autos = equivariant_automorphisms(*good.fiber);
    ASSERT_EQ(autos.size(), 2u);
    // all automorphisms of the bare category, equivariant or not
    auto bare = std::make_shared<GroupoidActionOnCategory>(make_action(
        discrete_groupoid({"*"}), good.fiber->target, {0, 0, 0}, {0, 0, 0, 0, 0}, [](std::size_t v, std::size_t) { return v; },
        [](std::size_t f, std::size_t) { return f; }));
    auto all = equivariant_automorphisms(*bare);
    EXPECT_EQ(all.size(), 2u);
    const auto& n = *good.data.nerve;
    std::size_t total = 0;
    for (std::size_t c = 0; c < n.count(1); ++c) {
        auto t = n.decode(c, 2);
        if (t[0] == t[1]) continue;
        for (auto p : n.overlaps[1][c])
            for (const auto& F : autos) {
                if (*F == *good.data.gamma[c][p]) continue;
                auto bad = good;
                bad.data.gamma[c][p] = F;
                auto reps = equivariant_descent_validate(bad);
                ++total;
                EXPECT_FALSE(all_passed(reps));
                const auto* r = find_law(reps, "orbit_constraint");
                ASSERT_NE(r, nullptr);
                EXPECT_FALSE(r->passed()) << CechNerve::tuple_str(t) << " at " << n.point(p);
                EXPECT_TRUE(mentions(reps, n.point(p))) << n.point(p);
            }
    }
    EXPECT_EQ(total, 8u);
}

TEST(EquivariantDescent, NonEquivariantGammaReported) {
    auto e = wedge_descent({});
    auto fiber = e.fiber;
    // an automorphism of a discrete fiber that does not commute with the swap
    auto act = permutation_action(cyclic_group(2), {"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}});
    auto F = std::make_shared<CatFunctor>(CatFunctor{act->target, act->target, {2, 1, 0}, {2, 1, 0}});
    auto reps = equivariant_functor_check(*F, *act, *act);
    EXPECT_FALSE(all_passed(reps));
    EquivariantDescent d{swap_base_action(act->acting), act, strict_descent(e.data.nerve, act->target, [&](auto i, auto j, auto) {
                             return i == j ? identity_functor(act->target) : CatFunctorPtr(F);
                         })};
    auto out = equivariant_descent_validate(d);
    auto laws = failing_laws(out);
    EXPECT_NE(std::find(laws.begin(), laws.end(), "gamma_equivariant"), laws.end());
}
