#pragma once

#include "cohere/descent_fixtures.hpp"
#include "cohere/equivariant_fixtures.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief A broken fixture meant to fail exactly one law of one audit family.
 *
 * `run` builds the fixture and returns the family's full report list.
 */
struct Mutant {
    std::string audit;
    std::string law;
    std::string name;
    std::function<std::vector<AuditReport>()> run;
};

/// Laws reported by each audit family, in report order.
inline const std::map<std::string, std::vector<std::string>>& audit_laws() {
    static const std::map<std::string, std::vector<std::string>> laws{
        {"crossed_module", {"equivariance", "peiffer"}},
        {"strict_two_group", {"interchange", "h_associativity", "h_unit"}},
        {"coherence",
         {"naturality_a", "naturality_l", "naturality_r", "pentagon", "triangle", "triangle_right", "triangle_left",
          "equivalence"}},
        {"two_rep",
         {"functoriality", "eta_naturality", "Fg_functoriality", "phi_naturality", "psi_naturality", "hexagon", "left_unit",
          "right_unit"}},
        {"transformation", {"phi_compat", "psi_compat", "naturality_g", "component_naturality"}},
        {"principal", {"typing", "cocycle"}},
        {"descent_object", {"gamma_autoequivalence", "phi_natural_iso", "pentagon"}},
        {"descent_morphism", {"gamma_functor", "phi_natural_iso", "prism"}},
        {"descent_2morphism", {"theta_natural_iso", "square"}},
        {"groupoid_action", {"defined", "moment", "associativity", "unit", "source", "functoriality"}},
        {"equivariant_functor", {"moment", "commutes"}},
        {"equivariant_descent",
         {"gamma_autoequivalence", "phi_natural_iso", "pentagon", "gamma_equivariant", "orbit_constraint"}},
    };
    return laws;
}

namespace mutant_detail {

using Q = Rational;

inline CrossedModule z2_into_z3() {
    auto H = cyclic_group(2), G = cyclic_group(3);
    return crossed_module_validate(H, G, trivial_hom(H, G), trivial_action(G, H));
}

/// Single-object 2-group on B(Z/2) with the tensor on arrows given by `m`.
inline TwoGroupPtr bz2_with_tensor(const std::function<std::size_t(std::size_t, std::size_t)>& m) {
    CoherentTwoGroup t;
    t.gpd = bz2();
    t.mobj = {0};
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) t.marr.push_back(m(p, q));
    t.unit = 0;
    t.assoc = {0};
    t.lunit = t.runit = {0};
    return std::make_shared<CoherentTwoGroup>(std::move(t));
}

/// Discrete 2-group on a unital magma given by its table; structure arrows are identities where typed.
inline TwoGroupPtr discrete_magma(std::vector<std::string> elems, std::vector<std::size_t> table) {
    const std::size_t n = elems.size();
    CoherentTwoGroup t;
    t.gpd = discrete_groupoid(elems);
    t.mobj = table;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t.marr.push_back(t.gpd->id(table[p * n + q]));
    t.unit = 0;
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) t.assoc.push_back(t.gpd->id(table[table[f * n + g] * n + h]));
    for (std::size_t g = 0; g < n; ++g) {
        t.lunit.push_back(t.gpd->id(g));
        t.runit.push_back(t.gpd->id(g));
    }
    return std::make_shared<CoherentTwoGroup>(std::move(t));
}

/// Non-identity automorphism of an object with exactly two.
inline std::size_t other_auto(const FiniteGroupoid& G, std::size_t x) {
    for (auto a : G.hom(x, x))
        if (a != G.id(x)) return a;
    fail("ValidationError", "no non-identity automorphism at " + G.obj_labels[x]);
}

/// Strict Z/2 -> Z/3 with one unitor family shifted by the central arrow.
inline TwoGroupPtr shifted_unitor(bool left) {
    auto s = strict_two_group(z2_into_z3());
    auto t = *s.tg;
    for (std::size_t g = 0; g < 3; ++g) (left ? t.lunit : t.runit)[g] = s.arrow(g, 1);
    return std::make_shared<CoherentTwoGroup>(std::move(t));
}

inline std::vector<RepPtr<Q>> z2_reps(const GroupoidPtr& bh) {
    return {trivial_rep<Q>(bh, 1), trivial_rep<Q>(bh, 2, "trivial2"),
            group_rep<Q>(bh, 1, {Matrix<Q>::scalar(1, Q(1)), Matrix<Q>::scalar(1, Q(-1))}, "sign")};
}

inline TwoRepPtr<Q> z2_crossed(const CrossedModule& xm, bool sign_only = false) {
    auto s = strict_two_group(xm);
    auto reps = z2_reps(delooping(xm.H));
    if (sign_only) reps = {reps[2]};
    return crossed_2rep<Q>(s, reps);
}

inline TwoRepPtr<Q> z2_crossed_trivial(const CrossedModule& xm) {
    auto bh = delooping(xm.H);
    return crossed_2rep<Q>(strict_two_group(xm), {trivial_rep<Q>(bh, 1), trivial_rep<Q>(bh, 2, "trivial2")});
}

/// Identity transformation of A with Tg[g] scaled by c at `only` (or everywhere).
inline TwoRepMorphism<Q> scaled_identity(const TwoRepPtr<Q>& A, std::size_t g, const Q& c, std::size_t only = kNone) {
    auto M = identity_transformation(A);
    for (std::size_t i = 0; i < M.Tg[g].comp.size(); ++i)
        if (only == kNone || only == i) M.Tg[g].comp[i] = c * M.Tg[g].comp[i];
    return M;
}

inline std::shared_ptr<CatFunctor> const_functor(const CategoryPtr& c, std::size_t v) {
    return std::make_shared<CatFunctor>(
        CatFunctor{c, c, std::vector<std::size_t>(c->num_objects(), v), std::vector<std::size_t>(c->num_arrows(), c->id(v))});
}

/// B(Z/2) as a one-object category and the trivial action of bz2() on it.
inline ActionPtr trivial_bz2_fiber(const GroupoidPtr& G) {
    auto V = as_category(*bz2());
    return std::make_shared<GroupoidActionOnCategory>(make_action(
        G, V, {0}, {0, 0}, [](std::size_t v, std::size_t) { return v; }, [](std::size_t f, std::size_t) { return f; }));
}

/// Trivial descent over the 3-point cover {p0,p1},{p1,p2}; p0 and p2 lie in one piece.
inline NervePtr chain_cover() { return cech_nerve({point_labels(3), {{0, 1}, {1, 2}}}); }

/// Trivial descent on B(Z/2) with phi_{0,0,1} at p1 replaced by the generator.
inline DescentObject<FiniteCategory> bz2_descent_twisted() {
    auto c = as_category(*bz2());
    auto d = trivial_descent<FiniteCategory>(chain_cover(), c);
    d.phi[d.nerve->encode({0, 0, 1})][1].comp = {1};
    return d;
}

/// Equivariant descent over swap_base_action with orbit-closed pieces {m0..m3}, {m0, m1}.
inline NervePtr half_cover() { return cech_nerve({{"m0", "m1", "m2", "m3"}, {{0, 1, 2, 3}, {0, 1}}}); }

}  // namespace mutant_detail

/**
 * \brief The shipped mutants.
 *
 * No mutant exists for triangle_right and triangle_left (implied by the
 * other coherence laws), for functoriality, Fg_functoriality and
 * psi_naturality of a 2-representation, nor for the moment-free action law
 * "source"; mutant_coverage reports these as uncovered.
 */
inline std::vector<Mutant> mutant_catalog() {
    using namespace mutant_detail;
    std::vector<Mutant> out;
    auto add = [&](std::string audit, std::string law, std::string name, std::function<std::vector<AuditReport>()> run) {
        out.push_back({std::move(audit), std::move(law), std::move(name), std::move(run)});
    };

    // crossed modules, built without the validator
    add("crossed_module", "equivariance", "z2_onto_nonnormal_s3_subgroup", [] {
        auto H = cyclic_group(2), G = symmetric_group(3);
        std::size_t tau = 0;
        while (G->label(tau) != "102") ++tau;
        CrossedModule xm{H, G, hom_validate(H, G, {G->id, tau}), trivial_action(G, H)};
        return crossed_module_audit(xm);
    });
    add("crossed_module", "peiffer", "s3_to_point", [] {
        auto H = symmetric_group(3), G = trivial_group();
        return crossed_module_audit(CrossedModule{H, G, trivial_hom(H, G), trivial_action(G, H)});
    });

    add("strict_two_group", "interchange", "bz2_tensor_or", [] {
        return strict_two_group_audit(*bz2_with_tensor([](std::size_t p, std::size_t q) { return p | q; }));
    });
    add("strict_two_group", "h_associativity", "nonassociative_magma", [] {
        // e unit, aa = b, ab = b, ba = a, bb = a: (aa)a = a, a(aa) = b
        return strict_two_group_audit(*discrete_magma({"e", "a", "b"}, {0, 1, 2, 1, 2, 2, 2, 1, 1}));
    });
    add("strict_two_group", "h_unit", "wrong_unit", [] {
        auto t = *strict_two_group(xm_z2_trivial_on_z2()).tg;
        t.unit = 1;
        return strict_two_group_audit(t);
    });

    add("coherence", "naturality_a", "associator_twisted_by_kernel", [] {
        // Z/4 -> Z/2 reducing mod 2: a(1,1,1) shifted by the kernel element 2 is still a 3-cocycle
        auto H = cyclic_group(4), G = cyclic_group(2);
        auto s = strict_two_group(crossed_module_validate(H, G, hom_validate(H, G, {0, 1, 0, 1}), trivial_action(G, H)));
        auto t = *s.tg;
        auto& a = t.assoc[(1 * 2 + 1) * 2 + 1];
        a = s.arrow(s.arrow_g(a), H->mul(s.arrow_h(a), 2));
        return coherence_audit(t);
    });
    add("coherence", "naturality_l", "bz2_tensor_first_projection",
        [] { return coherence_audit(*bz2_with_tensor([](std::size_t p, std::size_t) { return p; })); });
    add("coherence", "naturality_r", "bz2_tensor_second_projection",
        [] { return coherence_audit(*bz2_with_tensor([](std::size_t, std::size_t q) { return q; })); });
    add("coherence", "pentagon", "noncocycle_associator", [] {
        // omega(1,1,1) = 1 in Z/2 over Z/3 is normalized but not a 3-cocycle
        auto s = strict_two_group(z2_into_z3());
        auto t = *s.tg;
        t.assoc[(1 * 3 + 1) * 3 + 1] = s.arrow(0, 1);
        return coherence_audit(t);
    });
    add("coherence", "triangle", "shifted_left_unitor", [] { return coherence_audit(*shifted_unitor(true)); });
    add("coherence", "equivalence", "absorbing_monoid", [] {
        return coherence_audit(*discrete_magma({"e", "z"}, {0, 1, 1, 1}));
    });

    add("two_rep", "eta_naturality", "sign_flipped_eta_component", [] {
        auto B = *z2_crossed(xm_abelian_to_trivial(2));
        B.eta[1].comp[0] = Q(-1) * B.eta[1].comp[0];
        return two_rep_audit(B);
    });
    add("two_rep", "phi_naturality", "scaled_phi_component", [] {
        auto B = *z2_crossed(xm_identity_cyclic(2));
        B.phi[3].comp[0] = Q(2) * B.phi[3].comp[0];
        return two_rep_audit(B);
    });
    add("two_rep", "hexagon", "noncocycle_phi", [] {
        auto B = *crossed_2rep<Q>(strict_two_group(z2_into_z3()), {trivial_rep<Q>(delooping(cyclic_group(2)), 1)});
        for (auto& m : B.phi[1 * 3 + 1].comp) m = Q(2) * m;
        return two_rep_audit(B);
    });
    add("two_rep", "left_unit", "sign_rep_over_shifted_left_unitor", [] {
        auto B = *z2_crossed(z2_into_z3(), true);
        B.tg = shifted_unitor(true);
        return two_rep_audit(B);
    });
    add("two_rep", "right_unit", "sign_rep_over_shifted_right_unitor", [] {
        auto B = *z2_crossed(z2_into_z3(), true);
        B.tg = shifted_unitor(false);
        return two_rep_audit(B);
    });

    add("transformation", "phi_compat", "doubled_component", [] {
        return transformation_audit(scaled_identity(z2_crossed_trivial(xm_z2_trivial_on_z2()), 1, Q(2)));
    });
    add("transformation", "psi_compat", "target_psi_negated", [] {
        auto A = z2_crossed_trivial(xm_z2_trivial_on_z2());
        auto B = std::make_shared<TwoRepresentation<Q>>(*A);
        for (auto& m : B->psi.comp) m = Q(-1) * m;
        auto M = identity_transformation(A);
        M.dst = B;
        return transformation_audit(M);
    });
    add("transformation", "naturality_g", "sign_character_on_connected_objects", [] {
        return transformation_audit(scaled_identity(z2_crossed_trivial(xm_identity_cyclic(2)), 1, Q(-1)));
    });
    add("transformation", "component_naturality", "one_component_negated", [] {
        return transformation_audit(scaled_identity(z2_crossed_trivial(xm_z2_trivial_on_z2()), 1, Q(-1), 0));
    });

    add("principal", "typing", "mistyped_arrow", [] {
        auto s = strict_two_group(xm_z3_inversion());
        auto P = strict_cocycle(cover_3_of_5(), s, 3);
        const auto& G = *s.tg->gpd;
        auto& f = P.f[P.nerve->encode({0, 2, 0})][0];
        f = G.id((G.src[f] + 1) % G.num_objects());
        return principal_descent_validate(P);
    });
    add("principal", "cocycle", "parallel_arrow", [] {
        auto s = strict_two_group(xm_z3_inversion());
        auto P = strict_cocycle(cover_3_of_5(), s, 3);
        auto& f = P.f[P.nerve->encode({0, 2, 0})][0];
        f = s.arrow(s.arrow_g(f), s.xm.H->mul(s.arrow_h(f), 1));
        return principal_descent_validate(P);
    });

    add("descent_object", "gamma_autoequivalence", "constant_gamma_at_single_cover_point", [] {
        auto [c, sw] = swap_category();
        auto d = trivial_descent<FiniteCategory>(chain_cover(), c);
        auto k = const_functor(c, 0);
        d.gamma[d.nerve->encode({0, 0})][0] = k;
        d.phi[d.nerve->encode({0, 0, 0})][0] = CatNat{k, compose(CatFunctorPtr(k), CatFunctorPtr(k)), {c->id(0), c->id(0)}};
        return descent_object_validate(d);
    });
    add("descent_object", "phi_natural_iso", "mistyped_phi_component", [] {
        auto [c, sw] = swap_category();
        auto d = trivial_descent<FiniteCategory>(chain_cover(), c);
        d.phi[d.nerve->encode({0, 1, 0})][1].comp[0] = c->id(1);
        return descent_object_validate(d);
    });
    add("descent_object", "pentagon", "bz2_phi_twisted_once", [] { return descent_object_validate(bz2_descent_twisted()); });

    add("descent_morphism", "gamma_functor", "nonfunctor_component", [] {
        auto [c, sw] = swap_category();
        auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(chain_cover(), c));
        auto m = identity_morphism<FiniteCategory>(d);
        m.gamma[0][1] = std::make_shared<CatFunctor>(CatFunctor{c, c, {0, 1}, {c->id(1), c->id(0)}});
        return descent_morphism_validate(m);
    });
    add("descent_morphism", "phi_natural_iso", "mistyped_phi_component", [] {
        auto [c, sw] = swap_category();
        auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(chain_cover(), c));
        auto m = identity_morphism<FiniteCategory>(d);
        m.phi[d->nerve->encode({0, 1})][1].comp[0] = c->id(1);
        return descent_morphism_validate(m);
    });
    add("descent_morphism", "prism", "bz2_phi_twisted_once", [] {
        auto c = as_category(*bz2());
        auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(chain_cover(), c));
        auto m = identity_morphism<FiniteCategory>(d);
        m.phi[d->nerve->encode({0, 1})][1].comp = {1};
        return descent_morphism_validate(m);
    });

    add("descent_2morphism", "theta_natural_iso", "mistyped_theta_component", [] {
        auto [c, sw] = swap_category();
        auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(chain_cover(), c));
        auto m = std::make_shared<const DescentMorphism<FiniteCategory>>(identity_morphism<FiniteCategory>(d));
        auto b = identity_2morphism<FiniteCategory>(m);
        b.theta[0][0].comp[0] = c->id(1);
        return descent_2morphism_validate(b);
    });
    add("descent_2morphism", "square", "bz2_theta_twisted_once", [] {
        auto c = as_category(*bz2());
        auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(chain_cover(), c));
        auto m = std::make_shared<const DescentMorphism<FiniteCategory>>(identity_morphism<FiniteCategory>(d));
        auto b = identity_2morphism<FiniteCategory>(m);
        b.theta[0][1].comp = {1};
        return descent_2morphism_validate(b);
    });

    add("groupoid_action", "defined", "missing_entry", [] {
        auto act = *z2_wedge_action();
        act.mu1[0] = kNone;
        return groupoid_action_validate(act);
    });
    add("groupoid_action", "moment", "arrow_across_fibers", [] {
        // c over *, d over y, f: c -> d declared over *
        auto G = bz2_plus_point();
        auto V = make_category({"c", "d"}, {"1c", "1d", "f"}, {0, 1, 0}, {0, 1, 1},
                               [](std::size_t b, std::size_t a) { return b == 1 ? a : b == 2 ? 2 : a == 2 ? 2 : 0; });
        return groupoid_action_validate(make_action(
            G, V, {0, 1}, {0, 1, 0}, [](std::size_t v, std::size_t) { return v; },
            [](std::size_t f, std::size_t) { return f; }));
    });
    add("groupoid_action", "associativity", "z3_by_non_homomorphism", [] {
        return groupoid_action_validate(*permutation_action(cyclic_group(3), {"x", "y", "z"}, {{0, 1, 2}, {1, 0, 2}, {1, 0, 2}}));
    });
    add("groupoid_action", "unit", "collapsing_action", [] {
        return groupoid_action_validate(*permutation_action(cyclic_group(2), {"v", "w"}, {{1, 1}, {1, 1}}));
    });
    add("groupoid_action", "functoriality", "identities_left_fixed", [] {
        auto act = *z2_wedge_action();
        const std::size_t N = act.acting->num_arrows();
        act.mu1[0 * N + 1] = 0;  // 1a.s = 1a
        act.mu1[1 * N + 1] = 1;  // 1b.s = 1b
        return groupoid_action_validate(act);
    });

    add("equivariant_functor", "moment", "fiber_jump", [] {
        auto act = split_fiber_action({"d"});
        const auto& V = act->target;
        CatFunctor F{V, V, {0, 1, 2, 0}, {V->id(0), V->id(1), V->id(2), V->id(0)}};
        return equivariant_functor_check(F, *act, *act);
    });
    add("equivariant_functor", "commutes", "wedge_collapse", [] {
        auto act = z2_wedge_action();
        // a, b -> a; 1a 1b 1c ac bc -> 1a 1a 1c ac ac
        CatFunctor F{act->target, act->target, {0, 0, 2}, {0, 0, 2, 3, 3}};
        return equivariant_functor_check(F, *act, *act);
    });

    add("equivariant_descent", "gamma_autoequivalence", "constant_gamma_on_single_cover_orbit", [] {
        auto fiber = z2_wedge_action();
        auto id = identity_functor(fiber->target);
        auto k = const_functor(fiber->target, 2);
        EquivariantDescent e{swap_base_action(fiber->acting), fiber,
                             strict_descent(half_cover(), fiber->target, [&](std::size_t, std::size_t, std::size_t p) {
                                 return p >= 2 ? CatFunctorPtr(k) : id;
                             })};
        return equivariant_descent_validate(e);
    });
    add("equivariant_descent", "phi_natural_iso", "mistyped_phi_component", [] {
        auto e = wedge_descent({});
        e.data.phi[e.data.nerve->encode({0, 1, 0})][0].comp[0] = 3;  // ac where 1a belongs
        return equivariant_descent_validate(e);
    });
    add("equivariant_descent", "pentagon", "bz2_phi_twisted_once", [] {
        auto base = swap_base_action();
        auto fiber = trivial_bz2_fiber(base->acting);
        auto d = trivial_descent<FiniteCategory>(half_cover(), fiber->target);
        d.phi[d.nerve->encode({0, 0, 1})][0].comp = {1};
        return equivariant_descent_validate(EquivariantDescent{base, fiber, std::move(d)});
    });
    add("equivariant_descent", "gamma_equivariant", "conjugate_pair_of_nonequivariant_gammas", [] {
        // gamma = (a c) on m0, m2 and its conjugate (b c) on m1, m3: not equivariant, orbit-consistent
        auto act = permutation_action(cyclic_group(2), {"a", "b", "c"}, {{0, 1, 2}, {1, 0, 2}});
        const auto& V = act->target;
        auto ac = std::make_shared<CatFunctor>(CatFunctor{V, V, {2, 1, 0}, {2, 1, 0}});
        auto bc = std::make_shared<CatFunctor>(CatFunctor{V, V, {0, 2, 1}, {0, 2, 1}});
        auto n = cech_nerve({{"m0", "m1", "m2", "m3"}, {{0, 1, 2, 3}, {0, 1}, {2, 3}}});
        EquivariantDescent e{swap_base_action(act->acting), act,
                             strict_descent(n, V, [&](std::size_t i, std::size_t j, std::size_t p) -> CatFunctorPtr {
                                 if (i == j) return identity_functor(V);
                                 return p % 2 ? CatFunctorPtr(bc) : CatFunctorPtr(ac);
                             })};
        return equivariant_descent_validate(e);
    });
    add("equivariant_descent", "orbit_constraint", "swap_on_half_an_orbit",
        [] { return equivariant_descent_validate(wedge_descent({0})); });
    return out;
}

/// Verdict of one mutant: the failing laws of its report list.
struct MutantResult {
    std::string audit, law, name;
    std::vector<std::string> failing;
    std::string error;  // set when the fixture threw

    bool isolated() const { return error.empty() && failing == std::vector<std::string>{law}; }
};

inline MutantResult run_mutant(const Mutant& m) {
    MutantResult r{m.audit, m.law, m.name, {}, {}};
    try {
        for (const auto& rep : m.run())
            if (!rep.passed()) r.failing.push_back(rep.law);
    } catch (const Error& e) {
        r.error = e.what();
    }
    return r;
}

/// Laws of each family with no isolating mutant among `results`.
inline std::vector<std::string> mutant_coverage_gaps(const std::vector<MutantResult>& results) {
    std::vector<std::string> gaps;
    for (const auto& [audit, laws] : audit_laws())
        for (const auto& law : laws) {
            bool hit = false;
            for (const auto& r : results) hit = hit || (r.audit == audit && r.law == law && r.isolated());
            if (!hit) gaps.push_back(audit + "/" + law);
        }
    return gaps;
}

}  // namespace cohere
