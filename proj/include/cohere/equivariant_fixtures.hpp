#pragma once

#include "cohere/descent_fixtures.hpp"
#include "cohere/equivariant.hpp"

#include <string>
#include <vector>

namespace cohere {

inline GroupoidPtr bz2() { return delooping(cyclic_group(2)); }

/// Objects a, b, c with arrows a -> c, b -> c; the generator of Z/2 swaps a and b.
inline ActionPtr z2_wedge_action() {
    auto G = bz2();
    // arrows: 1a 1b 1c ac bc
    auto V = make_category({"a", "b", "c"}, {"1a", "1b", "1c", "ac", "bc"}, {0, 1, 2, 0, 1}, {0, 1, 2, 2, 2},
                           [](std::size_t b, std::size_t a) { return b < 3 ? a : b; });
    const std::vector<std::size_t> so{1, 0, 2}, sa{1, 0, 2, 4, 3};
    return std::make_shared<GroupoidActionOnCategory>(make_action(
        G, V, {0, 0, 0}, {0, 0, 0, 0, 0}, [&](std::size_t v, std::size_t g) { return g == 0 ? v : so[v]; },
        [&](std::size_t f, std::size_t g) { return g == 0 ? f : sa[f]; }));
}

/// Discrete category on `objs` acted on by a group through an object permutation per element.
inline ActionPtr permutation_action(const GroupPtr& grp, const std::vector<std::string>& objs,
                                    const std::vector<std::vector<std::size_t>>& perm) {
    auto V = as_category(*discrete_groupoid(objs));
    return std::make_shared<GroupoidActionOnCategory>(make_action(
        delooping(grp), V, std::vector<std::size_t>(objs.size(), 0), std::vector<std::size_t>(objs.size(), 0),
        [&](std::size_t v, std::size_t g) { return perm[g][v]; },
        [&](std::size_t f, std::size_t g) { return V->id(perm[g][V->src[f]]); }));
}

/// Vect-family action of Z/2 on F_2^2 by the coordinate swap.
inline GroupoidActionOnCategory swap_vect_family() {
    F2Matrix P{2, {0, 1, 1, 0}};
    return vect_family_action({bz2(), 2, {f2_identity(2), P}});
}

/// Vect-family action of the codiscrete groupoid on {x, y}, with x>y acting by a shear.
inline GroupoidActionOnCategory shear_vect_family() {
    auto G = codiscrete_groupoid({"x", "y"});
    F2Matrix S{2, {1, 1, 0, 1}};
    // arrows x>x x>y y>x y>y; the shear is its own inverse over F_2
    return vect_family_action({G, 2, {f2_identity(2), S, S, f2_identity(2)}});
}

/// B(Z/2) with an extra isolated object y.
inline GroupoidPtr bz2_plus_point() {
    return make_groupoid({"*", "y"}, {"e", "s", "1_y"}, {0, 0, 1}, {0, 0, 1},
                         [](std::size_t a, std::size_t b) { return a == 2 ? 2 : a ^ b; });
}

/// Fiber over * is {a, b, c} with s swapping a, b; fiber over y is `over_y` fixed points.
inline ActionPtr split_fiber_action(const std::vector<std::string>& over_y) {
    auto G = bz2_plus_point();
    std::vector<std::string> objs{"a", "b", "c"};
    objs.insert(objs.end(), over_y.begin(), over_y.end());
    auto V = as_category(*discrete_groupoid(objs));
    std::vector<std::size_t> eps(objs.size(), 1);
    eps[0] = eps[1] = eps[2] = 0;
    const std::vector<std::size_t> so{1, 0, 2};
    auto on = [&](std::size_t v, std::size_t g) { return g == 1 ? so[v] : v; };
    return std::make_shared<GroupoidActionOnCategory>(make_action(
        G, V, eps, eps, on, [&](std::size_t f, std::size_t g) { return V->id(on(V->src[f], g)); }));
}

/// Functor of groupoids given by object and arrow images; validated.
inline GroupoidFunctor groupoid_hom(GroupoidPtr src, GroupoidPtr dst, std::vector<std::size_t> obj, std::vector<std::size_t> arr) {
    return functor_validate(GroupoidFunctor{std::move(src), std::move(dst), std::move(obj), std::move(arr)});
}

/**
 * \brief Three-stage tower G'' -> G' -> B(Z/2): G' codiscrete on {x1, x2}
 * with x1 > x2 sent to the generator, G'' discrete on {y1, y2, y3} over x1, x1, x2.
 */
struct Tower {
    GroupoidFunctor phi, psi;
};

inline Tower three_stage_tower(const GroupoidPtr& G) {
    auto Gp = codiscrete_groupoid({"x1", "x2"});
    auto Gpp = discrete_groupoid({"y1", "y2", "y3"});
    auto phi = groupoid_hom(Gp, G, {0, 0}, {0, 1, 1, 0});
    auto psi = groupoid_hom(Gpp, Gp, {0, 0, 1}, {Gp->id(0), Gp->id(0), Gp->id(1)});
    return {phi, psi};
}

/// Codiscrete base on m0..m3; the generator of Z/2 swaps m0, m1 and m2, m3.
inline ActionPtr swap_base_action(GroupoidPtr acting = nullptr) {
    auto B = codiscrete_groupoid({"m0", "m1", "m2", "m3"});
    auto C = as_category(*B);
    const std::vector<std::size_t> so{1, 0, 3, 2};
    auto on = [&](std::size_t m, std::size_t g) { return g == 0 ? m : so[m]; };
    return std::make_shared<GroupoidActionOnCategory>(make_action(
        acting ? acting : bz2(), C, std::vector<std::size_t>(4, 0), std::vector<std::size_t>(16, 0), on,
        [&](std::size_t f, std::size_t g) { return B->hom(on(B->src[f], g), on(B->tgt[f], g))[0]; }));
}

/**
 * \brief Equivariant descent over swap_base_action with fiber z2_wedge_action
 * on pieces {m0, m1, m2, m3}, {m0, m1}, {m2, m3}, each a union of orbits;
 * gamma_ij (i != j) is the swap of a, b on points listed in `swapped`.
 */
inline EquivariantDescent wedge_descent(const std::vector<std::size_t>& swapped) {
    auto fiber = z2_wedge_action();
    auto base = swap_base_action(fiber->acting);
    auto n = cech_nerve({{"m0", "m1", "m2", "m3"}, {{0, 1, 2, 3}, {0, 1}, {2, 3}}});
    auto id = identity_functor(fiber->target);
    auto sw = std::make_shared<CatFunctor>(CatFunctor{fiber->target, fiber->target, {1, 0, 2}, {1, 0, 2, 4, 3}});
    auto d = strict_descent(n, fiber->target, [&](std::size_t i, std::size_t j, std::size_t p) -> CatFunctorPtr {
        bool s = i != j && std::find(swapped.begin(), swapped.end(), p) != swapped.end();
        return s ? CatFunctorPtr(sw) : id;
    });
    return {base, fiber, std::move(d)};
}

}  // namespace cohere
