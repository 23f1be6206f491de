#pragma once

#include "cohere/fixtures.hpp"
#include "cohere/principal.hpp"

#include <random>
#include <string>
#include <vector>

namespace cohere {

inline std::vector<std::string> point_labels(std::size_t n) {
    std::vector<std::string> b;
    for (std::size_t p = 0; p < n; ++p) b.push_back("p" + std::to_string(p));
    return b;
}

/// Three pieces of a 5-point base; every point lies in exactly two.
inline NervePtr cover_3_of_5() { return cech_nerve({point_labels(5), {{0, 1, 2, 3}, {2, 3, 4}, {0, 1, 4}}}); }

/// Four pieces of a 6-point base; every point lies in at least two.
inline NervePtr cover_4_of_6() {
    return cech_nerve({point_labels(6), {{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 1, 4, 5}, {0, 2, 4}}});
}

/// Transition objects x_i x_j^-1 from seeded x, then a seeded gauge transform.
inline PrincipalData strict_cocycle(const NervePtr& n, const StrictTwoGroup& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t ng = s.xm.G->order(), nh = s.xm.H->order();
    std::vector<std::vector<std::size_t>> x(n->pieces(), std::vector<std::size_t>(n->points()));
    for (auto& row : x)
        for (auto& e : row) e = rng() % ng;
    auto P = strict_principal(n, s, x);
    std::vector<std::vector<std::size_t>> u(n->count(1), std::vector<std::size_t>(n->points(), kNone));
    for (std::size_t c = 0; c < n->count(1); ++c)
        for (auto p : n->overlaps[1][c]) u[c][p] = s.arrow(P.g[c][p], rng() % nh);
    return gauge_principal(P, u);
}

/// Trivial cocycle on a coherent 2-group gauged by seeded arrows out of the unit.
inline PrincipalData gauged_trivial_cocycle(const NervePtr& n, const TwoGroupPtr& tg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& G = *tg->gpd;
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        if (G.src[a] == tg->unit) out.push_back(a);
    auto P = trivial_principal(n, tg);
    std::vector<std::vector<std::size_t>> u(n->count(1), std::vector<std::size_t>(n->points(), kNone));
    for (std::size_t c = 0; c < n->count(1); ++c)
        for (auto p : n->overlaps[1][c]) u[c][p] = out[rng() % out.size()];
    return gauge_principal(P, u);
}

/// Associated bundle of the inner S3 crossed 2-representation.
inline DescentPtr<LinearCategory<Rational>> inner_s3_bundle(const NervePtr& n, std::uint64_t seed) {
    auto s = strict_two_group(xm_inner_s3());
    auto A = crossed_2rep<Rational>(s, s3_reps<Rational>(delooping(s.xm.H)));
    return std::make_shared<DescentObject<LinearCategory<Rational>>>(associated_bundle(strict_cocycle(n, s, seed), *A));
}

/// Associated bundle of the transferred Z/3 fixture, whose phi is not the identity.
inline DescentPtr<LinearCategory<QOmega>> transferred_bundle(const NervePtr& n, std::uint64_t seed) {
    auto [d, A] = transferred_z3_2rep();
    return std::make_shared<DescentObject<LinearCategory<QOmega>>>(
        associated_bundle(gauged_trivial_cocycle(n, d.tg, seed), *A));
}

/// Two objects and identities only, with the swap autofunctor.
inline std::pair<CategoryPtr, CatFunctorPtr> swap_category() {
    auto c = as_category(*discrete_groupoid({"a", "b"}));
    auto sw = std::make_shared<CatFunctor>();
    sw->src = sw->dst = c;
    sw->obj = {1, 0};
    sw->arr.resize(2);
    sw->arr[c->id(0)] = c->id(1);
    sw->arr[c->id(1)] = c->id(0);
    return {c, sw};
}

/// gamma_ij = swap^(c_i + c_j) from a Z/2-valued 0-cochain c, phi identities.
inline DescentPtr<FiniteCategory> swap_coboundary(const NervePtr& n, const std::vector<std::vector<int>>& c) {
    auto [cat, sw] = swap_category();
    auto id = identity_functor(cat);
    auto d = std::make_shared<DescentObject<FiniteCategory>>(trivial_descent<FiniteCategory>(n, cat));
    for (std::size_t k = 0; k < n->count(1); ++k) {
        auto t = n->decode(k, 2);
        for (auto p : n->overlaps[1][k]) d->gamma[k][p] = (c[t[0]][p] + c[t[1]][p]) % 2 ? sw : id;
    }
    for (std::size_t k = 0; k < n->count(2); ++k) {
        auto t = n->decode(k, 3);
        for (auto p : n->overlaps[2][k]) {
            const auto& ik = d->g(t[0], t[2], p);
            d->phi[k][p] = CatNat{ik, compose(d->g(t[0], t[1], p), d->g(t[1], t[2], p)), {cat->id(ik->obj[0]), cat->id(ik->obj[1])}};
        }
    }
    return d;
}

}  // namespace cohere
