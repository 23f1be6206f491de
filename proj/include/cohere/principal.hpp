#pragma once

#include "cohere/descent.hpp"
#include "cohere/two_rep.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief Descent data with values in a 2-group: objects g_ij(p) on U_ij and
 * arrows f_ijk(p): g_ik -> g_ij g_jk on U_ijk.
 */
struct PrincipalData {
    NervePtr nerve;
    TwoGroupPtr tg;
    std::vector<std::vector<std::size_t>> g;  // [code(i,j)][p]
    std::vector<std::vector<std::size_t>> f;  // [code(i,j,k)][p]

    std::size_t obj(std::size_t i, std::size_t j, std::size_t p) const { return g[nerve->encode({i, j})][p]; }
    std::size_t arr(std::size_t i, std::size_t j, std::size_t k, std::size_t p) const {
        return f[nerve->encode({i, j, k})][p];
    }
};

/**
 * \brief Laws: typing (f_ijk: g_ik -> g_ij g_jk) and the cocycle on U_ijkl:
 * a o (f_ijk x 1) o f_ikl = (1 x f_jkl) o f_ijl.
 */
inline std::vector<AuditReport> principal_descent_validate(const PrincipalData& P, const AuditOptions& opt = {}) {
    const auto& n = *P.nerve;
    const auto& t = *P.tg;
    const auto& G = *t.gpd;
    detail::NerveSites s2(n, 2), s3(n, 3);
    std::vector<AuditReport> out;
    std::vector<std::vector<bool>> typed(n.count(2), std::vector<bool>(n.points(), false));
    out.push_back(run_law(
        "typing", s2.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [tp, p] = s2.sites[x];
            std::size_t i = tp[0], j = tp[1], k = tp[2];
            std::string where = detail::point_str(n, tp, p);
            std::size_t ik = P.obj(i, k, p), ij = P.obj(i, j, p), jk = P.obj(j, k, p), a = P.arr(i, j, k, p);
            if (ik >= t.n() || ij >= t.n() || jk >= t.n() || a >= t.N()) return Counterexample{where, "out of range", ""};
            if (G.src[a] != ik || G.tgt[a] != t.tensor(ij, jk))
                return Counterexample{where, t.ol(G.src[a]) + "->" + t.ol(G.tgt[a]), t.ol(ik) + "->" + t.ol(t.tensor(ij, jk))};
            typed[n.encode(tp)][p] = true;
            return std::nullopt;
        },
        opt));
    out.push_back(run_law(
        "cocycle", s3.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [tp, p] = s3.sites[x];
            std::size_t i = tp[0], j = tp[1], k = tp[2], l = tp[3];
            for (const auto& f : {std::vector<std::size_t>{i, j, k}, {i, k, l}, {j, k, l}, {i, j, l}})
                if (!typed[n.encode(f)][p]) return std::nullopt;
            std::size_t gij = P.obj(i, j, p), gjk = P.obj(j, k, p), gkl = P.obj(k, l, p);
            std::size_t lhs = t.comp(t.a(gij, gjk, gkl), t.comp(t.tensor_arr(P.arr(i, j, k, p), t.id(gkl)), P.arr(i, k, l, p)));
            std::size_t rhs = t.comp(t.tensor_arr(t.id(gij), P.arr(j, k, l, p)), P.arr(i, j, l, p));
            if (lhs == rhs) return std::nullopt;
            return Counterexample{detail::point_str(n, tp, p), t.al(lhs), t.al(rhs)};
        },
        opt));
    return out;
}

/// g = unit, f = l_I^-1 everywhere.
inline PrincipalData trivial_principal(const NervePtr& n, const TwoGroupPtr& tg) {
    const auto& t = *tg;
    PrincipalData P{n, tg, {}, {}};
    P.g.assign(n->count(1), std::vector<std::size_t>(n->points(), kNone));
    P.f.assign(n->count(2), std::vector<std::size_t>(n->points(), kNone));
    for (std::size_t c = 0; c < n->count(1); ++c)
        for (auto p : n->overlaps[1][c]) P.g[c][p] = t.unit;
    std::size_t f = t.gpd->inv(t.l(t.unit));
    for (std::size_t c = 0; c < n->count(2); ++c)
        for (auto p : n->overlaps[2][c]) P.f[c][p] = f;
    return P;
}

/// g_ij = x_i x_j^-1 in the group of objects, f identities.
inline PrincipalData strict_principal(const NervePtr& n, const StrictTwoGroup& s,
                                      const std::vector<std::vector<std::size_t>>& x) {
    const auto& G = *s.xm.G;
    const auto& t = *s.tg;
    PrincipalData P{n, s.tg, {}, {}};
    P.g.assign(n->count(1), std::vector<std::size_t>(n->points(), kNone));
    P.f.assign(n->count(2), std::vector<std::size_t>(n->points(), kNone));
    for (std::size_t c = 0; c < n->count(1); ++c) {
        auto tp = n->decode(c, 2);
        for (auto p : n->overlaps[1][c]) P.g[c][p] = G.mul(x[tp[0]][p], G.inv(x[tp[1]][p]));
    }
    for (std::size_t c = 0; c < n->count(2); ++c) {
        auto tp = n->decode(c, 3);
        for (auto p : n->overlaps[2][c]) P.f[c][p] = t.id(P.obj(tp[0], tp[2], p));
    }
    return P;
}

/**
 * \brief Transport along arrows u_ij(p): g_ij -> g'_ij, giving
 * f'_ijk = (u_ij x u_jk) o f_ijk o u_ik^-1. Cocycles go to cocycles.
 */
inline PrincipalData gauge_principal(const PrincipalData& P, const std::vector<std::vector<std::size_t>>& u) {
    const auto& n = *P.nerve;
    const auto& t = *P.tg;
    const auto& G = *t.gpd;
    PrincipalData Q = P;
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) {
            if (G.src[u[c][p]] != P.g[c][p]) fail("BoundaryMismatch", "gauge arrow at " + n.point(p));
            Q.g[c][p] = G.tgt[u[c][p]];
        }
    for (std::size_t c = 0; c < n.count(2); ++c) {
        auto tp = n.decode(c, 3);
        for (auto p : n.overlaps[2][c]) {
            std::size_t uij = u[n.encode({tp[0], tp[1]})][p], ujk = u[n.encode({tp[1], tp[2]})][p],
                        uik = u[n.encode({tp[0], tp[2]})][p];
            Q.f[c][p] = t.comp(t.tensor_arr(uij, ujk), t.comp(P.f[c][p], G.inv(uik)));
        }
    }
    return Q;
}

/**
 * \brief gamma_ij = F o g_ij and phi_ijk = phi_{g_ij,g_jk}^-1 o eta_{f_ijk}.
 * Errors: CocycleInvalid(i,j,k,l at point), GroupoidMismatch.
 */
template <class S>
DescentObject<LinearCategory<S>> associated_bundle(const PrincipalData& P, const TwoRepresentation<S>& A) {
    using T = Fiber<LinearCategory<S>>;
    if (A.tg != P.tg) fail("GroupoidMismatch", "2-representation of another 2-group");
    for (const auto& r : principal_descent_validate(P))
        if (!r.passed()) fail("CocycleInvalid", r.law + " " + r.failures[0].instance);
    const auto& n = *P.nerve;
    DescentObject<LinearCategory<S>> d{P.nerve, A.carrier, {}, {}};
    d.gamma.assign(n.count(1), std::vector<FunctorPtr<S>>(n.points()));
    d.phi.assign(n.count(2), std::vector<LinearNat<S>>(n.points()));
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) d.gamma[c][p] = A.F[P.g[c][p]];
    for (std::size_t c = 0; c < n.count(2); ++c) {
        auto tp = n.decode(c, 3);
        for (auto p : n.overlaps[2][c]) {
            std::size_t gij = P.obj(tp[0], tp[1], p), gjk = P.obj(tp[1], tp[2], p);
            auto nat = vertical(inverse(A.phi_at(gij, gjk)), A.eta[P.f[c][p]]);
            d.phi[c][p] = T::nat(d.gamma[n.encode({tp[0], tp[2]})][p], compose(A.F[gij], A.F[gjk]), nat.comp);
        }
    }
    return d;
}

}  // namespace cohere
