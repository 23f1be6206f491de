#pragma once

#include "cohere/audit.hpp"
#include "cohere/fiber.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cohere {

/// A family of subsets of a finite base, given by point indices.
struct FiniteCover {
    std::vector<std::string> base;
    std::vector<std::vector<std::size_t>> pieces;
};

/**
 * \brief Overlaps of a cover through 4-fold intersections.
 *
 * Ordered tuples of piece indices, degenerate ones included, are encoded in
 * base m (m = number of pieces); overlaps[k][code] lists the points of the
 * (k+1)-fold intersection.
 */
struct CechNerve {
    FiniteCover cover;
    std::vector<std::vector<bool>> member;  // member[i][p]
    std::vector<std::vector<std::vector<std::size_t>>> overlaps;  // levels 0..3

    std::size_t pieces() const { return cover.pieces.size(); }
    std::size_t points() const { return cover.base.size(); }
    const std::string& point(std::size_t p) const { return cover.base[p]; }

    std::size_t encode(const std::vector<std::size_t>& t) const {
        std::size_t c = 0;
        for (auto i : t) c = c * pieces() + i;
        return c;
    }
    std::vector<std::size_t> decode(std::size_t code, std::size_t len) const {
        std::vector<std::size_t> t(len);
        for (std::size_t k = len; k-- > 0;) {
            t[k] = code % pieces();
            code /= pieces();
        }
        return t;
    }
    std::size_t count(std::size_t level) const { return overlaps[level].size(); }

    bool contains(const std::vector<std::size_t>& t, std::size_t p) const {
        for (auto i : t)
            if (!member[i][p]) return false;
        return true;
    }
    const std::vector<std::size_t>& overlap(const std::vector<std::size_t>& t) const {
        return overlaps[t.size() - 1][encode(t)];
    }

    /// d_i: drop the i-th index.
    static std::vector<std::size_t> face(std::vector<std::size_t> t, std::size_t i) {
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
        return t;
    }

    static std::string tuple_str(const std::vector<std::size_t>& t) {
        std::string s = "(";
        for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
        return s + ")";
    }
};

using NervePtr = std::shared_ptr<const CechNerve>;

/// Errors: NotACover(point), ValidationError.
inline NervePtr cech_nerve(FiniteCover cover) {
    auto n = std::make_shared<CechNerve>();
    const std::size_t np = cover.base.size(), m = cover.pieces.size();
    if (m == 0) fail("NotACover", np ? cover.base[0] : "empty family");
    n->member.assign(m, std::vector<bool>(np, false));
    for (std::size_t i = 0; i < m; ++i)
        for (auto p : cover.pieces[i]) {
            if (p >= np) fail("ValidationError", "piece " + std::to_string(i) + " has point " + std::to_string(p));
            n->member[i][p] = true;
        }
    for (std::size_t p = 0; p < np; ++p) {
        bool hit = false;
        for (std::size_t i = 0; i < m; ++i) hit = hit || n->member[i][p];
        if (!hit) fail("NotACover", cover.base[p]);
    }
    n->cover = std::move(cover);
    std::size_t size = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        size *= m;
        std::vector<std::vector<std::size_t>> level(size);
        for (std::size_t c = 0; c < size; ++c) {
            auto t = n->decode(c, k + 1);
            for (std::size_t p = 0; p < np; ++p)
                if (n->contains(t, p)) level[c].push_back(p);
        }
        n->overlaps.push_back(std::move(level));
    }
    return n;
}

/// A map of covers W -> U with W_a contained in U_{map[a]}.
struct Refinement {
    NervePtr fine, coarse;
    std::vector<std::size_t> map;
};

/// Errors: NotARefinement(piece).
inline Refinement refinement(NervePtr fine, NervePtr coarse, std::vector<std::size_t> map) {
    if (fine->points() != coarse->points()) fail("NotARefinement", "different bases");
    if (map.size() != fine->pieces()) fail("NotARefinement", "map not total");
    for (std::size_t a = 0; a < map.size(); ++a) {
        if (map[a] >= coarse->pieces()) fail("NotARefinement", "piece " + std::to_string(a) + " maps out of range");
        for (auto p : fine->cover.pieces[a])
            if (!coarse->member[map[a]][p])
                fail("NotARefinement", "piece " + std::to_string(a) + " at " + fine->point(p));
    }
    return Refinement{std::move(fine), std::move(coarse), std::move(map)};
}

inline Refinement identity_refinement(const NervePtr& n) {
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < n->pieces(); ++i) map.push_back(i);
    return Refinement{n, n, map};
}

/// outer o inner.
inline Refinement compose(const Refinement& outer, const Refinement& inner) {
    if (inner.coarse != outer.fine) fail("BoundaryMismatch", "refinement composition");
    std::vector<std::size_t> map;
    for (auto a : inner.map) map.push_back(outer.map[a]);
    return Refinement{inner.fine, outer.coarse, map};
}

/// Pieces (a, b) ranging over all pairs, W_a intersected with W'_b, with both projections.
struct IntersectionCover {
    NervePtr nerve;
    Refinement first, second;
};

inline IntersectionCover intersection_cover(const NervePtr& w1, const NervePtr& w2) {
    FiniteCover c;
    c.base = w1->cover.base;
    std::vector<std::size_t> p1, p2;
    for (std::size_t a = 0; a < w1->pieces(); ++a)
        for (std::size_t b = 0; b < w2->pieces(); ++b) {
            std::vector<std::size_t> pts;
            for (std::size_t p = 0; p < w1->points(); ++p)
                if (w1->member[a][p] && w2->member[b][p]) pts.push_back(p);
            c.pieces.push_back(std::move(pts));
            p1.push_back(a);
            p2.push_back(b);
        }
    auto n = cech_nerve(std::move(c));
    return IntersectionCover{n, refinement(n, w1, p1), refinement(n, w2, p2)};
}

/**
 * \brief Descent data with values in a fiber category: gamma_ij(p) an
 * autoequivalence on U_ij, phi_ijk(p): gamma_ik => gamma_ij gamma_jk on U_ijk.
 *
 * gamma[code(i,j)][p] and phi[code(i,j,k)][p]; entries off the overlap are unused.
 */
template <class C>
struct DescentObject {
    using T = Fiber<C>;
    NervePtr nerve;
    typename T::Cat fiber;
    std::vector<std::vector<typename T::Functor>> gamma;
    std::vector<std::vector<typename T::Nat>> phi;

    const typename T::Functor& g(std::size_t i, std::size_t j, std::size_t p) const {
        return gamma[nerve->encode({i, j})][p];
    }
    const typename T::Nat& f(std::size_t i, std::size_t j, std::size_t k, std::size_t p) const {
        return phi[nerve->encode({i, j, k})][p];
    }
};

template <class C>
using DescentPtr = std::shared_ptr<const DescentObject<C>>;

namespace detail {

inline std::string point_str(const CechNerve& n, const std::vector<std::size_t>& t, std::size_t p) {
    return CechNerve::tuple_str(t) + " at " + n.point(p);
}

/// Enumerates (tuple, point) pairs of a nerve level as one flat index.
struct NerveSites {
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sites;

    NerveSites(const CechNerve& n, std::size_t level) {
        for (std::size_t c = 0; c < n.count(level); ++c)
            for (auto p : n.overlaps[level][c]) sites.emplace_back(n.decode(c, level + 1), p);
    }
};

template <class C>
bool same_tables(const DescentObject<C>& a, const DescentObject<C>& b) {
    using T = Fiber<C>;
    if (a.fiber != b.fiber || a.nerve->points() != b.nerve->points() || a.nerve->pieces() != b.nerve->pieces())
        return false;
    const auto& n = *a.nerve;
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c])
            if (!T::equal(a.gamma[c][p], b.gamma[c][p])) return false;
    for (std::size_t c = 0; c < n.count(2); ++c)
        for (auto p : n.overlaps[2][c]) {
            const auto& x = a.phi[c][p];
            const auto& y = b.phi[c][p];
            for (std::size_t v = 0; v < T::size(a.fiber); ++v)
                if (!T::same(T::at(x, v), T::at(y, v))) return false;
        }
    return true;
}

}  // namespace detail

/**
 * \brief Laws: gamma_autoequivalence on U_ij, phi_natural_iso on U_ijk, and
 * the pentagon on U_ijkl at every fiber object v:
 * (phi_ijk)_{gamma_kl v} o (phi_ikl)_v = gamma_ij((phi_jkl)_v) o (phi_ijl)_v.
 */
template <class C>
std::vector<AuditReport> descent_object_validate(const DescentObject<C>& d, const AuditOptions& opt = {}) {
    using T = Fiber<C>;
    const auto& n = *d.nerve;
    const std::size_t nv = T::size(d.fiber);
    std::vector<AuditReport> out;

    detail::NerveSites s1(n, 1), s2(n, 2), s3(n, 3);
    // gamma tables typically repeat a few functors; memoize by identity
    std::map<const void*, std::optional<std::string>> seen;
    std::map<std::pair<const void*, const void*>, typename T::Functor> composites;
    auto composite = [&](const typename T::Functor& G, const typename T::Functor& F) {
        auto key = std::make_pair(static_cast<const void*>(G.get()), static_cast<const void*>(F.get()));
        auto it = composites.find(key);
        if (it == composites.end()) it = composites.emplace(key, T::compose_f(G, F)).first;
        return it->second;
    };
    out.push_back(run_law(
        "gamma_autoequivalence", s1.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [t, p] = s1.sites[x];
            const auto& F = d.gamma[n.encode(t)][p];
            if (!F || F->src != d.fiber || F->dst != d.fiber)
                return Counterexample{detail::point_str(n, t, p), "missing", "autofunctor"};
            auto it = seen.find(F.get());
            if (it == seen.end()) it = seen.emplace(F.get(), T::functor_problem(F, true)).first;
            if (it->second) return Counterexample{detail::point_str(n, t, p), *it->second, "autoequivalence"};
            return std::nullopt;
        },
        opt));

    std::vector<std::vector<bool>> typed_at(n.count(2), std::vector<bool>(n.points(), false));
    out.push_back(run_law(
        "phi_natural_iso", s2.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [t, p] = s2.sites[x];
            std::size_t i = t[0], j = t[1], k = t[2];
            std::string where = detail::point_str(n, t, p);
            const auto& ik = d.g(i, k, p);
            const auto& ij = d.g(i, j, p);
            const auto& jk = d.g(j, k, p);
            if (!ik || !ij || !jk) return Counterexample{where, "gamma missing", ""};
            std::optional<std::string> e;
            try {
                e = T::nat_problem(ik, composite(ij, jk), d.f(i, j, k, p), true);
            } catch (const Error& err) {
                e = err.what();
            }
            if (e) return Counterexample{where, *e, "natural isomorphism"};
            typed_at[n.encode(t)][p] = true;
            return std::nullopt;
        },
        opt));

    std::vector<std::size_t> radix{s3.sites.size(), nv};
    out.push_back(run_law(
        "pentagon", index_space(radix),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            auto dg = decode_index(x, radix);
            const auto& [t, p] = s3.sites[dg[0]];
            std::size_t v = dg[1];
            std::size_t i = t[0], j = t[1], k = t[2], l = t[3];
            std::string where = detail::point_str(n, t, p) + " object " + T::label(d.fiber, v);
            for (const auto& f : {std::vector<std::size_t>{i, j, k}, {i, k, l}, {j, k, l}, {i, j, l}})
                if (!typed_at[n.encode(f)][p]) return std::nullopt;
            try {
                const auto& kl = d.g(k, l, p);
                std::size_t u = T::obj(kl, v);
                auto lhs = T::then(d.fiber, T::at(d.f(i, j, k, p), u), T::at(d.f(i, k, l, p), v));
                const auto& jkl = T::at(d.f(j, k, l, p), v);
                std::size_t a = T::obj(d.g(j, l, p), v);
                std::size_t b = T::obj(d.g(j, k, p), u);
                auto rhs = T::then(d.fiber, T::map(d.g(i, j, p), a, b, jkl), T::at(d.f(i, j, l, p), v));
                if (!T::same(lhs, rhs)) return Counterexample{where, T::str(d.fiber, lhs), T::str(d.fiber, rhs)};
            } catch (const Error& err) {
                return Counterexample{where, err.what(), "defined"};
            }
            return std::nullopt;
        },
        opt));
    return out;
}

/// gamma_ij = id, phi_ijk = id on every overlap.
template <class C>
DescentObject<C> trivial_descent(const NervePtr& n, const typename Fiber<C>::Cat& fiber) {
    using T = Fiber<C>;
    DescentObject<C> d{n, fiber, {}, {}};
    auto id = T::identity(fiber);
    std::vector<typename T::Mor> ids;
    for (std::size_t v = 0; v < T::size(fiber); ++v) ids.push_back(T::id(fiber, v));
    auto idid = T::compose_f(id, id);
    d.gamma.assign(n->count(1), std::vector<typename T::Functor>(n->points()));
    d.phi.assign(n->count(2), std::vector<typename T::Nat>(n->points()));
    for (std::size_t c = 0; c < n->count(1); ++c)
        for (auto p : n->overlaps[1][c]) d.gamma[c][p] = id;
    for (std::size_t c = 0; c < n->count(2); ++c)
        for (auto p : n->overlaps[2][c]) d.phi[c][p] = T::nat(id, idid, ids);
    return d;
}

/**
 * \brief A 1-morphism src -> dst over one cover: gamma_i(p) a functor from
 * the source fiber to the target fiber, phi_ij(p): gamma_i src.gamma_ij =>
 * dst.gamma_ij gamma_j.
 */
template <class C>
struct DescentMorphism {
    using T = Fiber<C>;
    DescentPtr<C> src, dst;
    std::vector<std::vector<typename T::Functor>> gamma;  // [i][p]
    std::vector<std::vector<typename T::Nat>> phi;        // [code(i,j)][p]

    const typename T::Nat& f(std::size_t i, std::size_t j, std::size_t p) const {
        return phi[src->nerve->encode({i, j})][p];
    }
};

/**
 * \brief Laws: gamma_functor, phi_natural_iso and the prism on U_ijk at every
 * source object w:
 * (phi_ijk)_{gamma_k w} o (phi_ik)_w
 *   = gamma_ij((phi_jk)_w) o (phi_ij)_{src.gamma_jk w} o gamma_i((src.phi_ijk)_w).
 */
template <class C>
std::vector<AuditReport> descent_morphism_validate(const DescentMorphism<C>& m, const AuditOptions& opt = {}) {
    using T = Fiber<C>;
    const auto& n = *m.src->nerve;
    const auto& S = *m.src;
    const auto& D = *m.dst;
    if (m.src->nerve != m.dst->nerve) fail("BoundaryMismatch", "morphism between different covers");
    std::vector<AuditReport> out;
    detail::NerveSites s0(n, 0), s1(n, 1), s2(n, 2);

    std::vector<std::vector<bool>> fun_ok(n.pieces(), std::vector<bool>(n.points(), false));
    out.push_back(run_law(
        "gamma_functor", s0.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [t, p] = s0.sites[x];
            std::string where = detail::point_str(n, t, p);
            const auto& F = m.gamma[t[0]][p];
            if (!F || F->src != S.fiber || F->dst != D.fiber) return Counterexample{where, "missing", "functor"};
            if (auto e = T::functor_problem(F, false)) return Counterexample{where, *e, "functor"};
            fun_ok[t[0]][p] = true;
            return std::nullopt;
        },
        opt));

    std::vector<std::vector<bool>> typed(n.count(1), std::vector<bool>(n.points(), false));
    out.push_back(run_law(
        "phi_natural_iso", s1.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [t, p] = s1.sites[x];
            std::size_t i = t[0], j = t[1];
            std::string where = detail::point_str(n, t, p);
            if (!fun_ok[i][p] || !fun_ok[j][p]) return std::nullopt;
            std::optional<std::string> e;
            try {
                e = T::nat_problem(T::compose_f(m.gamma[i][p], S.g(i, j, p)), T::compose_f(D.g(i, j, p), m.gamma[j][p]),
                                   m.f(i, j, p), true);
            } catch (const Error& err) {
                e = err.what();
            }
            if (e) return Counterexample{where, *e, "natural isomorphism"};
            typed[n.encode(t)][p] = true;
            return std::nullopt;
        },
        opt));

    std::vector<std::size_t> radix{s2.sites.size(), T::size(S.fiber)};
    out.push_back(run_law(
        "prism", index_space(radix),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            auto dg = decode_index(x, radix);
            const auto& [t, p] = s2.sites[dg[0]];
            std::size_t w = dg[1];
            std::size_t i = t[0], j = t[1], k = t[2];
            std::string where = detail::point_str(n, t, p) + " object " + T::label(S.fiber, w);
            if (!typed[n.encode({i, j})][p] || !typed[n.encode({j, k})][p] || !typed[n.encode({i, k})][p]) return std::nullopt;
            try {
                std::size_t gk = T::obj(m.gamma[k][p], w);
                auto lhs = T::then(D.fiber, T::at(D.f(i, j, k, p), gk), T::at(m.f(i, k, p), w));
                std::size_t ik = T::obj(S.g(i, k, p), w);
                std::size_t jk = T::obj(S.g(j, k, p), w);
                std::size_t ijk = T::obj(S.g(i, j, p), jk);
                auto r1 = T::map(m.gamma[i][p], ik, ijk, T::at(S.f(i, j, k, p), w));
                auto r2 = T::at(m.f(i, j, p), jk);
                std::size_t a = T::obj(m.gamma[j][p], jk);
                std::size_t b = T::obj(D.g(j, k, p), gk);
                auto r3 = T::map(D.g(i, j, p), a, b, T::at(m.f(j, k, p), w));
                auto rhs = T::then(D.fiber, r3, T::then(D.fiber, r2, r1));
                if (!T::same(lhs, rhs)) return Counterexample{where, T::str(D.fiber, lhs), T::str(D.fiber, rhs)};
            } catch (const Error& err) {
                return Counterexample{where, err.what(), "defined"};
            }
            return std::nullopt;
        },
        opt));
    return out;
}

/// gamma_i = id, phi_ij = id.
template <class C>
DescentMorphism<C> identity_morphism(const DescentPtr<C>& d) {
    using T = Fiber<C>;
    const auto& n = *d->nerve;
    DescentMorphism<C> m{d, d, {}, {}};
    auto id = T::identity(d->fiber);
    m.gamma.assign(n.pieces(), std::vector<typename T::Functor>(n.points()));
    m.phi.assign(n.count(1), std::vector<typename T::Nat>(n.points()));
    for (std::size_t i = 0; i < n.pieces(); ++i)
        for (auto p : n.overlaps[0][i]) m.gamma[i][p] = id;
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) {
            auto t = n.decode(c, 2);
            const auto& g = d->g(t[0], t[1], p);
            std::vector<typename T::Mor> ids;
            for (std::size_t v = 0; v < T::size(d->fiber); ++v) ids.push_back(T::id(d->fiber, T::obj(g, v)));
            m.phi[c][p] = T::nat(T::compose_f(id, g), T::compose_f(g, id), ids);
        }
    return m;
}

/// n o m over one cover: functors n_i m_i, phi at w = (n.phi_ij)_{m_j w} o n_i((m.phi_ij)_w).
template <class C>
DescentMorphism<C> compose(const DescentMorphism<C>& b, const DescentMorphism<C>& a) {
    using T = Fiber<C>;
    if (a.src->nerve != b.src->nerve || !detail::same_tables(*a.dst, *b.src))
        fail("BoundaryMismatch", "descent morphism composition");
    const auto& n = *a.src->nerve;
    DescentMorphism<C> m{a.src, b.dst, {}, {}};
    m.gamma.assign(n.pieces(), std::vector<typename T::Functor>(n.points()));
    m.phi.assign(n.count(1), std::vector<typename T::Nat>(n.points()));
    for (std::size_t i = 0; i < n.pieces(); ++i)
        for (auto p : n.overlaps[0][i]) m.gamma[i][p] = T::compose_f(b.gamma[i][p], a.gamma[i][p]);
    const auto& mid = *a.dst;
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) {
            auto t = n.decode(c, 2);
            std::size_t i = t[0], j = t[1];
            std::vector<typename T::Mor> comp;
            for (std::size_t w = 0; w < T::size(a.src->fiber); ++w) {
                std::size_t x = T::obj(a.gamma[i][p], T::obj(a.src->g(i, j, p), w));
                std::size_t y = T::obj(mid.g(i, j, p), T::obj(a.gamma[j][p], w));
                auto inner = T::map(b.gamma[i][p], x, y, T::at(a.f(i, j, p), w));
                comp.push_back(T::then(b.dst->fiber, T::at(b.f(i, j, p), T::obj(a.gamma[j][p], w)), inner));
            }
            m.phi[c][p] = T::nat(T::compose_f(m.gamma[i][p], a.src->g(i, j, p)),
                                 T::compose_f(b.dst->g(i, j, p), m.gamma[j][p]), std::move(comp));
        }
    return m;
}

/**
 * \brief Inverse of a morphism whose gamma_i are isomorphisms:
 * gamma_i^-1, phi at v = gamma_i^-1((phi_ij)_{gamma_j^-1 v}^-1). Errors: NotInvertible.
 */
template <class C>
DescentMorphism<C> inverse(const DescentMorphism<C>& m) {
    using T = Fiber<C>;
    const auto& n = *m.src->nerve;
    DescentMorphism<C> r{m.dst, m.src, {}, {}};
    r.gamma.assign(n.pieces(), std::vector<typename T::Functor>(n.points()));
    r.phi.assign(n.count(1), std::vector<typename T::Nat>(n.points()));
    for (std::size_t i = 0; i < n.pieces(); ++i)
        for (auto p : n.overlaps[0][i]) r.gamma[i][p] = T::inverse_f(m.gamma[i][p]);
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) {
            auto t = n.decode(c, 2);
            std::size_t i = t[0], j = t[1];
            std::vector<typename T::Mor> comp;
            for (std::size_t v = 0; v < T::size(m.dst->fiber); ++v) {
                std::size_t u = T::obj(r.gamma[j][p], v);
                auto back = T::inv(m.dst->fiber, T::at(m.f(i, j, p), u));
                if (!back) fail("NotInvertible", detail::point_str(n, t, p));
                std::size_t a = T::obj(m.dst->g(i, j, p), v);
                std::size_t b = T::obj(m.gamma[i][p], T::obj(m.src->g(i, j, p), u));
                comp.push_back(T::map(r.gamma[i][p], a, b, *back));
            }
            r.phi[c][p] = T::nat(T::compose_f(r.gamma[i][p], m.dst->g(i, j, p)),
                                 T::compose_f(m.src->g(i, j, p), r.gamma[j][p]), std::move(comp));
        }
    return r;
}

/// A 2-morphism theta_i(p): src.gamma_i => dst.gamma_i between parallel morphisms.
template <class C>
struct Descent2Morphism {
    using T = Fiber<C>;
    std::shared_ptr<const DescentMorphism<C>> src, dst;
    std::vector<std::vector<typename T::Nat>> theta;  // [i][p]
};

/**
 * \brief Laws: theta_natural_iso on U_i and the square on U_ij at every source object w:
 * (dst.phi_ij)_w o (theta_i)_{src.gamma_ij w} = gamma_ij((theta_j)_w) o (src.phi_ij)_w.
 */
template <class C>
std::vector<AuditReport> descent_2morphism_validate(const Descent2Morphism<C>& b, const AuditOptions& opt = {}) {
    using T = Fiber<C>;
    const auto& m1 = *b.src;
    const auto& m2 = *b.dst;
    const auto& n = *m1.src->nerve;
    const auto& E = *m1.src;
    const auto& F = *m1.dst;
    if (m2.src->nerve != m1.src->nerve || !detail::same_tables(*m1.src, *m2.src) || !detail::same_tables(*m1.dst, *m2.dst))
        fail("BoundaryMismatch", "2-morphism between non-parallel morphisms");
    std::vector<AuditReport> out;
    detail::NerveSites s0(n, 0), s1(n, 1);
    std::vector<std::vector<bool>> typed(n.pieces(), std::vector<bool>(n.points(), false));
    out.push_back(run_law(
        "theta_natural_iso", s0.sites.size(),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            const auto& [t, p] = s0.sites[x];
            std::size_t i = t[0];
            std::optional<std::string> e;
            try {
                e = T::nat_problem(m1.gamma[i][p], m2.gamma[i][p], b.theta[i][p], true);
            } catch (const Error& err) {
                e = err.what();
            }
            if (e) return Counterexample{detail::point_str(n, t, p), *e, "natural isomorphism"};
            typed[i][p] = true;
            return std::nullopt;
        },
        opt));
    std::vector<std::size_t> radix{s1.sites.size(), T::size(E.fiber)};
    out.push_back(run_law(
        "square", index_space(radix),
        [&](std::uint64_t x) -> std::optional<Counterexample> {
            auto dg = decode_index(x, radix);
            const auto& [t, p] = s1.sites[dg[0]];
            std::size_t w = dg[1], i = t[0], j = t[1];
            std::string where = detail::point_str(n, t, p) + " object " + T::label(E.fiber, w);
            if (!typed[i][p] || !typed[j][p]) return std::nullopt;
            try {
                std::size_t gw = T::obj(E.g(i, j, p), w);
                auto lhs = T::then(F.fiber, T::at(m2.f(i, j, p), w), T::at(b.theta[i][p], gw));
                std::size_t a = T::obj(m1.gamma[j][p], w), c = T::obj(m2.gamma[j][p], w);
                auto rhs = T::then(F.fiber, T::map(F.g(i, j, p), a, c, T::at(b.theta[j][p], w)), T::at(m1.f(i, j, p), w));
                if (!T::same(lhs, rhs)) return Counterexample{where, T::str(F.fiber, lhs), T::str(F.fiber, rhs)};
            } catch (const Error& err) {
                return Counterexample{where, err.what(), "defined"};
            }
            return std::nullopt;
        },
        opt));
    return out;
}

/// Pulls every table back along r. Errors: NotARefinement, BoundaryMismatch.
template <class C>
DescentObject<C> refine(const DescentObject<C>& d, const Refinement& r) {
    using T = Fiber<C>;
    if (r.coarse != d.nerve) fail("BoundaryMismatch", "refinement target is not the cover of the data");
    const auto& w = *r.fine;
    DescentObject<C> o{r.fine, d.fiber, {}, {}};
    o.gamma.assign(w.count(1), std::vector<typename T::Functor>(w.points()));
    o.phi.assign(w.count(2), std::vector<typename T::Nat>(w.points()));
    for (std::size_t c = 0; c < w.count(1); ++c) {
        auto t = w.decode(c, 2);
        for (auto p : w.overlaps[1][c]) o.gamma[c][p] = d.g(r.map[t[0]], r.map[t[1]], p);
    }
    for (std::size_t c = 0; c < w.count(2); ++c) {
        auto t = w.decode(c, 3);
        for (auto p : w.overlaps[2][c]) o.phi[c][p] = d.f(r.map[t[0]], r.map[t[1]], r.map[t[2]], p);
    }
    return o;
}

template <class C>
DescentMorphism<C> refine(const DescentMorphism<C>& m, const Refinement& r) {
    using T = Fiber<C>;
    const auto& w = *r.fine;
    DescentMorphism<C> o{std::make_shared<DescentObject<C>>(refine(*m.src, r)),
                         std::make_shared<DescentObject<C>>(refine(*m.dst, r)), {}, {}};
    o.gamma.assign(w.pieces(), std::vector<typename T::Functor>(w.points()));
    o.phi.assign(w.count(1), std::vector<typename T::Nat>(w.points()));
    for (std::size_t a = 0; a < w.pieces(); ++a)
        for (auto p : w.overlaps[0][a]) o.gamma[a][p] = m.gamma[r.map[a]][p];
    for (std::size_t c = 0; c < w.count(1); ++c) {
        auto t = w.decode(c, 2);
        for (auto p : w.overlaps[1][c]) o.phi[c][p] = m.f(r.map[t[0]], r.map[t[1]], p);
    }
    return o;
}

/// 2-morphism pulled back along r, between the pulled back morphisms.
template <class C>
Descent2Morphism<C> refine(const Descent2Morphism<C>& b, const Refinement& r) {
    using T = Fiber<C>;
    const auto& w = *r.fine;
    Descent2Morphism<C> o{std::make_shared<DescentMorphism<C>>(refine(*b.src, r)),
                          std::make_shared<DescentMorphism<C>>(refine(*b.dst, r)), {}};
    o.theta.assign(w.pieces(), std::vector<typename T::Nat>(w.points()));
    for (std::size_t a = 0; a < w.pieces(); ++a)
        for (auto p : w.overlaps[0][a]) o.theta[a][p] = b.theta[r.map[a]][p];
    return o;
}

/**
 * \brief The canonical identification E|from -> E|to for two refinements
 * from the same fine cover: functor gamma_{to(a) from(a)} on piece a, and
 * phi_ab = phi_{ta,tb,fb} o phi_{ta,fa,fb}^-1.
 */
template <class C>
DescentMorphism<C> refinement_transition(const DescentPtr<C>& E, const Refinement& from, const Refinement& to) {
    using T = Fiber<C>;
    if (from.fine != to.fine || from.coarse != E->nerve || to.coarse != E->nerve)
        fail("BoundaryMismatch", "refinements of different covers");
    const auto& w = *from.fine;
    const auto& e = *E;
    DescentMorphism<C> m{std::make_shared<DescentObject<C>>(refine(e, from)), std::make_shared<DescentObject<C>>(refine(e, to)),
                         {}, {}};
    m.gamma.assign(w.pieces(), std::vector<typename T::Functor>(w.points()));
    m.phi.assign(w.count(1), std::vector<typename T::Nat>(w.points()));
    for (std::size_t a = 0; a < w.pieces(); ++a)
        for (auto p : w.overlaps[0][a]) m.gamma[a][p] = e.g(to.map[a], from.map[a], p);
    for (std::size_t c = 0; c < w.count(1); ++c) {
        auto t = w.decode(c, 2);
        std::size_t ta = to.map[t[0]], tb = to.map[t[1]], fa = from.map[t[0]], fb = from.map[t[1]];
        for (auto p : w.overlaps[1][c]) {
            std::vector<typename T::Mor> comp;
            for (std::size_t v = 0; v < T::size(e.fiber); ++v) {
                auto back = T::inv(e.fiber, T::at(e.f(ta, fa, fb, p), v));
                if (!back) fail("NotInvertible", detail::point_str(w, t, p));
                comp.push_back(T::then(e.fiber, T::at(e.f(ta, tb, fb, p), v), *back));
            }
            m.phi[c][p] = T::nat(T::compose_f(m.gamma[t[0]][p], e.g(fa, fb, p)), T::compose_f(e.g(ta, tb, p), m.gamma[t[1]][p]),
                                 std::move(comp));
        }
    }
    return m;
}

/**
 * \brief A morphism of the plus construction: a common refinement W of the
 * source and target covers and a descent morphism src|W -> dst|W.
 */
template <class C>
struct PlusMorphism {
    DescentPtr<C> src, dst;
    Refinement to_src, to_dst;
    DescentMorphism<C> local;
};

/// Errors: NotARefinement, BoundaryMismatch.
template <class C>
PlusMorphism<C> plus_morphism(DescentPtr<C> src, DescentPtr<C> dst, Refinement to_src, Refinement to_dst,
                              DescentMorphism<C> local) {
    if (to_src.fine != to_dst.fine || to_src.coarse != src->nerve || to_dst.coarse != dst->nerve)
        fail("NotARefinement", "refinements do not share the local cover");
    if (local.src->nerve != to_src.fine || !detail::same_tables(*local.src, refine(*src, to_src)) ||
        !detail::same_tables(*local.dst, refine(*dst, to_dst)))
        fail("BoundaryMismatch", "local morphism does not match the refined objects");
    return PlusMorphism<C>{std::move(src), std::move(dst), std::move(to_src), std::move(to_dst), std::move(local)};
}

template <class C>
PlusMorphism<C> plus_identity(const DescentPtr<C>& d) {
    auto r = identity_refinement(d->nerve);
    auto m = identity_morphism(d);
    return PlusMorphism<C>{d, d, r, r, m};
}

template <class C>
PlusMorphism<C> plus_inverse(const PlusMorphism<C>& m) {
    return PlusMorphism<C>{m.dst, m.src, m.to_dst, m.to_src, inverse(m.local)};
}

/**
 * \brief n o m over the intersection cover of the two local covers; the two
 * refinements of the middle object are bridged by refinement_transition.
 */
template <class C>
PlusMorphism<C> plus_compose(const PlusMorphism<C>& n, const PlusMorphism<C>& m) {
    if (m.dst != n.src && !(m.dst->nerve == n.src->nerve && detail::same_tables(*m.dst, *n.src)))
        fail("BoundaryMismatch", "plus composition");
    auto ic = intersection_cover(m.to_src.fine, n.to_src.fine);
    auto mm = refine(m.local, ic.first);
    auto nn = refine(n.local, ic.second);
    auto from = compose(m.to_dst, ic.first);
    auto to = compose(n.to_src, ic.second);
    auto c = refinement_transition(m.dst, from, to);
    auto local = compose(nn, compose(c, mm));
    return PlusMorphism<C>{m.src, n.dst, compose(m.to_src, ic.first), compose(n.to_dst, ic.second), std::move(local)};
}

/**
 * \brief A 2-morphism of the plus construction between m1 and m2: a cover V
 * refining both local covers compatibly, and a 2-morphism over V.
 */
template <class C>
struct Plus2Morphism {
    std::shared_ptr<const PlusMorphism<C>> src, dst;
    Refinement to1, to2;
    Descent2Morphism<C> local;
};

/// Errors: NotARefinement when the two routes to the base covers disagree.
template <class C>
Plus2Morphism<C> plus_2morphism(std::shared_ptr<const PlusMorphism<C>> m1, std::shared_ptr<const PlusMorphism<C>> m2,
                                Refinement to1, Refinement to2, std::vector<std::vector<typename Fiber<C>::Nat>> theta) {
    if (to1.fine != to2.fine || to1.coarse != m1->to_src.fine || to2.coarse != m2->to_src.fine)
        fail("NotARefinement", "2-morphism refinements");
    if (compose(m1->to_src, to1).map != compose(m2->to_src, to2).map ||
        compose(m1->to_dst, to1).map != compose(m2->to_dst, to2).map)
        fail("NotARefinement", "routes to the base covers disagree");
    Descent2Morphism<C> b{std::make_shared<DescentMorphism<C>>(refine(m1->local, to1)),
                          std::make_shared<DescentMorphism<C>>(refine(m2->local, to2)), std::move(theta)};
    return Plus2Morphism<C>{std::move(m1), std::move(m2), std::move(to1), std::move(to2), std::move(b)};
}

/**
 * \brief Identification of plus 2-morphisms with the same boundary: they
 * agree after pullback to the fibered product of their covers (pairs whose
 * routes coincide), which must itself cover the base.
 */
template <class C>
bool plus_2morphisms_agree(const Plus2Morphism<C>& x, const Plus2Morphism<C>& y) {
    using T = Fiber<C>;
    if (x.src != y.src || x.dst != y.dst) return false;
    const auto& v1 = *x.to1.fine;
    const auto& v2 = *y.to1.fine;
    std::vector<bool> hit(v1.points(), false);
    for (std::size_t a = 0; a < v1.pieces(); ++a)
        for (std::size_t b = 0; b < v2.pieces(); ++b) {
            if (x.to1.map[a] != y.to1.map[b] || x.to2.map[a] != y.to2.map[b]) continue;
            for (std::size_t p = 0; p < v1.points(); ++p) {
                if (!v1.member[a][p] || !v2.member[b][p]) continue;
                hit[p] = true;
                const auto& s = x.local.theta[a][p];
                const auto& t = y.local.theta[b][p];
                for (std::size_t w = 0; w < T::size(x.src->src->fiber); ++w)
                    if (!T::same(T::at(s, w), T::at(t, w))) return false;
            }
        }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
}

/**
 * \brief Transports d along an invertible autofunctor K: gamma'_ij = K gamma_ij K^-1,
 * phi'_ijk at v = K((phi_ijk)_{K^-1 v}); the morphism d -> d' has gamma_i = K
 * and identity phi_ij.
 */
template <class C>
std::pair<DescentPtr<C>, DescentMorphism<C>> conjugate(const DescentPtr<C>& d, const typename Fiber<C>::Functor& K) {
    using T = Fiber<C>;
    const auto& n = *d->nerve;
    auto Ki = T::inverse_f(K);
    auto e = std::make_shared<DescentObject<C>>(*d);
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) e->gamma[c][p] = T::compose_f(K, T::compose_f(d->gamma[c][p], Ki));
    for (std::size_t c = 0; c < n.count(2); ++c) {
        auto t = n.decode(c, 3);
        for (auto p : n.overlaps[2][c]) {
            std::vector<typename T::Mor> comp;
            for (std::size_t v = 0; v < T::size(d->fiber); ++v) {
                std::size_t u = T::obj(Ki, v);
                std::size_t a = T::obj(d->g(t[0], t[2], p), u);
                std::size_t b = T::obj(d->g(t[0], t[1], p), T::obj(d->g(t[1], t[2], p), u));
                comp.push_back(T::map(K, a, b, T::at(d->phi[c][p], u)));
            }
            e->phi[c][p] = T::nat(e->g(t[0], t[2], p), T::compose_f(e->g(t[0], t[1], p), e->g(t[1], t[2], p)), std::move(comp));
        }
    }
    DescentMorphism<C> m{d, e, {}, {}};
    m.gamma.assign(n.pieces(), std::vector<typename T::Functor>(n.points()));
    m.phi.assign(n.count(1), std::vector<typename T::Nat>(n.points()));
    for (std::size_t i = 0; i < n.pieces(); ++i)
        for (auto p : n.overlaps[0][i]) m.gamma[i][p] = K;
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) {
            auto t = n.decode(c, 2);
            auto from = T::compose_f(K, d->g(t[0], t[1], p));
            std::vector<typename T::Mor> comp;
            for (std::size_t w = 0; w < T::size(d->fiber); ++w) comp.push_back(T::id(d->fiber, T::obj(from, w)));
            m.phi[c][p] = T::nat(from, T::compose_f(e->g(t[0], t[1], p), K), std::move(comp));
        }
    return {e, m};
}

/// Identity 2-morphism on m.
template <class C>
Descent2Morphism<C> identity_2morphism(const std::shared_ptr<const DescentMorphism<C>>& m) {
    using T = Fiber<C>;
    const auto& n = *m->src->nerve;
    Descent2Morphism<C> b{m, m, {}};
    b.theta.assign(n.pieces(), std::vector<typename T::Nat>(n.points()));
    for (std::size_t i = 0; i < n.pieces(); ++i)
        for (auto p : n.overlaps[0][i]) {
            std::vector<typename T::Mor> comp;
            for (std::size_t w = 0; w < T::size(m->src->fiber); ++w) comp.push_back(T::id(m->dst->fiber, T::obj(m->gamma[i][p], w)));
            b.theta[i][p] = T::nat(m->gamma[i][p], m->gamma[i][p], std::move(comp));
        }
    return b;
}

}  // namespace cohere
