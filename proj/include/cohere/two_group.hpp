#pragma once

#include "cohere/audit.hpp"
#include "cohere/group.hpp"
#include "cohere/groupoid.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief Crossed module (d: H -> G, alpha) with alpha a right action of G on H.
 */
struct CrossedModule {
    GroupPtr H, G;
    GroupHom boundary;
    RightAction action;
};

/// Reports "equivariance" and "peiffer" without throwing.
inline std::vector<AuditReport> crossed_module_audit(const CrossedModule& xm, const AuditOptions& opt = {}) {
    const auto& H = *xm.H;
    const auto& G = *xm.G;
    std::vector<AuditReport> out;
    out.push_back(run_law("equivariance", G.order() * H.order(), [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t g = i / H.order(), h = i % H.order();
        std::size_t lhs = xm.boundary(xm.action(g, h));
        std::size_t rhs = G.mul(G.mul(G.inv(g), xm.boundary(h)), g);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{"(" + G.label(g) + "," + H.label(h) + ")", G.label(lhs), G.label(rhs)};
    }, opt));
    out.push_back(run_law("peiffer", H.order() * H.order(), [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t h = i / H.order(), k = i % H.order();
        std::size_t lhs = xm.action(xm.boundary(h), k);
        std::size_t rhs = H.mul(H.mul(H.inv(h), k), h);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{"(" + H.label(h) + "," + H.label(k) + ")", H.label(lhs), H.label(rhs)};
    }, opt));
    return out;
}

/// Errors: EquivarianceFail(g,h), PeifferFail(h,h').
inline CrossedModule crossed_module_validate(GroupPtr H, GroupPtr G, GroupHom boundary, RightAction action) {
    if (boundary.src != H || boundary.dst != G) fail("ValidationError", "boundary must map H to G");
    if (action.actor != G || action.target != H) fail("ValidationError", "action must be of G on H");
    hom_validate(boundary.src, boundary.dst, boundary.map);
    right_action_validate(action.actor, action.target, action.table);
    CrossedModule xm{std::move(H), std::move(G), std::move(boundary), std::move(action)};
    AuditOptions opt;
    opt.max_failures = 1;
    auto reps = crossed_module_audit(xm, opt);
    if (!reps[0].passed()) fail("EquivarianceFail", reps[0].failures[0].instance);
    if (!reps[1].passed()) fail("PeifferFail", reps[1].failures[0].instance);
    return xm;
}

/**
 * \brief A 2-group on a finite groupoid: tensor functor m, unit object, and
 * associator/unitor families stored as arrow tables.
 *
 * a(f,g,h): (f g) h -> f (g h), l(g): I g -> g, r(f): f I -> f.
 */
struct CoherentTwoGroup {
    GroupoidPtr gpd;
    std::vector<std::size_t> mobj;  // n*n
    std::vector<std::size_t> marr;  // N*N
    std::size_t unit = 0;
    std::vector<std::size_t> assoc;  // n^3
    std::vector<std::size_t> lunit, runit;

    std::size_t n() const { return gpd->num_objects(); }
    std::size_t N() const { return gpd->num_arrows(); }
    std::size_t tensor(std::size_t x, std::size_t y) const { return mobj[x * n() + y]; }
    std::size_t tensor_arr(std::size_t p, std::size_t q) const { return marr[p * N() + q]; }
    std::size_t a(std::size_t f, std::size_t g, std::size_t h) const { return assoc[(f * n() + g) * n() + h]; }
    std::size_t l(std::size_t g) const { return lunit[g]; }
    std::size_t r(std::size_t f) const { return runit[f]; }
    std::size_t id(std::size_t x) const { return gpd->id(x); }
    std::size_t comp(std::size_t p, std::size_t q) const { return gpd->comp(p, q); }
    const std::string& ol(std::size_t x) const { return gpd->obj_labels[x]; }
    const std::string& al(std::size_t p) const { return gpd->arr_labels[p]; }
    bool is_strict() const {
        for (std::size_t f = 0; f < n(); ++f) {
            if (!gpd->is_identity(l(f)) || !gpd->is_identity(r(f))) return false;
            for (std::size_t g = 0; g < n(); ++g)
                for (std::size_t h = 0; h < n(); ++h)
                    if (!gpd->is_identity(a(f, g, h))) return false;
        }
        return true;
    }
};

using TwoGroupPtr = std::shared_ptr<const CoherentTwoGroup>;

/**
 * \brief Structural checks: m is a functor on the product groupoid and every
 * structure arrow has the right endpoints. Coherence is left to the audit.
 */
inline TwoGroupPtr two_group_build(CoherentTwoGroup t) {
    const auto& G = *t.gpd;
    const std::size_t n = G.num_objects(), N = G.num_arrows();
    if (t.mobj.size() != n * n || t.marr.size() != N * N || t.assoc.size() != n * n * n || t.lunit.size() != n ||
        t.runit.size() != n || t.unit >= n)
        fail("ValidationError", "2-group tables not total");
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q) {
            std::size_t pq = t.tensor_arr(p, q);
            if (pq >= N || G.src[pq] != t.tensor(G.src[p], G.src[q]) || G.tgt[pq] != t.tensor(G.tgt[p], G.tgt[q]))
                fail("NotFunctorial", "tensor endpoints at " + G.arr_labels[p] + "," + G.arr_labels[q]);
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (t.tensor_arr(G.id(x), G.id(y)) != G.id(t.tensor(x, y)))
                fail("NotFunctorial", "tensor of identities at " + G.obj_labels[x] + "," + G.obj_labels[y]);
    // interchange: (p2 o p1) x (q2 o q1) = (p2 x q2) o (p1 x q1)
    for (std::size_t p1 = 0; p1 < N; ++p1)
        for (std::size_t q1 = 0; q1 < N; ++q1) {
            std::size_t m1 = t.tensor_arr(p1, q1);
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t p2 : G.hom(G.tgt[p1], y))
                    for (std::size_t z = 0; z < n; ++z)
                        for (std::size_t q2 : G.hom(G.tgt[q1], z))
                            if (t.tensor_arr(G.comp(p2, p1), G.comp(q2, q1)) != G.comp(t.tensor_arr(p2, q2), m1))
                                fail("NotFunctorial", "tensor composition at " + G.arr_labels[p2] + "o" + G.arr_labels[p1] +
                                                          "," + G.arr_labels[q2] + "o" + G.arr_labels[q1]);
        }
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                std::size_t x = t.a(f, g, h);
                if (x >= N || G.src[x] != t.tensor(t.tensor(f, g), h) || G.tgt[x] != t.tensor(f, t.tensor(g, h)))
                    fail("ValidationError", "associator endpoints at " + G.obj_labels[f] + "," + G.obj_labels[g] + "," + G.obj_labels[h]);
            }
    for (std::size_t g = 0; g < n; ++g) {
        std::size_t x = t.l(g), y = t.r(g);
        if (x >= N || G.src[x] != t.tensor(t.unit, g) || G.tgt[x] != g)
            fail("ValidationError", "left unitor endpoints at " + G.obj_labels[g]);
        if (y >= N || G.src[y] != t.tensor(g, t.unit) || G.tgt[y] != g)
            fail("ValidationError", "right unitor endpoints at " + G.obj_labels[g]);
    }
    return std::make_shared<CoherentTwoGroup>(std::move(t));
}

/**
 * \brief The strict 2-group of a crossed module.
 *
 * Objects are elements of G; arrow (g, h) has index g*|H| + h, source g and
 * target d(h) g. Vertical: (g2,h2) o (g1,h1) = (g1, h2 h1). Horizontal:
 * (g,h) x (g',h') = (g g', h alpha(g^-1)(h')).
 */
struct StrictTwoGroup {
    CrossedModule xm;
    TwoGroupPtr tg;

    std::size_t arrow(std::size_t g, std::size_t h) const { return g * xm.H->order() + h; }
    std::size_t arrow_g(std::size_t a) const { return a / xm.H->order(); }
    std::size_t arrow_h(std::size_t a) const { return a % xm.H->order(); }
};

inline StrictTwoGroup strict_two_group(const CrossedModule& xm) {
    const auto& H = *xm.H;
    const auto& G = *xm.G;
    const std::size_t nh = H.order(), ng = G.order(), N = ng * nh;
    std::vector<std::string> arrs;
    std::vector<std::size_t> src, tgt;
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t h = 0; h < nh; ++h) {
            arrs.push_back("(" + G.label(g) + "," + H.label(h) + ")");
            src.push_back(g);
            tgt.push_back(G.mul(xm.boundary(h), g));
        }
    auto gpd = make_groupoid(G.labels, arrs, src, tgt, [&](std::size_t b, std::size_t a) {
        return (a / nh) * nh + H.mul(b % nh, a % nh);
    });
    CoherentTwoGroup t;
    t.gpd = gpd;
    t.mobj.resize(ng * ng);
    for (std::size_t x = 0; x < ng; ++x)
        for (std::size_t y = 0; y < ng; ++y) t.mobj[x * ng + y] = G.mul(x, y);
    t.marr.resize(N * N);
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q) {
            std::size_t g = p / nh, h = p % nh, g2 = q / nh, h2 = q % nh;
            t.marr[p * N + q] = G.mul(g, g2) * nh + H.mul(h, xm.action(G.inv(g), h2));
        }
    t.unit = G.id;
    t.assoc.resize(ng * ng * ng);
    for (std::size_t f = 0; f < ng; ++f)
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t h = 0; h < ng; ++h) t.assoc[(f * ng + g) * ng + h] = gpd->id(G.mul(G.mul(f, g), h));
    for (std::size_t g = 0; g < ng; ++g) {
        t.lunit.push_back(gpd->id(g));
        t.runit.push_back(gpd->id(g));
    }
    return {xm, two_group_build(std::move(t))};
}

/**
 * \brief Strict-2-group laws: "interchange" over all composable squares,
 * "h_associativity" on objects and arrows, "h_unit" on arrows.
 */
inline std::vector<AuditReport> strict_two_group_audit(const CoherentTwoGroup& t, const AuditOptions& opt = {}) {
    const auto& G = *t.gpd;
    const std::size_t N = t.N();
    // composable pairs (p1 then p2)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t p1 = 0; p1 < N; ++p1)
        for (std::size_t p2 = 0; p2 < N; ++p2)
            if (G.src[p2] == G.tgt[p1]) pairs.emplace_back(p1, p2);
    std::vector<AuditReport> out;
    const std::size_t P = pairs.size();
    out.push_back(run_law("interchange", P * P, [&](std::uint64_t i) -> std::optional<Counterexample> {
        auto [a, b] = pairs[i / P];
        auto [a2, b2] = pairs[i % P];
        std::size_t lhs = t.tensor_arr(G.comp(b, a), G.comp(b2, a2));
        std::size_t rhs = G.comp(t.tensor_arr(b, b2), t.tensor_arr(a, a2));
        if (lhs == rhs) return std::nullopt;
        return Counterexample{"(" + t.al(b) + "o" + t.al(a) + "," + t.al(b2) + "o" + t.al(a2) + ")", t.al(lhs), t.al(rhs)};
    }, opt));
    out.push_back(run_law("h_associativity", N * N * N, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t p = i / (N * N), q = (i / N) % N, s = i % N;
        std::size_t lhs = t.tensor_arr(t.tensor_arr(p, q), s), rhs = t.tensor_arr(p, t.tensor_arr(q, s));
        if (lhs == rhs) return std::nullopt;
        return Counterexample{"(" + t.al(p) + "," + t.al(q) + "," + t.al(s) + ")", t.al(lhs), t.al(rhs)};
    }, opt));
    out.push_back(run_law("h_unit", N, [&](std::uint64_t p) -> std::optional<Counterexample> {
        std::size_t u = G.id(t.unit);
        std::size_t lhs = t.tensor_arr(u, p), rhs = t.tensor_arr(p, u);
        if (lhs == p && rhs == p) return std::nullopt;
        return Counterexample{t.al(p), t.al(lhs), t.al(rhs)};
    }, opt));
    return out;
}

/**
 * \brief Transports the strict 2-group structure on `sub` to the ambient
 * groupoid along an inclusion with quasi-inverse.
 *
 * f x g = incl(xi f . xi g), unit incl(1),
 * a(f,g,h) = incl(1_{xi f} . eps^-1_{xi g xi h}) o incl(eps_{xi f xi g} . 1_{xi h}),
 * r(f) = eta^-1_f o incl(1_{xi f} . eps_1), l(g) = eta^-1_g o incl(eps_1 . 1_{xi g}).
 * Errors: NotAStrictTwoGroupOnSub, QuasiInverseInvalid.
 */
inline TwoGroupPtr transfer_structure(const CoherentTwoGroup& sub, const SubgroupoidInclusion& inc, const QuasiInverse& qi) {
    if (sub.gpd != inc.sub) fail("NotAStrictTwoGroupOnSub", "2-group lives on a different groupoid");
    if (!sub.is_strict()) fail("NotAStrictTwoGroupOnSub", "associator or unitors are not identities");
    if (qi.xi.src != inc.ambient || qi.xi.dst != inc.sub || qi.eps.comp.size() != inc.sub->num_objects() ||
        qi.eta.comp.size() != inc.ambient->num_objects())
        fail("QuasiInverseInvalid", "shape");
    const auto& A = *inc.sub;
    const auto& B = *inc.ambient;
    const auto& xi = qi.xi;
    const auto& io = inc.incl;
    for (std::size_t x = 0; x < A.num_objects(); ++x) {
        std::size_t e = qi.eps.comp[x];
        if (A.src[e] != xi.obj[io.obj[x]] || A.tgt[e] != x) fail("QuasiInverseInvalid", "counit at " + A.obj_labels[x]);
    }
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
        std::size_t e = qi.eta.comp[y];
        if (B.src[e] != y || B.tgt[e] != io.obj[xi.obj[y]]) fail("QuasiInverseInvalid", "unit at " + B.obj_labels[y]);
    }
    const std::size_t n = B.num_objects(), N = B.num_arrows();
    auto eps = [&](std::size_t x) { return qi.eps.comp[x]; };
    auto ida = [&](std::size_t x) { return A.id(x); };
    CoherentTwoGroup t;
    t.gpd = inc.ambient;
    t.mobj.resize(n * n);
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) t.mobj[f * n + g] = io.obj[sub.tensor(xi.obj[f], xi.obj[g])];
    t.marr.resize(N * N);
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q) t.marr[p * N + q] = io.arr[sub.tensor_arr(xi.arr[p], xi.arr[q])];
    t.unit = io.obj[sub.unit];
    t.assoc.resize(n * n * n);
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                std::size_t xf = xi.obj[f], xg = xi.obj[g], xh = xi.obj[h];
                std::size_t first = sub.tensor_arr(eps(sub.tensor(xf, xg)), ida(xh));
                std::size_t second = sub.tensor_arr(ida(xf), A.inv(eps(sub.tensor(xg, xh))));
                t.assoc[(f * n + g) * n + h] = io.arr[A.comp(second, first)];
            }
    t.lunit.resize(n);
    t.runit.resize(n);
    std::size_t e1 = eps(sub.unit);
    for (std::size_t f = 0; f < n; ++f) {
        std::size_t xf = xi.obj[f];
        t.runit[f] = B.comp(B.inv(qi.eta.comp[f]), io.arr[sub.tensor_arr(ida(xf), e1)]);
        t.lunit[f] = B.comp(B.inv(qi.eta.comp[f]), io.arr[sub.tensor_arr(e1, ida(xf))]);
    }
    return two_group_build(std::move(t));
}

/**
 * \brief Coherence audit of a 2-group.
 *
 * Laws: naturality_a (each variable separately, the others identities),
 * naturality_l, naturality_r, pentagon, triangle ((1 x l) o a(x,I,y) = r x 1),
 * triangle_right ((1 x r) o a(x,y,I) = r_{xy}), triangle_left (l_{xy} o a(I,x,y) = l x 1),
 * equivalence (for each x, z the solutions y of x y ~ z form one iso class).
 */
inline std::vector<AuditReport> coherence_audit(const CoherentTwoGroup& t, const AuditOptions& opt = {}) {
    const auto& G = *t.gpd;
    const std::size_t n = t.n(), N = t.N();
    auto I = G.id(t.unit);
    auto one = [&](std::size_t x) { return G.id(x); };
    auto cx = [&](std::string inst, std::size_t l, std::size_t r) { return Counterexample{std::move(inst), t.al(l), t.al(r)}; };
    std::vector<AuditReport> out;

    out.push_back(run_law("naturality_a", 3 * N * n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        auto d = decode_index(i, {3, N, n, n});
        // arrow d[1] in slot d[0], identities of d[2], d[3] in the other slots
        std::size_t arr[3];
        std::size_t others[2] = {one(d[2]), one(d[3])};
        for (std::size_t s = 0, k = 0; s < 3; ++s) arr[s] = (s == d[0]) ? d[1] : others[k++];
        std::size_t f = G.src[arr[0]], g = G.src[arr[1]], h = G.src[arr[2]];
        std::size_t f2 = G.tgt[arr[0]], g2 = G.tgt[arr[1]], h2 = G.tgt[arr[2]];
        std::size_t lhs = G.comp(t.a(f2, g2, h2), t.tensor_arr(t.tensor_arr(arr[0], arr[1]), arr[2]));
        std::size_t rhs = G.comp(t.tensor_arr(arr[0], t.tensor_arr(arr[1], arr[2])), t.a(f, g, h));
        if (lhs == rhs) return std::nullopt;
        return cx("(" + t.al(arr[0]) + "," + t.al(arr[1]) + "," + t.al(arr[2]) + ")", lhs, rhs);
    }, opt));
    out.push_back(run_law("naturality_l", N, [&](std::uint64_t p) -> std::optional<Counterexample> {
        std::size_t lhs = G.comp(t.l(G.tgt[p]), t.tensor_arr(I, p));
        std::size_t rhs = G.comp(p, t.l(G.src[p]));
        if (lhs == rhs) return std::nullopt;
        return cx(t.al(p), lhs, rhs);
    }, opt));
    out.push_back(run_law("naturality_r", N, [&](std::uint64_t p) -> std::optional<Counterexample> {
        std::size_t lhs = G.comp(t.r(G.tgt[p]), t.tensor_arr(p, I));
        std::size_t rhs = G.comp(p, t.r(G.src[p]));
        if (lhs == rhs) return std::nullopt;
        return cx(t.al(p), lhs, rhs);
    }, opt));
    out.push_back(run_law("pentagon", n * n * n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        auto d = decode_index(i, {n, n, n, n});
        std::size_t f = d[0], g = d[1], h = d[2], k = d[3];
        // ((fg)h)k -> (f(gh))k -> f((gh)k) -> f(g(hk))  vs  ((fg)h)k -> (fg)(hk) -> f(g(hk))
        std::size_t lhs = G.comp(t.tensor_arr(one(f), t.a(g, h, k)),
                                 G.comp(t.a(f, t.tensor(g, h), k), t.tensor_arr(t.a(f, g, h), one(k))));
        std::size_t rhs = G.comp(t.a(f, g, t.tensor(h, k)), t.a(t.tensor(f, g), h, k));
        if (lhs == rhs) return std::nullopt;
        return cx("(" + t.ol(f) + "," + t.ol(g) + "," + t.ol(h) + "," + t.ol(k) + ")", lhs, rhs);
    }, opt));
    out.push_back(run_law("triangle", n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t x = i / n, y = i % n;
        std::size_t lhs = G.comp(t.tensor_arr(one(x), t.l(y)), t.a(x, t.unit, y));
        std::size_t rhs = t.tensor_arr(t.r(x), one(y));
        if (lhs == rhs) return std::nullopt;
        return cx("(" + t.ol(x) + "," + t.ol(y) + ")", lhs, rhs);
    }, opt));
    out.push_back(run_law("triangle_right", n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t x = i / n, y = i % n;
        std::size_t lhs = G.comp(t.tensor_arr(one(x), t.r(y)), t.a(x, y, t.unit));
        std::size_t rhs = t.r(t.tensor(x, y));
        if (lhs == rhs) return std::nullopt;
        return cx("(" + t.ol(x) + "," + t.ol(y) + ")", lhs, rhs);
    }, opt));
    out.push_back(run_law("triangle_left", n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t x = i / n, y = i % n;
        std::size_t lhs = G.comp(t.l(t.tensor(x, y)), t.a(t.unit, x, y));
        std::size_t rhs = t.tensor_arr(t.l(x), one(y));
        if (lhs == rhs) return std::nullopt;
        return cx("(" + t.ol(x) + "," + t.ol(y) + ")", lhs, rhs);
    }, opt));
    out.push_back(run_law("equivalence", n * n, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t x = i / n, z = i % n;
        std::vector<std::size_t> ys;
        for (std::size_t y = 0; y < n; ++y)
            if (!G.hom(t.tensor(x, y), z).empty()) ys.push_back(y);
        bool ok = !ys.empty();
        for (std::size_t k = 1; ok && k < ys.size(); ++k)
            if (G.hom(ys[0], ys[k]).empty()) ok = false;
        if (ok) return std::nullopt;
        std::string found;
        for (auto y : ys) found += (found.empty() ? "" : " ") + t.ol(y);
        return Counterexample{"(" + t.ol(x) + "," + t.ol(z) + ")", "solutions {" + found + "}", "one isomorphism class"};
    }, opt));
    return out;
}

/**
 * \brief Strict automorphism of a 2-group: a bijective functor preserving
 * tensor, unit, associator and unitors on the nose.
 */
struct TwoGroupAutomorphism {
    TwoGroupPtr tg;
    std::vector<std::size_t> obj, arr;
};

/// Errors: NotAutomorphism(witness).
inline TwoGroupAutomorphism automorphism_validate(TwoGroupAutomorphism f) {
    const auto& t = *f.tg;
    const std::size_t n = t.n(), N = t.N();
    auto bij = [](const std::vector<std::size_t>& m, std::size_t k) {
        if (m.size() != k) return false;
        std::vector<bool> hit(k, false);
        for (auto v : m) {
            if (v >= k || hit[v]) return false;
            hit[v] = true;
        }
        return true;
    };
    if (!bij(f.obj, n) || !bij(f.arr, N)) fail("NotAutomorphism", "not bijective");
    try {
        functor_validate(GroupoidFunctor{t.gpd, t.gpd, f.obj, f.arr});
    } catch (const Error& e) {
        fail("NotAutomorphism", e.witness());
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (f.obj[t.tensor(x, y)] != t.tensor(f.obj[x], f.obj[y])) fail("NotAutomorphism", "tensor at " + t.ol(x) + "," + t.ol(y));
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q)
            if (f.arr[t.tensor_arr(p, q)] != t.tensor_arr(f.arr[p], f.arr[q]))
                fail("NotAutomorphism", "tensor at " + t.al(p) + "," + t.al(q));
    if (f.obj[t.unit] != t.unit) fail("NotAutomorphism", "unit");
    for (std::size_t x = 0; x < n; ++x) {
        if (f.arr[t.l(x)] != t.l(f.obj[x]) || f.arr[t.r(x)] != t.r(f.obj[x])) fail("NotAutomorphism", "unitor at " + t.ol(x));
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (f.arr[t.a(x, y, z)] != t.a(f.obj[x], f.obj[y], f.obj[z]))
                    fail("NotAutomorphism", "associator at " + t.ol(x) + "," + t.ol(y) + "," + t.ol(z));
    }
    return f;
}

inline TwoGroupAutomorphism identity_automorphism(const TwoGroupPtr& t) {
    TwoGroupAutomorphism f{t, {}, {}};
    for (std::size_t x = 0; x < t->n(); ++x) f.obj.push_back(x);
    for (std::size_t p = 0; p < t->N(); ++p) f.arr.push_back(p);
    return f;
}

/// a o b (apply b first).
inline TwoGroupAutomorphism compose(const TwoGroupAutomorphism& a, const TwoGroupAutomorphism& b) {
    if (a.tg != b.tg) fail("BoundaryMismatch", "automorphisms of different 2-groups");
    TwoGroupAutomorphism c{a.tg, {}, {}};
    for (auto x : b.obj) c.obj.push_back(a.obj[x]);
    for (auto p : b.arr) c.arr.push_back(a.arr[p]);
    return c;
}

inline TwoGroupAutomorphism inverse(const TwoGroupAutomorphism& a) {
    TwoGroupAutomorphism c{a.tg, std::vector<std::size_t>(a.obj.size()), std::vector<std::size_t>(a.arr.size())};
    for (std::size_t x = 0; x < a.obj.size(); ++x) c.obj[a.obj[x]] = x;
    for (std::size_t p = 0; p < a.arr.size(); ++p) c.arr[a.arr[p]] = p;
    return c;
}

/**
 * \brief Conjugation by k in H: g -> d(k) g d(k)^-1, (g, h) -> (d(k) g d(k)^-1, k h k^-1).
 */
inline TwoGroupAutomorphism inner_automorphism(const StrictTwoGroup& s, std::size_t k) {
    const auto& H = *s.xm.H;
    const auto& G = *s.xm.G;
    std::size_t dk = s.xm.boundary(k);
    TwoGroupAutomorphism f{s.tg, {}, {}};
    for (std::size_t g = 0; g < G.order(); ++g) f.obj.push_back(G.mul(G.mul(dk, g), G.inv(dk)));
    for (std::size_t p = 0; p < s.tg->N(); ++p)
        f.arr.push_back(s.arrow(f.obj[s.arrow_g(p)], H.mul(H.mul(k, s.arrow_h(p)), H.inv(k))));
    return automorphism_validate(std::move(f));
}

/**
 * \brief The arrow g -> d(k) g d(k)^-1 of the strict 2-group, (g, k alpha(g^-1)(k^-1)).
 *
 * These arrows form a monoidal natural isomorphism from the identity to the
 * inner automorphism by k.
 */
inline std::size_t conjugation_arrow(const StrictTwoGroup& s, std::size_t k, std::size_t g) {
    const auto& H = *s.xm.H;
    const auto& G = *s.xm.G;
    return s.arrow(g, H.mul(k, s.xm.action(G.inv(g), H.inv(k))));
}

/// Inclusion of the strict 2-group into its doubling, with a section.
struct Doubling {
    SubgroupoidInclusion inc;
    QuasiInverse qi;
    TwoGroupPtr tg;
};

/**
 * \brief Doubles the underlying groupoid of `sub` and transfers the structure.
 *
 * `image_twist[x]` (an arrow of sub into x, or kNone for the identity) is the
 * section arrow on the image object x; `copy_twist[x]` is the sub arrow used
 * for the duplicate x'. Both default to identities.
 */
inline Doubling double_two_group(const CoherentTwoGroup& sub, const std::vector<std::size_t>& image_twist = {},
                                 const std::vector<std::size_t>& copy_twist = {}) {
    auto [amb, incl] = double_groupoid(sub.gpd);
    const auto& A = *sub.gpd;
    const std::size_t n = A.num_objects(), NA = A.num_arrows();
    std::vector<std::pair<std::size_t, std::size_t>> sec(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t a = (x < image_twist.size() && image_twist[x] != kNone) ? image_twist[x] : A.id(x);
        std::size_t b = (x < copy_twist.size() && copy_twist[x] != kNone) ? copy_twist[x] : A.id(x);
        if (A.tgt[a] != x || A.tgt[b] != x) fail("SectionArrowNotLandingInSub", A.obj_labels[x]);
        sec[x] = {a, A.src[a]};                   // copy 0 -> 0
        sec[n + x] = {1 * NA + b, A.src[b]};      // arrow (b, 0, 1)
    }
    SubgroupoidInclusion inc{sub.gpd, amb, incl, sec};
    inc = inclusion_validate(inc);
    auto qi = quasi_inverse(inc);
    auto tg = transfer_structure(sub, inc, qi);
    return {inc, qi, tg};
}

}  // namespace cohere
