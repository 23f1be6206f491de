#pragma once

#include "cohere/audit.hpp"
#include "cohere/category.hpp"
#include "cohere/descent.hpp"
#include "cohere/fiber.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief Right action of a finite groupoid G on a finite category A.
 *
 * eps0/eps1 are the moment maps on objects and arrows. mu0[v*|G1| + g] is
 * v.g, defined (not kNone) exactly when eps0(v) = t(g); same for mu1.
 */
struct GroupoidActionOnCategory {
    GroupoidPtr acting;
    CategoryPtr target;
    std::vector<std::size_t> eps0, eps1;
    std::vector<std::size_t> mu0, mu1;

    std::size_t act0(std::size_t v, std::size_t g) const { return mu0[v * acting->num_arrows() + g]; }
    std::size_t act1(std::size_t f, std::size_t g) const { return mu1[f * acting->num_arrows() + g]; }
};

using ActionPtr = std::shared_ptr<const GroupoidActionOnCategory>;

/// Builds the mu tables from rules, called only on composable pairs.
inline GroupoidActionOnCategory make_action(GroupoidPtr G, CategoryPtr A, std::vector<std::size_t> eps0,
                                            std::vector<std::size_t> eps1,
                                            const std::function<std::size_t(std::size_t, std::size_t)>& on_obj,
                                            const std::function<std::size_t(std::size_t, std::size_t)>& on_arr) {
    GroupoidActionOnCategory act{G, A, std::move(eps0), std::move(eps1), {}, {}};
    const std::size_t N = G->num_arrows();
    act.mu0.assign(A->num_objects() * N, kNone);
    act.mu1.assign(A->num_arrows() * N, kNone);
    for (std::size_t v = 0; v < A->num_objects(); ++v)
        for (std::size_t g = 0; g < N; ++g)
            if (act.eps0[v] == G->tgt[g]) act.mu0[v * N + g] = on_obj(v, g);
    for (std::size_t f = 0; f < A->num_arrows(); ++f)
        for (std::size_t g = 0; g < N; ++g)
            if (act.eps1[f] == G->tgt[g]) act.mu1[f * N + g] = on_arr(f, g);
    return act;
}

namespace detail {

/// (level, element, g) with eps(element) = t(g).
struct ActionSites {
    std::vector<std::array<std::size_t, 3>> pairs;
    std::vector<std::array<std::size_t, 4>> triples;  // (level, a, g, g') with t(g') = s(g)

    explicit ActionSites(const GroupoidActionOnCategory& act) {
        const auto& G = *act.acting;
        for (std::size_t lvl = 0; lvl < 2; ++lvl) {
            const auto& eps = lvl == 0 ? act.eps0 : act.eps1;
            for (std::size_t a = 0; a < eps.size(); ++a)
                for (std::size_t g = 0; g < G.num_arrows(); ++g) {
                    if (eps[a] != G.tgt[g]) continue;
                    pairs.push_back({lvl, a, g});
                    for (std::size_t h = 0; h < G.num_arrows(); ++h)
                        if (G.tgt[h] == G.src[g]) triples.push_back({lvl, a, g, h});
                }
        }
    }
};

inline std::string element_str(const GroupoidActionOnCategory& act, std::size_t lvl, std::size_t a) {
    return lvl == 0 ? act.target->obj_labels[a] : act.target->arr_labels[a];
}

}  // namespace detail

/**
 * \brief Laws of a right action: "defined" (mu exactly on eps = t pairs),
 * "moment" (eps0 s = eps1 = eps0 t), "associativity" ((a g) g' = a (g g')),
 * "unit" (a 1 = a), "source" (eps(a g) = s(g)) and "functoriality" (each g
 * acts compatibly with sources, targets, identities and composition, checked
 * where the moment maps make every term defined).
 */
inline std::vector<AuditReport> groupoid_action_validate(const GroupoidActionOnCategory& act, const AuditOptions& opt = {}) {
    const auto& G = *act.acting;
    const auto& A = *act.target;
    const std::size_t N = G.num_arrows();
    std::vector<AuditReport> out;
    if (act.eps0.size() != A.num_objects() || act.eps1.size() != A.num_arrows() || act.mu0.size() != A.num_objects() * N ||
        act.mu1.size() != A.num_arrows() * N) {
        AuditReport r;
        r.law = "defined";
        r.instances = r.failure_count = 1;
        r.failures.push_back({"tables", "not total", ""});
        return {r};
    }
    auto size_of = [&](std::size_t lvl) { return lvl == 0 ? A.num_objects() : A.num_arrows(); };
    auto eps = [&](std::size_t lvl, std::size_t a) { return lvl == 0 ? act.eps0[a] : act.eps1[a]; };
    auto mu = [&](std::size_t lvl, std::size_t a, std::size_t g) { return lvl == 0 ? act.act0(a, g) : act.act1(a, g); };
    auto str = [&](std::size_t lvl, std::size_t a) { return a == kNone ? std::string("undefined") : detail::element_str(act, lvl, a); };

    out.push_back(run_law(
        "defined", (A.num_objects() + A.num_arrows()) * N,
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            std::size_t lvl = i < A.num_objects() * N ? 0 : 1;
            std::size_t k = lvl == 0 ? i : i - A.num_objects() * N;
            std::size_t a = k / N, g = k % N;
            bool want = eps(lvl, a) == G.tgt[g];
            std::size_t r = mu(lvl, a, g);
            bool ok = want ? r < size_of(lvl) : r == kNone;
            if (ok) return std::nullopt;
            return Counterexample{"(" + str(lvl, a) + "," + G.arr_labels[g] + ")", want ? "undefined" : "defined", ""};
        },
        opt));
    if (!out.back().passed()) return out;

    detail::ActionSites s(act);
    out.push_back(run_law(
        "moment", A.num_arrows(),
        [&](std::uint64_t f) -> std::optional<Counterexample> {
            std::size_t e = act.eps1[f], es = act.eps0[A.src[f]], et = act.eps0[A.tgt[f]];
            if (e == es && e == et) return std::nullopt;
            return Counterexample{A.arr_labels[f], G.obj_labels[es] + "," + G.obj_labels[e] + "," + G.obj_labels[et], ""};
        },
        opt));
    out.push_back(run_law(
        "associativity", s.triples.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [lvl, a, g, h] = s.triples[i];
            std::size_t ag = mu(lvl, a, g);
            std::size_t lhs = eps(lvl, ag) == G.tgt[h] ? mu(lvl, ag, h) : kNone;
            std::size_t rhs = mu(lvl, a, G.comp(g, h));
            if (lhs == rhs) return std::nullopt;
            return Counterexample{"(" + str(lvl, a) + "," + G.arr_labels[g] + "," + G.arr_labels[h] + ")", str(lvl, lhs),
                                  str(lvl, rhs)};
        },
        opt));
    out.push_back(run_law(
        "unit", A.num_objects() + A.num_arrows(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            std::size_t lvl = i < A.num_objects() ? 0 : 1;
            std::size_t a = lvl == 0 ? i : i - A.num_objects();
            std::size_t r = mu(lvl, a, G.id(eps(lvl, a)));
            if (r == a) return std::nullopt;
            return Counterexample{str(lvl, a), str(lvl, r), str(lvl, a)};
        },
        opt));
    out.push_back(run_law(
        "source", s.pairs.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [lvl, a, g] = s.pairs[i];
            std::size_t e = eps(lvl, mu(lvl, a, g));
            if (e == G.src[g]) return std::nullopt;
            return Counterexample{"(" + str(lvl, a) + "," + G.arr_labels[g] + ")", G.obj_labels[e], G.obj_labels[G.src[g]]};
        },
        opt));
    out.push_back(run_law(
        "functoriality", s.pairs.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [lvl, a, g] = s.pairs[i];
            std::string where = "(" + str(lvl, a) + "," + G.arr_labels[g] + ")";
            if (lvl == 0) {
                std::size_t lhs = act.act1(A.id(a), g), rhs = A.id(act.act0(a, g));
                if (lhs == kNone || lhs == rhs) return std::nullopt;
                return Counterexample{where, str(1, lhs), str(1, rhs)};
            }
            std::size_t fg = act.act1(a, g);
            // undefined endpoints are moment failures, reported there
            if (act.act0(A.src[a], g) == kNone || act.act0(A.tgt[a], g) == kNone) return std::nullopt;
            if (A.src[fg] != act.act0(A.src[a], g) || A.tgt[fg] != act.act0(A.tgt[a], g))
                return Counterexample{where, "endpoints " + str(0, A.src[fg]) + "->" + str(0, A.tgt[fg]),
                                      str(0, act.act0(A.src[a], g)) + "->" + str(0, act.act0(A.tgt[a], g))};
            for (std::size_t b = 0; b < A.num_arrows(); ++b) {
                std::size_t ba = A.comp(b, a);
                if (ba == kNone || act.act1(b, g) == kNone) continue;
                std::size_t lhs = act.act1(ba, g), rhs = A.comp(act.act1(b, g), fg);
                if (lhs != rhs) return Counterexample{where + " then " + A.arr_labels[b], str(1, lhs), str(1, rhs)};
            }
            return std::nullopt;
        },
        opt));
    return out;
}

/**
 * \brief Equivariance of a functor F: A1 -> A2 between categories with
 * actions of the same groupoid: "moment" (eps2 F = eps1) and "commutes"
 * (F(a g) = F(a) g), on objects and arrows.
 */
inline std::vector<AuditReport> equivariant_functor_check(const CatFunctor& F, const GroupoidActionOnCategory& a1,
                                                          const GroupoidActionOnCategory& a2, const AuditOptions& opt = {}) {
    if (a1.acting != a2.acting) fail("GroupoidMismatch", "actions of different groupoids");
    if (F.src != a1.target || F.dst != a2.target) fail("BoundaryMismatch", "functor and actions");
    const auto& G = *a1.acting;
    const std::size_t n0 = F.src->num_objects(), n1 = F.src->num_arrows();
    std::vector<AuditReport> out;
    out.push_back(run_law(
        "moment", n0 + n1,
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            bool obj = i < n0;
            std::size_t a = obj ? i : i - n0;
            std::size_t lhs = obj ? a2.eps0[F.obj[a]] : a2.eps1[F.arr[a]];
            std::size_t rhs = obj ? a1.eps0[a] : a1.eps1[a];
            if (lhs == rhs) return std::nullopt;
            return Counterexample{detail::element_str(a1, obj ? 0 : 1, a), G.obj_labels[lhs], G.obj_labels[rhs]};
        },
        opt));
    if (!out.back().passed()) return out;
    detail::ActionSites s(a1);
    out.push_back(run_law(
        "commutes", s.pairs.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [lvl, a, g] = s.pairs[i];
            std::size_t lhs = lvl == 0 ? F.obj[a1.act0(a, g)] : F.arr[a1.act1(a, g)];
            std::size_t rhs = lvl == 0 ? a2.act0(F.obj[a], g) : a2.act1(F.arr[a], g);
            if (lhs == rhs) return std::nullopt;
            return Counterexample{"(" + detail::element_str(a1, lvl, a) + "," + G.arr_labels[g] + ")",
                                  detail::element_str(a2, lvl, lhs), detail::element_str(a2, lvl, rhs)};
        },
        opt));
    return out;
}

/// Square matrix over F_2, row-major bits.
struct F2Matrix {
    std::size_t n = 0;
    std::vector<int> e;

    int operator()(std::size_t r, std::size_t c) const { return e[r * n + c]; }
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
};

inline F2Matrix f2_identity(std::size_t n) {
    F2Matrix m{n, std::vector<int>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m.e[i * n + i] = 1;
    return m;
}

inline F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix m{a.n, std::vector<int>(a.n * a.n, 0)};
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k)
            if (a(i, k))
                for (std::size_t j = 0; j < a.n; ++j) m.e[i * a.n + j] ^= b(k, j);
    return m;
}

/// Vectors and matrices over F_2 are indexed by their bits, entry 0 most significant.
inline std::size_t f2_apply(const F2Matrix& m, std::size_t v) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.n; ++i) {
        int bit = 0;
        for (std::size_t j = 0; j < m.n; ++j) bit ^= m(i, j) & static_cast<int>((v >> (m.n - 1 - j)) & 1);
        r = (r << 1) | static_cast<std::size_t>(bit);
    }
    return r;
}

inline std::size_t f2_index(const F2Matrix& m) {
    std::size_t r = 0;
    for (int b : m.e) r = (r << 1) | static_cast<std::size_t>(b);
    return r;
}

inline F2Matrix f2_from_index(std::size_t n, std::size_t k) {
    F2Matrix m{n, std::vector<int>(n * n, 0)};
    for (std::size_t i = n * n; i-- > 0; k >>= 1) m.e[i] = static_cast<int>(k & 1);
    return m;
}

/// Errors: NotInvertible.
inline F2Matrix f2_inverse(const F2Matrix& m) {
    for (std::size_t k = 0; k < (std::size_t{1} << (m.n * m.n)); ++k) {
        auto c = f2_from_index(m.n, k);
        if (f2_mul(m, c) == f2_identity(m.n)) return c;
    }
    fail("NotInvertible", "F2 matrix");
}

/// Functor from a groupoid to F_2-vector spaces of one dimension: one invertible matrix per arrow.
struct F2GroupoidRep {
    GroupoidPtr groupoid;
    std::size_t dim = 1;
    std::vector<F2Matrix> mat;
};

/**
 * \brief The family of fibers V_x as one category with a right action:
 * objects (x, v), arrows (x, f, v): (x, v) -> (x, f v) for every linear map
 * f of V_x, composition by matrix product. For g: y -> x,
 * (x, v).g = (y, M(g)^-1 v) and (x, f, v).g = (y, M(g)^-1 f M(g), M(g)^-1 v).
 * Errors: NotFunctorial, NotInvertible.
 */
inline GroupoidActionOnCategory vect_family_action(const F2GroupoidRep& rho) {
    const auto& G = *rho.groupoid;
    const std::size_t d = rho.dim, nv = std::size_t{1} << d, nf = std::size_t{1} << (d * d), nx = G.num_objects();
    if (rho.mat.size() != G.num_arrows()) fail("NotFunctorial", "matrix table not total");
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
        if (G.is_identity(a) && !(rho.mat[a] == f2_identity(d))) fail("NotFunctorial", "identity " + G.arr_labels[a]);
        for (std::size_t b = 0; b < G.num_arrows(); ++b) {
            std::size_t ab = G.comp(a, b);
            if (ab != kNone && !(rho.mat[ab] == f2_mul(rho.mat[a], rho.mat[b])))
                fail("NotFunctorial", G.arr_labels[a] + " o " + G.arr_labels[b]);
        }
    }
    std::vector<F2Matrix> inv;
    for (const auto& m : rho.mat) inv.push_back(f2_inverse(m));
    auto obj = [&](std::size_t x, std::size_t v) { return x * nv + v; };
    auto arr = [&](std::size_t x, std::size_t f, std::size_t v) { return (x * nf + f) * nv + v; };
    std::vector<std::string> ol, al;
    std::vector<std::size_t> src, tgt, eps0, eps1;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t v = 0; v < nv; ++v) {
            ol.push_back(G.obj_labels[x] + ":" + std::to_string(v));
            eps0.push_back(x);
        }
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t f = 0; f < nf; ++f)
            for (std::size_t v = 0; v < nv; ++v) {
                al.push_back(G.obj_labels[x] + ":m" + std::to_string(f) + "@" + std::to_string(v));
                src.push_back(obj(x, v));
                tgt.push_back(obj(x, f2_apply(f2_from_index(d, f), v)));
                eps1.push_back(x);
            }
    auto A = make_category(ol, al, src, tgt, [&](std::size_t b, std::size_t a) {
        std::size_t x = a / (nf * nv), fa = (a / nv) % nf, v = a % nv, fb = (b / nv) % nf;
        return arr(x, f2_index(f2_mul(f2_from_index(d, fb), f2_from_index(d, fa))), v);
    });
    return make_action(
        rho.groupoid, A, eps0, eps1,
        [&](std::size_t o, std::size_t g) { return obj(G.src[g], f2_apply(inv[g], o % nv)); },
        [&](std::size_t a, std::size_t g) {
            std::size_t f = (a / nv) % nf, v = a % nv;
            auto c = f2_mul(inv[g], f2_mul(f2_from_index(d, f), rho.mat[g]));
            return arr(G.src[g], f2_index(c), f2_apply(inv[g], v));
        });
}

/// (x, v) -> (x, C_x v), (x, f, v) -> (x, C_x f C_x^-1, C_x v) on a vect_family_action category.
inline CatFunctorPtr vect_family_functor(const GroupoidActionOnCategory& act, std::size_t dim, const std::vector<F2Matrix>& C) {
    const std::size_t nv = std::size_t{1} << dim, nf = std::size_t{1} << (dim * dim);
    const auto& A = *act.target;
    auto F = std::make_shared<CatFunctor>();
    F->src = F->dst = act.target;
    for (std::size_t o = 0; o < A.num_objects(); ++o) F->obj.push_back((o / nv) * nv + f2_apply(C[o / nv], o % nv));
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        std::size_t x = a / (nf * nv), f = (a / nv) % nf, v = a % nv;
        auto c = f2_mul(C[x], f2_mul(f2_from_index(dim, f), f2_inverse(C[x])));
        F->arr.push_back((x * nf + f2_index(c)) * nv + f2_apply(C[x], v));
    }
    return F;
}

/**
 * \brief The pullback category V x_{G0} G'0 along beta: G' -> G with its G'
 * action, the residual G action (only when beta0 is bijective) and the
 * projection back to V.
 */
struct PullbackAction {
    ActionPtr base;
    GroupoidFunctor beta;
    ActionPtr action;
    ActionPtr residual;
    std::vector<std::pair<std::size_t, std::size_t>> objs, arrs;  // (v, x'), (f, x')
    std::vector<std::vector<std::size_t>> obj_at, arr_at;           // [v][x'], [f][x'] or kNone
    CatFunctorPtr projection;
};

/// Errors: HomomorphismInvalid.
inline PullbackAction action_pullback_category(const ActionPtr& act, const GroupoidFunctor& beta) {
    if (beta.dst != act->acting) fail("HomomorphismInvalid", "target is not the acting groupoid");
    try {
        functor_validate(beta);
    } catch (const Error& e) {
        fail("HomomorphismInvalid", e.what());
    }
    const auto& V = *act->target;
    const auto& Gp = *beta.src;
    const auto& G = *act->acting;
    PullbackAction pb{act, beta, nullptr, nullptr, {}, {}, {}, {}, nullptr};
    pb.obj_at.assign(V.num_objects(), std::vector<std::size_t>(Gp.num_objects(), kNone));
    pb.arr_at.assign(V.num_arrows(), std::vector<std::size_t>(Gp.num_objects(), kNone));
    std::vector<std::string> ol, al;
    std::vector<std::size_t> src, tgt, eps0, eps1;
    for (std::size_t x = 0; x < Gp.num_objects(); ++x)
        for (std::size_t v = 0; v < V.num_objects(); ++v)
            if (act->eps0[v] == beta.obj[x]) {
                pb.obj_at[v][x] = pb.objs.size();
                pb.objs.push_back({v, x});
                ol.push_back("(" + V.obj_labels[v] + "," + Gp.obj_labels[x] + ")");
                eps0.push_back(x);
            }
    for (std::size_t x = 0; x < Gp.num_objects(); ++x)
        for (std::size_t f = 0; f < V.num_arrows(); ++f)
            if (act->eps1[f] == beta.obj[x]) {
                pb.arr_at[f][x] = pb.arrs.size();
                pb.arrs.push_back({f, x});
                al.push_back("(" + V.arr_labels[f] + "," + Gp.obj_labels[x] + ")");
                src.push_back(pb.obj_at[V.src[f]][x]);
                tgt.push_back(pb.obj_at[V.tgt[f]][x]);
                eps1.push_back(x);
            }
    if (std::find(src.begin(), src.end(), kNone) != src.end() || std::find(tgt.begin(), tgt.end(), kNone) != tgt.end())
        fail("ValidationError", "moment maps of the base action are not compatible");
    auto P = make_category(ol, al, src, tgt, [&](std::size_t b, std::size_t a) {
        return pb.arr_at[V.comp(pb.arrs[b].first, pb.arrs[a].first)][pb.arrs[a].second];
    });
    pb.action = std::make_shared<GroupoidActionOnCategory>(make_action(
        beta.src, P, eps0, eps1,
        [&](std::size_t o, std::size_t g) { return pb.obj_at[act->act0(pb.objs[o].first, beta.arr[g])][Gp.src[g]]; },
        [&](std::size_t a, std::size_t g) { return pb.arr_at[act->act1(pb.arrs[a].first, beta.arr[g])][Gp.src[g]]; }));

    std::vector<std::size_t> pre(G.num_objects(), kNone);
    bool bijective = beta.obj.size() == G.num_objects();
    for (std::size_t x = 0; x < beta.obj.size() && bijective; ++x) {
        if (pre[beta.obj[x]] != kNone) bijective = false;
        pre[beta.obj[x]] = x;
    }
    if (bijective) {
        std::vector<std::size_t> r0, r1;
        for (auto [v, x] : pb.objs) r0.push_back(beta.obj[x]);
        for (auto [f, x] : pb.arrs) r1.push_back(beta.obj[x]);
        pb.residual = std::make_shared<GroupoidActionOnCategory>(make_action(
            act->acting, P, r0, r1,
            [&](std::size_t o, std::size_t g) { return pb.obj_at[act->act0(pb.objs[o].first, g)][pre[G.src[g]]]; },
            [&](std::size_t a, std::size_t g) { return pb.arr_at[act->act1(pb.arrs[a].first, g)][pre[G.src[g]]]; }));
    }

    auto pr = std::make_shared<CatFunctor>();
    pr->src = P;
    pr->dst = act->target;
    for (auto [v, x] : pb.objs) pr->obj.push_back(v);
    for (auto [f, x] : pb.arrs) pr->arr.push_back(f);
    pb.projection = pr;
    return pb;
}

/// iota(beta)(F): (v, x') -> (F v, x'), (f, x') -> (F f, x').
inline CatFunctorPtr iota(const PullbackAction& pb, const CatFunctor& F) {
    if (F.src != pb.base->target || F.dst != pb.base->target) fail("BoundaryMismatch", "iota of a functor on another category");
    auto H = std::make_shared<CatFunctor>();
    H->src = H->dst = pb.action->target;
    for (auto [v, x] : pb.objs) H->obj.push_back(pb.obj_at[F.obj[v]][x]);
    for (auto [f, x] : pb.arrs) H->arr.push_back(pb.arr_at[F.arr[f]][x]);
    if (std::find(H->obj.begin(), H->obj.end(), kNone) != H->obj.end() ||
        std::find(H->arr.begin(), H->arr.end(), kNone) != H->arr.end())
        fail("ValidationError", "functor does not preserve the moment map");
    return H;
}

/// iota on a transformation: (theta_v, 1).
inline std::vector<std::size_t> iota_nat(const PullbackAction& pb, const std::vector<std::size_t>& theta) {
    std::vector<std::size_t> out;
    for (auto [v, x] : pb.objs) out.push_back(pb.arr_at[theta[v]][x]);
    return out;
}

namespace detail {

inline bool is_equivariant(const CatFunctor& F, const GroupoidActionOnCategory& act) {
    return all_passed(equivariant_functor_check(F, act, act));
}

}  // namespace detail

/**
 * \brief All G-equivariant automorphisms of the acted-on category, by
 * backtracking over fiber-preserving object permutations and hom-preserving
 * arrow bijections. Errors: TooLarge past `limit` results.
 */
inline std::vector<CatFunctorPtr> equivariant_automorphisms(const GroupoidActionOnCategory& act, std::size_t limit = 100000) {
    const auto& A = *act.target;
    const auto& G = *act.acting;
    const std::size_t n = A.num_objects(), N = A.num_arrows();
    std::vector<CatFunctorPtr> out;
    std::vector<std::size_t> obj(n, kNone), arr(N, kNone);
    std::vector<bool> used_o(n, false), used_a(N, false);

    auto objects_ok = [&]() {
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t g = 0; g < G.num_arrows(); ++g)
                if (act.eps0[v] == G.tgt[g] && obj[act.act0(v, g)] != act.act0(obj[v], g)) return false;
        return true;
    };
    std::function<void(std::size_t)> arrows = [&](std::size_t f) {
        if (f == N) {
            auto F = std::make_shared<CatFunctor>(CatFunctor{act.target, act.target, obj, arr});
            if (!functor_problem(*F) && detail::is_equivariant(*F, act)) {
                if (out.size() == limit) fail("TooLarge", "more than " + std::to_string(limit) + " automorphisms");
                out.push_back(F);
            }
            return;
        }
        if (f == A.id(A.src[f])) {
            std::size_t c = A.id(obj[A.src[f]]);
            if (used_a[c]) return;
            used_a[c] = true;
            arr[f] = c;
            arrows(f + 1);
            used_a[c] = false;
            return;
        }
        for (std::size_t c : A.hom(obj[A.src[f]], obj[A.tgt[f]])) {
            if (used_a[c] || act.eps1[c] != act.eps1[f]) continue;
            bool ok = true;
            for (std::size_t b = 0; b < f && ok; ++b) {
                std::size_t fb = A.comp(f, b), bf = A.comp(b, f);
                if (fb != kNone && fb < f && arr[fb] != A.comp(c, arr[b])) ok = false;
                if (bf != kNone && bf < f && arr[bf] != A.comp(arr[b], c)) ok = false;
            }
            if (!ok) continue;
            used_a[c] = true;
            arr[f] = c;
            arrows(f + 1);
            used_a[c] = false;
        }
        arr[f] = kNone;
    };
    std::function<void(std::size_t)> objects = [&](std::size_t v) {
        if (v == n) {
            if (objects_ok()) arrows(0);
            return;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used_o[w] || act.eps0[w] != act.eps0[v]) continue;
            used_o[w] = true;
            obj[v] = w;
            objects(v + 1);
            used_o[w] = false;
        }
        obj[v] = kNone;
    };
    objects(0);
    return out;
}

/// Component tables of the G-equivariant natural transformations F => H (theta_{v g} = theta_v g).
inline std::vector<std::vector<std::size_t>> equivariant_transformations(const GroupoidActionOnCategory& act,
                                                                         const CatFunctor& F, const CatFunctor& H) {
    const auto& A = *act.target;
    const auto& G = *act.acting;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> comp(A.num_objects(), kNone);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == A.num_objects()) {
            if (nat_problem(F, H, comp, false)) return;
            for (std::size_t w = 0; w < A.num_objects(); ++w)
                for (std::size_t g = 0; g < G.num_arrows(); ++g)
                    if (act.eps0[w] == G.tgt[g] && comp[act.act0(w, g)] != act.act1(comp[w], g)) return;
            out.push_back(comp);
            return;
        }
        for (std::size_t c : A.hom(F.obj[v], H.obj[v])) {
            comp[v] = c;
            rec(v + 1);
        }
    };
    rec(0);
    return out;
}

/// What enumeration says about iota(beta): Auto_G(V) -> Auto_G'(pullback).
struct IotaVerdict {
    std::size_t source_count = 0, target_count = 0;
    bool equivariant = false;         // every iota(F) is G'-equivariant
    bool injective_on_objects = false;
    bool surjective_on_objects = false;
    bool fully_faithful = false;
    bool isomorphism() const { return equivariant && injective_on_objects && surjective_on_objects && fully_faithful; }
};

inline IotaVerdict iota_verify(const PullbackAction& pb, std::size_t limit = 100000) {
    auto src = equivariant_automorphisms(*pb.base, limit);
    auto dst = equivariant_automorphisms(*pb.action, limit);
    IotaVerdict v;
    v.source_count = src.size();
    v.target_count = dst.size();
    std::vector<CatFunctorPtr> img;
    v.equivariant = true;
    for (const auto& F : src) {
        img.push_back(iota(pb, *F));
        v.equivariant = v.equivariant && detail::is_equivariant(*img.back(), *pb.action);
    }
    auto same = [](const CatFunctorPtr& a, const CatFunctorPtr& b) { return a->obj == b->obj && a->arr == b->arr; };
    v.injective_on_objects = true;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (same(img[i], img[j])) v.injective_on_objects = false;
    v.surjective_on_objects = std::all_of(dst.begin(), dst.end(), [&](const CatFunctorPtr& H) {
        return std::any_of(img.begin(), img.end(), [&](const CatFunctorPtr& I) { return same(H, I); });
    });
    v.fully_faithful = true;
    for (std::size_t i = 0; i < src.size() && v.fully_faithful; ++i)
        for (std::size_t j = 0; j < src.size() && v.fully_faithful; ++j) {
            auto down = equivariant_transformations(*pb.base, *src[i], *src[j]);
            auto up = equivariant_transformations(*pb.action, *img[i], *img[j]);
            std::vector<std::vector<std::size_t>> mapped;
            for (const auto& t : down) mapped.push_back(iota_nat(pb, t));
            std::sort(mapped.begin(), mapped.end());
            std::sort(up.begin(), up.end());
            bool distinct = std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
            v.fully_faithful = distinct && mapped == up;
        }
    return v;
}

/**
 * \brief For psi: G'' -> G' and phi: G' -> G, the comparison
 * j: (V x G'0) x G''0 -> V x G''0, ((v, x'), x'') -> (v, x'').
 */
inline CatFunctorPtr tower_comparison(const PullbackAction& outer, const PullbackAction& inner, const PullbackAction& direct) {
    if (outer.base != inner.action || outer.beta.src != direct.beta.src) fail("BoundaryMismatch", "tower");
    auto j = std::make_shared<CatFunctor>();
    j->src = outer.action->target;
    j->dst = direct.action->target;
    for (auto [u, x] : outer.objs) j->obj.push_back(direct.obj_at[inner.objs[u].first][x]);
    for (auto [a, x] : outer.arrs) j->arr.push_back(direct.arr_at[inner.arrs[a].first][x]);
    return j;
}

/// Outcome of the tower checks: j an equivariant isomorphism, and iota(phi psi) = j_* iota(psi) iota(phi).
struct TowerVerdict {
    std::vector<AuditReport> j_equivariance;
    bool j_isomorphism = false;
    std::size_t automorphisms = 0;
    std::vector<std::string> mismatches;  // automorphism indices where the composite law fails
    bool passed() const { return j_isomorphism && all_passed(j_equivariance) && mismatches.empty(); }
};

inline TowerVerdict tower_verify(const ActionPtr& act, const GroupoidFunctor& phi, const GroupoidFunctor& psi) {
    auto inner = action_pullback_category(act, phi);
    auto outer = action_pullback_category(inner.action, psi);
    auto direct = action_pullback_category(act, compose(phi, psi));
    auto j = tower_comparison(outer, inner, direct);
    TowerVerdict v;
    v.j_isomorphism = !functor_problem(*j);
    CatFunctorPtr ji;
    if (v.j_isomorphism) {
        try {
            ji = inverse(j);
        } catch (const Error&) {
            v.j_isomorphism = false;
        }
    }
    v.j_equivariance = equivariant_functor_check(*j, *outer.action, *direct.action);
    if (!v.j_isomorphism) return v;
    auto autos = equivariant_automorphisms(*act);
    v.automorphisms = autos.size();
    for (std::size_t k = 0; k < autos.size(); ++k) {
        auto lhs = iota(direct, *autos[k]);
        auto rhs = compose(j, compose(iota(outer, *iota(inner, *autos[k])), ji));
        if (lhs->obj != rhs->obj || lhs->arr != rhs->arr) v.mismatches.push_back("automorphism " + std::to_string(k));
    }
    return v;
}

/**
 * \brief Descent data over a base groupoid carrying a G-action, with values
 * in G-equivariant automorphisms of a fiber category with G-action. The nerve
 * points are the objects of the base.
 */
struct EquivariantDescent {
    ActionPtr base;
    ActionPtr fiber;
    DescentObject<FiniteCategory> data;
};

/**
 * \brief descent_object_validate on the data, plus "gamma_equivariant" (each
 * gamma_ij(m) commutes with the fiber action) and "orbit_constraint": for
 * m1 in U_ij and g with eps(m1) = t(g), m2 = m1 g in U_ij,
 * gamma_ij(m2)(a g) = gamma_ij(m1)(a) g on every object and arrow a over t(g).
 */
inline std::vector<AuditReport> equivariant_descent_validate(const EquivariantDescent& e, const AuditOptions& opt = {}) {
    const auto& n = *e.data.nerve;
    const auto& B = *e.base;
    const auto& Fa = *e.fiber;
    const auto& G = *Fa.acting;
    const auto& V = *Fa.target;
    if (B.acting != Fa.acting) fail("GroupoidMismatch", "base and fiber acted on by different groupoids");
    if (n.points() != B.target->num_objects() || e.data.fiber != Fa.target) fail("BoundaryMismatch", "nerve or fiber");
    auto out = descent_object_validate(e.data, opt);

    std::vector<std::pair<std::size_t, std::size_t>> sites;  // (code, point)
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto p : n.overlaps[1][c]) sites.push_back({c, p});
    std::map<const CatFunctor*, bool> eq;
    out.push_back(run_law(
        "gamma_equivariant", sites.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [c, p] = sites[i];
            const auto& F = e.data.gamma[c][p];
            if (!F || F->src != Fa.target || F->dst != Fa.target)
                return Counterexample{detail::point_str(n, n.decode(c, 2), p), "not an endofunctor of the fiber", ""};
            auto it = eq.find(F.get());
            if (it == eq.end()) it = eq.emplace(F.get(), !functor_problem(*F) && detail::is_equivariant(*F, Fa)).first;
            if (it->second) return std::nullopt;
            return Counterexample{detail::point_str(n, n.decode(c, 2), p), "not equivariant", ""};
        },
        opt));

    std::vector<std::array<std::size_t, 3>> orbit;  // (code, m1, g)
    for (std::size_t c = 0; c < n.count(1); ++c)
        for (auto m : n.overlaps[1][c])
            for (std::size_t g = 0; g < G.num_arrows(); ++g)
                if (B.eps0[m] == G.tgt[g] && n.member[n.decode(c, 2)[0]][B.act0(m, g)] &&
                    n.member[n.decode(c, 2)[1]][B.act0(m, g)])
                    orbit.push_back({c, m, g});
    out.push_back(run_law(
        "orbit_constraint", orbit.size(),
        [&](std::uint64_t i) -> std::optional<Counterexample> {
            auto [c, m1, g] = orbit[i];
            std::size_t m2 = B.act0(m1, g);
            const auto& F1 = e.data.gamma[c][m1];
            const auto& F2 = e.data.gamma[c][m2];
            std::string where = CechNerve::tuple_str(n.decode(c, 2)) + " " + G.arr_labels[g] + " at " + n.point(m1) + "->" +
                                n.point(m2);
            if (!F1 || !F2) return Counterexample{where, "missing gamma", ""};
            for (std::size_t v = 0; v < V.num_objects(); ++v) {
                if (Fa.eps0[v] != G.tgt[g] || Fa.eps0[F1->obj[v]] != G.tgt[g]) continue;
                std::size_t lhs = F2->obj[Fa.act0(v, g)], rhs = Fa.act0(F1->obj[v], g);
                if (lhs != rhs) return Counterexample{where + " on " + V.obj_labels[v], V.obj_labels[lhs], V.obj_labels[rhs]};
            }
            for (std::size_t f = 0; f < V.num_arrows(); ++f) {
                if (Fa.eps1[f] != G.tgt[g] || Fa.eps1[F1->arr[f]] != G.tgt[g]) continue;
                std::size_t lhs = F2->arr[Fa.act1(f, g)], rhs = Fa.act1(F1->arr[f], g);
                if (lhs != rhs) return Counterexample{where + " on " + V.arr_labels[f], V.arr_labels[lhs], V.arr_labels[rhs]};
            }
            return std::nullopt;
        },
        opt));
    return out;
}

/// Descent data with phi all identities from a gamma table that composes strictly; gamma(i, j, p).
inline DescentObject<FiniteCategory> strict_descent(
    const NervePtr& n, const CategoryPtr& fiber,
    const std::function<CatFunctorPtr(std::size_t, std::size_t, std::size_t)>& gamma) {
    auto d = trivial_descent<FiniteCategory>(n, fiber);
    for (std::size_t c = 0; c < n->count(1); ++c) {
        auto t = n->decode(c, 2);
        for (auto p : n->overlaps[1][c]) d.gamma[c][p] = gamma(t[0], t[1], p);
    }
    for (std::size_t c = 0; c < n->count(2); ++c) {
        auto t = n->decode(c, 3);
        for (auto p : n->overlaps[2][c]) {
            const auto& ik = d.g(t[0], t[2], p);
            std::vector<std::size_t> comp;
            for (auto o : ik->obj) comp.push_back(fiber->id(o));
            d.phi[c][p] = CatNat{ik, compose(d.g(t[0], t[1], p), d.g(t[1], t[2], p)), std::move(comp)};
        }
    }
    return d;
}

}  // namespace cohere
