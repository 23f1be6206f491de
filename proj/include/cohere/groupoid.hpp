#pragma once

#include "cohere/error.hpp"
#include "cohere/group.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/**
 * \brief A finite groupoid with a dense composition table.
 *
 * comp(a, b) is "b then a" and is defined iff src(a) == tgt(b).
 */
struct FiniteGroupoid {
    std::vector<std::string> obj_labels, arr_labels;
    std::vector<std::size_t> src, tgt;
    std::vector<std::size_t> ids;   // per object
    std::vector<std::size_t> invs;  // per arrow
    std::vector<std::size_t> table; // table[a*N + b] = a o b or kNone
    std::vector<std::vector<std::size_t>> homs;  // homs[x*n + y]: arrows x -> y

    std::size_t num_objects() const { return obj_labels.size(); }
    std::size_t num_arrows() const { return arr_labels.size(); }
    std::size_t comp(std::size_t a, std::size_t b) const { return table[a * num_arrows() + b]; }
    std::size_t id(std::size_t x) const { return ids[x]; }
    std::size_t inv(std::size_t a) const { return invs[a]; }
    const std::vector<std::size_t>& hom(std::size_t x, std::size_t y) const { return homs[x * num_objects() + y]; }
    bool is_identity(std::size_t a) const { return ids[src[a]] == a; }

    std::size_t object(const std::string& l) const {
        for (std::size_t i = 0; i < obj_labels.size(); ++i)
            if (obj_labels[i] == l) return i;
        fail("UnresolvedReference", "object '" + l + "'");
    }
    std::size_t arrow(const std::string& l) const {
        for (std::size_t i = 0; i < arr_labels.size(); ++i)
            if (arr_labels[i] == l) return i;
        fail("UnresolvedReference", "arrow '" + l + "'");
    }
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/**
 * \brief Validates groupoid data; identities and inverses are located.
 *
 * `table` must be N*N with kNone exactly on non-composable pairs.
 * Errors: BadComposition, MissingIdentity, MissingInverse.
 */
inline GroupoidPtr groupoid_validate(std::vector<std::string> objs, std::vector<std::string> arrs,
                                     std::vector<std::size_t> src, std::vector<std::size_t> tgt,
                                     std::vector<std::size_t> table) {
    const std::size_t n = objs.size(), N = arrs.size();
    if (src.size() != N || tgt.size() != N) fail("ValidationError", "src/tgt not total");
    for (std::size_t a = 0; a < N; ++a)
        if (src[a] >= n || tgt[a] >= n) fail("ValidationError", "endpoint out of range for " + arrs[a]);
    if (table.size() != N * N) fail("BadComposition", "composition table has wrong size");
    auto c = [&](std::size_t a, std::size_t b) { return table[a * N + b]; };
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            bool composable = src[a] == tgt[b];
            std::size_t r = c(a, b);
            if (composable != (r != kNone)) fail("BadComposition", arrs[a] + "," + arrs[b]);
            if (r == kNone) continue;
            if (r >= N || src[r] != src[b] || tgt[r] != tgt[a]) fail("BadComposition", arrs[a] + "," + arrs[b]);
        }
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            if (c(a, b) == kNone) continue;
            for (std::size_t d = 0; d < N; ++d) {
                if (c(b, d) == kNone) continue;
                if (c(c(a, b), d) != c(a, c(b, d))) fail("BadComposition", arrs[a] + "," + arrs[b] + "," + arrs[d]);
            }
        }
    std::vector<std::size_t> ids(n, kNone);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t e = 0; e < N && ids[x] == kNone; ++e) {
            if (src[e] != x || tgt[e] != x) continue;
            bool unit = true;
            for (std::size_t a = 0; a < N && unit; ++a) {
                if (src[a] == x && c(a, e) != a) unit = false;
                if (tgt[a] == x && c(e, a) != a) unit = false;
            }
            if (unit) ids[x] = e;
        }
        if (ids[x] == kNone) fail("MissingIdentity", objs[x]);
    }
    std::vector<std::size_t> invs(N, kNone);
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b)
            if (src[b] == tgt[a] && tgt[b] == src[a] && c(b, a) == ids[src[a]] && c(a, b) == ids[tgt[a]]) {
                invs[a] = b;
                break;
            }
        if (invs[a] == kNone) fail("MissingInverse", arrs[a]);
    }
    auto g = std::make_shared<FiniteGroupoid>();
    g->homs.assign(n * n, {});
    for (std::size_t a = 0; a < N; ++a) g->homs[src[a] * n + tgt[a]].push_back(a);
    g->obj_labels = std::move(objs);
    g->arr_labels = std::move(arrs);
    g->src = std::move(src);
    g->tgt = std::move(tgt);
    g->ids = std::move(ids);
    g->invs = std::move(invs);
    g->table = std::move(table);
    return g;
}

/// Builds the composition table from a rule `compose(a, b)` (b then a) and validates.
inline GroupoidPtr make_groupoid(std::vector<std::string> objs, std::vector<std::string> arrs,
                                 std::vector<std::size_t> src, std::vector<std::size_t> tgt,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& compose) {
    const std::size_t N = arrs.size();
    std::vector<std::size_t> table(N * N, kNone);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (src[a] == tgt[b]) table[a * N + b] = compose(a, b);
    return groupoid_validate(std::move(objs), std::move(arrs), std::move(src), std::move(tgt), std::move(table));
}

/// One-object groupoid with arrows the elements of g.
inline GroupoidPtr delooping(const GroupPtr& g) {
    const std::size_t n = g->order();
    return make_groupoid({"*"}, g->labels, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0),
                         [&](std::size_t a, std::size_t b) { return g->mul(a, b); });
}

/// Discrete groupoid (identities only).
inline GroupoidPtr discrete_groupoid(const std::vector<std::string>& objs) {
    std::vector<std::size_t> st(objs.size());
    for (std::size_t i = 0; i < objs.size(); ++i) st[i] = i;
    std::vector<std::string> arrs;
    for (const auto& o : objs) arrs.push_back("1_" + o);
    return make_groupoid(objs, arrs, st, st, [](std::size_t a, std::size_t) { return a; });
}

/// Groupoid with exactly one arrow between any two objects.
inline GroupoidPtr codiscrete_groupoid(const std::vector<std::string>& objs) {
    const std::size_t n = objs.size();
    std::vector<std::string> arrs;
    std::vector<std::size_t> src, tgt;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            arrs.push_back(objs[x] + ">" + objs[y]);
            src.push_back(x);
            tgt.push_back(y);
        }
    return make_groupoid(objs, arrs, src, tgt, [n](std::size_t a, std::size_t b) { return (b / n) * n + a % n; });
}

/**
 * \brief Action groupoid H x G => G of a left action: arrows (h, g): g -> h.g.
 *
 * Composition (h1, g1) o (h2, g2) = (h1 h2, g2). Errors: ActionInvalid.
 */
inline GroupoidPtr action_groupoid(const LeftAction& act) {
    const auto& H = *act.actor;
    const std::size_t n = act.set.size(), k = H.order();
    left_action_validate(act.actor, act.set, act.table);
    std::vector<std::string> arrs;
    std::vector<std::size_t> src, tgt;
    for (std::size_t h = 0; h < k; ++h)
        for (std::size_t g = 0; g < n; ++g) {
            arrs.push_back("(" + H.label(h) + "," + act.set[g] + ")");
            src.push_back(g);
            tgt.push_back(act(h, g));
        }
    return make_groupoid(act.set, arrs, src, tgt, [&](std::size_t a, std::size_t b) {
        return H.mul(a / n, b / n) * n + b % n;
    });
}

/// Functor between finite groupoids.
struct GroupoidFunctor {
    GroupoidPtr src, dst;
    std::vector<std::size_t> obj, arr;

    friend bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b) {
        return a.src == b.src && a.dst == b.dst && a.obj == b.obj && a.arr == b.arr;
    }
};

/// Errors: NotFunctorial(witness).
inline GroupoidFunctor functor_validate(GroupoidFunctor f) {
    const auto& A = *f.src;
    const auto& B = *f.dst;
    if (f.obj.size() != A.num_objects() || f.arr.size() != A.num_arrows()) fail("NotFunctorial", "tables not total");
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        std::size_t fa = f.arr[a];
        if (fa >= B.num_arrows() || B.src[fa] != f.obj[A.src[a]] || B.tgt[fa] != f.obj[A.tgt[a]])
            fail("NotFunctorial", "endpoints of " + A.arr_labels[a]);
    }
    for (std::size_t x = 0; x < A.num_objects(); ++x)
        if (f.arr[A.id(x)] != B.id(f.obj[x])) fail("NotFunctorial", "identity of " + A.obj_labels[x]);
    for (std::size_t a = 0; a < A.num_arrows(); ++a)
        for (std::size_t b = 0; b < A.num_arrows(); ++b) {
            std::size_t ab = A.comp(a, b);
            if (ab == kNone) continue;
            if (f.arr[ab] != B.comp(f.arr[a], f.arr[b]))
                fail("NotFunctorial", A.arr_labels[a] + "," + A.arr_labels[b]);
        }
    return f;
}

inline GroupoidFunctor identity_functor(const GroupoidPtr& g) {
    GroupoidFunctor f{g, g, {}, {}};
    for (std::size_t x = 0; x < g->num_objects(); ++x) f.obj.push_back(x);
    for (std::size_t a = 0; a < g->num_arrows(); ++a) f.arr.push_back(a);
    return f;
}

/// g o f.
inline GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
    if (f.dst != g.src) fail("BoundaryMismatch", "functor composition");
    GroupoidFunctor h{f.src, g.dst, {}, {}};
    for (auto x : f.obj) h.obj.push_back(g.obj[x]);
    for (auto a : f.arr) h.arr.push_back(g.arr[a]);
    return h;
}

/// Natural transformation between parallel groupoid functors; comp[x]: F(x) -> G(x).
struct NatTrans {
    GroupoidFunctor from, to;
    std::vector<std::size_t> comp;
};

/// Errors: BoundaryMismatch, NotNatural(arrow).
inline NatTrans nat_trans_validate(NatTrans t) {
    if (t.from.src != t.to.src || t.from.dst != t.to.dst) fail("BoundaryMismatch", "functors not parallel");
    const auto& A = *t.from.src;
    const auto& B = *t.from.dst;
    if (t.comp.size() != A.num_objects()) fail("NotNatural", "components not total");
    for (std::size_t x = 0; x < A.num_objects(); ++x) {
        std::size_t c = t.comp[x];
        if (c >= B.num_arrows() || B.src[c] != t.from.obj[x] || B.tgt[c] != t.to.obj[x])
            fail("NotNatural", "component at " + A.obj_labels[x]);
    }
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        std::size_t x = A.src[a], y = A.tgt[a];
        if (B.comp(t.to.arr[a], t.comp[x]) != B.comp(t.comp[y], t.from.arr[a]))
            fail("NotNatural", A.arr_labels[a]);
    }
    return t;
}

inline NatTrans identity_nat(const GroupoidFunctor& f) {
    NatTrans t{f, f, {}};
    for (auto x : f.obj) t.comp.push_back(f.dst->id(x));
    return t;
}

/// beta o alpha (alpha first). Errors: BoundaryMismatch.
inline NatTrans vertical(const NatTrans& beta, const NatTrans& alpha) {
    if (!(alpha.to == beta.from)) fail("BoundaryMismatch", "vertical composite");
    NatTrans t{alpha.from, beta.to, {}};
    for (std::size_t x = 0; x < alpha.comp.size(); ++x) t.comp.push_back(alpha.from.dst->comp(beta.comp[x], alpha.comp[x]));
    return nat_trans_validate(std::move(t));
}

/// beta *h alpha : G o F => G' o F' for alpha: F => F', beta: G => G'.
inline NatTrans horizontal(const NatTrans& beta, const NatTrans& alpha) {
    if (alpha.from.dst != beta.from.src) fail("BoundaryMismatch", "horizontal composite");
    NatTrans t{compose(beta.from, alpha.from), compose(beta.to, alpha.to), {}};
    const auto& C = *beta.from.dst;
    for (std::size_t x = 0; x < alpha.comp.size(); ++x)
        t.comp.push_back(C.comp(beta.comp[alpha.to.obj[x]], beta.from.arr[alpha.comp[x]]));
    return nat_trans_validate(std::move(t));
}

/**
 * \brief A full, injective functor into an ambient groupoid with a chosen
 * essential-surjectivity witness section[y] = (a: incl(x) -> y, x).
 */
struct SubgroupoidInclusion {
    GroupoidPtr sub, ambient;
    GroupoidFunctor incl;
    std::vector<std::pair<std::size_t, std::size_t>> section;
};

/// Identity on the image of incl, otherwise the least-index arrow from the image.
inline std::vector<std::pair<std::size_t, std::size_t>> default_section(const GroupoidFunctor& incl) {
    const auto& B = *incl.dst;
    std::vector<std::size_t> pre(B.num_objects(), kNone);
    for (std::size_t x = 0; x < incl.obj.size(); ++x) pre[incl.obj[x]] = x;
    std::vector<std::pair<std::size_t, std::size_t>> s(B.num_objects(), {kNone, kNone});
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
        if (pre[y] != kNone) {
            s[y] = {B.id(y), pre[y]};
            continue;
        }
        for (std::size_t a = 0; a < B.num_arrows(); ++a)
            if (B.tgt[a] == y && pre[B.src[a]] != kNone) {
                s[y] = {a, pre[B.src[a]]};
                break;
            }
        if (s[y].first == kNone) fail("SectionArrowNotLandingInSub", B.obj_labels[y] + " not reached from sub");
    }
    return s;
}

/**
 * \brief Checks injectivity, fullness and the section contract.
 *
 * Section arrows on image objects need not be identities.
 * Errors: NotFunctorial, ValidationError, SectionArrowNotLandingInSub(y).
 */
inline SubgroupoidInclusion inclusion_validate(SubgroupoidInclusion inc) {
    functor_validate(inc.incl);
    if (inc.incl.src != inc.sub || inc.incl.dst != inc.ambient) fail("BoundaryMismatch", "inclusion endpoints");
    const auto& A = *inc.sub;
    const auto& B = *inc.ambient;
    std::vector<std::size_t> pre(B.num_objects(), kNone);
    for (std::size_t x = 0; x < A.num_objects(); ++x) {
        if (pre[inc.incl.obj[x]] != kNone) fail("ValidationError", "inclusion not injective on objects");
        pre[inc.incl.obj[x]] = x;
    }
    std::vector<bool> seen(B.num_arrows(), false);
    for (auto a : inc.incl.arr) {
        if (seen[a]) fail("ValidationError", "inclusion not injective on arrows");
        seen[a] = true;
    }
    for (std::size_t x = 0; x < A.num_objects(); ++x)
        for (std::size_t y = 0; y < A.num_objects(); ++y)
            if (A.hom(x, y).size() != B.hom(inc.incl.obj[x], inc.incl.obj[y]).size())
                fail("ValidationError", "inclusion not full at " + A.obj_labels[x] + "," + A.obj_labels[y]);
    if (inc.section.size() != B.num_objects()) fail("ValidationError", "section not total");
    for (std::size_t y = 0; y < B.num_objects(); ++y) {
        auto [a, x] = inc.section[y];
        if (a >= B.num_arrows() || x >= A.num_objects() || B.tgt[a] != y || B.src[a] != inc.incl.obj[x])
            fail("SectionArrowNotLandingInSub", B.obj_labels[y]);
    }
    return inc;
}

/// Quasi-inverse xi with counit eps: xi o incl => id and unit eta: id => incl o xi.
struct QuasiInverse {
    GroupoidFunctor xi;
    NatTrans eps, eta;
};

inline QuasiInverse quasi_inverse(const SubgroupoidInclusion& inc) {
    inclusion_validate(inc);
    const auto& A = *inc.sub;
    const auto& B = *inc.ambient;
    std::vector<std::size_t> arr_pre(B.num_arrows(), kNone);
    for (std::size_t a = 0; a < A.num_arrows(); ++a) arr_pre[inc.incl.arr[a]] = a;
    GroupoidFunctor xi{inc.ambient, inc.sub, {}, {}};
    for (std::size_t y = 0; y < B.num_objects(); ++y) xi.obj.push_back(inc.section[y].second);
    for (std::size_t g = 0; g < B.num_arrows(); ++g) {
        std::size_t s = inc.section[B.src[g]].first, t = inc.section[B.tgt[g]].first;
        std::size_t c = B.comp(B.inv(t), B.comp(g, s));
        xi.arr.push_back(arr_pre[c]);
    }
    functor_validate(xi);
    GroupoidFunctor id_a = identity_functor(inc.sub);
    GroupoidFunctor id_b = identity_functor(inc.ambient);
    NatTrans eps{compose(xi, inc.incl), id_a, {}};
    for (std::size_t x = 0; x < A.num_objects(); ++x) eps.comp.push_back(arr_pre[inc.section[inc.incl.obj[x]].first]);
    NatTrans eta{id_b, compose(inc.incl, xi), {}};
    for (std::size_t y = 0; y < B.num_objects(); ++y) eta.comp.push_back(B.inv(inc.section[y].first));
    return {std::move(xi), nat_trans_validate(std::move(eps)), nat_trans_validate(std::move(eta))};
}

/// Full subgroupoid on the listed objects, with its inclusion functor.
inline std::pair<GroupoidPtr, GroupoidFunctor> full_subgroupoid(const GroupoidPtr& amb, const std::vector<std::size_t>& objs) {
    const auto& B = *amb;
    std::vector<std::size_t> pos(B.num_objects(), kNone);
    std::vector<std::string> ol;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        pos[objs[i]] = i;
        ol.push_back(B.obj_labels[objs[i]]);
    }
    std::vector<std::size_t> keep, apos(B.num_arrows(), kNone), src, tgt;
    std::vector<std::string> al;
    for (std::size_t a = 0; a < B.num_arrows(); ++a)
        if (pos[B.src[a]] != kNone && pos[B.tgt[a]] != kNone) {
            apos[a] = keep.size();
            keep.push_back(a);
            al.push_back(B.arr_labels[a]);
            src.push_back(pos[B.src[a]]);
            tgt.push_back(pos[B.tgt[a]]);
        }
    auto sub = make_groupoid(ol, al, src, tgt, [&](std::size_t a, std::size_t b) { return apos[B.comp(keep[a], keep[b])]; });
    GroupoidFunctor inc{sub, amb, objs, keep};
    return {sub, functor_validate(inc)};
}

/**
 * \brief Two copies of `sub` with every pair of copies connected.
 *
 * Objects (x, i) for i in {0,1}; arrows (a, i, j): (x, i) -> (y, j) for
 * a: x -> y. Copy 0 is the image of the returned inclusion. Labels of copy 1
 * objects carry a trailing prime; off-diagonal arrows carry "@ij".
 */
inline std::pair<GroupoidPtr, GroupoidFunctor> double_groupoid(const GroupoidPtr& sub) {
    const auto& A = *sub;
    const std::size_t n = A.num_objects(), N = A.num_arrows();
    std::vector<std::string> ol, al;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t x = 0; x < n; ++x) ol.push_back(A.obj_labels[x] + (i ? "'" : ""));
    std::vector<std::size_t> src, tgt;
    // arrow index = (i*2 + j)*N + a
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t a = 0; a < N; ++a) {
                al.push_back(i == 0 && j == 0 ? A.arr_labels[a] : A.arr_labels[a] + "@" + std::to_string(i) + std::to_string(j));
                src.push_back(i * n + A.src[a]);
                tgt.push_back(j * n + A.tgt[a]);
            }
    auto amb = make_groupoid(ol, al, src, tgt, [&](std::size_t p, std::size_t q) {
        std::size_t iq = (q / N) / 2;
        return (iq * 2 + (p / N) % 2) * N + A.comp(p % N, q % N);
    });
    GroupoidFunctor inc{sub, amb, {}, {}};
    for (std::size_t x = 0; x < n; ++x) inc.obj.push_back(x);
    for (std::size_t a = 0; a < N; ++a) inc.arr.push_back(a);
    return {amb, functor_validate(inc)};
}

}  // namespace cohere
