#pragma once

#include "cohere/groupoid.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief A finite category with a dense composition table.
 *
 * comp(b, a) is "a then b", kNone when tgt(a) != src(b).
 */
struct FiniteCategory {
    std::vector<std::string> obj_labels, arr_labels;
    std::vector<std::size_t> src, tgt;
    std::vector<std::size_t> ids;
    std::vector<std::size_t> table;

    std::size_t num_objects() const { return obj_labels.size(); }
    std::size_t num_arrows() const { return arr_labels.size(); }
    std::size_t comp(std::size_t b, std::size_t a) const { return table[b * num_arrows() + a]; }
    std::size_t id(std::size_t x) const { return ids[x]; }

    std::vector<std::size_t> hom(std::size_t x, std::size_t y) const {
        std::vector<std::size_t> h;
        for (std::size_t a = 0; a < num_arrows(); ++a)
            if (src[a] == x && tgt[a] == y) h.push_back(a);
        return h;
    }
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Errors: BadComposition, MissingIdentity.
inline CategoryPtr category_validate(std::vector<std::string> objs, std::vector<std::string> arrs,
                                     std::vector<std::size_t> src, std::vector<std::size_t> tgt,
                                     std::vector<std::size_t> table) {
    const std::size_t n = objs.size(), N = arrs.size();
    if (src.size() != N || tgt.size() != N || table.size() != N * N) fail("ValidationError", "category tables not total");
    auto c = [&](std::size_t b, std::size_t a) { return table[b * N + a]; };
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < N; ++a) {
            std::size_t r = c(b, a);
            if ((src[b] == tgt[a]) != (r != kNone)) fail("BadComposition", arrs[b] + "," + arrs[a]);
            if (r != kNone && (r >= N || src[r] != src[a] || tgt[r] != tgt[b])) fail("BadComposition", arrs[b] + "," + arrs[a]);
        }
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            if (c(y, x) == kNone) continue;
            for (std::size_t z = 0; z < N; ++z)
                if (c(z, y) != kNone && c(c(z, y), x) != c(z, c(y, x)))
                    fail("BadComposition", arrs[z] + "," + arrs[y] + "," + arrs[x]);
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
    auto C = std::make_shared<FiniteCategory>();
    C->obj_labels = std::move(objs);
    C->arr_labels = std::move(arrs);
    C->src = std::move(src);
    C->tgt = std::move(tgt);
    C->ids = std::move(ids);
    C->table = std::move(table);
    return C;
}

/// Builds the table from a rule `compose(b, a)` (a then b) and validates.
inline CategoryPtr make_category(std::vector<std::string> objs, std::vector<std::string> arrs, std::vector<std::size_t> src,
                                 std::vector<std::size_t> tgt,
                                 const std::function<std::size_t(std::size_t, std::size_t)>& compose) {
    const std::size_t N = arrs.size();
    std::vector<std::size_t> table(N * N, kNone);
    for (std::size_t b = 0; b < N; ++b)
        for (std::size_t a = 0; a < N; ++a)
            if (src[b] == tgt[a]) table[b * N + a] = compose(b, a);
    return category_validate(std::move(objs), std::move(arrs), std::move(src), std::move(tgt), std::move(table));
}

inline CategoryPtr as_category(const FiniteGroupoid& g) {
    return category_validate(g.obj_labels, g.arr_labels, g.src, g.tgt, g.table);
}

struct CatFunctor {
    CategoryPtr src, dst;
    std::vector<std::size_t> obj, arr;

    friend bool operator==(const CatFunctor& a, const CatFunctor& b) {
        return a.src == b.src && a.dst == b.dst && a.obj == b.obj && a.arr == b.arr;
    }
};

using CatFunctorPtr = std::shared_ptr<const CatFunctor>;

/// First violated functor law, if any.
inline std::optional<std::string> functor_problem(const CatFunctor& F) {
    const auto& A = *F.src;
    const auto& B = *F.dst;
    if (F.obj.size() != A.num_objects() || F.arr.size() != A.num_arrows()) return "tables not total";
    for (std::size_t a = 0; a < A.num_arrows(); ++a) {
        if (F.arr[a] >= B.num_arrows()) return "arrow " + A.arr_labels[a] + " out of range";
        if (B.src[F.arr[a]] != F.obj[A.src[a]] || B.tgt[F.arr[a]] != F.obj[A.tgt[a]]) return "endpoints of " + A.arr_labels[a];
    }
    for (std::size_t x = 0; x < A.num_objects(); ++x)
        if (F.arr[A.id(x)] != B.id(F.obj[x])) return "identity at " + A.obj_labels[x];
    for (std::size_t b = 0; b < A.num_arrows(); ++b)
        for (std::size_t a = 0; a < A.num_arrows(); ++a) {
            std::size_t ba = A.comp(b, a);
            if (ba != kNone && F.arr[ba] != B.comp(F.arr[b], F.arr[a]))
                return "composition " + A.arr_labels[b] + "," + A.arr_labels[a];
        }
    return std::nullopt;
}

/// Errors: NotFunctorial.
inline CatFunctor cat_functor_validate(CatFunctor F) {
    if (auto p = functor_problem(F)) fail("NotFunctorial", *p);
    return F;
}

inline CatFunctorPtr identity_functor(const CategoryPtr& c) {
    auto F = std::make_shared<CatFunctor>();
    F->src = F->dst = c;
    for (std::size_t x = 0; x < c->num_objects(); ++x) F->obj.push_back(x);
    for (std::size_t a = 0; a < c->num_arrows(); ++a) F->arr.push_back(a);
    return F;
}

/// G o F. Errors: BoundaryMismatch.
inline CatFunctorPtr compose(const CatFunctorPtr& G, const CatFunctorPtr& F) {
    if (F->dst != G->src) fail("BoundaryMismatch", "functor composition");
    auto H = std::make_shared<CatFunctor>();
    H->src = F->src;
    H->dst = G->dst;
    for (auto o : F->obj) H->obj.push_back(G->obj[o]);
    for (auto a : F->arr) H->arr.push_back(G->arr[a]);
    return H;
}

/// Inverse of a bijective functor. Errors: NotInvertible.
inline CatFunctorPtr inverse(const CatFunctorPtr& F) {
    auto H = std::make_shared<CatFunctor>();
    H->src = F->dst;
    H->dst = F->src;
    H->obj.assign(F->dst->num_objects(), kNone);
    H->arr.assign(F->dst->num_arrows(), kNone);
    for (std::size_t x = 0; x < F->obj.size(); ++x) {
        if (H->obj[F->obj[x]] != kNone) fail("NotInvertible", "functor not injective on objects");
        H->obj[F->obj[x]] = x;
    }
    for (std::size_t a = 0; a < F->arr.size(); ++a) {
        if (H->arr[F->arr[a]] != kNone) fail("NotInvertible", "functor not injective on arrows");
        H->arr[F->arr[a]] = a;
    }
    for (auto v : H->obj)
        if (v == kNone) fail("NotInvertible", "functor not surjective on objects");
    for (auto v : H->arr)
        if (v == kNone) fail("NotInvertible", "functor not surjective on arrows");
    return H;
}

/// Natural transformation between functors of finite categories; comp[x] an arrow of the target.
struct CatNat {
    CatFunctorPtr from, to;
    std::vector<std::size_t> comp;

    friend bool operator==(const CatNat& a, const CatNat& b) { return a.comp == b.comp; }
};

inline CatNat identity_nat(const CatFunctorPtr& F) {
    CatNat n{F, F, {}};
    for (auto o : F->obj) n.comp.push_back(F->dst->id(o));
    return n;
}

/// First failure of: typing F(x) -> G(x), naturality, and (when asked) invertibility.
inline std::optional<std::string> nat_problem(const CatFunctor& F, const CatFunctor& G, const std::vector<std::size_t>& comp,
                                              bool require_iso) {
    const auto& A = *F.src;
    const auto& B = *F.dst;
    if (comp.size() != A.num_objects()) return "components not total";
    for (std::size_t x = 0; x < A.num_objects(); ++x) {
        std::size_t c = comp[x];
        if (c >= B.num_arrows() || B.src[c] != F.obj[x] || B.tgt[c] != G.obj[x]) return "component at " + A.obj_labels[x] + " mistyped";
        if (require_iso) {
            bool inv = false;
            for (std::size_t d : B.hom(G.obj[x], F.obj[x]))
                inv = inv || (B.comp(d, c) == B.id(F.obj[x]) && B.comp(c, d) == B.id(G.obj[x]));
            if (!inv) return "component at " + A.obj_labels[x] + " not invertible";
        }
    }
    for (std::size_t a = 0; a < A.num_arrows(); ++a)
        if (B.comp(G.arr[a], comp[A.src[a]]) != B.comp(comp[A.tgt[a]], F.arr[a])) return "naturality at " + A.arr_labels[a];
    return std::nullopt;
}

/// Inverse arrow in a finite category, or kNone.
inline std::size_t arrow_inverse(const FiniteCategory& C, std::size_t c) {
    for (std::size_t d : C.hom(C.tgt[c], C.src[c]))
        if (C.comp(d, c) == C.id(C.src[c]) && C.comp(c, d) == C.id(C.tgt[c])) return d;
    return kNone;
}

}  // namespace cohere
