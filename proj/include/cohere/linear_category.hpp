#pragma once

#include "cohere/linrep.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief A finite full (or component-restricted) subcategory of Rep^Gamma:
 * a list of reps over one groupoid with exact hom-space bases.
 */
template <class S>
struct LinearCategory {
    GroupoidPtr gpd;
    std::vector<RepPtr<S>> objs;
    std::vector<HomSpace<S>> homs;  // homs[i*n + j]: objs[i] -> objs[j]
    std::vector<Matrix<S>> allowed; // component restriction, empty = none

    std::size_t size() const { return objs.size(); }
    const HomSpace<S>& hom(std::size_t i, std::size_t j) const { return homs[i * size() + j]; }
    const std::string& label(std::size_t i) const { return objs[i]->name; }

    /// Index of an object equal to r, or kNone.
    std::size_t find(const GroupoidRep<S>& r) const {
        for (std::size_t i = 0; i < objs.size(); ++i)
            if (*objs[i] == r) return i;
        return kNone;
    }
};

template <class S>
using CatPtr = std::shared_ptr<const LinearCategory<S>>;

/// Errors: GroupoidMismatch.
template <class S>
CatPtr<S> linear_category(std::vector<RepPtr<S>> objs, std::vector<Matrix<S>> allowed = {}) {
    if (objs.empty()) fail("ValidationError", "empty carrier");
    auto c = std::make_shared<LinearCategory<S>>();
    c->gpd = objs[0]->gpd;
    for (const auto& r : objs)
        if (r->gpd != c->gpd) fail("GroupoidMismatch", r->name);
    c->objs = std::move(objs);
    c->allowed = std::move(allowed);
    for (const auto& a : c->objs)
        for (const auto& b : c->objs) c->homs.push_back(hom_space(a, b, c->allowed));
    return c;
}

/**
 * \brief Linear functor stored extensionally: object table and the images of
 * hom-space basis vectors.
 */
template <class S>
struct LinearFunctor {
    CatPtr<S> src, dst;
    std::vector<std::size_t> obj;
    std::vector<std::vector<RepMorphism<S>>> arr;  // arr[i*n + j][k]: image of basis k of Hom(i, j)

    const std::vector<RepMorphism<S>>& images(std::size_t i, std::size_t j) const { return arr[i * src->size() + j]; }

    /// Image of an arbitrary morphism i -> j.
    RepMorphism<S> operator()(std::size_t i, std::size_t j, const RepMorphism<S>& f) const {
        auto c = src->hom(i, j).coordinates(f);
        RepMorphism<S> h = zero_morphism(dst->objs[obj[i]], dst->objs[obj[j]]);
        const auto& im = images(i, j);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) h = h + c[k] * im[k];
        return h;
    }

    friend bool operator==(const LinearFunctor& a, const LinearFunctor& b) {
        return a.src == b.src && a.dst == b.dst && a.obj == b.obj && a.arr == b.arr;
    }
};

template <class S>
using FunctorPtr = std::shared_ptr<const LinearFunctor<S>>;

/**
 * \brief Builds a functor from an object table and a morphism rule applied to
 * basis vectors.
 */
template <class S>
FunctorPtr<S> make_functor(const CatPtr<S>& src, const CatPtr<S>& dst, std::vector<std::size_t> obj,
                           const std::function<RepMorphism<S>(std::size_t, std::size_t, const RepMorphism<S>&)>& on_arrow) {
    auto F = std::make_shared<LinearFunctor<S>>();
    F->src = src;
    F->dst = dst;
    F->obj = std::move(obj);
    const std::size_t n = src->size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<RepMorphism<S>> im;
            for (const auto& b : src->hom(i, j).basis) {
                auto m = on_arrow(i, j, b);
                m.src = dst->objs[F->obj[i]];
                m.dst = dst->objs[F->obj[j]];
                im.push_back(std::move(m));
            }
            F->arr.push_back(std::move(im));
        }
    return F;
}

template <class S>
FunctorPtr<S> identity_functor(const CatPtr<S>& c) {
    std::vector<std::size_t> obj;
    for (std::size_t i = 0; i < c->size(); ++i) obj.push_back(i);
    return make_functor<S>(c, c, obj, [](std::size_t, std::size_t, const RepMorphism<S>& f) { return f; });
}

/// G o F. Errors: BoundaryMismatch.
template <class S>
FunctorPtr<S> compose(const FunctorPtr<S>& G, const FunctorPtr<S>& F) {
    if (F->dst != G->src) fail("BoundaryMismatch", "functor composition");
    std::vector<std::size_t> obj;
    for (auto o : F->obj) obj.push_back(G->obj[o]);
    auto C = std::make_shared<LinearFunctor<S>>();
    C->src = F->src;
    C->dst = G->dst;
    C->obj = std::move(obj);
    const std::size_t n = F->src->size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<RepMorphism<S>> im;
            for (const auto& f : F->images(i, j)) im.push_back((*G)(F->obj[i], F->obj[j], f));
            C->arr.push_back(std::move(im));
        }
    return C;
}

/**
 * \brief Functor laws on basis data: images are morphisms between the image
 * objects, identities go to identities, composition of basis pairs is
 * preserved. Reported as a list of failing witnesses.
 */
template <class S>
std::vector<std::string> functor_failures(const LinearFunctor<S>& F, std::size_t cap = 8) {
    std::vector<std::string> out;
    const auto& C = *F.src;
    const auto& D = *F.dst;
    const std::size_t n = C.size();
    auto note = [&](std::string s) {
        if (out.size() < cap) out.push_back(std::move(s));
    };
    for (std::size_t i = 0; i < n && out.size() < cap; ++i) {
        auto id = identity_morphism(C.objs[i]);
        if (F(i, i, id) != identity_morphism(D.objs[F.obj[i]])) note("identity at " + C.label(i));
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& m : F.images(i, j)) {
                try {
                    D.hom(F.obj[i], F.obj[j]).coordinates(m);
                } catch (const Error&) {
                    note("image not a morphism " + C.label(i) + "->" + C.label(j));
                }
            }
            for (std::size_t k = 0; k < n && out.size() < cap; ++k)
                for (const auto& f : C.hom(i, j).basis)
                    for (const auto& g : C.hom(j, k).basis) {
                        auto lhs = F(i, k, compose(g, f));
                        auto rhs = compose(F(j, k, g), F(i, j, f));
                        if (lhs != rhs) note("composition " + C.label(i) + "->" + C.label(j) + "->" + C.label(k));
                    }
        }
    }
    return out;
}

/**
 * \brief Natural transformation between parallel linear functors; comp[i] is
 * a morphism from.obj[i] -> to.obj[i] in the target category.
 */
template <class S>
struct LinearNat {
    FunctorPtr<S> from, to;
    std::vector<RepMorphism<S>> comp;

    friend bool operator==(const LinearNat& a, const LinearNat& b) { return a.comp == b.comp; }
};

template <class S>
LinearNat<S> identity_nat(const FunctorPtr<S>& F) {
    LinearNat<S> n{F, F, {}};
    for (auto o : F->obj) n.comp.push_back(identity_morphism(F->dst->objs[o]));
    return n;
}

/// beta o alpha. Errors: BoundaryMismatch.
template <class S>
LinearNat<S> vertical(const LinearNat<S>& beta, const LinearNat<S>& alpha) {
    if (alpha.to->obj != beta.from->obj || alpha.to->dst != beta.from->dst) fail("BoundaryMismatch", "vertical composition");
    LinearNat<S> n{alpha.from, beta.to, {}};
    for (std::size_t i = 0; i < alpha.comp.size(); ++i) n.comp.push_back(compose(beta.comp[i], alpha.comp[i]));
    return n;
}

/**
 * \brief beta *h alpha for alpha: F => F' (C -> D), beta: G => G' (D -> E);
 * component beta_{F'(i)} o G(alpha_i), a transformation G F => G' F'.
 */
template <class S>
LinearNat<S> horizontal(const LinearNat<S>& beta, const LinearNat<S>& alpha, const FunctorPtr<S>& GF,
                        const FunctorPtr<S>& GpFp) {
    if (alpha.from->dst != beta.from->src) fail("BoundaryMismatch", "horizontal composition");
    LinearNat<S> n{GF, GpFp, {}};
    const auto& G = *beta.from;
    for (std::size_t i = 0; i < alpha.comp.size(); ++i) {
        std::size_t fi = alpha.from->obj[i], fpi = alpha.to->obj[i];
        n.comp.push_back(compose(beta.comp[fpi], G(fi, fpi, alpha.comp[i])));
    }
    return n;
}

template <class S>
LinearNat<S> horizontal(const LinearNat<S>& beta, const LinearNat<S>& alpha) {
    return horizontal(beta, alpha, compose(beta.from, alpha.from), compose(beta.to, alpha.to));
}

/// Componentwise inverse.
template <class S>
LinearNat<S> inverse(const LinearNat<S>& a) {
    LinearNat<S> n{a.to, a.from, {}};
    for (const auto& c : a.comp) n.comp.push_back(inverse(c));
    return n;
}

/**
 * \brief Naturality: to(f) o alpha_i = alpha_j o from(f) for every basis
 * morphism f: i -> j, and each component is a morphism of the target category.
 */
template <class S>
std::vector<std::string> nat_failures(const LinearNat<S>& a, std::size_t cap = 8) {
    std::vector<std::string> out;
    const auto& C = *a.from->src;
    const auto& D = *a.from->dst;
    for (std::size_t i = 0; i < C.size() && out.size() < cap; ++i) {
        try {
            D.hom(a.from->obj[i], a.to->obj[i]).coordinates(a.comp[i]);
        } catch (const Error&) {
            out.push_back("component at " + C.label(i) + " is not a morphism");
        }
    }
    for (std::size_t i = 0; i < C.size() && out.size() < cap; ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            const auto& fi = a.from->images(i, j);
            const auto& ti = a.to->images(i, j);
            for (std::size_t k = 0; k < fi.size() && out.size() < cap; ++k)
                if (compose(ti[k], a.comp[i]) != compose(a.comp[j], fi[k]))
                    out.push_back("basis " + std::to_string(k) + " of " + C.label(i) + "->" + C.label(j));
        }
    return out;
}

/// Inverse of a linear isomorphism of categories. Errors: NotInvertible.
template <class S>
FunctorPtr<S> inverse(const FunctorPtr<S>& F) {
    const auto& C = *F->src;
    const auto& D = *F->dst;
    const std::size_t n = C.size();
    if (D.size() != n) fail("NotInvertible", "object counts differ");
    std::vector<std::size_t> back(n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
        if (back[F->obj[i]] != kNone) fail("NotInvertible", "functor not injective on objects");
        back[F->obj[i]] = i;
    }
    std::vector<Matrix<S>> inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& H = D.hom(F->obj[i], F->obj[j]);
            const auto& im = F->images(i, j);
            Matrix<S> m(H.dim(), im.size());
            for (std::size_t k = 0; k < im.size(); ++k) {
                auto c = H.coordinates(im[k]);
                for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
            }
            if (!invertible(m)) fail("NotInvertible", "on " + C.label(i) + "->" + C.label(j));
            inv[i * n + j] = inverse(m);
        }
    return make_functor<S>(F->dst, F->src, back, [&](std::size_t a, std::size_t b, const RepMorphism<S>& f) {
        std::size_t i = back[a], j = back[b];
        auto c = D.hom(a, b).coordinates(f);
        const auto& m = inv[i * n + j];
        std::vector<S> x(m.rows(), S(0));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t k = 0; k < c.size(); ++k) x[r] += m(r, k) * c[k];
        return C.hom(i, j).combine(x);
    });
}

/// True when F is bijective on objects and on every hom space.
template <class S>
bool is_isomorphism(const LinearFunctor<S>& F) {
    const auto& C = *F.src;
    const auto& D = *F.dst;
    std::vector<bool> hit(D.size(), false);
    for (auto o : F.obj) hit[o] = true;
    if (C.size() != D.size() || std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
    for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) {
            const auto& H = D.hom(F.obj[i], F.obj[j]);
            const auto& im = F.images(i, j);
            if (H.dim() != im.size()) return false;
            Matrix<S> m(H.dim(), im.size());
            for (std::size_t k = 0; k < im.size(); ++k) {
                auto c = H.coordinates(im[k]);
                for (std::size_t r = 0; r < c.size(); ++r) m(r, k) = c[r];
            }
            if (rank(m) != im.size()) return false;
        }
    return true;
}

/**
 * \brief Basis of Nat(F, G), each vector the concatenated hom-space
 * coordinates of the components in object order.
 */
template <class S>
std::vector<std::vector<S>> nat_space(const FunctorPtr<S>& F, const FunctorPtr<S>& G) {
    const auto& C = *F->src;
    const auto& D = *F->dst;
    const std::size_t n = C.size();
    std::vector<std::size_t> off(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + D.hom(F->obj[v], G->obj[v]).dim();
    std::vector<std::vector<S>> rows;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
            const auto& T = D.hom(F->obj[v], G->obj[w]);
            const auto& Fi = F->images(v, w);
            const auto& Gi = G->images(v, w);
            for (std::size_t b = 0; b < Fi.size(); ++b) {
                std::vector<std::vector<S>> block(T.dim(), std::vector<S>(off[n], S(0)));
                const auto& Hv = D.hom(F->obj[v], G->obj[v]);
                for (std::size_t k = 0; k < Hv.dim(); ++k) {
                    auto c = T.coordinates(compose(Gi[b], Hv.basis[k]));
                    for (std::size_t r = 0; r < c.size(); ++r) block[r][off[v] + k] += c[r];
                }
                const auto& Hw = D.hom(F->obj[w], G->obj[w]);
                for (std::size_t k = 0; k < Hw.dim(); ++k) {
                    auto c = T.coordinates(compose(Hw.basis[k], Fi[b]));
                    for (std::size_t r = 0; r < c.size(); ++r) block[r][off[w] + k] -= c[r];
                }
                for (auto& r : block) rows.push_back(std::move(r));
            }
        }
    Matrix<S> m(rows.size(), off[n]);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < off[n]; ++c) m(r, c) = rows[r][c];
    return nullspace(m).basis;
}

}  // namespace cohere
