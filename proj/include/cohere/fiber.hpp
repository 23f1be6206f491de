#pragma once

#include "cohere/category.hpp"
#include "cohere/linear_category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohere {

/// Uniform access to the categories that descent data can take values in.
template <class C>
struct Fiber;

template <class S>
struct Fiber<LinearCategory<S>> {
    using Cat = CatPtr<S>;
    using Functor = FunctorPtr<S>;
    using Mor = RepMorphism<S>;
    using Nat = LinearNat<S>;

    static std::size_t size(const Cat& c) { return c->size(); }
    static std::string label(const Cat& c, std::size_t v) { return c->label(v); }
    static std::size_t obj(const Functor& F, std::size_t v) { return F->obj[v]; }
    static Mor id(const Cat& c, std::size_t v) { return identity_morphism(c->objs[v]); }
    static Mor map(const Functor& F, std::size_t v, std::size_t w, const Mor& m) { return (*F)(v, w, m); }
    static Mor then(const Cat&, const Mor& g, const Mor& f) { return compose(g, f); }
    static bool same(const Mor& a, const Mor& b) { return a == b; }
    static std::string str(const Cat&, const Mor& m) { return morphism_str(m); }

    static std::optional<Mor> inv(const Cat&, const Mor& m) {
        for (const auto& c : m.comp)
            if (!invertible(c)) return std::nullopt;
        return inverse(m);
    }

    static Functor identity(const Cat& c) { return identity_functor(c); }
    static Functor compose_f(const Functor& G, const Functor& F) { return compose(G, F); }
    static Functor inverse_f(const Functor& F) { return inverse(F); }
    static bool equal(const Functor& a, const Functor& b) { return *a == *b; }

    static Nat nat(const Functor& F, const Functor& G, std::vector<Mor> c) {
        const auto& D = *F->dst;
        for (std::size_t v = 0; v < c.size(); ++v) {
            c[v].src = D.objs[F->obj[v]];
            c[v].dst = D.objs[G->obj[v]];
        }
        return Nat{F, G, std::move(c)};
    }
    static const Mor& at(const Nat& n, std::size_t v) { return n.comp[v]; }

    static std::optional<std::string> functor_problem(const Functor& F, bool iso) {
        auto f = functor_failures(*F, 1);
        if (!f.empty()) return f[0];
        if (iso && !is_isomorphism(*F)) return "not invertible";
        return std::nullopt;
    }

    /// Checks n as a transformation F => G.
    static std::optional<std::string> nat_problem(const Functor& F, const Functor& G, const Nat& n, bool iso) {
        const auto& C = *F->src;
        const auto& D = *F->dst;
        if (n.comp.size() != C.size()) return "components not total";
        for (std::size_t v = 0; v < C.size(); ++v) {
            const auto& H = D.hom(F->obj[v], G->obj[v]);
            bool ok = n.comp[v].comp.size() == H.src->dim.size();
            for (std::size_t x = 0; ok && x < n.comp[v].comp.size(); ++x)
                ok = n.comp[v].comp[x].rows() == H.dst->dim[x] && n.comp[v].comp[x].cols() == H.src->dim[x];
            if (ok) {
                try {
                    H.coordinates(n.comp[v]);
                } catch (const Error&) {
                    ok = false;
                }
            }
            if (!ok) return "component at " + C.label(v) + " mistyped";
            if (iso && !inv(F->dst, n.comp[v])) return "component at " + C.label(v) + " not invertible";
        }
        auto f = nat_failures(Nat{F, G, n.comp}, 1);
        if (!f.empty()) return "naturality at " + f[0];
        return std::nullopt;
    }
};

template <>
struct Fiber<FiniteCategory> {
    using Cat = CategoryPtr;
    using Functor = CatFunctorPtr;
    using Mor = std::size_t;
    using Nat = CatNat;

    static std::size_t size(const Cat& c) { return c->num_objects(); }
    static std::string label(const Cat& c, std::size_t v) { return c->obj_labels[v]; }
    static std::size_t obj(const Functor& F, std::size_t v) { return F->obj[v]; }
    static Mor id(const Cat& c, std::size_t v) { return c->id(v); }
    static Mor map(const Functor& F, std::size_t, std::size_t, const Mor& m) { return F->arr[m]; }
    static Mor then(const Cat& c, const Mor& g, const Mor& f) {
        std::size_t r = c->comp(g, f);
        if (r == kNone) fail("BoundaryMismatch", c->arr_labels[g] + " after " + c->arr_labels[f]);
        return r;
    }
    static bool same(const Mor& a, const Mor& b) { return a == b; }
    static std::string str(const Cat& c, const Mor& m) { return c->arr_labels[m]; }

    static std::optional<Mor> inv(const Cat& c, const Mor& m) {
        std::size_t r = arrow_inverse(*c, m);
        if (r == kNone) return std::nullopt;
        return r;
    }

    static Functor identity(const Cat& c) { return identity_functor(c); }
    static Functor compose_f(const Functor& G, const Functor& F) { return compose(G, F); }
    static Functor inverse_f(const Functor& F) { return inverse(F); }
    static bool equal(const Functor& a, const Functor& b) { return *a == *b; }

    static Nat nat(const Functor& F, const Functor& G, std::vector<Mor> c) { return Nat{F, G, std::move(c)}; }
    static const Mor& at(const Nat& n, std::size_t v) { return n.comp[v]; }

    static std::optional<std::string> functor_problem(const Functor& F, bool iso) {
        if (auto p = cohere::functor_problem(*F)) return p;
        if (iso) {
            try {
                inverse(F);
            } catch (const Error&) {
                return "not invertible";
            }
        }
        return std::nullopt;
    }

    static std::optional<std::string> nat_problem(const Functor& F, const Functor& G, const Nat& n, bool iso) {
        return cohere::nat_problem(*F, *G, n.comp, iso);
    }
};

}  // namespace cohere
