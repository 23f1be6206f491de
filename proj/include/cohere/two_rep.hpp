#pragma once

#include "cohere/audit.hpp"
#include "cohere/linear_category.hpp"
#include "cohere/two_group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cohere {

/**
 * \brief A 2-representation (D, F, eta, phi, psi) of a finite 2-group.
 *
 * F[g] is an endofunctor of the carrier, eta[p]: F[src p] => F[tgt p],
 * phi[g*n+h]: F_g o F_h => F_{g x h} (F_h applied first), psi: Id => F_I.
 * FF[g*n+h] caches the composite F_g o F_h.
 */
template <class S>
struct TwoRepresentation {
    TwoGroupPtr tg;
    CatPtr<S> carrier;
    std::vector<FunctorPtr<S>> F;
    std::vector<FunctorPtr<S>> FF;
    FunctorPtr<S> id;
    std::vector<LinearNat<S>> eta;
    std::vector<LinearNat<S>> phi;
    LinearNat<S> psi;
    RepPtr<S> zeta;  // the H-rep, for 2-representations built by embed_rep

    const LinearNat<S>& phi_at(std::size_t g, std::size_t h) const { return phi[g * tg->n() + h]; }
    const FunctorPtr<S>& FF_at(std::size_t g, std::size_t h) const { return FF[g * tg->n() + h]; }
};

template <class S>
using TwoRepPtr = std::shared_ptr<const TwoRepresentation<S>>;

namespace detail {

template <class S>
std::vector<FunctorPtr<S>> composites(const TwoGroupPtr& tg, const std::vector<FunctorPtr<S>>& F) {
    std::vector<FunctorPtr<S>> FF;
    for (std::size_t g = 0; g < tg->n(); ++g)
        for (std::size_t h = 0; h < tg->n(); ++h) FF.push_back(compose(F[g], F[h]));
    return FF;
}

template <class S>
LinearNat<S> nat_from(const FunctorPtr<S>& from, const FunctorPtr<S>& to,
                      const std::function<std::vector<Matrix<S>>(std::size_t)>& comp) {
    LinearNat<S> n{from, to, {}};
    const auto& D = *from->dst;
    for (std::size_t i = 0; i < from->src->size(); ++i)
        n.comp.push_back(RepMorphism<S>{D.objs[from->obj[i]], D.objs[to->obj[i]], comp(i)});
    return n;
}

/// F_g(rho)(x) = rho(x g), F_g(rho)(a) = rho(a x 1_g).
template <class S>
GroupoidRep<S> translate(const CoherentTwoGroup& t, const GroupoidRep<S>& r, std::size_t g) {
    const auto& G = *t.gpd;
    GroupoidRep<S> o{r.gpd, {}, {}, r.name + "^" + t.ol(g)};
    for (std::size_t x = 0; x < t.n(); ++x) o.dim.push_back(r.dim[t.tensor(x, g)]);
    for (std::size_t a = 0; a < t.N(); ++a) o.mat.push_back(r.mat[t.tensor_arr(a, G.id(g))]);
    return o;
}

}  // namespace detail

/// Closes a rep list under every F_g of the canonical construction.
template <class S>
std::vector<RepPtr<S>> orbit_closure(const CoherentTwoGroup& t, std::vector<RepPtr<S>> reps, std::size_t cap = 256) {
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t g = 0; g < t.n(); ++g) {
            auto r = detail::translate(t, *reps[i], g);
            bool found = false;
            for (const auto& q : reps) found = found || *q == r;
            if (found) continue;
            if (reps.size() >= cap) fail("ValidationError", "orbit closure exceeds " + std::to_string(cap));
            reps.push_back(std::make_shared<GroupoidRep<S>>(std::move(r)));
        }
    return reps;
}

/**
 * \brief The canonical 2-representation on a carrier of reps of the
 * underlying groupoid.
 *
 * eta_p(rho)_x = rho(1_x x p), phi_{g,h}(rho)_x = rho(a_{x,g,h}),
 * psi(rho)_x = rho(r_x)^-1. Errors: NotClosedUnderFg(g, rho).
 */
template <class S>
TwoRepPtr<S> canonical_2rep(const TwoGroupPtr& tg, const CatPtr<S>& carrier) {
    const auto& t = *tg;
    const auto& G = *t.gpd;
    const auto& C = *carrier;
    if (C.gpd != t.gpd) fail("GroupoidMismatch", "carrier is not over the 2-group's groupoid");
    auto A = std::make_shared<TwoRepresentation<S>>();
    A->tg = tg;
    A->carrier = carrier;
    A->id = identity_functor(carrier);
    for (std::size_t g = 0; g < t.n(); ++g) {
        std::vector<std::size_t> obj;
        for (std::size_t i = 0; i < C.size(); ++i) {
            std::size_t k = C.find(detail::translate(t, *C.objs[i], g));
            if (k == kNone) fail("NotClosedUnderFg", t.ol(g) + "," + C.label(i));
            obj.push_back(k);
        }
        A->F.push_back(make_functor<S>(carrier, carrier, obj, [&](std::size_t, std::size_t, const RepMorphism<S>& f) {
            RepMorphism<S> m;
            for (std::size_t x = 0; x < t.n(); ++x) m.comp.push_back(f.comp[t.tensor(x, g)]);
            return m;
        }));
    }
    A->FF = detail::composites(tg, A->F);
    for (std::size_t p = 0; p < t.N(); ++p)
        A->eta.push_back(detail::nat_from<S>(A->F[G.src[p]], A->F[G.tgt[p]], [&](std::size_t i) {
            std::vector<Matrix<S>> c;
            for (std::size_t x = 0; x < t.n(); ++x) c.push_back(C.objs[i]->mat[t.tensor_arr(G.id(x), p)]);
            return c;
        }));
    for (std::size_t g = 0; g < t.n(); ++g)
        for (std::size_t h = 0; h < t.n(); ++h)
            A->phi.push_back(detail::nat_from<S>(A->FF_at(g, h), A->F[t.tensor(g, h)], [&](std::size_t i) {
                std::vector<Matrix<S>> c;
                for (std::size_t x = 0; x < t.n(); ++x) c.push_back(C.objs[i]->mat[t.a(x, g, h)]);
                return c;
            }));
    A->psi = detail::nat_from<S>(A->id, A->F[t.unit], [&](std::size_t i) {
        std::vector<Matrix<S>> c;
        for (std::size_t x = 0; x < t.n(); ++x) c.push_back(inverse(C.objs[i]->mat[t.r(x)]));
        return c;
    });
    return A;
}

template <class S>
TwoRepPtr<S> canonical_2rep(const TwoGroupPtr& tg, const std::vector<RepPtr<S>>& reps) {
    return canonical_2rep<S>(tg, linear_category<S>(reps));
}

/// Errors: RepNotOfH.
template <class S>
void require_rep_of(const FiniteGroup& H, const GroupoidRep<S>& r) {
    const auto& B = *r.gpd;
    if (B.num_objects() != 1 || B.arr_labels != H.labels) fail("RepNotOfH", r.name);
    for (std::size_t a = 0; a < H.order(); ++a)
        for (std::size_t b = 0; b < H.order(); ++b)
            if (B.comp(a, b) != H.mul(a, b)) fail("RepNotOfH", r.name);
}

/**
 * \brief The 2-representation of a crossed module on H-representations:
 * F_g(V, rho) = (V, rho o alpha(g)), F_g(f) = f,
 * eta_{(g,h)}(V, rho) = rho(alpha(g)(h^-1)), phi and psi identities.
 *
 * The rep list is closed under the F_g first. Errors: RepNotOfH.
 */
template <class S>
TwoRepPtr<S> crossed_2rep(const StrictTwoGroup& s, std::vector<RepPtr<S>> reps) {
    const auto& xm = s.xm;
    const auto& H = *xm.H;
    const auto& G = *xm.G;
    if (reps.empty()) fail("ValidationError", "empty rep list");
    for (const auto& r : reps) require_rep_of(H, *r);
    for (const auto& r : reps)
        if (r->gpd != reps[0]->gpd) fail("GroupoidMismatch", r->name);
    auto twist = [&](const GroupoidRep<S>& r, std::size_t g) {
        GroupoidRep<S> o{r.gpd, r.dim, {}, r.name + "^" + G.label(g)};
        for (std::size_t h = 0; h < H.order(); ++h) o.mat.push_back(r.mat[xm.action(g, h)]);
        return o;
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t g = 0; g < G.order(); ++g) {
            auto r = twist(*reps[i], g);
            bool found = false;
            for (const auto& q : reps) found = found || *q == r;
            if (!found) reps.push_back(std::make_shared<GroupoidRep<S>>(std::move(r)));
        }
    auto carrier = linear_category<S>(reps);
    const auto& C = *carrier;
    const auto& t = *s.tg;
    auto A = std::make_shared<TwoRepresentation<S>>();
    A->tg = s.tg;
    A->carrier = carrier;
    A->id = identity_functor(carrier);
    for (std::size_t g = 0; g < G.order(); ++g) {
        std::vector<std::size_t> obj;
        for (std::size_t i = 0; i < C.size(); ++i) obj.push_back(C.find(twist(*C.objs[i], g)));
        A->F.push_back(make_functor<S>(carrier, carrier, obj, [](std::size_t, std::size_t, const RepMorphism<S>& f) { return f; }));
    }
    A->FF = detail::composites(s.tg, A->F);
    for (std::size_t p = 0; p < t.N(); ++p) {
        std::size_t g1 = s.arrow_g(p), h = s.arrow_h(p);
        A->eta.push_back(detail::nat_from<S>(A->F[t.gpd->src[p]], A->F[t.gpd->tgt[p]], [&](std::size_t i) {
            return std::vector<Matrix<S>>{C.objs[i]->mat[xm.action(g1, H.inv(h))]};
        }));
    }
    auto ident = [&](std::size_t i) { return identity_morphism(C.objs[i]).comp; };
    for (std::size_t g = 0; g < t.n(); ++g)
        for (std::size_t h = 0; h < t.n(); ++h)
            A->phi.push_back(detail::nat_from<S>(A->FF_at(g, h), A->F[t.tensor(g, h)], ident));
    A->psi = detail::nat_from<S>(A->id, A->F[t.unit], ident);
    return A;
}

/**
 * \brief Laws of a 2-representation, each a separate report:
 * functoriality (eta of identities and vertical composites),
 * eta_naturality, Fg_functoriality, phi_naturality (in the carrier and in
 * the 2-group arrows), psi_naturality, hexagon, left_unit, right_unit.
 */
template <class S>
std::vector<AuditReport> two_rep_audit(const TwoRepresentation<S>& A, const AuditOptions& opt = {}) {
    const auto& t = *A.tg;
    const auto& G = *t.gpd;
    const auto& C = *A.carrier;
    const std::size_t n = t.n(), N = t.N(), m = C.size();
    auto nat_eq = [&](const std::vector<RepMorphism<S>>& l, const std::vector<RepMorphism<S>>& r,
                      const std::string& inst) -> std::optional<Counterexample> {
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i] != r[i]) return Counterexample{inst + " at " + C.label(i), morphism_str(l[i]), morphism_str(r[i])};
        return std::nullopt;
    };
    auto first = [](const std::vector<std::string>& f, const std::string& inst) -> std::optional<Counterexample> {
        if (f.empty()) return std::nullopt;
        return Counterexample{inst, f[0], "natural"};
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (p then q)
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q)
            if (G.src[q] == G.tgt[p]) pairs.emplace_back(p, q);
    std::vector<AuditReport> out;

    out.push_back(run_law("functoriality", n + pairs.size(), [&](std::uint64_t i) -> std::optional<Counterexample> {
        if (i < n) return nat_eq(A.eta[G.id(i)].comp, identity_nat(A.F[i]).comp, t.al(G.id(i)));
        auto [p, q] = pairs[i - n];
        return nat_eq(A.eta[G.comp(q, p)].comp, vertical(A.eta[q], A.eta[p]).comp, t.al(q) + "o" + t.al(p));
    }, opt));
    out.push_back(run_law("eta_naturality", N, [&](std::uint64_t p) -> std::optional<Counterexample> {
        return first(nat_failures(A.eta[p]), t.al(p));
    }, opt));
    out.push_back(run_law("Fg_functoriality", n, [&](std::uint64_t g) -> std::optional<Counterexample> {
        auto f = functor_failures(*A.F[g]);
        if (f.empty()) return std::nullopt;
        return Counterexample{t.ol(g), f[0], "functorial"};
    }, opt));
    out.push_back(run_law("phi_naturality", n * n + N * N, [&](std::uint64_t i) -> std::optional<Counterexample> {
        if (i < n * n) return first(nat_failures(A.phi[i]), "(" + t.ol(i / n) + "," + t.ol(i % n) + ")");
        std::size_t p = (i - n * n) / N, q = (i - n * n) % N;
        std::size_t g = G.src[p], h = G.src[q], g2 = G.tgt[p], h2 = G.tgt[q];
        auto lhs = vertical(A.eta[t.tensor_arr(p, q)], A.phi_at(g, h));
        auto rhs = vertical(A.phi_at(g2, h2), horizontal(A.eta[p], A.eta[q], A.FF_at(g, h), A.FF_at(g2, h2)));
        return nat_eq(lhs.comp, rhs.comp, "(" + t.al(p) + "," + t.al(q) + ")");
    }, opt));
    out.push_back(run_law("psi_naturality", 1, [&](std::uint64_t) -> std::optional<Counterexample> {
        return first(nat_failures(A.psi), "psi");
    }, opt));
    out.push_back(run_law("hexagon", n * n * n * m, [&](std::uint64_t i) -> std::optional<Counterexample> {
        auto d = decode_index(i, {n, n, n, m});
        std::size_t g = d[0], h = d[1], f = d[2], r = d[3];
        std::size_t fr = A.F[f]->obj[r];
        auto top = compose(A.eta[t.a(g, h, f)].comp[r],
                           compose(A.phi_at(t.tensor(g, h), f).comp[r], A.phi_at(g, h).comp[fr]));
        auto hf = A.FF_at(h, f)->obj[r], hfo = A.F[t.tensor(h, f)]->obj[r];
        auto bottom = compose(A.phi_at(g, t.tensor(h, f)).comp[r], (*A.F[g])(hf, hfo, A.phi_at(h, f).comp[r]));
        if (top == bottom) return std::nullopt;
        return Counterexample{"(" + t.ol(g) + "," + t.ol(h) + "," + t.ol(f) + ") at " + C.label(r), morphism_str(top),
                              morphism_str(bottom)};
    }, opt));
    out.push_back(run_law("left_unit", n * m, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t g = i / m, r = i % m;
        auto c = compose(A.eta[t.l(g)].comp[r], compose(A.phi_at(t.unit, g).comp[r], A.psi.comp[A.F[g]->obj[r]]));
        auto one = identity_morphism(C.objs[A.F[g]->obj[r]]);
        if (c == one) return std::nullopt;
        return Counterexample{t.ol(g) + " at " + C.label(r), morphism_str(c), "identity"};
    }, opt));
    out.push_back(run_law("right_unit", n * m, [&](std::uint64_t i) -> std::optional<Counterexample> {
        std::size_t g = i / m, r = i % m;
        std::size_t ir = A.F[t.unit]->obj[r];
        auto c = compose(A.eta[t.r(g)].comp[r], compose(A.phi_at(g, t.unit).comp[r], (*A.F[g])(r, ir, A.psi.comp[r])));
        auto one = identity_morphism(C.objs[A.F[g]->obj[r]]);
        if (c == one) return std::nullopt;
        return Counterexample{t.ol(g) + " at " + C.label(r), morphism_str(c), "identity"};
    }, opt));
    return out;
}

/**
 * \brief Morphism of 2-representations: a functor T between carriers and
 * Tg[g]: F2_g o T => T o F1_g.
 */
template <class S>
struct TwoRepMorphism {
    TwoRepPtr<S> src, dst;
    FunctorPtr<S> T;
    std::vector<LinearNat<S>> Tg;
};

template <class S>
TwoRepMorphism<S> identity_transformation(const TwoRepPtr<S>& A) {
    TwoRepMorphism<S> m{A, A, A->id, {}};
    for (const auto& F : A->F) m.Tg.push_back(identity_nat(compose(F, A->id)));
    return m;
}

/// Assembles Tg from component rules. Errors: BoundaryMismatch.
template <class S>
TwoRepMorphism<S> make_transformation(const TwoRepPtr<S>& A1, const TwoRepPtr<S>& A2, const FunctorPtr<S>& T,
                                      const std::function<RepMorphism<S>(std::size_t g, std::size_t i)>& comp) {
    if (A1->tg != A2->tg) fail("BoundaryMismatch", "2-representations of different 2-groups");
    if (T->src != A1->carrier || T->dst != A2->carrier) fail("BoundaryMismatch", "functor between wrong carriers");
    TwoRepMorphism<S> m{A1, A2, T, {}};
    for (std::size_t g = 0; g < A1->tg->n(); ++g) {
        LinearNat<S> n{compose(A2->F[g], T), compose(T, A1->F[g]), {}};
        for (std::size_t i = 0; i < A1->carrier->size(); ++i) n.comp.push_back(comp(g, i));
        m.Tg.push_back(std::move(n));
    }
    return m;
}

/// U o T: (U T)_g = U(T_g) o U_g T.
template <class S>
TwoRepMorphism<S> compose(const TwoRepMorphism<S>& U, const TwoRepMorphism<S>& T) {
    if (T.dst != U.src) fail("BoundaryMismatch", "transformation composition");
    auto UT = compose(U.T, T.T);
    return make_transformation<S>(T.src, U.dst, UT, [&](std::size_t g, std::size_t i) {
        std::size_t ti = T.T->obj[i];
        std::size_t a = T.src->F[g]->obj[i];
        auto u = U.Tg[g].comp[ti];
        auto tu = (*U.T)(T.Tg[g].from->obj[i], T.T->obj[a], T.Tg[g].comp[i]);
        return compose(tu, u);
    });
}

/**
 * \brief Axioms of a transformation: phi_compat, psi_compat,
 * naturality_g (in 2-group arrows), component_naturality.
 */
template <class S>
std::vector<AuditReport> transformation_audit(const TwoRepMorphism<S>& M, const AuditOptions& opt = {}) {
    const auto& A1 = *M.src;
    const auto& A2 = *M.dst;
    const auto& t = *A1.tg;
    const auto& G = *t.gpd;
    const auto& T = *M.T;
    const auto& C = *A1.carrier;
    const std::size_t n = t.n(), N = t.N(), m = C.size();
    auto cx = [&](std::string inst, std::size_t i, const RepMorphism<S>& l, const RepMorphism<S>& r) -> std::optional<Counterexample> {
        if (l == r) return std::nullopt;
        return Counterexample{std::move(inst) + " at " + C.label(i), morphism_str(l), morphism_str(r)};
    };
    std::vector<AuditReport> out;
    out.push_back(run_law("phi_compat", n * n * m, [&](std::uint64_t k) -> std::optional<Counterexample> {
        auto d = decode_index(k, {n, n, m});
        std::size_t g = d[0], h = d[1], i = d[2];
        std::size_t gh = t.tensor(g, h);
        std::size_t Ti = T.obj[i];
        auto lhs = compose(M.Tg[gh].comp[i], A2.phi_at(g, h).comp[Ti]);
        std::size_t hi = A1.F[h]->obj[i];
        // F2_g(T_h(i)): F2_g F2_h T i -> F2_g T F1_h i
        auto step1 = (*A2.F[g])(A2.F[h]->obj[Ti], T.obj[hi], M.Tg[h].comp[i]);
        auto step2 = M.Tg[g].comp[hi];
        auto step3 = T(A1.FF_at(g, h)->obj[i], A1.F[gh]->obj[i], A1.phi_at(g, h).comp[i]);
        auto rhs = compose(step3, compose(step2, step1));
        return cx("(" + t.ol(g) + "," + t.ol(h) + ")", i, lhs, rhs);
    }, opt));
    out.push_back(run_law("psi_compat", m, [&](std::uint64_t i) -> std::optional<Counterexample> {
        auto lhs = compose(M.Tg[t.unit].comp[i], A2.psi.comp[T.obj[i]]);
        auto rhs = T(i, A1.F[t.unit]->obj[i], A1.psi.comp[i]);
        return cx("unit", i, lhs, rhs);
    }, opt));
    out.push_back(run_law("naturality_g", N * m, [&](std::uint64_t k) -> std::optional<Counterexample> {
        std::size_t p = k / m, i = k % m;
        std::size_t g = G.src[p], g2 = G.tgt[p];
        auto lhs = compose(M.Tg[g2].comp[i], A2.eta[p].comp[T.obj[i]]);
        auto rhs = compose(T(A1.F[g]->obj[i], A1.F[g2]->obj[i], A1.eta[p].comp[i]), M.Tg[g].comp[i]);
        return cx(t.al(p), i, lhs, rhs);
    }, opt));
    out.push_back(run_law("component_naturality", n, [&](std::uint64_t g) -> std::optional<Counterexample> {
        auto f = nat_failures(M.Tg[g]);
        if (f.empty()) return std::nullopt;
        return Counterexample{t.ol(g), f[0], "natural"};
    }, opt));
    return out;
}

/**
 * \brief The 2-representation i(V, zeta) on C_V: the single functor
 * rho_zeta(g, h) = zeta(h) with hom spaces restricted to span zeta(H), and the
 * canonical structure. Errors: RepNotOfH.
 */
template <class S>
TwoRepPtr<S> embed_rep(const StrictTwoGroup& s, const RepPtr<S>& zeta) {
    const auto& H = *s.xm.H;
    require_rep_of(H, *zeta);
    const auto& t = *s.tg;
    std::size_t d = zeta->dim[0];
    std::vector<Matrix<S>> mat;
    for (std::size_t p = 0; p < t.N(); ++p) mat.push_back(zeta->mat[s.arrow_h(p)]);
    auto rho = rep_validate<S>(t.gpd, std::vector<std::size_t>(t.n(), d), std::move(mat), "C_" + zeta->name);
    // independent spanning set of zeta(H)
    std::vector<Matrix<S>> span;
    for (const auto& z : zeta->mat) {
        Matrix<S> T(d * d, span.size() + 1);
        for (std::size_t k = 0; k < span.size(); ++k)
            for (std::size_t e = 0; e < d * d; ++e) T(e, k) = span[k].data()[e];
        for (std::size_t e = 0; e < d * d; ++e) T(e, span.size()) = z.data()[e];
        if (rank(T) == span.size() + 1) span.push_back(z);
    }
    auto carrier = linear_category<S>({rho}, span);
    auto A = std::const_pointer_cast<TwoRepresentation<S>>(canonical_2rep<S>(s.tg, carrier));
    A->zeta = zeta;
    return A;
}

/**
 * \brief i(omega) = (F_{omega*}, identity): F_{omega*} sends the unique
 * object to the unique object and a component sum c_h zeta0(h) to
 * sum c_h zeta1(h). Errors: NotIntertwiner(h), FunctorNotWellDefined.
 */
template <class S>
TwoRepMorphism<S> embed_rep_morphism(const TwoRepPtr<S>& A0, const TwoRepPtr<S>& A1, const Matrix<S>& omega) {
    if (!A0->zeta || !A1->zeta) fail("NotActionGroupoid", "not in the image of embed_rep");
    const auto& z0 = *A0->zeta;
    const auto& z1 = *A1->zeta;
    const auto& B = *z0.gpd;
    if (omega.rows() != z1.dim[0] || omega.cols() != z0.dim[0]) fail("DimMismatch", "intertwiner shape");
    for (std::size_t h = 0; h < B.num_arrows(); ++h)
        if (omega * z0.mat[h] != z1.mat[h] * omega) fail("NotIntertwiner", B.arr_labels[h]);
    const std::size_t d0 = z0.dim[0], d1 = z1.dim[0], nh = B.num_arrows();
    Matrix<S> Z0(d0 * d0, nh), Z1(d1 * d1, nh);
    for (std::size_t h = 0; h < nh; ++h) {
        for (std::size_t e = 0; e < d0 * d0; ++e) Z0(e, h) = z0.mat[h].data()[e];
        for (std::size_t e = 0; e < d1 * d1; ++e) Z1(e, h) = z1.mat[h].data()[e];
    }
    for (const auto& v : nullspace(Z0).basis) {
        for (std::size_t e = 0; e < d1 * d1; ++e) {
            S acc(0);
            for (std::size_t h = 0; h < nh; ++h) acc += Z1(e, h) * v[h];
            if (acc != 0) fail("FunctorNotWellDefined", "linear relation among zeta0(H) not respected by zeta1");
        }
    }
    auto T = make_functor<S>(A0->carrier, A1->carrier, {0}, [&](std::size_t, std::size_t, const RepMorphism<S>& f) {
        RepMorphism<S> m;
        for (const auto& c : f.comp) {
            auto coef = solve(Z0, c.data());
            std::vector<S> out(d1 * d1, S(0));
            for (std::size_t e = 0; e < d1 * d1; ++e)
                for (std::size_t h = 0; h < nh; ++h)
                    if ((*coef)[h] != 0) out[e] += Z1(e, h) * (*coef)[h];
            m.comp.emplace_back(d1, d1, std::move(out));
        }
        return m;
    });
    return make_transformation<S>(A0, A1, T, [&](std::size_t, std::size_t) { return identity_morphism(A1->carrier->objs[0]); });
}

/**
 * \brief alpha* A: F'_g = F_{alpha^-1 g}, eta'_p = eta_{alpha^-1 p},
 * phi'_{g,h} = phi_{alpha^-1 g, alpha^-1 h}, psi' = psi.
 * Errors: NotAutomorphism.
 */
template <class S>
TwoRepPtr<S> adjoint_pullback(const TwoGroupAutomorphism& alpha, const TwoRepPtr<S>& A) {
    if (alpha.tg != A->tg) fail("NotAutomorphism", "automorphism of a different 2-group");
    automorphism_validate(alpha);
    auto inv = inverse(alpha);
    const std::size_t n = A->tg->n();
    auto B = std::make_shared<TwoRepresentation<S>>(*A);
    for (std::size_t g = 0; g < n; ++g) B->F[g] = A->F[inv.obj[g]];
    for (std::size_t p = 0; p < A->tg->N(); ++p) B->eta[p] = A->eta[inv.arr[p]];
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            B->FF[g * n + h] = A->FF_at(inv.obj[g], inv.obj[h]);
            B->phi[g * n + h] = A->phi_at(inv.obj[g], inv.obj[h]);
        }
    return B;
}

/**
 * \brief For alpha inner by k, the transformation A -> alpha* A with identity
 * functor and T_g = eta_{theta(alpha^-1 g)}, theta the conjugation arrows; and
 * its inverse built from the inverse arrows.
 */
template <class S>
std::pair<TwoRepMorphism<S>, TwoRepMorphism<S>> fixed_point_morphism(const StrictTwoGroup& s, std::size_t k,
                                                                     const TwoRepPtr<S>& A, const TwoRepPtr<S>& B) {
    auto alpha = inner_automorphism(s, k);
    auto inv = inverse(alpha);
    const auto& G = *s.tg->gpd;
    auto there = make_transformation<S>(A, B, A->id, [&](std::size_t g, std::size_t i) {
        return A->eta[conjugation_arrow(s, k, inv.obj[g])].comp[i];
    });
    auto back = make_transformation<S>(B, A, A->id, [&](std::size_t g, std::size_t i) {
        return A->eta[G.inv(conjugation_arrow(s, k, inv.obj[g]))].comp[i];
    });
    return {there, back};
}

/// Componentwise equality of two transformations.
template <class S>
bool same_transformation(const TwoRepMorphism<S>& a, const TwoRepMorphism<S>& b) {
    if (!(*a.T == *b.T) || a.Tg.size() != b.Tg.size()) return false;
    for (std::size_t g = 0; g < a.Tg.size(); ++g)
        if (!(a.Tg[g] == b.Tg[g])) return false;
    return true;
}

/// Componentwise equality of 2-representations on the same carrier.
template <class S>
bool same_two_rep(const TwoRepresentation<S>& a, const TwoRepresentation<S>& b) {
    if (a.tg != b.tg || a.carrier != b.carrier) return false;
    for (std::size_t g = 0; g < a.F.size(); ++g)
        if (!(*a.F[g] == *b.F[g])) return false;
    for (std::size_t p = 0; p < a.eta.size(); ++p)
        if (!(a.eta[p] == b.eta[p])) return false;
    for (std::size_t i = 0; i < a.phi.size(); ++i)
        if (!(a.phi[i] == b.phi[i])) return false;
    return a.psi == b.psi;
}

}  // namespace cohere
