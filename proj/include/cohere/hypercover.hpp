#pragma once

#include "cohere/groupoid.hpp"
#include "cohere/linear_category.hpp"

#include <map>
#include <string>
#include <vector>

namespace cohere {

/// Verdict for one level of the comparison map into the matching object.
struct LevelVerdict {
    std::size_t level = 0;
    std::size_t source_size = 0, matching_size = 0;
    bool surjective = false, injective = false;
    bool required_iso = false;
    bool ok = false;
    std::string witness;
};

/// Levels 0..3 of the nerve map of a groupoid functor psi: Gamma -> X.
struct HypercoverWitness {
    std::size_t n = 1;
    std::vector<LevelVerdict> levels;

    bool is_hypercover() const {
        for (const auto& l : levels)
            if (!l.ok) return false;
        return true;
    }
};

namespace detail {

using Simplex = std::vector<std::size_t>;  // edge list in Gamma

inline std::string simplex_str(const FiniteGroupoid& G, const Simplex& s) {
    std::string out = "(";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + G.arr_labels[s[k]];
    return out + ")";
}

inline std::vector<std::size_t> hom(const FiniteGroupoid& G, std::size_t x, std::size_t y) {
    std::vector<std::size_t> h;
    for (std::size_t a = 0; a < G.num_arrows(); ++a)
        if (G.src[a] == x && G.tgt[a] == y) h.push_back(a);
    return h;
}

}  // namespace detail

/**
 * \brief Materializes Gamma_k -> M_k for k <= 3, where Gamma_k are
 * composable k-strings and M_k the matching object: level 1 is
 * Gamma_0 x Gamma_0 x_{X_0 x X_0} X_1, level 2 Gamma-triangles with commuting
 * image, level 3 tetrahedra of Gamma-triangles. Levels below n must be
 * surjective, levels from n on bijective.
 */
inline HypercoverWitness hypercover_levels(const GroupoidFunctor& psi, std::size_t n = 1) {
    functor_validate(psi);
    const auto& G = *psi.src;
    const auto& X = *psi.dst;
    HypercoverWitness w;
    w.n = n;

    auto finish = [&](std::size_t k, std::size_t src_size, const std::map<std::vector<std::size_t>, std::size_t>& hits,
                      const std::vector<std::vector<std::size_t>>& targets, const std::function<std::string(const std::vector<std::size_t>&)>& show,
                      const std::string& collision) {
        LevelVerdict v;
        v.level = k;
        v.source_size = src_size;
        v.matching_size = targets.size();
        v.required_iso = k >= n;
        v.injective = collision.empty();
        v.surjective = true;
        for (const auto& t : targets)
            if (!hits.count(t)) {
                v.surjective = false;
                v.witness = "missing " + show(t);
                break;
            }
        if (v.witness.empty() && !v.injective) v.witness = "collision " + collision;
        v.ok = v.surjective && (!v.required_iso || v.injective);
        if (v.ok) v.witness.clear();
        w.levels.push_back(v);
    };

    {  // level 0
        std::map<std::vector<std::size_t>, std::size_t> hits;
        std::string coll;
        for (std::size_t y = 0; y < G.num_objects(); ++y)
            if (hits[{psi.obj[y]}]++ && coll.empty()) coll = X.obj_labels[psi.obj[y]];
        std::vector<std::vector<std::size_t>> targets;
        for (std::size_t x = 0; x < X.num_objects(); ++x) targets.push_back({x});
        finish(0, G.num_objects(), hits, targets, [&](const auto& t) { return X.obj_labels[t[0]]; }, coll);
    }
    {  // level 1: (y, y', f)
        std::map<std::vector<std::size_t>, std::size_t> hits;
        std::string coll;
        for (std::size_t a = 0; a < G.num_arrows(); ++a)
            if (hits[{G.src[a], G.tgt[a], psi.arr[a]}]++ && coll.empty()) coll = G.arr_labels[a];
        std::vector<std::vector<std::size_t>> targets;
        for (std::size_t y = 0; y < G.num_objects(); ++y)
            for (std::size_t z = 0; z < G.num_objects(); ++z)
                for (auto f : detail::hom(X, psi.obj[y], psi.obj[z])) targets.push_back({y, z, f});
        finish(1, G.num_arrows(), hits, targets,
               [&](const auto& t) { return "(" + G.obj_labels[t[0]] + "," + G.obj_labels[t[1]] + "," + X.arr_labels[t[2]] + ")"; }, coll);
    }
    {  // level 2: (e01, e12, e02)
        std::map<std::vector<std::size_t>, std::size_t> hits;
        std::size_t count = 0;
        std::string coll;
        for (std::size_t a = 0; a < G.num_arrows(); ++a)
            for (std::size_t b = 0; b < G.num_arrows(); ++b) {
                if (G.src[b] != G.tgt[a]) continue;
                ++count;
                detail::Simplex s{a, b, G.comp(b, a)};
                if (hits[s]++ && coll.empty()) coll = detail::simplex_str(G, s);
            }
        std::vector<std::vector<std::size_t>> targets;
        for (std::size_t a = 0; a < G.num_arrows(); ++a)
            for (std::size_t b = 0; b < G.num_arrows(); ++b) {
                if (G.src[b] != G.tgt[a]) continue;
                for (auto c : detail::hom(G, G.src[a], G.tgt[b]))
                    if (psi.arr[c] == X.comp(psi.arr[b], psi.arr[a])) targets.push_back({a, b, c});
            }
        finish(2, count, hits, targets, [&](const auto& t) { return detail::simplex_str(G, t); }, coll);
    }
    {  // level 3: (e01, e12, e23, e02, e13, e03), all four faces Gamma-triangles
        std::map<std::vector<std::size_t>, std::size_t> hits;
        std::size_t count = 0;
        std::string coll;
        std::vector<std::vector<std::size_t>> targets;
        for (std::size_t a = 0; a < G.num_arrows(); ++a)
            for (std::size_t b = 0; b < G.num_arrows(); ++b) {
                if (G.src[b] != G.tgt[a]) continue;
                for (std::size_t c = 0; c < G.num_arrows(); ++c) {
                    if (G.src[c] != G.tgt[b]) continue;
                    ++count;
                    detail::Simplex s{a, b, c, G.comp(b, a), G.comp(c, b), G.comp(c, G.comp(b, a))};
                    if (hits[s]++ && coll.empty()) coll = detail::simplex_str(G, s);
                    for (auto e02 : detail::hom(G, G.src[a], G.tgt[b])) {
                        if (e02 != G.comp(b, a)) continue;
                        for (auto e13 : detail::hom(G, G.src[b], G.tgt[c])) {
                            if (e13 != G.comp(c, b)) continue;
                            for (auto e03 : detail::hom(G, G.src[a], G.tgt[c]))
                                if (e03 == G.comp(c, e02) && e03 == G.comp(e13, a)) targets.push_back({a, b, c, e02, e13, e03});
                        }
                    }
                }
            }
        finish(3, count, hits, targets, [&](const auto& t) { return detail::simplex_str(G, t); }, coll);
    }
    return w;
}

/// Errors: LevelFail(k, witness).
inline HypercoverWitness hypercover_check(const GroupoidFunctor& psi, std::size_t n = 1) {
    auto w = hypercover_levels(psi, n);
    for (const auto& l : w.levels)
        if (!l.ok) fail("LevelFail", std::to_string(l.level) + ": " + l.witness);
    return w;
}

/// Dimensions and rank of the pullback of 2-morphisms along a hypercover.
struct PrestackVerdict {
    std::size_t down_dim = 0, up_dim = 0, rank = 0;
    bool injective() const { return rank == down_dim; }
    bool surjective() const { return rank == up_dim; }
};

/**
 * \brief Two 1-morphisms f, f' between trivial bundles over X (one functor
 * per object, constant along arrows); 2-morphisms are families of natural
 * transformations constant along arrows. Compares them with their pullbacks
 * along psi by exact linear algebra. Errors: ValidationError.
 */
template <class S>
PrestackVerdict prestack_check(const GroupoidFunctor& psi, const std::vector<FunctorPtr<S>>& f,
                               const std::vector<FunctorPtr<S>>& fp) {
    const auto& G = *psi.src;
    const auto& X = *psi.dst;
    if (f.size() != X.num_objects() || fp.size() != X.num_objects()) fail("ValidationError", "1-morphism tables not total");
    for (std::size_t a = 0; a < X.num_arrows(); ++a)
        if (!(*f[X.src[a]] == *f[X.tgt[a]]) || !(*fp[X.src[a]] == *fp[X.tgt[a]]))
            fail("ValidationError", "1-morphism not constant along " + X.arr_labels[a]);

    std::vector<std::vector<std::vector<S>>> nat(X.num_objects());
    for (std::size_t x = 0; x < X.num_objects(); ++x) nat[x] = nat_space(f[x], fp[x]);
    // a 2-morphism over a groupoid with objects objs over points pt: one Nat basis coefficient block per object
    auto families = [&](const FiniteGroupoid& B, const std::vector<std::size_t>& pt) {
        std::vector<std::size_t> off(B.num_objects() + 1, 0);
        for (std::size_t y = 0; y < B.num_objects(); ++y) off[y + 1] = off[y] + nat[pt[y]].size();
        std::vector<std::vector<S>> rows;
        for (std::size_t a = 0; a < B.num_arrows(); ++a) {
            std::size_t s = B.src[a], t = B.tgt[a];
            if (s == t) continue;
            for (std::size_t k = 0; k < nat[pt[s]].size(); ++k) {
                std::vector<S> r(off.back(), S(0));
                r[off[s] + k] = 1;
                r[off[t] + k] -= 1;
                rows.push_back(std::move(r));
            }
        }
        Matrix<S> m(rows.size(), off.back());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < off.back(); ++c) m(r, c) = rows[r][c];
        return std::make_pair(nullspace(m).basis, off);
    };
    std::vector<std::size_t> xid;
    for (std::size_t x = 0; x < X.num_objects(); ++x) xid.push_back(x);
    auto [down, doff] = families(X, xid);
    auto [up, uoff] = families(G, psi.obj);

    PrestackVerdict v;
    v.down_dim = down.size();
    v.up_dim = up.size();
    Matrix<S> pulled(uoff.back(), down.size());
    for (std::size_t k = 0; k < down.size(); ++k)
        for (std::size_t y = 0; y < G.num_objects(); ++y) {
            std::size_t x = psi.obj[y];
            for (std::size_t c = 0; c < nat[x].size(); ++c) pulled(uoff[y] + c, k) = down[k][doff[x] + c];
        }
    v.rank = down.empty() ? 0 : rank(pulled);
    return v;
}

}  // namespace cohere
