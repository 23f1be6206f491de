#pragma once

#include "cohere/linrep.hpp"
#include "cohere/scalar.hpp"
#include "cohere/standard.hpp"
#include "cohere/two_rep.hpp"

#include <string>
#include <vector>

namespace cohere {

/// Doubled (Z/3 -> 1, Z/2 inversion): image objects reached along (x, 1), copies along (x, 2).
inline Doubling doubled_z3_inversion() {
    auto s = strict_two_group(xm_z3_inversion());
    std::vector<std::size_t> img, cp;
    for (std::size_t x = 0; x < s.tg->n(); ++x) {
        img.push_back(s.arrow(x, 1));
        cp.push_back(s.arrow(x, 2));
    }
    return double_two_group(*s.tg, img, cp);
}

/// trivial, sign and the 2-dim standard rep of symmetric_group(3) on its delooping.
template <class S>
std::vector<RepPtr<S>> s3_reps(const GroupoidPtr& bh) {
    const auto& labels = bh->arr_labels;
    std::vector<Matrix<S>> sign, stdm;
    for (const auto& l : labels) {
        sign.push_back(Matrix<S>::scalar(1, S(permutation_sign(l))));
        // permutation action e_i -> e_{l[i]} on the sum-zero plane, basis e0-e1, e1-e2
        auto image = [&](std::size_t i, std::size_t j) {
            std::vector<S> v(3, S(0));
            v[static_cast<std::size_t>(l[i] - '0')] += 1;
            v[static_cast<std::size_t>(l[j] - '0')] -= 1;
            return std::vector<S>{v[0], -v[2]};
        };
        auto c0 = image(0, 1), c1 = image(1, 2);
        stdm.push_back(Matrix<S>(2, 2, {c0[0], c1[0], c0[1], c1[1]}));
    }
    return {trivial_rep<S>(bh, 1, "trivial"), group_rep<S>(bh, 1, sign, "sign"), group_rep<S>(bh, 2, stdm, "standard")};
}

/// The nine characters of the underlying groupoid of strict (Z/3 -> 1, Z/2): omega^(c_g h) on (g, h).
inline std::vector<RepPtr<QOmega>> z3_characters(const StrictTwoGroup& s) {
    const auto& G = *s.tg->gpd;
    std::vector<RepPtr<QOmega>> out;
    std::vector<QOmega> w{QOmega(1), QOmega::theta(), QOmega::theta() * QOmega::theta()};
    for (std::size_t c0 = 0; c0 < 3; ++c0)
        for (std::size_t c1 = 0; c1 < 3; ++c1) {
            std::vector<Matrix<QOmega>> mat;
            for (std::size_t p = 0; p < G.num_arrows(); ++p) {
                std::size_t c = s.arrow_g(p) == 0 ? c0 : c1;
                mat.push_back(Matrix<QOmega>::scalar(1, w[(c * s.arrow_h(p)) % 3]));
            }
            out.push_back(rep_validate<QOmega>(s.tg->gpd, {1, 1}, std::move(mat),
                                               "chi" + std::to_string(c0) + std::to_string(c1)));
        }
    return out;
}

/// rho o xi for a groupoid functor xi into the groupoid of rho.
template <class S>
RepPtr<S> pullback_rep(const GroupoidFunctor& xi, const GroupoidRep<S>& rho) {
    std::vector<std::size_t> dim;
    std::vector<Matrix<S>> mat;
    for (auto o : xi.obj) dim.push_back(rho.dim[o]);
    for (auto a : xi.arr) mat.push_back(rho.mat[a]);
    return rep_validate<S>(xi.src, std::move(dim), std::move(mat), rho.name);
}

/// canonical_2rep on the doubled (Z/3 -> 1, Z/2 inversion) with the orbit of the pulled back characters.
inline std::pair<Doubling, TwoRepPtr<QOmega>> transferred_z3_2rep() {
    auto d = doubled_z3_inversion();
    auto s = strict_two_group(xm_z3_inversion());
    std::vector<RepPtr<QOmega>> seed;
    for (const auto& c : z3_characters(s)) seed.push_back(pullback_rep(d.qi.xi, *c));
    auto A = canonical_2rep<QOmega>(d.tg, orbit_closure(*d.tg, seed));
    return {d, A};
}

}  // namespace cohere
