#pragma once

#include "cohere/two_group.hpp"

namespace cohere {

/// Z/3 -> 1 with Z/2 acting on Z/3 by inversion.
inline CrossedModule xm_z3_inversion() {
    auto H = cyclic_group(3), G = cyclic_group(2);
    std::vector<std::size_t> act(6);
    for (std::size_t g = 0; g < 2; ++g)
        for (std::size_t h = 0; h < 3; ++h) act[g * 3 + h] = g ? (3 - h) % 3 : h;
    return crossed_module_validate(H, G, trivial_hom(H, G), right_action_validate(G, H, act));
}

/// id: Z/n -> Z/n with the trivial action.
inline CrossedModule xm_identity_cyclic(std::size_t n) {
    auto Z = cyclic_group(n);
    return crossed_module_validate(Z, Z, identity_hom(Z), trivial_action(Z, Z));
}

/// id: S3 -> S3 with alpha(g)h = g^-1 h g.
inline CrossedModule xm_inner_s3() {
    auto S = symmetric_group(3);
    return crossed_module_validate(S, S, identity_hom(S), conjugation_action(S));
}

/// H -> 1 with the trivial action (H abelian).
inline CrossedModule xm_abelian_to_trivial(std::size_t n) {
    auto H = cyclic_group(n), G = trivial_group();
    return crossed_module_validate(H, G, trivial_hom(H, G), trivial_action(G, H));
}

/// 1 -> G: the discrete 2-group of a group.
inline CrossedModule xm_discrete(const GroupPtr& G) {
    auto H = trivial_group();
    return crossed_module_validate(H, G, trivial_hom(H, G), trivial_action(G, H));
}

/// Z/2 -> Z/2 trivial boundary, trivial action (the 2-group of the embedding example).
inline CrossedModule xm_z2_trivial_on_z2() {
    auto H = cyclic_group(2), G = cyclic_group(2);
    return crossed_module_validate(H, G, trivial_hom(H, G), trivial_action(G, H));
}

}  // namespace cohere
