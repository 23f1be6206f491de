#include "cohere/group.hpp"

#include <gtest/gtest.h>

using namespace cohere;

namespace {

std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

}  // namespace

TEST(Group, Z2Xor) {
    auto g = group_validate({"0", "1"}, {0, 1, 1, 0});
    EXPECT_EQ(g->order(), 2u);
    EXPECT_EQ(g->id, 0u);
    EXPECT_EQ(g->inv(1), 1u);
}

TEST(Group, Z3InverseOfOne) {
    auto g = cyclic_group(3);
    EXPECT_EQ(g->label(g->inv(g->index("1"))), "2");
}

TEST(Group, NonAssociativeMagmaRejected) {
    // Search all 3-element tables with a two-sided unit 0 for one failing
    // associativity, then check the validator names exactly such a triple.
    std::vector<std::size_t> found;
    std::size_t free[4];
    for (std::size_t code = 0; code < 81 && found.empty(); ++code) {
        std::size_t c = code;
        for (auto& f : free) f = c % 3, c /= 3;
        std::vector<std::size_t> t = {0, 1, 2, 1, free[0], free[1], 2, free[2], free[3]};
        auto m = [&](std::size_t a, std::size_t b) { return t[a * 3 + b]; };
        for (std::size_t a = 0; a < 3 && found.empty(); ++a)
            for (std::size_t b = 0; b < 3 && found.empty(); ++b)
                for (std::size_t d = 0; d < 3 && found.empty(); ++d)
                    if (m(a, m(b, d)) != m(m(a, b), d)) found = t;
    }
    ASSERT_FALSE(found.empty());
    try {
        group_validate({"0", "1", "2"}, found);
        FAIL() << "expected NonAssociative";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NonAssociative");
        std::size_t a = e.witness()[0] - '0', b = e.witness()[2] - '0', d = e.witness()[4] - '0';
        auto m = [&](std::size_t x, std::size_t y) { return found[x * 3 + y]; };
        EXPECT_NE(m(a, m(b, d)), m(m(a, b), d));
    }
}

TEST(Group, NoIdentityAndNoInverse) {
    EXPECT_EQ(error_kind([] { group_validate({"a", "b"}, {1, 1, 1, 1}); }), "NoIdentity");
    // {e, z} with z*z = z: associative monoid, z has no inverse
    EXPECT_EQ(error_kind([] { group_validate({"e", "z"}, {0, 1, 1, 1}); }), "NoInverse");
}

TEST(Group, OrderCap) {
    EXPECT_EQ(error_kind([] { group_validate({"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1}, std::nullopt, 2); }),
              "ValidationError");
}

TEST(Group, SymmetricGroupMatchesPermutationComposition) {
    auto s = symmetric_group(3);
    ASSERT_EQ(s->order(), 6u);
    EXPECT_EQ(s->label(s->id), "012");
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            const auto& la = s->label(a);
            const auto& lb = s->label(b);
            std::string c(3, ' ');
            for (int i = 0; i < 3; ++i) c[i] = la[lb[i] - '0'];
            EXPECT_EQ(s->label(s->mul(a, b)), c);
        }
    int odd = 0;
    for (std::size_t a = 0; a < 6; ++a) odd += permutation_sign(s->label(a)) < 0;
    EXPECT_EQ(odd, 3);
}

TEST(RightAction, InversionOnZ3) {
    auto G = cyclic_group(2), H = cyclic_group(3);
    std::vector<std::size_t> t = {0, 1, 2, 0, 2, 1};
    auto a = right_action_validate(G, H, t);
    EXPECT_EQ(a(1, 1), 2u);
}

TEST(RightAction, TrivialActionValid) {
    auto G = symmetric_group(3), H = cyclic_group(4);
    auto t = trivial_action(G, H);
    EXPECT_NO_THROW(right_action_validate(G, H, t.table));
}

TEST(RightAction, ShiftIsNotAutomorphism) {
    auto G = cyclic_group(2), H = cyclic_group(4);
    std::vector<std::size_t> t = {0, 1, 2, 3, 1, 2, 3, 0};
    try {
        right_action_validate(G, H, t);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotAutomorphism");
        EXPECT_EQ(e.witness(), "1");
    }
}

TEST(RightAction, IdentityMustActTrivially) {
    auto G = cyclic_group(2), H = cyclic_group(3);
    std::vector<std::size_t> t = {0, 2, 1, 0, 2, 1};
    EXPECT_EQ(error_kind([&] { right_action_validate(G, H, t); }), "IdentityNotFixed");
}

TEST(RightAction, LeftConjugationIsNotContravariant) {
    // g: h -> g h g^-1 is a left action; on S3 it violates the right-action law.
    auto S = symmetric_group(3);
    std::vector<std::size_t> t(36);
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) t[g * 6 + h] = S->mul(S->mul(g, h), S->inv(g));
    EXPECT_EQ(error_kind([&] { right_action_validate(S, S, t); }), "NotContravariant");
    EXPECT_NO_THROW(conjugation_action(S));
}

TEST(RightAction, AcceptsExactlyTheAntiHomomorphisms) {
    // Brute force over all maps Z/2 -> End(Z/3) given by multiplication by k.
    auto G = cyclic_group(2), H = cyclic_group(3);
    for (std::size_t k0 = 0; k0 < 3; ++k0)
        for (std::size_t k1 = 0; k1 < 3; ++k1) {
            std::vector<std::size_t> t(6);
            for (std::size_t h = 0; h < 3; ++h) t[h] = (k0 * h) % 3, t[3 + h] = (k1 * h) % 3;
            bool expect = k0 == 1 && k1 != 0 && (k1 * k1) % 3 == 1;
            EXPECT_EQ(error_kind([&] { right_action_validate(G, H, t); }).empty(), expect) << k0 << k1;
        }
}

TEST(GroupHom, ValidatesMultiplicativity) {
    auto Z4 = cyclic_group(4), Z2 = cyclic_group(2);
    EXPECT_NO_THROW(hom_validate(Z4, Z2, {0, 1, 0, 1}));
    EXPECT_EQ(error_kind([&] { hom_validate(Z4, Z2, {0, 1, 1, 1}); }), "HomomorphismInvalid");
}

TEST(LeftAction, TranslationAndInvalid) {
    auto Z2 = cyclic_group(2);
    EXPECT_NO_THROW(translation_action(identity_hom(Z2)));
    EXPECT_EQ(error_kind([&] { left_action_validate(Z2, {"a", "b"}, {1, 0, 1, 0}); }), "ActionInvalid");
}
