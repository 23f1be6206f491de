#pragma once

#include "cohere/error.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

/// Default cap on group order; validation rejects larger tables.
inline constexpr std::size_t kMaxGroupOrder = 256;

/**
 * \brief A finite group given by its multiplication table.
 *
 * Elements are indices 0..n-1 in input order, each with an opaque label.
 */
struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::size_t> table;  // table[x*n + y] = x*y
    std::size_t id = 0;
    std::vector<std::size_t> inverses;

    std::size_t order() const { return labels.size(); }
    std::size_t mul(std::size_t x, std::size_t y) const { return table[x * order() + y]; }
    std::size_t inv(std::size_t x) const { return inverses[x]; }
    const std::string& label(std::size_t x) const { return labels[x]; }
    std::optional<std::size_t> find(const std::string& l) const {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels.begin());
    }
    std::size_t index(const std::string& l) const {
        auto i = find(l);
        if (!i) fail("UnresolvedReference", "group element '" + l + "'");
        return *i;
    }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * \brief Validates a multiplication table.
 *
 * Identity is located when not given. Errors: NonAssociative, NoIdentity,
 * NoInverse.
 */
inline GroupPtr group_validate(std::vector<std::string> labels, std::vector<std::size_t> table,
                               std::optional<std::string> id_label = std::nullopt,
                               std::size_t max_order = kMaxGroupOrder) {
    const std::size_t n = labels.size();
    if (n == 0) fail("NoIdentity", "empty element set");
    if (n > max_order) fail("ValidationError", "group order " + std::to_string(n) + " exceeds cap");
    if (table.size() != n * n) fail("ValidationError", "multiplication table is not total");
    for (auto v : table)
        if (v >= n) fail("ValidationError", "table entry out of range");
    auto m = [&](std::size_t x, std::size_t y) { return table[x * n + y]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (m(a, m(b, c)) != m(m(a, b), c))
                    fail("NonAssociative", labels[a] + "," + labels[b] + "," + labels[c]);
    auto is_unit = [&](std::size_t e) {
        for (std::size_t x = 0; x < n; ++x)
            if (m(e, x) != x || m(x, e) != x) return false;
        return true;
    };
    std::size_t e = n;
    if (id_label) {
        auto it = std::find(labels.begin(), labels.end(), *id_label);
        if (it == labels.end() || !is_unit(static_cast<std::size_t>(it - labels.begin())))
            fail("NoIdentity", *id_label);
        e = static_cast<std::size_t>(it - labels.begin());
    } else {
        for (std::size_t x = 0; x < n && e == n; ++x)
            if (is_unit(x)) e = x;
        if (e == n) fail("NoIdentity", "no two-sided unit");
    }
    std::vector<std::size_t> inv(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y)
            if (m(x, y) == e && m(y, x) == e) {
                inv[x] = y;
                break;
            }
        if (inv[x] == n) fail("NoInverse", labels[x]);
    }
    auto g = std::make_shared<FiniteGroup>();
    g->labels = std::move(labels);
    g->table = std::move(table);
    g->id = e;
    g->inverses = std::move(inv);
    return g;
}

/// Z/n with labels "0".."n-1".
inline GroupPtr cyclic_group(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::size_t> t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
    }
    return group_validate(std::move(labels), std::move(t));
}

inline GroupPtr trivial_group() { return cyclic_group(1); }

/**
 * \brief Symmetric group on {0..k-1}; elements labelled by one-line notation.
 *
 * Product x*y is the composite "apply y, then x". Elements are listed in
 * lexicographic order, so the identity comes first.
 */
inline GroupPtr symmetric_group(std::size_t k) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();
    std::vector<std::string> labels;
    for (const auto& q : perms) {
        std::string s;
        for (auto v : q) s += std::to_string(v);
        labels.push_back(s);
    }
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(k);
            for (std::size_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a * n + b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return group_validate(std::move(labels), std::move(t));
}

/// Sign of an element of symmetric_group(k), read from its label.
inline int permutation_sign(const std::string& label) {
    int s = 1;
    for (std::size_t i = 0; i < label.size(); ++i)
        for (std::size_t j = i + 1; j < label.size(); ++j)
            if (label[i] > label[j]) s = -s;
    return s;
}

struct GroupHom {
    GroupPtr src, dst;
    std::vector<std::size_t> map;

    std::size_t operator()(std::size_t x) const { return map[x]; }
};

/// Errors: HomomorphismInvalid(x,y).
inline GroupHom hom_validate(GroupPtr src, GroupPtr dst, std::vector<std::size_t> map) {
    if (map.size() != src->order()) fail("HomomorphismInvalid", "map is not total");
    for (auto v : map)
        if (v >= dst->order()) fail("HomomorphismInvalid", "image out of range");
    if (map[src->id] != dst->id) fail("HomomorphismInvalid", "identity not preserved");
    for (std::size_t x = 0; x < src->order(); ++x)
        for (std::size_t y = 0; y < src->order(); ++y)
            if (map[src->mul(x, y)] != dst->mul(map[x], map[y]))
                fail("HomomorphismInvalid", src->label(x) + "," + src->label(y));
    return {std::move(src), std::move(dst), std::move(map)};
}

inline GroupHom identity_hom(const GroupPtr& g) {
    std::vector<std::size_t> m(g->order());
    std::iota(m.begin(), m.end(), 0);
    return {g, g, std::move(m)};
}

inline GroupHom trivial_hom(const GroupPtr& src, const GroupPtr& dst) {
    return {src, dst, std::vector<std::size_t>(src->order(), dst->id)};
}

/**
 * \brief Right action of G on the group H: act(g, h) = alpha(g)(h).
 *
 * Contravariance: act(g2, act(g1, h)) = act(g1 g2, h).
 */
struct RightAction {
    GroupPtr actor, target;
    std::vector<std::size_t> table;  // table[g*|H| + h]

    std::size_t operator()(std::size_t g, std::size_t h) const { return table[g * target->order() + h]; }
};

/// Errors: NotAutomorphism(g), IdentityNotFixed(h), NotContravariant(g1,g2,h).
inline RightAction right_action_validate(GroupPtr actor, GroupPtr target, std::vector<std::size_t> table) {
    const std::size_t ng = actor->order(), nh = target->order();
    if (table.size() != ng * nh) fail("ValidationError", "action table is not total");
    for (auto v : table)
        if (v >= nh) fail("ValidationError", "action value out of range");
    auto act = [&](std::size_t g, std::size_t h) { return table[g * nh + h]; };
    for (std::size_t g = 0; g < ng; ++g) {
        std::vector<bool> hit(nh, false);
        for (std::size_t h = 0; h < nh; ++h) hit[act(g, h)] = true;
        bool ok = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
        for (std::size_t x = 0; ok && x < nh; ++x)
            for (std::size_t y = 0; ok && y < nh; ++y)
                if (act(g, target->mul(x, y)) != target->mul(act(g, x), act(g, y))) ok = false;
        if (!ok) fail("NotAutomorphism", actor->label(g));
    }
    for (std::size_t h = 0; h < nh; ++h)
        if (act(actor->id, h) != h) fail("IdentityNotFixed", target->label(h));
    for (std::size_t g1 = 0; g1 < ng; ++g1)
        for (std::size_t g2 = 0; g2 < ng; ++g2)
            for (std::size_t h = 0; h < nh; ++h)
                if (act(g2, act(g1, h)) != act(actor->mul(g1, g2), h))
                    fail("NotContravariant", actor->label(g1) + "," + actor->label(g2) + "," + target->label(h));
    return {std::move(actor), std::move(target), std::move(table)};
}

inline RightAction trivial_action(const GroupPtr& g, const GroupPtr& h) {
    std::vector<std::size_t> t(g->order() * h->order());
    for (std::size_t a = 0; a < g->order(); ++a)
        for (std::size_t b = 0; b < h->order(); ++b) t[a * h->order() + b] = b;
    return {g, h, std::move(t)};
}

/// G acting on itself by g: h -> g^-1 h g.
inline RightAction conjugation_action(const GroupPtr& g) {
    const std::size_t n = g->order();
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = g->mul(g->mul(g->inv(a), b), a);
    return right_action_validate(g, g, std::move(t));
}

/**
 * \brief Left action of a group on a finite set, act(h, x) = h.x.
 */
struct LeftAction {
    GroupPtr actor;
    std::vector<std::string> set;
    std::vector<std::size_t> table;  // table[h*|set| + x]

    std::size_t operator()(std::size_t h, std::size_t x) const { return table[h * set.size() + x]; }
};

/// Errors: ActionInvalid.
inline LeftAction left_action_validate(GroupPtr actor, std::vector<std::string> set, std::vector<std::size_t> table) {
    const std::size_t n = set.size(), k = actor->order();
    if (table.size() != k * n) fail("ActionInvalid", "action table is not total");
    for (auto v : table)
        if (v >= n) fail("ActionInvalid", "value out of range");
    for (std::size_t x = 0; x < n; ++x)
        if (table[actor->id * n + x] != x) fail("ActionInvalid", "identity moves " + set[x]);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t x = 0; x < n; ++x)
                if (table[actor->mul(a, b) * n + x] != table[a * n + table[b * n + x]])
                    fail("ActionInvalid", actor->label(a) + "," + actor->label(b) + "," + set[x]);
    return {std::move(actor), std::move(set), std::move(table)};
}

/// H acting on the elements of G through a homomorphism d: H -> G, h.g = d(h) g.
inline LeftAction translation_action(const GroupHom& d) {
    const std::size_t n = d.dst->order();
    std::vector<std::size_t> t(d.src->order() * n);
    for (std::size_t h = 0; h < d.src->order(); ++h)
        for (std::size_t g = 0; g < n; ++g) t[h * n + g] = d.dst->mul(d(h), g);
    return left_action_validate(d.src, d.dst->labels, std::move(t));
}

}  // namespace cohere
