#pragma once

#include "cohere/descent_fixtures.hpp"
#include "cohere/mutants.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace cohere {

using json = nlohmann::json;

inline constexpr const char* kDefinitionSchema = "cohere-definitions/1";
inline constexpr const char* kReportSchema = "cohere-report/1";

/// Audit kinds the orchestrator runs, in report order.
inline const std::vector<std::string>& cli_audit_kinds() {
    static const std::vector<std::string> k{"coherence", "crossed_module", "descent_object", "principal", "strict_two_group", "two_rep"};
    return k;
}

/// Descent data of a definition file: the principal cocycle and, when a 2-rep is named, its associated bundle.
struct DescentEntry {
    PrincipalData principal;
    std::optional<DescentObject<LinearCategory<Rational>>> bundle;
};

/**
 * \brief A resolved and validated definition file.
 *
 * Every crossed module also names its strict 2-group; inclusions name the
 * transferred 2-group on the doubled groupoid.
 */
struct Definitions {
    std::map<std::string, GroupPtr> groups;
    std::map<std::string, RightAction> actions;
    std::map<std::string, CrossedModule> crossed_modules;
    std::map<std::string, StrictTwoGroup> strict;
    std::map<std::string, GroupoidPtr> groupoids;
    std::map<std::string, Doubling> inclusions;
    std::map<std::string, TwoGroupPtr> two_groups;
    std::map<std::string, RepPtr<Rational>> reps;
    std::map<std::string, TwoRepPtr<Rational>> two_reps;
    std::map<std::string, NervePtr> covers;
    std::map<std::string, DescentEntry> descent_data;
    std::optional<std::vector<std::pair<std::string, std::string>>> audits;  // (kind, target)
};

namespace detail {

/// JSON value with its pointer, for located parse errors.
struct Node {
    const json* j;
    std::string ptr;

    [[noreturn]] void bad(const std::string& what) const { fail("ParseError", (ptr.empty() ? "/" : ptr) + ": " + what); }

    static std::string escape(const std::string& k) {
        std::string s;
        for (char c : k) s += c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c);
        return s;
    }
    bool has(const std::string& k) const { return j->is_object() && j->contains(k); }
    Node at(const std::string& k) const {
        if (!j->is_object()) bad("expected an object");
        if (!j->contains(k)) bad("missing key '" + k + "'");
        return {&(*j)[k], ptr + "/" + escape(k)};
    }
    std::optional<Node> get(const std::string& k) const {
        if (!has(k)) return std::nullopt;
        return at(k);
    }
    std::vector<Node> items() const {
        if (!j->is_array()) bad("expected an array");
        std::vector<Node> v;
        for (std::size_t i = 0; i < j->size(); ++i) v.push_back({&(*j)[i], ptr + "/" + std::to_string(i)});
        return v;
    }
    std::vector<std::pair<std::string, Node>> members() const {
        if (!j->is_object()) bad("expected an object");
        std::vector<std::pair<std::string, Node>> v;
        for (auto it = j->begin(); it != j->end(); ++it) v.push_back({it.key(), {&it.value(), ptr + "/" + escape(it.key())}});
        return v;
    }
    std::string str() const {
        if (!j->is_string()) bad("expected a string");
        return j->get<std::string>();
    }
    std::size_t uint() const {
        if (!j->is_number_unsigned()) bad("expected a nonnegative integer");
        return j->get<std::size_t>();
    }
    std::vector<std::string> strings() const {
        std::vector<std::string> v;
        for (const auto& n : items()) v.push_back(n.str());
        return v;
    }
};

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const std::string& what) {
    auto it = m.find(name);
    if (it == m.end()) fail("UnresolvedReference", what + " '" + name + "'");
    return it->second;
}

inline std::size_t index_of(const std::vector<std::string>& labels, const std::string& l, const std::string& what) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) fail("UnresolvedReference", what + " '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

/// Runs a module constructor; its Error becomes ValidationError(section, witness).
template <class F>
auto validated(const std::string& section, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == "UnresolvedReference" || e.kind() == "ParseError") throw;
        fail("ValidationError", section + ": " + e.what());
    }
}

inline void add_name(std::set<std::string>& seen, const Node& n, const std::string& name) {
    if (!seen.insert(name).second) n.bad("duplicate name '" + name + "'");
}

inline GroupPtr parse_group(const Node& n) {
    if (auto k = n.get("cyclic")) return cyclic_group(k->uint());
    if (auto k = n.get("symmetric")) {
        if (k->uint() > 5) k->bad("symmetric groups are capped at degree 5");
        return symmetric_group(k->uint());
    }
    auto labels = n.at("elements").strings();
    auto rows = n.at("table").items();
    if (rows.size() != labels.size()) n.at("table").bad("expected " + std::to_string(labels.size()) + " rows");
    std::vector<std::size_t> table;
    for (const auto& r : rows) {
        auto row = r.strings();
        if (row.size() != labels.size()) r.bad("expected " + std::to_string(labels.size()) + " entries");
        for (const auto& e : row) table.push_back(index_of(labels, e, "element"));
    }
    std::optional<std::string> id;
    if (auto i = n.get("identity")) id = i->str();
    return group_validate(labels, table, id);
}

inline GroupoidPtr parse_groupoid(const Definitions& d, const Node& n) {
    if (auto g = n.get("delooping")) return delooping(lookup(d.groups, g->str(), "group"));
    if (auto o = n.get("codiscrete")) return codiscrete_groupoid(o->strings());
    if (auto o = n.get("discrete")) return discrete_groupoid(o->strings());
    // identities 1_x are added; "compose" lists [second, first, result] for non-identity pairs
    auto objs = n.at("objects").strings();
    std::vector<std::string> arrs;
    std::vector<std::size_t> src, tgt;
    for (std::size_t x = 0; x < objs.size(); ++x) {
        arrs.push_back("1_" + objs[x]);
        src.push_back(x);
        tgt.push_back(x);
    }
    if (auto a = n.get("arrows"))
        for (const auto& e : a->items()) {
            arrs.push_back(e.at("name").str());
            src.push_back(index_of(objs, e.at("src").str(), "object"));
            tgt.push_back(index_of(objs, e.at("tgt").str(), "object"));
        }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
    if (auto c = n.get("compose"))
        for (const auto& e : c->items()) {
            auto t = e.strings();
            if (t.size() != 3) e.bad("expected [second, first, result]");
            comp[{index_of(arrs, t[0], "arrow"), index_of(arrs, t[1], "arrow")}] = index_of(arrs, t[2], "arrow");
        }
    const std::size_t k = objs.size();
    return make_groupoid(objs, arrs, src, tgt, [&](std::size_t b, std::size_t a) -> std::size_t {
        if (b < k) return a;
        if (a < k) return b;
        auto it = comp.find({b, a});
        return it == comp.end() ? kNone : it->second;
    });
}

inline std::vector<std::size_t> arrow_list(const FiniteGroupoid& G, const Node& n, std::size_t len, const std::string& what) {
    std::vector<std::size_t> v(len, kNone);
    auto items = n.items();
    if (items.size() != len) n.bad("expected " + std::to_string(len) + " " + what + " entries");
    for (std::size_t i = 0; i < len; ++i)
        if (!items[i].j->is_null()) v[i] = G.arrow(items[i].str());
    return v;
}

inline TwoGroupPtr parse_two_group(const Definitions& d, const Node& n) {
    auto base = lookup(d.two_groups, n.at("from").str(), "2-group");
    CoherentTwoGroup t = *base;
    const auto& G = *t.gpd;
    auto obj = [&](const Node& e) { return G.object(e.str()); };
    if (auto a = n.get("associator"))
        for (const auto& e : a->items()) {
            auto at = e.at("at").items();
            if (at.size() != 3) e.at("at").bad("expected three objects");
            t.assoc[(obj(at[0]) * t.n() + obj(at[1])) * t.n() + obj(at[2])] = G.arrow(e.at("arrow").str());
        }
    if (auto a = n.get("left_unitor"))
        for (const auto& e : a->items()) t.lunit[obj(e.at("at"))] = G.arrow(e.at("arrow").str());
    if (auto a = n.get("right_unitor"))
        for (const auto& e : a->items()) t.runit[obj(e.at("at"))] = G.arrow(e.at("arrow").str());
    return two_group_build(std::move(t));
}

inline RepPtr<Rational> parse_rep(const Definitions& d, const Node& n, const std::string& name) {
    auto on = n.at("on").str();
    GroupoidPtr gpd;
    if (auto g = d.groupoids.find(on); g != d.groupoids.end()) gpd = g->second;
    else gpd = lookup(d.two_groups, on, "groupoid")->gpd;
    const auto& G = *gpd;
    std::vector<std::size_t> dim(G.num_objects(), 0);
    if (auto k = n.get("dim")) std::fill(dim.begin(), dim.end(), k->uint());
    else
        for (const auto& [o, v] : n.at("dims").members()) dim[G.object(o)] = v.uint();
    if (n.has("kind") && n.at("kind").str() == "trivial") {
        if (std::set<std::size_t>(dim.begin(), dim.end()).size() > 1) n.at("dims").bad("trivial rep needs one dimension");
        return trivial_rep<Rational>(gpd, dim.empty() ? 0 : dim[0], name);
    }
    std::vector<Matrix<Rational>> mat(G.num_arrows());
    std::vector<bool> given(G.num_arrows(), false);
    for (const auto& [label, v] : n.at("matrices").members()) {
        std::size_t a = G.arrow(label);
        std::size_t r = dim[G.tgt[a]], c = dim[G.src[a]];
        auto es = v.strings();
        if (es.size() != r * c) v.bad("expected " + std::to_string(r * c) + " entries");
        std::vector<Rational> e;
        for (const auto& s : es) {
            try {
                e.push_back(parse_rational(s));
            } catch (const std::invalid_argument& x) {
                v.bad(x.what());
            }
        }
        mat[a] = Matrix<Rational>(r, c, std::move(e));
        given[a] = true;
    }
    for (std::size_t a = 0; a < G.num_arrows(); ++a) {
        if (given[a]) continue;
        if (!G.is_identity(a)) n.at("matrices").bad("no matrix for arrow '" + G.arr_labels[a] + "'");
        mat[a] = Matrix<Rational>::identity(dim[G.src[a]]);
    }
    return rep_validate<Rational>(gpd, dim, std::move(mat), name);
}

inline TwoRepPtr<Rational> parse_two_rep(const Definitions& d, const Node& n) {
    std::vector<RepPtr<Rational>> reps;
    for (const auto& r : n.at("reps").items()) reps.push_back(lookup(d.reps, r.str(), "rep"));
    auto kind = n.at("kind").str();
    if (kind == "crossed") return crossed_2rep<Rational>(lookup(d.strict, n.at("crossed_module").str(), "crossed module"), reps);
    if (kind == "canonical") return canonical_2rep<Rational>(lookup(d.two_groups, n.at("two_group").str(), "2-group"), reps);
    n.at("kind").bad("expected 'crossed' or 'canonical'");
}

inline DescentEntry parse_descent(const Definitions& d, const Node& n) {
    auto nerve = lookup(d.covers, n.at("cover").str(), "cover");
    TwoRepPtr<Rational> A;
    std::string tg_name;
    if (auto r = n.get("two_rep")) A = lookup(d.two_reps, r->str(), "2-rep");
    if (auto g = n.get("two_group")) tg_name = g->str();
    if (!A && tg_name.empty()) n.bad("needs 'two_group' or 'two_rep'");
    TwoGroupPtr tg = A ? A->tg : lookup(d.two_groups, tg_name, "2-group");
    const StrictTwoGroup* s = nullptr;
    for (const auto& [name, st] : d.strict)
        if (st.tg == tg) s = &st;
    auto c = n.at("cocycle");
    PrincipalData P;
    if (c.j->is_string()) {
        if (c.str() != "trivial") c.bad("expected 'trivial' or an object");
        P = trivial_principal(nerve, tg);
    } else if (auto seed = c.get("seed")) {
        P = s ? strict_cocycle(nerve, *s, seed->uint()) : gauged_trivial_cocycle(nerve, tg, seed->uint());
    } else {
        if (!s) c.bad("'x' needs the strict 2-group of a crossed module");
        auto rows = c.at("x").items();
        if (rows.size() != nerve->pieces()) c.at("x").bad("expected one row per piece");
        std::vector<std::vector<std::size_t>> x;
        for (const auto& r : rows) {
            auto labels = r.strings();
            if (labels.size() != nerve->points()) r.bad("expected one entry per point");
            std::vector<std::size_t> row;
            for (const auto& l : labels) row.push_back(s->xm.G->index(l));
            x.push_back(row);
        }
        P = strict_principal(nerve, *s, x);
    }
    DescentEntry e{P, std::nullopt};
    if (A && all_passed(principal_descent_validate(P))) e.bundle = associated_bundle(P, *A);
    return e;
}

}  // namespace detail

/**
 * \brief Resolves and validates a parsed definition document.
 *
 * Sections are read in dependency order: groups, actions, crossed_modules,
 * groupoids, inclusions, two_groups, reps, two_reps, covers, descent_data,
 * audits. A name may only refer to entries of earlier sections or earlier
 * entries of its own section. Errors: ParseError(location),
 * UnresolvedReference(name), ValidationError(section, witness).
 */
inline Definitions parse_definitions(const json& doc) {
    using detail::Node;
    Node root{&doc, ""};
    if (!doc.is_object()) root.bad("expected an object");
    if (auto s = root.get("schema"); s && s->str() != kDefinitionSchema) s->bad("unsupported schema '" + s->str() + "'");
    static const std::set<std::string> known{"schema", "description", "groups", "actions", "crossed_modules", "groupoids",
                                             "inclusions", "two_groups", "reps", "two_reps", "covers", "descent_data", "audits"};
    for (const auto& [k, v] : root.members())
        if (!known.count(k)) v.bad("unknown section");
    Definitions d;
    std::set<std::string> seen;
    auto each = [&](const std::string& section, auto&& f) {
        if (!root.has(section)) return;
        std::set<std::string> local;
        for (const auto& n : root.at(section).items()) {
            auto name = n.at("name").str();
            detail::add_name(local, n, name);
            detail::validated(section + "/" + name, [&] { f(n, name); return 0; });
        }
    };
    each("groups", [&](const Node& n, const std::string& name) { d.groups[name] = detail::parse_group(n); });
    each("actions", [&](const Node& n, const std::string& name) {
        auto G = detail::lookup(d.groups, n.at("of").str(), "group");
        auto H = detail::lookup(d.groups, n.at("on").str(), "group");
        if (auto k = n.get("kind")) {
            if (k->str() == "trivial") d.actions.emplace(name, trivial_action(G, H));
            else if (k->str() == "conjugation") {
                if (G != H) k->bad("conjugation needs of == on");
                d.actions.emplace(name, conjugation_action(G));
            } else
                k->bad("expected 'trivial', 'conjugation' or a table");
            return;
        }
        // table[g][h] = h^g
        std::vector<std::size_t> t;
        auto rows = n.at("table").items();
        if (rows.size() != G->order()) n.at("table").bad("expected one row per element of '" + n.at("of").str() + "'");
        for (const auto& r : rows) {
            auto row = r.strings();
            if (row.size() != H->order()) r.bad("expected one entry per element of '" + n.at("on").str() + "'");
            for (const auto& e : row) t.push_back(H->index(e));
        }
        d.actions.emplace(name, right_action_validate(G, H, t));
    });
    each("crossed_modules", [&](const Node& n, const std::string& name) {
        auto H = detail::lookup(d.groups, n.at("H").str(), "group");
        auto G = detail::lookup(d.groups, n.at("G").str(), "group");
        auto act = detail::lookup(d.actions, n.at("action").str(), "action");
        if (act.actor != G || act.target != H) n.at("action").bad("action is not of G on H");
        auto b = n.at("boundary");
        GroupHom bd;
        if (b.j->is_string() && b.str() == "identity") {
            if (G != H) b.bad("identity boundary needs H == G");
            bd = identity_hom(H);
        } else if (b.j->is_string() && b.str() == "trivial") {
            bd = trivial_hom(H, G);
        } else {
            std::vector<std::size_t> m;
            auto labels = b.strings();
            if (labels.size() != H->order()) b.bad("expected one image per element of H");
            for (const auto& l : labels) m.push_back(G->index(l));
            bd = hom_validate(H, G, m);
        }
        auto xm = crossed_module_validate(H, G, bd, act);
        d.crossed_modules.emplace(name, xm);
        auto s = strict_two_group(xm);
        d.strict.emplace(name, s);
        d.two_groups[name] = s.tg;
    });
    each("groupoids", [&](const Node& n, const std::string& name) { d.groupoids[name] = detail::parse_groupoid(d, n); });
    each("inclusions", [&](const Node& n, const std::string& name) {
        const auto& s = detail::lookup(d.strict, n.at("crossed_module").str(), "crossed module");
        const auto& G = *s.tg->gpd;
        std::vector<std::size_t> img, cp;
        if (auto t = n.get("image_twist")) img = detail::arrow_list(G, *t, G.num_objects(), "image_twist");
        if (auto t = n.get("copy_twist")) cp = detail::arrow_list(G, *t, G.num_objects(), "copy_twist");
        if (d.two_groups.count(name)) n.at("name").bad("name already used by a 2-group");
        auto dbl = double_two_group(*s.tg, img, cp);
        d.inclusions.emplace(name, dbl);
        d.two_groups[name] = dbl.tg;
    });
    each("two_groups", [&](const Node& n, const std::string& name) {
        if (d.two_groups.count(name)) n.at("name").bad("name already used by a 2-group");
        d.two_groups[name] = detail::parse_two_group(d, n);
    });
    each("reps", [&](const Node& n, const std::string& name) { d.reps[name] = detail::parse_rep(d, n, name); });
    each("two_reps", [&](const Node& n, const std::string& name) { d.two_reps[name] = detail::parse_two_rep(d, n); });
    each("covers", [&](const Node& n, const std::string& name) {
        auto points = n.at("points").strings();
        FiniteCover c{points, {}};
        for (const auto& p : n.at("pieces").items()) {
            std::vector<std::size_t> piece;
            for (const auto& l : p.strings()) piece.push_back(detail::index_of(points, l, "point"));
            c.pieces.push_back(piece);
        }
        d.covers[name] = cech_nerve(c);
    });
    each("descent_data", [&](const Node& n, const std::string& name) { d.descent_data.emplace(name, detail::parse_descent(d, n)); });
    if (auto a = root.get("audits")) {
        d.audits.emplace();
        for (const auto& e : a->items()) {
            auto kind = e.at("audit").str(), target = e.at("target").str();
            const auto& kinds = cli_audit_kinds();
            if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) fail("UnknownAudit", kind);
            bool ok = kind == "crossed_module" || kind == "strict_two_group" ? d.crossed_modules.count(target) > 0
                      : kind == "coherence"                                 ? d.two_groups.count(target) > 0
                      : kind == "two_rep"                                   ? d.two_reps.count(target) > 0
                      : kind == "principal"                                 ? d.descent_data.count(target) > 0
                                                                            : d.descent_data.count(target) && d.descent_data.at(target).bundle;
            if (!ok) fail("UnresolvedReference", kind + " target '" + target + "'");
            d.audits->emplace_back(kind, target);
        }
    }
    return d;
}

inline Definitions parse_definitions_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string w = e.what();
        auto at = w.find("at line ");
        fail("ParseError", at == std::string::npos ? w : w.substr(at + 3));
    }
    return parse_definitions(doc);
}

/// One audited law of one target.
struct ReportEntry {
    std::string audit, target;
    AuditReport report;
    double wall_ms = 0;
};

struct Report {
    std::uint64_t seed = 0;
    std::size_t max_counterexamples = 5;
    std::vector<ReportEntry> entries;

    bool passed() const {
        for (const auto& e : entries)
            if (!e.report.passed()) return false;
        return true;
    }
};

/**
 * \brief Resolves an --only list into (audit kind, law) filters.
 *
 * Each token is an audit kind, a law name, or "kind/law". An empty list
 * selects nothing. Errors: UnknownAudit(token).
 */
inline std::set<std::pair<std::string, std::string>> select_laws(const std::vector<std::string>& tokens) {
    const auto& laws = audit_laws();
    std::set<std::pair<std::string, std::string>> sel;
    for (const auto& tok : tokens) {
        bool hit = false;
        for (const auto& kind : cli_audit_kinds())
            for (const auto& law : laws.at(kind))
                if (tok == kind || tok == law || tok == kind + "/" + law) {
                    sel.emplace(kind, law);
                    hit = true;
                }
        if (!hit) fail("UnknownAudit", tok);
    }
    return sel;
}

/**
 * \brief Runs the selected audits. `only` absent means every law; entries
 * are sorted by audit, target and law so output is deterministic.
 */
inline Report run_audits(const Definitions& d, const std::optional<std::vector<std::string>>& only, std::uint64_t seed,
                         std::size_t max_counterexamples) {
    std::optional<std::set<std::pair<std::string, std::string>>> sel;
    if (only) sel = select_laws(*only);
    std::vector<std::pair<std::string, std::string>> jobs;
    if (d.audits) jobs = *d.audits;
    else {
        for (const auto& [n, x] : d.crossed_modules) {
            jobs.emplace_back("crossed_module", n);
            jobs.emplace_back("strict_two_group", n);
        }
        for (const auto& [n, t] : d.two_groups) jobs.emplace_back("coherence", n);
        for (const auto& [n, a] : d.two_reps) jobs.emplace_back("two_rep", n);
        for (const auto& [n, e] : d.descent_data) {
            jobs.emplace_back("principal", n);
            if (e.bundle) jobs.emplace_back("descent_object", n);
        }
    }
    std::sort(jobs.begin(), jobs.end());
    jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());
    AuditOptions opt;
    opt.seed = seed;
    opt.max_failures = max_counterexamples;
    Report rep{seed, max_counterexamples, {}};
    for (const auto& [kind, target] : jobs) {
        bool wanted = !sel;
        for (const auto& law : audit_laws().at(kind)) wanted = wanted || sel->count({kind, law});
        if (!wanted) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<AuditReport> out;
        if (kind == "crossed_module") out = crossed_module_audit(d.crossed_modules.at(target), opt);
        else if (kind == "strict_two_group") out = strict_two_group_audit(*d.strict.at(target).tg, opt);
        else if (kind == "coherence") out = coherence_audit(*d.two_groups.at(target), opt);
        else if (kind == "two_rep") out = two_rep_audit(*d.two_reps.at(target), opt);
        else if (kind == "principal") out = principal_descent_validate(d.descent_data.at(target).principal, opt);
        else out = descent_object_validate(*d.descent_data.at(target).bundle, opt);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : out) {
            if (sel && !sel->count({kind, r.law})) continue;
            rep.entries.push_back({kind, target, std::move(r), ms / static_cast<double>(out.size())});
        }
    }
    std::stable_sort(rep.entries.begin(), rep.entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.audit, a.target, a.report.law) < std::tie(b.audit, b.target, b.report.law);
    });
    return rep;
}

/// Machine-readable report; wall times only when asked, so the default is byte-stable.
inline json report_json(const Report& r, bool timings = false) {
    json audits = json::array();
    for (const auto& e : r.entries) {
        json cx = json::array();
        for (const auto& c : e.report.failures) cx.push_back({{"instance", c.instance}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        json j{{"name", e.audit + "/" + e.target + "/" + e.report.law},
               {"audit", e.audit},
               {"target", e.target},
               {"law", e.report.law},
               {"instances", e.report.instances},
               {"sampled", e.report.sampled},
               {"failures", e.report.failure_count},
               {"passed", e.report.passed()},
               {"counterexamples", cx}};
        if (timings) j["wall_ms"] = e.wall_ms;
        audits.push_back(j);
    }
    return {{"schema", kReportSchema},
            {"seed", r.seed},
            {"max_counterexamples", r.max_counterexamples},
            {"passed", r.passed()},
            {"audits", audits}};
}

inline std::string report_text(const Report& r) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& e : r.entries) {
        const auto& a = e.report;
        if (!a.passed()) ++failed;
        os << (a.passed() ? "PASS " : "FAIL ") << e.audit << "/" << e.target << "/" << a.law << "  " << a.instances
           << (a.sampled ? " sampled" : "") << " instances";
        if (!a.passed()) os << ", " << a.failure_count << " failures";
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.2f", e.wall_ms);
        os << "  " << ms << " ms\n";
        for (const auto& c : a.failures) os << "    at " << c.instance << ": " << c.lhs << " != " << c.rhs << "\n";
    }
    os << r.entries.size() << " laws checked, " << failed << " failed (seed " << r.seed << ")\n";
    return os.str();
}

}  // namespace cohere
