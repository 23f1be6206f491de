#include "cohere/cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sys/wait.h>

using namespace cohere;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream o, e;
    int rc = run_cli(std::move(args), o, e);
    return {rc, o.str(), e.str()};
}

/// Runs the built binary through the shell; stdout only.
Run spawn(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(COHERE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out, ""};
}

std::string error_kind(const std::string& text) {
    try {
        parse_definitions_text(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

std::string error_text(const std::string& text) {
    try {
        parse_definitions_text(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Parse, InnerS3Fixture) {
    auto d = parse_definitions_text(bundled_fixtures().at("inner_s3").text);
    EXPECT_EQ(d.crossed_modules.size(), 1u);
    EXPECT_EQ(d.reps.size(), 3u);
    EXPECT_EQ(d.two_reps.size(), 1u);
    ASSERT_EQ(d.descent_data.size(), 1u);
    EXPECT_TRUE(d.descent_data.begin()->second.bundle.has_value());
}

TEST(Parse, InnerS3MatricesMatchLibraryReps) {
    auto d = parse_definitions_text(bundled_fixtures().at("inner_s3").text);
    auto lib = s3_reps<Rational>(d.groupoids.at("BS3"));
    EXPECT_EQ(*d.reps.at("trivial"), *lib[0]);
    EXPECT_EQ(*d.reps.at("sign"), *lib[1]);
    EXPECT_EQ(*d.reps.at("standard"), *lib[2]);
}

TEST(Parse, EveryBundledFixtureParses) {
    for (const auto& [name, f] : bundled_fixtures()) EXPECT_NO_THROW(parse_definitions_text(f.text)) << name;
}

TEST(Parse, UndefinedGroupIsUnresolved) {
    auto t = R"j({"crossed_modules": [{"name": "x", "H": "Q", "G": "Q", "boundary": "identity", "action": "c"}]})j";
    EXPECT_EQ(error_kind(t), "UnresolvedReference");
    EXPECT_NE(error_text(t).find("'Q'"), std::string::npos);
}

TEST(Parse, NonAssociativeTableCarriesWitness) {
    // a unital magma with inverses whose table is not associative: (a a) b = b a = a, a (a b) = a a = b
    auto t = R"j({"groups": [{"name": "K", "elements": ["e", "a", "b"],
                 "table": [["e", "a", "b"], ["a", "b", "a"], ["b", "a", "e"]]}]})j";
    EXPECT_EQ(error_kind(t), "ValidationError");
    auto w = error_text(t);
    EXPECT_NE(w.find("groups/K"), std::string::npos);
    EXPECT_NE(w.find("NonAssociative(a,a,b)"), std::string::npos) << w;
}

TEST(Parse, SyntaxErrorHasLineAndColumn) {
    auto w = error_text("{\n  \"groups\": [\n");
    EXPECT_EQ(error_kind("{\n  \"groups\": [\n"), "ParseError");
    EXPECT_NE(w.find("line 3"), std::string::npos) << w;
}

TEST(Parse, StructuralErrorHasPointer) {
    auto t = R"j({"groups": [{"name": "Z2", "cyclic": 2}, {"name": "bad", "elements": ["e"]}]})j";
    EXPECT_EQ(error_kind(t), "ParseError");
    EXPECT_NE(error_text(t).find("/groups/1: missing key 'table'"), std::string::npos) << error_text(t);
    auto r = R"j({"groups": [{"name": "Z2", "cyclic": 2}], "groupoids": [{"name": "B", "delooping": "Z2"}],
                 "reps": [{"name": "r", "on": "B", "dim": 1, "matrices": {"1": ["1/0"]}}]})j";
    EXPECT_NE(error_text(r).find("/reps/0/matrices/1"), std::string::npos) << error_text(r);
}

TEST(Parse, DuplicateAndUnknownSections) {
    EXPECT_EQ(error_kind(R"j({"groups": [{"name": "A", "cyclic": 2}, {"name": "A", "cyclic": 3}]})j"), "ParseError");
    EXPECT_EQ(error_kind(R"j({"gruops": []})j"), "ParseError");
    EXPECT_EQ(error_kind(R"j({"schema": "other/9"})j"), "ParseError");
}

TEST(Parse, ExplicitGroupoidAndRep) {
    // codiscrete on two objects written out; sign-like rep with f acting by 2 and f^-1 by 1/2
    auto t = R"j({
      "groupoids": [{"name": "P", "objects": ["x", "y"],
                     "arrows": [{"name": "f", "src": "x", "tgt": "y"}, {"name": "g", "src": "y", "tgt": "x"}],
                     "compose": [["g", "f", "1_x"], ["f", "g", "1_y"]]}],
      "reps": [{"name": "r", "on": "P", "dim": 1, "matrices": {"f": ["2"], "g": ["1/2"]}},
               {"name": "bad", "on": "P", "dim": 1, "matrices": {"f": ["2"], "g": ["1"]}}]
    })j";
    EXPECT_EQ(error_kind(t), "ValidationError");
    EXPECT_NE(error_text(t).find("reps/bad"), std::string::npos);
    auto ok = std::string(t);
    ok.erase(ok.find(",\n               {\"name\": \"bad\""), std::string::npos);
    ok += "]}";
    auto d = parse_definitions_text(ok);
    EXPECT_EQ(d.groupoids.at("P")->num_arrows(), 4u);
    EXPECT_EQ(to_string(d.reps.at("r")->mat[d.groupoids.at("P")->arrow("g")](0, 0)), "1/2");
}

TEST(Parse, TwoGroupOverridesAreTypeChecked) {
    auto base = std::string(R"j({"groups": [{"name": "Z2", "cyclic": 2}, {"name": "Z3", "cyclic": 3}],
      "actions": [{"name": "t", "of": "Z3", "on": "Z2", "kind": "trivial"}],
      "crossed_modules": [{"name": "m", "H": "Z2", "G": "Z3", "boundary": "trivial", "action": "t"}],)j");
    // (1,1) goes 1 -> 1, not 0 -> 0
    EXPECT_EQ(error_kind(base + R"j("two_groups": [{"name": "c", "from": "m", "associator": [{"at": ["1", "1", "1"], "arrow": "(1,1)"}]}]})j"),
              "ValidationError");
    auto d = parse_definitions_text(base + R"j("two_groups": [{"name": "c", "from": "m", "left_unitor": [{"at": "2", "arrow": "(2,1)"}]}]})j");
    EXPECT_FALSE(d.two_groups.at("c")->is_strict());
}

TEST(Parse, ExplicitCocycleShapeChecked) {
    auto t = std::string(bundled_fixtures().at("identity_cyclic").text);
    t.replace(t.find("[\"3\", \"3\", \"1\"]"), 15, "[\"3\", \"3\"]");
    EXPECT_EQ(error_kind(t), "ParseError");
}

TEST(Parse, AuditListIsResolved) {
    auto t = std::string(bundled_fixtures().at("corrupted_associator").text);
    auto u = t;
    u.replace(u.find("\"coherence\""), 11, "\"homotopy\"");
    EXPECT_EQ(error_kind(u), "UnknownAudit");
    u = t;
    u.replace(u.find("\"target\": \"corrupted\""), 21, "\"target\": \"missing\"");
    EXPECT_EQ(error_kind(u), "UnresolvedReference");
}

TEST(Run, AllOnInnerS3Passes) {
    auto r = cli({"audit", "inner_s3"});
    EXPECT_EQ(r.rc, 0) << r.out << r.err;
    auto d = parse_definitions_text(bundled_fixtures().at("inner_s3").text);
    auto rep = run_audits(d, std::nullopt, 0, 5);
    std::set<std::string> kinds;
    for (const auto& e : rep.entries) kinds.insert(e.audit);
    EXPECT_EQ(kinds, (std::set<std::string>{"coherence", "crossed_module", "descent_object", "principal", "strict_two_group", "two_rep"}));
}

TEST(Run, OtherPassingFixtures) {
    EXPECT_EQ(cli({"audit", "z3_inversion_doubled"}).rc, 0);
    EXPECT_EQ(cli({"audit", "identity_cyclic"}).rc, 0);
}

TEST(Run, DoubledFixtureHasNonidentityAssociator) {
    auto d = parse_definitions_text(bundled_fixtures().at("z3_inversion_doubled").text);
    EXPECT_FALSE(d.two_groups.at("z3_doubled")->is_strict());
}

TEST(Run, PentagonOnlyOnCorruptedAssociator) {
    auto r = cli({"audit", "corrupted_associator", "--only", "pentagon"});
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.out.find("FAIL coherence/corrupted/pentagon"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("at (1,1,1,2)"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("triangle"), std::string::npos);
    // omega(1,1,1) = 1 fails the cocycle condition exactly on quadruples with a nonzero coboundary
    auto rep = run_audits(parse_definitions_text(bundled_fixtures().at("corrupted_associator").text), std::vector<std::string>{"pentagon"}, 0, 100);
    ASSERT_EQ(rep.entries.size(), 1u);
    std::size_t brute = 0;
    for (int w = 0; w < 3; ++w)
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
                for (int z = 0; z < 3; ++z) {
                    auto om = [](int a, int b, int c) { return a == 1 && b == 1 && c == 1 ? 1 : 0; };
                    int d = om(x, y, z) + om(w, (x + y) % 3, z) + om(w, x, y) + om((w + x) % 3, y, z) + om(w, x, (y + z) % 3);
                    brute += d % 2;
                }
    EXPECT_EQ(rep.entries[0].report.failure_count, brute);
}

TEST(Run, FailingRunWithoutFilterExitsOne) {
    auto r = cli({"audit", "corrupted_associator"});
    EXPECT_EQ(r.rc, 1);
    EXPECT_NE(r.out.find("8 laws checked, 1 failed"), std::string::npos) << r.out;
}

TEST(Run, EmptySelection) {
    auto r = cli({"audit", "inner_s3", "--only", "", "--json", "-"});
    EXPECT_EQ(r.rc, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j["audits"].empty());
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Run, SelectionByKindAndQualifiedLaw) {
    auto r = cli({"audit", "inner_s3", "--only", "crossed_module,two_rep/hexagon", "--json", "-"});
    EXPECT_EQ(r.rc, 0);
    std::vector<std::string> names;
    auto j = json::parse(r.out);
    for (const auto& e : j["audits"]) names.push_back(e["name"]);
    EXPECT_EQ(names, (std::vector<std::string>{"crossed_module/inner_s3/equivariance", "crossed_module/inner_s3/peiffer",
                                               "two_rep/inner_s3_2rep/hexagon"}));
}

TEST(Run, UnknownAuditIsInputError) {
    auto r = cli({"audit", "inner_s3", "--only", "pentagon,associahedron"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_NE(r.err.find("UnknownAudit(associahedron)"), std::string::npos);
}

TEST(Run, InputErrorsExitTwo) {
    EXPECT_EQ(cli({"audit", "/nonexistent/defs.json"}).rc, 2);
    EXPECT_EQ(cli({"audit"}).rc, 2);
    EXPECT_EQ(cli({"audit", "inner_s3", "--seed", "x"}).rc, 2);
    EXPECT_EQ(cli({"fixtures", "show", "nope"}).rc, 2);
}

TEST(Run, CounterexampleCap) {
    auto j = json::parse(cli({"audit", "corrupted_associator", "--only", "pentagon", "--max-counterexamples", "2", "--json", "-"}).out);
    EXPECT_EQ(j["max_counterexamples"], 2);
    EXPECT_EQ(j["audits"][0]["counterexamples"].size(), 2u);
    EXPECT_GT(j["audits"][0]["failures"].get<int>(), 2);
}

TEST(Run, SeedPrecedence) {
    setenv("COHERE_SEED", "41", 1);
    EXPECT_EQ(json::parse(cli({"audit", "identity_cyclic", "--json", "-"}).out)["seed"], 41);
    EXPECT_EQ(json::parse(cli({"audit", "identity_cyclic", "--seed", "9", "--json", "-"}).out)["seed"], 9);
    setenv("COHERE_SEED", "abc", 1);
    EXPECT_EQ(cli({"audit", "identity_cyclic"}).rc, 2);
    unsetenv("COHERE_SEED");
    EXPECT_EQ(json::parse(cli({"audit", "identity_cyclic", "--json", "-"}).out)["seed"], 0);
}

TEST(Run, TimingsOnlyOnRequest) {
    auto plain = json::parse(cli({"audit", "identity_cyclic", "--json", "-"}).out);
    auto timed = json::parse(cli({"audit", "identity_cyclic", "--json", "-", "--timings"}).out);
    EXPECT_FALSE(plain["audits"][0].contains("wall_ms"));
    EXPECT_TRUE(timed["audits"][0].contains("wall_ms"));
}

TEST(Run, JsonFileMatchesStdout) {
    auto path = std::filesystem::temp_directory_path() / "cohere_report_test.json";
    auto r = cli({"audit", "identity_cyclic", "--json", path.string()});
    EXPECT_EQ(r.rc, 0);
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    EXPECT_EQ(s.str(), cli({"audit", "identity_cyclic", "--json", "-"}).out);
    std::filesystem::remove(path);
}

TEST(Fixtures, ListAndShowRoundTrip) {
    auto r = cli({"fixtures", "list"});
    EXPECT_EQ(r.rc, 0);
    for (const auto& [name, f] : bundled_fixtures()) {
        EXPECT_NE(r.out.find(name), std::string::npos);
        auto s = cli({"fixtures", "show", name});
        EXPECT_EQ(s.rc, 0);
        EXPECT_EQ(s.out, f.text);
    }
}

TEST(Binary, ExitCodesAndByteIdenticalReports) {
    EXPECT_EQ(spawn("audit inner_s3").rc, 0);
    EXPECT_EQ(spawn("audit corrupted_associator --only pentagon").rc, 1);
    EXPECT_EQ(spawn("audit corrupted_associator --only nosuchlaw").rc, 2);
    auto a = spawn("audit inner_s3 --seed 17 --json -");
    auto b = spawn("audit inner_s3 --seed 17 --json -");
    EXPECT_EQ(a.rc, 0);
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(spawn("audit inner_s3 --json -", "COHERE_SEED=17").out, a.out);
    auto e = spawn("fixtures show corrupted_associator");
    EXPECT_EQ(e.out, bundled_fixtures().at("corrupted_associator").text);
}

TEST(Binary, ReadsDefinitionFile) {
    auto path = std::filesystem::temp_directory_path() / "cohere_defs_test.json";
    {
        std::ofstream f(path);
        f << bundled_fixtures().at("identity_cyclic").text;
    }
    auto r = spawn("audit " + path.string() + " --json -");
    EXPECT_EQ(r.rc, 0);
    EXPECT_EQ(r.out, cli({"audit", "identity_cyclic", "--json", "-"}).out);
    std::filesystem::remove(path);
}
