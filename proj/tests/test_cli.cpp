#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "chevalley");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = chevalley::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string Z9 = R"({"kind":"zmod","p":3,"k":2})";
const std::string Z27 = R"({"kind":"zmod","p":3,"k":3})";

}  // namespace

// ---- oracle values ----------------------------------------------------------

TEST(CliOracle, RootsRankTwo) {
    auto r = run({"roots", "--rank", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.parsed();
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[0]["label"], "a1");
    EXPECT_EQ(j[1]["label"], "-a1");
}

TEST(CliOracle, ConSuitePasses) {
    auto r = run({"verify", "--rank", "3", "--ring", Z9, "--suite", "con"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.parsed();
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_FALSE(j["con4_as_printed"].get<bool>());
    int con = 0;
    for (const auto& c : j["checks"])
        if (c["check"].get<std::string>().rfind("Con", 0) == 0) {
            ++con;
            EXPECT_EQ(c["failed"], 0);
        }
    EXPECT_EQ(con, 7);
    for (const auto& p : j["perturbations"]) EXPECT_TRUE(p["detected"].get<bool>()) << p.dump();
}

TEST(CliOracle, UsageErrors) {
    auto r = run({"verify", "--rank", "3", "--suite", "bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--suite"), std::string::npos) << r.err;
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"roots", "--rank", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "con", "--rank", "2"}).code, 2);
    EXPECT_EQ(run({"gens", "--ring", "{not json"}).code, 2);
    EXPECT_EQ(run({"gens", "--ring", Z9, "--what", "w", "--param", "3"}).code, 2);  // non-unit
}

TEST(CliOracle, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("reconstruct"), std::string::npos);
}

TEST(CliOracle, ComposeReconstructRoundTrip) {
    std::string coeffs = R"({"lambda":"4","s":["7","10"],"t":["3","0","6","9"],"u":["0","12","3","0"]})";
    auto c = run({"compose", "--rank", "2", "--ring", Z27, "--coeffs", coeffs});
    ASSERT_EQ(c.code, 0) << c.err;
    auto back = run({"reconstruct", "--matrix", "-"}, c.out);
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(back.parsed(), json::parse(coeffs));
}

TEST(CliOracle, ReconstructRejectsNonCongruent) {
    auto g = run({"gens", "--rank", "2", "--ring", Z27, "--what", "x", "--root", "a1", "--param", "1"});
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(run({"reconstruct", "--matrix", "-"}, g.out).code, 2);
}

TEST(CliOracle, Fixtures) {
    auto r = run({"fixtures", "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["fixtures"].size(), 10u);
    EXPECT_EQ(run({"fixtures", "--dir", "/nonexistent"}).code, 2);
}

TEST(CliOracle, Generators) {
    auto r = run({"gens", "--rank", "3", "--ring", R"({"kind":"gfp","p":7})", "--what", "h", "--root", "a1", "--param", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = r.parsed()["rows"];
    ASSERT_EQ(rows.size(), 21u);
    EXPECT_EQ(rows[2][2], "6");
    EXPECT_EQ(rows[0][0], "1");
}

TEST(CliOracle, MatrixUnits) {
    auto r = run({"matrix-units", "--rank", "2", "--ring", Z9});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.parsed()["certified"], 100);
    auto s = run({"matrix-units", "--rank", "2", "--ring", Z9, "--show", "a1,-a1"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_TRUE(s.parsed()["certified"].get<bool>());
    auto h = run({"matrix-units", "--rank", "3", "--ring", R"({"kind":"gfp","p":7})"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_TRUE(h.parsed()["cartan_block"]["C_1 - B = -2E[h2,h1]"].get<bool>());
    EXPECT_FALSE(h.parsed()["cartan_block"]["C_1 + B = -2E[h2,h1]"].get<bool>());
}

TEST(CliOracle, Automorphisms) {
    auto lift = run({"aut", "--rank", "2", "--ring", Z9, "--kind", "lift", "--lift-kind", "1", "--r", "2", "--root", "a1"});
    ASSERT_EQ(lift.code, 0) << lift.err;
    EXPECT_TRUE(lift.parsed()["matches_expected"].get<bool>());
    auto inner = run({"aut", "--rank", "3", "--ring", Z27, "--kind", "inner", "--by-what", "h", "--by-root", "a2",
                      "--by-param", "5", "--root", "a4", "--param", "2"});
    ASSERT_EQ(inner.code, 0) << inner.err;
    EXPECT_TRUE(inner.parsed()["matches_expected"].get<bool>());
    auto ring = run({"aut", "--rank", "2", "--ring", R"({"kind":"dual","p":7})", "--kind", "ring", "--sigma", "eps:3",
                     "--param", "1+1*eps"});
    ASSERT_EQ(ring.code, 0) << ring.err;
    EXPECT_EQ(run({"aut", "--ring", Z9, "--kind", "ring", "--sigma", "frobenius"}).code, 2);
    EXPECT_EQ(run({"aut", "--ring", Z9, "--kind", "lift", "--r", "3"}).code, 2);
}

// ---- properties ----------------------------------------------------------------

TEST(CliProperties, VerifyAllSuitesOverSeveralRings) {
    for (const std::string& ring : {Z9, std::string(R"({"kind":"dual","p":5})"), std::string(R"({"kind":"zloc","p":5})"),
                                    std::string(R"({"kind":"sqrt-ext","base":{"kind":"gfp","p":7},"r":"3"})")}) {
        auto r = run({"verify", "--rank", "3", "--ring", ring, "--samples", "10", "--seed", "5"});
        ASSERT_EQ(r.code, 0) << ring << "\n" << r.err;
        EXPECT_TRUE(r.parsed()["ok"].get<bool>());
    }
}

TEST(CliProperties, SameSeedSameOutput) {
    std::vector<std::string> args{"verify", "--rank", "3", "--ring", Z27, "--suite", "con", "--seed", "9"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliProperties, GensRoundTripThroughReconstructRing) {
    // ring and rank travel with the matrix, so reconstruct needs no flags
    auto g = run({"gens", "--rank", "3", "--ring", Z9, "--what", "x", "--root", "-a5", "--param", "3"});
    ASSERT_EQ(g.code, 0);
    auto j = g.parsed();
    EXPECT_EQ(j["ring"], json::parse(Z9));
    EXPECT_EQ(j["rank"], 3);
    auto r = run({"reconstruct", "--matrix", "-"}, g.out);
    ASSERT_EQ(r.code, 0) << r.err;
}
