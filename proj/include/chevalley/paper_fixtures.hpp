#pragma once
// Reference B_3 matrices and Cartan-block forms stored as JSON transcriptions,
// compared with generated elements. A transcription is kept verbatim; any fix
// is a listed correction whose oracle (a product of generated factors the
// corrected matrix must equal) is re-checked on every run.

#include "chevalley/relations.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chevalley {

using json = nlohmann::json;

struct FixtureCorrection {
    std::string note;
    json remove = json::array();  // [[row, col, value], ...] printed terms taken out
    json add = json::array();     // terms put in
    json oracle;                  // {"factors": [...], "claim": "..."} or null
};

struct Fixture {
    std::string name;
    std::string kind;  // "matrix", "diagonal", "cartan_block"
    int rank = 3;
    json generated;    // factor list of the element the fixture pins
    json printed;      // matrix/diagonal: terms or values; cartan_block: rows
    std::string block;  // cartan_block: "first", "middle", "last"
    std::vector<int> ranks;
    std::vector<FixtureCorrection> corrections;
};

struct FixtureReport {
    std::string name;
    bool verbatim = false;          // printed form equals the generated element
    bool matches = false;           // after corrections
    int printed_differences = 0;    // entries where printed and generated differ
    int uncovered_differences = 0;  // differences no correction touches
    std::vector<std::string> oracle_failures;
    std::vector<std::string> notes;

    bool ok() const { return matches && uncovered_differences == 0 && oracle_failures.empty(); }
};

inline Fixture parse_fixture(const json& j) {
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.kind = j.value("kind", "matrix");
    f.rank = j.value("rank", 3);
    f.generated = j.value("generated", json::array());
    f.printed = j.at("printed");
    f.block = j.value("block", "");
    if (j.contains("ranks")) f.ranks = j.at("ranks").get<std::vector<int>>();
    for (const auto& c : j.value("corrections", json::array())) {
        FixtureCorrection fc;
        fc.note = c.at("note").get<std::string>();
        fc.remove = c.value("remove", json::array());
        fc.add = c.value("add", json::array());
        fc.oracle = c.value("oracle", json());
        f.corrections.push_back(std::move(fc));
    }
    return f;
}

inline Fixture load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open fixture " + path.string());
    return parse_fixture(json::parse(in));
}

namespace detail {

// Exact integers via Z_(5): every entry involved is a small integer.
using FixRing = ZLoc;

inline Matrix<FixRing> fixture_factors(const ChevalleyGroup<FixRing>& G, const json& factors) {
    const auto& alg = G.algebra_data();
    const auto& ctx = G.context();
    auto root = [&](const json& f) { return alg.root_at(alg.parse_label(f.at("root").get<std::string>())); };
    Matrix<FixRing> m = Matrix<FixRing>::identity(ctx, G.dim());
    for (const auto& f : factors) {
        std::string what = f.at("what").get<std::string>();
        if (what == "x") {
            m = m * G.x(root(f), ctx.parse(f.at("param").get<std::string>())).matrix;
        } else if (what == "w") {
            m = m * G.w(root(f), ctx.parse(f.at("param").get<std::string>())).matrix;
        } else if (what == "h") {
            m = m * G.h(root(f), ctx.parse(f.at("param").get<std::string>())).matrix;
        } else if (what == "ad") {
            m = m * ad_matrix<FixRing>(alg, ctx, root(f));
        } else if (what == "chi") {
            TorusCharacter<FixRing> chi;
            for (const auto& v : f.at("values")) chi.values.push_back(ctx.parse(v.get<std::string>()));
            m = m * G.h_char(chi).matrix;
        } else {
            throw InvalidArgument("unknown fixture factor " + what);
        }
    }
    return m;
}

inline void apply_terms(const ChevalleyAlgebra& alg, Matrix<FixRing>& m, const json& terms, int sign,
                        std::set<std::pair<int, int>>* touched) {
    for (const auto& t : terms) {
        int r = alg.parse_label(t.at(0).get<std::string>()), c = alg.parse_label(t.at(1).get<std::string>());
        m(r, c) += m.context().from_int(sign * t.at(2).get<long long>());
        if (touched) touched->insert({r, c});
    }
}

inline FixtureReport check_matrix_fixture(const Fixture& f) {
    FixtureReport rep;
    rep.name = f.name;
    ChevalleyGroup<FixRing> G(f.rank, FixRing::Context(5));
    const auto& alg = G.algebra_data();
    int n = G.dim();
    Matrix<FixRing> target = fixture_factors(G, f.generated);
    Matrix<FixRing> m(G.context(), n, n);
    if (f.kind == "diagonal") {
        if (static_cast<int>(f.printed.size()) != n) throw InvalidArgument(f.name + ": diagonal has the wrong length");
        for (int i = 0; i < n; ++i) m(i, i) = G.context().from_int(f.printed[i].get<long long>());
    } else {
        apply_terms(alg, m, f.printed, 1, nullptr);
    }
    rep.verbatim = m == target;
    std::set<std::pair<int, int>> touched;
    for (const auto& c : f.corrections) {
        apply_terms(alg, m, c.remove, -1, &touched);
        apply_terms(alg, m, c.add, 1, &touched);
        rep.notes.push_back(c.note);
        if (!c.oracle.is_null() && !(m == fixture_factors(G, c.oracle.at("factors"))))
            rep.oracle_failures.push_back(c.note);
    }
    rep.matches = m == target;
    // differences between the verbatim transcription and the generated element
    Matrix<FixRing> printed(G.context(), n, n);
    if (f.kind == "diagonal")
        for (int i = 0; i < n; ++i) printed(i, i) = G.context().from_int(f.printed[i].get<long long>());
    else
        apply_terms(alg, printed, f.printed, 1, nullptr);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(printed(i, j) == target(i, j))) {
                ++rep.printed_differences;
                if (!touched.count({i, j})) ++rep.uncovered_differences;
            }
    return rep;
}

// The l x l Cartan block of w_{a_i}(1) is the identity off a window where it
// equals the printed rows: i = 1 (window 1,2), 1 < i < l (window i-1..i+1),
// i = l (window l-1, l).
inline FixtureReport check_block_fixture(const Fixture& f) {
    FixtureReport rep;
    rep.name = f.name;
    rep.matches = true;
    auto rows = f.printed.get<std::vector<std::vector<long long>>>();
    int w = static_cast<int>(rows.size());
    for (int l : f.ranks) {
        std::vector<std::pair<int, int>> cases;  // (i, window start), 1-based
        if (f.block == "first") cases.push_back({1, 1});
        if (f.block == "last") cases.push_back({l, l - 1});
        if (f.block == "middle")
            for (int i = 2; i < l; ++i) cases.push_back({i, i - 1});
        ChevalleyGroup<FixRing> G(l, FixRing::Context(5));
        Relations<FixRing> rel(G);
        for (auto [i, start] : cases) {
            IntMatrix b = rel.cartan_block(i - 1);
            for (int r = 0; r < l; ++r)
                for (int c = 0; c < l; ++c) {
                    int rr = r - (start - 1), cc = c - (start - 1);
                    bool inside = rr >= 0 && rr < w && cc >= 0 && cc < w;
                    long long expect = inside ? rows[rr][cc] : (r == c ? 1 : 0);
                    if (b(r, c) != expect) {
                        rep.matches = false;
                        ++rep.printed_differences;
                        ++rep.uncovered_differences;
                    }
                }
        }
    }
    rep.verbatim = rep.matches;
    return rep;
}

}  // namespace detail

inline FixtureReport check_fixture(const Fixture& f) {
    if (f.kind == "cartan_block") return detail::check_block_fixture(f);
    if (f.kind == "matrix" || f.kind == "diagonal") return detail::check_matrix_fixture(f);
    throw InvalidArgument("unknown fixture kind " + f.kind);
}

inline std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw InvalidArgument("fixture directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

inline std::vector<FixtureReport> check_all(const std::filesystem::path& dir) {
    std::vector<FixtureReport> out;
    for (const auto& p : fixture_files(dir)) out.push_back(check_fixture(load_fixture(p)));
    return out;
}

#ifdef CHEVALLEY_FIXTURE_DIR
inline std::filesystem::path default_fixture_dir() { return CHEVALLEY_FIXTURE_DIR; }
#else
inline std::filesystem::path default_fixture_dir() { return "data/fixtures"; }
#endif

}  // namespace chevalley
