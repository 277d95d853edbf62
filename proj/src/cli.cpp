#include "cli.hpp"

#include "chevalley/automorphisms.hpp"
#include "chevalley/bruhat_radical.hpp"
#include "chevalley/json_io.hpp"
#include "chevalley/matrix_units.hpp"
#include "chevalley/paper_fixtures.hpp"
#include "chevalley/relations.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace chevalley::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
    int rank = 3;
    std::string ring = R"({"kind":"gfp","p":7})";
    std::uint64_t seed = kDefaultSeed;
    int samples = 50;
    std::string suite = "all";
    std::string what = "x", root = "a1", param = "1";
    std::string coeffs, matrix, show;
    std::string kind = "ring", sigma = "identity";
    std::string by_what = "h", by_root = "a1", by_param = "-1";
    std::string lift_kind = "1", r = "2";
    std::string dir;
    bool check = false;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// A JSON argument: inline text, @file, or - for standard input.
json read_json_arg(const std::string& arg, std::istream& in) {
    std::string text;
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw InvalidArgument("cannot read " + arg.substr(1));
        text.assign(std::istreambuf_iterator<char>(f), {});
    } else {
        text = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

// "a4", "-a4" or a coordinate form such as "e1-e2"
Root parse_root_arg(const ChevalleyAlgebra& alg, const std::string& s) {
    if (s.find('e') != std::string::npos) return parse_root(s, alg.rank());
    int idx = alg.parse_label(s);
    return alg.root_at(idx);
}

template <LocalRing R>
GroupElement<R> make_generator(const ChevalleyGroup<R>& G, const std::string& what, const std::string& root,
                               const std::string& param) {
    Root a = parse_root_arg(G.algebra_data(), root);
    R t = G.context().parse(param);
    if (what == "x") return G.x(a, t);
    if (what == "w") return G.w(a, t);
    if (what == "h") return G.h(a, t);
    throw InvalidArgument("--what must be x, w or h");
}

int cmd_roots(const Options& o, Io io) {
    RootSystem rs(o.rank);
    const auto& alg = *algebra(o.rank);
    json arr = json::array();
    for (const Root& r : rs.roots()) {
        arr.push_back({{"label", alg.label(alg.index(r))},
                       {"root", r.to_string()},
                       {"coords", r.c},
                       {"long", r.is_long()},
                       {"height", rs.height(r)},
                       {"coefficients", rs.coefficients(r)}});
    }
    io.out << arr.dump(1) << "\n";
    io.err << "B" << o.rank << ": " << rs.num_roots() << " roots, " << rs.num_positive() << " positive, n = " << rs.dim()
           << "\n";
    return 0;
}

template <LocalRing R>
int cmd_gens(const Options& o, const typename R::Context& ctx, Io io) {
    ChevalleyGroup<R> G(o.rank, ctx);
    auto g = make_generator(G, o.what, o.root, o.param);
    json j = matrix_to_json(g.matrix, o.rank);
    j["element"] = g.word_string();
    io.out << j.dump() << "\n";
    io.err << g.word_string() << " over " << ctx.name() << ": " << g.matrix.nonzeros() << " nonzero entries\n";
    return 0;
}

struct Tally {
    std::string suite, name;
    int passed = 0, failed = 0;
    void add(bool ok) { ok ? ++passed : ++failed; }
};

template <LocalRing R>
int cmd_verify(const Options& o, const typename R::Context& ctx, Io io) {
    bool want_con = o.suite == "con" || o.suite == "all";
    if (o.suite == "con" && o.rank != 3) throw InvalidArgument("--suite con needs --rank 3");
    ChevalleyGroup<R> G(o.rank, ctx);
    Relations<R> rel(G);
    const RootSystem& rs = G.roots();
    const auto& roots = rs.roots();
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    std::vector<Tally> tallies;
    json out = {{"rank", o.rank}, {"ring", ring_descriptor(ctx)}, {"seed", o.seed}, {"samples", o.samples}};

    if (o.suite == "steinberg" || o.suite == "all") {
        Tally add{"steinberg", "additivity"}, torus{"steinberg", "torus conjugation"},
            comm{"steinberg", "commutator formula"};
        for (int k = 0; k < o.samples; ++k) {
            const Root& a = roots[pick(rng)];
            add.add(rel.check_additivity(a, ctx.random(rng), ctx.random(rng)));
            TorusCharacter<R> chi;
            for (int i = 0; i < o.rank; ++i) chi.values.push_back(random_unit<R>(ctx, rng));
            torus.add(rel.check_torus_conjugation(chi, roots[pick(rng)], ctx.random(rng)));
            Root b = roots[pick(rng)];
            while (b == -a) b = roots[pick(rng)];
            comm.add(rel.check_commutator(a, b, ctx.random(rng), ctx.random(rng)));
        }
        tallies.insert(tallies.end(), {add, torus, comm});
    }
    if (o.suite == "weyl" || o.suite == "all") {
        Tally conj{"weyl", "Weyl conjugation"}, sq{"weyl", "w_a(1)^2 = h_a(-1)"}, inv{"weyl", "involution criterion"};
        for (int k = 0; k < o.samples; ++k) conj.add(rel.check_weyl_conjugation(roots[pick(rng)], roots[pick(rng)], ctx.random(rng)));
        for (const Root& a : roots) sq.add(G.mul(G.w(a, 1), G.w(a, 1)).matrix == G.h(a, -1).matrix);
        for (int i = 0; i < o.rank; ++i)
            for (int j = 0; j < o.rank; ++j)
                if (i != j) {
                    auto r = rel.check_involution_commuting(i, j);
                    inv.add(r.commute == r.eigenspace_condition);
                }
        tallies.insert(tallies.end(), {conj, sq, inv});
    }
    if (want_con && o.rank == 3) {
        auto rep = check_con_suite(G, canonical_con_generators(G));
        for (int i = 0; i < 7; ++i) {
            Tally t{"con", "Con" + std::to_string(i + 1) + (i == 3 ? " (x1x2 = x4^-1 x2 x1)" : "")};
            t.add(rep.holds[i]);
            tallies.push_back(t);
        }
        out["con4_as_printed"] = rep.con4_as_printed;
        if (ctx.nilpotency() != std::optional<int>(1)) {  // J != 0
            Tally sound{"con", "perturbations detected"};
            auto perts = sample_perturbations<R>(ctx, 7, rng);
            json pj = json::array();
            for (const auto& p : perts) {
                bool broken = !check_con_suite(G, perturbed_generators(G, p)).all();
                sound.add(broken);
                pj.push_back({{"perturbation", p.describe()}, {"detected", broken}});
            }
            out["perturbations"] = pj;
            tallies.push_back(sound);
        }
    }
    if (tallies.empty()) throw InvalidArgument("--suite must be steinberg, con, weyl or all");

    bool ok = true;
    json checks = json::array();
    for (const auto& t : tallies) {
        checks.push_back({{"suite", t.suite}, {"check", t.name}, {"passed", t.passed}, {"failed", t.failed}});
        ok = ok && t.failed == 0;
        io.err << (t.failed == 0 ? "PASS " : "FAIL ") << t.suite << ": " << t.name << " (" << t.passed << "/"
               << t.passed + t.failed << ")\n";
    }
    out["checks"] = checks;
    out["ok"] = ok;
    io.out << out.dump(1) << "\n";
    return ok ? 0 : 1;
}

template <LocalRing R>
int cmd_compose(const Options& o, const typename R::Context& ctx, Io io) {
    if (o.coeffs.empty()) throw InvalidArgument("--coeffs is required");
    ChevalleyGroup<R> G(o.rank, ctx);
    RadicalDecomposition<R> D(G);
    auto c = coefficients_from_json<R>(read_json_arg(o.coeffs, io.in), ctx);
    auto X = D.compose(c);
    io.out << matrix_to_json(X, o.rank).dump() << "\n";
    io.err << "composed a " << G.dim() << "x" << G.dim() << " matrix over " << ctx.name() << "\n";
    return 0;
}

template <LocalRing R>
int cmd_reconstruct(const Options& o, const typename R::Context& ctx, const json& mj, Io io) {
    ChevalleyGroup<R> G(o.rank, ctx);
    RadicalDecomposition<R> D(G);
    auto X = matrix_from_json<R>(mj, ctx, G.dim());
    auto c = D.reconstruct(X);
    io.out << coefficients_to_json(c).dump() << "\n";
    io.err << "recovered " << c.size() << " coefficients from " << D.positions().size() << " designated positions\n";
    return 0;
}

template <LocalRing R>
int cmd_matrix_units(const Options& o, const typename R::Context& ctx, Io io) {
    ChevalleyGroup<R> G(o.rank, ctx);
    MatrixUnits<R> U(G);
    const auto& alg = G.algebra_data();
    U.generate_all();
    int n = G.dim();
    if (!o.show.empty()) {
        auto comma = o.show.find(',');
        if (comma == std::string::npos) throw InvalidArgument("--show expects row,col labels such as a1,-a1");
        int i = alg.parse_label(o.show.substr(0, comma)), j = alg.parse_label(o.show.substr(comma + 1));
        const auto& u = U.unit(i, j);
        bool certified = U.eval(u.recipe) == U.E(i, j);
        io.out << json{{"row", alg.label(i)}, {"col", alg.label(j)}, {"recipe", u.recipe->to_string()},
                       {"provenance", u.provenance}, {"certified", certified}}
                      .dump(1)
               << "\n";
        io.err << "E[" << alg.label(i) << "," << alg.label(j) << "]: " << u.provenance << "\n";
        return certified ? 0 : 1;
    }
    auto sl = U.seed_long();
    auto ss = U.seed_short(0);
    json out = {{"rank", o.rank},
                {"ring", ring_descriptor(ctx)},
                {"n", n},
                {"units", n * n},
                {"certified", U.certified_count()},
                {"seed_long", sl.certified},
                {"seed_short", ss.certified}};
    bool ok = U.certified_count() == n * n && sl.certified && ss.certified;
    if (o.rank >= 3) {
        auto hb = U.h_block_combination();
        out["cartan_block"] = {{"A_projector", hb.A_projector},
                               {"B", hb.B_matches},
                               {"C_l", hb.C_last_matches},
                               {"chain", hb.chain_matches},
                               {"C", hb.C_matches},
                               {"C_1", hb.C1_matches},
                               {"C_1 - B = -2E[h2,h1]", hb.corrected_difference_matches},
                               {"C_1 + B = -2E[h2,h1]", hb.printed_sum_matches}};
        ok = ok && hb.A_projector && hb.B_matches && hb.C_last_matches && hb.chain_matches && hb.C_matches &&
             hb.C1_matches && hb.corrected_difference_matches;
    }
    out["ok"] = ok;
    io.out << out.dump(1) << "\n";
    io.err << U.certified_count() << "/" << n * n << " matrix units certified over " << ctx.name() << "\n";
    return ok ? 0 : 1;
}

template <LocalRing R>
int cmd_aut(const Options& o, const typename R::Context& ctx, Io io) {
    ChevalleyGroup<R> G(o.rank, ctx);
    const auto& alg = G.algebra_data();
    auto g = make_generator(G, o.what, o.root, o.param);
    std::optional<StandardAutomorphism<R>> a;
    std::optional<GroupElement<R>> expected;
    Root root = parse_root_arg(alg, o.root);
    R t = ctx.parse(o.param);
    if (o.kind == "ring") {
        RingAutomorphism<R> sigma;
        if (o.sigma == "identity")
            sigma = RingAutomorphism<R>::identity();
        else if (o.sigma == "frobenius")
            sigma = RingAutomorphism<R>::frobenius();
        else if (o.sigma.rfind("eps:", 0) == 0)
            sigma = RingAutomorphism<R>::dual_rescale(ctx.parse(o.sigma.substr(4)));
        else
            throw InvalidArgument("--sigma must be identity, frobenius or eps:<u>");
        a = StandardAutomorphism<R>::ring(sigma);
        if (o.what == "x") expected = G.x(root, sigma(t));
    } else if (o.kind == "inner") {
        auto by = make_generator(G, o.by_what, o.by_root, o.by_param);
        a = StandardAutomorphism<R>::inner(G, by);
        if (o.what == "x" && o.by_what == "h") {
            Root b = parse_root_arg(alg, o.by_root);
            R u = ctx.parse(o.by_param);
            int e = RootSystem::pairing(root, b);
            expected = G.x(root, (e >= 0 ? power(u, e) : power(u.inverse(), -e)) * t);
        }
    } else if (o.kind == "lift") {
        if constexpr (is_sqrt_ext_v<R>) {
            throw UnsupportedRing("lift needs a base ring that is not already a quadratic extension");
        } else {
            int kind = o.lift_kind == "l" ? o.rank : std::stoi(o.lift_kind);
            auto lift = lift_torus(G, kind, ctx.parse(o.r));
            a = StandardAutomorphism<R>::inner_lift(lift);
            if (o.what == "x") expected = G.x(root, power(lift->r, lift->exponent(root)) * t);
        }
    } else if (o.kind == "central") {
        a = StandardAutomorphism<R>::central();
        expected = g;
    } else {
        throw InvalidArgument("--kind must be ring, inner, lift or central");
    }
    auto after = a->apply(g);
    json out = {{"automorphism", a->describe()},
                {"element", g.word_string()},
                {"before", matrix_to_json(g.matrix, o.rank)},
                {"after", matrix_to_json(after.matrix, o.rank)}};
    bool ok = true;
    if (expected) {
        ok = after.matrix == expected->matrix;
        out["expected"] = expected->word_string();
        out["matches_expected"] = ok;
    }
    io.out << out.dump() << "\n";
    io.err << a->describe() << " applied to " << g.word_string()
           << (expected ? (ok ? ": matches " + expected->word_string() : ": MISMATCH with " + expected->word_string())
                        : std::string())
           << "\n";
    return ok ? 0 : 1;
}

int cmd_fixtures(const Options& o, Io io) {
    auto dir = o.dir.empty() ? default_fixture_dir() : std::filesystem::path(o.dir);
    auto reports = check_all(dir);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back({{"name", r.name},
                       {"ok", r.ok()},
                       {"verbatim", r.verbatim},
                       {"matches_after_corrections", r.matches},
                       {"printed_differences", r.printed_differences},
                       {"uncovered_differences", r.uncovered_differences},
                       {"oracle_failures", r.oracle_failures},
                       {"corrections", r.notes}});
        ok = ok && r.ok();
        io.err << (r.ok() ? "PASS " : "FAIL ") << r.name
               << (r.verbatim ? " (verbatim)" : " (" + std::to_string(r.notes.size()) + " corrections, " +
                                                    std::to_string(r.printed_differences) + " entries)")
               << "\n";
    }
    io.out << json{{"fixtures", arr}, {"ok", ok}}.dump(1) << "\n";
    return ok ? 0 : 1;
}

template <class F>
int on_ring(const Options& o, std::istream& in, F&& f) {
    return with_ring(read_json_arg(o.ring, in), std::forward<F>(f));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Adjoint Chevalley groups of type B_l over local rings with 1/2",
                 args.empty() ? "chevalley" : args.front()};
    app.footer(
        "Basis labels: a1..am are the positive roots by height, -ak their negatives,\n"
        "h1..hl the Cartan part. Ring descriptors: {\"kind\":\"gfp\",\"p\":7},\n"
        "{\"kind\":\"zmod\",\"p\":3,\"k\":2}, {\"kind\":\"zloc\",\"p\":5}, {\"kind\":\"dual\",\"p\":7},\n"
        "{\"kind\":\"sqrt-ext\",\"base\":{...},\"r\":\"2\"}. JSON arguments accept @file or -.");
    app.require_subcommand(1);
    Options o;
    auto rank_opt = [&](CLI::App* s) { s->add_option("--rank", o.rank, "rank l of B_l")->check(CLI::Range(2, 8)); };
    auto ring_opt = [&](CLI::App* s) { s->add_option("--ring", o.ring, "ring descriptor JSON"); };

    auto* roots = app.add_subcommand("roots", "list the roots of B_l");
    rank_opt(roots);

    auto* gens = app.add_subcommand("gens", "matrix of x_a(t), w_a(t) or h_a(t)");
    rank_opt(gens);
    ring_opt(gens);
    gens->add_option("--what", o.what, "x, w or h")->check(CLI::IsMember({"x", "w", "h"}));
    gens->add_option("--root", o.root, "root label (a4, -a2) or coordinates (e1-e2)");
    gens->add_option("--param", o.param, "ring element literal");

    auto* verify = app.add_subcommand("verify", "check group relations");
    rank_opt(verify);
    ring_opt(verify);
    verify->add_option("--suite", o.suite)->check(CLI::IsMember({"steinberg", "con", "weyl", "all"}));
    verify->add_option("--seed", o.seed, "random seed")->capture_default_str();
    verify->add_option("--samples", o.samples, "samples per check")->check(CLI::PositiveNumber);

    auto* compose = app.add_subcommand("compose", "build the product from radical coefficients");
    rank_opt(compose);
    ring_opt(compose);
    compose->add_option("--coeffs", o.coeffs, "coefficient JSON, @file or -")->required();

    auto* reconstruct = app.add_subcommand("reconstruct", "recover radical coefficients from a matrix");
    rank_opt(reconstruct);
    ring_opt(reconstruct);
    reconstruct->add_option("--matrix", o.matrix, "matrix JSON, @file or -")->required();

    auto* units = app.add_subcommand("matrix-units", "generate and certify all matrix units");
    rank_opt(units);
    ring_opt(units);
    units->add_option("--show", o.show, "print the recipe for one unit, e.g. a1,-a1");

    auto* aut = app.add_subcommand("aut", "apply a standard automorphism to a generator");
    rank_opt(aut);
    ring_opt(aut);
    aut->add_option("--kind", o.kind)->check(CLI::IsMember({"ring", "inner", "lift", "central"}));
    aut->add_option("--what", o.what)->check(CLI::IsMember({"x", "w", "h"}));
    aut->add_option("--root", o.root);
    aut->add_option("--param", o.param);
    aut->add_option("--sigma", o.sigma, "identity, frobenius or eps:<u>");
    aut->add_option("--by-what", o.by_what)->check(CLI::IsMember({"x", "w", "h"}));
    aut->add_option("--by-root", o.by_root);
    aut->add_option("--by-param", o.by_param);
    aut->add_option("--lift-kind", o.lift_kind, "1 or l")->check(CLI::IsMember({"1", "l"}));
    aut->add_option("--r", o.r, "unit whose square root is adjoined");

    auto* fixtures = app.add_subcommand("fixtures", "compare stored reference matrices with generated ones");
    fixtures->add_flag("--check", o.check, "run the comparison (default action)");
    fixtures->add_option("--dir", o.dir, "fixture directory");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Io io{in, out, err};
    try {
        if (*roots) return cmd_roots(o, io);
        if (*fixtures) return cmd_fixtures(o, io);
        if (*reconstruct) {
            json mj = read_json_arg(o.matrix, in);
            json ring = reconstruct->count("--ring") ? read_json_arg(o.ring, in) : mj.value("ring", json());
            if (ring.is_null()) throw InvalidArgument("no ring: pass --ring or include \"ring\" in the matrix JSON");
            if (!reconstruct->count("--rank") && mj.contains("rank")) o.rank = mj.at("rank").get<int>();
            return with_ring(ring, [&](const auto& ctx) {
                using R = std::decay_t<decltype(ctx.zero())>;
                return cmd_reconstruct<R>(o, ctx, mj, io);
            });
        }
        return on_ring(o, in, [&](const auto& ctx) {
            using R = std::decay_t<decltype(ctx.zero())>;
            if (*gens) return cmd_gens<R>(o, ctx, io);
            if (*verify) return cmd_verify<R>(o, ctx, io);
            if (*compose) return cmd_compose<R>(o, ctx, io);
            if (*units) return cmd_matrix_units<R>(o, ctx, io);
            if (*aut) return cmd_aut<R>(o, ctx, io);
            throw InvalidArgument("unknown subcommand");
        });
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ContextMismatch& e) {
        err << "error: " << e.what() << "\n";
    } catch (const NonUnit& e) {
        err << "error: " << e.what() << "\n";
    } catch (const NotRadicalCongruent& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UnsupportedRing& e) {
        err << "error: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::logic_error& e) {
        // a certification or internal consistency check failed
        err << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace chevalley::cli
