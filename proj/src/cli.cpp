#include "jordanrep/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "jordanrep/cache.hpp"
#include "jordanrep/error.hpp"
#include "jordanrep/freealg.hpp"
#include "jordanrep/imgalg.hpp"
#include "jordanrep/json_io.hpp"
#include "jordanrep/repmod.hpp"
#include "jordanrep/strata.hpp"
#include "jordanrep/survey.hpp"
#include "jordanrep/verify.hpp"

namespace jordanrep {

namespace {

using nlohmann::json;

struct GlobalFlags {
    bool json = false;
    std::string cache_dir = ".jordanrep-cache";
    bool no_cache = false;
};

class Session {
public:
    Session(const GlobalFlags& flags, std::ostream& out, std::ostream& err) : flags_(flags), out_(out), err_(err) {}

    // Computes (or fetches) a payload, then prints it as JSON or via `render`.
    template <typename Compute, typename Render>
    void emit(const CacheKey& key, bool cacheable, Compute compute, Render render) {
        json payload;
        std::optional<json> hit;
        if (cacheable) hit = cache().lookup(key);
        if (hit) {
            payload = std::move(*hit);
        } else {
            payload = compute();
            if (cacheable) cache().store(key, payload);
        }
        if (flags_.json) out_ << payload.dump(2) << '\n';
        else render(payload, out_);
    }

    bool json_mode() const { return flags_.json; }
    std::ostream& out() { return out_; }

private:
    ResultCache& cache() {
        if (!cache_) {
            cache_ = flags_.no_cache ? ResultCache() : ResultCache(flags_.cache_dir, kToolVersion, err_);
        }
        return *cache_;
    }

    GlobalFlags flags_;
    std::ostream& out_;
    std::ostream& err_;
    std::optional<ResultCache> cache_;
};

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string parts_str(const json& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i].get<unsigned>());
    return s;
}

void print_matrix(std::ostream& os, const std::string& label, const json& m) {
    os << label << " =\n";
    for (const auto& row : m.at("entries")) {
        os << "  [";
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? ", " : "") << row[k].get<std::string>();
        os << "]\n";
    }
}

Representation load_representation(const std::string& path, std::size_t index) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InputError("'" + path + "' is not valid JSON");
    if (j.is_object() && j.contains("samples")) {
        if (index >= j.at("samples").size()) throw InputError("sample index out of range");
        return j.at("samples").at(index).get<Representation>();
    }
    return j.get<Representation>();
}

RatPolynomial poly_in_y(const std::string& text) {
    const NcPolynomial p = parse_expr(text);
    std::vector<Rational> c;
    for (const auto& [w, coeff] : p.terms()) {
        for (auto l : w)
            if (l != Letter::Y) throw InputError("--poly must be a polynomial in y alone: " + text);
        if (c.size() <= w.size()) c.resize(w.size() + 1);
        c[w.size()] = coeff;
    }
    return RatPolynomial(std::move(c));
}

json aut_json(const AutParams& a) {
    return {{"alpha", a.alpha.str()}, {"p", a.p.str('y')}, {"x_image", a.image_x().str()},
            {"y_image", a.image_y().str()}};
}

json stratum_payload(std::size_t n) {
    json rows = json::array();
    for (const auto& s : strata_table_parallel(n)) rows.push_back(s);
    return {{"n", n}, {"partition_count", rows.size()}, {"strata", rows}};
}

void render_strata(const json& p, std::ostream& os) {
    os << pad("partition", 16) << pad("orbit_dim", 11) << pad("fiber_dim", 11) << "total_dim\n";
    for (const auto& s : p.at("strata"))
        os << pad(parts_str(s.at("partition")), 16) << pad(std::to_string(s.at("orbit_dim").get<std::size_t>()), 11)
           << pad(std::to_string(s.at("fiber_dim").get<std::size_t>()), 11) << s.at("total_dim").get<std::size_t>()
           << '\n';
    os << p.at("partition_count").get<std::size_t>() << " strata for n = " << p.at("n").get<std::size_t>() << '\n';
}

json solve_payload(const Partition& part) {
    const FiberSolution f = solve_fiber(part);
    json basis = json::array(), toeplitz = json::array();
    bool all = true;
    for (const auto& k : f.kernel_basis) {
        basis.push_back(k);
        const bool t = is_block_toeplitz(k, part);
        toeplitz.push_back(t);
        all &= t;
    }
    return {{"partition", part.parts()}, {"fiber_dim", f.kernel_basis.size()},
            {"centralizer_formula", centralizer_dim_formula(part)}, {"particular", f.particular},
            {"kernel_basis", basis}, {"kernel_block_toeplitz", toeplitz}, {"all_block_toeplitz", all},
            {"particular_block_toeplitz", is_block_toeplitz(f.particular, part)}};
}

void render_solve(const json& p, std::ostream& os) {
    os << "partition " << parts_str(p.at("partition")) << ": X*J - J*X = J^2\n";
    print_matrix(os, "particular X0", p.at("particular"));
    os << "fiber_dim " << p.at("fiber_dim").get<std::size_t>() << " (sum min(n_i, n_j) = "
       << p.at("centralizer_formula").get<std::size_t>() << ")\n";
    os << "kernel basis elements with Toeplitz blocks: "
       << std::count(p.at("kernel_block_toeplitz").begin(), p.at("kernel_block_toeplitz").end(), true) << "/"
       << p.at("kernel_basis").size() << "; X0 Toeplitz blocks: "
       << (p.at("particular_block_toeplitz").get<bool>() ? "yes" : "no") << '\n';
}

json sample_payload(const Partition& part, std::uint64_t seed, std::size_t count, long bound) {
    json samples = json::array();
    for (const auto& s : sample_batch_parallel(part, seed, count, bound))
        samples.push_back({{"n", part.n()}, {"X", s.x}, {"Y", s.y}, {"partition", part.parts()}, {"seed", s.seed},
                           {"relation_holds", check_relation(s.x, s.y)}});
    return {{"samples", samples}};
}

void render_samples(const json& p, std::ostream& os) {
    for (const auto& s : p.at("samples")) {
        os << "partition " << parts_str(s.at("partition")) << " seed " << s.at("seed").get<std::uint64_t>()
           << " relation " << (s.at("relation_holds").get<bool>() ? "holds" : "FAILS") << '\n';
        print_matrix(os, "X", s.at("X"));
        print_matrix(os, "Y", s.at("Y"));
    }
}

json image_payload(std::size_t n, std::size_t samples, std::uint64_t seed, long bound) {
    SurveyOptions opts;
    opts.samples_per_partition = samples;
    opts.base_seed = seed;
    opts.entry_bound = bound;
    opts.endomorphisms = false;
    json rows = json::array();
    std::size_t best_full = 0;
    for (const auto& a : survey_parallel(partitions(n), opts)) {
        json r = *a.image;
        r["partition"] = a.partition.parts();
        r["seed"] = a.seed;
        r["word_span_dim"] = *a.word_span;
        rows.push_back(std::move(r));
        if (a.partition.is_full_block()) best_full = std::max(best_full, a.image->dim);
    }
    return {{"n", n}, {"bound", dimension_bound(n)}, {"full_block_max_dim", best_full}, {"samples", rows}};
}

void render_image(const json& p, std::ostream& os) {
    os << pad("partition", 14) << pad("seed", 6) << pad("dim", 5) << pad("bound", 7) << pad("r1", 4) << pad("r2", 4)
       << pad("basic", 7) << "loops\n";
    for (const auto& r : p.at("samples")) {
        os << pad(parts_str(r.at("partition")), 14) << pad(std::to_string(r.at("seed").get<std::uint64_t>()), 6)
           << pad(std::to_string(r.at("dim").get<std::size_t>()), 5)
           << pad(std::to_string(r.at("bound").get<std::size_t>()), 7)
           << pad(std::to_string(r.at("r1_distinct_eigenvalues").get<std::size_t>()), 4)
           << pad(std::to_string(r.at("r2_semisimple_dim").get<std::size_t>()), 4)
           << pad(r.at("basic").get<bool>() ? "yes" : "no", 7)
           << (r.at("loops").is_null() ? std::string("-") : std::to_string(r.at("loops").get<std::size_t>())) << '\n';
    }
    os << "bound " << p.at("bound").get<std::size_t>() << ", best full-block dimension "
       << p.at("full_block_max_dim").get<std::size_t>() << '\n';
}

json presentation_payload(std::size_t n, std::uint64_t seed, std::size_t degree, long bound) {
    const Partition full({static_cast<unsigned>(n)});
    const SamplePoint s = sample_point(full, seed, bound);
    const Representation rho(s.x, s.y);
    const Presentation pres = extract_presentation(rho, degree);
    const ImageReport rep = image_report(rho);
    json j = pres;
    j["n"] = n;
    j["seed"] = seed;
    j["image_dim"] = rep.dim;
    j["loops"] = rep.loops ? json(*rep.loops) : json(nullptr);
    j["quotient_dim"] = free_quotient_dim(pres.all_relations(), degree);
    return j;
}

void render_presentation(const json& p, std::ostream& os) {
    os << "full block n = " << p.at("n").get<std::size_t>() << ", seed " << p.at("seed").get<std::uint64_t>()
       << ": u = X - (" << p.at("alpha").get<std::string>() << ")I, v = Y\n";
    os << "image dim " << p.at("image_dim").get<std::size_t>() << ", loops "
       << (p.at("loops").is_null() ? std::string("-") : std::to_string(p.at("loops").get<std::size_t>()))
       << ", truncated quotient dim " << p.at("quotient_dim").get<std::size_t>() << '\n';
    const auto& by_degree = p.at("relations_by_degree");
    for (std::size_t e = 1; e < by_degree.size(); ++e) {
        os << "degree " << e << ": " << by_degree[e].size() << " new relation(s)\n";
        for (const auto& r : by_degree[e]) os << "  " << r.get<std::string>() << " = 0\n";
    }
}

int run(CLI::App& app, int argc, char** argv, std::ostream& out, std::ostream& err) {
    GlobalFlags g;
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "Print JSON instead of tables");
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory");
    app.add_flag("--no-cache", g.no_cache, "Disable the result cache");

    std::size_t n = 0, count = 1, samples = 20, degree = 4, index = 0;
    std::uint64_t seed = 0;
    long entry_bound = 3;
    std::string partition_text, expr, file, alpha_text, beta_text, poly_text;
    std::vector<std::string> compose;
    RunConfig config;

    auto* strata = app.add_subcommand("strata", "Stratum dimensions for every partition of n");
    strata->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);

    auto* solve = app.add_subcommand("solve", "Solve X*J - J*X = J^2 for a Jordan type");
    solve->add_option("--partition", partition_text, "Jordan type, e.g. 3,2,1")->required();

    auto* sample = app.add_subcommand("sample", "Seeded random points of a stratum");
    sample->add_option("--partition", partition_text, "Jordan type, e.g. 3,2,1")->required();
    sample->add_option("--seed", seed, "First seed");
    sample->add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
    sample->add_option("--entry-bound", entry_bound, "Conjugator entry box")->check(CLI::PositiveNumber);

    auto* image = app.add_subcommand("image", "Image-algebra reports for sampled modules");
    image->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
    image->add_option("--samples", samples, "Samples per partition")->check(CLI::PositiveNumber);
    image->add_option("--seed", seed, "First seed");
    image->add_option("--entry-bound", entry_bound, "Conjugator entry box")->check(CLI::PositiveNumber);

    auto* ext = app.add_subcommand("ext", "Ext^1 between simple modules S_alpha, S_beta");
    ext->add_option("--alpha", alpha_text, "Rational alpha")->required();
    ext->add_option("--beta", beta_text, "Rational beta")->required();

    auto* endo = app.add_subcommand("endo", "Endomorphism algebra of a representation file");
    endo->add_option("--file", file, "Representation JSON")->required();
    endo->add_option("--index", index, "Sample index when the file holds a sample list");

    auto* indec = app.add_subcommand("indec", "Absolute indecomposability of a representation file");
    indec->add_option("--file", file, "Representation JSON")->required();
    indec->add_option("--index", index, "Sample index when the file holds a sample list");

    auto* nf = app.add_subcommand("nf", "PBW normal form y^a x^b of an expression");
    nf->add_option("--expr", expr, "Expression in x, y")->required();

    auto* aut = app.add_subcommand("aut", "Check x -> alpha*x + p(y), y -> alpha*y");
    aut->add_option("--alpha", alpha_text, "Nonzero rational alpha")->required();
    aut->add_option("--poly", poly_text, "Polynomial p in y")->required();
    aut->add_option("--compose", compose, "Second automorphism ALPHA POLY, applied first")->expected(2);

    auto* pres = app.add_subcommand("presentation", "Relations of a full-block image algebra");
    pres->add_option("--n", n, "Matrix size")->required()->check(CLI::PositiveNumber);
    pres->add_option("--seed", seed, "Sample seed");
    pres->add_option("--degree", degree, "Degree bound (>= 2)");
    pres->add_option("--entry-bound", entry_bound, "Conjugator entry box")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run every structural check");
    verify->add_option("--max-n", config.max_n, "Largest matrix size")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Base seed");
    verify->add_option("--samples", config.samples_per_stratum, "Samples per stratum")->check(CLI::PositiveNumber);
    verify->add_option("--entry-bound", config.entry_bound, "Conjugator entry box")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Session session(g, out, err);
        if (strata->parsed()) {
            session.emit({"strata", n, "", 0}, true, [&] { return stratum_payload(n); }, render_strata);
        } else if (solve->parsed()) {
            const Partition part = Partition::parse(partition_text);
            session.emit({"solve", part.n(), part.str(), 0}, true, [&] { return solve_payload(part); }, render_solve);
        } else if (sample->parsed()) {
            const Partition part = Partition::parse(partition_text);
            const CacheKey key{"sample:count=" + std::to_string(count) + ":bound=" + std::to_string(entry_bound),
                               part.n(), part.str(), seed};
            session.emit(key, true, [&] { return sample_payload(part, seed, count, entry_bound); }, render_samples);
        } else if (image->parsed()) {
            const CacheKey key{"image:samples=" + std::to_string(samples) + ":bound=" + std::to_string(entry_bound), n,
                               "", seed};
            session.emit(key, true, [&] { return image_payload(n, samples, seed, entry_bound); }, render_image);
        } else if (ext->parsed()) {
            const Rational a = Rational::parse(alpha_text), b = Rational::parse(beta_text);
            session.emit({"ext", 1, "", 0}, false,
                         [&] {
                             const ExtResult r = ext1(simple_module(a), simple_module(b));
                             json basis = json::array();
                             for (const auto& [tx, ty] : r.cocycle_basis) basis.push_back({{"theta_X", tx}, {"theta_Y", ty}});
                             return json{{"alpha", a.str()}, {"beta", b.str()}, {"dim", r.dim},
                                         {"cocycle_dim", r.cocycle_dim}, {"coboundary_dim", r.coboundary_dim},
                                         {"cocycle_basis", basis}};
                         },
                         [](const json& p, std::ostream& os) {
                             os << "Ext^1(S_" << p.at("alpha").get<std::string>() << ", S_"
                                << p.at("beta").get<std::string>() << ") dim " << p.at("dim").get<std::size_t>()
                                << " (cocycles " << p.at("cocycle_dim").get<std::size_t>() << ", coboundaries "
                                << p.at("coboundary_dim").get<std::size_t>() << ")\n";
                         });
        } else if (endo->parsed()) {
            const Representation rho = load_representation(file, index);
            session.emit({"endo", rho.n(), "", 0}, false,
                         [&] {
                             const EndoAlgebra e = endomorphism_algebra(rho);
                             json basis = json::array();
                             for (const auto& b : e.basis) basis.push_back(b);
                             return json{{"n", rho.n()}, {"dim", e.basis.size()}, {"radical_dim", e.radical_basis.size()},
                                         {"semisimple_dim", e.semisimple_dim}, {"basis", basis}};
                         },
                         [](const json& p, std::ostream& os) {
                             os << "End dim " << p.at("dim").get<std::size_t>() << ", radical dim "
                                << p.at("radical_dim").get<std::size_t>() << ", semisimple dim "
                                << p.at("semisimple_dim").get<std::size_t>() << '\n';
                         });
        } else if (indec->parsed()) {
            const Representation rho = load_representation(file, index);
            session.emit({"indec", rho.n(), "", 0}, false,
                         [&] {
                             const Indecomposability c = indecomposability_class(rho);
                             return json{{"class", c.tag()}, {"semisimple_dim", c.semisimple_dim}};
                         },
                         [](const json& p, std::ostream& os) {
                             os << p.at("class").get<std::string>() << " (semisimple_dim "
                                << p.at("semisimple_dim").get<std::size_t>() << ")\n";
                         });
        } else if (nf->parsed()) {
            session.emit({"nf", 0, "", 0}, false,
                         [&] {
                             return json{{"input", expr}, {"normal_form", normal_form(parse_expr(expr)).str()}};
                         },
                         [](const json& p, std::ostream& os) { os << p.at("normal_form").get<std::string>() << '\n'; });
        } else if (aut->parsed()) {
            const AutParams phi{Rational::parse(alpha_text), poly_in_y(poly_text)};
            if (phi.alpha.is_zero()) throw InputError("--alpha must be nonzero");
            std::optional<AutParams> inner;
            if (!compose.empty()) {
                inner = AutParams{Rational::parse(compose[0]), poly_in_y(compose[1])};
                if (inner->alpha.is_zero()) throw InputError("--compose alpha must be nonzero");
            }
            json payload = aut_json(phi);
            const bool is_endo = check_endomorphism(phi.image_x(), phi.image_y());
            const AutParams inv = inverse_aut(phi);
            const bool inverse_ok = compose_aut(phi, inv) == AutParams{1, {}} && compose_aut(inv, phi) == AutParams{1, {}};
            payload["endomorphism"] = is_endo;
            payload["inverse"] = aut_json(inv);
            payload["inverse_verified"] = inverse_ok;
            bool law_ok = true;
            if (inner) {
                const AutParams comp = compose_aut(phi, *inner);
                const AutParams by_substitution = read_aut_params(substitute(inner->image_x(), phi.image_x(), phi.image_y()),
                                                                  substitute(inner->image_y(), phi.image_x(), phi.image_y()));
                law_ok = comp == by_substitution;
                payload["inner"] = aut_json(*inner);
                payload["composite"] = aut_json(comp);
                payload["composite_matches_substitution"] = law_ok;
            }
            session.emit({"aut", 0, "", 0}, false, [&] { return payload; },
                         [](const json& p, std::ostream& os) {
                             os << "x -> " << p.at("x_image").get<std::string>() << ", y -> "
                                << p.at("y_image").get<std::string>() << '\n';
                             os << "endomorphism: " << (p.at("endomorphism").get<bool>() ? "yes" : "NO") << '\n';
                             os << "inverse: x -> " << p.at("inverse").at("x_image").get<std::string>() << ", y -> "
                                << p.at("inverse").at("y_image").get<std::string>()
                                << (p.at("inverse_verified").get<bool>() ? " (verified)" : " (FAILED)") << '\n';
                             if (p.contains("composite"))
                                 os << "composite: x -> " << p.at("composite").at("x_image").get<std::string>()
                                    << ", y -> " << p.at("composite").at("y_image").get<std::string>()
                                    << (p.at("composite_matches_substitution").get<bool>() ? " (matches substitution)"
                                                                                             : " (MISMATCH)")
                                    << '\n';
                         });
            if (!is_endo || !inverse_ok || !law_ok) return 2;
        } else if (pres->parsed()) {
            const CacheKey key{"presentation:degree=" + std::to_string(degree) + ":bound=" + std::to_string(entry_bound),
                               n, std::to_string(n), seed};
            session.emit(key, true, [&] { return presentation_payload(n, seed, degree, entry_bound); },
                         render_presentation);
        } else if (verify->parsed()) {
            config.json = g.json;
            const VerifyReport report = verify_suite(config);
            if (g.json) out << json(report).dump(2) << '\n';
            else print_report(report, out);
            return report.exit_code();
        }
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on representations of the Jordan plane k<x,y>/(xy - yx - y^2)", "jordanrep"};
    return run(app, argc, argv, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage{"jordanrep"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    argv.push_back(nullptr);
    return run_cli(static_cast<int>(storage.size()), argv.data(), out, err);
}

}  // namespace jordanrep
