#include "jordanrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "jordanrep/error.hpp"
#include "jordanrep/freealg.hpp"
#include "jordanrep/imgalg.hpp"
#include "jordanrep/polynomial.hpp"
#include "jordanrep/random.hpp"
#include "jordanrep/repmod.hpp"
#include "jordanrep/strata.hpp"
#include "jordanrep/survey.hpp"

namespace jordanrep {

void validate(const RunConfig& config) {
    if (config.max_n < 1) throw InputError("max_n must be at least 1");
    if (config.samples_per_stratum < 1) throw InputError("samples per stratum must be at least 1");
    if (config.entry_bound < 1) throw InputError("entry bound must be at least 1");
}

bool VerifyReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

std::size_t partition_count(std::size_t n) {
    // ways[m] = partitions of m using parts <= k, accumulated over k.
    std::vector<std::size_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m <= n; ++m) ways[m] += ways[m - k];
    return ways[n];
}

namespace {

using Check = std::function<bool(std::ostringstream&)>;

ClaimResult run_claim(std::string id, std::string title, const Check& check) {
    ClaimResult r{std::move(id), std::move(title), false, {}};
    std::ostringstream witness;
    try {
        r.pass = check(witness);
    } catch (const std::exception& e) {
        witness << (witness.tellp() > 0 ? "; " : "") << "exception: " << e.what();
        r.pass = false;
    }
    r.witness = witness.str();
    return r;
}

enum ClaimSalt : std::uint64_t { kExtSalt = 5, kAutSalt = 6, kCongruenceSalt = 10, kIdealSalt = 11 };

struct SurveyBundle {
    std::map<std::size_t, std::vector<SampleAnalysis>> by_n;
};

SurveyBundle run_surveys(const RunConfig& c, std::size_t lo, std::size_t hi, std::size_t samples, bool image,
                         bool endo) {
    SurveyBundle b;
    SurveyOptions opts;
    opts.samples_per_partition = samples;
    opts.base_seed = c.seed;
    opts.entry_bound = c.entry_bound;
    opts.image = image;
    opts.endomorphisms = endo;
    for (std::size_t n = lo; n <= hi; ++n) b.by_n[n] = survey_parallel(partitions(n), opts);
    return b;
}

}  // namespace

VerifyReport verify_suite(const RunConfig& c) {
    validate(c);
    VerifyReport report;
    const std::size_t max_n = c.max_n;

    report.claims.push_back(run_claim("C1", "component census = partition count", [&](auto& w) {
        bool ok = true;
        w << "rows:";
        for (std::size_t n = 1; n <= max_n; ++n) {
            const auto rows = strata_table_parallel(n).size();
            const auto expected = partition_count(n);
            ok &= rows == expected;
            w << ' ' << rows << (rows == expected ? "" : "(!=" + std::to_string(expected) + ")");
        }
        return ok;
    }));

    report.claims.push_back(run_claim("C2", "every stratum has dimension n^2", [&](auto& w) {
        bool ok = true;
        std::size_t strata = 0;
        for (std::size_t n = 1; n <= max_n; ++n)
            for (const auto& s : strata_table_parallel(n)) {
                ++strata;
                if (s.total_dim != n * n) {
                    ok = false;
                    w << s.partition.str() << " total " << s.total_dim << "; ";
                }
            }
        w << strata << " strata checked, all fibers consistent";
        return ok;
    }));

    report.claims.push_back(run_claim("C3", "fiber dimension = sum min(n_i, n_j)", [&](auto& w) {
        bool ok = true;
        std::size_t strata = 0;
        for (std::size_t n = 1; n <= max_n; ++n)
            for (const auto& s : strata_table_parallel(n)) {
                ++strata;
                const auto formula = centralizer_dim_formula(s.partition);
                if (s.fiber_dim != formula) {
                    ok = false;
                    w << s.partition.str() << ": " << s.fiber_dim << " vs " << formula << "; ";
                }
            }
        w << strata << " strata checked";
        return ok;
    }));

    report.claims.push_back(run_claim("C4", "Y nilpotent and relation exact on samples", [&](auto& w) {
        const auto surveys = run_surveys(c, 1, max_n, 100, false, false);
        std::size_t total = 0, bad = 0;
        for (const auto& [n, results] : surveys.by_n)
            for (const auto& a : results) {
                ++total;
                if (!a.relation_holds || !a.y_nilpotent) ++bad;
            }
        w << total << " samples, " << bad << " failures";
        return bad == 0;
    }));

    report.claims.push_back(run_claim("C5", "Ext^1(S_a, S_b) = 0 for a != b, dim 2 for a = b", [&](auto& w) {
        Rng rng = Rng::keyed({c.seed, kExtSalt});
        std::size_t bad = 0;
        for (int i = 0; i < 20; ++i) {
            const Rational a = rng.rational(20);
            Rational b = rng.rational(20);
            while (b == a) b = rng.rational(20);
            if (ext1(simple_module(a), simple_module(b)).dim != 0) ++bad;
            if (ext1(simple_module(a), simple_module(a)).dim != 2) ++bad;
        }
        w << "40 Ext computations, " << bad << " mismatches";
        return bad == 0;
    }));

    report.claims.push_back(run_claim("C6", "automorphisms x -> ax + p(y), y -> ay form k[y] x| k*", [&](auto& w) {
        Rng rng = Rng::keyed({c.seed, kAutSalt});
        const AutParams identity{1, {}};
        std::size_t endo_bad = 0, inverse_bad = 0, law_bad = 0;
        for (int i = 0; i < 50; ++i) {
            const AutParams phi = random_aut_params(rng, 3, 9);
            if (!check_endomorphism(phi.image_x(), phi.image_y())) ++endo_bad;
            const AutParams inv = inverse_aut(phi);
            if (!check_endomorphism(inv.image_x(), inv.image_y()) || compose_aut(phi, inv) != identity ||
                compose_aut(inv, phi) != identity)
                ++inverse_bad;
        }
        for (int i = 0; i < 20; ++i) {
            const AutParams phi = random_aut_params(rng, 3, 9);
            const AutParams psi = random_aut_params(rng, 3, 9);
            const auto fx = substitute(psi.image_x(), phi.image_x(), phi.image_y());
            const auto fy = substitute(psi.image_y(), phi.image_x(), phi.image_y());
            if (read_aut_params(fx, fy) != compose_aut(phi, psi)) ++law_bad;
        }
        w << "endomorphism failures " << endo_bad << "/50, inverse failures " << inverse_bad
          << "/50, composition mismatches " << law_bad << "/20";
        return endo_bad + inverse_bad + law_bad == 0;
    }));

    // Shared by C7, C9 and C10.
    std::optional<SurveyBundle> image_surveys;
    std::string survey_error;
    try {
        image_surveys = run_surveys(c, 1, max_n, c.samples_per_stratum, true, false);
    } catch (const std::exception& e) {
        survey_error = e.what();
    }
    auto with_surveys = [&](const std::function<bool(std::ostringstream&, const SurveyBundle&)>& f) {
        return [&, f](std::ostringstream& w) {
            if (!image_surveys) {
                w << "survey failed: " << survey_error;
                return false;
            }
            return f(w, *image_surveys);
        };
    };

    report.claims.push_back(run_claim("C7", "image dimension <= bound, attained by the full block",
                                      with_surveys([&](auto& w, const SurveyBundle& s) {
        bool ok = true;
        std::size_t total = 0, over = 0;
        for (const auto& [n, results] : s.by_n) {
            std::size_t best_full = 0;
            for (const auto& a : results) {
                if (!a.image) {
                    ok = false;
                    continue;
                }
                ++total;
                if (!a.image->within_bound) ++over;
                if (a.partition.is_full_block()) best_full = std::max(best_full, a.image->dim);
            }
            const auto bound = dimension_bound(n);
            w << "n=" << n << " max_full=" << best_full << "/" << bound << "; ";
            if (n >= 2 && best_full != bound) ok = false;
        }
        w << total << " samples, " << over << " over the bound";
        return ok && over == 0;
    })));

    report.claims.push_back(run_claim("C8", "full block generically indecomposable, others not", [&](auto& w) {
        const std::size_t hi = std::min<std::size_t>(max_n, 5);
        if (hi < 2) {
            w << "no n in 2..5 within max_n";
            return true;
        }
        const auto surveys = run_surveys(c, 2, hi, 50, false, true);
        bool ok = true;
        for (const auto& [n, results] : surveys.by_n) {
            std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // expected, total
            std::vector<std::string> order;
            for (const auto& a : results) {
                const auto key = a.partition.str();
                if (!tally.count(key)) order.push_back(key);
                auto& t = tally[key];
                ++t.second;
                const bool indecomposable = a.endo && a.endo->absolutely_indecomposable;
                if (a.relation_holds && indecomposable == a.partition.is_full_block()) ++t.first;
            }
            for (const auto& key : order) {
                const auto [good, total] = tally[key];
                const bool pass = good * 10 >= total * 9;
                ok &= pass;
                if (!pass || key.find(',') == std::string::npos)
                    w << "(" << key << ") " << good << "/" << total << (pass ? "; " : " FAIL; ");
            }
        }
        w << "threshold 90%";
        return ok;
    }));

    report.claims.push_back(run_claim("C9", "image algebras are basic (r1 = r2)",
                                      with_surveys([&](auto& w, const SurveyBundle& s) {
        std::size_t total = 0, bad = 0;
        for (const auto& [n, results] : s.by_n)
            for (const auto& a : results) {
                ++total;
                if (!a.image || !a.image->basic) ++bad;
            }
        w << total << " samples, " << bad << " with r1 != r2";
        return bad == 0;
    })));

    report.claims.push_back(run_claim("C10", "oracle equivalences (word span, PBW count, rewriting)",
                                      with_surveys([&](auto& w, const SurveyBundle& s) {
        std::size_t span_bad = 0, total = 0;
        for (const auto& [n, results] : s.by_n)
            for (const auto& a : results) {
                ++total;
                if (!a.image || !a.word_span || *a.word_span != a.image->dim) ++span_bad;
            }
        std::size_t pbw_bad = 0;
        for (std::size_t d = 0; d <= 10; ++d) {
            const auto words = all_words(d);
            const auto count = static_cast<std::size_t>(std::count_if(words.begin(), words.end(), is_pbw));
            if (count != (d + 1) * (d + 2) / 2) ++pbw_bad;
        }
        Rng rng = Rng::keyed({c.seed, kCongruenceSalt});
        std::size_t rewrite_bad = 0;
        for (int i = 0; i < 200; ++i) {
            const auto p = random_nc_polynomial(rng, 3, 3, 5);
            const auto q = random_nc_polynomial(rng, 3, 3, 5);
            const auto r = random_nc_polynomial(rng, 3, 2, 5);
            const auto np = normal_form(p), nq = normal_form(q), nr = normal_form(r);
            if (normal_form(p * q) != normal_form(np * nq)) ++rewrite_bad;
            if (normal_form(normal_form(np * nq) * nr) != normal_form(np * normal_form(nq * nr))) ++rewrite_bad;
        }
        w << "word-span mismatches " << span_bad << "/" << total << ", PBW count failures " << pbw_bad
          << "/11, rewriting failures " << rewrite_bad << "/400";
        return span_bad + pbw_bad + rewrite_bad == 0;
    })));

    report.claims.push_back(run_claim("C11", "quotients by id(y) and id(y, x - a)", [&](auto& w) {
        std::size_t bad = 0;
        for (std::size_t d = 0; d <= 6; ++d)
            if (quotient_dim({NcPolynomial::y()}, d) != d + 1) ++bad;
        Rng rng = Rng::keyed({c.seed, kIdealSalt});
        for (int i = 0; i < 10; ++i) {
            const Rational a = rng.rational(20);
            if (quotient_dim({NcPolynomial::y(), NcPolynomial::x() - NcPolynomial(a)}, 4) != 1) ++bad;
            if (!kernel_ideal_check(a, 4)) ++bad;
        }
        w << bad << " failures over 7 id(y) degrees and 10 simple kernels";
        return bad == 0;
    }));

    return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
    for (const auto& c : report.claims)
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " -- " << c.witness << '\n';
    out << (report.all_pass() ? "all claims pass" : "some claims FAILED") << '\n';
}

void to_json(nlohmann::json& j, const VerifyReport& report) {
    auto claims = nlohmann::json::array();
    for (const auto& c : report.claims)
        claims.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"witness", c.witness}});
    j = {{"claims", claims}, {"all_pass", report.all_pass()}};
}

}  // namespace jordanrep
