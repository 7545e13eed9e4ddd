#include "pmf/groebner.hpp"
#include "pmf/paper.hpp"
#include "pmf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void print_summary(const pmf::Report& r)
{
    for (auto& c : r.checks()) {
        std::cout << pmf::status_name(c.status) << "  " << c.id;
        if (c.criterion)
            std::cout << " [" << c.criterion << "]";
        if (!c.note.empty())
            std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
}

int write_report(const pmf::Report& r, const pmf::Verifier& v)
{
    const auto& cfg = v.config();
    if (cfg.report_path.empty())
        return 0;
    std::ofstream out(cfg.report_path);
    if (!out) {
        std::cerr << "cannot write " << cfg.report_path << "\n";
        return 1;
    }
    out << r.to_json(cfg, v.constants()).dump(2) << "\n";
    std::ofstream t(cfg.report_path + ".timings.json");
    t << r.timings().dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verification toolkit for the ring of Picard modular forms of level 3"};
    app.require_subcommand(1);
    pmf::RunConfig cfg;

    auto common = [&](CLI::App* s) {
        s->add_option("--degree-cap-x", cfg.degree_cap_x, "degree cap for the X-only quotient")->capture_default_str();
        s->add_option("--degree-cap-xy", cfg.degree_cap_xy, "weight cap for the X,Y quotient")->capture_default_str();
        s->add_option("--qterms,--terms", cfg.qterms, "number of q-series coefficients")->capture_default_str();
        s->add_option("--primes", cfg.primes, "number of primes for modular computations")->capture_default_str();
        s->add_option("--cache-dir", cfg.cache_dir, "directory for cached saturation data");
        s->add_option("--report", cfg.report_path, "write the JSON report here");
        s->add_option("--seed", cfg.seed, "seed for randomized steps")->capture_default_str();
        s->add_option("--data-dir", cfg.data_dir, "directory with the data tables");
        s->add_flag("--allow-partial", cfg.allow_partial, "accept caps below the required minima");
        s->add_flag("--stretch-degree9", cfg.stretch_degree9, "also check the degree 9 element directly");
    };
    std::vector<std::pair<CLI::App*, void (pmf::Verifier::*)(pmf::Report&)>> subs = {
        {app.add_subcommand("group", "group orders, cusps and the Stab' matrix"), &pmf::Verifier::group},
        {app.add_subcommand("heegner", "generators, level sqrt(-3) and the discriminant form"), &pmf::Verifier::heegner},
        {app.add_subcommand("qseries", "theta and eta identities"), &pmf::Verifier::qseries},
        {app.add_subcommand("relations", "mirror table, triples, action and relation orbits"), &pmf::Verifier::relations},
        {app.add_subcommand("ideal", "dimensions, lex basis, Segre cubic and colon"), &pmf::Verifier::ideal},
        {app.add_subcommand("verify-all", "everything, including property suites"), &pmf::Verifier::all},
    };
    for (auto& [s, f] : subs)
        common(s);
    CLI11_PARSE(app, argc, argv);

    if (!cfg.allow_partial) {
        if (cfg.degree_cap_x < pmf::RunConfig::min_cap_x || cfg.degree_cap_xy < pmf::RunConfig::min_cap_xy ||
            cfg.qterms < pmf::RunConfig::min_qterms)
            std::cerr << "note: a cap is below the required minimum; affected records are PARTIAL\n";
    }

    try {
        pmf::Verifier v(cfg);
        pmf::Report r;
        for (auto& [s, f] : subs)
            if (s->parsed())
                (v.*f)(r);
        print_summary(r);
        if (int e = write_report(r, v))
            return e;
        return r.exit_code(cfg.allow_partial);
    } catch (const pmf::ResourceExceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
