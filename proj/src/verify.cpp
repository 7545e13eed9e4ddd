#include "verify_state.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pmf {

using nlohmann::json;

bool json_matches(const json& computed, const json& expected)
{
    if (expected.is_object()) {
        if (!computed.is_object())
            return false;
        for (auto it = expected.begin(); it != expected.end(); ++it)
            if (!computed.contains(it.key()) || !json_matches(computed.at(it.key()), it.value()))
                return false;
        return true;
    }
    return computed == expected;
}

Verifier::Verifier(RunConfig cfg) : s_(std::make_unique<State>())
{
    if (cfg.data_dir.empty())
        cfg.data_dir = default_data_dir();
    s_->cfg = cfg;
    s_->k = Constants::load(cfg.data_dir);
    s_->primes = default_primes(size_t(std::max(cfg.primes, 1)));
}

Verifier::~Verifier() = default;

const RunConfig& Verifier::config() const { return s_->cfg; }
const Constants& Verifier::constants() const { return s_->k; }

const PaperData& Verifier::State::paper()
{
    if (!data)
        data = load_paper_data(cfg.data_dir);
    return *data;
}

const MatGroup& Verifier::State::group()
{
    if (!G)
        G = build_group(group_generators_exact(), cfg.seed);
    return *G;
}

const MatGroup& Verifier::State::stabilizer()
{
    if (!stab)
        stab = build_group(stab_generators_exact(), cfg.seed);
    return *stab;
}

const OrbitTable& Verifier::State::orbit_table()
{
    if (!orbits) {
        action.clear();
        for (auto& g : paper().repaired) {
            auto b = make_action(g, paper());
            if (!b.action)
                throw std::runtime_error("repaired action table: " + b.error);
            action.push_back(*b.action);
        }
        orbits = generate_all_orbits(paper(), action);
    }
    return *orbits;
}

const Ideals& Verifier::State::ideal_gens()
{
    if (!ideals)
        ideals = build_ideals(orbit_table());
    return *ideals;
}

int Verifier::State::ihat_degree() const { return std::max(cfg.degree_cap_x, 9); }
int Verifier::State::j_degree() const { return cfg.degree_cap_xy + 1; }

namespace {

constexpr int kSaturationDegree = 9;

std::string cache_file(const std::string& dir, uint32_t p)
{
    return dir + "/ihat-saturation-" + std::to_string(p) + ".txt";
}

}  // namespace

ModularIdeal& Verifier::State::ihat_at(size_t i)
{
    while (ihat.size() <= i) {
        uint32_t p = primes[ihat.size()];
        auto& gens = ideal_gens().Ihat;
        ModularIdeal m;
        bool loaded = false;
        if (!cfg.cache_dir.empty()) {
            std::ifstream in(cache_file(cfg.cache_dir, p));
            if (in) {
                std::stringstream ss;
                ss << in.rdbuf();
                loaded = saturation_from_string(ss.str(), gens, rings().x_grevlex, m) && m.p == p &&
                         m.truncation == kSaturationDegree;
                if (!loaded)
                    warnings.push_back("cache entry " + cache_file(cfg.cache_dir, p) + " is unusable; rebuilding");
            }
        }
        if (!loaded) {
            m = saturate_by_variables(gens, rings().x_grevlex, p, kSaturationDegree);
            if (!cfg.cache_dir.empty()) {
                std::filesystem::create_directories(cfg.cache_dir);
                std::ofstream out(cache_file(cfg.cache_dir, p));
                out << saturation_to_string(m);
            }
        }
        ihat.push_back(std::move(m));
    }
    return ihat[i];
}

GradedGB& Verifier::State::j_at(size_t i, int degree)
{
    while (jbasis.size() <= i) {
        auto gb = std::make_unique<GradedGB>(rings().xy_grevlex, primes[jbasis.size()], j_degree());
        for (auto& f : ideal_gens().J)
            gb->add_generator(f);
        jbasis.push_back(std::move(gb));
    }
    jbasis[i]->compute(degree);
    return *jbasis[i];
}

Check Verifier::State::record(const std::string& id, int criterion, json computed, bool ok, std::string note) const
{
    Check c;
    c.id = id;
    c.criterion = criterion;
    c.location = k.location(id);
    c.expected = k.expected(id);
    c.computed = std::move(computed);
    c.status = ok ? Status::Pass : Status::Fail;
    c.note = std::move(note);
    return c;
}

void Verifier::not_recomputed(Report& r)
{
    for (auto id : {"virtual-weights", "cusp-form-dimensions", "multiplier-values", "primality"}) {
        Check c = s_->record(id, 0, nullptr, false);
        c.status = Status::NotRecomputed;
        r.add(std::move(c));
    }
}

void Verifier::all(Report& r)
{
    group(r);
    heegner(r);
    qseries(r);
    relations(r);
    ideal(r);
    properties(r);
    not_recomputed(r);
    for (auto& w : s_->warnings)
        std::cerr << "warning: " << w << "\n";
}

}  // namespace pmf
