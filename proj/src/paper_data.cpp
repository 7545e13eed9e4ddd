#include "pmf/paper.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PMF_DATA_DIR
#define PMF_DATA_DIR "data"
#endif

namespace pmf {

using nlohmann::json;

std::string default_data_dir()
{
    if (const char* e = std::getenv("PMF_DATA_DIR"))
        return e;
    return PMF_DATA_DIR;
}

namespace {

json load(const std::string& dir, const std::string& name, const std::string& schema, PaperData& d)
{
    std::string path = dir + "/" + name;
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open data file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError(path + ": " + e.what());
    }
    if (j.value("schema", "") != schema)
        throw DataError(path + ": expected schema " + schema);
    std::string want = j.value("checksum", "");
    std::string got = "fnv1a64:" + fnv1a64_hex(j.at("payload").dump());
    if (want != got)
        throw DataError(path + ": checksum mismatch (file says " + want + ", payload hashes to " + got + ")");
    d.checksums[name] = got;
    return j.at("payload");
}

int unit_exponent(const std::string& s)
{
    static OrderPtr none = make_order(MonomialOrder::wdegrevlex(make_ring({})));
    CPoly c = parse_cpoly(s, none);
    CycRat v = c.is_zero() ? CycRat(0) : c.lc();
    int k = root_log(v);
    if (k < 0)
        throw DataError("not a sixth root of unity: " + s);
    return k;
}

std::vector<BGen> gens_from(const json& arr, const std::string& what)
{
    std::vector<BGen> out;
    for (auto& g : arr) {
        BGen b;
        auto sigma = g.at("sigma").get<std::vector<int>>();
        auto eps = g.at("eps").get<std::vector<std::string>>();
        if (sigma.size() != 15 || eps.size() != 15)
            throw DataError(what + ": generator must have 15 entries");
        std::vector<char> hit(15, 0);
        for (int i = 0; i < 15; ++i) {
            if (sigma[i] < 1 || sigma[i] > 15 || hit[sigma[i] - 1])
                throw DataError(what + ": sigma is not a permutation of 1..15");
            hit[sigma[i] - 1] = 1;
            b.sigma[i] = sigma[i] - 1;
            b.k[i] = unit_exponent(eps[i]);
        }
        out.push_back(b);
    }
    return out;
}

}  // namespace

PaperData load_paper_data(const std::string& dir)
{
    PaperData d;
    json m = load(dir, "mirrors.json", "pmf.mirrors/1", d);
    if (m.at("model") != "hyp")
        throw DataError("mirrors.json: only the hyperbolic model is supported");
    for (auto& v : m.at("vectors")) {
        auto c = v.at("coords").get<std::vector<std::string>>();
        if (c.size() != 4)
            throw DataError("mirrors.json: vectors have four coordinates");
        d.mirrors.push_back({EisInt::parse(c[0]), EisInt::parse(c[1]), EisInt::parse(c[2]), EisInt::parse(c[3])});
    }
    json t = load(dir, "triples.json", "pmf.triples/1", d);
    for (auto& x : t.at("triples"))
        d.triples.push_back(x.get<std::array<int, 3>>());
    json b = load(dir, "baction.json", "pmf.baction/1", d);
    d.transcribed = gens_from(b.at("transcribed"), "baction.json transcribed");
    d.repaired = gens_from(b.at("repaired"), "baction.json repaired");
    json c = load(dir, "cdefs.json", "pmf.cdefs/1", d);
    for (auto& x : c.at("c"))
        d.cdefs.push_back({x.at("num").get<std::vector<int>>(), x.at("den").get<std::vector<int>>()});
    json s = load(dir, "seeds.json", "pmf.seeds/1", d);
    for (auto& x : s.at("seeds"))
        d.seeds.push_back({x.at("weight").get<int>(), x.at("type").get<std::string>(), x.at("poly").get<std::string>(),
                           x.at("orbit_size").get<int>()});
    json r = load(dir, "relations.json", "pmf.relations/1", d);
    d.binomial_cubics = r.at("binomial_cubics").get<std::vector<std::string>>();
    d.cube_relations = r.at("cube_relations").get<std::vector<std::string>>();
    d.binomial_quartic_seed = r.at("binomial_quartic_seed").get<std::string>();
    for (auto& x : r.at("segre"))
        d.segre.push_back(x.get<std::array<int, 5>>());
    auto& kb = r.at("kbasis");
    d.kbasis.params = kb.at("parameters").get<std::vector<int>>();
    d.kbasis.lex_priority = kb.at("lex_priority").get<std::vector<int>>();
    d.kbasis.polys = kb.at("polys").get<std::vector<std::string>>();
    d.kbasis.lc_product = kb.at("leading_coefficient_product").get<std::string>();
    return d;
}

const Rings& rings()
{
    static const Rings r = [] {
        Rings x;
        x.xy = make_xy_ring(15, 10);
        x.x = make_xy_ring(15);
        x.xy_grevlex = make_order(MonomialOrder::wdegrevlex(x.xy));
        x.x_grevlex = make_order(MonomialOrder::wdegrevlex(x.x));
        return x;
    }();
    return r;
}

QPoly x_to_xy(const QPoly& p)
{
    std::vector<Term<mpq_class>> t(p.terms().begin(), p.terms().end());
    return QPoly::from_terms(rings().xy_grevlex, std::move(t));
}

QPoly xy_to_x(const QPoly& p)
{
    std::vector<Term<mpq_class>> t;
    for (auto& x : p.terms()) {
        for (int j = 15; j < 25; ++j)
            if (x.m.e[j])
                throw std::invalid_argument("xy_to_x: polynomial involves Y");
        t.push_back(x);
    }
    return QPoly::from_terms(rings().x_grevlex, std::move(t));
}

QPoly parse_x(const std::string& s) { return parse_qpoly(s, rings().x_grevlex); }
CPoly parse_xy(const std::string& s) { return parse_cpoly(s, rings().xy_grevlex); }

}  // namespace pmf
