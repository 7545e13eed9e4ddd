#include "pmf/linalg.hpp"
#include "verify_state.hpp"

#include <algorithm>
#include <set>

namespace pmf {

using nlohmann::json;

namespace {

std::set<std::array<int, 3>> sorted_triples(const std::vector<std::array<int, 3>>& ts)
{
    std::set<std::array<int, 3>> out;
    for (auto t : ts) {
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

// the mirror permutation induced by a permutation of the triples, if any
std::optional<std::vector<int>> induced_mirror_perm(const std::vector<std::array<int, 3>>& triples,
                                                    const std::array<int, 15>& sigma)
{
    std::vector<std::set<int>> through(15);
    for (int i = 0; i < 15; ++i)
        for (int m : triples[i])
            through[m - 1].insert(i);
    std::vector<int> img(15, -1);
    for (int m = 0; m < 15; ++m) {
        std::set<int> t;
        for (int i : through[m])
            t.insert(sigma[i]);
        for (int m2 = 0; m2 < 15; ++m2)
            if (through[m2] == t)
                img[m] = m2;
        if (img[m] < 0)
            return std::nullopt;
    }
    return img;
}

std::string key(const QPoly& p) { return primitive_normalize(p).str(); }

}  // namespace

void Verifier::relations(Report& r)
{
    auto& s = *s_;
    const PaperData& d = s.paper();
    {
        Stopwatch w;
        bool norms = true;
        std::set<std::array<int, 4>> classes;
        for (auto& m : d.mirrors) {
            norms = norms && herm_norm(Model::Hyp, m) == -1;
            auto v = reduce_sqrt3(m);
            auto n = v;
            for (auto& x : n)
                x = (3 - x) % 3;
            classes.insert(std::min(v, n));
        }
        json c = {{"count", d.mirrors.size()}, {"norms_minus_one", norms}, {"distinct_classes_mod_sqrt3", classes.size()}};
        Check k = s.record("mirror-table", 0, c, json_matches(c, s.k.expected("mirror-table")));
        k.seconds = w.seconds();
        r.add(std::move(k));
    }
    {
        Stopwatch w;
        auto found = orthogonal_triples(Model::Hyp, d.mirrors);
        bool same = sorted_triples(found) == sorted_triples(d.triples);
        auto inc = vanishing_pattern(d.mirrors, d.triples);
        json zeros = json::array();
        bool six = true;
        for (auto& row : inc) {
            int z = int(std::count(row.begin(), row.end(), 1));
            zeros.push_back(z);
            six = six && z == 6;
        }
        json c = {{"triples", found.size()},
                  {"equal_to_table", same},
                  {"boundary_points", inc.empty() ? 0 : inc[0].size()},
                  {"zeros_per_form", zeros},
                  {"each_vanishes_at_6", six}};
        Check k = s.record("orthogonal-triples", 7, c, json_matches(c, s.k.expected("orthogonal-triples")));
        k.seconds = w.seconds();
        r.add(std::move(k));
    }
    {
        Stopwatch w;
        json per = json::array();
        bool all_clean = true;
        for (auto* set : {&d.transcribed, &d.repaired}) {
            json g = json::array();
            for (auto& b : *set) {
                auto a = make_action(b, d);
                json broken = a.broken_binomials;
                for (auto& x : broken)
                    x = x.get<int>() + 1;
                g.push_back({{"broken_binomials", broken}, {"error", a.error}});
                if (set == &d.transcribed)
                    all_clean = all_clean && a.broken_binomials.empty() && a.error.empty();
            }
            per.push_back(g);
        }
        json changed = json::array();
        for (size_t i = 0; i < d.transcribed.size() && i < d.repaired.size(); ++i) {
            json pos = json::array();
            for (int j = 0; j < 15; ++j)
                if (d.transcribed[i].k[j] != d.repaired[i].k[j] || d.transcribed[i].sigma[j] != d.repaired[i].sigma[j])
                    pos.push_back(j + 1);
            changed.push_back(pos);
        }
        json c = {{"transcribed_preserves_binomial_cubics", all_clean},
                  {"transcribed", per[0]},
                  {"repaired", per[1]},
                  {"repaired_positions", changed}};
        Check k = s.record("action-table", 0, c, all_clean,
                           all_clean ? "" : "the transcribed table does not preserve the binomial cubic relations");
        k.seconds = w.seconds();
        r.add(std::move(k));
    }
    {
        Stopwatch w;
        s.orbit_table();
        PermTraits::n = 15;
        std::vector<Perm> gens;
        bool setwise = true;
        json mirror_perms = json::array();
        for (auto& a : s.action) {
            Perm p;
            for (int i : a.sigma)
                p.img.push_back(uint16_t(i));
            gens.push_back(p);
            auto m = induced_mirror_perm(d.triples, a.sigma);
            setwise = setwise && m.has_value();
            if (m) {
                for (auto& x : *m)
                    ++x;
                mirror_perms.push_back(*m);
            }
        }
        Bsgs<PermTraits> P(15, gens, {}, s.cfg.seed);
        auto orb = P.orbit_of(0);
        json c = {{"order", P.order()},
                  {"transitive", orb.size() == 15},
                  {"triples_permuted", setwise},
                  {"mirror_permutations", mirror_perms}};
        Check k = s.record("action-group", 0, c, json_matches(c, s.k.expected("action-group")));
        k.seconds = w.seconds();
        r.add(std::move(k));
    }
    {
        Stopwatch w;
        const OrbitTable& t = s.orbit_table();
        json sizes = json::array(), expect_sizes = json::array();
        bool rational = true, closed = true, capped = false;
        for (size_t i = 0; i < t.orbits.size(); ++i) {
            sizes.push_back(t.orbits[i].size());
            expect_sizes.push_back(t.seeds[i].orbit_size);
            rational = rational && t.orbits[i].all_rational;
            closed = closed && orbit_closed(t.orbits[i], s.action);
            capped = capped || t.orbits[i].capped;
        }
        // binomial cubics against the weight 3 type I orbit
        std::set<std::string> w3i, w3ii;
        for (auto& m : t.get(3, "I").rational)
            w3i.insert(key(m));
        for (auto& m : t.get(3, "II").rational)
            w3ii.insert(key(m));
        std::set<std::string> binom;
        for (auto& b : d.binomial_cubics)
            binom.insert(key(x_to_xy(parse_x(b))));
        int cubes_found = 0;
        for (auto& c : d.cube_relations)
            cubes_found += w3ii.count(key(x_to_xy(parse_x(c))));

        // linear span of the weight 3 type II orbit versus the cube relations
        std::vector<Mono> cols;
        auto span_rank = [&](const std::vector<QPoly>& ps) {
            std::vector<std::vector<mpq_class>> rows;
            for (auto& p : ps) {
                std::vector<mpq_class> row(cols.size());
                for (auto& x : p.terms()) {
                    auto it = std::find(cols.begin(), cols.end(), x.m);
                    if (it == cols.end()) {
                        cols.push_back(x.m);
                        for (auto& rr : rows)
                            rr.push_back(0);
                        row.push_back(x.c);
                    } else {
                        row[it - cols.begin()] = x.c;
                    }
                }
                row.resize(cols.size());
                rows.push_back(row);
            }
            for (auto& rr : rows)
                rr.resize(cols.size());
            return pmf::rank(rows);
        };
        std::vector<QPoly> orbit_ii = t.get(3, "II").rational, cubes, both;
        for (auto& c : d.cube_relations)
            cubes.push_back(x_to_xy(parse_x(c)));
        both = orbit_ii;
        both.insert(both.end(), cubes.begin(), cubes.end());
        size_t r_orbit = span_rank(orbit_ii), r_cubes = span_rank(cubes), r_both = span_rank(both);

        json c = {{"orbit_sizes", sizes},
                  {"all_rational", rational},
                  {"closed", closed},
                  {"capped", capped},
                  {"binomial_cubics_equal_orbit", binom == w3i},
                  {"cube_relations_in_orbit", cubes_found},
                  {"cube_relations_total", d.cube_relations.size()},
                  {"orbit_span_rank", r_orbit},
                  {"cube_span_rank", r_cubes},
                  {"joint_span_rank", r_both}};
        json e = s.k.expected("relation-orbits");
        bool ok = json_matches(c, e) && sizes == json(expect_sizes);
        std::string note;
        if (sizes != e.at("orbit_sizes"))
            note = "orbit sizes differ from the table";
        Check k = s.record("relation-orbits", 8, c, ok, note);
        k.seconds = w.seconds();
        r.add(std::move(k));
    }
}

}  // namespace pmf
