#include "pmf/eis.hpp"
#include "pmf/f4.hpp"
#include "pmf/groups.hpp"
#include "pmf/hilbert.hpp"
#include "pmf/paper.hpp"
#include "pmf/qseries.hpp"
#include "pmf/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

std::vector<long> graded_dims(const std::vector<std::string>& gens, int nx, int ny, int cap, int prime_index)
{
    auto r = pmf::make_xy_ring(nx, ny);
    auto o = pmf::make_order(pmf::MonomialOrder::wdegrevlex(r));
    uint32_t p = pmf::default_primes(size_t(prime_index) + 1).back();
    pmf::GradedGB gb(o, p, cap);
    for (auto& g : gens)
        gb.add_generator(pmf::parse_qpoly(g, o));
    gb.compute(cap);
    std::vector<long> h;
    for (int k = 0; k <= cap; ++k)
        h.push_back(gb.hilbert(k));
    return h;
}

std::string run(const std::string& what, int cap_x, int cap_xy, int qterms, const std::string& cache_dir, bool allow_partial)
{
    pmf::RunConfig cfg;
    cfg.degree_cap_x = cap_x;
    cfg.degree_cap_xy = cap_xy;
    cfg.qterms = qterms;
    cfg.cache_dir = cache_dir;
    cfg.allow_partial = allow_partial;
    pmf::Verifier v(cfg);
    pmf::Report r;
    if (what == "group")
        v.group(r);
    else if (what == "heegner")
        v.heegner(r);
    else if (what == "qseries")
        v.qseries(r);
    else if (what == "relations")
        v.relations(r);
    else if (what == "ideal")
        v.ideal(r);
    else if (what == "verify-all")
        v.all(r);
    else
        throw std::invalid_argument("unknown pipeline " + what);
    return r.to_json(v.config(), v.constants()).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Picard modular forms of level 3: verification kernels";

    m.def("group_orders", [] {
        auto G = pmf::build_group(pmf::group_generators_exact());
        auto S = pmf::build_group(pmf::stab_generators_exact());
        return std::make_pair(G.order(), S.order());
    }, "orders of the images mod 3 of the group and of the cusp stabilizer");

    m.def("cusp_counts", [] {
        auto G = pmf::build_group(pmf::group_generators_exact());
        auto S = pmf::build_group(pmf::stab_generators_exact());
        auto c = pmf::cusp_counts(G, S);
        py::dict d;
        d["cusp_classes"] = c.cusp_classes;
        d["boundary_points"] = c.boundary_points;
        d["orbit_of_e"] = c.orbit_of_e;
        d["stab_prime_order"] = c.stab_prime_order;
        return d;
    });

    m.def("theta_coefficients", [](int n) {
        auto th = pmf::theta_binary(n);
        std::vector<std::string> out;
        for (long k = 0; k <= n; ++k)
            out.push_back(th.coeff(24 * k).get_str());
        return out;
    }, py::arg("n"));

    m.def("theta_identity", [](int n) { return pmf::verify_theta_identity(n).ok; }, py::arg("n") = 200);

    m.def("eis_norm", [](const std::string& s) { return pmf::EisInt::parse(s).norm().get_str(); });

    m.def("graded_dims", &graded_dims, py::arg("generators"), py::arg("nx"), py::arg("ny") = 0, py::arg("cap") = 6,
          py::arg("prime_index") = 0, "dim (R/I)_k for k = 0..cap over Z/p, R weighted with X of weight 1, Y of weight 2");

    m.def("hilbert_fit", [](const std::vector<std::pair<long, long>>& pts) {
        auto f = pmf::hilbert_fit(pts);
        std::vector<std::string> c;
        for (auto& x : f.poly.c)
            c.push_back(x.get_str());
        return py::make_tuple(c, f.consistent);
    });

    m.def("orbit_sizes", [] {
        auto d = pmf::load_paper_data();
        std::vector<pmf::MonomialAction> a;
        for (auto& g : d.repaired)
            a.push_back(*pmf::make_action(g, d).action);
        auto t = pmf::generate_all_orbits(d, a);
        std::vector<size_t> s;
        for (auto& o : t.orbits)
            s.push_back(o.size());
        return s;
    });

    m.def("run", &run, py::arg("what"), py::arg("degree_cap_x") = 10, py::arg("degree_cap_xy") = 6,
          py::arg("qterms") = 200, py::arg("cache_dir") = "", py::arg("allow_partial") = false,
          "run a pipeline and return the report as a JSON string");
}
