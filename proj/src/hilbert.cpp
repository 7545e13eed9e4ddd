#include "pmf/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pmf {

mpq_class RatPoly1::operator()(long k) const
{
    mpq_class s = 0;
    for (size_t i = c.size(); i-- > 0;)
        s = s * k + c[i];
    return s;
}

std::string RatPoly1::str() const
{
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        std::string v = c[i].get_str();
        if (!out.empty() && v[0] != '-')
            out += "+";
        if (i == 0)
            out += v;
        else {
            if (c[i] == -1)
                out += "-";
            else if (c[i] != 1)
                out += c[i].get_den() == 1 ? v + "*" : "(" + v + ")*";
            out += i == 1 ? "k" : "k^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// coefficients of prod_{j != i} (k - x_j) / (x_i - x_j)
std::vector<mpq_class> lagrange_basis(const std::vector<long>& x, size_t i)
{
    std::vector<mpq_class> p{1};
    mpq_class den = 1;
    for (size_t j = 0; j < x.size(); ++j) {
        if (j == i)
            continue;
        std::vector<mpq_class> q(p.size() + 1);
        for (size_t a = 0; a < p.size(); ++a) {
            q[a + 1] += p[a];
            q[a] -= p[a] * x[j];
        }
        p = q;
        den *= x[i] - x[j];
    }
    for (auto& v : p)
        v /= den;
    return p;
}

}  // namespace

HilbertFit hilbert_fit(const std::vector<std::pair<long, long>>& points)
{
    if (points.size() < 4)
        throw std::invalid_argument("hilbert_fit: need at least four points");
    std::set<long> seen;
    for (auto& pt : points)
        if (!seen.insert(pt.first).second)
            throw std::invalid_argument("hilbert_fit: repeated k");
    std::vector<long> x;
    for (size_t i = 0; i < 4; ++i)
        x.push_back(points[i].first);
    HilbertFit f;
    f.poly.c.assign(4, 0);
    for (size_t i = 0; i < 4; ++i) {
        auto b = lagrange_basis(x, i);
        for (size_t a = 0; a < 4; ++a)
            f.poly.c[a] += b[a] * points[i].second;
    }
    for (size_t i = 4; i < points.size(); ++i)
        if (f.poly(points[i].first) != points[i].second) {
            f.consistent = false;
            if (f.first_mismatch < 0)
                f.first_mismatch = points[i].first;
        }
    return f;
}

size_t subring_relations(const GradedGB& gb, const std::vector<int>& vars, int k)
{
    const Ring& R = gb.order().ring();
    std::vector<std::vector<std::pair<Mono, uint32_t>>> nfs;
    std::vector<int> ex(R.nvars(), 0);
    // enumerate compositions of k into vars.size() parts
    auto rec = [&](auto&& self, size_t i, int left) -> void {
        if (i + 1 == vars.size()) {
            ex[vars[i]] = left;
            nfs.push_back(gb.normal_form(std::vector<std::pair<Mono, uint32_t>>{{R.make(ex), 1u}}));
            return;
        }
        for (int e = left; e >= 0; --e) {
            ex[vars[i]] = e;
            self(self, i + 1, left - e);
        }
        ex[vars[i]] = 0;
    };
    if (vars.empty())
        return 0;
    rec(rec, 0, k);

    auto gt = [&](const Mono& a, const Mono& b) { return gb.order().greater(a, b); };
    std::vector<Mono> cols;
    for (auto& f : nfs)
        for (auto& t : f)
            cols.push_back(t.first);
    std::sort(cols.begin(), cols.end(), gt);
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    SparseEchelon ech(cols.size(), gb.prime());
    for (auto& f : nfs) {
        std::vector<std::pair<uint32_t, uint32_t>> es;
        for (auto& t : f)
            es.push_back({uint32_t(std::lower_bound(cols.begin(), cols.end(), t.first, gt) - cols.begin()), t.second});
        std::sort(es.begin(), es.end());
        SparseRow row;
        for (auto& [col, v] : es) {
            row.cols.push_back(col);
            row.vals.push_back(v);
        }
        if (!row.cols.empty())
            ech.reduce(row);
    }
    return nfs.size() - ech.rank();
}

bool independent_variables(const GradedGB& gb, const std::vector<int>& vars, int cap)
{
    for (int k = 1; k <= cap; ++k)
        if (subring_relations(gb, vars, k))
            return false;
    return true;
}

}  // namespace pmf
