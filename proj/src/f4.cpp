#include "pmf/f4.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace pmf {

uint32_t MonoTable::id(const Mono& m)
{
    auto [it, fresh] = idx_.try_emplace(m, uint32_t(monos_.size()));
    if (fresh) {
        monos_.push_back(m);
        masks_.push_back(divmask(m));
    }
    return it->second;
}

std::optional<uint32_t> MonoTable::find(const Mono& m) const
{
    auto it = idx_.find(m);
    if (it == idx_.end())
        return std::nullopt;
    return it->second;
}

SparseEchelon::SparseEchelon(size_t ncols, uint32_t p)
    : p_(p), p2_(uint64_t(p) * p), piv_(ncols, -1), acc_(ncols, 0), bits_((ncols + 63) / 64, 0)
{
}

void SparseEchelon::insert_pivot(SparseRow row)
{
    if (row.cols.empty())
        return;
    if (piv_[row.cols[0]] >= 0)
        throw std::logic_error("SparseEchelon: pivot column already taken");
    if (row.vals[0] != 1) {
        uint64_t inv = invmod(row.vals[0], p_);
        for (auto& v : row.vals)
            v = uint32_t(v * inv % p_);
    }
    piv_[row.cols[0]] = int32_t(rows_.size());
    nnz_ += row.cols.size();
    rows_.push_back(std::move(row));
}

SparseRow SparseEchelon::reduce(const SparseRow& row, bool insert)
{
    SparseRow out;
    if (row.cols.empty())
        return out;
    size_t hi = 0;
    for (size_t k = 0; k < row.cols.size(); ++k) {
        uint32_t c = row.cols[k];
        acc_[c] = row.vals[k] % p_;
        bits_[c >> 6] |= 1ull << (c & 63);
        hi = std::max<size_t>(hi, c >> 6);
    }
    for (size_t w = row.cols[0] >> 6; w <= hi; ++w) {
        while (bits_[w]) {
            uint32_t c = uint32_t(w * 64 + __builtin_ctzll(bits_[w]));
            bits_[w] &= bits_[w] - 1;
            uint64_t v = acc_[c] % p_;
            acc_[c] = 0;
            if (!v)
                continue;
            int32_t pr = piv_[c];
            if (pr < 0) {
                out.cols.push_back(c);
                out.vals.push_back(uint32_t(v));
                continue;
            }
            uint64_t f = p_ - v;
            const SparseRow& R = rows_[pr];
            const uint32_t* rc = R.cols.data();
            const uint32_t* rv = R.vals.data();
            size_t n = R.cols.size();
            for (size_t k = 1; k < n; ++k) {
                uint32_t cc = rc[k];
                uint64_t t = acc_[cc] + f * rv[k];
                acc_[cc] = t >= p2_ ? t - p2_ : t;
                bits_[cc >> 6] |= 1ull << (cc & 63);
            }
            if (n > 1)
                hi = std::max<size_t>(hi, rc[n - 1] >> 6);
        }
    }
    if (!out.cols.empty()) {
        uint64_t inv = invmod(out.vals[0], p_);
        for (auto& v : out.vals)
            v = uint32_t(v * inv % p_);
        if (insert)
            insert_pivot(out);
    }
    return out;
}

GradedGB::GradedGB(OrderPtr order, uint32_t p, int horizon)
    : ord_(std::move(order)), p_(p), horizon_(horizon), pairs_(ord_->ring())
{
    if (ord_->kind() != MonomialOrder::Kind::WDegRevLex)
        throw std::invalid_argument("GradedGB: needs a degree-compatible order");
    tab_.id(Mono{});
}

ModPoly GradedGB::to_modpoly(std::vector<std::pair<Mono, uint32_t>> terms)
{
    const MonomialOrder& o = *ord_;
    std::sort(terms.begin(), terms.end(), [&](auto& a, auto& b) { return o.cmp(a.first, b.first) > 0; });
    ModPoly f;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (k && terms[k].first == terms[k - 1].first) {
            uint64_t s = uint64_t(f.cf.back()) + terms[k].second;
            f.cf.back() = uint32_t(s % p_);
            if (!f.cf.back()) {
                f.cf.pop_back();
                f.mon.pop_back();
            }
            continue;
        }
        if (terms[k].second % p_ == 0)
            continue;
        f.mon.push_back(tab_.id(terms[k].first));
        f.cf.push_back(terms[k].second % p_);
    }
    if (!f.mon.empty()) {
        f.deg = tab_.at(f.mon[0]).deg;
        for (uint32_t m : f.mon)
            if (tab_.at(m).deg != f.deg)
                throw std::invalid_argument("GradedGB: generator is not homogeneous");
    }
    return f;
}

void GradedGB::add_generator(const QPoly& f)
{
    std::vector<std::pair<Mono, uint32_t>> t;
    for (auto& x : f.terms())
        t.push_back({x.m, reduce_mod(x.c, p_)});
    add_generator(t);
}

void GradedGB::add_generator(const std::vector<std::pair<Mono, uint32_t>>& terms)
{
    ModPoly f = to_modpoly(terms);
    if (f.empty())
        return;
    if (f.deg <= done_)
        throw std::logic_error("GradedGB: generator added below the computed degree");
    inputs_[f.deg].push_back(std::move(f));
}

int GradedGB::find_reducer(const Mono& m, uint64_t mask) const
{
    const Ring& r = ord_->ring();
    for (int g : pairs_.active()) {
        uint32_t l = elems_[g].mon[0];
        if (!(tab_.mask(l) & ~mask) && r.divides(tab_.at(l), m))
            return g;
    }
    return -1;
}

void GradedGB::compute(int degree)
{
    if (degree > horizon_)
        throw std::invalid_argument("GradedGB: degree beyond the horizon");
    for (int d = done_ + 1; d <= degree; ++d) {
        process_degree(d);
        done_ = d;
    }
}

void GradedGB::process_degree(int d)
{
    auto t0 = std::chrono::steady_clock::now();
    const Ring& r = ord_->ring();
    const MonomialOrder& o = *ord_;
    DegreeStats st;
    st.degree = d;

    std::vector<CritPair> pairs;
    if (!pairs_.empty() && pairs_.min_degree() == d)
        pairs = pairs_.pop_min_degree();
    st.pairs = pairs.size();
    std::vector<ModPoly> inputs;
    if (auto it = inputs_.find(d); it != inputs_.end()) {
        inputs = std::move(it->second);
        inputs_.erase(it);
    }
    st.inputs = inputs.size();

    std::vector<uint32_t> new_lms;
    if (!pairs.empty() || !inputs.empty()) {
        const uint32_t stamp = uint32_t(d + 1);
        auto grow = [&]() {
            if (stamp_.size() < tab_.size()) {
                stamp_.resize(tab_.size() * 2, 0);
                slot_.resize(tab_.size() * 2, -1);
            }
        };
        std::vector<uint32_t> todo;
        auto touch = [&](uint32_t id) {
            grow();
            if (stamp_[id] != stamp) {
                stamp_[id] = stamp;
                slot_[id] = -1;
                todo.push_back(id);
            }
        };

        struct MRow {
            std::vector<uint32_t> mon;
            const std::vector<uint32_t>* cf;
        };
        std::vector<MRow> piv_rows, red_rows;
        auto product = [&](int g, const Mono& mult) {
            MRow row;
            row.cf = &elems_[g].cf;
            row.mon.reserve(elems_[g].mon.size());
            for (uint32_t m : elems_[g].mon)
                row.mon.push_back(tab_.id(r.mul(mult, tab_.at(m))));
            return row;
        };

        std::unordered_set<uint64_t> made;
        for (auto& cp : pairs) {
            for (int g : {cp.i, cp.j}) {
                uint32_t L = tab_.id(cp.lcm);
                uint64_t key = (uint64_t(g) << 32) | L;
                if (!made.insert(key).second)
                    continue;
                MRow row = product(g, r.div(cp.lcm, tab_.at(elems_[g].mon[0])));
                touch(L);
                if (slot_[L] < 0) {
                    slot_[L] = int32_t(piv_rows.size());
                    for (uint32_t m : row.mon)
                        touch(m);
                    piv_rows.push_back(std::move(row));
                } else {
                    for (uint32_t m : row.mon)
                        touch(m);
                    red_rows.push_back(std::move(row));
                }
            }
        }
        for (auto& f : inputs) {
            MRow row{f.mon, &f.cf};
            for (uint32_t m : row.mon)
                touch(m);
            red_rows.push_back(std::move(row));
        }
        // symbolic preprocessing
        for (size_t k = 0; k < todo.size(); ++k) {
            uint32_t id = todo[k];
            if (slot_[id] >= 0)
                continue;
            const Mono& m = tab_.at(id);
            int g = find_reducer(m, tab_.mask(id));
            if (g < 0)
                continue;
            MRow row = product(g, r.div(m, tab_.at(elems_[g].mon[0])));
            slot_[id] = int32_t(piv_rows.size());
            for (uint32_t x : row.mon)
                touch(x);
            piv_rows.push_back(std::move(row));
        }
        // columns in decreasing monomial order
        std::vector<uint32_t> cols = todo;
        std::sort(cols.begin(), cols.end(), [&](uint32_t a, uint32_t b) { return o.cmp(tab_.at(a), tab_.at(b)) > 0; });
        for (size_t c = 0; c < cols.size(); ++c)
            slot_[cols[c]] = int32_t(c);
        st.cols = cols.size();
        st.rows = piv_rows.size() + red_rows.size();

        SparseEchelon E(cols.size(), p_);
        auto convert = [&](const MRow& row) {
            SparseRow s;
            s.cols.reserve(row.mon.size());
            for (uint32_t m : row.mon)
                s.cols.push_back(uint32_t(slot_[m]));
            s.vals = *row.cf;
            return s;
        };
        for (auto& row : piv_rows)
            E.insert_pivot(convert(row));
        piv_rows.clear();
        piv_rows.shrink_to_fit();
        std::vector<SparseRow> red;
        red.reserve(red_rows.size());
        for (auto& row : red_rows)
            red.push_back(convert(row));
        red_rows.clear();
        std::sort(red.begin(), red.end(), [](const SparseRow& a, const SparseRow& b) {
            if (a.cols[0] != b.cols[0])
                return a.cols[0] < b.cols[0];
            return a.cols.size() < b.cols.size();
        });
        size_t count = 0;
        for (auto& row : red) {
            if ((++count & 255) == 0) {
                double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (el > limit_)
                    throw ResourceExceeded("GradedGB: time limit in degree " + std::to_string(d));
            }
            SparseRow out = E.reduce(row, true);
            if (out.cols.empty())
                continue;
            ModPoly h;
            h.deg = d;
            h.cf = std::move(out.vals);
            h.mon.reserve(out.cols.size());
            for (uint32_t c : out.cols)
                h.mon.push_back(cols[c]);
            elems_.push_back(std::move(h));
            int idx = int(elems_.size() - 1);
            uint32_t lm = elems_.back().mon[0];
            new_lms.push_back(lm);
            pairs_.insert(idx, tab_.at(lm), horizon_);
        }
        st.nonzeros = E.nonzeros();
        st.new_elements = new_lms.size();
    }
    update_standard(d, new_lms);
    st.standard = long(std_[d].size());
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    stats_.push_back(st);
}

void GradedGB::update_standard(int d, const std::vector<uint32_t>& new_lms)
{
    const Ring& r = ord_->ring();
    if (int(std_.size()) <= d)
        std_.resize(d + 1);
    std::unordered_set<uint32_t> lms(new_lms.begin(), new_lms.end());
    if (d == 0) {
        uint32_t one = tab_.id(Mono{});
        if (!lms.count(one))
            std_[0].push_back(one);
        return;
    }
    std::vector<char> is_std;
    auto std_lookup = [&](int deg) {
        std::unordered_set<uint32_t> s;
        if (deg >= 0 && deg < int(std_.size()))
            s.insert(std_[deg].begin(), std_[deg].end());
        return s;
    };
    std::vector<std::unordered_set<uint32_t>> lower(r.nvars());
    std::map<int, std::unordered_set<uint32_t>> by_deg;
    for (int i = 0; i < r.nvars(); ++i) {
        int w = r.weight(i);
        if (d - w >= 0 && !by_deg.count(d - w))
            by_deg[d - w] = std_lookup(d - w);
    }
    std::unordered_set<uint32_t> seen;
    std::vector<uint32_t> out;
    for (int i = 0; i < r.nvars(); ++i) {
        int w = r.weight(i);
        if (d - w < 0)
            continue;
        for (uint32_t s : std_[d - w]) {
            Mono m = r.mul(tab_.at(s), r.var(i));
            uint32_t id = tab_.id(m);
            if (!seen.insert(id).second)
                continue;
            bool ok = !lms.count(id);
            for (int j = 0; ok && j < r.nvars(); ++j) {
                if (!m.e[j] || j == i)
                    continue;
                Mono q = m;
                q.e[j]--;
                q.deg = uint16_t(q.deg - r.weight(j));
                auto f = tab_.find(q);
                ok = f && by_deg[q.deg].count(*f);
            }
            if (ok)
                out.push_back(id);
        }
    }
    std::sort(out.begin(), out.end());
    std_[d] = std::move(out);
}

long GradedGB::hilbert(int d) const
{
    if (d > done_)
        throw std::logic_error("GradedGB::hilbert: degree not computed");
    return long(std_[d].size());
}

const std::vector<uint32_t>& GradedGB::standard_ids(int d) const
{
    if (d > done_)
        throw std::logic_error("GradedGB::standard_ids: degree not computed");
    return std_[d];
}

std::vector<Mono> GradedGB::leading_monomials() const
{
    std::vector<Mono> out;
    for (auto& e : elems_)
        out.push_back(tab_.at(e.mon[0]));
    return out;
}

std::vector<std::vector<std::pair<Mono, uint32_t>>> GradedGB::basis_polys() const
{
    std::vector<std::vector<std::pair<Mono, uint32_t>>> out;
    for (auto& e : elems_) {
        std::vector<std::pair<Mono, uint32_t>> t;
        for (size_t i = 0; i < e.mon.size(); ++i)
            t.push_back({tab_.at(e.mon[i]), e.cf[i]});
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::pair<Mono, uint32_t>> GradedGB::normal_form(const QPoly& f) const
{
    std::vector<std::pair<Mono, uint32_t>> t;
    for (auto& x : f.terms())
        t.push_back({x.m, reduce_mod(x.c, p_)});
    return normal_form(std::move(t));
}

std::vector<std::pair<Mono, uint32_t>> GradedGB::normal_form(std::vector<std::pair<Mono, uint32_t>> f) const
{
    const Ring& r = ord_->ring();
    const MonomialOrder& o = *ord_;
    auto cmp = [&](const Mono& a, const Mono& b) { return o.cmp(a, b) > 0; };
    std::map<Mono, uint64_t, decltype(cmp)> rem(cmp);
    for (auto& [m, c] : f) {
        if (m.deg > done_)
            throw std::logic_error("GradedGB::normal_form: degree not computed");
        uint64_t& x = rem[m];
        x = (x + c) % p_;
    }
    std::vector<std::pair<Mono, uint32_t>> out;
    while (!rem.empty()) {
        auto it = rem.begin();
        Mono m = it->first;
        uint64_t c = it->second % p_;
        rem.erase(it);
        if (!c)
            continue;
        int g = find_reducer(m, divmask(m));
        if (g < 0) {
            out.push_back({m, uint32_t(c)});
            continue;
        }
        const ModPoly& e = elems_[g];
        Mono mult = r.div(m, tab_.at(e.mon[0]));
        uint64_t fct = p_ - c;
        for (size_t k = 1; k < e.mon.size(); ++k) {
            Mono t = r.mul(mult, tab_.at(e.mon[k]));
            uint64_t& x = rem[t];
            x = (x + fct * e.cf[k]) % p_;
        }
    }
    return out;
}

MacaulayResult macaulay_rank(const std::vector<QPoly>& gens, int k, uint32_t p, const OrderPtr& order)
{
    const Ring& r = order->ring();
    const MonomialOrder& o = *order;
    std::vector<Mono> cols = r.monomials_of_degree(k);
    std::sort(cols.begin(), cols.end(), [&](const Mono& a, const Mono& b) { return o.cmp(a, b) > 0; });
    std::unordered_map<Mono, uint32_t, MonoHash> col;
    for (size_t c = 0; c < cols.size(); ++c)
        col[cols[c]] = uint32_t(c);
    SparseEchelon E(cols.size(), p);
    MacaulayResult res;
    res.cols = cols.size();
    for (auto& g0 : gens) {
        if (g0.is_zero() || g0.degree() > k)
            continue;
        QPoly g = g0.with_order(order);
        std::vector<uint32_t> cf;
        for (auto& t : g.terms())
            cf.push_back(reduce_mod(t.c, p));
        for (auto& m : r.monomials_of_degree(k - g.degree())) {
            SparseRow row;
            row.vals = cf;
            for (auto& t : g.terms())
                row.cols.push_back(col.at(r.mul(m, t.m)));
            ++res.rows;
            E.reduce(row, true);
        }
    }
    res.rank = E.rank();
    return res;
}

bool macaulay_member(const std::vector<QPoly>& gens, const QPoly& f, uint32_t p, const OrderPtr& order)
{
    if (f.is_zero())
        return true;
    int k = f.degree();
    auto a = macaulay_rank(gens, k, p, order);
    std::vector<QPoly> g2 = gens;
    g2.push_back(f);
    auto b = macaulay_rank(g2, k, p, order);
    return a.rank == b.rank;
}

namespace {

bool is_prime32(uint32_t n)
{
    if (n < 2)
        return false;
    for (uint32_t q : {2u, 3u, 5u, 7u})
        if (n % q == 0)
            return n == q;
    uint32_t d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    for (uint32_t a : {2u, 7u, 61u}) {
        if (a % n == 0)
            continue;
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp)
            return false;
    }
    return true;
}

}  // namespace

std::vector<uint32_t> default_primes(size_t n)
{
    std::vector<uint32_t> out;
    for (uint32_t q = 2147483647u; out.size() < n && q > (1u << 30); q -= 2)
        if (is_prime32(q))
            out.push_back(q);
    return out;
}

}  // namespace pmf
