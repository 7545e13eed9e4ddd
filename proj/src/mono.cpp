#include "pmf/mono.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pmf {

Ring::Ring(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights))
{
    if (int(names_.size()) > kMaxVars)
        throw std::invalid_argument("Ring: too many variables");
    if (weights_.empty())
        weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
        throw std::invalid_argument("Ring: weights and names differ in length");
}

int Ring::index(const std::string& name) const
{
    for (int i = 0; i < nvars(); ++i)
        if (names_[i] == name)
            return i;
    return -1;
}

Mono Ring::var(int i, int power) const
{
    Mono m;
    m.e[i] = uint8_t(power);
    m.deg = uint16_t(weights_[i] * power);
    return m;
}

Mono Ring::make(const std::vector<int>& exps) const
{
    Mono m;
    int d = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > 255)
            throw std::invalid_argument("Ring::make: exponent out of range");
        m.e[i] = uint8_t(exps[i]);
        d += exps[i] * weights_[i];
    }
    m.deg = uint16_t(d);
    return m;
}

Mono Ring::mul(const Mono& a, const Mono& b) const
{
    Mono m;
    for (int i = 0; i < kMaxVars; ++i)
        m.e[i] = uint8_t(a.e[i] + b.e[i]);
    m.deg = uint16_t(a.deg + b.deg);
    return m;
}

bool Ring::divides(const Mono& a, const Mono& b) const
{
    if (a.deg > b.deg)
        return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i])
            return false;
    return true;
}

Mono Ring::div(const Mono& b, const Mono& a) const
{
    Mono m;
    for (int i = 0; i < kMaxVars; ++i)
        m.e[i] = uint8_t(b.e[i] - a.e[i]);
    m.deg = uint16_t(b.deg - a.deg);
    return m;
}

Mono Ring::lcm(const Mono& a, const Mono& b) const
{
    Mono m;
    int d = 0;
    for (int i = 0; i < nvars(); ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        d += m.e[i] * weights_[i];
    }
    m.deg = uint16_t(d);
    return m;
}

bool Ring::coprime(const Mono& a, const Mono& b) const
{
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i])
            return false;
    return true;
}

int Ring::total_degree(const Mono& m) const
{
    int d = 0;
    for (int i = 0; i < nvars(); ++i)
        d += m.e[i];
    return d;
}

std::string Ring::str(const Mono& m) const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars(); ++i) {
        if (!m.e[i])
            continue;
        if (!first)
            os << '*';
        first = false;
        os << names_[i];
        if (m.e[i] > 1)
            os << '^' << int(m.e[i]);
    }
    if (first)
        os << '1';
    return os.str();
}

std::vector<Mono> Ring::monomials_of_degree(int d) const
{
    std::vector<Mono> out;
    Mono cur;
    // depth-first over variables
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == nvars()) {
            if (left == 0) {
                cur.deg = uint16_t(d);
                out.push_back(cur);
            }
            return;
        }
        for (int k = left / weights_[i]; k >= 0; --k) {
            cur.e[i] = uint8_t(k);
            self(self, i + 1, left - k * weights_[i]);
        }
        cur.e[i] = 0;
    };
    if (d >= 0)
        rec(rec, 0, d);
    return out;
}

RingPtr make_xy_ring(int nx, int ny)
{
    std::vector<std::string> names;
    std::vector<int> w;
    for (int i = 1; i <= nx; ++i) {
        names.push_back("X" + std::to_string(i));
        w.push_back(1);
    }
    for (int j = 1; j <= ny; ++j) {
        names.push_back("Y" + std::to_string(j));
        w.push_back(2);
    }
    return std::make_shared<Ring>(names, w);
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights)
{
    return std::make_shared<Ring>(std::move(names), std::move(weights));
}

namespace {

std::vector<int> natural(const Ring& r)
{
    std::vector<int> p(r.nvars());
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void check_priority(const Ring& r, const std::vector<int>& p)
{
    std::vector<char> seen(r.nvars(), 0);
    if (int(p.size()) != r.nvars())
        throw std::invalid_argument("MonomialOrder: priority must list every variable");
    for (int v : p) {
        if (v < 0 || v >= r.nvars() || seen[v])
            throw std::invalid_argument("MonomialOrder: bad priority list");
        seen[v] = 1;
    }
}

}  // namespace

MonomialOrder MonomialOrder::wdegrevlex(RingPtr r, std::vector<int> priority)
{
    MonomialOrder o;
    o.ring_ = r;
    o.kind_ = Kind::WDegRevLex;
    o.prio_ = priority.empty() ? natural(*r) : priority;
    check_priority(*r, o.prio_);
    return o;
}

MonomialOrder MonomialOrder::lex(RingPtr r, std::vector<int> priority)
{
    MonomialOrder o;
    o.ring_ = r;
    o.kind_ = Kind::Lex;
    o.prio_ = priority.empty() ? natural(*r) : priority;
    check_priority(*r, o.prio_);
    return o;
}

MonomialOrder MonomialOrder::block(RingPtr r, std::vector<int> priority, int block)
{
    MonomialOrder o;
    o.ring_ = r;
    o.kind_ = Kind::Block;
    o.prio_ = priority.empty() ? natural(*r) : priority;
    o.block_ = block;
    check_priority(*r, o.prio_);
    return o;
}

int MonomialOrder::revlex_part(const Mono& a, const Mono& b, size_t lo, size_t hi) const
{
    const Ring& r = *ring_;
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a.e[prio_[i]] * r.weight(prio_[i]);
        db += b.e[prio_[i]] * r.weight(prio_[i]);
    }
    if (da != db)
        return da > db ? 1 : -1;
    for (size_t i = hi; i-- > lo;) {
        int x = a.e[prio_[i]], y = b.e[prio_[i]];
        if (x != y)
            return x < y ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::cmp(const Mono& a, const Mono& b) const
{
    switch (kind_) {
    case Kind::WDegRevLex:
        if (a.deg != b.deg)
            return a.deg > b.deg ? 1 : -1;
        return revlex_part(a, b, 0, prio_.size());
    case Kind::Lex:
        for (int v : prio_)
            if (a.e[v] != b.e[v])
                return a.e[v] > b.e[v] ? 1 : -1;
        return 0;
    case Kind::Block: {
        int c = revlex_part(a, b, 0, size_t(block_));
        if (c)
            return c;
        return revlex_part(a, b, size_t(block_), prio_.size());
    }
    }
    return 0;
}

}  // namespace pmf
