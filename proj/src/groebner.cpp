#include "pmf/groebner.hpp"

#include <algorithm>

namespace pmf {

void PairSet::insert(int h, const Mono& lm, int max_degree)
{
    if (size_t(h) >= lms_.size()) {
        lms_.resize(h + 1);
        masks_.resize(h + 1);
    }
    lms_[h] = lm;
    masks_[h] = divmask(lm);
    uint64_t mh = masks_[h];

    std::vector<CritPair> cand;
    cand.reserve(active_.size());
    for (int g : active_)
        cand.push_back({g, h, r_.lcm(lms_[g], lm)});
    std::stable_sort(cand.begin(), cand.end(), [](const CritPair& a, const CritPair& b) { return a.lcm.deg < b.lcm.deg; });

    std::vector<CritPair> kept;
    std::vector<uint64_t> kept_mask;
    for (auto& c : cand) {
        bool dominated = false;
        for (size_t k = 0; k < kept.size() && !dominated; ++k)
            if (kept[k].lcm.deg <= c.lcm.deg && mdiv(kept[k].lcm, kept_mask[k], c.lcm))
                dominated = true;
        if (dominated) {
            ++pruned_;
            continue;
        }
        kept.push_back(c);
        kept_mask.push_back(divmask(c.lcm));
    }

    // chain criterion on the pairs already queued
    std::vector<CritPair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
        if (p.j >= 0 && !(mh & ~divmask(p.lcm)) && r_.divides(lm, p.lcm)) {
            Mono a = r_.lcm(lms_[p.i], lm), b = r_.lcm(lms_[p.j], lm);
            if (a != p.lcm && b != p.lcm) {
                ++pruned_;
                continue;
            }
        }
        old.push_back(p);
    }
    pairs_ = std::move(old);

    for (auto& c : kept) {
        if (r_.coprime(lms_[c.i], lm)) {
            ++pruned_;
            continue;
        }
        if (max_degree >= 0 && c.lcm.deg > max_degree)
            continue;
        pairs_.push_back(c);
    }

    std::vector<int> act;
    act.reserve(active_.size() + 1);
    for (int g : active_)
        if (!(!(mh & ~masks_[g]) && r_.divides(lm, lms_[g])))
            act.push_back(g);
    act.push_back(h);
    active_ = std::move(act);
}

int PairSet::min_degree() const
{
    int d = -1;
    for (auto& p : pairs_)
        if (d < 0 || p.lcm.deg < d)
            d = p.lcm.deg;
    return d;
}

std::vector<CritPair> PairSet::pop_min_degree()
{
    int d = min_degree();
    std::vector<CritPair> out, rest;
    for (auto& p : pairs_)
        (p.lcm.deg == d ? out : rest).push_back(p);
    pairs_ = std::move(rest);
    return out;
}

std::optional<CritPair> PairSet::pop_min(const MonomialOrder& o)
{
    if (pairs_.empty())
        return std::nullopt;
    size_t best = 0;
    for (size_t k = 1; k < pairs_.size(); ++k) {
        const Mono& a = pairs_[k].lcm;
        const Mono& b = pairs_[best].lcm;
        if (a.deg < b.deg || (a.deg == b.deg && o.cmp(a, b) < 0))
            best = k;
    }
    CritPair p = pairs_[best];
    pairs_.erase(pairs_.begin() + long(best));
    return p;
}

}  // namespace pmf
