#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pmf {

// Schreier-Sims over an abstract element type acting on points 0..degree-1.
//
// A Traits type supplies
//   using Elem;
//   static Elem identity();
//   static Elem mul(const Elem& a, const Elem& b);   // a after b
//   static Elem inv(const Elem& a);
//   static int act(const Elem& a, int pt);
//   static bool is_identity(const Elem& a);
//   static uint64_t key(const Elem& a);               // injective enough for hashing
template <class Traits>
class Bsgs {
public:
    using Elem = typename Traits::Elem;

    struct Level {
        int base = -1;
        std::vector<Elem> gens;
        std::vector<int> orbit;
        std::vector<int> slot;     // point -> index into orbit, -1 if absent
        std::vector<Elem> trans;   // trans[i] maps base to orbit[i]
    };

    Bsgs(int degree, std::vector<Elem> generators, std::vector<int> preferred_base = {}, uint64_t seed = 1)
        : degree_(degree), preferred_(std::move(preferred_base)), rng_(seed)
    {
        for (auto& g : generators)
            if (!Traits::is_identity(g))
                gens_.push_back(g);
        build();
    }

    int degree() const { return degree_; }
    const std::vector<Elem>& generators() const { return gens_; }
    const std::vector<Level>& levels() const { return levels_; }

    std::vector<int> base() const
    {
        std::vector<int> b;
        for (auto& l : levels_)
            b.push_back(l.base);
        return b;
    }

    uint64_t order() const
    {
        uint64_t o = 1;
        for (auto& l : levels_)
            o *= uint64_t(l.orbit.size());
        return o;
    }

    // (residue, level at which sifting stopped); level == levels().size() when it ran through
    std::pair<Elem, size_t> sift(Elem g, size_t from = 0) const
    {
        for (size_t j = from; j < levels_.size(); ++j) {
            const Level& l = levels_[j];
            int p = Traits::act(g, l.base);
            int s = l.slot[p];
            if (s < 0)
                return {g, j};
            g = Traits::mul(Traits::inv(l.trans[s]), g);
        }
        return {g, levels_.size()};
    }

    bool contains(const Elem& g) const
    {
        auto r = sift(g);
        return r.second == levels_.size() && Traits::is_identity(r.first);
    }

    // uniformly random group element built from transversals
    template <class Rng>
    Elem random_element(Rng& rng) const
    {
        Elem g = Traits::identity();
        for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
            std::uniform_int_distribution<size_t> d(0, it->trans.size() - 1);
            g = Traits::mul(it->trans[d(rng)], g);
        }
        return g;
    }

    std::vector<int> orbit_of(int pt) const
    {
        std::vector<char> seen(degree_, 0);
        std::vector<int> out{pt};
        seen[pt] = 1;
        for (size_t i = 0; i < out.size(); ++i)
            for (auto& g : gens_) {
                int q = Traits::act(g, out[i]);
                if (!seen[q]) {
                    seen[q] = 1;
                    out.push_back(q);
                }
            }
        return out;
    }

private:
    int degree_;
    std::vector<int> preferred_;
    std::mt19937_64 rng_;
    std::vector<Elem> gens_;
    std::vector<Level> levels_;

    int new_base_point(const Elem& g) const
    {
        for (int p : preferred_)
            if (Traits::act(g, p) != p && !in_base(p))
                return p;
        for (int p = 0; p < degree_; ++p)
            if (Traits::act(g, p) != p)
                return p;
        throw std::logic_error("Bsgs: identity element has no moved point");
    }

    bool in_base(int p) const
    {
        for (auto& l : levels_)
            if (l.base == p)
                return true;
        return false;
    }

    void push_level(int b)
    {
        Level l;
        l.base = b;
        l.slot.assign(degree_, -1);
        levels_.push_back(std::move(l));
    }

    void rebuild_orbit(Level& l)
    {
        std::fill(l.slot.begin(), l.slot.end(), -1);
        l.orbit.assign(1, l.base);
        l.trans.assign(1, Traits::identity());
        l.slot[l.base] = 0;
        for (size_t i = 0; i < l.orbit.size(); ++i)
            for (auto& s : l.gens) {
                int q = Traits::act(s, l.orbit[i]);
                if (l.slot[q] < 0) {
                    l.slot[q] = int(l.orbit.size());
                    l.orbit.push_back(q);
                    l.trans.push_back(Traits::mul(s, l.trans[i]));
                }
            }
    }

    // add a non-identity element h that fixes base points of levels < lvl
    void add_strong(const Elem& h, size_t lvl)
    {
        size_t j = lvl;
        while (j < levels_.size() && Traits::act(h, levels_[j].base) == levels_[j].base)
            ++j;
        if (j == levels_.size())
            push_level(new_base_point(h));
        for (size_t l = lvl; l <= j; ++l)
            levels_[l].gens.push_back(h);
        for (size_t l = lvl; l <= j; ++l)
            rebuild_orbit(levels_[l]);
    }

    void build()
    {
        for (auto& g : gens_) {
            auto r = sift(g);
            if (r.second == levels_.size() && Traits::is_identity(r.first))
                continue;
            add_strong(r.first, 0);
        }
        random_fill();
        verify();
    }

    // product-replacement style random elements sifted into the chain
    void random_fill()
    {
        if (gens_.empty())
            return;
        std::vector<Elem> pool = gens_;
        while (pool.size() < 10)
            pool.push_back(gens_[pool.size() % gens_.size()]);
        Elem acc = Traits::identity();
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        auto step = [&]() {
            size_t a = pick(rng_), b = pick(rng_);
            while (b == a)
                b = pick(rng_);
            pool[a] = Traits::mul(pool[a], pool[b]);
            acc = Traits::mul(acc, pool[a]);
            return acc;
        };
        for (int i = 0; i < 50; ++i)
            step();
        int quiet = 0;
        while (quiet < 30) {
            auto r = sift(step());
            if (r.second == levels_.size() && Traits::is_identity(r.first)) {
                ++quiet;
                continue;
            }
            quiet = 0;
            add_strong(r.first, 0);
        }
    }

    // deterministic Schreier generator check, level by level from the bottom
    void verify()
    {
        size_t i = levels_.size();
        while (i > 0) {
            size_t lvl = i - 1;
            bool clean = true;
            Level& l = levels_[lvl];
            for (size_t k = 0; k < l.orbit.size() && clean; ++k)
                for (size_t si = 0; si < l.gens.size() && clean; ++si) {
                    const Elem& s = l.gens[si];
                    Elem su = Traits::mul(s, l.trans[k]);
                    int q = Traits::act(su, l.base);
                    Elem h = Traits::mul(Traits::inv(l.trans[l.slot[q]]), su);
                    if (Traits::is_identity(h))
                        continue;
                    auto r = sift(h, lvl + 1);
                    if (r.second == levels_.size() && Traits::is_identity(r.first))
                        continue;
                    add_strong(r.first, lvl + 1);
                    clean = false;
                }
            if (clean)
                --i;
            else
                i = levels_.size();
        }
    }
};

// closure by breadth-first search; only for small groups
template <class Traits>
std::vector<typename Traits::Elem> enumerate_group(const std::vector<typename Traits::Elem>& gens, size_t cap = 1u << 22)
{
    using Elem = typename Traits::Elem;
    std::vector<Elem> out{Traits::identity()};
    std::unordered_set<uint64_t> seen{Traits::key(out[0])};
    for (size_t i = 0; i < out.size(); ++i)
        for (auto& g : gens) {
            Elem h = Traits::mul(g, out[i]);
            if (seen.insert(Traits::key(h)).second) {
                out.push_back(h);
                if (out.size() > cap)
                    throw std::runtime_error("enumerate_group: cap exceeded");
            }
        }
    return out;
}

}  // namespace pmf
