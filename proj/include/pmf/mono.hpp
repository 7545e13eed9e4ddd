#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

namespace pmf {

constexpr int kMaxVars = 28;

struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;  // weighted degree

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
};

struct MonoHash {
    size_t operator()(const Mono& m) const
    {
        uint64_t h = 1469598103934665603ull;
        uint64_t w[4];
        std::memcpy(w, m.e.data(), kMaxVars);
        for (int i = 0; i < 3; ++i) {
            h ^= w[i];
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        uint32_t tail;
        std::memcpy(&tail, m.e.data() + 24, 4);
        h ^= tail;
        h *= 0x9E3779B97F4A7C15ull;
        return size_t(h ^ (h >> 31));
    }
};

class Ring {
public:
    Ring(std::vector<std::string> names, std::vector<int> weights);

    int nvars() const { return int(names_.size()); }
    int weight(int i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    const std::string& name(int i) const { return names_[i]; }
    int index(const std::string& name) const;  // -1 if absent

    Mono one() const { return Mono{}; }
    Mono var(int i, int power = 1) const;
    Mono make(const std::vector<int>& exps) const;
    Mono mul(const Mono& a, const Mono& b) const;
    bool divides(const Mono& a, const Mono& b) const;  // a | b
    Mono div(const Mono& b, const Mono& a) const;      // b / a, requires a | b
    Mono lcm(const Mono& a, const Mono& b) const;
    bool coprime(const Mono& a, const Mono& b) const;
    int total_degree(const Mono& m) const;
    std::string str(const Mono& m) const;

    // all monomials of weighted degree exactly d, in a fixed enumeration order
    std::vector<Mono> monomials_of_degree(int d) const;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
};

using RingPtr = std::shared_ptr<const Ring>;

// X1..Xn with weight 1, optionally followed by Y1..Ym of weight 2
RingPtr make_xy_ring(int nx, int ny = 0);
RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights = {});

class MonomialOrder {
public:
    enum class Kind { WDegRevLex, Lex, Block };

    // priority: variables from most significant to least; empty means natural order
    static MonomialOrder wdegrevlex(RingPtr r, std::vector<int> priority = {});
    static MonomialOrder lex(RingPtr r, std::vector<int> priority = {});
    // the first `block` variables of `priority` are eliminated (each block graded revlex)
    static MonomialOrder block(RingPtr r, std::vector<int> priority, int block);

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    Kind kind() const { return kind_; }
    const std::vector<int>& priority() const { return prio_; }

    // -1, 0, +1 as a <, =, > b
    int cmp(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }

    bool same_as(const MonomialOrder& o) const
    {
        return ring_ == o.ring_ && kind_ == o.kind_ && prio_ == o.prio_ && block_ == o.block_;
    }

private:
    RingPtr ring_;
    Kind kind_ = Kind::WDegRevLex;
    std::vector<int> prio_;
    int block_ = 0;

    int revlex_part(const Mono& a, const Mono& b, size_t lo, size_t hi) const;
};

}  // namespace pmf
