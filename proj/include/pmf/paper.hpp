#pragma once

#include "pmf/hash.hpp"
#include "pmf/lattice.hpp"
#include "pmf/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pmf {

struct BGen {
    std::array<int, 15> sigma{};  // 0-based images
    std::array<int, 15> k{};      // X_i -> (-w)^k[i] X_sigma(i)
};

struct CDef {
    std::vector<int> num, den;  // 1-based indices of B's
};

struct Seed {
    int weight = 0;
    std::string type;
    std::string poly;
    int orbit_size = 0;
};

struct KBasisData {
    std::vector<int> params;        // 1-based X indices adjoined to the field
    std::vector<int> lex_priority;  // remaining variables, most significant first
    std::vector<std::string> polys;
    std::string lc_product;
};

struct PaperData {
    std::vector<Vec4> mirrors;
    std::vector<std::array<int, 3>> triples;
    std::vector<BGen> transcribed, repaired;
    std::vector<CDef> cdefs;
    std::vector<Seed> seeds;
    std::vector<std::string> binomial_cubics, cube_relations;
    std::string binomial_quartic_seed;
    std::vector<std::array<int, 5>> segre;
    KBasisData kbasis;
    std::map<std::string, std::string> checksums;
};

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string default_data_dir();
// throws DataError on a missing file, schema mismatch or wrong checksum
PaperData load_paper_data(const std::string& dir = default_data_dir());

// X1..X15 (weight 1), Y1..Y10 (weight 2) and the X-only subring
struct Rings {
    RingPtr xy, x;
    OrderPtr xy_grevlex, x_grevlex;
};
const Rings& rings();

QPoly x_to_xy(const QPoly& p);
// throws if p involves a Y
QPoly xy_to_x(const QPoly& p);

// Induced action on Q(w)[X,Y]; the Y part comes from the C-monomials
struct MonomialAction {
    std::array<int, 15> sigma{}, k{};
    std::array<int, 10> ysigma{}, yk{};
};

struct ActionBuild {
    std::optional<MonomialAction> action;
    std::string error;
    // binomial cubic relations whose image is not a multiple of a binomial
    std::vector<int> broken_binomials;
};

ActionBuild make_action(const BGen& g, const PaperData& d);
MonomialAction inverse(const MonomialAction& a);
CPoly act(const MonomialAction& a, const CPoly& p);
// permutation parts as a vector on 15 points, 0-based
std::vector<int> permutation_of(const MonomialAction& a);

// scale so that the leading coefficient (graded revlex) is 1
CPoly normalize_scalar(const CPoly& p);

struct Orbit {
    std::vector<CPoly> members;  // normalized, in discovery order
    std::vector<QPoly> rational; // same order, when every member is rational
    bool all_rational = false;
    bool capped = false;
    size_t size() const { return members.size(); }
};

Orbit generate_orbit(const CPoly& seed, const std::vector<MonomialAction>& gens, size_t cap = 4000);

// True if act(g, m) is proportional to a member for every g, m
bool orbit_closed(const Orbit& o, const std::vector<MonomialAction>& gens);

struct OrbitTable {
    std::vector<Orbit> orbits;  // in seed order
    std::vector<Seed> seeds;
    const Orbit& get(int weight, const std::string& type) const;
};

OrbitTable generate_all_orbits(const PaperData& d, const std::vector<MonomialAction>& gens);

struct Ideals {
    std::vector<QPoly> I;       // X ring
    std::vector<QPoly> Ihat;    // X ring; I followed by the substituted weight-5 relations
    std::vector<QPoly> J;       // XY ring
    std::vector<QPoly> substituted;
};

// throws std::runtime_error when a YiYj product has no weight-4 type III relation
Ideals build_ideals(const OrbitTable& t);

// Y_j -> num_j/den_j, multiplied by the least monomial clearing all denominators
QPoly clear_y(const QPoly& rel, const PaperData& d);

// polynomial of the binomial relations etc. parsed in the X ring
QPoly parse_x(const std::string& s);
CPoly parse_xy(const std::string& s);

}  // namespace pmf
