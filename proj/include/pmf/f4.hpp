#pragma once

#include "pmf/groebner.hpp"
#include "pmf/poly.hpp"

#include <functional>
#include <map>
#include <unordered_map>

namespace pmf {

// Interning table: every monomial seen by an engine gets a dense id.
class MonoTable {
public:
    uint32_t id(const Mono& m);
    std::optional<uint32_t> find(const Mono& m) const;
    const Mono& at(uint32_t i) const { return monos_[i]; }
    uint64_t mask(uint32_t i) const { return masks_[i]; }
    size_t size() const { return monos_.size(); }

private:
    std::vector<Mono> monos_;
    std::vector<uint64_t> masks_;
    std::unordered_map<Mono, uint32_t, MonoHash> idx_;
};

struct SparseRow {
    std::vector<uint32_t> cols;
    std::vector<uint32_t> vals;
};

// Row echelon form over Z/p built one row at a time. Rows are stored with
// their leading coefficient scaled to 1; columns are indices 0..ncols-1
// with smaller index meaning more significant.
class SparseEchelon {
public:
    SparseEchelon(size_t ncols, uint32_t p);

    // insert a row whose leading column is not yet a pivot (no reduction)
    void insert_pivot(SparseRow row);
    bool has_pivot(uint32_t col) const { return piv_[col] >= 0; }

    // reduce by the current pivots; if nonzero and `insert`, the result
    // becomes a new pivot; returns the reduced row (empty when in the span)
    SparseRow reduce(const SparseRow& row, bool insert = true);

    size_t rank() const { return rows_.size(); }
    size_t ncols() const { return piv_.size(); }
    const SparseRow& row(size_t i) const { return rows_[i]; }
    size_t nonzeros() const { return nnz_; }

private:
    uint32_t p_;
    uint64_t p2_;
    std::vector<int32_t> piv_;
    std::vector<SparseRow> rows_;
    std::vector<uint64_t> acc_, bits_;
    size_t nnz_ = 0;
};

// Homogeneous polynomial over Z/p as parallel arrays of monomial ids and
// coefficients, terms in decreasing order.
struct ModPoly {
    std::vector<uint32_t> mon;
    std::vector<uint32_t> cf;
    int deg = 0;
    bool empty() const { return mon.empty(); }
};

struct DegreeStats {
    int degree = 0;
    size_t pairs = 0, inputs = 0, rows = 0, cols = 0, new_elements = 0, nonzeros = 0;
    long standard = 0;
    double seconds = 0;
};

// Groebner basis truncated by degree over Z/p for an ideal generated by
// (weighted) homogeneous polynomials. Degree d is complete once every
// critical pair and input of degree <= d has been reduced; then the
// standard monomials of degree d give dim (R/I)_d.
class GradedGB {
public:
    // order must be degree compatible; horizon is the largest degree that
    // compute() may ever be asked for
    GradedGB(OrderPtr order, uint32_t p, int horizon);

    void add_generator(const QPoly& f);
    void add_generator(const std::vector<std::pair<Mono, uint32_t>>& terms);

    void compute(int degree);
    int computed_degree() const { return done_; }
    void set_time_limit(double seconds) { limit_ = seconds; }

    long hilbert(int d) const;
    const std::vector<uint32_t>& standard_ids(int d) const;
    std::vector<Mono> leading_monomials() const;
    std::vector<std::vector<std::pair<Mono, uint32_t>>> basis_polys() const;
    size_t basis_size() const { return elems_.size(); }
    const std::vector<DegreeStats>& stats() const { return stats_; }
    uint32_t prime() const { return p_; }
    const MonomialOrder& order() const { return *ord_; }
    const OrderPtr& order_ptr() const { return ord_; }
    MonoTable& table() { return tab_; }

    // remainder modulo the truncated basis; f must have degree <= computed_degree()
    std::vector<std::pair<Mono, uint32_t>> normal_form(const QPoly& f) const;
    std::vector<std::pair<Mono, uint32_t>> normal_form(std::vector<std::pair<Mono, uint32_t>> f) const;
    bool is_member(const QPoly& f) const { return normal_form(f).empty(); }

private:
    OrderPtr ord_;
    uint32_t p_;
    int horizon_;
    int done_ = -1;
    double limit_ = 1e18;
    MonoTable tab_;
    std::vector<ModPoly> elems_;
    PairSet pairs_;
    std::map<int, std::vector<ModPoly>> inputs_;
    std::vector<std::vector<uint32_t>> std_;  // standard monomial ids per degree
    std::vector<DegreeStats> stats_;
    std::vector<uint32_t> stamp_;
    std::vector<int32_t> slot_;

    ModPoly to_modpoly(std::vector<std::pair<Mono, uint32_t>> terms);
    int find_reducer(const Mono& m, uint64_t mask) const;
    void process_degree(int d);
    void update_standard(int d, const std::vector<uint32_t>& new_lms);
};

// Macaulay matrix in degree k: rows m*f for all monomials m with
// deg m + deg f = k. Returns its rank over Z/p.
struct MacaulayResult {
    size_t rows = 0, cols = 0, rank = 0;
    long quotient_dim() const { return long(cols) - long(rank); }
};
MacaulayResult macaulay_rank(const std::vector<QPoly>& gens, int k, uint32_t p, const OrderPtr& order);
// f (homogeneous of degree k) lies in I_k iff adding it leaves the rank unchanged
bool macaulay_member(const std::vector<QPoly>& gens, const QPoly& f, uint32_t p, const OrderPtr& order);

// Default primes, all above 2^30
std::vector<uint32_t> default_primes(size_t n);

}  // namespace pmf
