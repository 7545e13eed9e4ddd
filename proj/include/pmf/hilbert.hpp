#pragma once

#include "pmf/f4.hpp"

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace pmf {

// c[0] + c[1] k + c[2] k^2 + ...
struct RatPoly1 {
    std::vector<mpq_class> c;
    mpq_class operator()(long k) const;
    std::string str() const;
};

struct HilbertFit {
    RatPoly1 poly;
    bool consistent = true;  // also matches every point past the first four
    long first_mismatch = -1;
};

// Lagrange interpolation of a cubic through the first four points, checked against the rest.
// Throws std::invalid_argument on fewer than four points or repeated k.
HilbertFit hilbert_fit(const std::vector<std::pair<long, long>>& points);

// dim of I_k meet Q[vars]_k, from the normal forms of the monomials in vars
size_t subring_relations(const GradedGB& gb, const std::vector<int>& vars, int k);

// true iff no nonzero polynomial in vars lies in I through degree `cap`
bool independent_variables(const GradedGB& gb, const std::vector<int>& vars, int cap);

}  // namespace pmf
