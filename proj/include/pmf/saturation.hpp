#pragma once

#include "pmf/f4.hpp"

#include <memory>

namespace pmf {

using ModTerms = std::vector<std::pair<Mono, uint32_t>>;

ModTerms to_modp(const QPoly& f, uint32_t p);

struct SaturationStep {
    int variable = 0;
    size_t added = 0;
    double seconds = 0;
};

// Homogeneous ideal over Z/p given by generators; the first `rational`
// of them are reductions of rational polynomials, the rest were found by
// saturating.
struct ModularIdeal {
    uint32_t p = 0;
    int truncation = 0;
    size_t rational = 0;
    std::vector<ModTerms> gens;
    std::vector<SaturationStep> steps;  // empty when loaded from text
    OrderPtr order;
    std::unique_ptr<GradedGB> gb;
    int horizon = -1;

    // graded reverse lexicographic basis through `degree`
    GradedGB& basis(int degree, double time_limit = 1e18);
};

// (I : (X_1 ... X_n)^infinity) up to the truncation degree. Each variable v
// in turn is made the smallest in a graded reverse lexicographic order, the
// truncated basis is computed and every element is divided by its largest
// power of v. Stops when all variables have been processed with nothing
// new since the last addition.
ModularIdeal saturate_by_variables(const std::vector<QPoly>& gens, const OrderPtr& grevlex, uint32_t p, int truncation,
                                   double time_limit = 1e18);

// serialization of the generators found by saturation (used as a cache)
std::string saturation_to_string(const ModularIdeal& m);
// false if the text is damaged or was produced from other generators or another prime
bool saturation_from_string(const std::string& text, const std::vector<QPoly>& gens, const OrderPtr& grevlex,
                            ModularIdeal& out);

}  // namespace pmf
