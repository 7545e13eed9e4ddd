#pragma once

#include "pmf/groups.hpp"
#include "pmf/paper.hpp"
#include "pmf/saturation.hpp"
#include "pmf/verify.hpp"

#include <chrono>
#include <optional>

namespace pmf {

struct Verifier::State {
    RunConfig cfg;
    Constants k;
    std::optional<PaperData> data;
    std::optional<MatGroup> G, stab;
    std::vector<MonomialAction> action;
    std::optional<OrbitTable> orbits;
    std::optional<Ideals> ideals;
    std::vector<uint32_t> primes;
    std::vector<ModularIdeal> ihat;                 // one per prime
    std::vector<std::unique_ptr<GradedGB>> jbasis;  // one per prime
    std::vector<std::string> warnings;

    const PaperData& paper();
    const MatGroup& group();
    const MatGroup& stabilizer();
    const OrbitTable& orbit_table();
    const Ideals& ideal_gens();
    ModularIdeal& ihat_at(size_t i);
    GradedGB& j_at(size_t i, int degree);

    int ihat_degree() const;  // degree through which the I-hat bases are computed
    int j_degree() const;

    Check record(const std::string& id, int criterion, nlohmann::json computed, bool ok, std::string note = "") const;
};

// every key of `expected` is present in `computed` with an equal value
bool json_matches(const nlohmann::json& computed, const nlohmann::json& expected);

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace pmf
