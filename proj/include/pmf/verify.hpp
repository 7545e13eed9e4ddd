#pragma once

#include "pmf/report.hpp"

#include <memory>

namespace pmf {

// Runs the verification pipelines, sharing expensive intermediate results
// (groups, orbits, ideal bases) between them.
class Verifier {
public:
    explicit Verifier(RunConfig cfg);
    ~Verifier();

    void group(Report& r);
    void heegner(Report& r);
    void qseries(Report& r);
    void relations(Report& r);
    void ideal(Report& r);
    void properties(Report& r);
    void not_recomputed(Report& r);
    void all(Report& r);

    const RunConfig& config() const;
    const Constants& constants() const;

    struct State;

private:
    std::unique_ptr<State> s_;
};

}  // namespace pmf
