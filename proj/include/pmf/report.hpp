#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pmf {

enum class Status { Pass, Fail, Partial, NotRecomputed };

std::string status_name(Status s);

struct Check {
    std::string id;
    int criterion = 0;  // acceptance criterion number, 0 for supporting records
    std::string location;
    nlohmann::json expected, computed;
    Status status = Status::Fail;
    std::string note;
    double seconds = 0;
};

struct RunConfig {
    int degree_cap_x = 10;
    int degree_cap_xy = 6;
    int qterms = 200;
    int primes = 2;
    std::string cache_dir;
    std::string report_path;
    std::string data_dir;
    uint64_t seed = 1;
    bool allow_partial = false;
    bool stretch_degree9 = false;

    static constexpr int min_cap_x = 8, min_cap_xy = 6, min_qterms = 200;
};

// Expected values and locations, loaded from constants.json
class Constants {
public:
    static Constants load(const std::string& dir);
    const nlohmann::json& expected(const std::string& id) const;
    std::string location(const std::string& id) const;
    // auxiliary input data stored with a check (null when absent)
    nlohmann::json input(const std::string& id) const;
    const std::string& checksum() const { return checksum_; }

private:
    nlohmann::json table_;
    std::string checksum_;
};

class Report {
public:
    void add(Check c);
    const std::vector<Check>& checks() const { return checks_; }
    const Check* find(const std::string& id) const;

    // no runtimes, so equal configurations give byte-identical output
    nlohmann::json to_json(const RunConfig& cfg, const Constants& k) const;
    nlohmann::json timings() const;

    // 0 when every record passed (or is not recomputable), 1 otherwise
    int exit_code(bool allow_partial) const;

private:
    std::vector<Check> checks_;
};

}  // namespace pmf
