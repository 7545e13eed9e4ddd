#include "pmf/report.hpp"

#include "pmf/hash.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace pmf {

using nlohmann::json;

std::string status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Partial: return "PARTIAL";
    case Status::NotRecomputed: return "PAPER-VALUE-NOT-RECOMPUTED";
    }
    return "FAIL";
}

Constants Constants::load(const std::string& dir)
{
    std::string path = dir + "/constants.json";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    if (j.value("schema", "") != "pmf.constants/1")
        throw std::runtime_error(path + ": unexpected schema");
    std::string got = "fnv1a64:" + fnv1a64_hex(j.at("payload").dump());
    if (j.value("checksum", "") != got)
        throw std::runtime_error(path + ": checksum mismatch");
    Constants c;
    c.table_ = j.at("payload").at("checks");
    c.checksum_ = got;
    return c;
}

const json& Constants::expected(const std::string& id) const
{
    auto it = table_.find(id);
    if (it == table_.end())
        throw std::out_of_range("no constants for check " + id);
    return it->at("expected");
}

std::string Constants::location(const std::string& id) const
{
    auto it = table_.find(id);
    return it == table_.end() ? "" : it->value("location", "");
}

json Constants::input(const std::string& id) const
{
    auto it = table_.find(id);
    if (it == table_.end() || !it->contains("input"))
        return nullptr;
    return it->at("input");
}

void Report::add(Check c)
{
    for (auto& x : checks_)
        if (x.id == c.id)
            throw std::logic_error("duplicate check id " + c.id);
    checks_.push_back(std::move(c));
}

const Check* Report::find(const std::string& id) const
{
    for (auto& c : checks_)
        if (c.id == id)
            return &c;
    return nullptr;
}

json Report::to_json(const RunConfig& cfg, const Constants& k) const
{
    json out;
    out["schema"] = "pmf.report/1";
    out["constants"] = k.checksum();
    out["config"] = {{"degree_cap_x", cfg.degree_cap_x}, {"degree_cap_xy", cfg.degree_cap_xy},
                     {"qterms", cfg.qterms},             {"primes", cfg.primes},
                     {"seed", cfg.seed},                 {"allow_partial", cfg.allow_partial},
                     {"stretch_degree9", cfg.stretch_degree9}};
    json arr = json::array();
    std::map<std::string, int> tally;
    for (auto& c : checks_) {
        json r;
        r["id"] = c.id;
        if (c.criterion)
            r["criterion"] = c.criterion;
        r["paper_location"] = c.location;
        r["expected"] = c.expected;
        r["computed"] = c.computed;
        r["status"] = status_name(c.status);
        if (!c.note.empty())
            r["note"] = c.note;
        arr.push_back(r);
        tally[status_name(c.status)]++;
    }
    out["checks"] = arr;
    out["summary"] = tally;
    return out;
}

json Report::timings() const
{
    json t = json::object();
    for (auto& c : checks_)
        t[c.id] = c.seconds;
    return t;
}

int Report::exit_code(bool allow_partial) const
{
    for (auto& c : checks_) {
        if (c.status == Status::Fail)
            return 1;
        if (c.status == Status::Partial && !allow_partial)
            return 1;
    }
    return 0;
}

}  // namespace pmf
