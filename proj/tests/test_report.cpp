#include "pmf/paper.hpp"
#include "pmf/report.hpp"
#include "pmf/verify.hpp"

#include <doctest.h>

using namespace pmf;

TEST_CASE("constants file loads and covers the acceptance table")
{
    Constants k = Constants::load(default_data_dir());
    CHECK(k.checksum().rfind("fnv1a64:", 0) == 0);
    CHECK(k.expected("group-orders").at("group_order") == 85030560);
    CHECK(k.expected("graded-dimensions").at("j_dims").size() == 6);
    CHECK_THROWS(k.expected("no-such-check"));
}

TEST_CASE("report JSON and exit codes")
{
    RunConfig cfg;
    Verifier v(cfg);
    Report r;
    v.qseries(r);
    v.not_recomputed(r);
    REQUIRE(r.find("qseries"));
    CHECK(r.find("qseries")->status == Status::Pass);
    CHECK(r.find("virtual-weights")->status == Status::NotRecomputed);
    CHECK(r.exit_code(false) == 0);
    auto j = r.to_json(cfg, v.constants());
    CHECK(j.at("schema") == "pmf.report/1");
    CHECK(j.dump() == r.to_json(cfg, v.constants()).dump());
    CHECK_FALSE(j.dump().find("seconds") != std::string::npos);
    CHECK_THROWS(r.add(*r.find("qseries")));
}

TEST_CASE("a short q-series run is partial")
{
    RunConfig cfg;
    cfg.qterms = 1;
    Verifier v(cfg);
    Report r;
    v.qseries(r);
    CHECK(r.find("qseries")->status == Status::Partial);
    CHECK(r.exit_code(false) == 1);
    CHECK(r.exit_code(true) == 0);
}

TEST_CASE("status names")
{
    CHECK(status_name(Status::Pass) == "PASS");
    CHECK(status_name(Status::NotRecomputed) == "PAPER-VALUE-NOT-RECOMPUTED");
}
