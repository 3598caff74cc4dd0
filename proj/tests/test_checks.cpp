#include <doctest.h>

#include "checks.hpp"

using namespace qalg;

TEST_CASE("catalog of named checks is consistent") {
    CheckContext ctx;
    for (const auto& info : check_catalog()) CHECK(check_exists(info.name));
    CHECK(!check_exists("no-such-check"));
    CHECK_THROWS_AS(run_check(ctx, "no-such-check", {}), usage_error);
}

TEST_CASE("a few named checks at small rank") {
    CheckContext ctx;
    CheckParams prm;
    prm.n = 3;
    CHECK(run_check(ctx, "dunkl-commute", prm).pass);
    CHECK(run_check(ctx, "jm-commute", prm).pass);
    CHECK(run_check(ctx, "hecke-limit", prm).pass);
    CHECK(run_check(ctx, "fn-zero", prm).pass);
    CHECK(run_check(ctx, "example-5-4", {}).pass);
    CHECK(run_check(ctx, "bn0-relations", {}).pass);
    CHECK(run_check(ctx, "k30-relations", {}).pass);
    prm.deg = 2;
    CHECK(run_check(ctx, "yk-commute-ops", prm).pass);
}

TEST_CASE("dim command with expectation") {
    CheckContext ctx;
    Presentation p = build(Preset::Bn0, 3);
    Report rep = cmd_dim(ctx, p, 5, FieldDesc::rationals(), false, "1+3t+4t^2+3t^3+t^4");
    CHECK(rep.pass);
    Report bad = cmd_dim(ctx, p, 5, FieldDesc::rationals(), false, "1+3t");
    CHECK(!bad.pass);
    /* report text renders one record per line plus the verdict line */
    std::string text = rep.render_text();
    CHECK(text.find("dims=1,3,4,3,1,0") != std::string::npos);
    CHECK(text.rfind("verdict=pass\n") == text.size() - 13);
}

TEST_CASE("reduce command emits a replayable log") {
    CheckContext ctx;
    Presentation p = build(Preset::Gn, 3);
    ReduceResult r = cmd_reduce(ctx, p, 4, FieldDesc::rationals(), "[1,2]*[2,3]", true);
    CHECK(r.normal_form == "[2,3]*[1,3] + [1,3]*[1,2]");
    CHECK(!r.zero);
    CHECK(r.log_text.find("step=0") != std::string::npos);
    ReduceResult z = cmd_reduce(ctx, p, 4, FieldDesc::rationals(), "0", false);
    CHECK(z.zero);
    CHECK(z.normal_form == "0");
}

TEST_CASE("operator check command") {
    Report ok = cmd_opcheck("T(1)*T(2)*T(1)", "T(2)*T(1)*T(2)", 3, 3);
    CHECK(ok.pass);
    Report bad = cmd_opcheck("T(1)", "T(2)", 3, 1);
    CHECK(!bad.pass);
    CHECK(bad.render_text().find("witness=x_1") != std::string::npos);
}

TEST_CASE("deterministic reports") {
    CheckContext ctx;
    CheckParams prm;
    prm.n = 3;
    std::string a = run_check(ctx, "fn-zero", prm).render_text();
    std::string b = run_check(ctx, "fn-zero", prm).render_text();
    CHECK(a == b);
}
