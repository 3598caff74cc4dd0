/* exercises the shared-library C interface end to end */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qalg/qalg.h"

namespace {
std::string take(char* s) {
    std::string out = s ? s : "";
    qalg_string_free(s);
    return out;
}
}  // namespace

TEST_CASE("version and errors") {
    CHECK(std::string(qalg_version()).rfind("qalg", 0) == 0);
    qalg_presentation* p = nullptr;
    CHECK(qalg_preset_build("NoSuch", 3, &p) == QALG_USAGE);
    CHECK(std::string(qalg_last_error()).find("preset") != std::string::npos);
    CHECK(qalg_preset_build("Gn", 1, &p) == QALG_USAGE);
}

TEST_CASE("presentation lifecycle") {
    qalg_presentation* p = nullptr;
    REQUIRE(qalg_preset_build("Gn", 3, &p) == QALG_OK);
    char* text = nullptr;
    REQUIRE(qalg_presentation_render(p, &text) == QALG_OK);
    std::string rendered = take(text);
    CHECK(rendered.find("n: 3") != std::string::npos);
    qalg_presentation* q = nullptr;
    REQUIRE(qalg_presentation_parse(rendered.c_str(), &q) == QALG_OK);
    qalg_presentation_free(q);
    qalg_presentation_free(p);
}

TEST_CASE("completion, dimensions, reduction") {
    qalg_presentation* p = nullptr;
    REQUIRE(qalg_preset_build("En0", 3, &p) == QALG_OK);
    qalg_basis* b = nullptr;
    REQUIRE(qalg_complete(p, 6, "Q", 0, &b) == QALG_OK);
    int upto = 0;
    CHECK(qalg_basis_complete_to(b, &upto) == QALG_OK);
    CHECK(upto == 6);
    char* csv = nullptr;
    REQUIRE(qalg_graded_dims(b, 6, &csv) == QALG_OK);
    CHECK(take(csv) == "1,3,4,3,1,0,0");
    char* nf = nullptr;
    char* log = nullptr;
    REQUIRE(qalg_reduce(b, "[1,3]*[2,3]*[1,3] + [2,3]*[1,3]*[2,3]", 1, &nf, &log) == QALG_OK);
    CHECK(take(nf) == "0");
    std::string logs = take(log);
    CHECK(logs.find("result=0") != std::string::npos);
    char* sub = nullptr;
    REQUIRE(qalg_subalgebra_dims(b, "[1,3];[2,3]", 3, &sub) == QALG_OK);
    CHECK(take(sub) == "1,2,2,1");
    qalg_basis_free(b);
    qalg_presentation_free(p);
}

TEST_CASE("verify and reports") {
    char* text = nullptr;
    REQUIRE(qalg_check_list(&text) == QALG_OK);
    std::string list = take(text);
    CHECK(list.find("hecke-limit") != std::string::npos);
    char* report = nullptr;
    CHECK(qalg_verify("hecke-limit", 3, -1, nullptr, 1, 0, 0, &report) == QALG_OK);
    std::string rep = take(report);
    CHECK(rep.find("verdict=pass") != std::string::npos);
    report = nullptr;
    CHECK(qalg_verify("hecke-limit", 3, -1, nullptr, 1, 0, 1, &report) == QALG_OK);
    std::string json = take(report);
    CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("dim command and op check") {
    char* report = nullptr;
    CHECK(qalg_dim_command("Bn0", 0, 3, 5, "Q", 0, "1+3t+4t^2+3t^3+t^4", 0, &report) == QALG_OK);
    std::string rep = take(report);
    CHECK(rep.find("match=true") != std::string::npos);
    report = nullptr;
    CHECK(qalg_dim_command("Bn0", 0, 3, 5, "Q", 0, "1+t", 0, &report) == QALG_MISMATCH);
    qalg_string_free(report);
    report = nullptr;
    CHECK(qalg_op_check("T(1)*T(2)*T(1)", "T(2)*T(1)*T(2)", 3, 3, 0, &report) == QALG_OK);
    qalg_string_free(report);
    report = nullptr;
    CHECK(qalg_op_check("T(1)", "T(2)", 3, 1, 0, &report) == QALG_MISMATCH);
    qalg_string_free(report);
}

TEST_CASE("dim command accepts presentation file text") {
    const char* text =
        "name: file-check\nn: 3\nring: Q\n"
        "[1,2]*[2,3] - [2,3]*[1,3] - [1,3]*[1,2]\n"
        "[2,3]*[1,2] - [1,3]*[2,3] - [1,2]*[1,3]\n";
    char* report = nullptr;
    CHECK(qalg_dim_command(text, 1, 3, 4, "Q", 0, "1+3t+7t^2+15t^3+31t^4", 0, &report) == QALG_OK);
    std::string rep = take(report);
    CHECK(rep.find("match=true") != std::string::npos);
}

TEST_CASE("torsion probe through the C surface") {
    char* report = nullptr;
    REQUIRE(qalg_torsion_probe("Bn0", 3, 4, "2,2147483629", 0, &report) == QALG_OK);
    std::string rep = take(report);
    CHECK(rep.find("dimension-differs") != std::string::npos);
}
