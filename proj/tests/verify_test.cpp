#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "k3lattice/verify.hpp"

using namespace k3l;

TEST_CASE("verify-all passes every check on the built-in tables") {
    Report r = run_verify_all();
    CHECK(r.failed == 0);
    CHECK(r.passed == static_cast<int>(r.checks.size()));
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("report is deterministic and ordered as declared") {
    Report a = run_verify_all();
    Report b = run_verify_all();
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a) == render_json(b));

    REQUIRE(a.checks.size() >= 10);
    CHECK(a.checks[0].name == "binary code weights");
    CHECK(a.checks[1].name == "binary Steiner S(5,8,24)");
    CHECK(a.checks[2].name == "ternary code weights");
    CHECK(a.checks[3].name == "ternary Steiner S(5,6,12)");
    CHECK(a.checks[4].name == "N(24A1) unimodular");
    CHECK(a.checks.back().name == "exclusion 6D4");
}

TEST_CASE("json report matches the declared schema") {
    Report r = run_verify_all();
    nlohmann::json j = nlohmann::json::parse(render_json(r));
    CHECK(j.at("version").is_string());
    CHECK(j.at("checks").is_array());
    CHECK(j.at("checks").size() == r.checks.size());
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("name").is_string());
        CHECK(c.at("paper").is_string());
        CHECK(c.at("expected").is_string());
        CHECK(c.at("actual").is_string());
        CHECK(c.at("pass").is_boolean());
    }
    CHECK(j.at("summary").at("passed").get<int>() == r.passed);
    CHECK(j.at("summary").at("failed").get<int>() == r.failed);
    CHECK(r.passed + r.failed == static_cast<int>(r.checks.size()));
}

TEST_CASE("a perturbed reference table is caught by the gram check") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "k3lattice_fixture_test";
    fs::create_directories(dir);

    ExactMatrix m4 = reference_gram(CaseId::c2iv);
    m4.at(0, 1) = Rational(1);  // deliberate corruption
    {
        std::ofstream out(dir / "M4.txt");
        out << to_text(m4);
    }
    Fixtures fx = Fixtures::load(dir.string());
    Report r = run_verify_all(fx);
    CHECK(r.failed >= 1);
    bool gram_2iv_failed = false;
    for (const auto& c : r.checks)
        if (c.name == "gram 2iv") gram_2iv_failed = !c.pass;
    CHECK(gram_2iv_failed);

    fs::remove_all(dir);
}

TEST_CASE("fixtures loader round trips the built-in tables") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "k3lattice_fixture_roundtrip";
    fs::create_directories(dir);
    int idx = 1;
    for (CaseId c : all_cases()) {
        std::ofstream(dir / ("M" + std::to_string(idx) + ".txt")) << to_text(reference_gram(c));
        std::ofstream(dir / ("M" + std::to_string(idx) + "_inv.txt"))
            << to_text(reference_gram_inverse(c));
        ++idx;
    }
    Fixtures fx = Fixtures::load(dir.string());
    Report r = run_verify_all(fx);
    CHECK(r.failed == 0);
    fs::remove_all(dir);
}
