/// @file test_verify.cpp
/// @brief Smoke coverage for the suite driver: small bounds, deterministic
/// reports, and the text/JSON renderings.

#include <doctest.h>

#include "toric/errors.hpp"
#include "toric/verify.hpp"

using namespace toric;

TEST_CASE("suite names dispatch and unknown names are input errors") {
    for (const std::string& name : suite_names()) {
        CAPTURE(name);
        SuiteOptions tiny;
        tiny.max_n = 3;
        tiny.samples = 2;
        tiny.max_k = 1;
        tiny.max_j = 1;
        const SuiteReport report = run_suite(name, tiny);
        CHECK(report.suite == name);
        CHECK(report.pass);
        CHECK(report.instances > 0);
    }
    CHECK_THROWS_AS(run_suite("bogus", {}), input_error);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    SuiteOptions options;
    options.max_n = 4;
    options.samples = 3;
    const std::string a = report_to_text(verify_pretzel_suite(options));
    const std::string b = report_to_text(verify_pretzel_suite(options));
    CHECK(a == b);

    options.seed = 999;
    const std::string c = report_to_text(verify_pretzel_suite(options));
    CHECK(c.find("pretzel") != std::string::npos);
}

TEST_CASE("JSON reports carry the pass flag and items") {
    SuiteOptions tiny;
    tiny.max_k = 1;
    tiny.max_j = 0;
    const std::string json = report_to_json(verify_counting_suite(tiny));
    CHECK(json.find("\"suite\": \"counting\"") != std::string::npos);
    CHECK(json.find("\"pass\": true") != std::string::npos);
    CHECK(json.find("\"items\"") != std::string::npos);
}
