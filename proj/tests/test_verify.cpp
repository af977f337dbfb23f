#include "doctest.h"
#include "immpoly/verify.hpp"

#include <algorithm>
#include <stdexcept>

using namespace immpoly;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 11);
    for (const char* expected :
         {"characters", "oracle-pair", "hook-closed-forms", "bounds",
          "orientation-formula", "laplace", "zero-block", "star-degree"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite", {}), std::invalid_argument);
}

TEST_CASE("options validation") {
    SuiteOptions opt;
    opt.beta = Rational(1);
    CHECK_THROWS_AS(run_suite("star-degree", opt), std::invalid_argument);
}

TEST_CASE("small runs of every suite pass") {
    SuiteOptions opt;
    opt.max_n = 4;
    for (const auto& name : suite_names()) {
        const SuiteReport rep = run_suite(name, opt);
        CHECK(rep.suite == name);
        CHECK(rep.ok());
        CHECK(rep.failed() == 0);
        CHECK(rep.passed() > 0);
    }
}

TEST_CASE("single-setting override narrows the sweep") {
    SuiteOptions opt;
    opt.max_n = 4;
    opt.beta = Rational(1);
    opt.gamma = Rational(-1);
    const SuiteReport rep = run_suite("hook-closed-forms", opt);
    CHECK(rep.ok());
    // hypothesis-violating settings are recorded as skips, not failures
    SuiteOptions bad = opt;
    bad.gamma = Rational(0);
    bad.beta = Rational(-1);
    const SuiteReport skipped = run_suite("bounds", bad);
    CHECK(skipped.ok());
    CHECK(skipped.skipped() > 0);
}
