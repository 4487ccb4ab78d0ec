#include "doctest.h"
#include "ramify/errors.hpp"
#include "ramify/suites.hpp"

using namespace ramify;

TEST_CASE("run_cases sorts by id and records errors") {
    std::vector<CaseFn> cases{
        [] { return CaseResult{"b", true, Json{}}; },
        [] { return CaseResult{"a", true, Json{}}; },
        []() -> CaseResult { raise(ErrorKind::NotGalois, "x"); },
    };
    for (bool parallel : {true, false}) {
        const auto r = run_cases(cases, parallel);
        REQUIRE(r.size() == 3);
        CHECK(r[0].id == "0002");
        CHECK_FALSE(r[0].pass);
        CHECK(r[0].detail["error"] == "NotGalois");
        CHECK(r[1].id == "a");
        CHECK(r[2].id == "b");
    }
}

TEST_CASE("suite reports are deterministic and schema tagged") {
    const SuiteConfig config{3, 8};
    const auto a = run_suite("appendix-a", config, true).to_json();
    const auto b = run_suite("appendix-a", config, false).to_json();
    CHECK(a.dump() == b.dump());
    CHECK(a["schema"] == "ramify/1");
    CHECK(a["passed"] == 8);
    CHECK(a["failed"] == 0);
    CHECK_FALSE(a.contains("counterexample"));
    CHECK_THROWS_AS(suite_cases("no-such-suite", config), RamifyError);
}

TEST_CASE("every suite passes") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        const auto r = run_suite(name, SuiteConfig{11, 12});
        CHECK(r.ok());
    }
}

TEST_CASE("failing cases produce a counterexample") {
    SuiteReport r{"x", {{"001", true, Json{}}, {"002", false, Json{{"mu", 4}}}}};
    CHECK_FALSE(r.ok());
    CHECK(r.to_json()["counterexample"]["id"] == "002");
    CHECK(r.to_json()["counterexample"]["detail"]["mu"] == 4);
}

TEST_CASE("HH0 serialization") {
    const auto C2 = FiniteGroup::named("C2");
    const auto& F = CyclotomicField::get(2);
    HH0Class c(C2, F);
    c.add_to(0, CycloRational(F, Rational(1, 2)));
    c.add_to(1, CycloRational(F, Rational(-1, 2)));
    const Json j = hh0_json(c);
    CHECK(j["id"] == "1/2");
    CHECK(j["σ"] == "-1/2");
    CHECK(j["reduced"] == false);
    const Json r = hh0_json(c.reduction());
    CHECK(r["id"] == 0);
    CHECK(r["σ"] == -1);
    CHECK(r["reduced"] == true);
    CHECK(rational_json(Rational(3)) == 3);
}

TEST_CASE("galois family members are Galois") {
    for (const auto& m : galois_family()) {
        CAPTURE(m.label());
        CHECK(automorphism_group(m.extension()).is_galois());
    }
}
