#include "dpfano/catalog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace dpfano;

namespace {

std::string strip_timing(std::string s) {
    // timing is the only nondeterministic report field
    std::string out;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line))
        if (line.find("timing_ms") == std::string::npos) out += line + "\n";
    return out;
}

} // namespace

TEST_CASE("builtin cases load with their declared geometry") {
    const auto ids = builtin_case_ids();
    REQUIRE(ids.size() == 10);
    CHECK(ids == std::vector<std::string>{"A-1", "A-2", "B-i-1", "B-i-2", "B-i-3", "B-ii",
                                          "B-iii-1", "B-iii-2", "B-iii-3", "B-iii-4"});

    const CaseSpec biii2 = load_case("B-iii-2");
    REQUIRE(biii2.k3.has_value());
    CHECK(biii2.lattice()->gram() == IntMat{{6, 2, 9}, {2, -2, 6}, {9, 6, 6}});

    const CaseSpec bi1 = load_case("B-i-1");
    CHECK(bi1.construction == Construction::Direct);
    CHECK_FALSE(bi1.pipeline.has_value());
    REQUIRE(bi1.expected.kx3.has_value());
    CHECK(*bi1.expected.kx3 == 8);

    const CaseSpec a1 = load_case("A-1");
    REQUIRE(a1.pipeline.has_value());
    CHECK(a1.pipeline->kw3 == 32);
    CHECK(a1.pipeline->d == 6);
}

TEST_CASE("schema violations are rejected with diagnostics") {
    CHECK_THROWS_AS(load_case("no-such-case"), SchemaError);

    auto parse = [](const char* text) { return load_case_json(Json::parse(text)); };
    // asymmetric Gram matrix
    CHECK_THROWS_AS(parse(R"({"id":"x","construction":"k3_lattice",
        "lattice":{"basis":["a","b"],"gram":[[2,1],[0,2]]},"polarization":"a"})"),
                    SchemaError);
    // unbound class names and unknown ops are caught at load time
    CHECK_THROWS_AS(parse(R"({"id":"x","construction":"k3_lattice",
        "lattice":{"basis":["H","C"],"gram":[[18,6],[6,0]]},"polarization":"H",
        "checks":[{"op":"pairing","args":{"a":"H","b":"nope"},"expect":0}]})"),
                    SchemaError);
    CHECK_THROWS_AS(parse(R"({"id":"x","construction":"direct",
        "checks":[{"op":"frobnicate","expect":1}]})"),
                    SchemaError);
    // unknown polarization name
    CHECK_THROWS_AS(parse(R"({"id":"x","construction":"k3_lattice",
        "lattice":{"basis":["a","b"],"gram":[[2,1],[1,0]]},"polarization":"zz"})"),
                    SchemaError);
    // lattice that is not a K3 Picard lattice (wrong signature)
    CHECK_THROWS_AS(parse(R"({"id":"x","construction":"k3_lattice",
        "lattice":{"basis":["a"],"gram":[[-2]]},"polarization":"a"})"),
                    SchemaError);
}

TEST_CASE("runtime op failures land in the report, not in exceptions") {
    // a valid op applied to an out-of-contract argument: h0 of a square -6 class
    const CaseSpec spec = load_case_json(Json::parse(R"({"id":"x","construction":"k3_lattice",
        "lattice":{"basis":["H","C"],"gram":[[18,6],[6,0]]},"polarization":"H",
        "checks":[{"op":"h0","args":{"cls":[1,-2]},"expect":1}]})"));
    const auto report = run_case(spec);
    CHECK(report.status == CaseStatus::Fail);
    REQUIRE(report.steps.size() == 1);
    CHECK(report.steps[0].error.find("square") != std::string::npos);
}

TEST_CASE("the genus-5 case verifies with its expected invariants") {
    const auto report = run_case(load_case("B-iii-4"));
    CHECK(report.status == CaseStatus::Pass);
    CHECK(report.invariants.at("kx3") == Json(2));
    CHECK(report.invariants.at("kx_dot_c") == Json(1));
    CHECK(report.invariants.at("z") == Json("5/2"));
    CHECK(report.invariants.at("h12") == Json(5));
    for (const auto& s : report.steps) {
        INFO(s.op << " " << s.args.dump());
        CHECK(s.pass);
    }
}

TEST_CASE("the flagged cases pass their checks and record the discrepancy") {
    const auto bii = run_case(load_case("B-ii"));
    CHECK(bii.status == CaseStatus::Flagged);
    for (const auto& s : bii.steps) CHECK(s.pass);
    REQUIRE(bii.flags.size() == 1);
    CHECK(bii.flags[0].id == "fiber-coefficient-sign");
    CHECK(bii.invariants.at("z") == Json("1/2"));

    const auto biii1 = run_case(load_case("B-iii-1"));
    CHECK(biii1.status == CaseStatus::Flagged);
    REQUIRE(biii1.flags.size() == 1);
    CHECK(biii1.flags[0].id == "hodge-number-prose");
    CHECK(biii1.invariants.at("h12") == Json(2));
}

TEST_CASE("corrupted expected values produce hard failures") {
    CaseSpec spec = load_case("B-i-1");
    spec.expected.kx3 = 99;
    const auto report = run_case(spec);
    CHECK(report.status == CaseStatus::Fail);

    CaseSpec spec2 = load_case("B-ii");
    spec2.expected.h12 = 7;
    const auto report2 = run_case(spec2);
    CHECK(report2.status == CaseStatus::Fail); // a flag never hides a real mismatch
}

TEST_CASE("run_all summary") {
    const auto reports = run_all();
    REQUIRE(reports.size() == 10);
    const RunSummary s = summarize(reports);
    CHECK(s.pass == 8);
    CHECK(s.flagged == 2);
    CHECK(s.fail == 0);
    CHECK(s.ok());
    REQUIRE(s.fired_flags.size() == 2);
    CHECK(s.fired_flags[0] == std::pair<std::string, std::string>{"B-ii", "fiber-coefficient-sign"});
    CHECK(s.fired_flags[1] ==
          std::pair<std::string, std::string>{"B-iii-1", "hodge-number-prose"});
}

TEST_CASE("emission is deterministic") {
    const auto reports = run_all();
    CHECK(emit_json(reports) == emit_json(reports)); // same objects, byte identical

    const auto again = run_all();
    CHECK(strip_timing(emit_json(reports)) == strip_timing(emit_json(again)));
    CHECK(emit_text(reports) == emit_text(again)); // text carries no timing

    CHECK(emit_json({}).find("\"total\": 0") != std::string::npos); // empty list is a valid document
}

TEST_CASE("the text table mirrors the reference columns") {
    const auto text = emit_text(run_all());
    CHECK(text.find("Name") != std::string::npos);
    CHECK(text.find("dP") != std::string::npos);
    CHECK(text.find("(-K_X)^3") != std::string::npos);
    CHECK(text.find("h^{1,2}") != std::string::npos);
    CHECK(text.find("D_X") != std::string::npos);
    CHECK(text.find("summary: 10 cases, 8 pass, 2 flagged, 0 fail") != std::string::npos);
}

TEST_CASE("case files load from disk") {
    const std::string path = "catalog_roundtrip_case.json";
    {
        std::ofstream out(path);
        out << R"({
            "id": "disk-case",
            "construction": "k3_lattice",
            "lattice": {"basis": ["H", "C"], "gram": [[18, 6], [6, 0]]},
            "polarization": "H",
            "checks": [
                {"op": "classify", "expect": {"even": true, "signature": [1, 1, 0]}},
                {"op": "h0", "args": {"cls": "H"}, "expect": 11}
            ]
        })";
    }
    const auto report = run_case(load_case(path));
    CHECK(report.status == CaseStatus::Pass);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_case("definitely-missing.json"), SchemaError);
}
