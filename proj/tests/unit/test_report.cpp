#include "sympspin/report.hpp"

#include <doctest.h>

using namespace sympspin;

TEST_SUITE("cli-report") {

TEST_CASE("suite names") {
    CHECK(parse_suites("all") == all_suites());
    CHECK(all_suites().size() == 10);
    CHECK(parse_suites("theorem,example,theorem") == std::vector<std::string>{"theorem", "example"});
    CHECK(parse_suites(" example , sl2 ") == std::vector<std::string>{"sl2", "example"});
    CHECK_THROWS_AS(parse_suites("theorem,bogus"), Error);
    CHECK_THROWS_AS(parse_suites(""), Error);
}

TEST_CASE("formats") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("text") == Format::Text);
    CHECK(format_extension(Format::Text) == "txt");
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("job config validation") {
    JobConfig ok;
    CHECK_NOTHROW(ok.validate());
    JobConfig bad = ok;
    bad.n = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ok;
    bad.hMax = -1;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ok;
    bad.Q = -1;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ok;
    bad.suites = {"nope"};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("report JSON round trip") {
    VerificationReport r;
    r.claim = "theorem";
    r.params = SectorSpec{1, 2, 3, Parity::Odd};
    r.expectedDim = 4;
    r.observedDim = 4;
    r.equalAsSubspaces = true;
    r.details = {{"sourceDim", 4}, {"sectorDim", 6}};
    r.note = "finite-truncation evidence, not a proof";
    r.settle();
    Json j = report_to_json(r);
    CHECK(j.at("claim") == "theorem");
    CHECK(j.at("params").at("parity") == "odd");
    CHECK(j.at("pass") == true);
    VerificationReport back = report_from_json(j);
    CHECK(report_to_json(back).dump() == j.dump());

    VerificationReport empty;
    empty.claim = "sl2";
    CHECK(report_to_json(empty).at("equalAsSubspaces").is_null());
}

TEST_CASE("verification runs are deterministic and sorted") {
    JobConfig cfg;
    cfg.n = 1;
    cfg.hMax = 2;
    cfg.Q = 3;
    cfg.suites = parse_suites("theorem,triangle,example");
    cfg.threads = 4;
    auto a = run_suites(cfg);
    cfg.threads = 1;
    auto b = run_suites(cfg);
    CHECK(a.size() == 7);
    CHECK(verification_document(cfg, a).dump(2) == verification_document(cfg, b).dump(2));
    for (std::size_t k = 1; k < a.size(); ++k) {
        CHECK_FALSE(report_less(a[k], a[k - 1]));
    }
    Json doc = verification_document(cfg, a);
    CHECK(doc.at("convention") == kConventionNote);
    CHECK(doc.at("pass") == true);
    for (Format f : {Format::Json, Format::Csv, Format::Text}) {
        CHECK(render_reports(cfg, a, f) == render_reports(cfg, b, f));
    }
    CHECK(render_reports(cfg, a, Format::Csv).rfind("claim,n,h,Q,parity", 0) == 0);
}

TEST_CASE("dimension tables aggregate triangle and theorem reports") {
    JobConfig cfg;
    cfg.n = 1;
    cfg.hMax = 2;
    cfg.Q = 3;
    cfg.parity = Parity::Even;
    cfg.suites = parse_suites("triangle,theorem");
    Json doc = verification_document(cfg, run_suites(cfg));
    DimensionTables t = aggregate({doc, doc});
    // Rows l + j = h for h = 0..2: 1 + 2 + 3 cells, duplicates dropped.
    CHECK(t.triangle.size() == 6);
    CHECK(t.twistorKernel.size() == 3);
    std::string csv = render_tables(t, Format::Csv);
    CHECK(csv.rfind("n,parity,l,j0,j1,j2\n", 0) == 0);
    CHECK(render_tables(t, Format::Json).find("twistorKernel") != std::string::npos);
    CHECK(render_tables(t, Format::Text).find(kConventionNote) != std::string::npos);
}

TEST_CASE("subspace JSON") {
    auto amb = std::make_shared<const GradedBasis>(enumerate_basis(SectorSpec{1, 0, 2, Parity::Even}));
    SubspaceBasis s = SubspaceBasis::full(amb);
    Json j = subspace_to_json(s);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("monomials") == Json::array({"1", "q1^2"}));
    CHECK(j.at("vectors").size() == 2);
}

}
