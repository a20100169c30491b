#include "doctest.h"

#include <algorithm>
#include <string>

#include "foamfit/datasets.hpp"
#include "foamfit/discovery.hpp"

using namespace foamfit;

namespace {

FitReport stub_report(const std::string& label, Architecture arch, double alpha, int nonzero,
                      double r2_ten, double r2_com, double r2_shr) {
    FitReport r;
    r.label = label;
    r.architecture = arch;
    r.alpha = alpha;
    r.nonzero_terms = nonzero;
    r.r2_ten = r2_ten;
    r.r2_com = r2_com;
    r.r2_shr = r2_shr;
    return r;
}

}  // namespace

TEST_CASE("evaluate_model reproduces the per-mode R2 of a known model") {
    const FoamDataset d = builtin_dataset("leap");
    const ModelSpec m = printed_model("leap", Architecture::SI_MI);
    const ModelEval e = evaluate_model(m, d);
    CHECK(e.r2_ten == doctest::Approx(0.9849112830065831).epsilon(1e-9));
    CHECK(e.r2_com == doctest::Approx(0.9916167111927257).epsilon(1e-9));
    CHECK(e.r2_shr == doctest::Approx(0.9960922150521788).epsilon(1e-9));
}

TEST_CASE("model json round-trips weights exactly") {
    const ModelSpec m = printed_model("turbo", Architecture::SI_PS);
    ModelEval e{0.9991, 0.9385, 0.9837};
    const std::string doc = export_model_json(m, "turbo", Architecture::SI_PS, 1.0, e);
    const ModelSpec back = import_model(doc);
    CHECK(back == m);

    // the report overload carries the same payload
    FitReport r = stub_report("turbo", Architecture::SI_PS, 1.0, 3, e.r2_ten, e.r2_com,
                              e.r2_shr);
    r.model = m;
    CHECK(import_model(export_model_json(r)) == m);

    // document fields that downstream tooling keys on
    CHECK(doc.find("\"label\": \"turbo\"") != std::string::npos);
    CHECK(doc.find("\"architecture\": \"si-ps\"") != std::string::npos);
    CHECK(doc.find("\"w_kpa\"") != std::string::npos);
    CHECK(doc.find("\"psi\"") != std::string::npos);
}

TEST_CASE("import_model rejects malformed documents") {
    CHECK_THROWS_AS(import_model("not json at all"), DomainError);
    CHECK_THROWS_AS(import_model("{\"label\": \"x\"}"), DomainError);
    CHECK_THROWS_AS(import_model("{\"terms\": 5}"), DomainError);
    CHECK_THROWS_AS(import_model("{\"terms\": [{\"id\": 1}]}"), DomainError);
    // unknown term id fails model validation
    CHECK_THROWS_AS(import_model("{\"terms\": [{\"id\": 15, \"w_kpa\": 1.0}]}"), DomainError);
    // negative weight fails model validation
    CHECK_THROWS_AS(import_model("{\"terms\": [{\"id\": 1, \"w_kpa\": -2.0}]}"), DomainError);
}

TEST_CASE("select_model prefers the sparsest report within the margin") {
    const auto base = stub_report("leap", Architecture::SI_MI, 0.0, 14, 0.99, 0.99, 0.99);
    const auto sparse_ok = stub_report("leap", Architecture::SI_MI, 1.0, 3, 0.99, 0.975, 0.99);
    const auto sparse_bad = stub_report("leap", Architecture::SI_MI, 1.0, 2, 0.99, 0.95, 0.99);

    SUBCASE("single report selects itself") {
        const Selection s = select_model({base});
        CHECK(s.report.nonzero_terms == 14);
        CHECK_FALSE(s.fallback_warning);
    }
    SUBCASE("a sparse report within 0.02 of its baseline wins") {
        const Selection s = select_model({base, sparse_ok});
        CHECK(s.report.nonzero_terms == 3);
        CHECK_FALSE(s.fallback_warning);
    }
    SUBCASE("a sparse report below the margin is rejected") {
        const Selection s = select_model({base, sparse_bad});
        CHECK(s.report.nonzero_terms == 14);
    }
    SUBCASE("the margin is adjustable") {
        const Selection s = select_model({base, sparse_bad}, 0.05);
        CHECK(s.report.nonzero_terms == 2);
    }
    SUBCASE("the pick is permutation invariant") {
        const Selection a = select_model({base, sparse_bad, sparse_ok});
        const Selection b = select_model({sparse_ok, base, sparse_bad});
        CHECK(a.report.nonzero_terms == b.report.nonzero_terms);
        CHECK(a.report.alpha == b.report.alpha);
        CHECK(a.report.nonzero_terms == 3);
    }
    SUBCASE("ties break toward the better worst mode") {
        auto tie_a = stub_report("leap", Architecture::SI_MI, 1.0, 3, 0.99, 0.985, 0.99);
        const Selection s = select_model({base, sparse_ok, tie_a});
        CHECK(s.report.r2_com == 0.985);
    }
    SUBCASE("no alpha = 0 baseline falls back with a warning") {
        const Selection s = select_model({sparse_ok, sparse_bad});
        CHECK(s.fallback_warning);
        CHECK(s.report.alpha == 1.0);
    }
    CHECK_THROWS_AS(select_model({}), DomainError);
}

TEST_CASE("baselines gate each architecture independently") {
    // si-ps has no baseline here, so its report never competes
    const auto mi_base = stub_report("leap", Architecture::SI_MI, 0.0, 10, 0.99, 0.99, 0.99);
    const auto mi_cell = stub_report("leap", Architecture::SI_MI, 1.0, 4, 0.99, 0.98, 0.99);
    const auto ps_cell = stub_report("leap", Architecture::SI_PS, 1.0, 2, 0.99, 0.99, 0.99);
    const Selection s = select_model({mi_base, mi_cell, ps_cell});
    CHECK(s.report.nonzero_terms == 4);
    CHECK_FALSE(s.fallback_warning);
}

TEST_CASE("report csv rows are stable and labeled") {
    CHECK(report_csv_header() ==
          "label,architecture,alpha,seed,nonzero_terms,r2_ten,r2_com,r2_shr,convexity");

    FitReport r = stub_report("leap", Architecture::SI_MI, 1.0, 3, 0.9812, 0.9932, 0.9955);
    r.seed = 7;
    r.model = printed_model("leap", Architecture::SI_MI);
    r.polyconvexity = polyconvexity_flags(r.model);
    CHECK(report_csv_row(r) == "leap,si-mi,1,7,3,0.9812,0.9932,0.9955,violates");

    FitReport c = r;
    c.model.terms[2].w_star = 0.5;  // mixed term at a compliant inner weight
    c.polyconvexity = polyconvexity_flags(c.model);
    CHECK(report_csv_row(c) == "leap,si-mi,1,7,3,0.9812,0.9932,0.9955,conditional");

    FitReport v = stub_report("syn", Architecture::SI_PS, 0.0, 1, 1.0, 1.0, 1.0);
    ModelSpec ps;
    ps.terms.push_back({13, 35.0, 3.0});
    v.model = ps;
    v.polyconvexity = polyconvexity_flags(v.model);
    CHECK(report_csv_row(v) == "syn,si-ps,0,0,1,1.0000,1.0000,1.0000,convex");
}

TEST_CASE("polyconvexity flags the mixed terms") {
    ModelSpec m;
    m.terms.push_back({1, 26.9, 0.0});
    m.terms.push_back({9, 0.0, 1.06});  // pruned, not flagged
    m.terms.push_back({11, 79.0, 4.86});
    m.terms.push_back({12, 19.8, 1.47});
    const auto flags = polyconvexity_flags(m);
    REQUIRE(flags.size() == 3);
    CHECK(flags[0].term_id == 1);
    CHECK(flags[0].status == Convexity::Convex);
    CHECK(flags[1].term_id == 11);
    CHECK(flags[1].status == Convexity::Violates);
    CHECK(flags[1].threshold == doctest::Approx(2.0 / 3.0));
    CHECK(flags[2].term_id == 12);
    CHECK(flags[2].status == Convexity::Violates);

    m.terms[2].w_star = 0.5;
    const auto soft = polyconvexity_flags(m);
    CHECK(soft[1].status == Convexity::Conditional);
}

TEST_CASE("run_grid covers three architectures at two penalties") {
    ModelSpec gen;
    gen.terms.push_back({13, 35.0, 3.0});
    const FoamDataset d = synthesize_dataset(gen, "synth");

    TrainConfig tmpl;
    tmpl.epochs = 120;
    tmpl.warm_epochs = 40;
    tmpl.seed = 11;
    const std::vector<FitReport> grid = run_grid(tmpl, d);
    REQUIRE(grid.size() == 6);
    const Architecture want_arch[6] = {Architecture::SI,    Architecture::SI,
                                       Architecture::SI_MI, Architecture::SI_MI,
                                       Architecture::SI_PS, Architecture::SI_PS};
    const double want_alpha[6] = {0.0, 1.0, 0.0, 1.0, 0.0, 1.0};
    for (int i = 0; i < 6; ++i) {
        CHECK(grid[i].architecture == want_arch[i]);
        CHECK(grid[i].alpha == want_alpha[i]);
        CHECK(grid[i].label == "synth");
        CHECK(grid[i].seed == 11);
    }
    // the grid output feeds the selector directly
    const Selection s = select_model(grid);
    CHECK_FALSE(s.fallback_warning);
}
