#include "doctest.h"

#include "gcfloer/report.hpp"

using namespace gcfloer;

TEST_CASE("polytope report survives a JSON round trip") {
    for (const auto& s : {SpaceSpec{"Fl3", {1, 1}, {}}, SpaceSpec{"Gr24", {1}, {}}, SpaceSpec{"Gr25", {1}, {}}}) {
        auto r = polytope_report(s, std::nullopt);
        CHECK(same(polytope_report_from_json(to_json(r)), r));
    }
    auto r = polytope_report({"Gr24", {1}, {}}, GCPoint{{0, 0, 0, 0}});
    REQUIRE(r.point);
    CHECK(r.point->fiber->kind == FiberKind::U2);
    auto back = polytope_report_from_json(to_json(r));
    CHECK(same(back, r));
    CHECK(to_json(back).dump() == to_json(r).dump());
}

TEST_CASE("custom space needs a matching profile") {
    SpaceSpec s{"custom", {2, 1, 0}, FlagShape{{1, 2}, 3}};
    CHECK(polytope_report(s, std::nullopt).polytope.dimension() == 3);
    CHECK_THROWS(polytope_report(s, GCPoint{{0, 0}}));
}

TEST_CASE("potential report round trip") {
    auto r = potential_report({"Fl3", {Rational(3, 10), Rational(7, 10)}, {}});
    CHECK(r.potential.terms.size() == 6);
    CHECK(same(potential_report_from_json(to_json(r)), r));
}

TEST_CASE("critical report round trip") {
    SolverConfig cfg;
    cfg.starts = 300;
    auto r = critical_report({"Gr24", {1}, {}}, cfg, true);
    CHECK(r.points.size() == 4);
    CHECK(!r.candidates.empty());
    CHECK(critical_report_from_json(to_json(r)) == r);
}

TEST_CASE("qh and match reports round trip") {
    auto q = qh_report("Gr25", {cplx(0.5)});
    CHECK(q.eigenvalues.size() == 10);
    CHECK(qh_report_from_json(to_json(q)) == q);
    auto m = match_report({"Gr24", {1}, {}}, 0.5, 1e-7, SolverConfig{});
    CHECK(m.matched.value_or(false));
    CHECK(qh_report_from_json(to_json(m)) == m);
}

TEST_CASE("floer report round trip and argument checks") {
    auto r = floer_report({"Gr24", {1}, {}}, Rational(1, 2), 0.0, false, "Lambda0");
    CHECK(r.hf.torsion == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(same(floer_report_from_json(to_json(r)), r));
    auto p = floer_report({"Gr24", {1}, {}}, 0, cplx(0, 1.5707963267948966), true, "Lambda");
    CHECK(p.hf.free_rank == 0);
    CHECK(same(floer_report_from_json(to_json(p)), p));
    CHECK_THROWS(floer_report({"Gr24", {1}, {}}, Rational(1, 2), 0.0, true, "Lambda0"));
    CHECK_THROWS(floer_report({"Gr24", {1}, {}}, 0, 0.0, false, "Z"));
    CHECK_THROWS(floer_report({"Gr25", {1}, {}}, 0, 0.0, false, "Lambda0"));
}
