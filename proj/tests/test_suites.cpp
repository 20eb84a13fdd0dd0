#include <doctest.h>

#include "decycle/report.hpp"
#include "decycle/suites.hpp"
#include "decycle/sweep.hpp"
#include "decycle/tree_enum.hpp"

using namespace decycle;

namespace {

Graph spider(const std::vector<int>& legs) {
  int n = 1;
  for (int l : legs) n += l;
  GraphBuilder b(n);
  int next = 1;
  for (int l : legs)
    for (int k = 0; k < l; ++k, ++next) b.add_edge(k == 0 ? 0 : next - 1, next);
  return b.build();
}

}  // namespace

TEST_CASE("main theorem instances") {
  SolveContext ctx;
  const auto a = check_main_theorem(ctx, make_path(2), make_path(2));
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.computed.at("decycling") == 1);
  const auto b = check_main_theorem(ctx, make_path(4), make_star(6));
  CHECK(b.computed.at("decycling") == 3);
  CHECK(b.verdict == Verdict::pass);
  const auto c = check_main_theorem(ctx, make_path(4), make_path(4));
  CHECK(c.computed.at("decycling") == 4);
  CHECK(c.verdict == Verdict::pass);
  CHECK_THROWS_AS(check_main_theorem(ctx, make_path(5), make_path(4)), std::invalid_argument);
}

TEST_CASE("star formula instances") {
  SolveContext ctx;
  CHECK(check_star_formula(ctx, make_path(3), 3).computed.at("forest") == 7);
  CHECK(check_star_formula(ctx, make_star(4), 4).computed.at("forest") == 13);
  const auto c = check_star_formula(ctx, make_path(2), 2);
  CHECK(c.computed.at("forest") == 3);
  CHECK(c.verdict == Verdict::pass);
}

TEST_CASE("equality characterization instances") {
  SolveContext ctx;
  const auto pp = check_equality_characterization(ctx, make_path(4), make_path(4));
  CHECK(pp.computed.at("decycling") >= 4);
  CHECK(pp.verdict == Verdict::pass);
  const auto ps = check_equality_characterization(ctx, make_path(4), make_star(4));
  CHECK(ps.computed.at("decycling") == 3);
  CHECK(ps.verdict == Verdict::pass);
  const auto sp = check_equality_characterization(ctx, make_star(4), make_path(5));
  CHECK(sp.computed.at("decycling") >= 4);
  CHECK(sp.verdict == Verdict::pass);
}

TEST_CASE("small star range instances") {
  SolveContext ctx;
  const auto a = check_small_star_range(ctx, make_path(5), 2);
  CHECK(a.computed.at("decycling") >= 2);
  CHECK(a.computed.at("decycling") <= 4);
  CHECK(check_small_star_range(ctx, make_path(5), 4).computed.at("decycling") == 4);
  const auto s = check_small_star_range(ctx, spider({2, 2, 2}), 6);
  CHECK(s.computed.at("decycling") == 6);
  CHECK(s.computed.at("forest") == 36);
  CHECK(s.verdict == Verdict::pass);
  CHECK_THROWS_AS(check_small_star_range(ctx, make_star(5), 3), std::invalid_argument);
}

TEST_CASE("prism, matching bound, torus and grid instances") {
  SolveContext ctx;
  CHECK(check_prism(ctx, make_star(8)).computed.at("decycling") == 1);
  CHECK(check_prism(ctx, make_path(6)).computed.at("decycling") == 3);
  CHECK(check_prism(ctx, make_path(2)).computed.at("decycling") == 1);

  const auto cc = check_matching_bound(ctx, make_cycle(5), make_cycle(5));
  CHECK(cc.computed.at("decycling") == 9);
  CHECK(cc.verdict == Verdict::pass);
  CHECK(check_matching_bound(ctx, make_star(4), make_star(4)).computed.at("decycling") == 3);
  CHECK(check_matching_bound(ctx, make_path(2), make_complete(5)).verdict == Verdict::pass);

  CHECK(check_torus_formula(ctx, 3, 3).computed.at("decycling") == 4);
  CHECK(check_torus_formula(ctx, 4, 4).computed.at("decycling") == 6);
  CHECK(check_torus_formula(ctx, 3, 5).computed.at("decycling") == 6);

  CHECK(check_grid_bounds(ctx, 2, 2).computed.at("decycling") == 1);
  CHECK(check_grid_bounds(ctx, 3, 3).computed.at("decycling") == 2);
  const auto g45 = check_grid_bounds(ctx, 4, 5);
  CHECK(g45.computed.at("lower") == 5);
  CHECK(g45.computed.at("decycling") == 5);
}

TEST_CASE("open-conjecture scan") {
  SolveContext ctx;
  const auto two = scan_open_conjecture(ctx, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].verdict == Verdict::report_only);
  CHECK(two[0].computed.at("violation") == 0);

  int n44 = 0, n45 = 0;
  for (const auto& r : scan_open_conjecture(ctx, 5)) {
    CHECK(r.verdict == Verdict::report_only);
    if (r.computed.at("n") == 4 && r.computed.at("n2") == 4) ++n44;
    if (r.computed.at("n") == 4 && r.computed.at("n2") == 5) ++n45;
  }
  CHECK(n44 == 3);
  CHECK(n45 == 6);
}

TEST_CASE("verdicts are recomputable from the record") {
  SweepOptions o;
  o.suite = "equality";
  SolveContext ctx;
  for (const auto& r : run_sweep(o, ctx).records) CHECK(is_self_consistent(r));

  ValueMap bad = {{"n", 4}, {"n2", 4}, {"decycling", 3}, {"t_star", 0}, {"t2_star", 0}};
  CHECK(evaluate("equality", bad) == Verdict::fail);
  bad["t_star"] = 1;
  CHECK(evaluate("equality", bad) == Verdict::pass);
  CHECK(evaluate("torus", {{"n", 4}, {"n2", 5}, {"decycling", 8}, {"formula", 8}}) == Verdict::pass);
  CHECK(evaluate("torus", {{"n", 4}, {"n2", 5}, {"decycling", 7}, {"formula", 8}}) == Verdict::fail);
  CHECK(evaluate("grid-bounds", {{"n", 4}, {"n2", 5}, {"decycling", 7}, {"lower", 5}}) == Verdict::fail);
  CHECK(evaluate("open-conjecture", {{"violation", 1}}) == Verdict::report_only);
  CHECK_THROWS_AS(evaluate("no-such-claim", {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate("torus", {{"n", 3}}), std::invalid_argument);
}

TEST_CASE("reports are deterministic without timing") {
  SweepOptions o;
  o.suite = "thm-main";
  o.n_max = 4;
  SolveContext c1, c2;
  o.workers = 1;
  const auto a = run_sweep(o, c1);
  o.workers = 4;
  const auto b = run_sweep(o, c2);
  CHECK(render_csv(a.records, false) == render_csv(b.records, false));
  CHECK(render_json(a.records, {}, false) == render_json(b.records, {}, false));
  const auto csv = render_csv(a.records, false);
  CHECK(csv.rfind("claim_id,instance,expected,computed,verdict,wall_time,note\n", 0) == 0);
  const auto j = render_json(a.records, a.meta);
  CHECK(j["summary"]["pass"] == a.records.size());
  CHECK(j["records"][0].contains("certificate"));
}

TEST_CASE("every suite runs at a small size") {
  for (const auto& s : suite_names()) {
    CAPTURE(s);
    SweepOptions o;
    o.suite = s;
    o.n_max = s == "small-star" ? 5 : 4;
    o.random_pairs = 10;
    o.random_graphs = 3;
    o.n_star_max = 5;
    SolveContext ctx;
    const auto r = run_sweep(o, ctx);
    CHECK(r.errors.empty());
    CHECK_FALSE(r.records.empty());
    CHECK(exit_status(r) == 0);
  }
  SweepOptions bad;
  bad.suite = "nope";
  SolveContext ctx;
  CHECK_THROWS_AS(run_sweep(bad, ctx), std::invalid_argument);
}
