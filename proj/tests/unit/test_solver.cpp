#include <cmath>

#include "doctest.h"
#include "segstab/io.h"
#include "segstab/oracle.h"
#include "segstab/solver.h"
#include "test_support.h"

using namespace segstab;
using namespace segstab::testing;

namespace {

PreparedInstance prep_of(const PlaneGraphInstance& inst) {
    return prepare(inst);
}

std::vector<int> all_candidates(const PreparedInstance& prep) {
    std::vector<int> yd(prep.cands.size());
    for (std::size_t i = 0; i < yd.size(); ++i) yd[i] = static_cast<int>(i);
    return yd;
}

}  // namespace

TEST_CASE("parameter derivation from nu") {
    PapParams p = PapParams::from_nu(6.0);
    CHECK(p.mu == 1.0);
    CHECK(p.eta == doctest::Approx(0.02));
    CHECK(p.lambda1 == doctest::Approx(0.01));
    CHECK(p.delta == doctest::Approx(0.01));
    CHECK(p.lambda() == doctest::Approx(1.02));
    CHECK(p.kappa() == doctest::Approx(0.0298));
    p.check();

    PapParams bad = p;
    bad.lambda1 = 1.0;  // kappa = 0.04 - 1.02 < 0
    CHECK_THROWS_AS(bad.check(), Error);
    CHECK_THROWS_AS(PapParams::from_nu(0.0), Error);
}

TEST_CASE("parameter calibration keeps the additive accuracy margin") {
    // B * (delta + lambda * e^{lambda1*mu/lambda}) <= B + nu for the
    // derived parameters, for every class coefficient
    for (double nu : {0.5, 2.0, 6.0}) {
        PapParams p = PapParams::from_nu(nu);
        double blowup =
            p.delta + p.lambda() * std::exp(p.lambda1 * p.mu / p.lambda());
        for (GraphClass cls :
             {GraphClass::General, GraphClass::RemoteEdges,
              GraphClass::Gabriel, GraphClass::Delaunay,
              GraphClass::OuterplaneDelaunay, GraphClass::Outerplane}) {
            double b = variant_constants(cls).net_size_bound();
            CHECK(b * blowup <= b + nu);
        }
    }
}

TEST_CASE("reweighting accepts a common-candidate family at k=1") {
    // triangle with a large radius: the centroid region hits everything
    PlaneGraphInstance inst;
    inst.vertices = {{0, 0}, {1, 0}, {0.5, 0.9}};
    inst.edges = {{0, 1}, {1, 2}, {2, 0}};
    inst.r = 1.0;
    auto prep = prep_of(inst);
    auto yd = all_candidates(prep);
    PapParams p = PapParams::from_nu(6.0);
    std::vector<double> w;
    auto oc = iterative_reweighting(prep.index, yd, prep.active, 1, p, w);
    CHECK(oc.success);
    // contract: every surviving capsule is heavy under the final weights
    double total = 0.0;
    for (int y : yd) total += w[y];
    for (int e : prep.active)
        CHECK(weight_of(e, prep.index, w) > oc.eps0 * total);
    // growth bound from the accounting identities
    double bound = 2.0 * p.lambda() * 1.0 *
                       std::log(static_cast<double>(yd.size())) /
                       (p.lambda1 * p.kappa()) +
                   std::ceil(p.mu * 1.0);
    CHECK(static_cast<double>(oc.total_updates) <= bound);
}

TEST_CASE("reweighting accepts when k covers the whole family") {
    GenConfig cfg;
    cfg.seed = 41;
    cfg.n = 10;
    auto inst = gen_segments(cfg);
    auto prep = prep_of(inst);
    if (prep.active.empty()) return;
    auto yd = all_candidates(prep);
    PapParams p = PapParams::from_nu(6.0);
    std::vector<double> w;
    long k = static_cast<long>(prep.active.size());
    auto oc = iterative_reweighting(prep.index, yd, prep.active, k, p, w);
    CHECK(oc.success);
}

TEST_CASE("reweighting rejects an infeasible k within the round budget") {
    // three capsule groups far apart force the optimum to 3
    PlaneGraphInstance inst;
    inst.vertices = {{0, 0},   {1, 0},   {0, 1.9}, {1, 1.9},
                     {0, 3.8}, {1, 3.8}, {0, 5.7}, {1, 5.7}};
    inst.edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    inst.r = 1.0;
    auto prep = prep_of(inst);
    REQUIRE(prep.active.size() == 4);
    auto oracle = exact_opt(inst);
    REQUIRE(oracle.active_value >= 2);
    auto yd = all_candidates(prep);
    PapParams p = PapParams::from_nu(6.0);
    std::vector<double> w;
    auto oc = iterative_reweighting(prep.index, yd, prep.active, 1, p, w);
    CHECK(!oc.success);
    CHECK(oc.rounds <= oc.round_budget + 1);
}

TEST_CASE("uniform initial weight scaling changes no decision") {
    for (std::uint64_t seed : {7ULL, 19ULL, 55ULL}) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 14;
        cfg.r_fraction = 0.45;
        auto inst = gen_segments(cfg);
        auto prep = prep_of(inst);
        if (prep.active.empty()) continue;
        auto yd = all_candidates(prep);
        PapParams p = PapParams::from_nu(6.0);
        for (long k : {1L, 2L, 3L}) {
            std::vector<double> w1, w2;
            auto a = iterative_reweighting(prep.index, yd, prep.active, k, p,
                                           w1, 1.0);
            auto b = iterative_reweighting(prep.index, yd, prep.active, k, p,
                                           w2, 1000.0);
            CHECK(a.success == b.success);
            CHECK(a.s_final == b.s_final);
            CHECK(a.rounds == b.rounds);
            CHECK(a.total_updates == b.total_updates);
        }
    }
}

TEST_CASE("solver handles the empty and all-isolated instances") {
    PlaneGraphInstance empty;
    empty.vertices = {{0, 0}};
    empty.r = 1.0;
    auto sol = solve(empty, 6.0);
    CHECK(sol.points.empty());
    CHECK(sol.verified);

    PlaneGraphInstance iso;
    iso.vertices = {{0, 0}, {1, 0}, {10, 10}, {11, 10}, {-10, 5}, {-9, 5}};
    iso.edges = {{0, 1}, {2, 3}, {4, 5}};
    iso.r = 0.5;
    auto sol2 = solve(iso, 6.0);
    CHECK(sol2.verified);
    CHECK(sol2.points.size() == 3);
    CHECK(sol2.forced_count == 3);
    auto oracle = exact_opt(iso);
    CHECK(oracle.value == 3);
}

TEST_CASE("star instance with one shared vertex needs one point") {
    PlaneGraphInstance inst;
    inst.vertices = {{0, 0}, {1, 0}, {0, 1}, {-1, 0.2}, {0.3, -1}, {0.9, 0.9}};
    inst.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    inst.r = 1.5;
    REQUIRE(validate(inst).ok);
    auto oracle = exact_opt(inst);
    CHECK(oracle.value == 1);
    auto sol = solve(inst, 6.0);
    CHECK(sol.verified);
    CHECK(!sol.points.empty());
}

TEST_CASE("single capsule instance solves tiny") {
    PlaneGraphInstance inst;
    inst.vertices = {{0, 0}, {2, 0}};
    inst.edges = {{0, 1}};
    inst.r = 1.0;
    auto sol = solve(inst, 6.0);
    CHECK(sol.verified);
    double bound = variant_constants(GraphClass::General).net_size_bound() +
                   6.0;
    CHECK(static_cast<double>(sol.points.size()) <= bound);
}

TEST_CASE("solved instances verify and meet the oracle factor") {
    const GraphClass classes[] = {GraphClass::General, GraphClass::Delaunay,
                                  GraphClass::RemoteEdges,
                                  GraphClass::OuterplaneDelaunay,
                                  GraphClass::Outerplane};
    int done = 0;
    std::uint64_t seed = 1;
    while (done < 15) {
        GraphClass cls = classes[done % 5];
        GenConfig cfg;
        cfg.seed = seed++;
        cfg.n = cls == GraphClass::General || cls == GraphClass::RemoteEdges
                    ? 9
                    : 6;
        PlaneGraphInstance inst;
        try {
            inst = generate(cls, cfg);
        } catch (const Error&) {
            continue;
        }
        if (inst.edges.size() > 12) continue;
        auto sol = solve(inst, 6.0);
        CHECK(sol.verified);
        auto prep = prep_of(inst);
        if (!prep.active.empty()) {
            auto oracle = exact_opt(prep);
            double bound = variant_constants(cls).net_size_bound() + 6.0;
            double active_points =
                static_cast<double>(sol.points.size() - sol.forced_count);
            CHECK(active_points <= bound * oracle.active_value);
        }
        ++done;
    }
    CHECK(done == 15);
}

TEST_CASE("large nu exercises the preparatory net") {
    GenConfig cfg;
    cfg.seed = 77;
    cfg.n = 12;
    cfg.r_fraction = 0.45;
    auto inst = gen_segments(cfg);
    auto sol = solve(inst, 600.0);
    CHECK(sol.verified);
}

TEST_CASE("gabriel solve covers its instances") {
    // two far-apart edges both enter the disjoint family
    PlaneGraphInstance two;
    two.cls = GraphClass::Gabriel;
    two.vertices = {{0, 0}, {1, 0}, {50, 0}, {51, 0}};
    two.edges = {{0, 1}, {2, 3}};
    two.r = 0.4;
    auto sol = gabriel_solve(two);
    CHECK(sol.independent_count == 2);
    CHECK(sol.points.size() == 36);
    CHECK(sol.verified);

    PlaneGraphInstance one;
    one.cls = GraphClass::Gabriel;
    one.vertices = {{0, 0}, {1, 0}};
    one.edges = {{0, 1}};
    one.r = 0.4;
    auto sol1 = gabriel_solve(one);
    CHECK(sol1.points.size() == 18);
    CHECK(sol1.verified);

    PlaneGraphInstance wrong = one;
    wrong.cls = GraphClass::General;
    CHECK_THROWS_AS(gabriel_solve(wrong), Error);

    // diametral violation
    PlaneGraphInstance badg;
    badg.cls = GraphClass::Gabriel;
    badg.vertices = {{0, 0}, {2, 0}, {1, 0.1}};
    badg.edges = {{0, 1}};
    badg.r = 0.4;
    CHECK_THROWS_AS(gabriel_solve(badg), ValidationError);
}

TEST_CASE("generated gabriel graphs solve with the fixed per-pivot cost") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n = 16;
        auto inst = gen_gabriel(cfg);
        auto sol = solve(inst, 6.0);
        CHECK(sol.verified);
        CHECK(sol.points.size() == 18 * sol.independent_count);
        if (inst.edges.size() <= 12) {
            auto oracle = exact_opt(inst);
            CHECK(static_cast<int>(sol.independent_count) <= oracle.value);
        }
    }
}

TEST_CASE("variant override forces the general machinery") {
    GenConfig cfg;
    cfg.seed = 21;
    cfg.n = 8;
    auto inst = gen_delaunay(cfg);
    SolveOverrides ov;
    ov.has_variant = true;
    ov.variant = GraphClass::General;
    auto sol = solve(inst, 6.0, ov);
    CHECK(sol.verified);
    CHECK(sol.variant == GraphClass::General);
}

TEST_CASE("solution json round trip") {
    GenConfig cfg;
    cfg.seed = 3;
    cfg.n = 6;
    auto inst = gen_delaunay(cfg);
    auto sol = solve(inst, 6.0);
    std::string text = solution_to_json(sol);
    auto back = solution_from_json(text);
    CHECK(back.points.size() == sol.points.size());
    CHECK(back.witness.size() == sol.witness.size());
    CHECK(back.verified == sol.verified);
    for (std::size_t i = 0; i < sol.points.size(); ++i)
        CHECK(back.points[i] == sol.points[i]);
}
