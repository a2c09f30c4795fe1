#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segstab/epsilon_net.h"
#include "segstab/instance.h"
#include "segstab/oracle.h"

namespace segstab {

/// Reweighting parameters derived from the accuracy knob nu.
struct PapParams {
    double nu = 6.0;
    double mu = 1.0;
    double eta = 0.02;
    double lambda1 = 0.01;
    double delta = 0.01;

    static PapParams from_nu(double nu);
    double lambda() const { return 1.0 + eta; }
    double kappa() const { return 2.0 * eta - lambda() * lambda1; }
    void check() const;  // throws unless kappa > 0
};

struct ReweightOutcome {
    bool success = false;
    double eps0 = 0.0;
    long s_final = 0;       // updates in the final round
    long rounds = 0;
    long total_updates = 0;
    long round_budget = 0;
};

/// Multiplicative reweighting for one candidate count k.  Weights are
/// reset to init_weight on yd and left in `w` (zero outside yd).  If a
/// k-element hitting set of (yd, rd) exists the call returns success.
ReweightOutcome iterative_reweighting(const IncidenceIndex& index,
                                      const std::vector<int>& yd,
                                      const std::vector<int>& rd, long k,
                                      const PapParams& p,
                                      std::vector<double>& w,
                                      double init_weight = 1.0);

struct PapStats {
    long k_final = 0;
    long reweight_runs = 0;
    long rounds = 0;
    long total_updates = 0;
    std::size_t h1_size = 0;
    std::size_t h2_size = 0;
    std::size_t family_size = 0;
    int finder_fallbacks = 0;
    int dichotomy_violations = 0;
    double eps_final = 0.0;
    bool net_contract_ok = true;  // w0(R) > eps0*w0(Y) for all surviving R
    std::vector<FinderStats> finder_stats;
    std::vector<double> finder_delta_i;
};

/// Doubling plus binary search over k around the reweighting subroutine,
/// then a weighted net extraction on the surviving range space.
std::vector<Point> parametric_agarwal_pan(const PreparedInstance& prep,
                                          const PapParams& p,
                                          const VariantConstants& vc,
                                          PapStats* stats = nullptr,
                                          bool prune_segment_meets = false);

struct EdgeWitness {
    int edge = 0;
    int point = -1;
    double distance = 0.0;
};

struct Solution {
    std::vector<Point> points;
    std::vector<EdgeWitness> witness;
    // run statistics
    GraphClass variant = GraphClass::General;
    double nu = 0.0;
    std::size_t y0_size = 0;
    std::size_t active_count = 0;
    std::size_t forced_count = 0;
    std::size_t independent_count = 0;  // Gabriel path
    PapStats pap;
    double wall_ms = 0.0;
    bool verified = false;
};

struct SolveOverrides {
    bool has_variant = false;
    GraphClass variant = GraphClass::General;
    bool prune_segment_meets = false;
};

/// Direct greedy 18-approximation for Gabriel edge sets.
Solution gabriel_solve(const PlaneGraphInstance& inst);

/// Full pipeline: validate, split, dispatch by class, verify.
Solution solve(const PlaneGraphInstance& inst, double nu,
               const SolveOverrides& ov = {});

}  // namespace segstab
