/**
 * @file verify.hpp
 * @brief Named verification suites with independent brute-force oracles,
 *        shared by the command-line runner and the acceptance tests.
 *
 * Each suite checks one structural claim (validity of tropical images,
 * crystal-operator characterizations, stabilization of windowed
 * components, counting identities, ...) against an oracle that recomputes
 * the expected answer by direct enumeration, never through the code path
 * under test.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bzkit/bz_affine.hpp"
#include "bzkit/bz_finite.hpp"
#include "bzkit/lusztig_affine.hpp"
#include "bzkit/lusztig_finite.hpp"
#include "bzkit/sampling.hpp"

namespace bzkit::verify {

struct CheckResult {
    std::string name;
    bool pass = true;
    long long tally = 0;      // items exercised
    std::string detail;       // first witness on failure, or a summary
};

struct SuiteReport {
    std::string suite;
    std::string claim;
    bool pass = true;
    std::vector<CheckResult> checks;

    void add(CheckResult c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

struct SuiteConfig {
    uint64_t seed = 42;
    int samples = 200;
    int depth = 6;
    int l = 3;
    int charge_bound = 2;
    int box_bound = 6;
    int window_cap = 6; // size cap for subinterval validation
    int threads = 1;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

// ---------------------------------------------------------------------------
// Closures and counting oracles (also reused by the unit tests)
// ---------------------------------------------------------------------------

/// All data reachable from the zero datum by the starred lowering
/// operators within `depth` steps, deduplicated.
std::vector<LusztigFinite> star_closure_finite(Interval I, int depth);
std::vector<LusztigAffine> star_closure_affine(int l, int depth);

/// Crossing-sum profile (r_lo, ..., r_hi) of a finite datum.
std::vector<int> crossing_profile(const LusztigFinite& a);
/// Crossing-sum profile (r_0, ..., r_{l-1}) of a periodic datum.
std::vector<int> crossing_profile_affine(const LusztigAffine& a);

/// Direct enumeration: how many data over I have each crossing profile
/// with total at most `max_total`.
std::map<std::vector<int>, long long> finite_profile_counts(Interval I, int max_total);

/// Direct enumeration of periodic tables with weighted size at most
/// `max_total`, keyed by crossing profile; optionally aperiodic only.
std::map<std::vector<int>, long long> affine_profile_counts(int l, int max_total,
                                                            bool aperiodic_only);

/// All periodic tables with weighted size at most max_total.
std::vector<LusztigAffine> enumerate_affine_tables(int l, int max_total, bool aperiodic_only);

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// sigma_hat_i as a literal product of transpositions on a wide window.
MayaCharged sigma_hat_by_transpositions(const MayaCharged& k, int i, int l);

/// One component of the image of the simultaneously-shifted operator,
/// obtained instead by finitely many single-index finite-interval
/// operators on a wide window (the starred raising/lowering at exactly
/// the shifts that can move the k-component), then one tropical
/// evaluation.  Independent of apply_hat and of the stabilized view.
long long hat_star_component_windowed(const LusztigAffine& a, int p, CrystalOp op,
                                      const MayaCharged& k);

/// Partition of a window set read off by counting absent positions below
/// each member; an independent route to the Young bijection.
Partition partition_by_hole_count(int window_lo, const std::vector<int>& members);

} // namespace bzkit::verify
