/**
 * @file tableau.hpp
 * @brief k-tableaux and the tropical minimization that sends a Lusztig
 *        datum to a BZ datum, its row-sum variant, and a bounded-search
 *        inverse for desk-scale intervals.
 *
 * A k-tableau over k = {k_1 < ... < k_u} is an upper-triangular integer
 * array with fixed diagonal k_p, weakly increasing rows and strictly
 * increasing columns.  Monotonicity forces k_p <= c_{p,q} <= k_q - (q-p),
 * which keeps every referenced entry inside the triangle.
 */
#pragma once

#include <functional>

#include "bzkit/bz_finite.hpp"
#include "bzkit/lusztig_finite.hpp"
#include "bzkit/maya.hpp"

namespace bzkit {

/// Upper-triangular filling including the fixed diagonal.
struct KTableau {
    MayaFinite base;
    // cells[p][q-p] for 0-based row p, with cells[p][0] the diagonal entry.
    std::vector<std::vector<int>> cells;

    int at(int p, int q) const { return cells[p][q - p]; } // 0-based, p <= q
    long long cost(const LusztigFinite& a) const;
};

/// Visit every k-tableau exactly once.  Plain recursive enumeration; this
/// is the reference route the optimized minimizer is checked against.
void enumerate_k_tableaux(const MayaFinite& k,
                          const std::function<void(const KTableau&)>& visit);

std::vector<KTableau> all_k_tableaux(const MayaFinite& k);

/// min over k-tableaux of sum a_{c_{p,q}, c_{p,q}+(q-p)}.  Depth-first
/// search column by column with a running-sum bound; cells whose copy
/// length already exceeds the support width of `a` cost nothing and are
/// pinned to their least admissible value.
long long min_cost(const LusztigFinite& a, const MayaFinite& k);

/// Same minimum via exhaustive tableau enumeration (no pruning).
long long min_cost_enumerated(const LusztigFinite& a, const MayaFinite& k);

/// Column-sum part plus the tropical minimum: one component of the
/// E-normalized image of a.
long long phi_component(const LusztigFinite& a, const MayaFinite& k);

/// Total component map of a; an E-normalized BZ datum.
BZFinite phi(const LusztigFinite& a);

/// Row-sum variant: one component of the W0-normalized image.
long long phi_prime_component(const LusztigFinite& a, const MayaFinite& k);

BZFinite phi_prime(const LusztigFinite& a);

/// The unique preimage of a valid (E- or W0-normalized) BZ datum, found by
/// bounded search over entry assignments with the crossing sums read off
/// the fundamental components.  Throws ValidationError when the input is
/// not in the image, ResourceError beyond the supported interval size.
LusztigFinite phi_inverse(const BZFinite& M, Normalization side);

} // namespace bzkit
