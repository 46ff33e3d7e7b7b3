/// Seeded generators for the randomized suites.  Everything here is a pure
/// function of the engine state, so a fixed seed fixes the whole run.
#pragma once

#include <random>
#include <vector>

#include "bzkit/lusztig_affine.hpp"
#include "bzkit/lusztig_finite.hpp"
#include "bzkit/maya.hpp"

namespace bzkit {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi);

/// All partitions with at most `max_boxes` boxes, ordered by (boxes, lex).
const std::vector<Partition>& partitions_up_to(int max_boxes);

Partition random_partition(Rng& rng, int max_boxes);

MayaCharged random_maya_charged(Rng& rng, int charge_bound, int max_boxes,
                                Side side = Side::Particle);

LusztigFinite random_lusztig_finite(Rng& rng, Interval I, int max_entry);

/// Random l-periodic datum with lengths < max_width and entries <= max_entry.
LusztigAffine random_lusztig_affine(Rng& rng, int l, int max_width, int max_entry);

/// As above but with one entry of every nonzero length class cleared, so
/// the result is aperiodic.
LusztigAffine random_aperiodic_affine(Rng& rng, int l, int max_width, int max_entry);

} // namespace bzkit
