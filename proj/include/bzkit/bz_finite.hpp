/**
 * @file bz_finite.hpp
 * @brief BZ data over a finite interval: validation of the edge
 *        inequalities and tropical Pluecker relations, normalizations,
 *        the * involution, weight/epsilon statistics, and Kashiwara
 *        operators carried by Lusztig coordinates.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bzkit/lusztig_finite.hpp"
#include "bzkit/maya.hpp"

namespace bzkit {

/// Total integer map on the nonempty proper subsets of the extended set
/// [lo, hi+1].  The empty and full subsets read as 0.  Components are
/// addressed by bitmask (bit t <-> element lo + t) or by MayaFinite.
class BZFinite {
public:
    explicit BZFinite(Interval I);

    const Interval& interval() const { return interval_; }
    int ext_size() const { return interval_.size() + 1; }
    uint32_t full_mask() const { return (1u << ext_size()) - 1; }

    long long comp(uint32_t mask) const;
    void set_comp(uint32_t mask, long long v);

    long long comp(const MayaFinite& k) const { return comp(mask_of(k)); }
    void set_comp(const MayaFinite& k, long long v) { set_comp(mask_of(k), v); }

    uint32_t mask_of(const MayaFinite& k) const;
    MayaFinite maya_of(uint32_t mask) const;

    friend bool operator==(const BZFinite&, const BZFinite&) = default;

private:
    Interval interval_;
    std::vector<long long> comps_; // indexed by mask; 0 and full pinned to 0
};

enum class Normalization { E, W0 };

/// Witness of a failed edge inequality or tropical Pluecker relation.
struct BZViolation {
    uint32_t base_mask; // the subset k disjoint from the named indices
    int i = 0, j = 0, k = 0; // k unused for edge inequalities
    std::string str(const BZFinite& M) const;
};

/// (BZ-1): M_{k+i} + M_{k+j} <= M_{k+i+j} + M_k for all disjoint choices.
std::vector<BZViolation> check_edge_inequalities(const BZFinite& M);

/// (BZ-2): M_{k+i+k'} + M_{k+j} = min(M_{k+i+j} + M_{k+k'}, M_{k+j+k'} + M_{k+i})
/// for all i < j < k' disjoint from k.
std::vector<BZViolation> check_tropical_plucker(const BZFinite& M);

bool is_bz_datum(const BZFinite& M);
bool is_normalized(const BZFinite& M, Normalization side);

/// Component-wise reindexing through the complement.  Swaps the two
/// normalizations; an involution.
BZFinite star(const BZFinite& M);

WeightVector weight_bz(const BZFinite& M, Normalization side);
int epsilon_bz(const BZFinite& M, int i, Normalization side);

/// BZ datum together with Lusztig coordinates witnessing it: an E-side
/// datum equals the tropical image of its coordinates, a W0-side datum
/// the row-sum variant image.  Operators act on the coordinates and are
/// re-imaged, so repeated application never re-runs the inverse search.
struct DressedBZ {
    BZFinite bz;
    Normalization side;
    std::optional<LusztigFinite> coords;

    static DressedBZ zero(Interval I, Normalization side);
};

/// Attach coordinates by inverse search when absent.
DressedBZ dress(const BZFinite& M, Normalization side);

/// Kashiwara operator on a dressed BZ datum.  E-side data accept the
/// starred operators, W0-side data the ordinary ones; raising at epsilon 0
/// returns bottom (empty optional).
std::optional<DressedBZ> apply_bz(const DressedBZ& D, int i, CrystalOp op);

/// The uniqueness clauses for one operator application: the target
/// fundamental component moved by exactly +-1, every component outside the
/// operator's movable family is unchanged, and the result is a valid
/// datum with the same normalization.
bool verify_characterization(const BZFinite& M_old, const BZFinite& M_new, int i,
                             CrystalOp op);

/// Movable family membership: for the ordinary operators the subsets with
/// i in k, i+1 not in k; for the starred ones the mirror condition.
bool in_movable_family(const BZFinite& M, uint32_t mask, int i, CrystalOp op);

} // namespace bzkit
