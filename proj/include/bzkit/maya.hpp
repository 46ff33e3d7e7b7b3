/**
 * @file maya.hpp
 * @brief Maya diagrams: finite-interval subsets and charged subsets of Z,
 *        with complement, the Young-diagram bijection, interval
 *        restriction/reflection, (extended affine) Weyl actions,
 *        l-quotients and l-cores.
 *
 * A charged diagram is stored canonically as (charge, partition, side);
 * any window bitset view is derived on demand.  The hole side encodes the
 * complementary diagram of the particle diagram with the same (charge,
 * partition).
 */
#pragma once

#include <optional>
#include <vector>

#include "bzkit/basics.hpp"

namespace bzkit {

/// Nonempty proper subset of the extended set [lo, hi+1].
struct MayaFinite {
    Interval interval;
    std::vector<int> members; // sorted, duplicate-free

    MayaFinite(Interval I, std::vector<int> m);

    bool contains(int j) const;
    int size() const { return static_cast<int>(members.size()); }
    std::string str() const;

    friend bool operator==(const MayaFinite&, const MayaFinite&) = default;
};

MayaFinite complement(const MayaFinite& k);

enum class FundamentalKind { Lambda, SigmaLambda };

/// The diagram of Lambda_i over I (the prefix [lo, i]) or of
/// sigma_i Lambda_i (prefix [lo, i-1] joined with {i+1}).
MayaFinite fundamental_maya(Interval I, int i, FundamentalKind kind);

/// Weakly decreasing sequence of positive integers; empty allowed.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int num_parts() const { return static_cast<int>(parts.size()); }
    int boxes() const;
    int part(int i) const { // 1-based, 0 beyond the last part
        return (i >= 1 && i <= num_parts()) ? parts[i - 1] : 0;
    }
    bool empty() const { return parts.empty(); }
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Multiset of hook lengths of the diagram, sorted descending.
std::vector<int> hook_lengths(const Partition& shape);

enum class Side { Particle, Hole };

/// Charged Maya diagram.  Particle side: the subset of Z of charge r whose
/// deviations from the ground state Z_{<=r} spell out `shape`.  Hole side:
/// the complement of that subset.
struct MayaCharged {
    int charge = 0;
    Partition shape;
    Side side = Side::Particle;

    MayaCharged() = default;
    MayaCharged(int r, Partition sh, Side s = Side::Particle)
        : charge(r), shape(std::move(sh)), side(s) {}

    static MayaCharged ground(int r, Side s = Side::Particle) {
        return MayaCharged(r, Partition{}, s);
    }

    bool contains(int j) const;

    /// Particle side only: the j-th member in the indexing k_j, j <= charge.
    int member_at(int j) const;

    /// Largest index with k_j = j (particle reading); equals charge - #parts.
    int last_ground_index() const { return charge - shape.num_parts(); }
    /// Largest member of the particle reading; equals charge + shape_1.
    int max_member() const { return charge + shape.part(1); }

    std::string str() const;

    friend bool operator==(const MayaCharged&, const MayaCharged&) = default;
    friend auto operator<=>(const MayaCharged&, const MayaCharged&) = default;
};

/// Rebuild a particle diagram from a window view: every position < window_lo
/// is a member, none beyond the listed ones is.
MayaCharged maya_from_window(int window_lo, const std::vector<int>& members_at_or_above);

Partition young_from_maya(const MayaCharged& k);
MayaCharged maya_from_young(int charge, const Partition& shape, Side side);

MayaCharged complement(const MayaCharged& k);

/// Transposition (i, i+1) acting on membership.
MayaCharged sigma_transposition(const MayaCharged& k, int i);
MayaFinite sigma_transposition(const MayaFinite& k, int i);

/// Shift every member by d; charge moves by d, shape is unchanged.
MayaCharged tau_shift(const MayaCharged& k, int d);

/// l-quotient: component j (1-based) collects k with (k-1)l + j a member.
/// Charges of the components sum to the charge of k.
std::vector<MayaCharged> l_quotient(const MayaCharged& k, int l);

/// Inverse of l_quotient.
MayaCharged l_quotient_assemble(const std::vector<MayaCharged>& components, int l);

struct AffineWeylGen {
    enum class Kind { SigmaHat, Pi } kind;
    int index = 0; // used for SigmaHat, taken mod l

    static AffineWeylGen sigma_hat(int i) { return {Kind::SigmaHat, i}; }
    static AffineWeylGen pi() { return {Kind::Pi, 0}; }
};

/// sigma_hat_i / pi acting through the l-quotient rule.
MayaCharged affine_weyl_act(const MayaCharged& k, const AffineWeylGen& g, int l);

/// Every l-quotient component is a ground state; equivalently the shape has
/// no hook length divisible by l.
bool is_l_core(const MayaCharged& k, int l);
bool is_l_core(const Partition& shape, int l);

/// k lies in the window of I: it restricts to a nonempty proper subset of
/// the extended set, with a full ground tail on the outside.
bool in_window(const MayaCharged& k, Interval I);

/// Restriction to I (precondition: in_window).
MayaFinite res_interval(const MayaCharged& k, Interval I);

/// Reflection through I: restrict, complement inside the extended set,
/// and re-attach the tail.
MayaCharged omega(const MayaCharged& k, Interval I);

/// Smallest interval I with in_window(k, I).  Ground states use the
/// degenerate convention [r, r].
Interval min_window(const MayaCharged& k);

} // namespace bzkit
