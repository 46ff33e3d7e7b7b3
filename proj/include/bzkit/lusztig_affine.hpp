/**
 * @file lusztig_affine.hpp
 * @brief l-periodic, width-bounded Lusztig data (multisegments over Z/lZ),
 *        aperiodicity, the block decomposition by class minima, and the
 *        affine crystal operators.
 *
 * A table entry (residue i, length d) is the common value of a_{i', i'+d}
 * over all i' congruent to i mod l; entries vanish for d >= width.  All
 * statistics are computed exactly on a window wide enough that the
 *        finite-interval values have stabilized.
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bzkit/basics.hpp"
#include "bzkit/lusztig_finite.hpp"

namespace bzkit {

class LusztigAffine {
public:
    LusztigAffine(int l, int width = 1);

    int l() const { return l_; }
    /// Smallest N with every entry of copy length >= N equal to zero.
    int width() const { return width_; }

    int residue(int i) const { return (i % l_ + l_) % l_; }

    /// a_{i,j} for any i < j in Z.
    int at(int i, int j) const;
    int at_class(int res, int len) const;
    void set_class(int res, int len, int mult);

    bool is_zero() const;
    std::string str() const;

    /// Drop trailing all-zero length classes.
    void minimize_width();

    friend bool operator==(const LusztigAffine&, const LusztigAffine&) = default;
    friend auto operator<=>(const LusztigAffine&, const LusztigAffine&) = default;

private:
    int l_;
    int width_;
    std::vector<int> t_; // t_[res * (width-1) + (len-1)]
};

/// Every length class carries at least one zero among its l shifts.
bool is_aperiodic(const LusztigAffine& a);

/// Multiset of segments (start residue, length) with multiplicities.
struct Multisegments {
    int l = 3;
    std::map<std::pair<int, int>, int> mults; // (residue, length) -> multiplicity > 0

    std::string str() const; // e.g. "(0;2)^3 (1;1)"
    static Multisegments parse(const std::string& text, int l);
};

Multisegments to_multisegments(const LusztigAffine& a);
LusztigAffine from_multisegments(const Multisegments& ms);

/// r_p = sum of entries crossing the cut between p and p+1 (finite by the
/// width bound); wt = -sum_p r_p alphahat_p.
int crossing_sum_affine(const LusztigAffine& a, int p);
WeightVector weight_affine(const LusztigAffine& a);

/// Restriction to the triangle over a finite interval.
LusztigFinite window(const LusztigAffine& a, Interval I);

/// A window guaranteed wide enough for all statistics at p.
Interval stats_window(const LusztigAffine& a, int p);

/// epsilon_p / starred epsilon_p; independent of the representative mod l.
int epsilon_hat(const LusztigAffine& a, int p, SumKind kind);

/// Simultaneous Kashiwara operator on all shifted copies; empty encodes
/// bottom.  The width re-minimizes after the update.
std::optional<LusztigAffine> apply_hat(const LusztigAffine& a, int p, CrystalOp op);

/// Class minima z_n = min over residues of the length-n entries.
std::vector<int> z_of(const LusztigAffine& a);

/// The constant datum with every length-n entry equal to z_n.
LusztigAffine a_z_of(const std::vector<int>& z, int l);

int m_of_z(const std::vector<int>& z);

struct StrippedAffine {
    LusztigAffine base; // aperiodic remainder
    std::vector<int> z;
};

/// Subtract the class minima; the remainder is aperiodic and reassembles.
StrippedAffine strip_z(const LusztigAffine& a);

/// All raising operators vanish; equivalently a equals the constant datum
/// of its class minima.
bool is_maximal(const LusztigAffine& a);

struct TensorTView {
    LusztigAffine base;
    WeightVector shift; // -m(z) * delta
};

/// View in the block decomposition: the aperiodic remainder together with
/// the null-root multiple carried by a weight-shift factor.
TensorTView tensor_T_view(const LusztigAffine& a);

} // namespace bzkit
