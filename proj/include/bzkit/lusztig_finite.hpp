/**
 * @file lusztig_finite.hpp
 * @brief Lusztig data over a finite interval, with the ordinary and the
 *        starred crystal structure.
 *
 * A datum assigns a nonnegative multiplicity to each pair (i, j) with
 * lo <= i < j <= hi+1.  Entries indexed outside that triangle read as 0,
 * and operator updates that would land there are dropped; this is the
 * convention under which raising and lowering invert one another and the
 * weight bookkeeping stays exact (the tests pin it down).
 */
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bzkit/basics.hpp"

namespace bzkit {

enum class CrystalOp { E, F, EStar, FStar };
enum class SumKind { Ordinary, Star };

class LusztigFinite {
public:
    explicit LusztigFinite(Interval I);

    const Interval& interval() const { return interval_; }

    bool in_triangle(int i, int j) const {
        return interval_.lo <= i && i < j && j <= interval_.ext_hi();
    }

    /// Entry at (i, j); requires (i, j) in the triangle.
    int at(int i, int j) const;
    /// Entry at (i, j), reading 0 outside the triangle.
    int at0(int i, int j) const { return in_triangle(i, j) ? at(i, j) : 0; }
    void set(int i, int j, int v);

    bool is_zero() const;
    /// 1 + max copy length with a nonzero entry (1 for the zero datum).
    int effective_width() const;

    /// Entries in row-major order; the canonical serialization base.
    const std::vector<int>& raw() const { return a_; }
    std::string str() const;

    friend bool operator==(const LusztigFinite&, const LusztigFinite&) = default;
    friend auto operator<=>(const LusztigFinite&, const LusztigFinite&) = default;

private:
    int idx(int i, int j) const;
    Interval interval_;
    std::vector<int> a_;
};

/// r_i = sum of entries crossing the cut between i and i+1.
int column_crossing_sum(const LusztigFinite& a, int i);

/// wt(a) = -sum_i r_i(a) alpha_i.
WeightVector weight(const LusztigFinite& a);

/// The telescoped partial sums behind epsilon: the ordinary kind returns
/// A_k for lo <= k <= i, the starred kind A*_k for i <= k <= hi.
std::map<int, int> partial_sums(const LusztigFinite& a, int i, SumKind kind);

int epsilon(const LusztigFinite& a, int i, SumKind kind);

struct ArgPoints {
    std::optional<int> k_e; // defined only when epsilon > 0
    int k_f = 0;
};
ArgPoints argpoints(const LusztigFinite& a, int i, SumKind kind);

/// Kashiwara operator; empty result encodes bottom (raising at epsilon 0).
std::optional<LusztigFinite> apply(const LusztigFinite& a, int i, CrystalOp op);

} // namespace bzkit
