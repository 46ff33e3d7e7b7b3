/**
 * @file basics.hpp
 * @brief Interval index sets, integer weight vectors in simple-root
 *        coordinates, and the Cartan pairings of type A_m / A_{l-1}^(1).
 *
 * Weights are kept purely as coefficient vectors over the simple roots;
 * the phi statistic of a crystal element is always recovered as
 * phi = epsilon + <h_i, wt>.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace bzkit {

/// Semantic error in user-supplied data (bad Maya diagram, malformed
/// BZ component list, index out of range, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an exact search would exceed the supported desk scale.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed integer interval I = [lo, hi] of simple-root indices.
/// The extended index set is [lo, hi+1].
struct Interval {
    int lo = 1;
    int hi = 1;

    Interval() = default;
    Interval(int lo_, int hi_) : lo(lo_), hi(hi_) {
        if (hi < lo) throw ValidationError("Interval: hi < lo");
    }

    int size() const { return hi - lo + 1; }
    int ext_lo() const { return lo; }
    int ext_hi() const { return hi + 1; } // top of the extended set
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool contains_ext(int i) const { return lo <= i && i <= hi + 1; }
    bool contains_interval(const Interval& k) const { return lo <= k.lo && k.hi <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;

    std::string str() const {
        return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }
};

enum class RootKind { Finite, Affine };

/// Integer vector in the span of the simple roots, either over a finite
/// interval or over the affine index set {0,...,l-1}.  Absent indices
/// read as 0; affine indices canonicalize mod l on write.
class WeightVector {
public:
    static WeightVector finite(Interval I) {
        WeightVector w;
        w.kind_ = RootKind::Finite;
        w.interval_ = I;
        return w;
    }
    static WeightVector affine(int l) {
        if (l < 3) throw ValidationError("WeightVector: affine rank needs l >= 3");
        WeightVector w;
        w.kind_ = RootKind::Affine;
        w.l_ = l;
        return w;
    }

    RootKind kind() const { return kind_; }
    const Interval& interval() const { return interval_; }
    int l() const { return l_; }

    int coeff(int i) const {
        i = canon(i);
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void set(int i, int c) {
        i = canon(i);
        check_index(i);
        if (c == 0)
            coeffs_.erase(i);
        else
            coeffs_[i] = c;
    }

    void add(int i, int c) { set(i, coeff(i) + c); }

    const std::map<int, int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    WeightVector& operator+=(const WeightVector& other) {
        require_same_shape(other);
        for (auto [i, c] : other.coeffs_) add(i, c);
        return *this;
    }

    friend WeightVector operator+(WeightVector a, const WeightVector& b) {
        a += b;
        return a;
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == RootKind::Finite && a.interval_ != b.interval_) return false;
        if (a.kind_ == RootKind::Affine && a.l_ != b.l_) return false;
        return a.coeffs_ == b.coeffs_;
    }

private:
    int canon(int i) const {
        if (kind_ == RootKind::Affine) {
            int r = i % l_;
            return r < 0 ? r + l_ : r;
        }
        return i;
    }
    void check_index(int i) const {
        if (kind_ == RootKind::Finite && !interval_.contains(i))
            throw ValidationError("WeightVector: index " + std::to_string(i) +
                                  " outside interval " + interval_.str());
    }
    void require_same_shape(const WeightVector& o) const {
        if (kind_ != o.kind_ ||
            (kind_ == RootKind::Finite && interval_ != o.interval_) ||
            (kind_ == RootKind::Affine && l_ != o.l_))
            throw ValidationError("WeightVector: mismatched shapes in arithmetic");
    }

    RootKind kind_ = RootKind::Finite;
    Interval interval_{1, 1};
    int l_ = 3;
    std::map<int, int> coeffs_;
};

/// <h_i, alpha_j> for the relevant Cartan matrix: 2 on the diagonal,
/// -1 on adjacency (with wrap-around distance l-1 in the affine case).
int cartan_entry_finite(int i, int j);
int cartan_entry_affine(int i, int j, int l);

/// <h_i, w> with w expanded over simple roots.
int cartan_pairing(int i, const WeightVector& w);

/// epsilon + <h_i, wt>; the uniform route to the phi statistic.
int phi_from_epsilon(int eps, int i, const WeightVector& wt);

} // namespace bzkit
