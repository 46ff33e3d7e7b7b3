#include "bzkit/bz_finite.hpp"

#include <algorithm>
#include <sstream>

#include "bzkit/tableau.hpp"

namespace bzkit {

BZFinite::BZFinite(Interval I) : interval_(I) {
    if (ext_size() > 20)
        throw ResourceError("BZFinite: interval too large for a total component map");
    comps_.assign(size_t(1) << ext_size(), 0);
}

long long BZFinite::comp(uint32_t mask) const {
    if (mask == 0 || mask == full_mask()) return 0;
    if (mask > full_mask())
        throw ValidationError("BZFinite: mask out of range");
    return comps_[mask];
}

void BZFinite::set_comp(uint32_t mask, long long v) {
    if (mask == 0 || mask >= full_mask())
        throw ValidationError("BZFinite: components exist only for nonempty proper subsets");
    comps_[mask] = v;
}

uint32_t BZFinite::mask_of(const MayaFinite& k) const {
    if (k.interval != interval_)
        throw ValidationError("BZFinite: Maya diagram over a different interval");
    uint32_t m = 0;
    for (int x : k.members) m |= 1u << (x - interval_.lo);
    return m;
}

MayaFinite BZFinite::maya_of(uint32_t mask) const {
    std::vector<int> members;
    for (int t = 0; t < ext_size(); ++t)
        if (mask & (1u << t)) members.push_back(interval_.lo + t);
    return MayaFinite(interval_, std::move(members));
}

std::string BZViolation::str(const BZFinite& M) const {
    std::ostringstream os;
    os << "base={";
    bool first = true;
    for (int t = 0; t < M.ext_size(); ++t)
        if (base_mask & (1u << t)) {
            if (!first) os << ",";
            os << (M.interval().lo + t);
            first = false;
        }
    os << "} i=" << i << " j=" << j;
    if (k != 0) os << " k=" << k;
    return os.str();
}

std::vector<BZViolation> check_edge_inequalities(const BZFinite& M) {
    std::vector<BZViolation> out;
    int n = M.ext_size();
    uint32_t full = M.full_mask();
    for (int bi = 0; bi < n; ++bi) {
        for (int bj = bi + 1; bj < n; ++bj) {
            uint32_t mi = 1u << bi, mj = 1u << bj;
            for (uint32_t base = 0; base <= full; ++base) {
                if (base & (mi | mj)) continue;
                if (M.comp(base | mi) + M.comp(base | mj) >
                    M.comp(base | mi | mj) + M.comp(base)) {
                    out.push_back({base, M.interval().lo + bi, M.interval().lo + bj, 0});
                }
            }
        }
    }
    return out;
}

std::vector<BZViolation> check_tropical_plucker(const BZFinite& M) {
    std::vector<BZViolation> out;
    int n = M.ext_size();
    uint32_t full = M.full_mask();
    for (int bi = 0; bi < n; ++bi)
        for (int bj = bi + 1; bj < n; ++bj)
            for (int bk = bj + 1; bk < n; ++bk) {
                uint32_t mi = 1u << bi, mj = 1u << bj, mk = 1u << bk;
                for (uint32_t base = 0; base <= full; ++base) {
                    if (base & (mi | mj | mk)) continue;
                    long long lhs = M.comp(base | mi | mk) + M.comp(base | mj);
                    long long rhs = std::min(M.comp(base | mi | mj) + M.comp(base | mk),
                                             M.comp(base | mj | mk) + M.comp(base | mi));
                    if (lhs != rhs)
                        out.push_back({base, M.interval().lo + bi, M.interval().lo + bj,
                                       M.interval().lo + bk});
                }
            }
    return out;
}

bool is_bz_datum(const BZFinite& M) {
    return check_edge_inequalities(M).empty() && check_tropical_plucker(M).empty();
}

bool is_normalized(const BZFinite& M, Normalization side) {
    const Interval& I = M.interval();
    for (int i = I.lo; i <= I.hi; ++i) {
        MayaFinite f = fundamental_maya(I, i, FundamentalKind::Lambda);
        uint32_t m = M.mask_of(f);
        if (side == Normalization::W0) m = M.full_mask() & ~m;
        if (M.comp(m) != 0) return false;
    }
    return true;
}

BZFinite star(const BZFinite& M) {
    BZFinite out(M.interval());
    uint32_t full = M.full_mask();
    for (uint32_t mask = 1; mask < full; ++mask) out.set_comp(mask, M.comp(full & ~mask));
    return out;
}

namespace {

// Mask of the Lambda_i diagram (the prefix [lo, i]); i = lo-1 gives the
// empty set, i = hi+1 the full one, matching the boundary conventions.
uint32_t lambda_mask(const BZFinite& M, int i) {
    const Interval& I = M.interval();
    if (i < I.lo) return 0;
    if (i > I.hi) return M.full_mask();
    return (1u << (i - I.lo + 1)) - 1;
}

uint32_t sigma_lambda_mask(const BZFinite& M, int i) {
    const Interval& I = M.interval();
    uint32_t m = (i > I.lo) ? ((1u << (i - I.lo)) - 1) : 0; // prefix [lo, i-1]
    return m | (1u << (i + 1 - I.lo));
}

} // namespace

WeightVector weight_bz(const BZFinite& M, Normalization side) {
    const Interval& I = M.interval();
    WeightVector w = WeightVector::finite(I);
    for (int i = I.lo; i <= I.hi; ++i) {
        uint32_t m = lambda_mask(M, i);
        if (side == Normalization::E) m = M.full_mask() & ~m;
        w.set(i, static_cast<int>(M.comp(m)));
    }
    return w;
}

int epsilon_bz(const BZFinite& M, int i, Normalization side) {
    const Interval& I = M.interval();
    if (!I.contains(i))
        throw ValidationError("epsilon_bz: index outside interval");
    uint32_t a = lambda_mask(M, i);
    uint32_t b = sigma_lambda_mask(M, i);
    uint32_t c = lambda_mask(M, i - 1);
    uint32_t d = lambda_mask(M, i + 1);
    if (side == Normalization::E) {
        uint32_t full = M.full_mask();
        a = full & ~a;
        b = full & ~b;
        c = full & ~c;
        d = full & ~d;
    }
    return static_cast<int>(-(M.comp(a) + M.comp(b) - M.comp(c) - M.comp(d)));
}

DressedBZ DressedBZ::zero(Interval I, Normalization side) {
    return DressedBZ{BZFinite(I), side, LusztigFinite(I)};
}

DressedBZ dress(const BZFinite& M, Normalization side) {
    return DressedBZ{M, side, phi_inverse(M, side)};
}

bool in_movable_family(const BZFinite& M, uint32_t mask, int i, CrystalOp op) {
    int bi = i - M.interval().lo;
    bool has_i = mask & (1u << bi);
    bool has_i1 = mask & (1u << (bi + 1));
    if (op == CrystalOp::E || op == CrystalOp::F) return has_i && !has_i1;
    return !has_i && has_i1;
}

std::optional<DressedBZ> apply_bz(const DressedBZ& D, int i, CrystalOp op) {
    bool starred = (op == CrystalOp::EStar || op == CrystalOp::FStar);
    if (D.side == Normalization::E && !starred)
        throw ValidationError("apply_bz: E-normalized data carry the starred operators");
    if (D.side == Normalization::W0 && starred)
        throw ValidationError("apply_bz: W0-normalized data carry the ordinary operators");

    LusztigFinite coords = D.coords ? *D.coords : phi_inverse(D.bz, D.side);
    auto moved = apply(coords, i, op);
    if (!moved) return std::nullopt;
    BZFinite image = (D.side == Normalization::E) ? phi(*moved) : phi_prime(*moved);
    return DressedBZ{std::move(image), D.side, std::move(moved)};
}

bool verify_characterization(const BZFinite& M_old, const BZFinite& M_new, int i,
                             CrystalOp op) {
    if (M_old.interval() != M_new.interval()) return false;
    bool starred = (op == CrystalOp::EStar || op == CrystalOp::FStar);
    bool raising = (op == CrystalOp::E || op == CrystalOp::EStar);

    uint32_t target = lambda_mask(M_old, i);
    if (starred) target = M_old.full_mask() & ~target;
    if (M_new.comp(target) != M_old.comp(target) + (raising ? 1 : -1)) return false;

    for (uint32_t mask = 1; mask < M_old.full_mask(); ++mask) {
        if (in_movable_family(M_old, mask, i, op)) continue;
        if (M_new.comp(mask) != M_old.comp(mask)) return false;
    }
    if (!is_bz_datum(M_new)) return false;
    return is_normalized(M_new, starred ? Normalization::E : Normalization::W0);
}

} // namespace bzkit
