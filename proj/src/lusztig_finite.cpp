#include "bzkit/lusztig_finite.hpp"

#include <sstream>

namespace bzkit {

LusztigFinite::LusztigFinite(Interval I) : interval_(I) {
    int m = interval_.size();
    a_.assign(static_cast<size_t>(m) * (m + 1) / 2, 0);
}

int LusztigFinite::idx(int i, int j) const {
    // Row i holds entries (i, i+1) .. (i, hi+1).
    int lo = interval_.lo, top = interval_.ext_hi();
    int row = i - lo;
    int row_start = row * (2 * (top - lo) - row + 1) / 2;
    return row_start + (j - i - 1);
}

int LusztigFinite::at(int i, int j) const {
    if (!in_triangle(i, j))
        throw ValidationError("LusztigFinite: index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside the triangle of " +
                              interval_.str());
    return a_[idx(i, j)];
}

void LusztigFinite::set(int i, int j, int v) {
    if (!in_triangle(i, j))
        throw ValidationError("LusztigFinite: index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside the triangle of " +
                              interval_.str());
    if (v < 0) throw ValidationError("LusztigFinite: entries must be nonnegative");
    a_[idx(i, j)] = v;
}

bool LusztigFinite::is_zero() const {
    for (int v : a_)
        if (v != 0) return false;
    return true;
}

int LusztigFinite::effective_width() const {
    int w = 1;
    for (int i = interval_.lo; i <= interval_.hi; ++i)
        for (int j = i + 1; j <= interval_.ext_hi(); ++j)
            if (at(i, j) > 0 && j - i + 1 > w) w = j - i + 1;
    return w;
}

std::string LusztigFinite::str() const {
    std::ostringstream os;
    os << interval_.lo << ".." << interval_.hi << ":[";
    for (size_t t = 0; t < a_.size(); ++t) {
        if (t) os << ",";
        os << a_[t];
    }
    os << "]";
    return os.str();
}

int column_crossing_sum(const LusztigFinite& a, int i) {
    const Interval& I = a.interval();
    if (!I.contains(i))
        throw ValidationError("column_crossing_sum: index outside interval");
    int r = 0;
    for (int s = I.lo; s <= i; ++s)
        for (int t = i + 1; t <= I.ext_hi(); ++t) r += a.at(s, t);
    return r;
}

WeightVector weight(const LusztigFinite& a) {
    WeightVector w = WeightVector::finite(a.interval());
    for (int i = a.interval().lo; i <= a.interval().hi; ++i)
        w.set(i, -column_crossing_sum(a, i));
    return w;
}

std::map<int, int> partial_sums(const LusztigFinite& a, int i, SumKind kind) {
    const Interval& I = a.interval();
    if (!I.contains(i))
        throw ValidationError("partial_sums: index outside interval");
    std::map<int, int> out;
    if (kind == SumKind::Ordinary) {
        int acc = 0;
        for (int k = I.lo; k <= i; ++k) {
            acc += a.at0(k, i + 1) - a.at0(k - 1, i);
            out[k] = acc;
        }
    } else {
        int acc = 0;
        for (int k = I.hi; k >= i; --k) {
            acc += a.at0(i, k + 1) - a.at0(i + 1, k + 2);
            out[k] = acc;
        }
    }
    return out;
}

int epsilon(const LusztigFinite& a, int i, SumKind kind) {
    int best = 0;
    bool first = true;
    for (auto [k, v] : partial_sums(a, i, kind)) {
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

ArgPoints argpoints(const LusztigFinite& a, int i, SumKind kind) {
    auto sums = partial_sums(a, i, kind);
    int eps = epsilon(a, i, kind);
    ArgPoints out;
    if (kind == SumKind::Ordinary) {
        int kmin = 0, kmax = 0;
        bool first = true;
        for (auto [k, v] : sums) {
            if (v != eps) continue;
            if (first) kmin = k;
            kmax = k;
            first = false;
        }
        if (eps > 0) out.k_e = kmin;
        out.k_f = kmax;
    } else {
        // Starred side: k_e is the largest maximizer, k_f the smallest.
        int kmin = 0, kmax = 0;
        bool first = true;
        for (auto [k, v] : sums) {
            if (v != eps) continue;
            if (first) kmin = k;
            kmax = k;
            first = false;
        }
        if (eps > 0) out.k_e = kmax;
        out.k_f = kmin;
    }
    return out;
}

std::optional<LusztigFinite> apply(const LusztigFinite& a, int i, CrystalOp op) {
    const Interval& I = a.interval();
    if (!I.contains(i))
        throw ValidationError("apply: index outside interval");
    SumKind kind =
        (op == CrystalOp::E || op == CrystalOp::F) ? SumKind::Ordinary : SumKind::Star;
    int eps = epsilon(a, i, kind);
    if ((op == CrystalOp::E || op == CrystalOp::EStar) && eps == 0) return std::nullopt;
    ArgPoints pts = argpoints(a, i, kind);

    LusztigFinite out = a;
    auto bump = [&out](int s, int t, int d) {
        if (out.in_triangle(s, t)) out.set(s, t, out.at(s, t) + d);
    };
    switch (op) {
    case CrystalOp::E:
        bump(*pts.k_e, i, +1); // dropped when k_e == i
        bump(*pts.k_e, i + 1, -1);
        break;
    case CrystalOp::F:
        bump(pts.k_f, i, -1); // dropped when k_f == i
        bump(pts.k_f, i + 1, +1);
        break;
    case CrystalOp::EStar:
        bump(i, *pts.k_e + 1, -1);
        bump(i + 1, *pts.k_e + 1, +1); // dropped when k_e == i
        break;
    case CrystalOp::FStar:
        bump(i, pts.k_f + 1, +1);
        bump(i + 1, pts.k_f + 1, -1); // dropped when k_f == i
        break;
    }
    return out;
}

} // namespace bzkit
