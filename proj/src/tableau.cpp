#include "bzkit/tableau.hpp"

#include <algorithm>
#include <limits>

namespace bzkit {

long long KTableau::cost(const LusztigFinite& a) const {
    long long total = 0;
    int u = base.size();
    for (int p = 0; p < u; ++p)
        for (int q = p + 1; q < u; ++q) {
            int c = at(p, q);
            total += a.at0(c, c + (q - p));
        }
    return total;
}

namespace {

/// Shared recursion over tableau cells in column-major order.  Cells are
/// filled top to bottom within a column; the admissible range of a cell is
/// [max(diag, left, above+1), k_q - (q-p)], and every partial filling
/// extends, so there are no feasibility dead ends.
struct TableauWalker {
    const std::vector<int>& k;
    int u;
    std::vector<int> c; // row-major u*u, upper triangle used

    explicit TableauWalker(const std::vector<int>& members)
        : k(members), u(static_cast<int>(members.size())), c(u * u, 0) {
        for (int p = 0; p < u; ++p) c[p * u + p] = k[p];
    }

    int lo_bound(int p, int q) const {
        int lo = k[p];
        if (q - 1 > p) lo = std::max(lo, c[p * u + (q - 1)]);
        else if (q - 1 == p) lo = std::max(lo, k[p]);
        if (p > 0) lo = std::max(lo, c[(p - 1) * u + q] + 1);
        return lo;
    }
    int hi_bound(int p, int q) const { return k[q] - (q - p); }
};

struct Enumerator : TableauWalker {
    const std::function<void(const KTableau&)>& visit;
    const MayaFinite& base;

    Enumerator(const MayaFinite& kk, const std::function<void(const KTableau&)>& v)
        : TableauWalker(kk.members), visit(v), base(kk) {}

    void run() { descend(1, 0); }

    void descend(int q, int p) {
        if (q == u) {
            emit();
            return;
        }
        if (p == q) {
            descend(q + 1, 0);
            return;
        }
        int lo = lo_bound(p, q), hi = hi_bound(p, q);
        for (int v = lo; v <= hi; ++v) {
            c[p * u + q] = v;
            descend(q, p + 1);
        }
    }

    void emit() {
        KTableau t{base, {}};
        t.cells.resize(u);
        for (int p = 0; p < u; ++p)
            for (int q = p; q < u; ++q) t.cells[p].push_back(c[p * u + q]);
        visit(t);
    }
};

struct Minimizer : TableauWalker {
    const LusztigFinite& a;
    int band; // costs vanish for q - p > band
    long long best = std::numeric_limits<long long>::max();
    // Admissible remainder bound: for every cell, the cheapest value over
    // its full static range, summed over the cells still to be filled.
    std::vector<long long> rest_lb; // indexed by p * u + q

    Minimizer(const LusztigFinite& aa, const MayaFinite& kk)
        : TableauWalker(kk.members), a(aa), band(aa.effective_width() - 1),
          rest_lb(u * u + 1, 0) {
        // Accumulate in reverse visit order so rest_lb at a cell covers the
        // cell itself and everything filled after it.
        long long acc = 0;
        for (int q = u - 1; q >= 1; --q)
            for (int p = q - 1; p >= 0; --p) {
                if (q - p <= band) {
                    int cheapest = std::numeric_limits<int>::max();
                    for (int v = k[p]; v <= k[q] - (q - p); ++v)
                        cheapest = std::min(cheapest, a.at0(v, v + (q - p)));
                    acc += cheapest;
                }
                rest_lb[p * u + q] = acc;
            }
    }

    long long remaining(int q, int p) const {
        // Bound over cells at or after (q,p) in visit order (columns
        // ascending, rows ascending within a column).
        while (true) {
            if (q >= u) return 0;
            if (p >= q) {
                ++q;
                p = 0;
                continue;
            }
            return rest_lb[p * u + q];
        }
    }

    long long run() {
        descend(1, 0, 0);
        return best;
    }

    void descend(int q, int p, long long cost) {
        if (q == u) {
            if (cost < best) best = cost;
            return;
        }
        if (p == q) {
            descend(q + 1, 0, cost);
            return;
        }
        if (cost + remaining(q, p) >= best) return;
        int lo = lo_bound(p, q);
        if (q - p > band) {
            // Zero cost regardless of the value; the least admissible value
            // only relaxes later constraints, so it is never worse.
            c[p * u + q] = lo;
            descend(q, p + 1, cost);
            return;
        }
        int hi = hi_bound(p, q);
        if (lo == hi) {
            c[p * u + q] = lo;
            descend(q, p + 1, cost + a.at0(lo, lo + (q - p)));
            return;
        }
        // Of the values sharing a cost only the least can matter: a smaller
        // value only relaxes the bounds seen by later cells.  Try the
        // cheapest cost levels first so the running bound bites early.
        std::vector<std::pair<int, int>> order; // (cost, least value with it)
        for (int v = lo; v <= hi; ++v) {
            int w = a.at0(v, v + (q - p));
            bool seen = false;
            for (auto [w2, v2] : order)
                if (w2 == w) {
                    seen = true;
                    break;
                }
            if (!seen) order.emplace_back(w, v);
        }
        std::stable_sort(order.begin(), order.end());
        for (auto [w, v] : order) {
            c[p * u + q] = v;
            descend(q, p + 1, cost + w);
        }
    }
};

} // namespace

void enumerate_k_tableaux(const MayaFinite& k,
                          const std::function<void(const KTableau&)>& visit) {
    Enumerator e(k, visit);
    e.run();
}

std::vector<KTableau> all_k_tableaux(const MayaFinite& k) {
    std::vector<KTableau> out;
    enumerate_k_tableaux(k, [&out](const KTableau& t) { out.push_back(t); });
    return out;
}

long long min_cost(const LusztigFinite& a, const MayaFinite& k) {
    if (a.interval() != k.interval)
        throw ValidationError("min_cost: datum and diagram over different intervals");
    Minimizer m(a, k);
    return m.run();
}

long long min_cost_enumerated(const LusztigFinite& a, const MayaFinite& k) {
    long long best = std::numeric_limits<long long>::max();
    enumerate_k_tableaux(k, [&](const KTableau& t) { best = std::min(best, t.cost(a)); });
    return best;
}

long long phi_component(const LusztigFinite& a, const MayaFinite& k) {
    if (a.interval() != k.interval)
        throw ValidationError("phi_component: datum and diagram over different intervals");
    long long columns = 0;
    for (int j : k.members)
        for (int i = a.interval().lo; i < j; ++i) columns += a.at(i, j);
    return -columns + min_cost(a, k);
}

BZFinite phi(const LusztigFinite& a) {
    BZFinite M(a.interval());
    for (uint32_t mask = 1; mask < M.full_mask(); ++mask)
        M.set_comp(mask, phi_component(a, M.maya_of(mask)));
    return M;
}

long long phi_prime_component(const LusztigFinite& a, const MayaFinite& k) {
    if (a.interval() != k.interval)
        throw ValidationError("phi_prime_component: datum and diagram over different intervals");
    long long rows = 0;
    for (int i : k.members)
        for (int j = i + 1; j <= a.interval().ext_hi(); ++j) rows += a.at(i, j);
    return -rows + min_cost(a, k);
}

BZFinite phi_prime(const LusztigFinite& a) {
    BZFinite M(a.interval());
    for (uint32_t mask = 1; mask < M.full_mask(); ++mask)
        M.set_comp(mask, phi_prime_component(a, M.maya_of(mask)));
    return M;
}

namespace {

struct InverseSearch {
    const BZFinite& M;
    Interval I;
    std::vector<std::pair<int, int>> slots; // (i, j) in row-major order
    std::vector<long long> target;          // crossing sums indexed by i - lo
    std::vector<long long> partial;
    LusztigFinite cand;
    std::optional<LusztigFinite> found;

    InverseSearch(const BZFinite& m, std::vector<long long> r)
        : M(m), I(m.interval()), target(std::move(r)), partial(I.size(), 0), cand(I) {
        for (int i = I.lo; i <= I.hi; ++i)
            for (int j = i + 1; j <= I.ext_hi(); ++j) slots.emplace_back(i, j);
    }

    bool try_all(size_t s, Normalization side) {
        if (s == slots.size()) {
            if (partial != target) return false;
            BZFinite image = (side == Normalization::E) ? phi(cand) : phi_prime(cand);
            if (image == M) {
                found = cand;
                return true;
            }
            return false;
        }
        auto [i, j] = slots[s];
        long long cap = std::numeric_limits<long long>::max();
        for (int t = i; t < j; ++t) cap = std::min(cap, target[t - I.lo] - partial[t - I.lo]);
        for (long long v = 0; v <= cap; ++v) {
            cand.set(i, j, static_cast<int>(v));
            for (int t = i; t < j; ++t) partial[t - I.lo] += v;
            if (try_all(s + 1, side)) return true;
            for (int t = i; t < j; ++t) partial[t - I.lo] -= v;
        }
        cand.set(i, j, 0);
        return false;
    }
};

} // namespace

LusztigFinite phi_inverse(const BZFinite& M, Normalization side) {
    const Interval& I = M.interval();
    if (I.size() > 4)
        throw ResourceError("phi_inverse: bounded search supports intervals of size <= 4");
    std::vector<long long> r;
    for (int i = I.lo; i <= I.hi; ++i) {
        MayaFinite f = fundamental_maya(I, i, FundamentalKind::Lambda);
        uint32_t m = M.mask_of(f);
        if (side == Normalization::E) m = M.full_mask() & ~m;
        long long ri = -M.comp(m);
        if (ri < 0)
            throw ValidationError("phi_inverse: input has no preimage (negative crossing sum)");
        r.push_back(ri);
    }
    InverseSearch search(M, std::move(r));
    if (!search.try_all(0, side))
        throw ValidationError("phi_inverse: input is not in the image (no preimage found)");
    return *search.found;
}

} // namespace bzkit
