#include "bzkit/sampling.hpp"

#include <algorithm>
#include <map>

namespace bzkit {

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

void fill_partitions(std::vector<std::vector<int>>& out, std::vector<int>& cur, int remaining,
                     int max_part) {
    out.push_back(cur);
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        fill_partitions(out, cur, remaining - p, p);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_up_to(int max_boxes) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(max_boxes);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    fill_partitions(raw, cur, max_boxes, max_boxes);
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.emplace_back(std::move(p));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.boxes() != b.boxes()) return a.boxes() < b.boxes();
        return a.parts < b.parts;
    });
    return cache.emplace(max_boxes, std::move(out)).first->second;
}

Partition random_partition(Rng& rng, int max_boxes) {
    const auto& all = partitions_up_to(max_boxes);
    return all[rand_int(rng, 0, static_cast<int>(all.size()) - 1)];
}

MayaCharged random_maya_charged(Rng& rng, int charge_bound, int max_boxes, Side side) {
    return MayaCharged(rand_int(rng, -charge_bound, charge_bound),
                       random_partition(rng, max_boxes), side);
}

LusztigFinite random_lusztig_finite(Rng& rng, Interval I, int max_entry) {
    LusztigFinite a(I);
    for (int i = I.lo; i <= I.hi; ++i)
        for (int j = i + 1; j <= I.ext_hi(); ++j) a.set(i, j, rand_int(rng, 0, max_entry));
    return a;
}

LusztigAffine random_lusztig_affine(Rng& rng, int l, int max_width, int max_entry) {
    LusztigAffine a(l);
    for (int d = 1; d < max_width; ++d)
        for (int r = 0; r < l; ++r)
            if (int v = rand_int(rng, 0, max_entry); v > 0) a.set_class(r, d, v);
    a.minimize_width();
    return a;
}

LusztigAffine random_aperiodic_affine(Rng& rng, int l, int max_width, int max_entry) {
    LusztigAffine a = random_lusztig_affine(rng, l, max_width, max_entry);
    for (int d = 1; d < a.width(); ++d) {
        bool has_zero = false;
        for (int r = 0; r < l; ++r)
            if (a.at_class(r, d) == 0) has_zero = true;
        if (!has_zero) a.set_class(rand_int(rng, 0, l - 1), d, 0);
    }
    a.minimize_width();
    return a;
}

} // namespace bzkit
