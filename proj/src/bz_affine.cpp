#include "bzkit/bz_affine.hpp"

#include <sstream>

#include "bzkit/bz_finite.hpp"
#include "bzkit/tableau.hpp"

namespace bzkit {

Interval stable_interval(const MayaCharged& k, int N) {
    Interval mw = min_window(k);
    return Interval(mw.lo - N, mw.hi);
}

Interval theta_stable_interval(const MayaCharged& k, int N, int l) {
    int j0 = k.last_ground_index();
    int kr = k.max_member();
    return Interval(j0 - (2 * l + 1) * N + 1, kr + N - 1);
}

BZAffineView::BZAffineView(LusztigAffine generator)
    : gen_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    gen_.minimize_width();
}

BZAffineView::Key BZAffineView::key_of(const MayaCharged& k) const {
    int r = k.charge % gen_.l();
    if (r < 0) r += gen_.l();
    return Key{r, k.shape};
}

long long BZAffineView::component_uncached(const MayaCharged& k) const {
    if (k.side != Side::Particle)
        throw ValidationError("component: particle-side diagram required");
    Interval I0 = stable_interval(k, gen_.width());
    return phi_component(window(gen_, I0), res_interval(k, I0));
}

long long BZAffineView::component(const MayaCharged& k) const {
    if (k.side != Side::Particle)
        throw ValidationError("component: particle-side diagram required");
    Key key = key_of(k);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->memo.find(key);
        if (it != cache_->memo.end()) return it->second;
    }
    long long v = component_uncached(k);
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->memo.emplace(key, v);
    return it->second;
}

long long BZAffineView::theta_component(const MayaCharged& k) const {
    if (k.side != Side::Particle)
        throw ValidationError("theta_component: particle-side diagram required");
    Interval I = theta_stable_interval(k, gen_.width(), gen_.l());
    return component(omega(k, I));
}

WeightVector BZAffineView::weight() const {
    WeightVector w = WeightVector::affine(gen_.l());
    for (int p = 0; p < gen_.l(); ++p)
        w.set(p, static_cast<int>(theta_component(MayaCharged::ground(p))));
    return w;
}

int BZAffineView::epsilon_hat_star(int p) const {
    p = gen_.residue(p);
    long long t_p = theta_component(MayaCharged::ground(p));
    long long t_sp = theta_component(MayaCharged(p, Partition({1})));
    long long t_up = theta_component(MayaCharged::ground(p + 1));
    long long t_dn = theta_component(MayaCharged::ground(p - 1));
    return static_cast<int>(-(t_p + t_sp - t_up - t_dn));
}

std::optional<BZAffineView> BZAffineView::apply_hat_star(int p, CrystalOp op) const {
    if (op != CrystalOp::EStar && op != CrystalOp::FStar)
        throw ValidationError("apply_hat_star: only the starred operators act on this side");
    auto moved = apply_hat(gen_, p, op);
    if (!moved) return std::nullopt;
    return BZAffineView(std::move(*moved));
}

long long BZAffineView::star_component(const MayaCharged& hole_k) const {
    if (hole_k.side != Side::Hole)
        throw ValidationError("star_component: hole-side diagram required");
    return component(complement(hole_k));
}

long long BZAffineView::phi_prime_component_z(const MayaCharged& hole_k) const {
    if (hole_k.side != Side::Hole)
        throw ValidationError("phi_prime_component_z: hole-side diagram required");
    Interval mw = min_window(hole_k);
    Interval I0(mw.lo, mw.hi + gen_.width());
    return phi_prime_component(window(gen_, I0), res_interval(hole_k, I0));
}

void BZAffineView::inject_component(const MayaCharged& k, long long v) {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->memo[key_of(k)] = v;
}

bool sigma_invariance_check(const BZAffineView& view, const std::vector<MayaCharged>& sample) {
    for (const auto& k : sample) {
        if (k.side != Side::Particle) continue;
        if (view.component_uncached(k) !=
            view.component_uncached(tau_shift(k, view.l())))
            return false;
    }
    return true;
}

EBZValidationReport validate_e_bz(const BZAffineView& view, Interval W, int size_cap) {
    EBZValidationReport rep;
    for (int lo = W.lo; lo <= W.hi; ++lo) {
        for (int hi = lo; hi <= W.hi && hi - lo + 1 <= size_cap; ++hi) {
            Interval K(lo, hi);
            BZFinite M(K);
            for (uint32_t mask = 1; mask < M.full_mask(); ++mask) {
                MayaFinite kf = M.maya_of(mask);
                M.set_comp(mask, view.component(maya_from_window(K.lo, kf.members)));
                ++rep.components_evaluated;
            }
            ++rep.intervals_checked;
            for (const auto& v : check_edge_inequalities(M)) {
                rep.ok = false;
                rep.failures.push_back("edge inequality fails on " + K.str() + " at " +
                                       v.str(M));
            }
            for (const auto& v : check_tropical_plucker(M)) {
                rep.ok = false;
                rep.failures.push_back("tropical relation fails on " + K.str() + " at " +
                                       v.str(M));
            }
            if (!is_normalized(M, Normalization::E)) {
                rep.ok = false;
                rep.failures.push_back("normalization fails on " + K.str());
            }
        }
    }
    // Reflected components must not move when the window grows.
    for (int r = W.lo; r <= W.hi; ++r) {
        std::vector<MayaCharged> probes = {MayaCharged::ground(r),
                                           MayaCharged(r, Partition({1})),
                                           MayaCharged(r, Partition({2, 1}))};
        for (const auto& k : probes) {
            Interval I = theta_stable_interval(k, view.support_width(), view.l());
            long long base = view.component(omega(k, I));
            for (int d = 1; d <= view.l(); ++d) {
                Interval J(I.lo - d, I.hi + d);
                if (view.component(omega(k, J)) != base) {
                    rep.ok = false;
                    rep.failures.push_back("reflected component unstable at " + k.str());
                }
            }
        }
    }
    return rep;
}

} // namespace bzkit
