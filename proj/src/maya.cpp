#include "bzkit/maya.hpp"

#include <algorithm>
#include <sstream>

namespace bzkit {

namespace {

int floordiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

// ---------------------------------------------------------------------------
// MayaFinite
// ---------------------------------------------------------------------------

MayaFinite::MayaFinite(Interval I, std::vector<int> m) : interval(I), members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty())
        throw ValidationError("MayaFinite: empty diagram is excluded");
    if (static_cast<int>(members.size()) == interval.size() + 1)
        throw ValidationError("MayaFinite: full diagram is excluded");
    for (int x : members)
        if (!interval.contains_ext(x))
            throw ValidationError("MayaFinite: member " + std::to_string(x) +
                                  " outside extended set of " + interval.str());
}

bool MayaFinite::contains(int j) const {
    return std::binary_search(members.begin(), members.end(), j);
}

std::string MayaFinite::str() const {
    std::ostringstream os;
    os << "I=" << interval.lo << ".." << interval.hi << ";{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) os << ",";
        os << members[i];
    }
    os << "}";
    return os.str();
}

MayaFinite complement(const MayaFinite& k) {
    std::vector<int> rest;
    for (int x = k.interval.ext_lo(); x <= k.interval.ext_hi(); ++x)
        if (!k.contains(x)) rest.push_back(x);
    return MayaFinite(k.interval, std::move(rest));
}

MayaFinite fundamental_maya(Interval I, int i, FundamentalKind kind) {
    if (!I.contains(i))
        throw ValidationError("fundamental_maya: index outside interval");
    std::vector<int> m;
    if (kind == FundamentalKind::Lambda) {
        for (int x = I.lo; x <= i; ++x) m.push_back(x);
    } else {
        for (int x = I.lo; x <= i - 1; ++x) m.push_back(x);
        m.push_back(i + 1);
    }
    return MayaFinite(I, std::move(m));
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw ValidationError("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ValidationError("Partition: parts must be weakly decreasing");
    }
}

int Partition::boxes() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

std::vector<int> hook_lengths(const Partition& shape) {
    const auto& p = shape.parts;
    std::vector<int> hooks;
    for (int i = 0; i < shape.num_parts(); ++i) {
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (int ii = i + 1; ii < shape.num_parts() && p[ii] > j; ++ii) ++leg;
            hooks.push_back(arm + leg + 1);
        }
    }
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

// ---------------------------------------------------------------------------
// MayaCharged
// ---------------------------------------------------------------------------

bool MayaCharged::contains(int j) const {
    // Membership of the underlying particle diagram of (charge, shape).
    bool in_particle;
    int p = shape.num_parts();
    if (j <= charge - p) {
        in_particle = true;
    } else {
        in_particle = false;
        for (int i = 1; i <= p; ++i) {
            if (charge - i + 1 + shape.part(i) == j) {
                in_particle = true;
                break;
            }
        }
    }
    return side == Side::Particle ? in_particle : !in_particle;
}

int MayaCharged::member_at(int j) const {
    if (side != Side::Particle)
        throw ValidationError("member_at: defined for the particle indexing only");
    if (j > charge)
        throw ValidationError("member_at: index above charge");
    return j + shape.part(charge - j + 1);
}

std::string MayaCharged::str() const {
    std::ostringstream os;
    os << "r=" << charge << ";lambda=" << shape.str();
    if (side == Side::Hole) os << ";hole";
    return os.str();
}

MayaCharged maya_from_window(int window_lo, const std::vector<int>& members_at_or_above) {
    std::vector<int> m = members_at_or_above;
    std::sort(m.begin(), m.end());
    for (int x : m)
        if (x < window_lo)
            throw ValidationError("maya_from_window: member below window");
    int u = static_cast<int>(m.size());
    int charge = (window_lo - 1) + u;
    std::vector<int> parts;
    for (int i = 1; i <= u; ++i) {
        int lam = m[u - i] - (charge - i + 1);
        if (lam < 0) throw ValidationError("maya_from_window: inconsistent members");
        if (lam > 0) parts.push_back(lam);
    }
    return MayaCharged(charge, Partition(std::move(parts)), Side::Particle);
}

Partition young_from_maya(const MayaCharged& k) { return k.shape; }

MayaCharged maya_from_young(int charge, const Partition& shape, Side side) {
    return MayaCharged(charge, shape, side);
}

MayaCharged complement(const MayaCharged& k) {
    return MayaCharged(k.charge, k.shape,
                       k.side == Side::Particle ? Side::Hole : Side::Particle);
}

namespace {

/// All members of the particle diagram k that are >= floor_pos, where
/// floor_pos <= last_ground_index + 1 so that nothing below is missed.
std::vector<int> particle_members_from(const MayaCharged& k, int floor_pos) {
    std::vector<int> out;
    for (int x = floor_pos; x <= k.last_ground_index(); ++x) out.push_back(x);
    int p = k.shape.num_parts();
    for (int i = p; i >= 1; --i) {
        int mem = k.charge - i + 1 + k.shape.part(i);
        if (mem >= floor_pos) out.push_back(mem);
    }
    return out;
}

} // namespace

MayaCharged sigma_transposition(const MayaCharged& k, int i) {
    if (k.side == Side::Hole)
        return complement(sigma_transposition(complement(k), i));
    bool a = k.contains(i), b = k.contains(i + 1);
    if (a == b) return k;
    int wlo = std::min(i, k.last_ground_index() + 1);
    std::vector<int> m = particle_members_from(k, wlo);
    auto toggle = [&m](int x, bool present_now) {
        if (present_now)
            m.erase(std::find(m.begin(), m.end(), x));
        else
            m.push_back(x);
    };
    toggle(i, a);
    toggle(i + 1, b);
    return maya_from_window(wlo, m);
}

MayaFinite sigma_transposition(const MayaFinite& k, int i) {
    if (!(k.interval.contains_ext(i) && k.interval.contains_ext(i + 1)))
        throw ValidationError("sigma_transposition: i, i+1 must lie in the extended set");
    bool a = k.contains(i), b = k.contains(i + 1);
    if (a == b) return k;
    std::vector<int> m = k.members;
    for (int& x : m) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return MayaFinite(k.interval, std::move(m));
}

MayaCharged tau_shift(const MayaCharged& k, int d) {
    return MayaCharged(k.charge + d, k.shape, k.side);
}

std::vector<MayaCharged> l_quotient(const MayaCharged& k, int l) {
    if (l < 3) throw ValidationError("l_quotient: need l >= 3");
    if (k.side == Side::Hole)
        throw ValidationError("l_quotient: particle side required");
    int j0 = k.last_ground_index();
    int kmax = k.max_member();
    std::vector<MayaCharged> out;
    out.reserve(l);
    for (int j = 1; j <= l; ++j) {
        // q belongs to component j iff (q-1)l + j is a member of k.
        // Positions (q-1)l + j <= j0 are all members.
        int qlo = floordiv(j0 - j, l) + 2; // smallest q with (q-1)l + j > j0
        int qhi = floordiv(kmax - j, l) + 1;
        std::vector<int> members;
        for (int q = qlo; q <= qhi; ++q)
            if (k.contains((q - 1) * l + j)) members.push_back(q);
        out.push_back(maya_from_window(qlo, members));
    }
    return out;
}

MayaCharged l_quotient_assemble(const std::vector<MayaCharged>& components, int l) {
    if (static_cast<int>(components.size()) != l)
        throw ValidationError("l_quotient_assemble: expected l components");
    for (const auto& c : components)
        if (c.side != Side::Particle)
            throw ValidationError("l_quotient_assemble: particle components required");
    int x_floor = 0, x_top = 0;
    for (int j = 1; j <= l; ++j) {
        const auto& c = components[j - 1];
        int lo_j = (c.last_ground_index() - 1) * l + j;
        int hi_j = (c.max_member() - 1) * l + j;
        if (j == 1 || lo_j < x_floor) x_floor = lo_j;
        if (j == 1 || hi_j > x_top) x_top = hi_j;
    }
    std::vector<int> members;
    for (int x = x_floor + 1; x <= x_top; ++x) {
        int j = ((x - 1) % l + l) % l + 1;
        int q = (x - j) / l + 1;
        if (components[j - 1].contains(q)) members.push_back(x);
    }
    return maya_from_window(x_floor + 1, members);
}

MayaCharged affine_weyl_act(const MayaCharged& k, const AffineWeylGen& g, int l) {
    if (k.side == Side::Hole)
        throw ValidationError("affine_weyl_act: particle side required");
    auto q = l_quotient(k, l);
    std::vector<MayaCharged> out;
    if (g.kind == AffineWeylGen::Kind::Pi) {
        out.push_back(tau_shift(q[l - 1], 1));
        for (int j = 1; j <= l - 1; ++j) out.push_back(q[j - 1]);
    } else {
        int i = (g.index % l + l) % l;
        out = q;
        if (i == 0) {
            out[0] = tau_shift(q[l - 1], 1);
            out[l - 1] = tau_shift(q[0], -1);
        } else {
            std::swap(out[i - 1], out[i]);
        }
    }
    return l_quotient_assemble(out, l);
}

bool is_l_core(const MayaCharged& k, int l) {
    for (const auto& c : l_quotient(MayaCharged(k.charge, k.shape, Side::Particle), l))
        if (!c.shape.empty()) return false;
    return true;
}

bool is_l_core(const Partition& shape, int l) {
    for (int h : hook_lengths(shape))
        if (h % l == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Window restriction and reflection
// ---------------------------------------------------------------------------

bool in_window(const MayaCharged& k, Interval I) {
    if (k.side == Side::Hole) return in_window(complement(k), I);
    for (int x = std::min(k.last_ground_index() + 1, I.lo - 1); x <= I.lo - 1; ++x)
        if (!k.contains(x)) return false;
    if (k.max_member() > I.ext_hi()) return false;
    int count = 0;
    for (int x = I.ext_lo(); x <= I.ext_hi(); ++x)
        if (k.contains(x)) ++count;
    return count > 0 && count <= I.size();
}

MayaFinite res_interval(const MayaCharged& k, Interval I) {
    if (!in_window(k, I))
        throw ValidationError("res_interval: " + k.str() + " not in window of " + I.str());
    std::vector<int> m;
    for (int x = I.ext_lo(); x <= I.ext_hi(); ++x)
        if (k.contains(x)) m.push_back(x);
    return MayaFinite(I, std::move(m));
}

MayaCharged omega(const MayaCharged& k, Interval I) {
    if (k.side == Side::Hole) return complement(omega(complement(k), I));
    MayaFinite r = res_interval(k, I);
    std::vector<int> flipped;
    for (int x = I.ext_lo(); x <= I.ext_hi(); ++x)
        if (!r.contains(x)) flipped.push_back(x);
    return maya_from_window(I.lo, flipped);
}

Interval min_window(const MayaCharged& k) {
    if (k.shape.empty()) return Interval(k.charge, k.charge);
    return Interval(k.last_ground_index() + 1, k.max_member() - 1);
}

} // namespace bzkit
