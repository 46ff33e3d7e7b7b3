#include "bzkit/lusztig_affine.hpp"

#include <algorithm>
#include <sstream>

namespace bzkit {

LusztigAffine::LusztigAffine(int l, int width) : l_(l), width_(width) {
    if (l_ < 3) throw ValidationError("LusztigAffine: need l >= 3");
    if (width_ < 1) throw ValidationError("LusztigAffine: width must be >= 1");
    t_.assign(static_cast<size_t>(l_) * (width_ - 1), 0);
}

int LusztigAffine::at(int i, int j) const {
    if (i >= j) throw ValidationError("LusztigAffine: need i < j");
    int d = j - i;
    if (d >= width_) return 0;
    return t_[residue(i) * (width_ - 1) + (d - 1)];
}

int LusztigAffine::at_class(int res, int len) const {
    if (len < 1) throw ValidationError("LusztigAffine: length must be positive");
    if (len >= width_) return 0;
    return t_[residue(res) * (width_ - 1) + (len - 1)];
}

void LusztigAffine::set_class(int res, int len, int mult) {
    if (len < 1) throw ValidationError("LusztigAffine: length must be positive");
    if (mult < 0) throw ValidationError("LusztigAffine: multiplicities are nonnegative");
    if (len >= width_) {
        if (mult == 0) return;
        // Grow the table to admit the new length class.
        int new_width = len + 1;
        std::vector<int> nt(static_cast<size_t>(l_) * (new_width - 1), 0);
        for (int r = 0; r < l_; ++r)
            for (int d = 1; d < width_; ++d)
                nt[r * (new_width - 1) + (d - 1)] = t_[r * (width_ - 1) + (d - 1)];
        t_ = std::move(nt);
        width_ = new_width;
    }
    t_[residue(res) * (width_ - 1) + (len - 1)] = mult;
}

bool LusztigAffine::is_zero() const {
    for (int v : t_)
        if (v != 0) return false;
    return true;
}

void LusztigAffine::minimize_width() {
    int w = width_;
    auto class_zero = [&](int d) {
        for (int r = 0; r < l_; ++r)
            if (t_[r * (width_ - 1) + (d - 1)] != 0) return false;
        return true;
    };
    while (w > 1 && class_zero(w - 1)) --w;
    if (w == width_) return;
    std::vector<int> nt(static_cast<size_t>(l_) * (w - 1), 0);
    for (int r = 0; r < l_; ++r)
        for (int d = 1; d < w; ++d) nt[r * (w - 1) + (d - 1)] = t_[r * (width_ - 1) + (d - 1)];
    t_ = std::move(nt);
    width_ = w;
}

std::string LusztigAffine::str() const {
    std::ostringstream os;
    os << "l=" << l_ << ";N=" << width_ << ";[";
    for (size_t t = 0; t < t_.size(); ++t) {
        if (t) os << ",";
        os << t_[t];
    }
    os << "]";
    return os.str();
}

bool is_aperiodic(const LusztigAffine& a) {
    for (int d = 1; d < a.width(); ++d) {
        bool has_zero = false;
        for (int r = 0; r < a.l(); ++r)
            if (a.at_class(r, d) == 0) {
                has_zero = true;
                break;
            }
        if (!has_zero) return false;
    }
    return true;
}

std::string Multisegments::str() const {
    if (mults.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (auto [seg, m] : mults) {
        if (!first) os << " ";
        os << "(" << seg.first << ";" << seg.second << ")";
        if (m > 1) os << "^" << m;
        first = false;
    }
    return os.str();
}

Multisegments Multisegments::parse(const std::string& text, int l) {
    Multisegments ms;
    ms.l = l;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "(empty)") return ms;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw ValidationError("multisegment: expected '('");
        size_t semi = text.find(';', pos);
        size_t close = text.find(')', pos);
        if (semi == std::string::npos || close == std::string::npos || semi > close)
            throw ValidationError("multisegment: malformed segment");
        int res = std::stoi(text.substr(pos + 1, semi - pos - 1));
        int len = std::stoi(text.substr(semi + 1, close - semi - 1));
        pos = close + 1;
        int mult = 1;
        if (pos < text.size() && text[pos] == '^') {
            size_t next = pos + 1;
            size_t end = next;
            while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])))) ++end;
            mult = std::stoi(text.substr(next, end - next));
            pos = end;
        }
        if (len < 1 || mult < 1) throw ValidationError("multisegment: bad length or multiplicity");
        ms.mults[{((res % l) + l) % l, len}] += mult;
    }
    return ms;
}

Multisegments to_multisegments(const LusztigAffine& a) {
    Multisegments ms;
    ms.l = a.l();
    for (int r = 0; r < a.l(); ++r)
        for (int d = 1; d < a.width(); ++d)
            if (int m = a.at_class(r, d); m > 0) ms.mults[{r, d}] = m;
    return ms;
}

LusztigAffine from_multisegments(const Multisegments& ms) {
    LusztigAffine a(ms.l);
    for (auto [seg, m] : ms.mults) a.set_class(seg.first, seg.second, m);
    a.minimize_width();
    return a;
}

int crossing_sum_affine(const LusztigAffine& a, int p) {
    // Entries (s, t) with s <= p < t; lengths below the width bound.
    int total = 0;
    for (int d = 1; d < a.width(); ++d)
        for (int s = p - d + 1; s <= p; ++s) total += a.at(s, s + d);
    return total;
}

WeightVector weight_affine(const LusztigAffine& a) {
    WeightVector w = WeightVector::affine(a.l());
    for (int p = 0; p < a.l(); ++p) w.set(p, -crossing_sum_affine(a, p));
    return w;
}

LusztigFinite window(const LusztigAffine& a, Interval I) {
    LusztigFinite out(I);
    for (int i = I.lo; i <= I.hi; ++i)
        for (int j = i + 1; j <= I.ext_hi(); ++j) out.set(i, j, a.at(i, j));
    return out;
}

Interval stats_window(const LusztigAffine& a, int p) {
    int reach = (a.width() + 1) * a.l();
    return Interval(p - reach, p + reach);
}

int epsilon_hat(const LusztigAffine& a, int p, SumKind kind) {
    p = a.residue(p);
    return epsilon(window(a, stats_window(a, p)), p, kind);
}

std::optional<LusztigAffine> apply_hat(const LusztigAffine& a, int p, CrystalOp op) {
    p = a.residue(p);
    LusztigFinite w = window(a, stats_window(a, p));
    SumKind kind =
        (op == CrystalOp::E || op == CrystalOp::F) ? SumKind::Ordinary : SumKind::Star;
    int eps = epsilon(w, p, kind);
    if ((op == CrystalOp::E || op == CrystalOp::EStar) && eps == 0) return std::nullopt;
    ArgPoints pts = argpoints(w, p, kind);

    LusztigAffine out = a;
    auto bump = [&out](int s, int t, int d) {
        if (s < t) out.set_class(out.residue(s), t - s, out.at(s, t) + d);
    };
    switch (op) {
    case CrystalOp::E:
        bump(*pts.k_e, p, +1);
        bump(*pts.k_e, p + 1, -1);
        break;
    case CrystalOp::F:
        bump(pts.k_f, p, -1);
        bump(pts.k_f, p + 1, +1);
        break;
    case CrystalOp::EStar:
        bump(p, *pts.k_e + 1, -1);
        bump(p + 1, *pts.k_e + 1, +1);
        break;
    case CrystalOp::FStar:
        bump(p, pts.k_f + 1, +1);
        bump(p + 1, pts.k_f + 1, -1);
        break;
    }
    out.minimize_width();
    return out;
}

std::vector<int> z_of(const LusztigAffine& a) {
    std::vector<int> z;
    for (int d = 1; d < a.width(); ++d) {
        int mn = a.at_class(0, d);
        for (int r = 1; r < a.l(); ++r) mn = std::min(mn, a.at_class(r, d));
        z.push_back(mn);
    }
    while (!z.empty() && z.back() == 0) z.pop_back();
    return z;
}

LusztigAffine a_z_of(const std::vector<int>& z, int l) {
    LusztigAffine a(l);
    for (size_t n = 0; n < z.size(); ++n) {
        if (z[n] < 0) throw ValidationError("a_z_of: entries must be nonnegative");
        for (int r = 0; r < l; ++r) a.set_class(r, static_cast<int>(n) + 1, z[n]);
    }
    a.minimize_width();
    return a;
}

int m_of_z(const std::vector<int>& z) {
    int m = 0;
    for (size_t n = 0; n < z.size(); ++n) m += static_cast<int>(n + 1) * z[n];
    return m;
}

StrippedAffine strip_z(const LusztigAffine& a) {
    std::vector<int> z = z_of(a);
    LusztigAffine base(a.l());
    for (int d = 1; d < a.width(); ++d) {
        int zd = (d - 1 < static_cast<int>(z.size())) ? z[d - 1] : 0;
        for (int r = 0; r < a.l(); ++r)
            if (int v = a.at_class(r, d) - zd; v > 0) base.set_class(r, d, v);
    }
    base.minimize_width();
    return {std::move(base), std::move(z)};
}

bool is_maximal(const LusztigAffine& a) {
    for (int p = 0; p < a.l(); ++p)
        if (epsilon_hat(a, p, SumKind::Ordinary) != 0) return false;
    return true;
}

TensorTView tensor_T_view(const LusztigAffine& a) {
    StrippedAffine s = strip_z(a);
    WeightVector shift = WeightVector::affine(a.l());
    int m = m_of_z(s.z);
    for (int p = 0; p < a.l(); ++p) shift.set(p, -m);
    return {std::move(s.base), std::move(shift)};
}

} // namespace bzkit
