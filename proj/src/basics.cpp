#include "bzkit/basics.hpp"

#include <cstdlib>

namespace bzkit {

int cartan_entry_finite(int i, int j) {
    if (i == j) return 2;
    if (std::abs(i - j) == 1) return -1;
    return 0;
}

int cartan_entry_affine(int i, int j, int l) {
    int d = std::abs(((i - j) % l + l) % l);
    if (d == 0) return 2;
    if (d == 1 || d == l - 1) return -1;
    return 0;
}

int cartan_pairing(int i, const WeightVector& w) {
    int acc = 0;
    if (w.kind() == RootKind::Finite) {
        if (!w.interval().contains(i))
            throw ValidationError("cartan_pairing: index " + std::to_string(i) +
                                  " outside interval " + w.interval().str());
        for (auto [j, c] : w.coeffs()) acc += c * cartan_entry_finite(i, j);
    } else {
        for (auto [j, c] : w.coeffs()) acc += c * cartan_entry_affine(i, j, w.l());
    }
    return acc;
}

int phi_from_epsilon(int eps, int i, const WeightVector& wt) {
    if (eps < 0) throw ValidationError("phi_from_epsilon: epsilon must be nonnegative");
    return eps + cartan_pairing(i, wt);
}

} // namespace bzkit
