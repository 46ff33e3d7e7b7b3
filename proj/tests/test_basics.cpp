#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bzkit/basics.hpp"

using namespace bzkit;

TEST_CASE("finite Cartan pairings on an A_2 interval") {
    Interval I(1, 2);
    WeightVector w = WeightVector::finite(I);
    w.set(1, -1); // -alpha_1
    CHECK(cartan_pairing(1, w) == -2);
    WeightVector w2 = WeightVector::finite(I);
    w2.set(2, -1); // -alpha_2
    CHECK(cartan_pairing(1, w2) == 1);
    CHECK_THROWS_AS(cartan_pairing(3, w), ValidationError);
}

TEST_CASE("affine pairing kills the null root") {
    for (int l : {3, 4, 5}) {
        WeightVector delta = WeightVector::affine(l);
        for (int p = 0; p < l; ++p) delta.set(p, 1);
        for (int i = 0; i < l; ++i) CHECK(cartan_pairing(i, delta) == 0);
    }
    WeightVector w = WeightVector::affine(3);
    w.set(0, -1);
    w.set(1, -1);
    w.set(2, -1);
    CHECK(cartan_pairing(0, w) == 0);
}

TEST_CASE("phi statistic from epsilon") {
    Interval I(1, 2);
    WeightVector zero = WeightVector::finite(I);
    CHECK(phi_from_epsilon(0, 1, zero) == 0);
    WeightVector w = WeightVector::finite(I);
    w.set(1, -1);
    CHECK(phi_from_epsilon(1, 1, w) == -1);
    WeightVector w2 = WeightVector::finite(I);
    w2.set(1, -1);
    w2.set(2, -1);
    CHECK(phi_from_epsilon(1, 2, w2) == 0);
    CHECK_THROWS_AS(phi_from_epsilon(-1, 1, zero), ValidationError);
}

TEST_CASE("pairing is linear and the basis matrix is tridiagonal") {
    std::mt19937_64 rng(7);
    Interval I(-1, 3);
    auto rand_vec = [&] {
        WeightVector w = WeightVector::finite(I);
        for (int i = I.lo; i <= I.hi; ++i)
            w.set(i, static_cast<int>(rng() % 9) - 4);
        return w;
    };
    for (int t = 0; t < 50; ++t) {
        WeightVector a = rand_vec(), b = rand_vec();
        WeightVector sum = a + b;
        for (int i = I.lo; i <= I.hi; ++i)
            CHECK(cartan_pairing(i, sum) == cartan_pairing(i, a) + cartan_pairing(i, b));
    }
    for (int i = I.lo; i <= I.hi; ++i)
        for (int j = I.lo; j <= I.hi; ++j) {
            WeightVector e = WeightVector::finite(I);
            e.set(j, 1);
            int expect = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            CHECK(cartan_pairing(i, e) == expect);
            CHECK(cartan_entry_finite(i, j) == cartan_entry_finite(j, i));
        }
}

TEST_CASE("affine index canonicalization") {
    WeightVector w = WeightVector::affine(3);
    w.set(5, 2); // 5 mod 3 = 2
    CHECK(w.coeff(2) == 2);
    CHECK(w.coeff(-1) == 2);
    w.add(-4, 1); // -4 mod 3 = 2
    CHECK(w.coeff(2) == 3);
}
