/*
   Copyright 2026 The peterweyl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "peterweyl/matrix.hpp"

using pw::QMatrix;
using pw::QScalar;
using pw::ZPoly;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int max_deg = 2) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, max_deg);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            ZPoly p;
            int d = deg(rng);
            for (int e = 0; e <= d; ++e) p = p + ZPoly::monomial(coeff(rng), e);
            m.at(i, j) = QScalar::from_fraction(p, ZPoly(1));
        }
    return m;
}

}  // namespace

TEST_CASE("kernel of simple matrices") {
    auto zero_kernel = pw::kernel(QMatrix(2, 2));
    REQUIRE(zero_kernel.size() == 2);
    CHECK(zero_kernel[0].at(0, 0).is_one());
    CHECK(zero_kernel[0].at(1, 0).is_zero());
    CHECK(zero_kernel[1].at(1, 0).is_one());

    CHECK(pw::kernel(QMatrix::identity(3)).empty());
}

TEST_CASE("kernel of the E action on the zero weight space of V(x)V") {
    // With basis (e1(x)e2, e2(x)e1), E maps them to e1(x)e1 and q^-1 e1(x)e1.
    QMatrix e_action(1, 2);
    e_action.at(0, 0) = QScalar(1);
    e_action.at(0, 1) = QScalar::q_pow(-1);
    auto null_basis = pw::kernel(e_action);
    REQUIRE(null_basis.size() == 1);
    // The line of t = e2(x)e1 - q^-1 e1(x)e2: kernel convention puts 1 in the free slot.
    CHECK(null_basis[0].at(0, 0) == -QScalar::q_pow(-1));
    CHECK(null_basis[0].at(1, 0).is_one());
    CHECK((e_action * null_basis[0]).is_zero());
}

TEST_CASE("inverse of small matrices") {
    CHECK(pw::inverse(QMatrix::identity(4)) == QMatrix::identity(4));

    QMatrix d(2, 2);
    d.at(0, 0) = QScalar::q();
    d.at(1, 1) = QScalar::q_pow(-1);
    QMatrix dinv = pw::inverse(d);
    CHECK(dinv.at(0, 0) == QScalar::q_pow(-1));
    CHECK(dinv.at(1, 1) == QScalar::q());

    CHECK_THROWS_AS(pw::inverse(QMatrix(2, 2)), std::domain_error);
}

TEST_CASE("change of basis from {e1e2, e2e1} to {s, t} inverts to the dual expansion") {
    const QScalar q = QScalar::q();
    // Columns are s = q e1e2 + e2e1 and t = -q^-1 e1e2 + e2e1 in coordinates
    // (e1(x)e2, e2(x)e1).
    QMatrix basis(2, 2);
    basis.at(0, 0) = q;
    basis.at(0, 1) = -q.inverse();
    basis.at(1, 0) = QScalar(1);
    basis.at(1, 1) = QScalar(1);
    QMatrix dual = pw::inverse(basis);
    CHECK(basis * dual == QMatrix::identity(2));

    // Rows of the inverse are s^*, t^* in the coordinates (e1*(x)e2*, e2*(x)e1*),
    // and q s^* - q^-1 t^* must recover e1*(x)e2*.
    for (int c = 0; c < 2; ++c) {
        QScalar combo = q * dual.at(0, c) - q.inverse() * dual.at(1, c);
        CHECK(combo == (c == 0 ? QScalar(1) : QScalar(0)));
    }
    // and s^* + t^* must recover e2*(x)e1*.
    for (int c = 0; c < 2; ++c) {
        QScalar combo = dual.at(0, c) + dual.at(1, c);
        CHECK(combo == (c == 1 ? QScalar(1) : QScalar(0)));
    }
}

TEST_CASE("rank plus kernel dimension equals column count") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        QMatrix m = random_matrix(rng, rows, cols);
        auto basis = pw::kernel(m);
        CHECK(pw::rank(m) + static_cast<int>(basis.size()) == cols);
        for (const auto& v : basis) CHECK((m * v).is_zero());
    }
    // one larger instance at the documented scale
    QMatrix big = random_matrix(rng, 20, 20, 2);
    CHECK(pw::rank(big) + static_cast<int>(pw::kernel(big).size()) == 20);
}

TEST_CASE("inverse round trip on random invertible matrices") {
    std::mt19937_64 rng(202);
    int done = 0;
    while (done < 10) {
        int n = 2 + static_cast<int>(rng() % 4);
        QMatrix m = random_matrix(rng, n, n);
        if (pw::rank(m) != n) continue;
        QMatrix minv = pw::inverse(m);
        CHECK(m * minv == QMatrix::identity(n));
        CHECK(minv * m == QMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("solve flags inconsistency and returns exact solutions") {
    std::mt19937_64 rng(303);
    QMatrix m = random_matrix(rng, 4, 3);
    QMatrix x(3, 1);
    x.at(0, 0) = QScalar::q();
    x.at(1, 0) = QScalar(2);
    x.at(2, 0) = QScalar::q_pow(-2);
    QMatrix b = m * x;
    auto sol = pw::solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);

    // An inconsistent system: rows forcing 0 = 1.
    QMatrix bad(2, 1);
    bad.at(0, 0) = QScalar(0);
    bad.at(1, 0) = QScalar(0);
    QMatrix rhs(2, 1);
    rhs.at(0, 0) = QScalar(1);
    rhs.at(1, 0) = QScalar(0);
    CHECK(!pw::solve(bad, rhs).has_value());
}

TEST_CASE("kronecker product is left-factor major") {
    QMatrix a(2, 2), b(2, 2);
    a.at(0, 1) = QScalar(1);                       // e_{01}
    b.at(0, 0) = QScalar::q();                     // q e_{00}
    QMatrix k = QMatrix::kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 2) == QScalar::q());             // (0,0) <- (1,0): index 0*2+0, 1*2+0
    CHECK(k.at(1, 3).is_zero());
}
