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

#include <map>
#include <random>

#include "peterweyl/clebsch.hpp"

using namespace pw;

namespace {

void check_intertwiner(const Embedding& e, const QScalar& qval = QScalar::q()) {
    Rep pair = tensor_rep(irrep(e.lambda, qval), irrep(e.mu, qval));
    const Rep& target = irrep(e.nu, qval);
    for (int i = 0; i < pair.algebra.rank(); ++i) {
        CHECK(pair.E[i] * e.matrix == e.matrix * target.E[i]);
        CHECK(pair.F[i] * e.matrix == e.matrix * target.F[i]);
        CHECK(pair.K[i] * e.matrix == e.matrix * target.K[i]);
    }
}

/** The scalar sigma with col = sigma * ref, checked entrywise. */
QScalar proportionality(const QMatrix& col, const QMatrix& ref) {
    REQUIRE(col.rows() == ref.rows());
    QScalar sigma;
    for (int i = 0; i < col.rows(); ++i)
        if (!ref.at(i, 0).is_zero()) {
            sigma = col.at(i, 0) / ref.at(i, 0);
            break;
        }
    for (int i = 0; i < col.rows(); ++i) CHECK(col.at(i, 0) == sigma * ref.at(i, 0));
    return sigma;
}

}  // namespace

TEST_CASE("sl2 V1 (x) V1 has embeddings into V2 and V0") {
    auto embs = embeddings(IrrepLabel::sl2(1), IrrepLabel::sl2(1));
    REQUIRE(embs.size() == 2);
    CHECK(embs[0].nu == IrrepLabel::sl2(2));
    CHECK(embs[1].nu == IrrepLabel::sl2(0));
    for (const auto& e : embs) check_intertwiner(e);
}

TEST_CASE("gl2 vector square embeddings, the antisymmetric line is the t line") {
    auto embs = embeddings(IrrepLabel::gl(2, {1, 0}), IrrepLabel::gl(2, {1, 0}));
    REQUIRE(embs.size() == 2);
    CHECK(embs[0].nu == IrrepLabel::gl(2, {2, 0}));
    CHECK(embs[1].nu == IrrepLabel::gl(2, {1, 1}));
    for (const auto& e : embs) check_intertwiner(e);

    // t = e2(x)e1 - q^-1 e1(x)e2 spans the same line as the embedded column.
    const QScalar q = QScalar::q();
    QMatrix t(4, 1);
    t.at(1, 0) = -q.inverse();
    t.at(2, 0) = QScalar(1);
    proportionality(embs[1].matrix.column(0), t);
}

TEST_CASE("gl3 (2,1,0) squared contains (3,2,1) with multiplicity two") {
    const IrrepLabel l = IrrepLabel::gl(3, {2, 1, 0});
    auto embs = embeddings(l, l);
    std::map<IrrepLabel, int> mult;
    for (const auto& e : embs) mult[e.nu]++;
    CHECK(mult[IrrepLabel::gl(3, {4, 2, 0})] == 1);
    CHECK(mult[IrrepLabel::gl(3, {4, 1, 1})] == 1);
    CHECK(mult[IrrepLabel::gl(3, {3, 3, 0})] == 1);
    CHECK(mult[IrrepLabel::gl(3, {3, 2, 1})] == 2);
    CHECK(mult[IrrepLabel::gl(3, {2, 2, 2})] == 1);
    int total = 0;
    for (const auto& e : embs) total += irrep(e.nu).dim;
    CHECK(total == 64);
}

TEST_CASE("3j symbols of the gl2 vector square match the s,t expansions") {
    const QScalar q = QScalar::q();
    const IrrepLabel vl = IrrepLabel::gl(2, {1, 0});
    ThreeJTable table = threej(vl, vl);
    const IrrepLabel w20 = IrrepLabel::gl(2, {2, 0});
    const IrrepLabel w11 = IrrepLabel::gl(2, {1, 1});

    // The s,t normalization of the zero weight space of V (x) V.
    QMatrix s(4, 1), t(4, 1);
    s.at(1, 0) = q;
    s.at(2, 0) = QScalar(1);
    t.at(1, 0) = -q.inverse();
    t.at(2, 0) = QScalar(1);
    auto embs = embeddings(vl, vl);
    const QScalar sigma_s = proportionality(embs[0].matrix.column(1), s);
    const QScalar sigma_t = proportionality(embs[1].matrix.column(0), t);

    const QScalar c2 = q + q.inverse();  // q + q^-1

    // e1 (x) e2 = (s - t)/(q + q^-1)
    CHECK(table.value(w20, 0, 0, 1, 1) * sigma_s == c2.inverse());
    CHECK(table.value(w11, 0, 0, 1, 0) * sigma_t == -c2.inverse());
    // e2 (x) e1 = (q^-1 s + q t)/(q + q^-1)
    CHECK(table.value(w20, 0, 1, 0, 1) * sigma_s == q.inverse() / c2);
    CHECK(table.value(w11, 0, 1, 0, 0) * sigma_t == q / c2);
    // duals: e2* (x) e1* = s* + t*
    CHECK(table.dual_value(w20, 0, 1, 0, 1) / sigma_s == QScalar(1));
    CHECK(table.dual_value(w11, 0, 1, 0, 0) / sigma_t == QScalar(1));
    // duals: e1* (x) e2* = q s* - q^-1 t*
    CHECK(table.dual_value(w20, 0, 0, 1, 1) / sigma_s == q);
    CHECK(table.dual_value(w11, 0, 0, 1, 0) / sigma_t == -q.inverse());
}

TEST_CASE("completeness: the 3j table reconstructs every basis tensor") {
    for (const auto& [lambda, mu] : std::vector<std::pair<IrrepLabel, IrrepLabel>>{
             {IrrepLabel::gl(2, {1, 0}), IrrepLabel::gl(2, {1, 0})},
             {IrrepLabel::sl2(2), IrrepLabel::sl2(1)}}) {
        ThreeJTable table = threej(lambda, mu);
        auto embs = embeddings(lambda, mu);
        const int dmu = irrep(mu).dim;
        const int dpair = irrep(lambda).dim * dmu;
        for (int b1 = 0; b1 * dmu < dpair; ++b1)
            for (int b2 = 0; b2 < dmu; ++b2) {
                QMatrix acc(dpair, 1);
                for (const auto& entry : table.entries) {
                    if (entry.b1 != b1 || entry.b2 != b2) continue;
                    for (const auto& e : embs)
                        if (e.nu == entry.nu && e.k == entry.k) {
                            acc = acc + entry.value * e.matrix.column(entry.b3);
                            break;
                        }
                }
                for (int r = 0; r < dpair; ++r)
                    CHECK(acc.at(r, 0) == ((r == b1 * dmu + b2) ? QScalar(1) : QScalar(0)));
            }
    }
}

TEST_CASE("biorthogonality: dual 3j pair against 3j as the identity") {
    const Decomposition& d = pair_decomposition(IrrepLabel::gl(2, {1, 0}), IrrepLabel::gl(2, {1, 0}));
    CHECK(d.Cinv * d.C == QMatrix::identity(4));
    const Decomposition& d2 = pair_decomposition(IrrepLabel::sl2(2), IrrepLabel::sl2(2));
    CHECK(d2.Cinv * d2.C == QMatrix::identity(9));
}

TEST_CASE("multiplicity basis change: identity and scalar scale") {
    const IrrepLabel vl = IrrepLabel::gl(2, {1, 0});
    auto embs = embeddings(vl, vl);
    std::vector<Embedding> anti{embs[1]};

    auto same = change_multiplicity_basis(anti, QMatrix::identity(1));
    CHECK(same[0].matrix == anti[0].matrix);

    QMatrix g(1, 1);
    g.at(0, 0) = QScalar::q().pow(2);
    auto scaled = change_multiplicity_basis(anti, g);
    CHECK(scaled[0].matrix == QScalar::q().pow(2) * anti[0].matrix);
    check_intertwiner(scaled[0]);

    QMatrix singular(1, 1);
    CHECK_THROWS_AS(change_multiplicity_basis(anti, singular), std::invalid_argument);

    // The bracketed sums are unchanged by the rescaling.
    const Decomposition& d = pair_decomposition(vl, vl);
    Decomposition changed = apply_multiplicity_change(d, IrrepLabel::gl(2, {1, 1}), g);
    for (int y1 = 0; y1 < 2; ++y1)
        for (int x1 = 0; x1 < 2; ++x1)
            for (int y2 = 0; y2 < 2; ++y2)
                for (int x2 = 0; x2 < 2; ++x2)
                    for (const auto& nu : {IrrepLabel::gl(2, {2, 0}), IrrepLabel::gl(2, {1, 1})})
                        for (int y3 = 0; y3 < irrep(nu).dim; ++y3)
                            for (int x3 = 0; x3 < irrep(nu).dim; ++x3)
                                CHECK(bracketed_sum(d, 2, nu, y3, x3, y1, x1, y2, x2) ==
                                      bracketed_sum(changed, 2, nu, y3, x3, y1, x1, y2, x2));
}

TEST_CASE("multiplicity-two basis change leaves the bracketed sums unchanged") {
    const IrrepLabel l = IrrepLabel::gl(3, {2, 1, 0});
    const IrrepLabel nu = IrrepLabel::gl(3, {3, 2, 1});
    const Decomposition& d = pair_decomposition(l, l);

    QMatrix g(2, 2);
    g.at(0, 0) = QScalar(1);
    g.at(0, 1) = QScalar(1);
    g.at(1, 1) = QScalar(1);
    Decomposition changed = apply_multiplicity_change(d, nu, g);

    // A tractable sub-block: a few fixed outer index pairs, all inner indices.
    const int dim_l = irrep(l).dim;
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> pick(0, dim_l - 1);
    for (int probe = 0; probe < 3; ++probe) {
        const int y1 = pick(rng), x1 = pick(rng), y2 = pick(rng), x2 = pick(rng);
        for (int y3 = 0; y3 < irrep(nu).dim; ++y3)
            for (int x3 = 0; x3 < irrep(nu).dim; ++x3)
                CHECK(bracketed_sum(d, dim_l, nu, y3, x3, y1, x1, y2, x2) ==
                      bracketed_sum(changed, dim_l, nu, y3, x3, y1, x1, y2, x2));
    }
}

TEST_CASE("3j symbols specialize at q=1 to the classical coefficients") {
    const QScalar one(1);
    for (const auto& [lambda, mu] : std::vector<std::pair<IrrepLabel, IrrepLabel>>{
             {IrrepLabel::sl2(1), IrrepLabel::sl2(1)},
             {IrrepLabel::gl(2, {1, 0}), IrrepLabel::gl(2, {1, 0})}}) {
        ThreeJTable quantum = threej(lambda, mu);
        ThreeJTable classical = threej(lambda, mu, one);
        REQUIRE(quantum.entries.size() == classical.entries.size());
        for (size_t i = 0; i < quantum.entries.size(); ++i) {
            const auto& qe = quantum.entries[i];
            const auto& ce = classical.entries[i];
            CHECK(qe.nu == ce.nu);
            CHECK(qe.k == ce.k);
            CHECK(qe.b1 == ce.b1);
            CHECK(qe.b2 == ce.b2);
            CHECK(qe.b3 == ce.b3);
            CHECK(QScalar(qe.value.at_one()) == ce.value);
        }
    }
}
