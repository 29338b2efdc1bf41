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

/**
 * @file clebsch.hpp
 * @brief Quantum Clebsch-Gordan data: embeddings, 3j and dual 3j symbols.
 *
 * For a pair (lambda, mu) the decomposition of V_lambda (x) V_mu fixes the
 * embeddings phi_k : V_nu -> V_lambda (x) V_mu.  The 3j symbols are the
 * coordinates of a basis tensor X1 (x) X2 in the embedded bases (rows of
 * C^-1); the dual 3j symbols are the coordinates of the dual surjections
 * (columns of C).  Equal-length dual pairs make the product structure
 * constants a plain bracketed sum over the multiplicity index.
 */

#ifndef PETERWEYL_CLEBSCH_HPP
#define PETERWEYL_CLEBSCH_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rep.hpp"

namespace pw {

struct Embedding {
    IrrepLabel lambda, mu, nu;
    int k = 0;       // multiplicity index, 0-based
    QMatrix matrix;  // (dim lambda * dim mu) x dim nu
};

/** Memoized decomposition of irrep(lambda) (x) irrep(mu). */
inline const Decomposition& pair_decomposition(const IrrepLabel& lambda, const IrrepLabel& mu,
                                               const QScalar& qval = QScalar::q()) {
    static std::map<std::string, std::unique_ptr<Decomposition>> cache;
    static std::mutex mu_;
    const std::string key = lambda.str() + " (x) " + mu.str() + " | " + qval.str();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    Rep product = tensor_rep(irrep(lambda, qval), irrep(mu, qval));
    auto d = std::make_unique<Decomposition>(decompose(product));
    return *cache.emplace(key, std::move(d)).first->second;
}

/** All embeddings V_nu -> V_lambda (x) V_mu in canonical constituent order. */
inline std::vector<Embedding> embeddings(const IrrepLabel& lambda, const IrrepLabel& mu,
                                         const QScalar& qval = QScalar::q()) {
    if (lambda.algebra != mu.algebra) throw std::invalid_argument("embeddings: algebra mismatch");
    const Decomposition& d = pair_decomposition(lambda, mu, qval);
    std::vector<Embedding> out;
    out.reserve(d.constituents.size());
    for (const auto& c : d.constituents)
        out.push_back(Embedding{lambda, mu, c.nu, c.mult_index, c.embedding});
    return out;
}

struct ThreeJEntry {
    IrrepLabel nu;
    int k = 0;
    int b1 = 0, b2 = 0, b3 = 0;
    QScalar value;
};

struct ThreeJTable {
    IrrepLabel lambda, mu;
    std::vector<ThreeJEntry> entries;       // X1 (x) X2 = sum (entry) phi_k(X3)
    std::vector<ThreeJEntry> dual_entries;  // phi_k^*(Y1* (x) Y2*) = sum (entry) Y3*

    const QScalar& value(const IrrepLabel& nu, int k, int b1, int b2, int b3) const {
        return find(entries, nu, k, b1, b2, b3);
    }
    const QScalar& dual_value(const IrrepLabel& nu, int k, int b1, int b2, int b3) const {
        return find(dual_entries, nu, k, b1, b2, b3);
    }

   private:
    static const QScalar& find(const std::vector<ThreeJEntry>& list, const IrrepLabel& nu, int k,
                               int b1, int b2, int b3) {
        static const QScalar zero;
        for (const auto& e : list)
            if (e.k == k && e.b1 == b1 && e.b2 == b2 && e.b3 == b3 && e.nu == nu) return e.value;
        return zero;
    }
};

/**
 * The full 3j / dual 3j table for (lambda, mu).  Entries are sorted by
 * (constituent order, b1, b2, b3); zero values are omitted.
 */
inline ThreeJTable threej(const IrrepLabel& lambda, const IrrepLabel& mu,
                          const QScalar& qval = QScalar::q()) {
    const Decomposition& d = pair_decomposition(lambda, mu, qval);
    const int dim_mu = irrep(mu, qval).dim;
    const int dim_pair = d.source.dim;
    ThreeJTable t;
    t.lambda = lambda;
    t.mu = mu;
    for (const auto& c : d.constituents) {
        const int dim_nu = irrep(c.nu, qval).dim;
        for (int b1 = 0; b1 * dim_mu < dim_pair; ++b1)
            for (int b2 = 0; b2 < dim_mu; ++b2)
                for (int b3 = 0; b3 < dim_nu; ++b3) {
                    const int pair_index = b1 * dim_mu + b2;
                    const QScalar& v = d.Cinv.at(c.col_offset + b3, pair_index);
                    if (!v.is_zero())
                        t.entries.push_back(ThreeJEntry{c.nu, c.mult_index, b1, b2, b3, v});
                    const QScalar& w = d.C.at(pair_index, c.col_offset + b3);
                    if (!w.is_zero())
                        t.dual_entries.push_back(ThreeJEntry{c.nu, c.mult_index, b1, b2, b3, w});
                }
    }
    return t;
}

/**
 * New embedding basis phi'_j = sum_k g[k][j] phi_k for a fixed (lambda, mu,
 * nu) multiplicity space; throws on a singular g.
 */
inline std::vector<Embedding> change_multiplicity_basis(const std::vector<Embedding>& embs,
                                                        const QMatrix& g) {
    const int c = static_cast<int>(embs.size());
    if (c == 0) return {};
    if (g.rows() != c || g.cols() != c)
        throw std::invalid_argument("multiplicity change matrix has the wrong size");
    for (int i = 1; i < c; ++i)
        if (embs[static_cast<size_t>(i)].nu != embs[0].nu ||
            embs[static_cast<size_t>(i)].lambda != embs[0].lambda ||
            embs[static_cast<size_t>(i)].mu != embs[0].mu)
            throw std::invalid_argument("embeddings do not share (lambda, mu, nu)");
    if (rank(g) != c) throw std::invalid_argument("singular multiplicity change");
    std::vector<Embedding> out;
    for (int j = 0; j < c; ++j) {
        Embedding e = embs[0];
        e.k = j;
        QMatrix m(e.matrix.rows(), e.matrix.cols());
        for (int kidx = 0; kidx < c; ++kidx) {
            const QScalar& coeff = g.at(kidx, j);
            if (coeff.is_zero()) continue;
            m = m + coeff * embs[static_cast<size_t>(kidx)].matrix;
        }
        e.matrix = std::move(m);
        out.push_back(std::move(e));
    }
    return out;
}

/**
 * Rebuilds a decomposition with the nu multiplicity block transformed by g
 * (columns mixed, inverse recomputed).  Intended for the basis-independence
 * checks of the product structure constants.
 */
inline Decomposition apply_multiplicity_change(const Decomposition& d, const IrrepLabel& nu,
                                               const QMatrix& g) {
    std::vector<int> offsets;
    int dim_nu = 0;
    for (const auto& c : d.constituents)
        if (c.nu == nu) {
            offsets.push_back(c.col_offset);
            dim_nu = c.embedding.cols();
        }
    const int c = static_cast<int>(offsets.size());
    if (g.rows() != c || g.cols() != c)
        throw std::invalid_argument("multiplicity change matrix has the wrong size");
    if (rank(g) != c) throw std::invalid_argument("singular multiplicity change");

    Decomposition out = d;
    for (int j = 0; j < c; ++j)
        for (int m = 0; m < dim_nu; ++m)
            for (int row = 0; row < d.C.rows(); ++row) {
                QScalar acc;
                for (int kidx = 0; kidx < c; ++kidx) {
                    const QScalar& coeff = g.at(kidx, j);
                    if (coeff.is_zero()) continue;
                    acc += coeff * d.C.at(row, offsets[static_cast<size_t>(kidx)] + m);
                }
                out.C.at(row, offsets[static_cast<size_t>(j)] + m) = acc;
            }
    for (auto& cons : out.constituents) {
        if (cons.nu != nu) continue;
        for (int m = 0; m < dim_nu; ++m)
            for (int row = 0; row < d.C.rows(); ++row)
                cons.embedding.at(row, m) = out.C.at(row, cons.col_offset + m);
    }
    out.Cinv = weight_blocked_inverse(out.C, d.source.weights, embedding_column_weights(d));
    return out;
}

/**
 * The bracketed multiplicity sum: the coefficient of f^nu_{y3,x3} in the
 * product of basis matrix elements f^lambda_{y1,x1} f^mu_{y2,x2}, summed over
 * all copies of nu.  Independent of the multiplicity basis.
 */
inline QScalar bracketed_sum(const Decomposition& d, int dim_mu, const IrrepLabel& nu, int y3,
                             int x3, int y1, int x1, int y2, int x2) {
    const int row_y = y1 * dim_mu + y2;
    const int col_x = x1 * dim_mu + x2;
    QScalar acc;
    for (const auto& c : d.constituents) {
        if (c.nu != nu) continue;
        acc += d.C.at(row_y, c.col_offset + y3) * d.Cinv.at(c.col_offset + x3, col_x);
    }
    return acc;
}

}  // namespace pw

#endif  // PETERWEYL_CLEBSCH_HPP
