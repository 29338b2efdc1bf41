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
 * @file rep.hpp
 * @brief Type-1 finite dimensional representations of U_q(sl_2) and U_q(gl_k).
 *
 * A Rep stores the generator matrices E_i, F_i, K_i^{+-1} over Q(q) together
 * with the weight of every basis vector.  Tensor products use the coproduct
 *   E -> E (x) K^-1 + 1 (x) E,   F -> F (x) 1 + K (x) F,   K -> K (x) K.
 *
 * irrep() returns the registry's canonical model of V_lambda: for sl_2 it is
 * the closed-form string module, for gl_k it is carved out of the minimal
 * tensor power V^(x)|lambda| by a deterministic F-word spanning order with
 * leading-coefficient-1 normalization.  Models are memoized per (label, q).
 *
 * The deformation parameter is carried by the Rep, so the whole pipeline can
 * run with q specialized to 1; that classical run is the oracle used by the
 * tests.
 */

#ifndef PETERWEYL_REP_HPP
#define PETERWEYL_REP_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace pw {

enum class Family { sl2, gl };

struct Algebra {
    Family family = Family::sl2;
    int k = 2;

    static Algebra sl2() { return Algebra{Family::sl2, 2}; }
    static Algebra gl(int k) {
        if (k < 2) throw std::invalid_argument("gl_k requires k >= 2");
        return Algebra{Family::gl, k};
    }

    /** Number of simple roots (Chevalley triples E_i, F_i, K_i). */
    int rank() const { return family == Family::sl2 ? 1 : k - 1; }
    /** Length of a weight vector. */
    int weight_len() const { return family == Family::sl2 ? 1 : k; }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.family == b.family && a.k == b.k;
    }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }
    friend bool operator<(const Algebra& a, const Algebra& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.k < b.k;
    }

    std::string str() const {
        return family == Family::sl2 ? "sl2" : ("gl" + std::to_string(k));
    }
};

using Weight = std::vector<int>;

/** The simple root alpha_i (1-based i), in the same coordinates as weights. */
inline Weight simple_root(const Algebra& alg, int i) {
    if (i < 1 || i > alg.rank()) throw std::invalid_argument("simple root index out of range");
    if (alg.family == Family::sl2) return Weight{2};
    Weight a(static_cast<size_t>(alg.k), 0);
    a[static_cast<size_t>(i - 1)] = 1;
    a[static_cast<size_t>(i)] = -1;
    return a;
}

/** Exponent e with K_i acting by q^e on a vector of the given weight. */
inline int cartan_exponent(const Algebra& alg, const Weight& w, int i) {
    if (alg.family == Family::sl2) return w.at(0);
    return w.at(static_cast<size_t>(i - 1)) - w.at(static_cast<size_t>(i));
}

inline Weight weight_sum(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

/** Highest weight label: hw = {n} for sl_2, a partition with k parts for gl_k. */
struct IrrepLabel {
    Algebra algebra;
    std::vector<int> hw;

    static IrrepLabel sl2(int n) {
        if (n < 0) throw std::invalid_argument("sl2 label must be nonnegative");
        return IrrepLabel{Algebra::sl2(), {n}};
    }
    /** Partition padded with zeros to k parts; must be weakly decreasing, nonnegative. */
    static IrrepLabel gl(int k, std::vector<int> partition) {
        if (static_cast<int>(partition.size()) > k)
            throw std::invalid_argument("partition has more than k parts");
        partition.resize(static_cast<size_t>(k), 0);
        for (size_t i = 0; i < partition.size(); ++i) {
            if (partition[i] < 0) throw std::invalid_argument("partition entries must be nonnegative");
            if (i + 1 < partition.size() && partition[i] < partition[i + 1])
                throw std::invalid_argument("partition entries must be weakly decreasing");
        }
        return IrrepLabel{Algebra::gl(k), std::move(partition)};
    }

    int size() const { return std::accumulate(hw.begin(), hw.end(), 0); }
    Weight weight() const { return hw; }

    friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
        return a.algebra == b.algebra && a.hw == b.hw;
    }
    friend bool operator!=(const IrrepLabel& a, const IrrepLabel& b) { return !(a == b); }
    friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
        if (a.algebra != b.algebra) return a.algebra < b.algebra;
        return a.hw < b.hw;
    }

    std::string str() const {
        std::string s = algebra.str() + ":";
        for (size_t i = 0; i < hw.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(hw[i]);
        }
        return s;
    }
};

/** Classical Weyl dimension of V_lambda (an exact integer). */
inline long weyl_dim(const IrrepLabel& label) {
    if (label.algebra.family == Family::sl2) return label.hw.at(0) + 1;
    const auto& l = label.hw;
    const int k = label.algebra.k;
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            num *= l[static_cast<size_t>(i)] - l[static_cast<size_t>(j)] + j - i;
            den *= j - i;
        }
    return num / den;
}

/** A finite dimensional type-1 representation over Q(q). */
struct Rep {
    Algebra algebra;
    int dim = 0;
    QScalar q;  // deformation parameter (the indeterminate, or a specialization)
    std::vector<QMatrix> E, F, K, Kinv;  // one per simple root, 1-based externally
    std::vector<Weight> weights;
};

/** [n] evaluated at an arbitrary parameter value (sum of powers, safe at q=1). */
inline QScalar quantum_integer_at(int n, const QScalar& qval) {
    if (n < 0) return -quantum_integer_at(-n, qval);
    QScalar s(0);
    for (int i = 0; i < n; ++i) s += qval.pow(n - 1 - 2 * i);
    return s;
}

inline Rep trivial_rep(const Algebra& alg, const QScalar& qval = QScalar::q()) {
    Rep r;
    r.algebra = alg;
    r.dim = 1;
    r.q = qval;
    QMatrix zero(1, 1);
    QMatrix one = QMatrix::identity(1);
    for (int i = 0; i < alg.rank(); ++i) {
        r.E.push_back(zero);
        r.F.push_back(zero);
        r.K.push_back(one);
        r.Kinv.push_back(one);
    }
    r.weights.assign(1, Weight(static_cast<size_t>(alg.weight_len()), 0));
    return r;
}

/** The vector representation: E_i = e_{i-1,i}, F_i = e_{i,i-1}, standard weights. */
inline Rep vector_rep(const Algebra& alg, const QScalar& qval = QScalar::q()) {
    Rep r;
    r.algebra = alg;
    r.q = qval;
    if (alg.family == Family::sl2) {
        r.dim = 2;
        QMatrix e(2, 2), f(2, 2), kk(2, 2), kinv(2, 2);
        e.at(0, 1) = QScalar(1);
        f.at(1, 0) = QScalar(1);
        kk.at(0, 0) = qval;
        kk.at(1, 1) = qval.inverse();
        kinv.at(0, 0) = qval.inverse();
        kinv.at(1, 1) = qval;
        r.E = {e};
        r.F = {f};
        r.K = {kk};
        r.Kinv = {kinv};
        r.weights = {Weight{1}, Weight{-1}};
        return r;
    }
    const int k = alg.k;
    r.dim = k;
    for (int i = 1; i < k; ++i) {
        QMatrix e(k, k), f(k, k), kk = QMatrix::identity(k), kinv = QMatrix::identity(k);
        e.at(i - 1, i) = QScalar(1);
        f.at(i, i - 1) = QScalar(1);
        kk.at(i - 1, i - 1) = qval;
        kk.at(i, i) = qval.inverse();
        kinv.at(i - 1, i - 1) = qval.inverse();
        kinv.at(i, i) = qval;
        r.E.push_back(std::move(e));
        r.F.push_back(std::move(f));
        r.K.push_back(std::move(kk));
        r.Kinv.push_back(std::move(kinv));
    }
    for (int j = 0; j < k; ++j) {
        Weight w(static_cast<size_t>(k), 0);
        w[static_cast<size_t>(j)] = 1;
        r.weights.push_back(std::move(w));
    }
    return r;
}

/** Tensor product along the coproduct; basis order is left-factor major. */
inline Rep tensor_rep(const Rep& a, const Rep& b) {
    if (a.algebra != b.algebra) throw std::invalid_argument("tensor product of different algebras");
    if (a.q != b.q) throw std::invalid_argument("tensor product with mismatched q values");
    Rep r;
    r.algebra = a.algebra;
    r.q = a.q;
    r.dim = a.dim * b.dim;
    const QMatrix ia = QMatrix::identity(a.dim);
    const QMatrix ib = QMatrix::identity(b.dim);
    for (int i = 0; i < a.algebra.rank(); ++i) {
        r.E.push_back(QMatrix::kron(a.E[static_cast<size_t>(i)], b.Kinv[static_cast<size_t>(i)]) +
                      QMatrix::kron(ia, b.E[static_cast<size_t>(i)]));
        r.F.push_back(QMatrix::kron(a.F[static_cast<size_t>(i)], ib) +
                      QMatrix::kron(a.K[static_cast<size_t>(i)], b.F[static_cast<size_t>(i)]));
        r.K.push_back(QMatrix::kron(a.K[static_cast<size_t>(i)], b.K[static_cast<size_t>(i)]));
        r.Kinv.push_back(
            QMatrix::kron(a.Kinv[static_cast<size_t>(i)], b.Kinv[static_cast<size_t>(i)]));
    }
    for (int i1 = 0; i1 < a.dim; ++i1)
        for (int i2 = 0; i2 < b.dim; ++i2)
            r.weights.push_back(weight_sum(a.weights[static_cast<size_t>(i1)],
                                           b.weights[static_cast<size_t>(i2)]));
    return r;
}

inline Rep tensor_power(const Algebra& alg, int n, const QScalar& qval = QScalar::q()) {
    if (n == 0) return trivial_rep(alg, qval);
    Rep r = vector_rep(alg, qval);
    for (int i = 1; i < n; ++i) r = tensor_rep(r, vector_rep(alg, qval));
    return r;
}

struct HighestWeightVector {
    Weight weight;
    QMatrix vec;  // dim x 1, first nonzero coordinate normalized to 1
};

/**
 * Basis of the joint kernel of all E_i, organized by weight (lexicographically
 * decreasing), computed weight space by weight space.
 */
inline std::vector<HighestWeightVector> highest_weight_vectors(const Rep& r) {
    std::map<Weight, std::vector<int>, std::greater<Weight>> spaces;
    for (int idx = 0; idx < r.dim; ++idx) spaces[r.weights[static_cast<size_t>(idx)]].push_back(idx);

    std::vector<HighestWeightVector> out;
    for (const auto& [w, cols] : spaces) {
        // Stack the E_i actions restricted to this weight space.
        std::vector<std::pair<int, const std::vector<int>*>> targets;  // (root index, target rows)
        int total_rows = 0;
        for (int i = 1; i <= r.algebra.rank(); ++i) {
            auto it = spaces.find(weight_sum(w, simple_root(r.algebra, i)));
            if (it == spaces.end()) continue;
            targets.emplace_back(i, &it->second);
            total_rows += static_cast<int>(it->second.size());
        }
        std::vector<QMatrix> null_basis;
        if (total_rows == 0) {
            // No higher weight spaces: everything here is a highest weight vector.
            null_basis.reserve(cols.size());
            for (size_t c = 0; c < cols.size(); ++c) {
                QMatrix v(static_cast<int>(cols.size()), 1);
                v.at(static_cast<int>(c), 0) = QScalar(1);
                null_basis.push_back(std::move(v));
            }
        } else {
            QMatrix stacked(total_rows, static_cast<int>(cols.size()));
            int row0 = 0;
            for (const auto& [i, target] : targets) {
                const QMatrix& e = r.E[static_cast<size_t>(i - 1)];
                for (size_t tr = 0; tr < target->size(); ++tr)
                    for (size_t c = 0; c < cols.size(); ++c)
                        stacked.at(row0 + static_cast<int>(tr), static_cast<int>(c)) =
                            e.at((*target)[tr], cols[c]);
                row0 += static_cast<int>(target->size());
            }
            null_basis = kernel(stacked);
        }
        for (const auto& nv : null_basis) {
            QMatrix v(r.dim, 1);
            for (size_t c = 0; c < cols.size(); ++c) v.at(cols[c], 0) = nv.at(static_cast<int>(c), 0);
            QScalar lead;
            for (int idx = 0; idx < r.dim; ++idx)
                if (!v.at(idx, 0).is_zero()) {
                    lead = v.at(idx, 0);
                    break;
                }
            out.push_back(HighestWeightVector{w, lead.inverse() * v});
        }
    }
    return out;
}

/**
 * Registry model of an irreducible: the Rep together with the F-word parent
 * records (parent basis index, simple root) that define each basis vector.
 */
struct IrrepModel {
    Rep rep;
    std::vector<std::pair<int, int>> parent;  // parent[m] = (p, i) with F_i b_p = gamma b_m
};

namespace detail {

/** Word <-> linear index for V^(x)n of gl_k, slot 0 major. */
inline int word_index(const std::vector<int>& digits, int k) {
    int idx = 0;
    for (int d : digits) idx = idx * k + d;
    return idx;
}

inline std::vector<int> word_digits(int index, int k, int n) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int pos = n - 1; pos >= 0; --pos) {
        d[static_cast<size_t>(pos)] = index % k;
        index /= k;
    }
    return d;
}

/**
 * Applies Delta^(n-1) E_i / F_i to a coefficient vector on V^(x)n of gl_k
 * without materializing the k^n x k^n matrix.  E_i carries K_i^-1 factors on
 * later slots; F_i carries K_i factors on earlier slots.
 */
inline std::vector<QScalar> apply_tensor_gen(bool raising, int i, int k, int n,
                                             const QScalar& qval,
                                             const std::vector<QScalar>& in) {
    std::vector<QScalar> out(in.size());
    const QScalar qp = qval;
    const QScalar qm = qval.inverse();
    for (size_t idx = 0; idx < in.size(); ++idx) {
        if (in[idx].is_zero()) continue;
        std::vector<int> digits = word_digits(static_cast<int>(idx), k, n);
        for (int pos = 0; pos < n; ++pos) {
            // E_i: digit i -> i-1 at pos; F_i: digit i-1 -> i at pos.
            const int from = raising ? i : i - 1;
            if (digits[static_cast<size_t>(pos)] != from) continue;
            QScalar factor = in[idx];
            if (raising) {
                for (int s = pos + 1; s < n; ++s) {  // K^-1 on later slots
                    const int d = digits[static_cast<size_t>(s)];
                    if (d == i - 1)
                        factor *= qm;
                    else if (d == i)
                        factor *= qp;
                }
            } else {
                for (int s = 0; s < pos; ++s) {  // K on earlier slots
                    const int d = digits[static_cast<size_t>(s)];
                    if (d == i - 1)
                        factor *= qp;
                    else if (d == i)
                        factor *= qm;
                }
            }
            std::vector<int> moved(digits);
            moved[static_cast<size_t>(pos)] = raising ? i - 1 : i;
            out[static_cast<size_t>(word_index(moved, k))] += factor;
        }
    }
    return out;
}

inline bool all_zero(const std::vector<QScalar>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/** Incremental echelon span tracker with coordinate tracking over inserted vectors. */
class SpanTracker {
   public:
    struct Reduction {
        bool in_span = false;
        std::vector<QScalar> coords;    // over inserted vectors, valid always
        std::vector<QScalar> residual;  // zero iff in_span
    };

    explicit SpanTracker(size_t dim) : dim_(dim) {}

    int size() const { return static_cast<int>(count_); }

    Reduction reduce(const std::vector<QScalar>& u) const {
        Reduction r;
        r.residual = u;
        r.coords.assign(count_, QScalar(0));
        for (const auto& e : entries_) {
            const QScalar c = r.residual[static_cast<size_t>(e.pivot)];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!e.vec[j].is_zero()) r.residual[j] -= c * e.vec[j];
            for (size_t j = 0; j < e.coords.size(); ++j)
                if (!e.coords[j].is_zero()) r.coords[j] += c * e.coords[j];
        }
        r.in_span = all_zero(r.residual);
        return r;
    }

    /** Inserts a vector already known to be outside the span. */
    void insert(const std::vector<QScalar>& u) {
        Reduction r = reduce(u);
        if (r.in_span) throw std::logic_error("span tracker: vector already in span");
        int pivot = -1;
        for (size_t j = 0; j < dim_; ++j)
            if (!r.residual[j].is_zero()) {
                pivot = static_cast<int>(j);
                break;
            }
        const QScalar inv = r.residual[static_cast<size_t>(pivot)].inverse();
        Entry e;
        e.pivot = pivot;
        e.vec.resize(dim_);
        for (size_t j = 0; j < dim_; ++j) e.vec[j] = inv * r.residual[j];
        e.coords.assign(count_ + 1, QScalar(0));
        for (size_t j = 0; j < count_; ++j) e.coords[j] = -inv * r.coords[j];
        e.coords[count_] = inv;
        entries_.push_back(std::move(e));
        ++count_;
    }

   private:
    struct Entry {
        int pivot;
        std::vector<QScalar> vec;     // normalized: vec[pivot] == 1
        std::vector<QScalar> coords;  // vec as combination of inserted vectors
    };
    size_t dim_;
    size_t count_ = 0;
    std::vector<Entry> entries_;
};

/** Builds the sl_2 closed-form string module of highest weight n. */
inline IrrepModel build_sl2_model(int n, const QScalar& qval) {
    IrrepModel model;
    Rep r;
    r.algebra = Algebra::sl2();
    r.q = qval;
    r.dim = n + 1;
    QMatrix e(n + 1, n + 1), f(n + 1, n + 1), kk(n + 1, n + 1), kinv(n + 1, n + 1);
    for (int m = 0; m <= n; ++m) {
        kk.at(m, m) = qval.pow(n - 2 * m);
        kinv.at(m, m) = qval.pow(2 * m - n);
        if (m >= 1) e.at(m - 1, m) = quantum_integer_at(m, qval);
        if (m < n) f.at(m + 1, m) = quantum_integer_at(n - m, qval);
        r.weights.push_back(Weight{n - 2 * m});
    }
    r.E = {std::move(e)};
    r.F = {std::move(f)};
    r.K = {std::move(kk)};
    r.Kinv = {std::move(kinv)};
    model.rep = std::move(r);
    model.parent.assign(static_cast<size_t>(n + 1), {-1, -1});
    for (int m = 1; m <= n; ++m) model.parent[static_cast<size_t>(m)] = {m - 1, 1};
    return model;
}

/**
 * Builds the gl_k registry model from the minimal tensor power V^(x)|lambda|:
 * first highest weight vector of weight lambda, then the BFS F-word closure.
 */
inline IrrepModel build_gl_model(const IrrepLabel& label, const QScalar& qval) {
    const Algebra alg = label.algebra;
    const int k = alg.k;
    const int n = label.size();
    if (n == 0) {
        IrrepModel model;
        model.rep = trivial_rep(alg, qval);
        model.parent = {{-1, -1}};
        return model;
    }
    const int amb = [&] {
        int d = 1;
        for (int i = 0; i < n; ++i) d *= k;
        return d;
    }();

    auto weight_of_index = [&](int idx) {
        Weight w(static_cast<size_t>(k), 0);
        for (int d : word_digits(idx, k, n)) ++w[static_cast<size_t>(d)];
        return w;
    };

    // Highest weight vector of weight lambda inside the tensor power.
    std::vector<int> space;
    for (int idx = 0; idx < amb; ++idx)
        if (weight_of_index(idx) == label.hw) space.push_back(idx);
    if (space.empty()) throw std::logic_error("empty weight space for irrep label");

    std::vector<std::vector<QScalar>> columns;
    for (size_t c = 0; c < space.size(); ++c) {
        std::vector<QScalar> unit(static_cast<size_t>(amb));
        unit[static_cast<size_t>(space[c])] = QScalar(1);
        columns.push_back(std::move(unit));
    }
    QMatrix stacked(alg.rank() * amb, static_cast<int>(space.size()));
    for (int i = 1; i <= alg.rank(); ++i) {
        for (size_t c = 0; c < space.size(); ++c) {
            auto img = apply_tensor_gen(true, i, k, n, qval, columns[c]);
            for (int rowidx = 0; rowidx < amb; ++rowidx)
                stacked.at((i - 1) * amb + rowidx, static_cast<int>(c)) =
                    img[static_cast<size_t>(rowidx)];
        }
    }
    auto null_basis = kernel(stacked);
    if (null_basis.empty()) throw std::logic_error("no highest weight vector at irrep label weight");

    std::vector<QScalar> hw(static_cast<size_t>(amb));
    for (size_t c = 0; c < space.size(); ++c) hw[static_cast<size_t>(space[c])] = null_basis[0].at(static_cast<int>(c), 0);
    // leading-coefficient-1 normalization
    QScalar lead;
    for (const auto& x : hw)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    const QScalar lead_inv = lead.inverse();
    for (auto& x : hw) x = lead_inv * x;

    // BFS F-word closure.
    std::vector<std::vector<QScalar>> basis{hw};
    std::vector<std::pair<int, int>> parent{{-1, -1}};
    std::vector<Weight> weights{label.hw};
    SpanTracker tracker(static_cast<size_t>(amb));
    tracker.insert(hw);

    struct PendingColumn {
        int root;
        int col;
        std::vector<QScalar> coords;  // in final basis coordinates (padded)
    };
    std::vector<PendingColumn> f_columns;

    for (size_t idx = 0; idx < basis.size(); ++idx) {
        for (int i = 1; i <= alg.rank(); ++i) {
            auto img = apply_tensor_gen(false, i, k, n, qval, basis[idx]);
            if (all_zero(img)) {
                f_columns.push_back({i, static_cast<int>(idx), {}});
                continue;
            }
            auto red = tracker.reduce(img);
            if (red.in_span) {
                f_columns.push_back({i, static_cast<int>(idx), std::move(red.coords)});
            } else {
                QScalar gamma;
                for (const auto& x : img)
                    if (!x.is_zero()) {
                        gamma = x;
                        break;
                    }
                const QScalar ginv = gamma.inverse();
                std::vector<QScalar> nb(img.size());
                for (size_t j = 0; j < img.size(); ++j) nb[j] = ginv * img[j];
                tracker.insert(nb);
                basis.push_back(std::move(nb));
                parent.emplace_back(static_cast<int>(idx), i);
                weights.push_back(weight_sum(weights[idx], [&] {
                    Weight a = simple_root(alg, i);
                    for (auto& x : a) x = -x;
                    return a;
                }()));
                std::vector<QScalar> coords(basis.size(), QScalar(0));
                coords.back() = gamma;
                f_columns.push_back({i, static_cast<int>(idx), std::move(coords)});
            }
        }
    }

    const int dim = static_cast<int>(basis.size());
    Rep r;
    r.algebra = alg;
    r.q = qval;
    r.dim = dim;
    r.weights = std::move(weights);
    for (int i = 1; i <= alg.rank(); ++i) {
        QMatrix e(dim, dim), f(dim, dim), kk(dim, dim), kinv(dim, dim);
        for (int m = 0; m < dim; ++m) {
            const int ex = cartan_exponent(alg, r.weights[static_cast<size_t>(m)], i);
            kk.at(m, m) = qval.pow(ex);
            kinv.at(m, m) = qval.pow(-ex);
            auto img = apply_tensor_gen(true, i, k, n, qval, basis[static_cast<size_t>(m)]);
            if (!all_zero(img)) {
                auto red = tracker.reduce(img);
                if (!red.in_span) throw std::logic_error("irrep model not closed under E");
                for (int mm = 0; mm < static_cast<int>(red.coords.size()); ++mm)
                    e.at(mm, m) = red.coords[static_cast<size_t>(mm)];
            }
        }
        for (const auto& pc : f_columns) {
            if (pc.root != i) continue;
            for (int mm = 0; mm < static_cast<int>(pc.coords.size()); ++mm)
                f.at(mm, pc.col) = pc.coords[static_cast<size_t>(mm)];
        }
        r.E.push_back(std::move(e));
        r.F.push_back(std::move(f));
        r.K.push_back(std::move(kk));
        r.Kinv.push_back(std::move(kinv));
    }
    IrrepModel model;
    model.rep = std::move(r);
    model.parent = std::move(parent);
    return model;
}

}  // namespace detail

/**
 * The registry's canonical model of V_label, memoized per (label, q value).
 * Repeated calls return the identical object.
 */
inline const IrrepModel& irrep_model(const IrrepLabel& label, const QScalar& qval = QScalar::q()) {
    static std::map<std::string, std::unique_ptr<IrrepModel>> registry;
    static std::mutex mu;
    const std::string key = label.str() + "|" + qval.str();
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    auto model = std::make_unique<IrrepModel>(
        label.algebra.family == Family::sl2 ? detail::build_sl2_model(label.hw.at(0), qval)
                                            : detail::build_gl_model(label, qval));
    return *registry.emplace(key, std::move(model)).first->second;
}

inline const Rep& irrep(const IrrepLabel& label, const QScalar& qval = QScalar::q()) {
    return irrep_model(label, qval).rep;
}

/** One isotypic copy inside a decomposed representation. */
struct Constituent {
    IrrepLabel nu;
    int mult_index = 0;   // 0-based copy counter within its label
    QMatrix embedding;    // dim(source) x dim(nu), columns are images of registry basis vectors
    int col_offset = 0;   // first column of this block in C
};

struct Decomposition {
    Rep source;
    std::vector<Constituent> constituents;
    QMatrix C;     // columns are all embedding images, (nu lex decreasing, copy increasing)
    QMatrix Cinv;

    int multiplicity(const IrrepLabel& nu) const {
        int c = 0;
        for (const auto& x : constituents)
            if (x.nu == nu) ++c;
        return c;
    }
};

namespace detail {

inline IrrepLabel label_from_weight(const Algebra& alg, const Weight& w) {
    if (alg.family == Family::sl2) {
        if (w.at(0) < 0) throw std::logic_error("negative sl2 highest weight in decomposition");
        return IrrepLabel::sl2(w.at(0));
    }
    std::vector<int> part(w.begin(), w.end());
    return IrrepLabel::gl(alg.k, std::move(part));
}

/** Extends a highest weight vector to a module map out of the registry model. */
inline QMatrix embed_from_highest_weight(const IrrepModel& model, const Rep& target,
                                         const QMatrix& hw_vec) {
    QMatrix emb(target.dim, model.rep.dim);
    for (int r0 = 0; r0 < target.dim; ++r0) emb.at(r0, 0) = hw_vec.at(r0, 0);
    for (int m = 1; m < model.rep.dim; ++m) {
        const auto [p, i] = model.parent[static_cast<size_t>(m)];
        if (p < 0) throw std::logic_error("irrep model basis vector without parent record");
        const QScalar gamma = model.rep.F[static_cast<size_t>(i - 1)].at(m, p);
        if (gamma.is_zero()) throw std::logic_error("irrep model parent coefficient vanishes");
        const QScalar ginv = gamma.inverse();
        const QMatrix& f = target.F[static_cast<size_t>(i - 1)];
        for (int r0 = 0; r0 < target.dim; ++r0) {
            QScalar acc;
            for (int c = 0; c < target.dim; ++c) {
                const QScalar& fv = f.at(r0, c);
                if (fv.is_zero()) continue;
                acc += fv * emb.at(c, p);
            }
            emb.at(r0, m) = ginv * acc;
        }
    }
    return emb;
}

}  // namespace detail

/**
 * Inverse of a weight-graded change of basis: rows and columns with equal
 * weights form square blocks that are inverted independently.  Much cheaper
 * than a generic inverse and exact either way.
 */
inline QMatrix weight_blocked_inverse(const QMatrix& m, const std::vector<Weight>& row_weights,
                                      const std::vector<Weight>& col_weights) {
    if (m.rows() != m.cols() || static_cast<int>(row_weights.size()) != m.rows() ||
        static_cast<int>(col_weights.size()) != m.cols())
        throw std::invalid_argument("weight_blocked_inverse shape mismatch");
    QMatrix out(m.rows(), m.rows());
    std::map<Weight, std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (int row = 0; row < m.rows(); ++row) blocks[row_weights[static_cast<size_t>(row)]].first.push_back(row);
    for (int c = 0; c < m.cols(); ++c) blocks[col_weights[static_cast<size_t>(c)]].second.push_back(c);
    for (const auto& [w, rows_cols] : blocks) {
        const auto& [rows, cols] = rows_cols;
        if (rows.size() != cols.size()) throw std::logic_error("weight block is not square");
        QMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
        QMatrix subinv = inverse(sub);
        for (size_t i = 0; i < cols.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j)
                out.at(cols[i], rows[j]) = subinv.at(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

/** Weights of the embedding columns of a decomposition, in column order. */
inline std::vector<Weight> embedding_column_weights(const Decomposition& d) {
    std::vector<Weight> out;
    out.reserve(static_cast<size_t>(d.C.cols()));
    for (const auto& c : d.constituents) {
        const Rep& model = irrep(c.nu, d.source.q);
        for (const auto& w : model.weights) out.push_back(w);
    }
    return out;
}

/**
 * Complete isotypic decomposition: every highest weight vector generates one
 * constituent via its F-closure; C collects all embedding columns and Cinv is
 * computed block-per-weight.
 */
inline Decomposition decompose(const Rep& r) {
    Decomposition d;
    d.source = r;
    auto hws = highest_weight_vectors(r);

    d.C = QMatrix(r.dim, r.dim);
    int col = 0;
    Weight prev_weight;
    int mult_counter = 0;
    std::vector<Weight> col_weights;
    for (const auto& hw : hws) {
        const IrrepLabel nu = detail::label_from_weight(r.algebra, hw.weight);
        const IrrepModel& model = irrep_model(nu, r.q);
        if (hw.weight == prev_weight)
            ++mult_counter;
        else {
            prev_weight = hw.weight;
            mult_counter = 0;
        }
        if (col + model.rep.dim > r.dim)
            throw std::logic_error("isotypic dimensions exceed the source dimension");
        QMatrix emb = detail::embed_from_highest_weight(model, r, hw.vec);
        for (int m = 0; m < model.rep.dim; ++m) {
            for (int r0 = 0; r0 < r.dim; ++r0) d.C.at(r0, col + m) = emb.at(r0, m);
            col_weights.push_back(model.rep.weights[static_cast<size_t>(m)]);
        }
        d.constituents.push_back(Constituent{nu, mult_counter, std::move(emb), col});
        col += model.rep.dim;
    }
    if (col != r.dim)
        throw std::logic_error("isotypic dimensions do not sum to the source dimension");
    d.Cinv = weight_blocked_inverse(d.C, r.weights, col_weights);
    return d;
}

/** Exact verification of every Rep invariant; failures become report lines. */
struct RelationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline RelationReport check_relations(const Rep& r) {
    RelationReport report;
    auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };
    const QMatrix id = QMatrix::identity(r.dim);
    const bool classical = r.q.is_one();
    const QScalar denom = r.q - r.q.inverse();
    for (int i = 1; i <= r.algebra.rank(); ++i) {
        const QMatrix& e = r.E[static_cast<size_t>(i - 1)];
        const QMatrix& f = r.F[static_cast<size_t>(i - 1)];
        const QMatrix& kk = r.K[static_cast<size_t>(i - 1)];
        const QMatrix& kinv = r.Kinv[static_cast<size_t>(i - 1)];
        const std::string tag = "i=" + std::to_string(i) + ": ";
        if (kk * kinv != id) fail(tag + "K Kinv != I");
        for (int a = 0; a < r.dim; ++a)
            for (int b = 0; b < r.dim; ++b) {
                if (a == b) {
                    const int ex = cartan_exponent(r.algebra, r.weights[static_cast<size_t>(a)], i);
                    if (kk.at(a, a) != r.q.pow(ex)) {
                        fail(tag + "K is not q^<weight,alpha> at index " + std::to_string(a));
                        break;
                    }
                } else if (!kk.at(a, b).is_zero()) {
                    fail(tag + "K is not diagonal");
                    a = r.dim;
                    break;
                }
            }
        if (kk * e * kinv != r.q.pow(2) * e) fail(tag + "K E Kinv != q^2 E");
        if (kk * f * kinv != r.q.pow(-2) * f) fail(tag + "K F Kinv != q^-2 F");
        if (classical) {
            QMatrix h(r.dim, r.dim);
            for (int a = 0; a < r.dim; ++a)
                h.at(a, a) = QScalar(cartan_exponent(r.algebra, r.weights[static_cast<size_t>(a)], i));
            if (e * f - f * e != h) fail(tag + "E F - F E != H at q=1");
        } else {
            if (e * f - f * e != denom.inverse() * (kk - kinv))
                fail(tag + "E F - F E != (K - Kinv)/(q - q^-1)");
        }
        // weight compatibility: E raises by alpha_i, F lowers by alpha_i
        const Weight alpha = simple_root(r.algebra, i);
        for (int c = 0; c < r.dim; ++c)
            for (int a = 0; a < r.dim; ++a) {
                if (!e.at(a, c).is_zero() &&
                    r.weights[static_cast<size_t>(a)] !=
                        weight_sum(r.weights[static_cast<size_t>(c)], alpha))
                    fail(tag + "E entry violates weight grading at (" + std::to_string(a) + "," +
                         std::to_string(c) + ")");
                if (!f.at(a, c).is_zero()) {
                    Weight neg = alpha;
                    for (auto& x : neg) x = -x;
                    if (r.weights[static_cast<size_t>(a)] !=
                        weight_sum(r.weights[static_cast<size_t>(c)], neg))
                        fail(tag + "F entry violates weight grading at (" + std::to_string(a) + "," +
                             std::to_string(c) + ")");
                }
            }
    }
    return report;
}

}  // namespace pw

#endif  // PETERWEYL_REP_HPP
