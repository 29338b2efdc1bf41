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
 * @file schurweyl.hpp
 * @brief Schur-Weyl realization of O_q(M_k) on tensor powers of V.
 *
 * Functionals on U_q(gl_k) live in (V*)^(x)n (x) V^(x)n.  The projection pi
 * onto Hecke-equivariant functionals is computed by evaluation: a functional
 * is paired against the matrix-unit spanning set of the image algebra
 * (+)_lambda End(V_lambda) and rebuilt from the equivariant basis elements
 * X^lambda_{b,c*} with the same evaluations.  This keeps pi exact and makes
 * pi(phi) induce the same function as phi by construction.
 *
 * The involution Q is assembled spectrally from the Hecke eigenprojections of
 * Rhat, Q = P_sym - P_alt, so everything stays inside Q(q); the n = 2 facts
 * (pi = (1+Q)/2, and the derived quadratic relations of O_q(M_2)) pin this
 * construction to the intended one.
 */

#ifndef PETERWEYL_SCHURWEYL_HPP
#define PETERWEYL_SCHURWEYL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ofun.hpp"

namespace pw {

// --- R matrix and Hecke action ------------------------------------------------

struct RhatData {
    int k = 2;
    QMatrix rhat;           // flip composed with R, acting on V (x) V
    QMatrix sym_projector;  // eigenvalue q
    QMatrix alt_projector;  // eigenvalue -q^-1
};

/**
 * Rhat on V (x) V: q on e_i(x)e_i; for i < j, e_i(x)e_j -> e_j(x)e_i +
 * (q-q^-1) e_i(x)e_j and e_j(x)e_i -> e_i(x)e_j.  Satisfies the braid
 * relation and (Rhat - q)(Rhat + q^-1) = 0.
 */
inline RhatData rhat(int k, const QScalar& qval = QScalar::q()) {
    if (k < 2) throw std::invalid_argument("rhat requires k >= 2");
    const QScalar qminus = qval - qval.inverse();
    QMatrix m(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int col = i * k + j;
            if (i == j) {
                m.at(col, col) = qval;
            } else if (i < j) {
                m.at(j * k + i, col) = QScalar(1);
                m.at(col, col) = qminus;
            } else {
                m.at(j * k + i, col) = QScalar(1);
            }
        }
    RhatData r;
    r.k = k;
    const QScalar csum_inv = (qval + qval.inverse()).inverse();
    r.sym_projector = csum_inv * (m + qval.inverse() * QMatrix::identity(k * k));
    r.alt_projector = csum_inv * (qval * QMatrix::identity(k * k) - m);
    r.rhat = std::move(m);
    return r;
}

/** The FRT matrix R = flip o Rhat (for k = 2 this is the 4x4 q-matrix). */
inline QMatrix frt_r_matrix(int k, const QScalar& qval = QScalar::q()) {
    const QMatrix rh = rhat(k, qval).rhat;
    QMatrix r(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int col = 0; col < k * k; ++col) r.at(i * k + j, col) = rh.at(j * k + i, col);
    return r;
}

/** T_i = 1^(x)(i-1) (x) Rhat (x) 1^(x)(n-i-1) on V^(x)n, i = 1..n-1. */
inline std::vector<QMatrix> hecke_generators(int k, int n, const QScalar& qval = QScalar::q()) {
    if (n < 2) throw std::invalid_argument("hecke_generators requires n >= 2");
    const QMatrix rh = rhat(k, qval).rhat;
    std::vector<QMatrix> out;
    for (int i = 1; i < n; ++i) {
        int left = 1, right = 1;
        for (int s = 0; s < i - 1; ++s) left *= k;
        for (int s = 0; s < n - i - 1; ++s) right *= k;
        out.push_back(QMatrix::kron(QMatrix::kron(QMatrix::identity(left), rh),
                                    QMatrix::identity(right)));
    }
    return out;
}

/** Q = P_sym - P_alt on V (x) V; an involution that specializes to the flip. */
inline QMatrix q_involution(int k, const QScalar& qval = QScalar::q()) {
    RhatData r = rhat(k, qval);
    return r.sym_projector - r.alt_projector;
}

// --- functionals on U_q -------------------------------------------------------

/**
 * An element of (V*)^(x)n (x) V^(x)n as a functional on U_q(gl_k):
 * u |-> sum coeff(J,I) rho_{V^(x)n}(u)[J][I].  Multi-indices are base-k words.
 */
class FunctionalElement {
   public:
    FunctionalElement() = default;
    explicit FunctionalElement(int degree) : n_(degree) {}

    static FunctionalElement term(int degree, int dual_index, int primal_index,
                                  const QScalar& c = QScalar(1)) {
        FunctionalElement f(degree);
        f.add(dual_index, primal_index, c);
        return f;
    }

    int degree() const { return n_; }
    const std::map<std::pair<int, int>, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int dual_index, int primal_index, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::make_pair(dual_index, primal_index), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FunctionalElement operator+(const FunctionalElement& a, const FunctionalElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("functional degree mismatch");
        FunctionalElement r(a);
        for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, c);
        return r;
    }
    friend FunctionalElement operator-(const FunctionalElement& a, const FunctionalElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("functional degree mismatch");
        FunctionalElement r(a);
        for (const auto& [key, c] : b.terms_) r.add(key.first, key.second, -c);
        return r;
    }
    friend FunctionalElement operator*(const QScalar& c, const FunctionalElement& a) {
        FunctionalElement r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
        return r;
    }
    friend bool operator==(const FunctionalElement& a, const FunctionalElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FunctionalElement& a, const FunctionalElement& b) {
        return !(a == b);
    }

   private:
    int n_ = 0;
    std::map<std::pair<int, int>, QScalar> terms_;
};

// --- Schur-Weyl decomposition -------------------------------------------------

struct IsotypicBlock {
    IrrepLabel lambda;
    int dim_v = 0;
    int dim_w = 0;                  // multiplicity = dim of the Hecke module W_lambda
    std::vector<int> copy_offsets;  // column offset in C per copy
};

/** Schur-Weyl data for V^(x)n: isotypic blocks and the change of basis. */
class SWDecomp {
   public:
    SWDecomp(int k, int n, const QScalar& qval)
        : k_(k), n_(n), qval_(qval), decomp_(decompose(tensor_power(Algebra::gl(k), n, qval))) {
        for (const auto& c : decomp_.constituents) {
            if (blocks_.empty() || !(blocks_.back().lambda == c.nu)) {
                blocks_.push_back(IsotypicBlock{c.nu, c.embedding.cols(), 0, {}});
            }
            blocks_.back().dim_w += 1;
            blocks_.back().copy_offsets.push_back(c.col_offset);
        }
    }

    int k() const { return k_; }
    int degree() const { return n_; }
    const QScalar& qval() const { return qval_; }
    int tensor_dim() const { return decomp_.source.dim; }
    const Decomposition& decomposition() const { return decomp_; }
    const std::vector<IsotypicBlock>& blocks() const { return blocks_; }

    /** X^lambda_{b,c*} = (1/dim W) sum_p (c* x p*) (x) (b x p) in coordinates. */
    const FunctionalElement& equivariant(size_t block_index, int b, int c) const {
        const auto key = std::make_tuple(block_index, b, c);
        std::lock_guard<std::mutex> lock(eq_mu_);
        auto it = eq_cache_.find(key);
        if (it != eq_cache_.end()) return it->second;
        const IsotypicBlock& blk = blocks_.at(block_index);
        FunctionalElement out(n_);
        const QScalar scale(BigRat(1, blk.dim_w));
        for (int off : blk.copy_offsets) {
            for (int dual = 0; dual < tensor_dim(); ++dual) {
                const QScalar& left = decomp_.Cinv.at(off + c, dual);
                if (left.is_zero()) continue;
                for (int primal = 0; primal < tensor_dim(); ++primal) {
                    const QScalar& right = decomp_.C.at(primal, off + b);
                    if (right.is_zero()) continue;
                    out.add(dual, primal, scale * left * right);
                }
            }
        }
        return eq_cache_.emplace(key, std::move(out)).first->second;
    }

    /**
     * Evaluation of a functional against the matrix unit e_{rs} of
     * End(V_lambda) inside the image algebra.
     */
    QScalar evaluate(const FunctionalElement& phi, size_t block_index, int r, int s) const {
        const IsotypicBlock& blk = blocks_.at(block_index);
        QScalar acc;
        for (const auto& [key, coeff] : phi.terms()) {
            const auto [dual, primal] = key;
            QScalar inner;
            for (int off : blk.copy_offsets)
                inner += decomp_.C.at(dual, off + r) * decomp_.Cinv.at(off + s, primal);
            acc += coeff * inner;
        }
        return acc;
    }

   private:
    int k_, n_;
    QScalar qval_;
    Decomposition decomp_;
    std::vector<IsotypicBlock> blocks_;
    mutable std::mutex eq_mu_;
    mutable std::map<std::tuple<size_t, int, int>, FunctionalElement> eq_cache_;
};

/** Memoized Schur-Weyl decompositions per (k, n, q). */
inline const SWDecomp& schur_weyl_decompose(int k, int n, const QScalar& qval = QScalar::q()) {
    static std::map<std::string, std::unique_ptr<SWDecomp>> cache;
    static std::mutex mu_;
    const std::string key = std::to_string(k) + "^" + std::to_string(n) + "|" + qval.str();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto d = std::make_unique<SWDecomp>(k, n, qval);
    return *cache.emplace(key, std::move(d)).first->second;
}

/**
 * The projection onto Hecke-equivariant functionals: phi and pi(phi) have the
 * same evaluations against every matrix unit, and pi(phi) is the unique
 * combination of equivariant basis elements with those evaluations.
 */
inline FunctionalElement project_pi(const SWDecomp& swd, const FunctionalElement& phi) {
    if (phi.degree() != swd.degree())
        throw std::invalid_argument("project_pi: functional degree does not match decomposition");
    FunctionalElement out(swd.degree());
    for (size_t blk = 0; blk < swd.blocks().size(); ++blk) {
        const int dv = swd.blocks()[blk].dim_v;
        for (int r = 0; r < dv; ++r)
            for (int s = 0; s < dv; ++s) {
                const QScalar val = swd.evaluate(phi, blk, r, s);
                if (val.is_zero()) continue;
                out = out + val * swd.equivariant(blk, /*b=*/s, /*c=*/r);
            }
    }
    return out;
}

/** pi as a k^2n x k^2n matrix, column (J,I) at index J*k^n + I. */
inline QMatrix pi_matrix(const SWDecomp& swd) {
    const int nd = swd.tensor_dim();
    QMatrix m(nd * nd, nd * nd);
    for (int dual = 0; dual < nd; ++dual)
        for (int primal = 0; primal < nd; ++primal) {
            FunctionalElement img =
                project_pi(swd, FunctionalElement::term(swd.degree(), dual, primal));
            for (const auto& [key, c] : img.terms())
                m.at(key.first * nd + key.second, dual * nd + primal) = c;
        }
    return m;
}

// --- the induced product and coproduct ----------------------------------------

/** fg = pi(f (x) g): concatenation of indices followed by the projection. */
inline FunctionalElement multiply_sw(const FunctionalElement& f, const FunctionalElement& g,
                                     int k, const QScalar& qval = QScalar::q()) {
    const int n = f.degree(), m = g.degree();
    int km = 1;
    for (int s = 0; s < m; ++s) km *= k;
    FunctionalElement concat(n + m);
    for (const auto& [k1, c1] : f.terms())
        for (const auto& [k2, c2] : g.terms())
            concat.add(k1.first * km + k2.first, k1.second * km + k2.second, c1 * c2);
    return project_pi(schur_weyl_decompose(k, n + m, qval), concat);
}

/** An element of the tensor square of the functional spaces. */
struct FunctionalTensor {
    int n1 = 0, n2 = 0;
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, QScalar> terms;

    void add(std::pair<int, int> left, std::pair<int, int> right, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(std::make_pair(left, right), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const FunctionalTensor& a, const FunctionalTensor& b) {
        return a.n1 == b.n1 && a.n2 == b.n2 && a.terms == b.terms;
    }
};

/** Delta(f) = (pi (x) pi) sum_Z (Y* (x) Z) (x) (Z* (x) X), termwise. */
inline FunctionalTensor comultiply_sw(const FunctionalElement& f, int k,
                                      const QScalar& qval = QScalar::q()) {
    const SWDecomp& swd = schur_weyl_decompose(k, f.degree(), qval);
    FunctionalTensor out;
    out.n1 = out.n2 = f.degree();
    std::map<std::pair<int, int>, FunctionalElement> pi_cache;
    auto pi_of = [&](int dual, int primal) -> const FunctionalElement& {
        auto key = std::make_pair(dual, primal);
        auto it = pi_cache.find(key);
        if (it == pi_cache.end())
            it = pi_cache.emplace(key, project_pi(swd, FunctionalElement::term(f.degree(), dual,
                                                                               primal)))
                     .first;
        return it->second;
    };
    for (const auto& [key, coeff] : f.terms()) {
        const auto [dual, primal] = key;
        for (int z = 0; z < swd.tensor_dim(); ++z) {
            const FunctionalElement& left = pi_of(dual, z);
            const FunctionalElement& right = pi_of(z, primal);
            for (const auto& [kl, cl] : left.terms())
                for (const auto& [kr, cr] : right.terms()) out.add(kl, kr, coeff * cl * cr);
        }
    }
    return out;
}

// --- identification with the Peter-Weyl basis ----------------------------------

/**
 * The Peter-Weyl element induced by a functional: X^lambda_{b,c*}
 * corresponds to f^lambda_{c,b}.  For non-equivariant input this returns the
 * function induced by pi(phi), i.e. the common induced function.
 */
inline PWElement functional_to_pw(const SWDecomp& swd, const FunctionalElement& phi) {
    PWElement out;
    for (size_t blk = 0; blk < swd.blocks().size(); ++blk) {
        const int dv = swd.blocks()[blk].dim_v;
        for (int r = 0; r < dv; ++r)
            for (int s = 0; s < dv; ++s) {
                const QScalar val = swd.evaluate(phi, blk, r, s);
                if (!val.is_zero()) out.add(PWSymbol{swd.blocks()[blk].lambda, r, s}, val);
            }
    }
    return out;
}

/** The equivariant functional realizing a degree-homogeneous PW element. */
inline FunctionalElement pw_to_functional(const SWDecomp& swd, const PWElement& f) {
    FunctionalElement out(swd.degree());
    for (const auto& [sym, coeff] : f.terms()) {
        bool placed = false;
        for (size_t blk = 0; blk < swd.blocks().size(); ++blk) {
            if (!(swd.blocks()[blk].lambda == sym.label)) continue;
            out = out + coeff * swd.equivariant(blk, /*b=*/sym.j, /*c=*/sym.i);
            placed = true;
            break;
        }
        if (!placed)
            throw std::invalid_argument("PW term " + sym.str() +
                                        " does not live in this tensor degree");
    }
    return out;
}

// --- classical symmetrizer (q = 1 oracle) -------------------------------------

/**
 * The Young symmetrizer P = (1/n!) sum_sigma sigma acting simultaneously on
 * (V*)^(x)n and V^(x)n, as a matrix on functional coordinates.
 */
inline QMatrix classical_symmetrizer(int k, int n) {
    if (n > 6) throw std::invalid_argument("classical symmetrizer limited to n <= 6");
    int nd = 1;
    for (int s = 0; s < n; ++s) nd *= k;
    QMatrix p(nd * nd, nd * nd);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    auto permute_index = [&](int idx) {
        const std::vector<int> digits = detail::word_digits(idx, k, n);
        std::vector<int> moved(static_cast<size_t>(n));
        for (int pos = 0; pos < n; ++pos) moved[static_cast<size_t>(perm[static_cast<size_t>(pos)])] = digits[static_cast<size_t>(pos)];
        return detail::word_index(moved, k);
    };
    do {
        ++count;
        for (int dual = 0; dual < nd; ++dual) {
            const int pd = permute_index(dual);
            for (int primal = 0; primal < nd; ++primal)
                p.at(pd * nd + permute_index(primal), dual * nd + primal) += QScalar(1);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return QScalar(BigRat(1, count)) * p;
}

/** P applied to a single functional without materializing the matrix. */
inline FunctionalElement apply_classical_symmetrizer(int k, const FunctionalElement& phi) {
    const int n = phi.degree();
    FunctionalElement out(n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const QScalar scale(BigRat(1, count));
    for (const auto& [key, coeff] : phi.terms()) {
        for (const auto& sigma : perms) {
            auto apply = [&](int idx) {
                const std::vector<int> digits = detail::word_digits(idx, k, n);
                std::vector<int> moved(static_cast<size_t>(n));
                for (int pos = 0; pos < n; ++pos) moved[static_cast<size_t>(sigma[static_cast<size_t>(pos)])] = digits[static_cast<size_t>(pos)];
                return detail::word_index(moved, k);
            };
            out.add(apply(key.first), apply(key.second), scale * coeff);
        }
    }
    return out;
}

// --- FRT relations --------------------------------------------------------------

/** A quadratic relation in the generators, as a word combination and as text. */
struct FrtRelation {
    // word ((m1,j1),(m2,j2)) stands for x_{m1 j1} x_{m2 j2}
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, QScalar> words;
    std::string text;
};

struct FrtResult {
    int k = 2;
    std::vector<PWElement> residuals;  // the k^4 entries of R X1 X2 - X2 X1 R in O_q
    bool all_zero = true;
    std::vector<FrtRelation> relations;  // deduplicated nonzero entries, normalized
};

namespace detail {

inline std::string frt_generator_name(int k, int i, int j) {
    if (k == 2) {
        static const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
        return names[i][j];
    }
    return "x" + std::to_string(i + 1) + std::to_string(j + 1);
}

inline std::string frt_relation_text(int k, const FrtRelation& rel) {
    // normalize: unit leading coefficient on the lexicographically first word
    std::vector<std::pair<std::pair<std::pair<int, int>, std::pair<int, int>>, QScalar>> terms(
        rel.words.begin(), rel.words.end());
    // integer-coefficient words first, then q-dependent ones, each in word order
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const bool ia = a.second.is_integer_constant() || (-a.second).is_integer_constant();
        const bool ib = b.second.is_integer_constant() || (-b.second).is_integer_constant();
        if (ia != ib) return ia;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [word, coeff] : terms) {
        const std::string w = frt_generator_name(k, word.first.first, word.first.second) + "*" +
                              frt_generator_name(k, word.second.first, word.second.second);
        out += format_term(coeff, w, out.empty());
    }
    return out + " = 0";
}

}  // namespace detail

/**
 * Derives the quadratic relations of O_q(M_k): forms R X1 X2 - X2 X1 R with
 * entries multiplied out in the Peter-Weyl basis (each entry must vanish) and
 * reduces the word combinations to a canonical relation basis.
 */
inline FrtResult frt_relations(int k, const QScalar& qval = QScalar::q()) {
    using Word = std::pair<std::pair<int, int>, std::pair<int, int>>;
    FrtResult result;
    result.k = k;
    const IrrepLabel vl = IrrepLabel::gl(k, {1});
    const QMatrix r = frt_r_matrix(k, qval);
    auto sym = [&](int i, int j) { return PWSymbol{vl, i, j}; };

    std::vector<std::map<Word, QScalar>> combos;
    for (int i1 = 0; i1 < k; ++i1)
        for (int i2 = 0; i2 < k; ++i2)
            for (int j1 = 0; j1 < k; ++j1)
                for (int j2 = 0; j2 < k; ++j2) {
                    const int row = i1 * k + i2;
                    const int col = j1 * k + j2;
                    std::map<Word, QScalar> words;
                    PWElement residual;
                    for (int m1 = 0; m1 < k; ++m1)
                        for (int m2 = 0; m2 < k; ++m2) {
                            const QScalar& left = r.at(row, m1 * k + m2);
                            if (!left.is_zero()) {
                                words[{{m1, j1}, {m2, j2}}] += left;
                                residual = residual +
                                           left * basis_product(sym(m1, j1), sym(m2, j2), qval);
                            }
                            const QScalar& right = r.at(m1 * k + m2, col);
                            if (!right.is_zero()) {
                                words[{{i2, m2}, {i1, m1}}] -= right;
                                residual = residual -
                                           right * basis_product(sym(i2, m2), sym(i1, m1), qval);
                            }
                        }
                    for (auto it = words.begin(); it != words.end();)
                        it = it->second.is_zero() ? words.erase(it) : std::next(it);
                    result.residuals.push_back(residual);
                    if (!residual.is_zero()) result.all_zero = false;
                    if (!words.empty()) combos.push_back(std::move(words));
                }

    // Canonical basis of the relation span: reduced echelon form over the
    // word coordinates, pivoting on the lexicographically largest word of
    // each relation (so that rewritten forms eliminate the later word).
    std::vector<Word> word_list;
    for (const auto& words : combos)
        for (const auto& [w, c] : words)
            if (std::find(word_list.begin(), word_list.end(), w) == word_list.end())
                word_list.push_back(w);
    std::sort(word_list.begin(), word_list.end(), std::greater<Word>());
    QMatrix m(static_cast<int>(combos.size()), static_cast<int>(word_list.size()));
    for (size_t i = 0; i < combos.size(); ++i)
        for (const auto& [w, c] : combos[i]) {
            const auto pos =
                std::find(word_list.begin(), word_list.end(), w) - word_list.begin();
            m.at(static_cast<int>(i), static_cast<int>(pos)) = c;
        }
    RrefResult reduced = rref(m);
    for (int row = 0; row < reduced.rank; ++row) {
        FrtRelation rel;
        for (size_t col = 0; col < word_list.size(); ++col) {
            const QScalar& c = reduced.reduced.at(row, static_cast<int>(col));
            if (!c.is_zero()) rel.words[word_list[col]] = c;
        }
        // rescale so the lexicographically first word has coefficient one
        const QScalar lead_inv = rel.words.begin()->second.inverse();
        for (auto& [w, c] : rel.words) c *= lead_inv;
        rel.text = detail::frt_relation_text(k, rel);
        result.relations.push_back(std::move(rel));
    }
    return result;
}

}  // namespace pw

#endif  // PETERWEYL_SCHURWEYL_HPP
