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
 * @file ofun.hpp
 * @brief The quantized function algebra O_q(G) in its Peter-Weyl basis.
 *
 * A basis symbol f^lambda_{i,j} is the (i,j) matrix element of the registry
 * model of V_lambda, paired against U_q by <f, u> = rho_lambda(u)[i][j].
 *
 * Multiplication expands a product of matrix elements through the
 * Clebsch-Gordan decomposition of V_lambda (x) V_mu (the bracketed sum of 3j
 * against dual 3j symbols).  Comultiplication is matrix-unit like,
 *   Delta f_{ij} = sum_z f_{iz} (x) f_{zj},
 * and never touches a coefficient: its structure constants stay the
 * classical 0/1 integers, which is the whole point of this presentation.
 */

#ifndef PETERWEYL_OFUN_HPP
#define PETERWEYL_OFUN_HPP

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "clebsch.hpp"

namespace pw {

struct PWSymbol {
    IrrepLabel label;
    int i = 0, j = 0;

    friend bool operator==(const PWSymbol& a, const PWSymbol& b) {
        return a.label == b.label && a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const PWSymbol& a, const PWSymbol& b) { return !(a == b); }
    friend bool operator<(const PWSymbol& a, const PWSymbol& b) {
        if (a.label != b.label) return a.label < b.label;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    std::string str() const {
        return "f[" + label.str() + ";" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
};

/** A finite Q(q)-linear combination of Peter-Weyl symbols. */
class PWElement {
   public:
    PWElement() = default;
    explicit PWElement(const PWSymbol& s) { terms_.emplace(s, QScalar(1)); }

    static PWElement symbol(const IrrepLabel& label, int i, int j) {
        if (i < 0 || j < 0 || i >= weyl_dim(label) || j >= weyl_dim(label))
            throw std::invalid_argument("Peter-Weyl symbol index out of range");
        return PWElement(PWSymbol{label, i, j});
    }

    const std::map<PWSymbol, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const PWSymbol& s, const QScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PWElement operator+(const PWElement& a, const PWElement& b) {
        PWElement r(a);
        for (const auto& [s, c] : b.terms_) r.add(s, c);
        return r;
    }
    friend PWElement operator-(const PWElement& a, const PWElement& b) {
        PWElement r(a);
        for (const auto& [s, c] : b.terms_) r.add(s, -c);
        return r;
    }
    friend PWElement operator*(const QScalar& c, const PWElement& a) {
        PWElement r;
        if (c.is_zero()) return r;
        for (const auto& [s, v] : a.terms_) r.terms_.emplace(s, c * v);
        return r;
    }
    friend bool operator==(const PWElement& a, const PWElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PWElement& a, const PWElement& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str() + "*" + s.str();
        }
        return out;
    }

   private:
    std::map<PWSymbol, QScalar> terms_;
};

/** An element of O_q (x) O_q. */
class PWTensor {
   public:
    using Key = std::pair<PWSymbol, PWSymbol>;

    const std::map<Key, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const PWSymbol& s1, const PWSymbol& s2, const QScalar& c) {
        if (c.is_zero()) return;
        Key k{s1, s2};
        auto [it, inserted] = terms_.emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PWTensor operator+(const PWTensor& a, const PWTensor& b) {
        PWTensor r(a);
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend PWTensor operator-(const PWTensor& a, const PWTensor& b) {
        PWTensor r(a);
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
        return r;
    }
    friend bool operator==(const PWTensor& a, const PWTensor& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PWTensor& a, const PWTensor& b) { return !(a == b); }

   private:
    std::map<Key, QScalar> terms_;
};

/** The unit of O_q: the matrix element of the trivial representation. */
inline PWElement pw_unit(const Algebra& alg) {
    IrrepLabel triv = alg.family == Family::sl2
                          ? IrrepLabel::sl2(0)
                          : IrrepLabel::gl(alg.k, std::vector<int>());
    return PWElement::symbol(triv, 0, 0);
}

/**
 * Product of two basis symbols through the Clebsch-Gordan decomposition;
 * memoized per (symbol, symbol, q).
 */
inline PWElement basis_product(const PWSymbol& s1, const PWSymbol& s2,
                               const QScalar& qval = QScalar::q()) {
    static std::map<std::string, PWElement> cache;
    static std::mutex mu_;
    const std::string key = s1.str() + s2.str() + "|" + qval.str();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const Decomposition& d = pair_decomposition(s1.label, s2.label, qval);
    const int dim_mu = irrep(s2.label, qval).dim;
    const int row_y = s1.i * dim_mu + s2.i;
    const int col_x = s1.j * dim_mu + s2.j;
    PWElement result;
    for (const auto& c : d.constituents) {
        const int dim_nu = c.embedding.cols();
        for (int y3 = 0; y3 < dim_nu; ++y3) {
            const QScalar& dual = d.C.at(row_y, c.col_offset + y3);
            if (dual.is_zero()) continue;
            for (int x3 = 0; x3 < dim_nu; ++x3) {
                const QScalar& direct = d.Cinv.at(c.col_offset + x3, col_x);
                if (direct.is_zero()) continue;
                result.add(PWSymbol{c.nu, y3, x3}, dual * direct);
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cache.emplace(key, std::move(result)).first->second;
}

using BasisProductFn = std::function<PWElement(const PWSymbol&, const PWSymbol&)>;

inline PWElement multiply(const PWElement& f, const PWElement& g,
                          const QScalar& qval = QScalar::q()) {
    PWElement result;
    for (const auto& [s1, c1] : f.terms())
        for (const auto& [s2, c2] : g.terms()) {
            if (s1.label.algebra != s2.label.algebra)
                throw std::invalid_argument("product of elements over different algebras");
            PWElement p = basis_product(s1, s2, qval);
            const QScalar c = c1 * c2;
            for (const auto& [s, v] : p.terms()) result.add(s, c * v);
        }
    return result;
}

/**
 * Delta f_{ij} = sum_z f_{iz} (x) f_{zj}.  Reads only the label dimension
 * (weyl_dim), never a Q(q) coefficient: the structure constants are the
 * classical integers.
 */
inline PWTensor comultiply(const PWElement& f) {
    PWTensor out;
    for (const auto& [s, c] : f.terms()) {
        const int d = static_cast<int>(weyl_dim(s.label));
        for (int z = 0; z < d; ++z)
            out.add(PWSymbol{s.label, s.i, z}, PWSymbol{s.label, z, s.j}, c);
    }
    return out;
}

/** epsilon(f_{ij}) = delta_ij, extended linearly. */
inline QScalar counit(const PWElement& f) {
    QScalar out;
    for (const auto& [s, c] : f.terms())
        if (s.i == s.j) out += c;
    return out;
}

inline PWTensor tensor_product(const PWElement& f, const PWElement& g) {
    PWTensor out;
    for (const auto& [s1, c1] : f.terms())
        for (const auto& [s2, c2] : g.terms()) out.add(s1, s2, c1 * c2);
    return out;
}

/** Componentwise product in O_q (x) O_q. */
inline PWTensor multiply_tensor(const PWTensor& a, const PWTensor& b,
                                const QScalar& qval = QScalar::q()) {
    PWTensor out;
    for (const auto& [k1, c1] : a.terms())
        for (const auto& [k2, c2] : b.terms()) {
            PWElement left = basis_product(k1.first, k2.first, qval);
            PWElement right = basis_product(k1.second, k2.second, qval);
            const QScalar c = c1 * c2;
            for (const auto& [sl, vl] : left.terms())
                for (const auto& [sr, vr] : right.terms()) out.add(sl, sr, c * vl * vr);
        }
    return out;
}

inline PWElement apply_counit_left(const PWTensor& t) {
    PWElement out;
    for (const auto& [k, c] : t.terms())
        if (k.first.i == k.first.j) out.add(k.second, c);
    return out;
}

inline PWElement apply_counit_right(const PWTensor& t) {
    PWElement out;
    for (const auto& [k, c] : t.terms())
        if (k.second.i == k.second.j) out.add(k.first, c);
    return out;
}

/** A generator word in U_q for the pairing. */
struct GenRef {
    enum class Kind { E, F, K, Kinv };
    Kind kind = Kind::K;
    int index = 1;  // simple root, 1-based

    static GenRef E(int i = 1) { return GenRef{Kind::E, i}; }
    static GenRef F(int i = 1) { return GenRef{Kind::F, i}; }
    static GenRef K(int i = 1) { return GenRef{Kind::K, i}; }
    static GenRef Kinv(int i = 1) { return GenRef{Kind::Kinv, i}; }
};

inline const QMatrix& generator_matrix(const Rep& r, const GenRef& g) {
    const size_t i = static_cast<size_t>(g.index - 1);
    if (g.index < 1 || g.index > r.algebra.rank())
        throw std::invalid_argument("generator index out of range");
    switch (g.kind) {
        case GenRef::Kind::E: return r.E[i];
        case GenRef::Kind::F: return r.F[i];
        case GenRef::Kind::K: return r.K[i];
        default: return r.Kinv[i];
    }
}

inline QMatrix rep_word_matrix(const Rep& r, const std::vector<GenRef>& word) {
    QMatrix m = QMatrix::identity(r.dim);
    for (const auto& g : word) m = m * generator_matrix(r, g);
    return m;
}

/** <f, u> = sum of coefficients times matrix entries of the word in each label. */
inline QScalar pairing(const PWElement& f, const std::vector<GenRef>& word,
                       const QScalar& qval = QScalar::q()) {
    QScalar out;
    std::map<IrrepLabel, QMatrix> word_matrices;
    for (const auto& [s, c] : f.terms()) {
        auto it = word_matrices.find(s.label);
        if (it == word_matrices.end())
            it = word_matrices.emplace(s.label, rep_word_matrix(irrep(s.label, qval), word)).first;
        out += c * it->second.at(s.i, s.j);
    }
    return out;
}

/** <f (x) g, Delta u> evaluated through the tensor product representation. */
inline QScalar pairing_tensor(const PWElement& f, const PWElement& g,
                              const std::vector<GenRef>& word,
                              const QScalar& qval = QScalar::q()) {
    QScalar out;
    std::map<std::pair<IrrepLabel, IrrepLabel>, QMatrix> word_matrices;
    for (const auto& [s1, c1] : f.terms())
        for (const auto& [s2, c2] : g.terms()) {
            const auto key = std::make_pair(s1.label, s2.label);
            auto it = word_matrices.find(key);
            if (it == word_matrices.end()) {
                const Rep& pair = pair_decomposition(s1.label, s2.label, qval).source;
                it = word_matrices.emplace(key, rep_word_matrix(pair, word)).first;
            }
            const int dim_mu = irrep(s2.label, qval).dim;
            out += c1 * c2 * it->second.at(s1.i * dim_mu + s2.i, s1.j * dim_mu + s2.j);
        }
    return out;
}

/** The full basis product table for (lambda, mu), in deterministic order. */
struct StructureTable {
    IrrepLabel lambda, mu;
    struct Row {
        int i1, j1, i2, j2;
        PWElement product;
    };
    std::vector<Row> rows;
};

inline StructureTable structure_constants(const IrrepLabel& lambda, const IrrepLabel& mu,
                                          const QScalar& qval = QScalar::q()) {
    StructureTable t;
    t.lambda = lambda;
    t.mu = mu;
    const int dl = irrep(lambda, qval).dim;
    const int dm = irrep(mu, qval).dim;
    for (int i1 = 0; i1 < dl; ++i1)
        for (int j1 = 0; j1 < dl; ++j1)
            for (int i2 = 0; i2 < dm; ++i2)
                for (int j2 = 0; j2 < dm; ++j2)
                    t.rows.push_back({i1, j1, i2, j2,
                                      basis_product(PWSymbol{lambda, i1, j1},
                                                    PWSymbol{mu, i2, j2}, qval)});
    return t;
}

/**
 * Entrywise q=1 specialization of a structure constant table; throws naming
 * the offending entry if any coefficient has a pole.
 */
inline StructureTable specialize_q1(const StructureTable& t) {
    StructureTable out;
    out.lambda = t.lambda;
    out.mu = t.mu;
    for (const auto& row : t.rows) {
        PWElement p;
        for (const auto& [s, c] : row.product.terms()) {
            if (!c.regular_at_one())
                throw std::domain_error("not regular at q=1: coefficient of " + s.str() +
                                        " in the product at (" + std::to_string(row.i1) + "," +
                                        std::to_string(row.j1) + ")(" + std::to_string(row.i2) +
                                        "," + std::to_string(row.j2) + ")");
            p.add(s, QScalar(c.at_one()));
        }
        out.rows.push_back({row.i1, row.j1, row.i2, row.j2, std::move(p)});
    }
    return out;
}

// --- gl_2 generator notation -------------------------------------------------

/** The generators a, b, c, d of O_q(M_2) as Peter-Weyl symbols. */
inline PWElement gl2_generator(int i, int j) {
    return PWElement::symbol(IrrepLabel::gl(2, {1, 0}), i, j);
}

namespace detail {

inline const std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>>&
gl2_monomials() {
    // Normal ordered monomials of degree <= 2 in the PBW order a < b < c < d.
    static const std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> table = {
        {"1", {}},
        {"a", {{0, 0}}},
        {"b", {{0, 1}}},
        {"c", {{1, 0}}},
        {"d", {{1, 1}}},
        {"a*a", {{0, 0}, {0, 0}}},
        {"a*b", {{0, 0}, {0, 1}}},
        {"a*c", {{0, 0}, {1, 0}}},
        {"a*d", {{0, 0}, {1, 1}}},
        {"b*b", {{0, 1}, {0, 1}}},
        {"b*c", {{0, 1}, {1, 0}}},
        {"b*d", {{0, 1}, {1, 1}}},
        {"c*c", {{1, 0}, {1, 0}}},
        {"c*d", {{1, 0}, {1, 1}}},
        {"d*d", {{1, 1}, {1, 1}}},
    };
    return table;
}

inline std::string format_term(const QScalar& coeff, const std::string& word, bool first) {
    // coefficient 1/-1 omitted; composite Laurent coefficients parenthesized
    QScalar c = coeff;
    const bool negative = !c.is_zero() && c.num().leading() < 0;
    if (negative) c = -c;
    const std::string sign = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const std::string ls = c.laurent_str();
    std::string body;
    if (word.empty()) {
        body = c.laurent_is_composite() ? "(" + ls + ")" : ls;
    } else if (c.is_one()) {
        body = word;
    } else if (c.laurent_is_composite()) {
        body = "(" + ls + ")*" + word;
    } else {
        body = ls + "*" + word;
    }
    return sign + body;
}

}  // namespace detail

/**
 * Displays an element of O_q(M_2) of degree <= 2 in normal ordered generator
 * words (PBW order a < b < c < d).
 */
inline std::string gl2_generator_string(const PWElement& f, const QScalar& qval = QScalar::q()) {
    if (f.is_zero()) return "0";
    // monomial values in the Peter-Weyl basis
    std::vector<PWElement> monomials;
    std::vector<PWSymbol> support;
    for (const auto& [name, word] : detail::gl2_monomials()) {
        PWElement m = pw_unit(Algebra::gl(2));
        for (const auto& [i, j] : word) m = multiply(m, gl2_generator(i, j), qval);
        monomials.push_back(m);
        for (const auto& [s, c] : m.terms())
            if (std::find(support.begin(), support.end(), s) == support.end()) support.push_back(s);
        (void)name;
    }
    std::sort(support.begin(), support.end());
    for (const auto& [s, c] : f.terms())
        if (std::find(support.begin(), support.end(), s) == support.end())
            throw std::invalid_argument("generator form implemented for degree <= 2 only");

    QMatrix m(static_cast<int>(support.size()), static_cast<int>(monomials.size()));
    for (size_t col = 0; col < monomials.size(); ++col)
        for (const auto& [s, c] : monomials[col].terms()) {
            const auto pos = std::lower_bound(support.begin(), support.end(), s) - support.begin();
            m.at(static_cast<int>(pos), static_cast<int>(col)) = c;
        }
    QMatrix rhs(static_cast<int>(support.size()), 1);
    for (const auto& [s, c] : f.terms()) {
        const auto pos = std::lower_bound(support.begin(), support.end(), s) - support.begin();
        rhs.at(static_cast<int>(pos), 0) = c;
    }
    auto sol = solve(m, rhs);
    if (!sol) throw std::logic_error("element is outside the degree <= 2 monomial span");

    std::string out;
    for (size_t col = 0; col < monomials.size(); ++col) {
        const QScalar& coeff = sol->at(static_cast<int>(col), 0);
        if (coeff.is_zero()) continue;
        out += detail::format_term(coeff, detail::gl2_monomials()[col].first == "1"
                                              ? ""
                                              : detail::gl2_monomials()[col].first,
                                   out.empty());
    }
    return out.empty() ? "0" : out;
}

// --- Hopf axiom verification -------------------------------------------------

struct HopfReport {
    std::vector<std::string> failures;
    long checks = 0;
    bool ok() const { return failures.empty(); }
};

/** All labels of the algebra with |lambda| <= max_weight, largest first. */
inline std::vector<IrrepLabel> labels_up_to(const Algebra& alg, int max_weight) {
    std::vector<IrrepLabel> out;
    if (alg.family == Family::sl2) {
        for (int n = 0; n <= max_weight; ++n) out.push_back(IrrepLabel::sl2(n));
        return out;
    }
    for (int total = 0; total <= max_weight; ++total) {
        std::vector<int> part;
        std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
            if (remaining == 0) {
                if (static_cast<int>(part.size()) <= alg.k) out.push_back(IrrepLabel::gl(alg.k, part));
                return;
            }
            if (static_cast<int>(part.size()) == alg.k) return;
            for (int p = std::min(remaining, maxpart); p >= 1; --p) {
                part.push_back(p);
                rec(remaining - p, p);
                part.pop_back();
            }
        };
        rec(total, total == 0 ? 1 : total);
    }
    return out;
}

/**
 * Exact verification of associativity, coassociativity, Delta(fg) =
 * Delta(f)Delta(g) and the counit axioms: on every basis symbol tuple with
 * labels up to max_weight, plus sample_count seeded random combinations.
 * Failures carry a witness description.
 */
inline HopfReport verify_hopf(const Algebra& alg, int max_weight, int sample_count,
                              std::uint64_t seed = 1, const QScalar& qval = QScalar::q(),
                              const BasisProductFn& product_override = nullptr) {
    HopfReport report;
    const BasisProductFn product =
        product_override ? product_override
                         : BasisProductFn([&qval](const PWSymbol& s1, const PWSymbol& s2) {
                               return basis_product(s1, s2, qval);
                           });
    auto mult = [&](const PWElement& f, const PWElement& g) {
        PWElement result;
        for (const auto& [s1, c1] : f.terms())
            for (const auto& [s2, c2] : g.terms()) {
                PWElement p = product(s1, s2);
                const QScalar c = c1 * c2;
                for (const auto& [s, v] : p.terms()) result.add(s, c * v);
            }
        return result;
    };
    auto mult_tensor = [&](const PWTensor& a, const PWTensor& b) {
        PWTensor out;
        for (const auto& [k1, c1] : a.terms())
            for (const auto& [k2, c2] : b.terms()) {
                PWElement left = product(k1.first, k2.first);
                PWElement right = product(k1.second, k2.second);
                const QScalar c = c1 * c2;
                for (const auto& [sl, vl] : left.terms())
                    for (const auto& [sr, vr] : right.terms()) out.add(sl, sr, c * vl * vr);
            }
        return out;
    };

    std::vector<PWSymbol> symbols;
    for (const auto& label : labels_up_to(alg, max_weight)) {
        const int d = static_cast<int>(weyl_dim(label));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) symbols.push_back(PWSymbol{label, i, j});
    }

    // counit axioms and coassociativity on every basis symbol
    for (const auto& s : symbols) {
        PWElement f(s);
        PWTensor delta = comultiply(f);
        ++report.checks;
        if (apply_counit_left(delta) != f)
            report.failures.push_back("(eps (x) id) Delta failed at " + s.str());
        ++report.checks;
        if (apply_counit_right(delta) != f)
            report.failures.push_back("(id (x) eps) Delta failed at " + s.str());
        // coassociativity: (Delta (x) id)Delta splits the left leg, (id (x) Delta)
        // the right one; both land on chains f_{iz} (x) f_{zw} (x) f_{wj}.
        ++report.checks;
        std::map<std::tuple<IrrepLabel, int, int, int, int>, QScalar> t1, t2;
        for (const auto& [k, c] : delta.terms()) {
            const int dd = static_cast<int>(weyl_dim(k.first.label));
            for (int z = 0; z < dd; ++z) {
                t1[{k.first.label, k.first.i, z, k.first.j, k.second.j}] += c;
                t2[{k.first.label, k.first.i, k.second.i, z, k.second.j}] += c;
            }
        }
        if (t1 != t2) report.failures.push_back("coassociativity failed at " + s.str());
    }

    // compatibility Delta(fg) = Delta(f) Delta(g) on all basis pairs
    for (const auto& s1 : symbols)
        for (const auto& s2 : symbols) {
            PWElement f(s1), g(s2);
            ++report.checks;
            if (comultiply(mult(f, g)) != mult_tensor(comultiply(f), comultiply(g))) {
                report.failures.push_back("Delta(fg) != Delta(f)Delta(g) at " + s1.str() + ", " +
                                          s2.str());
                if (report.failures.size() > 8) return report;
            }
        }

    // associativity on all basis triples
    for (const auto& s1 : symbols)
        for (const auto& s2 : symbols) {
            const PWElement fg = mult(PWElement(s1), PWElement(s2));
            for (const auto& s3 : symbols) {
                ++report.checks;
                if (mult(fg, PWElement(s3)) !=
                    mult(PWElement(s1), mult(PWElement(s2), PWElement(s3)))) {
                    report.failures.push_back("associativity failed at " + s1.str() + ", " +
                                              s2.str() + ", " + s3.str());
                    if (report.failures.size() > 8) return report;
                }
            }
        }

    // random linear combinations
    std::mt19937_64 rng(seed);
    auto random_element = [&]() {
        PWElement f;
        std::uniform_int_distribution<int> nterms(1, 3);
        std::uniform_int_distribution<size_t> sym(0, symbols.size() - 1);
        std::uniform_int_distribution<int> coeff(-3, 3);
        std::uniform_int_distribution<int> power(-2, 2);
        const int n = nterms(rng);
        for (int t = 0; t < n; ++t)
            f.add(symbols[sym(rng)], QScalar(coeff(rng)) * qval.pow(power(rng)));
        return f;
    };
    for (int t = 0; t < sample_count; ++t) {
        PWElement f = random_element(), g = random_element(), h = random_element();
        ++report.checks;
        if (mult(mult(f, g), h) != mult(f, mult(g, h)))
            report.failures.push_back("associativity failed on random sample " + std::to_string(t));
        ++report.checks;
        if (comultiply(mult(f, g)) != mult_tensor(comultiply(f), comultiply(g)))
            report.failures.push_back("compatibility failed on random sample " + std::to_string(t));
        ++report.checks;
        if (apply_counit_left(comultiply(f)) != f || apply_counit_right(comultiply(f)) != f)
            report.failures.push_back("counit axiom failed on random sample " + std::to_string(t));
    }
    return report;
}

}  // namespace pw

#endif  // PETERWEYL_OFUN_HPP
