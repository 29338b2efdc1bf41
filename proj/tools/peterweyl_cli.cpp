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
 * @file peterweyl_cli.cpp
 * @brief Command line surface: 3j tables, structure constants, Hopf checks,
 *        Schur-Weyl decompositions, FRT relations, pi matrices, scalar eval.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "peterweyl/serialize.hpp"

namespace {

using namespace pw;

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Algebra algebra_from_args(const std::string& name, int k) {
    if (name == "sl2") return Algebra::sl2();
    if (name == "gl") return Algebra::gl(k);
    throw CLI::ValidationError("--algebra", "must be sl2 or gl");
}

IrrepLabel label_from_args(const Algebra& alg, const std::string& csv) {
    std::vector<int> parts = parse_csv(csv);
    if (alg.family == Family::sl2) {
        if (parts.size() != 1)
            throw CLI::ValidationError("--lambda/--mu", "sl2 weights are single integers");
        return IrrepLabel::sl2(parts[0]);
    }
    return IrrepLabel::gl(alg.k, std::move(parts));
}

/** Resolves an output path against PETERWEYL_OUT_DIR for relative names. */
std::filesystem::path resolve_out(const std::string& out) {
    std::filesystem::path p(out);
    const char* base = std::getenv("PETERWEYL_OUT_DIR");
    if (base && p.is_relative()) return std::filesystem::path(base) / p;
    return p;
}

void emit(const std::string& out, const std::string& payload) {
    if (out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(resolve_out(out));
    if (!file) throw std::runtime_error("cannot open output file: " + out);
    file << payload;
}

std::string symbol_name(const IrrepLabel& label, int i, int j) {
    const bool is_gl2_vector =
        label.algebra.family == Family::gl && label.algebra.k == 2 && label.size() == 1;
    if (is_gl2_vector) {
        static const char* names[2][2] = {{"a", "b"}, {"c", "d"}};
        return names[i][j];
    }
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

int run_export_goldens(const std::string& dir);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in quantized function algebras (Peter-Weyl basis)"};
    app.require_subcommand(1);

    std::string algebra_name = "gl";
    int k = 2;
    int n = 2;
    std::string lambda_csv, mu_csv;
    std::string format = "json";
    std::string out;
    int max_weight = 2;
    int samples = 10;
    std::uint64_t seed = 1;
    bool at_one = false;
    std::string expr;
    std::string goldens_dir;

    auto add_common = [&](CLI::App* cmd, bool with_algebra) {
        if (with_algebra) {
            cmd->add_option("--algebra", algebra_name, "algebra family: sl2 or gl")
                ->check(CLI::IsMember({"sl2", "gl"}));
            cmd->add_option("--k", k, "rank parameter for gl");
        }
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out, "output path (default: stdout)");
    };

    CLI::App* threej_cmd = app.add_subcommand("threej", "quantum 3j and dual 3j symbol table");
    add_common(threej_cmd, true);
    threej_cmd->add_option("--lambda", lambda_csv, "first label (sl2 integer or partition)")
        ->required();
    threej_cmd->add_option("--mu", mu_csv, "second label")->required();

    CLI::App* sc_cmd =
        app.add_subcommand("structure-constants", "Peter-Weyl multiplication table for a label pair");
    add_common(sc_cmd, true);
    sc_cmd->add_option("--lambda", lambda_csv, "first label")->required();
    sc_cmd->add_option("--mu", mu_csv, "second label")->required();
    sc_cmd->add_flag("--q1", at_one, "specialize the table at q=1");

    CLI::App* hopf_cmd = app.add_subcommand("hopf-check", "verify the bialgebra axioms exactly");
    add_common(hopf_cmd, true);
    hopf_cmd->add_option("--max-weight", max_weight, "largest |lambda| to test");
    hopf_cmd->add_option("--samples", samples, "number of random linear combinations");
    hopf_cmd->add_option("--seed", seed, "seed for the randomized checks");

    CLI::App* sw_cmd = app.add_subcommand("schur-weyl", "isotypic dimension table of V^(x)n");
    add_common(sw_cmd, false);
    sw_cmd->add_option("--k", k, "gl rank")->required();
    sw_cmd->add_option("--n", n, "tensor degree")->required();

    CLI::App* frt_cmd = app.add_subcommand("frt", "derive the quadratic relations of O_q(M_k)");
    add_common(frt_cmd, false);
    frt_cmd->add_option("--k", k, "gl rank")->required();
    frt_cmd->add_flag("--q1", at_one, "specialize at q=1");

    CLI::App* pi_cmd = app.add_subcommand("pi", "matrix of the equivariant projection");
    add_common(pi_cmd, false);
    pi_cmd->add_option("--k", k, "gl rank")->required();
    pi_cmd->add_option("--n", n, "tensor degree")->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "canonicalize a scalar expression in q");
    add_common(eval_cmd, false);
    eval_cmd->add_option("--expr", expr, "expression over q, q^-1, integers")->required();
    eval_cmd->add_flag("--at-one", at_one, "also evaluate at q=1");

    CLI::App* goldens_cmd = app.add_subcommand("export-goldens", "write the canonical golden files");
    goldens_cmd->add_option("--dir", goldens_dir, "target directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(threej_cmd)) {
            const Algebra alg = algebra_from_args(algebra_name, k);
            ThreeJTable table = threej(label_from_args(alg, lambda_csv), label_from_args(alg, mu_csv));
            if (format == "json") {
                emit(out, to_json(table).dump(2) + "\n");
            } else {
                std::string text;
                for (const auto& e : table.entries)
                    text += "(" + e.nu.str() + " k=" + std::to_string(e.k) + " b1=" +
                            std::to_string(e.b1) + " b2=" + std::to_string(e.b2) + " b3=" +
                            std::to_string(e.b3) + ") = " + e.value.str() + "\n";
                emit(out, text);
            }
            return 0;
        }
        if (app.got_subcommand(sc_cmd)) {
            const Algebra alg = algebra_from_args(algebra_name, k);
            StructureTable table =
                structure_constants(label_from_args(alg, lambda_csv), label_from_args(alg, mu_csv));
            if (at_one) table = specialize_q1(table);
            if (format == "json") {
                emit(out, to_json(table).dump(2) + "\n");
            } else {
                const bool use_generator_names = alg.family == Family::gl && alg.k == 2 &&
                                                 table.lambda.size() == 1 && table.mu.size() == 1 &&
                                                 !at_one;
                std::string text;
                for (const auto& row : table.rows) {
                    text += symbol_name(table.lambda, row.i1, row.j1) + "*" +
                            symbol_name(table.mu, row.i2, row.j2) + " = ";
                    text += use_generator_names ? gl2_generator_string(row.product)
                                                : row.product.str();
                    text += "\n";
                }
                emit(out, text);
            }
            return 0;
        }
        if (app.got_subcommand(hopf_cmd)) {
            const Algebra alg = algebra_from_args(algebra_name, k);
            HopfReport report = verify_hopf(alg, max_weight, samples, seed);
            if (report.ok()) {
                emit(out, "all checks passed (" + std::to_string(report.checks) + " checks)\n");
                return 0;
            }
            std::string text = "verification FAILED:\n";
            for (const auto& f : report.failures) text += "  " + f + "\n";
            emit(out, text);
            return 1;
        }
        if (app.got_subcommand(sw_cmd)) {
            const SWDecomp& d = schur_weyl_decompose(k, n);
            emit(out, format == "json" ? sw_summary_json(d).dump(2) + "\n"
                                       : sw_summary_text(d) + "\n");
            return 0;
        }
        if (app.got_subcommand(frt_cmd)) {
            FrtResult r = frt_relations(k, at_one ? QScalar(1) : QScalar::q());
            if (format == "json")
                emit(out, to_json(r).dump(2) + "\n");
            else
                emit(out, frt_text(r));
            if (!r.all_zero) {
                std::cerr << "FRT residuals are nonzero (pipeline inconsistency)\n";
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(pi_cmd)) {
            const SWDecomp& d = schur_weyl_decompose(k, n);
            QMatrix m = pi_matrix(d);
            if (format == "json") {
                Json j;
                j["k"] = k;
                j["n"] = n;
                j["matrix"] = to_json(m);
                emit(out, j.dump(2) + "\n");
            } else {
                std::string text;
                for (int r = 0; r < m.rows(); ++r) {
                    for (int c = 0; c < m.cols(); ++c)
                        text += (c ? " " : "") + m.at(r, c).str();
                    text += "\n";
                }
                emit(out, text);
            }
            return 0;
        }
        if (app.got_subcommand(eval_cmd)) {
            QScalar value = QScalar::parse(expr);
            if (format == "json") {
                Json j;
                j["expr"] = expr;
                j["canonical"] = value.str();
                if (at_one) j["at_one"] = value.at_one().get_str();
                emit(out, j.dump(2) + "\n");
            } else {
                std::string text = value.str() + "\n";
                if (at_one) text += "at q=1: " + value.at_one().get_str() + "\n";
                emit(out, text);
            }
            return 0;
        }
        if (app.got_subcommand(goldens_cmd)) {
            return run_export_goldens(goldens_dir);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

namespace {

int run_export_goldens(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path base = resolve_out(dir);
    fs::create_directories(base);
    auto write = [&](const std::string& name, const std::string& payload) {
        std::ofstream file(base / name);
        if (!file) throw std::runtime_error("cannot write " + (base / name).string());
        file << payload;
        std::cout << (base / name).string() << "\n";
    };

    // FRT relations, deformed and classical
    write("frt_m2.txt", frt_text(frt_relations(2)));
    write("frt_m2_q1.txt", frt_text(frt_relations(2, QScalar(1))));

    // the degree-2 expansions of ad, da, bc, cb in the s,t matrix elements:
    // s*(x)s = f^{(2,0)}_{1,1} and t*(x)t = f^{(1,1)}_{0,0}
    const PWSymbol ss{IrrepLabel::gl(2, {2, 0}), 1, 1};
    const PWSymbol tt{IrrepLabel::gl(2, {1, 1}), 0, 0};
    Json expansions;
    for (const auto& [name, i1, j1, i2, j2] :
         std::vector<std::tuple<std::string, int, int, int, int>>{
             {"ad", 0, 0, 1, 1}, {"da", 1, 1, 0, 0}, {"bc", 0, 1, 1, 0}, {"cb", 1, 0, 0, 1}}) {
        PWElement p = multiply(gl2_generator(i1, j1), gl2_generator(i2, j2));
        Json je;
        je["s*s"] = p.terms().count(ss) ? p.terms().at(ss).str() : "0";
        je["t*t"] = p.terms().count(tt) ? p.terms().at(tt).str() : "0";
        expansions[name] = std::move(je);
    }
    write("m2_sec_expansions.json", expansions.dump(2) + "\n");

    // 3j table and structure constants for the gl_2 vector square
    const IrrepLabel vl = IrrepLabel::gl(2, {1, 0});
    write("threej_gl2.json", to_json(threej(vl, vl)).dump(2) + "\n");
    write("structure_constants_m2.json", to_json(structure_constants(vl, vl)).dump(2) + "\n");

    // Schur-Weyl dimension tables
    Json sw;
    std::string sw_text;
    for (auto [kk, nn] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
        const SWDecomp& d = schur_weyl_decompose(kk, nn);
        sw.push_back(sw_summary_json(d));
        sw_text += "k=" + std::to_string(kk) + " n=" + std::to_string(nn) + ": " +
                   sw_summary_text(d) + "\n";
    }
    write("schur_weyl_dims.json", sw.dump(2) + "\n");
    write("schur_weyl_dims.txt", sw_text);
    return 0;
}

}  // namespace
