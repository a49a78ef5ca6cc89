#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ptb/chart.hpp"
#include "ptb/chow.hpp"
#include "ptb/chow_parse.hpp"
#include "ptb/classify.hpp"
#include "ptb/errors.hpp"
#include "ptb/io.hpp"
#include "ptb/lab.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitScalar = 3;
constexpr int kExitMismatch = 4;

void print(const ptb::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const std::string& path, int n) {
    ptb::json j = ptb::load_json_file(path);
    ptb::Matrix<ptb::Rational> a = ptb::matrix_from_json(j);
    if (j.at("n").get<int>() != n)
        throw ptb::InputError("--n does not match the matrix file");
    ptb::SectionReport rep = ptb::classify(a, n);
    print(ptb::report_to_json(rep));
    return kExitOk;
}

int cmd_chow(int n, const std::string& expr) {
    ptb::ChowClass c = ptb::parse_expression(n, expr);
    ptb::json j;
    j["n"] = n;
    j["expr"] = expr;
    j["normal_form"] = ptb::to_string(c);
    ptb::json terms = ptb::json::array();
    for (int deg = 0; deg <= 2 * n - 2; ++deg)
        for (const ptb::BasisElement& e : ptb::chow_basis(n, deg)) {
            ptb::Int coeff(0);
            if (e.exceptional)
                coeff = c.exc[static_cast<size_t>(e.k)];
            else {
                auto it = c.mono.find(std::make_pair(e.i, e.j));
                if (it != c.mono.end()) coeff = it->second;
            }
            if (coeff == 0) continue;
            ptb::json t;
            t["basis"] = e.name();
            t["degree"] = deg;
            t["coefficient"] = coeff.str();
            terms.push_back(t);
        }
    j["terms"] = terms;
    try {
        j["intersection_number"] = ptb::intersection_number(c).str();
    } catch (const ptb::InputError&) {
        j["intersection_number"] = nullptr; // not homogeneous of top degree
    }
    print(j);
    return kExitOk;
}

int cmd_chart(const std::string& path, int n, int i, int j) {
    ptb::json mj = ptb::load_json_file(path);
    ptb::Matrix<ptb::Rational> a = ptb::matrix_from_json(mj);
    if (mj.at("n").get<int>() != n)
        throw ptb::InputError("--n does not match the matrix file");
    ptb::ChartEquation<ptb::Rational> eq = ptb::chart_equation(a, n, i, j);
    print(ptb::chart_to_json(eq));
    return kExitOk;
}

int cmd_dual(const std::string& path) {
    ptb::json mj = ptb::load_json_file(path);
    ptb::Matrix<ptb::Rational> a = ptb::matrix_from_json(mj);
    int n = mj.at("n").get<int>();
    ptb::json j;
    j["n"] = n;
    j["dual_member"] = ptb::dual_membership(a);
    print(j);
    return kExitOk;
}

std::string entry_label(const ptb::CatalogEntry& e) {
    if (!e.label.empty()) return e.label;
    std::string s = "q=" + std::to_string(e.q);
    if (!e.blocks.empty()) {
        s += " blocks=";
        for (size_t t = 0; t < e.blocks.size(); ++t) {
            if (t) s += ",";
            s += "(" + std::to_string(e.blocks[t].eigenvalue) + "," +
                 std::to_string(e.blocks[t].size) + ")";
        }
    } else {
        s += " raw " + std::to_string(e.raw_entries.size()) + "x" +
             std::to_string(e.raw_entries.size());
    }
    return s;
}

bool same_eigen_data(const std::vector<ptb::FpEigenData>& a,
                     const std::vector<ptb::FpEigenData>& b) {
    if (a.size() != b.size()) return false;
    for (size_t t = 0; t < a.size(); ++t)
        if (a[t].lambda != b[t].lambda || a[t].multiplicity != b[t].multiplicity ||
            a[t].r != b[t].r || a[t].s != b[t].s)
            return false;
    return true;
}

int cmd_verify(const std::string& path, uint32_t q_max, bool seeded, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    std::string bytes = ptb::read_file(path);
    ptb::json cj = ptb::json::parse(bytes, nullptr, false);
    if (cj.is_discarded()) throw ptb::InputError("invalid JSON in file: " + path);
    std::vector<ptb::CatalogEntry> entries = ptb::catalog_from_json(cj);
    if (entries.empty()) throw ptb::InputError("catalog is empty");

    ptb::json manifest;
    manifest["tool"] = "ptb";
    manifest["version"] = kVersion;
    manifest["catalog"] = path;
    manifest["catalog_digest"] = ptb::fnv1a_digest(bytes);
    manifest["q_max"] = q_max == 0 ? ptb::json(nullptr) : ptb::json(q_max);
    manifest["seed"] = seeded ? ptb::json(seed) : ptb::json(nullptr);

    ptb::json checks = ptb::json::array();
    size_t passed = 0, failed = 0, skipped = 0;
    for (size_t idx = 0; idx < entries.size(); ++idx) {
        const ptb::CatalogEntry& e = entries[idx];
        ptb::json chk;
        chk["index"] = idx;
        chk["label"] = entry_label(e);
        chk["q"] = e.q;
        if (q_max != 0 && e.q > q_max) {
            chk["verdict"] = "skipped";
            chk["reason"] = "q exceeds --q-max";
            ++skipped;
            checks.push_back(chk);
            continue;
        }
        try {
            ptb::Matrix<ptb::Fp> a = ptb::catalog_matrix(e);
            if (a.rows < 3) throw ptb::InputError("catalog entry smaller than n = 2");
            int n = static_cast<int>(a.rows) - 1;
            auto eigen = ptb::fp_eigen_data(a);
            bool construction_ok = true;
            if (!e.blocks.empty())
                construction_ok = same_eigen_data(eigen, ptb::expected_eigen_data(e));
            chk["algebra_matches_construction"] = construction_ok;

            bool reducible_type = false;
            for (const auto& ed : eigen)
                if (ed.r >= n) reducible_type = true;

            bool pass = construction_ok;
            if (reducible_type) {
                ptb::SplitReport rep = ptb::verify_reducible_split(a);
                chk["kind"] = "reducible";
                chk["report"] = ptb::split_report_to_json(rep);
                pass = pass && rep.match;
                if (seeded) {
                    ptb::SplitReport rep2 =
                        ptb::verify_reducible_split(ptb::random_conjugate(a, seed + idx));
                    bool inv = ptb::split_report_to_json(rep2) == ptb::split_report_to_json(rep);
                    chk["conjugation_invariant"] = inv;
                    pass = pass && inv;
                }
            } else {
                ptb::CountReport rep = ptb::verify_sing_prediction(a);
                chk["kind"] = "irreducible";
                chk["report"] = ptb::count_report_to_json(rep);
                pass = pass && rep.match;
                if (seeded) {
                    ptb::CountReport rep2 =
                        ptb::verify_sing_prediction(ptb::random_conjugate(a, seed + idx));
                    bool inv = ptb::count_report_to_json(rep2) == ptb::count_report_to_json(rep);
                    chk["conjugation_invariant"] = inv;
                    pass = pass && inv;
                }
            }
            chk["verdict"] = pass ? "pass" : "fail";
            if (pass)
                ++passed;
            else
                ++failed;
        } catch (const ptb::NonSplitError& ex) {
            chk["verdict"] = "skipped";
            chk["reason"] = std::string("skipped: ") + ex.what();
            ++skipped;
        } catch (const ptb::ScalarMatrixError& ex) {
            chk["verdict"] = "skipped";
            chk["reason"] = std::string("skipped: ") + ex.what();
            ++skipped;
        }
        checks.push_back(chk);
    }

    manifest["entries"] = entries.size();
    manifest["passed"] = passed;
    manifest["failed"] = failed;
    manifest["skipped"] = skipped;
    manifest["checks"] = checks;
    bool all = failed == 0;
    manifest["all_passed"] = all;
    auto t1 = std::chrono::steady_clock::now();
    manifest["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    print(manifest);
    return all ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperplane sections of the projectivized tangent bundle of P^n"};
    app.require_subcommand(1);

    std::string matrix_path, catalog_path, expr;
    int n = 0, ci = 0, cj = 0;
    uint32_t q_max = 0;
    uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "classify the section attached to a matrix");
    classify->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    classify->add_option("--n", n, "projective dimension")->required();

    auto* chow = app.add_subcommand("chow", "evaluate an expression in the Chow ring");
    chow->add_option("--n", n, "projective dimension")->required();
    chow->add_option("--expr", expr, "expression in z, a, E0..En")->required();

    auto* verify = app.add_subcommand("verify", "run finite-field checks over a catalog");
    verify->add_option("--catalog", catalog_path, "catalog JSON file")->required();
    verify->add_option("--q-max", q_max, "skip entries with larger q");
    auto* seed_opt = verify->add_option("--seed", seed, "also re-check seeded conjugates");

    auto* chart = app.add_subcommand("chart", "affine chart equation of the section");
    chart->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    chart->add_option("--n", n, "projective dimension")->required();
    chart->add_option("--i", ci, "chart index with x_i = 1")->required();
    chart->add_option("--j", cj, "chart index with y_j = 1")->required();

    auto* dual = app.add_subcommand("dual", "dual-variety membership of the hyperplane");
    dual->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify)) return cmd_classify(matrix_path, n);
        if (app.got_subcommand(chow)) return cmd_chow(n, expr);
        if (app.got_subcommand(verify))
            return cmd_verify(catalog_path, q_max, seed_opt->count() > 0, seed);
        if (app.got_subcommand(chart)) return cmd_chart(matrix_path, n, ci, cj);
        if (app.got_subcommand(dual)) return cmd_dual(matrix_path);
    } catch (const ptb::ParseError& ex) {
        std::cerr << "error: " << ex.what() << " at position " << ex.pos << "\n";
        std::cerr << "  " << expr << "\n";
        std::cerr << "  " << std::string(ex.pos, ' ') << "^\n";
        return kExitInput;
    } catch (const ptb::ScalarMatrixError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitScalar;
    } catch (const ptb::InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return kExitInput;
}
