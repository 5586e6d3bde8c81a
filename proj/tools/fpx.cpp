// Command-line front end: single computations over F_p[x1..xn] plus the
// seeded randomized verification laws. Exit codes: 0 success / all trials
// pass, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpx/fpx.hpp"

namespace {

using nlohmann::json;

fpx::PolyMap load_map(const std::string& inline_text, const std::string& file_path,
                      const fpx::SessionConfig& cfg) {
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw std::invalid_argument("cannot open file: " + file_path);
        std::vector<fpx::Polynomial> polys = fpx::read_polynomial_lines(in, cfg.p, cfg.n);
        if (polys.size() != cfg.n)
            throw std::invalid_argument("map needs exactly " + std::to_string(cfg.n) +
                                        " components, got " + std::to_string(polys.size()));
        return fpx::PolyMap(std::move(polys));
    }
    if (inline_text.empty()) throw std::invalid_argument("missing map (argument or --file)");
    return fpx::parse_poly_map(inline_text, cfg.p, cfg.n);
}

std::vector<fpx::Polynomial> load_list(const std::string& inline_text,
                                       const std::string& file_path,
                                       const fpx::SessionConfig& cfg) {
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw std::invalid_argument("cannot open file: " + file_path);
        return fpx::read_polynomial_lines(in, cfg.p, cfg.n);
    }
    if (inline_text.empty())
        throw std::invalid_argument("missing polynomial list (argument or --file)");
    return fpx::parse_polynomial_list(inline_text, cfg.p, cfg.n);
}

json index_json(const std::vector<fpx::MultiIndex>& index) {
    json out = json::array();
    for (const fpx::MultiIndex& a : index) out.push_back(a.components());
    return out;
}

json matrix_json(const fpx::PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            entries.push_back(fpx::print_canonical(m.at(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

void print_matrix_text(const fpx::PolyMatrix& m, const std::vector<fpx::MultiIndex>* index) {
    if (index) {
        std::cout << "index:";
        for (const fpx::MultiIndex& a : *index) std::cout << ' ' << a;
        std::cout << '\n';
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ", ";
            std::cout << fpx::print_canonical(m.at(i, j));
        }
        std::cout << " ]\n";
    }
}

// One JSON document per invocation: {command, inputs, result, timing}.
void emit_json(const std::string& command, json inputs, json result, double wall_ms) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    doc["timing"] = wall_ms;
    std::cout << doc.dump() << '\n';
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fpx: exact computer algebra over F_p[x1..xn] - Jacobians, Frobenius "
                 "decompositions, the matrix U(F), generalized Wronskians, and randomized "
                 "verification of the identities tying them together"};
    app.require_subcommand(1);

    fpx::SessionConfig cfg;
    std::string output = "text";
    app.add_option("-p", cfg.p, "field characteristic, a prime in [2, 13]")->capture_default_str();
    app.add_option("-n", cfg.n, "number of variables")->capture_default_str();
    app.add_option("--seed", cfg.seed, "master seed for randomized laws")->capture_default_str();
    app.add_option("--trials", cfg.trials, "trials per verification run")->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "degree bound for random polynomials")
        ->capture_default_str();
    app.add_option("--max-terms", cfg.max_terms, "term bound for random polynomials")
        ->capture_default_str();
    app.add_option("--output", output, "output mode: text or json")->capture_default_str();

    std::string map_text, file_path, g_text, law;
    std::uint32_t order = 0;

    CLI::App* cmd_jacobian = app.add_subcommand("jacobian", "determinant of the Jacobian matrix");
    cmd_jacobian->add_option("map", map_text, "components separated by ';'");
    cmd_jacobian->add_option("--file", file_path, "file with one component per line");

    CLI::App* cmd_delta = app.add_subcommand("delta", "det U(F), an element of F_p[X^p]");
    cmd_delta->add_option("map", map_text);
    cmd_delta->add_option("--file", file_path);

    CLI::App* cmd_umatrix = app.add_subcommand("umatrix", "the matrix U(F) with F^a = sum_b U_ab X^b");
    cmd_umatrix->add_option("map", map_text);
    cmd_umatrix->add_option("--file", file_path);

    CLI::App* cmd_wronskian =
        app.add_subcommand("wronskian", "generalized Wronskian d^a F^b over [0, r-1]");
    cmd_wronskian->add_option("map", map_text);
    cmd_wronskian->add_option("--file", file_path);
    cmd_wronskian->add_option("-r,--order", order, "order r, 1 <= r <= p (default p)");

    CLI::App* cmd_represent = app.add_subcommand(
        "represent", "coefficients c_b in F_p[X^p] with delta(F)*g = sum_b c_b F^b");
    cmd_represent->add_option("g", g_text, "the polynomial to represent")->required();
    cmd_represent->add_option("map", map_text);
    cmd_represent->add_option("--file", file_path);

    CLI::App* cmd_basis = app.add_subcommand(
        "basis-check", "is {F^a : a in [0,p-1]} a basis of F_p[X] over F_p[X^p]?");
    cmd_basis->add_option("map", map_text);
    cmd_basis->add_option("--file", file_path);

    CLI::App* cmd_gens = app.add_subcommand(
        "ideal-gens", "Jacobians of all n-subsets of the given generators (>= n of them)");
    cmd_gens->add_option("polys", map_text, "generators separated by ';'");
    cmd_gens->add_option("--file", file_path);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a randomized verification law");
    std::string laws_help;
    for (const std::string& name : fpx::law_names())
        laws_help += laws_help.empty() ? name : ", " + name;
    cmd_verify->add_option("law", law, "one of: " + laws_help)->required();

    // global options may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const bool as_json = output == "json";
    if (!as_json && output != "text") {
        std::cerr << "error: --output must be 'text' or 'json'\n";
        return 2;
    }
    cfg.output = as_json ? fpx::SessionConfig::Output::json : fpx::SessionConfig::Output::text;

    try {
        cfg.validate();
        Timer timer;

        if (cmd_verify->parsed()) {
            const fpx::VerificationReport report = fpx::run_verification(law, cfg);
            if (as_json)
                std::cout << fpx::render_json(report) << '\n';
            else
                std::cout << fpx::render_text(report);
            return report.pass() ? 0 : 1;
        }

        json inputs{{"p", cfg.p}, {"n", cfg.n}};

        if (cmd_jacobian->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const std::string result = fpx::print_canonical(fpx::jacobian(F));
            inputs["map"] = fpx::print_canonical(F);
            if (as_json)
                emit_json("jacobian", inputs, result, timer.ms());
            else
                std::cout << result << '\n';
        } else if (cmd_delta->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const std::string result = fpx::print_canonical(fpx::delta(F));
            inputs["map"] = fpx::print_canonical(F);
            if (as_json)
                emit_json("delta", inputs, result, timer.ms());
            else
                std::cout << result << '\n';
        } else if (cmd_umatrix->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const fpx::UMatrix u = fpx::u_matrix(F);
            inputs["map"] = fpx::print_canonical(F);
            if (as_json) {
                json result = matrix_json(u.matrix);
                result["index"] = index_json(u.index);
                emit_json("umatrix", inputs, result, timer.ms());
            } else {
                print_matrix_text(u.matrix, &u.index);
            }
        } else if (cmd_wronskian->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const std::uint32_t r = order == 0 ? cfg.p : order;
            const fpx::PolyMatrix w = fpx::wronskian_matrix(F, r);
            const auto index = fpx::interval_enumerate(0, r - 1, cfg.n);
            inputs["map"] = fpx::print_canonical(F);
            inputs["order"] = r;
            if (as_json) {
                json result = matrix_json(w);
                result["index"] = index_json(index);
                emit_json("wronskian", inputs, result, timer.ms());
            } else {
                print_matrix_text(w, &index);
            }
        } else if (cmd_represent->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const fpx::Polynomial g = fpx::parse_polynomial(g_text, cfg);
            const fpx::DeltaRepresentation rep = fpx::represent_delta_multiple(g, F);
            const bool unit_delta =
                !rep.delta_value.is_zero() && rep.delta_value.is_constant();
            // Membership of g itself in F_p[X^p][F] is only decided when
            // delta is a unit (then {F^b} is a basis); otherwise the answer
            // is inconclusive by design.
            inputs["map"] = fpx::print_canonical(F);
            inputs["g"] = fpx::print_canonical(g);
            if (as_json) {
                json coeffs = json::array();
                for (std::size_t i = 0; i < rep.index.size(); ++i)
                    coeffs.push_back(json{{"beta", rep.index[i].components()},
                                          {"coefficient",
                                           fpx::print_canonical(rep.coefficients[i])}});
                json result{{"delta", fpx::print_canonical(rep.delta_value)},
                            {"coefficients", coeffs},
                            {"membership", unit_delta ? "certified" : "inconclusive"}};
                emit_json("represent", inputs, result, timer.ms());
            } else {
                std::cout << "delta(F) = " << fpx::print_canonical(rep.delta_value) << '\n';
                for (std::size_t i = 0; i < rep.index.size(); ++i)
                    std::cout << "c" << rep.index[i] << " = "
                              << fpx::print_canonical(rep.coefficients[i]) << '\n';
                std::cout << "identity: delta(F)*g = sum_beta c_beta * F^beta (verified)\n";
                std::cout << "membership of g in F_p[X^p][F]: "
                          << (unit_delta ? "certified (delta is a unit)" : "inconclusive")
                          << '\n';
            }
        } else if (cmd_basis->parsed()) {
            const fpx::PolyMap F = load_map(map_text, file_path, cfg);
            const bool basis = fpx::is_frobenius_basis(F);
            inputs["map"] = fpx::print_canonical(F);
            if (as_json)
                emit_json("basis-check", inputs, basis, timer.ms());
            else
                std::cout << (basis ? "true" : "false") << '\n';
        } else if (cmd_gens->parsed()) {
            const std::vector<fpx::Polynomial> gens = load_list(map_text, file_path, cfg);
            const std::vector<fpx::Polynomial> jacobians = fpx::jacobian_ideal_generators(gens);
            json gens_in = json::array();
            for (const fpx::Polynomial& g : gens) gens_in.push_back(fpx::print_canonical(g));
            inputs["generators"] = gens_in;
            if (as_json) {
                json result = json::array();
                for (const fpx::Polynomial& j : jacobians)
                    result.push_back(fpx::print_canonical(j));
                emit_json("ideal-gens", inputs, result, timer.ms());
            } else {
                for (const fpx::Polynomial& j : jacobians)
                    std::cout << fpx::print_canonical(j) << '\n';
            }
        }
        return 0;
    } catch (const fpx::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fpx::capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
