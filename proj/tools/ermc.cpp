#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ermc/codegen.hpp"
#include "ermc/essdecode.hpp"
#include "ermc/essrank.hpp"
#include "ermc/gabidulin.hpp"
#include "ermc/io.hpp"
#include "ermc/orbits.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitDecode = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string field = "5";
    std::string ext;
    std::string alpha = "power";
    std::string out;
    std::string format = "json";
    uint64_t budget = 10'000'000;
    uint64_t seed = 0;
    unsigned jobs = 1;
};

void add_field_opts(CLI::App* cmd, CommonOpts& o, bool with_ext = true) {
    cmd->add_option("--field", o.field, "base field: p or p^m:c0,...,cm");
    if (with_ext)
        cmd->add_option("--ext", o.ext, "extension: n:c0,...,cn[:s] or bare n for an automatic modulus");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << std::endl;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ermc::DomainError("cannot open output file: " + o.out);
    f << text << std::endl;
}

void emit_json(const CommonOpts& o, const json& j) { emit(o, j.dump(2)); }

ermc::CodeParams make_params(const CommonOpts& o, uint32_t d, uint32_t rho) {
    const ermc::BaseField f = ermc::parse_field(o.field);
    if (o.ext.empty()) throw ermc::DomainError("--ext is required for this subcommand");
    const ermc::ExtField ext = ermc::parse_ext(f, o.ext);
    std::vector<ermc::LBasis> bases(d, ermc::parse_basis(ext, o.alpha));
    return ermc::CodeParams(ext, d, rho, std::move(bases));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ermc::DomainError("cannot open file: " + path);
    std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return s;
}

ermc::FPoly load_poly(const ermc::BaseField& f, uint32_t n, uint32_t d, const std::string& inline_poly,
                      const std::string& path) {
    if (!inline_poly.empty()) return ermc::parse_poly(f, n, d, inline_poly);
    if (path.empty()) throw ermc::DomainError("provide --poly or --poly-file");
    const std::string text = read_file(path);
    // accept either the JSON or the text format
    const auto nonspace = text.find_first_not_of(" \t\r\n");
    if (nonspace != std::string::npos && text[nonspace] == '{')
        return ermc::poly_from_json(f, json::parse(text));
    std::string line = text;
    if (const auto nl = line.find('\n'); nl != std::string::npos) line = line.substr(0, nl);
    return ermc::parse_poly(f, n, d, line);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"essential-rank-metric codes: construction, bounds, decoding, combinatorics"};
    app.require_subcommand(1);

    CommonOpts o;
    if (const char* env = std::getenv("ERMC_BUDGET")) o.budget = std::strtoull(env, nullptr, 10);

    uint32_t d = 3, rho = 3, n_opt = 0, r_opt = 0, k_opt = 0, ell = 0, error_rank = 1;
    uint64_t trials = 100;
    std::string poly_text, poly_file, message, method = "both", basis_file;

    auto* c_construct = app.add_subcommand("construct", "build C_rho^{n,d}(alpha) and emit its generator matrix");
    add_field_opts(c_construct, o);
    c_construct->add_option("--d", d)->required();
    c_construct->add_option("--rho", rho)->required();
    c_construct->add_option("--alpha", o.alpha, "basis: 'power' or 'c0,..;c0,..' element list");
    c_construct->add_option("--format", o.format, "json or csv");
    c_construct->add_option("--out", o.out);

    auto* c_rank = app.add_subcommand("rank", "essential rank of a polynomial");
    add_field_opts(c_rank, o, false);
    c_rank->add_option("--n", n_opt)->required();
    c_rank->add_option("--d", d)->required();
    c_rank->add_option("--poly", poly_text);
    c_rank->add_option("--poly-file", poly_file);
    c_rank->add_option("--out", o.out);

    auto* c_encode = app.add_subcommand("encode", "encode a message vector into a codeword");
    add_field_opts(c_encode, o);
    c_encode->add_option("--d", d)->required();
    c_encode->add_option("--rho", rho)->required();
    c_encode->add_option("--alpha", o.alpha);
    c_encode->add_option("--message", message, "comma-separated message coefficients")->required();
    c_encode->add_option("--out", o.out);

    auto* c_decode = app.add_subcommand("decode", "decode a received polynomial");
    add_field_opts(c_decode, o);
    c_decode->add_option("--d", d)->required();
    c_decode->add_option("--rho", rho)->required();
    c_decode->add_option("--alpha", o.alpha);
    c_decode->add_option("--received", poly_file, "file with the received polynomial")->required();
    c_decode->add_option("--out", o.out);

    auto* c_mindist = app.add_subcommand("mindist", "exhaustive minimum essential-rank distance");
    add_field_opts(c_mindist, o);
    c_mindist->add_option("--d", d);
    c_mindist->add_option("--rho", rho);
    c_mindist->add_option("--alpha", o.alpha);
    c_mindist->add_option("--basis-file", basis_file,
                          "scan the span of these polynomials (one per line) instead of C_rho^{n,d}");
    c_mindist->add_option("--n", n_opt, "variable count (with --basis-file)");
    c_mindist->add_option("--budget", o.budget);
    c_mindist->add_option("--jobs", o.jobs);
    c_mindist->add_option("--out", o.out);

    auto* c_bounds = app.add_subcommand("bounds", "parameter bounds for [(n,d),k,r] codes");
    c_bounds->add_option("--n", n_opt)->required();
    c_bounds->add_option("--d", d)->required();
    c_bounds->add_option("--r", r_opt)->required();
    c_bounds->add_option("--rho", rho, "designed distance for the construction lower bound (default r)");
    c_bounds->add_option("--out", o.out);

    auto* c_orbits = app.add_subcommand("orbits", "Z-orbit counts of restricted multisets");
    c_orbits->add_option("--n", n_opt)->required();
    c_orbits->add_option("--d", d)->required();
    c_orbits->add_option("--k", k_opt)->required();
    c_orbits->add_option("--method", method, "brute, closed, or both");
    c_orbits->add_option("--budget", o.budget);
    c_orbits->add_option("--out", o.out);

    auto* c_sym = app.add_subcommand("verify-symmetric",
                                     "check the d=2 symmetric-Gabidulin identification");
    add_field_opts(c_sym, o);
    c_sym->add_option("--ell", ell, "Gabidulin shape parameter l, 2l <= n-2");
    c_sym->add_option("--out", o.out);

    auto* c_sim = app.add_subcommand("simulate", "seeded decode round-trip trials");
    add_field_opts(c_sim, o);
    c_sim->add_option("--d", d)->required();
    c_sim->add_option("--rho", rho)->required();
    c_sim->add_option("--alpha", o.alpha);
    c_sim->add_option("--trials", trials);
    c_sim->add_option("--seed", o.seed);
    c_sim->add_option("--error-rank", error_rank);
    c_sim->add_option("--out", o.out);

    auto* c_conj = app.add_subcommand("conjecture", "codimension conjecture evidence report");
    add_field_opts(c_conj, o);
    c_conj->add_option("--d", d)->required();
    c_conj->add_option("--rho", rho)->required();
    c_conj->add_option("--alpha", o.alpha);
    c_conj->add_option("--budget", o.budget);
    c_conj->add_option("--out", o.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_construct->parsed()) {
            const auto params = make_params(o, d, rho);
            const ermc::EssCode code = ermc::construct_code(params);
            const ermc::Mat<ermc::Fq> gen = ermc::generator_matrix(code);
            if (o.format == "csv") {
                emit(o, ermc::matrix_to_csv(gen));
            } else {
                json j;
                j["n"] = code.n;
                j["d"] = code.d;
                j["rho"] = rho;
                j["k"] = code.k();
                j["codim"] = ermc::monomial_count(code.n, code.d) - code.k();
                j["s_lower"] = ermc::dim_lower_bound_s(code.n, code.d, rho);
                j["singleton_like"] = ermc::singleton_like_bound(code.n, code.d, rho);
                j["generator_matrix"] = ermc::matrix_to_json(gen);
                emit_json(o, j);
            }
        } else if (c_rank->parsed()) {
            const ermc::BaseField f = ermc::parse_field(o.field);
            const ermc::FPoly poly = load_poly(f, n_opt, d, poly_text, poly_file);
            emit_json(o, json{{"ess_rank", ermc::ess_rank(f, poly)}});
        } else if (c_encode->parsed()) {
            const auto params = make_params(o, d, rho);
            const ermc::EssCode code = ermc::construct_code(params);
            const auto msg = ermc::parse_message(code.field, message);
            const ermc::FPoly cw = ermc::encode_message(code, msg);
            json j;
            j["codeword"] = ermc::poly_to_string(cw);
            j["codeword_json"] = ermc::poly_to_json(cw);
            emit_json(o, j);
        } else if (c_decode->parsed()) {
            const auto params = make_params(o, d, rho);
            const ermc::FPoly received =
                load_poly(params.ext.base(), params.n(), d, poly_text, poly_file);
            const ermc::DecodeResult res = ermc::decode(received, params);
            json j;
            j["status"] = res.status == ermc::DecodeStatus::clean ? "clean" : "corrected";
            j["codeword"] = ermc::poly_to_string(res.codeword);
            j["error"] = ermc::poly_to_string(res.error);
            j["error_ess_rank"] = res.error_ess_rank;
            emit_json(o, j);
        } else if (c_mindist->parsed()) {
            ermc::EssCode code = [&] {
                if (!basis_file.empty()) {
                    const ermc::BaseField f = ermc::parse_field(o.field);
                    if (n_opt == 0) throw ermc::DomainError("--n is required with --basis-file");
                    std::vector<ermc::FPoly> polys;
                    std::istringstream in(read_file(basis_file));
                    std::string line;
                    while (std::getline(in, line))
                        if (!line.empty()) polys.push_back(ermc::parse_poly(f, n_opt, d, line));
                    return ermc::make_code(f, n_opt, d, polys);
                }
                return ermc::construct_code(make_params(o, d, rho));
            }();
            const auto t0 = std::chrono::steady_clock::now();
            const auto res = ermc::code_min_distance_bruteforce(code, o.budget, o.jobs);
            const auto t1 = std::chrono::steady_clock::now();
            json j;
            j["min_distance"] = res.min_distance;
            j["codewords_scanned"] = res.codewords_scanned;
            j["elapsed_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            emit_json(o, j);
        } else if (c_bounds->parsed()) {
            json j;
            j["singleton_like"] = ermc::singleton_like_bound(n_opt, d, r_opt);
            j["inherited"] = d >= 2 ? json(ermc::inherited_bound(n_opt, d, r_opt)) : json();
            j["schmidt"] = d == 2 ? json(ermc::schmidt_bound(n_opt, r_opt)) : json();
            const uint32_t rr = c_bounds->count("--rho") ? rho : r_opt;
            j["s_lower"] = ermc::dim_lower_bound_s(n_opt, d, rr);
            emit_json(o, j);
        } else if (c_orbits->parsed()) {
            json j;
            std::optional<uint64_t> brute;
            std::optional<long long> closed;
            if (method == "brute" || method == "both")
                brute = ermc::orbit_count_bruteforce(n_opt, d, k_opt, o.budget);
            if (method == "closed" || method == "both")
                closed = ermc::orbit_count_closed(n_opt, d, k_opt);
            if (method == "brute")
                j["count"] = *brute;
            else if (method == "closed")
                j["count"] = closed ? json(*closed) : json("unsupported");
            else {
                j["count"] = *brute;
                j["closed"] = closed ? json(*closed) : json("unsupported");
                j["agreement"] = closed ? json(static_cast<long long>(*brute) == *closed) : json();
            }
            j["method"] = method;
            emit_json(o, j);
        } else if (c_sym->parsed()) {
            const ermc::BaseField f = ermc::parse_field(o.field);
            if (o.ext.empty()) throw ermc::DomainError("--ext is required");
            const ermc::ExtField ext = ermc::parse_ext(f, o.ext);
            const auto sym = ermc::symmetric_gabidulin_d2(ext, ell);

            // catalecticant image of C_{n-2l}^{n,2}(sigma^{n-2-l}(beta), gamma)
            const uint32_t n = ext.n();
            const ermc::LBasis alpha = ermc::power_basis(ext);
            const ermc::LBasis beta = ermc::dual_basis(ext, alpha);
            const auto gamma = ermc::moore_kernel_vector(ext, alpha.elements(), n - 1);
            std::vector<ermc::LBasis> bases;
            bases.emplace_back(ext, ermc::frobenius_vec(ext, beta.elements(), n - 2 - ell));
            bases.emplace_back(ext, gamma);
            const ermc::CodeParams params(ext, 2, n - 2 * ell, std::move(bases));
            const ermc::EssCode code = ermc::construct_code(params);
            ermc::Mat<ermc::Fq> flat(0, std::size_t(n) * n);
            for (const auto& cw : code.basis) {
                const auto C = ermc::catalecticant(ext.base(), cw);
                std::vector<ermc::Fq> row;
                row.reserve(std::size_t(n) * n);
                for (std::size_t i = 0; i < C.rows(); ++i)
                    for (std::size_t jj = 0; jj < C.cols(); ++jj) row.push_back(C.at(i, jj));
                flat.append_row(row);
            }
            const auto image = ermc::row_space_basis(ext.base(), std::move(flat));
            json j;
            j["dim_symmetric_space"] = sym.rows();
            j["dim_catalecticant_image"] = image.rows();
            j["equal"] = sym == image;
            emit_json(o, j);
        } else if (c_sim->parsed()) {
            const auto params = make_params(o, d, rho);
            const auto stats = ermc::run_simulation(params, trials, o.seed, error_rank);
            json j;
            j["trials"] = stats.trials;
            j["successes"] = stats.successes;
            j["failures"] = stats.failures;
            j["miscorrections"] = stats.miscorrections;
            j["mean_decode_ms"] = stats.mean_decode_ms;
            j["seed"] = o.seed;
            emit_json(o, j);
        } else if (c_conj->parsed()) {
            const auto params = make_params(o, d, rho);
            const auto rep = ermc::codim_conjecture_report(params, o.budget);
            json j;
            j["actual_codim"] = rep.actual_codim;
            j["predicted_codim"] = rep.predicted_codim;
            j["match"] = rep.match;
            emit_json(o, j);
        }
    } catch (const ermc::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitBudget;
    } catch (const ermc::DecodingFailure& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitDecode;
    } catch (const ermc::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitDomain;
    }
    return kExitOk;
}
