// kpcli: command-line front end for Schubert polynomial and KP module
// computations.  Every command emits JSON (integers as strings) on stdout or
// to --out; diagnostics go to stderr.  Exit codes: 0 success, 1 a
// verification check failed, 2 usage error, 3 resource guard.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kp/filtration.hpp"
#include "kp/json_io.hpp"
#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"
#include "kp/schubert.hpp"
#include "kp/verify_suite.hpp"
#include "kp/weight_module.hpp"

namespace {

struct CommonOpts {
    std::string out;
    bool json = true;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "write the result to this file instead of stdout");
    cmd->add_flag("--json,!--no-json", opts.json, "emit JSON (default) or a plain rendering");
}

void emit(const CommonOpts& opts, const kp::json& payload, const std::string& plain) {
    std::string text = opts.json ? payload.dump() : plain;
    if (opts.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(opts.out);
        if (!f) throw std::invalid_argument("cannot open output file " + opts.out);
        f << text << "\n";
    }
}

kp::json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return kp::json::parse(f);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " entry '" + token + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials, Kraskiewicz-Pragacz modules and their filtrations"};
    app.require_subcommand(1);

    std::string perm_str, w_str, v_str, u_str, lambda_str, poly_file;
    int n = 0, nu = 0, suite_rank = 4;
    unsigned seed = 987654321;
    std::size_t max_dim = 0;
    int exit_code = 0;

    app.add_option("--max-dim", max_dim,
                   "ceiling on ambient dimensions (also via KP_MAX_AMBIENT_DIM)");
    app.parse_complete_callback([&] {
        if (max_dim > 0) kp::set_max_ambient_dim(max_dim);
    });

    auto* c_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    CommonOpts o_schubert;
    c_schubert->add_option("--perm", perm_str, "one-line notation, e.g. 3,1,2")->required();
    c_schubert->add_option("--n", n, "rank (number of variables)")->required();
    add_common(c_schubert, o_schubert);
    c_schubert->callback([&] {
        kp::SparsePoly p = kp::schubert(kp::parse_permutation(perm_str), n);
        emit(o_schubert, kp::json{{"terms", kp::poly_to_json(p)}}, p.str());
    });

    auto* c_expand = app.add_subcommand("expand", "expand a polynomial in the Schubert basis");
    CommonOpts o_expand;
    c_expand->add_option("--poly-file", poly_file, "JSON polynomial ({\"terms\": [...]} or a bare term array)")->required();
    c_expand->add_option("--n", n, "rank")->required();
    add_common(c_expand, o_expand);
    c_expand->callback([&] {
        kp::SchubertExpansion e = kp::expand_in_schubert(kp::poly_from_json(load_json_file(poly_file)), n);
        emit(o_expand, kp::expansion_to_json(e), kp::expansion_str(e));
    });

    auto* c_monk = app.add_subcommand("monk", "Monk product S_w * S_{s_nu}");
    CommonOpts o_monk;
    c_monk->add_option("--perm", perm_str, "w in one-line notation")->required();
    c_monk->add_option("--nu", nu, "index of the simple reflection")->required();
    c_monk->add_option("--n", n, "rank (default: smallest valid)");
    add_common(c_monk, o_monk);
    c_monk->callback([&] {
        kp::Permutation w = kp::parse_permutation(perm_str);
        int rank = n > 0 ? n : std::max(w.support(), nu + 1);
        kp::SchubertExpansion e = kp::monk_product(w, nu, rank);
        emit(o_monk, kp::expansion_to_json(e), kp::expansion_str(e));
    });

    auto* c_kpchar = app.add_subcommand("kp-char", "character of the KP module of w (certified against the Schubert polynomial)");
    CommonOpts o_kpchar;
    c_kpchar->add_option("--perm", perm_str, "w in one-line notation")->required();
    c_kpchar->add_option("--n", n, "rank")->required();
    add_common(c_kpchar, o_kpchar);
    c_kpchar->callback([&] {
        kp::WeightModule m = kp::kp_module(kp::parse_permutation(perm_str), n);
        emit(o_kpchar, kp::json{{"dim", m.dim()}, {"terms", kp::poly_to_json(m.character())}}, m.character().str());
    });

    auto* c_filt = app.add_subcommand("monk-filtration", "filtration certificate for S_w (x) S_{s_nu}");
    CommonOpts o_filt;
    c_filt->add_option("--perm", perm_str, "w in one-line notation")->required();
    c_filt->add_option("--nu", nu, "index of the simple reflection")->required();
    c_filt->add_option("--n", n, "rank")->required();
    add_common(c_filt, o_filt);
    c_filt->callback([&] {
        kp::FiltrationCertificate cert = kp::monk_filtration(kp::parse_permutation(perm_str), nu, n);
        emit(o_filt, kp::certificate_to_json(cert), cert.passed() ? "certificate passed" : "certificate FAILED");
        if (!cert.passed()) {
            std::cerr << "monk-filtration: certificate checks failed\n";
            exit_code = 1;
        }
    });

    auto* c_tensor = app.add_subcommand("tensor-verify", "positivity and Hom-dimension report for S_w (x) S_v");
    CommonOpts o_tensor;
    c_tensor->add_option("--w", w_str, "w in one-line notation")->required();
    c_tensor->add_option("--v", v_str, "v in one-line notation")->required();
    c_tensor->add_option("--n", n, "rank")->required();
    add_common(c_tensor, o_tensor);
    c_tensor->callback([&] {
        kp::TensorVerifyReport report =
            kp::tensor_kp_verify(kp::parse_permutation(w_str), kp::parse_permutation(v_str), n);
        emit(o_tensor, kp::tensor_report_to_json(report), report.passed() ? "report passed" : "report FAILED");
        if (!report.passed()) {
            std::cerr << "tensor-verify: verification failed\n";
            exit_code = 1;
        }
    });

    auto* c_tw = app.add_subcommand("t-w", "resolution of S_w inside the exterior-power tensor T_w");
    CommonOpts o_tw;
    c_tw->add_option("--perm", perm_str, "w in one-line notation")->required();
    c_tw->add_option("--n", n, "rank")->required();
    add_common(c_tw, o_tw);
    c_tw->callback([&] {
        kp::TwResolution tw = kp::t_w_module(kp::parse_permutation(perm_str), n);
        kp::json payload{{"t_character", kp::poly_to_json(tw.t_w.character())},
                         {"t_dim", tw.t_w.dim()},
                         {"cokernel_expansion", kp::expansion_to_json(tw.n_expansion)},
                         {"checks", {{"character", tw.char_ok}, {"embedding", tw.embed_ok},
                                     {"support", tw.support_ok}, {"multiplicities", tw.mult_ok}}}};
        emit(o_tw, payload, tw.passed() ? "resolution passed" : "resolution FAILED");
        if (!tw.passed()) {
            std::cerr << "t-w: verification failed\n";
            exit_code = 1;
        }
    });

    auto* c_hom = app.add_subcommand("hom-dim", "structure constant of S_w in S_u S_v as a Hom dimension");
    CommonOpts o_hom;
    c_hom->add_option("--u", u_str, "u in one-line notation")->required();
    c_hom->add_option("--v", v_str, "v in one-line notation")->required();
    c_hom->add_option("--w", w_str, "w in one-line notation")->required();
    c_hom->add_option("--n", n, "rank")->required();
    add_common(c_hom, o_hom);
    c_hom->callback([&] {
        kp::Permutation u = kp::parse_permutation(u_str);
        kp::Permutation v = kp::parse_permutation(v_str);
        kp::Permutation w = kp::parse_permutation(w_str);
        if (!kp::in_S_n(w, n)) throw std::invalid_argument("hom-dim: w must lie in S_n");
        kp::SchubertExpansion exp = kp::structure_constants(u, v, n);
        kp::Int coeff = exp.count(w) ? exp.at(w) : kp::Int(0);
        kp::Permutation w0 = kp::Permutation::longest(n);
        kp::WeightModule triple =
            kp::tensor(kp::tensor(kp::kp_module(u, n), kp::kp_module(v, n)), kp::kp_module(w0 * w, n));
        kp::Weight rho(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - 1 - i;
        int hom = kp::coinvariant_hom_dim(triple, rho);
        bool match = kp::Int(hom) == coeff;
        emit(o_hom, kp::json{{"coefficient", coeff.str()}, {"hom_dim", hom}, {"match", match}},
             coeff.str() + " vs " + std::to_string(hom));
        if (!match) {
            std::cerr << "hom-dim: coefficient and Hom dimension disagree\n";
            exit_code = 1;
        }
    });

    auto* c_schur = app.add_subcommand("schur-positivity", "Schur function of the monomial alphabet of S_w, expanded");
    CommonOpts o_schur;
    c_schur->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
    c_schur->add_option("--perm", perm_str, "w in one-line notation")->required();
    c_schur->add_option("--n", n, "rank")->required();
    add_common(c_schur, o_schur);
    c_schur->callback([&] {
        kp::Partition lambda(parse_int_list(lambda_str, "partition"));
        kp::SchubertExpansion e = kp::schur_positivity_check(lambda, kp::parse_permutation(perm_str), n);
        emit(o_schur, kp::expansion_to_json(e), kp::expansion_str(e));
    });

    auto* c_suite = app.add_subcommand("verify-suite", "run the full verification sweep at a given rank");
    CommonOpts o_suite;
    c_suite->add_option("--n", suite_rank, "rank of the sweep (default 4)");
    c_suite->add_option("--seed", seed, "seed for the sampled instances");
    add_common(c_suite, o_suite);
    c_suite->callback([&] {
        kp::SuiteOptions opts;
        opts.rank = suite_rank;
        opts.seed = seed;
        std::vector<kp::CheckResult> results = kp::run_verify_suite(opts);
        bool all = true;
        bool any_resource = false;
        kp::json checks = kp::json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            all = all && r.pass;
            any_resource = any_resource || r.resource_limited;
            std::cerr << (r.pass ? "PASS" : (r.resource_limited ? "SKIP" : "FAIL")) << "  " << (i + 1) << ". " << r.name;
            std::cerr << "  [" << r.detail << "]  (" << r.seconds << " s)\n";
            checks.push_back({{"name", r.name}, {"pass", r.pass}, {"resource_limited", r.resource_limited},
                              {"detail", r.detail}, {"seconds", r.seconds}});
        }
        emit(o_suite, kp::json{{"rank", suite_rank}, {"all_passed", all}, {"checks", std::move(checks)}},
             all ? "all checks passed" : "some checks FAILED");
        if (!all) {
            bool genuine_failure = false;
            for (const auto& r : results) genuine_failure = genuine_failure || (!r.pass && !r.resource_limited);
            exit_code = genuine_failure ? 1 : 3;
        }
    });

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const kp::resource_limit_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const kp::verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const kp::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
