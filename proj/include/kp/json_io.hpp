// json_io.hpp -- JSON forms of polynomials, expansions, modules and
// filtration certificates.
//
// Integers and rationals are encoded as strings so no consumer ever
// truncates them.  nlohmann::json keeps object keys sorted, which together
// with the deterministic bases makes every emitted document byte-stable.
#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "kp/filtration.hpp"
#include "kp/integers.hpp"
#include "kp/linalg.hpp"
#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"
#include "kp/schubert.hpp"
#include "kp/weight_module.hpp"

namespace kp {

using json = nlohmann::json;

inline json poly_to_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.str()}});
    return terms;
}

inline SparsePoly poly_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("terms") ? j.at("terms") : j;
    if (!arr.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
    SparsePoly out;
    for (const auto& t : arr) {
        Exponents e = t.at("e").get<Exponents>();
        out += SparsePoly::monomial(std::move(e), int_from_string(t.at("c").get<std::string>()));
    }
    return out;
}

inline json perm_to_json(const Permutation& w) {
    std::vector<int> img = w.one_line();
    if (img.empty()) img = {1};
    return json(img);
}

inline Permutation perm_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

inline json expansion_to_json(const SchubertExpansion& exp) {
    json terms = json::array();
    for (const auto& [w, c] : exp) terms.push_back({{"perm", perm_to_json(w)}, {"coeff", c.str()}});
    return json{{"terms", std::move(terms)}};
}

inline SchubertExpansion expansion_from_json(const json& j) {
    SchubertExpansion out;
    for (const auto& t : j.at("terms"))
        out[perm_from_json(t.at("perm"))] += int_from_string(t.at("coeff").get<std::string>());
    return out;
}

inline json shape_to_json(const TensorShape& s) {
    json cols = json::array();
    for (const auto& c : s.cols) cols.push_back({{"degree", c.degree}, {"cap", c.cap}});
    return cols;
}

inline TensorShape shape_from_json(const json& j) {
    TensorShape s;
    for (const auto& c : j) s.cols.push_back({c.at("degree").get<int>(), c.at("cap").get<int>()});
    return s;
}

inline json sparse_vec_to_json(const SparseVec& v) {
    json out = json::array();
    for (const auto& [i, c] : v) out.push_back({static_cast<std::uint64_t>(i), rat_to_string(c)});
    return out;
}

inline SparseVec sparse_vec_from_json(const json& j) {
    SparseVec v;
    for (const auto& entry : j)
        v.emplace(entry.at(0).get<std::size_t>(), rat_from_string(entry.at(1).get<std::string>()));
    return v;
}

inline json module_to_json(const WeightModule& m) {
    json actions = json::object();
    for (const auto& [pq, mat] : m.action) {
        json cols = json::array();
        for (const auto& col : mat) cols.push_back(sparse_vec_to_json(col));
        actions["e_" + std::to_string(pq.first) + "_" + std::to_string(pq.second)] = std::move(cols);
    }
    return json{{"rank", m.rank},
                {"shape", shape_to_json(m.shape)},
                {"dim", m.dim()},
                {"weights", m.weights},
                {"action", std::move(actions)}};
}

inline json certificate_to_json(const FiltrationCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json basis = json::array();
        for (const auto& row : s.basis) basis.push_back(sparse_vec_to_json(row));
        steps.push_back({{"label", perm_to_json(s.label)},
                         {"dim_F", s.dim_f},
                         {"character", poly_to_json(s.subquotient_char)},
                         {"checks", {{"char", s.char_ok}, {"dim", s.dim_ok}, {"phi_image", s.phi_ok}}},
                         {"basis", std::move(basis)}});
    }
    json x = json::array();
    for (auto [p, q] : cert.x_order) x.push_back({p, q});
    return json{{"kind", cert.kind},
                {"n", cert.rank},
                {"w", perm_to_json(cert.w)},
                {"nus", cert.nus},
                {"ambient", {{"shape", shape_to_json(cert.ambient_shape)},
                             {"module_dim", cert.module_dim},
                             {"character", poly_to_json(cert.module_char)}}},
                {"X", std::move(x)},
                {"steps", std::move(steps)},
                {"checks", {{"ordering", cert.ordering_ok},
                            {"generation", cert.generation_ok},
                            {"telescoping", cert.telescoping_ok}}}};
}

inline FiltrationCertificate certificate_from_json(const json& j) {
    FiltrationCertificate cert;
    cert.kind = j.at("kind").get<std::string>();
    cert.rank = j.at("n").get<int>();
    cert.w = perm_from_json(j.at("w"));
    cert.nus = j.at("nus").get<std::vector<int>>();
    cert.ambient_shape = shape_from_json(j.at("ambient").at("shape"));
    cert.module_dim = j.at("ambient").at("module_dim").get<std::size_t>();
    cert.module_char = poly_from_json(j.at("ambient").at("character"));
    for (const auto& pq : j.at("X")) cert.x_order.emplace_back(pq.at(0).get<int>(), pq.at(1).get<int>());
    for (const auto& s : j.at("steps")) {
        FiltrationStep step;
        step.label = perm_from_json(s.at("label"));
        step.dim_f = s.at("dim_F").get<std::size_t>();
        step.subquotient_char = poly_from_json(s.at("character"));
        step.char_ok = s.at("checks").at("char").get<bool>();
        step.dim_ok = s.at("checks").at("dim").get<bool>();
        step.phi_ok = s.at("checks").at("phi_image").get<bool>();
        for (const auto& row : s.at("basis")) step.basis.push_back(sparse_vec_from_json(row));
        cert.steps.push_back(std::move(step));
    }
    cert.ordering_ok = j.at("checks").at("ordering").get<bool>();
    cert.generation_ok = j.at("checks").at("generation").get<bool>();
    cert.telescoping_ok = j.at("checks").at("telescoping").get<bool>();
    return cert;
}

inline json tensor_report_to_json(const TensorVerifyReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"u", perm_to_json(e.u)},
                           {"coeff", e.coeff.str()},
                           {"hom_dim", e.hom_dim},
                           {"ok", e.ok}});
    return json{{"expansion", expansion_to_json(r.expansion)},
                {"nonnegative", r.nonneg},
                {"hom_checks", std::move(entries)},
                {"passed", r.passed()}};
}

// Re-validate an emitted certificate from its file contents alone: the
// combinatorial data (transposition set, ordering, labels) is recomputed
// from w, characters are compared against freshly computed Schubert
// polynomials, dimensions must telescope, the recorded bases must be
// nested, and every recorded check flag must be true.  Modules and maps are
// never rebuilt.
inline std::vector<std::string> verify_certificate_json(const json& j) {
    std::vector<std::string> problems;
    FiltrationCertificate cert = certificate_from_json(j);
    int n = cert.rank;
    auto complain = [&problems](bool ok, const std::string& msg) {
        if (!ok) problems.push_back(msg);
    };

    complain(cert.ordering_ok && cert.generation_ok && cert.telescoping_ok, "recorded global checks not all true");
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        complain(s.char_ok && s.dim_ok && s.phi_ok, "recorded step checks not all true at step " + std::to_string(i));
    }

    if (cert.kind == "monk") {
        if (cert.nus.size() != 1) {
            problems.push_back("monk certificate must carry exactly one nu");
            return problems;
        }
        int nu = cert.nus[0];
        auto expected_x = ordered_monk_set(cert.w, nu);
        complain(cert.x_order == expected_x, "X differs from the ordered Monk transposition set");
        complain(ordering_condition_holds(cert.w, cert.x_order), "ordering condition fails on X");
        complain(cert.steps.size() == cert.x_order.size(), "step count differs from |X|");
        SparsePoly expected_char = schubert(cert.w, n) * schubert(Permutation::simple(nu), n);
        complain(cert.module_char == expected_char, "module character differs from the Monk product");
        for (std::size_t i = 0; i < cert.steps.size() && i < cert.x_order.size(); ++i) {
            Permutation wt = cert.w * Permutation::transposition(cert.x_order[i].first, cert.x_order[i].second);
            complain(cert.steps[i].label == wt, "label mismatch at step " + std::to_string(i));
        }
    } else if (cert.kind == "iterated") {
        SparsePoly expected_char = schubert(cert.w, n);
        for (int nu : cert.nus) expected_char *= schubert(Permutation::simple(nu), n);
        complain(cert.module_char == expected_char, "module character differs from the product character");
        SchubertExpansion labels;
        for (const auto& s : cert.steps) labels[s.label] += 1;
        complain(labels == expand_in_schubert(expected_char, n), "label multiset differs from the Schubert expansion");
    } else {
        problems.push_back("unknown certificate kind '" + cert.kind + "'");
        return problems;
    }

    // characters, dimensions, telescoping
    SparsePoly total;
    std::size_t expected_dim = 0;
    for (std::size_t i = cert.steps.size(); i-- > 0;) {
        const auto& s = cert.steps[i];
        SparsePoly label_char = schubert(s.label, n);
        complain(s.subquotient_char == label_char, "subquotient character differs from the Schubert polynomial at step " + std::to_string(i));
        expected_dim += static_cast<std::size_t>(label_char.eval_ones());
        complain(s.dim_f == expected_dim, "dim F_i fails to telescope at step " + std::to_string(i));
        total += s.subquotient_char;
    }
    complain(total == cert.module_char, "subquotient characters do not sum to the module character");
    complain(cert.module_dim == expected_dim, "module dimension differs from the telescoped sum");
    complain(!cert.steps.empty() ? cert.steps.front().dim_f == cert.module_dim : cert.module_dim == 0,
             "F_0 does not fill the module");

    // recorded bases: sizes match dims and the chain is nested
    for (std::size_t i = 0; i < cert.steps.size(); ++i)
        complain(cert.steps[i].basis.size() == cert.steps[i].dim_f,
                 "basis row count differs from dim F_i at step " + std::to_string(i));
    for (std::size_t i = 0; i + 1 < cert.steps.size(); ++i) {
        EchelonBasis outer;
        for (const auto& row : cert.steps[i].basis) outer.insert(row);
        bool nested = true;
        for (const auto& row : cert.steps[i + 1].basis)
            if (!outer.contains(row)) nested = false;
        complain(nested, "F_{i+1} is not contained in F_i at step " + std::to_string(i));
    }
    return problems;
}

}  // namespace kp
