// Test-side oracles, independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"
#include "kp/schubert.hpp"

namespace oracles {

// Inversion count straight from the definition over an explicit window.
inline long brute_length(const kp::Permutation& w, int window) {
    long count = 0;
    for (int i = 1; i <= window; ++i)
        for (int j = i + 1; j <= window; ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

// Monk transposition set by scanning an explicit q-window.
inline std::vector<std::pair<int, int>> brute_monk_set(const kp::Permutation& w, int nu, int qmax) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= nu; ++p)
        for (int q = nu + 1; q <= qmax; ++q)
            if ((w * kp::Permutation::transposition(p, q)).length() == w.length() + 1) out.emplace_back(p, q);
    return out;
}

// Classical description: p <= nu < q, w(p) < w(q), and no p < r < q with
// w(p) < w(r) < w(q).
inline std::vector<std::pair<int, int>> classical_monk_set(const kp::Permutation& w, int nu, int qmax) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= nu; ++p)
        for (int q = nu + 1; q <= qmax; ++q) {
            if (w(p) >= w(q)) continue;
            bool blocked = false;
            for (int r = p + 1; r < q; ++r)
                if (w(p) < w(r) && w(r) < w(q)) blocked = true;
            if (!blocked) out.emplace_back(p, q);
        }
    return out;
}

// Term-by-term product accumulated through a flat list, independent of the
// map-merging in the library.
inline kp::SparsePoly naive_mul(const kp::SparsePoly& a, const kp::SparsePoly& b) {
    std::vector<std::pair<kp::Exponents, kp::Int>> terms;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            kp::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            terms.emplace_back(std::move(e), ca * cb);
        }
    kp::SparsePoly out;
    for (auto& [e, c] : terms) out += kp::SparsePoly::monomial(std::move(e), c);
    return out;
}

// Expansion by repeatedly stripping the monomial whose Lehmer permutation
// is inverse-lex minimal; terminates because that minimum strictly grows.
inline kp::SchubertExpansion expand_by_subtraction(kp::SparsePoly f, int n) {
    kp::SchubertExpansion out;
    int guard = 0;
    while (!f.is_zero()) {
        if (++guard > 100000) throw std::logic_error("expand_by_subtraction: no progress");
        bool first = true;
        kp::Permutation best;
        kp::Exponents best_e;
        for (const auto& [e, c] : f.terms()) {
            kp::Exponents padded = e;
            padded.resize(static_cast<std::size_t>(n), 0);
            kp::Permutation w = kp::Permutation::from_lehmer(std::vector<int>(padded.begin(), padded.end()));
            if (first || kp::lex_gt_inverse(best, w)) {
                best = w;
                best_e = e;
                first = false;
            }
        }
        kp::Int c = f.coeff(best_e);
        out[best] += c;
        f -= c * kp::schubert(best, n);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Schur polynomial in m variables as a ratio of alternants.
inline kp::SparsePoly schur_bialternant(const kp::Partition& lambda, int m) {
    if (static_cast<int>(lambda.parts.size()) > m) return {};
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) exps[i] = lambda.parts[i];
    for (int j = 0; j < m; ++j) exps[static_cast<std::size_t>(j)] += m - 1 - j;
    // det(x_i^{exps_j}) via Leibniz over S_m
    kp::SparsePoly num;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        kp::Exponents e(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] = exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        num += kp::SparsePoly::monomial(std::move(e), inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) num = kp::divide_exact_linear(num, i, j);
    return num;
}

// Random polynomial with small integer coefficients.
inline kp::SparsePoly random_poly(std::mt19937& rng, int nvars, int max_deg, int nterms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    kp::SparsePoly out;
    for (int t = 0; t < nterms; ++t) {
        kp::Exponents e(static_cast<std::size_t>(nvars), 0);
        int budget = deg(rng);
        for (int i = 0; i < nvars && budget > 0; ++i) {
            std::uniform_int_distribution<int> part(0, budget);
            e[static_cast<std::size_t>(i)] = part(rng);
            budget -= e[static_cast<std::size_t>(i)];
        }
        out += kp::SparsePoly::monomial(std::move(e), coeff(rng));
    }
    return out;
}

}  // namespace oracles
