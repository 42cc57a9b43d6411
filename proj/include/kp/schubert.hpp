// schubert.hpp -- Schubert polynomials and expansions in the Schubert basis.
//
// Schubert polynomials are computed by divided differences descending from
// the staircase monomial of a large enough symmetric group; the result does
// not depend on the reduced word used (tested, not assumed).  Expansion in
// the Schubert basis solves one exact linear system per homogeneous degree
// slice.  On top of these sit Monk products, the Cauchy identity, the
// dual-basis bilinear pairing, the multiplicities n_wu carried by products
// of elementary symmetric polynomials, structure constants, Schur-positivity
// checks and the lexicographic support condition.
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kp/errors.hpp"
#include "kp/integers.hpp"
#include "kp/linalg.hpp"
#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"

namespace kp {

// Finitely supported integer combination of Schubert basis elements.
using SchubertExpansion = std::map<Permutation, Int>;

namespace detail {
// Deterministic word: w0^(N) * s_{j_1} * ... * s_{j_r} walks down to w, one
// inversion at a time, where (j_1..j_r) is a reduced word of w0^(N) * w.
inline SparsePoly schubert_from_word(const Permutation& w, int window, const std::vector<int>& word) {
    Exponents staircase(static_cast<std::size_t>(std::max(window - 1, 0)));
    for (int i = 1; i < window; ++i) staircase[static_cast<std::size_t>(i) - 1] = window - i;
    SparsePoly poly = SparsePoly::monomial(std::move(staircase));
    for (int j : word) poly = poly.divided_difference(j);
    return poly;
}
}  // namespace detail

// Schubert polynomial of w computed along an arbitrary reduced word of
// w0^(N) * w; exposed so tests can vary the word.
inline SparsePoly schubert_via_word(const Permutation& w, int window, const std::vector<int>& word) {
    return detail::schubert_from_word(w, window, word);
}

// Schubert polynomial of w, for w in S_infinity^(n); lives in x_1..x_n.
inline SparsePoly schubert(const Permutation& w, int n) {
    if (n < 0) throw std::invalid_argument("schubert: negative rank");
    if (!in_S_infty_n(w, n))
        throw std::invalid_argument("schubert: w not in S_infinity^(" + std::to_string(n) + ")");
    static std::map<Permutation, SparsePoly> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(w);
        if (it != cache.end()) {
            if (it->second.max_var() > n) throw std::logic_error("schubert: variables exceed rank window");
            return it->second;
        }
    }
    int window = std::max(w.support(), 1);
    SparsePoly poly = detail::schubert_from_word(w, window, reduced_word(Permutation::longest(window) * w));
    if (poly.max_var() > n) throw std::logic_error("schubert: variables exceed rank window");
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(w, poly);
    return poly;
}

inline SparsePoly expansion_to_poly(const SchubertExpansion& exp, int n) {
    SparsePoly out;
    for (const auto& [w, c] : exp) out += c * schubert(w, n);
    return out;
}

inline std::string expansion_str(const SchubertExpansion& exp) {
    if (exp.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : exp) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*S[" << w.str() << "]";
    }
    return os.str();
}

// Unique expansion f = sum_w c_w S_w over w in S_infinity^(n).  Works one
// homogeneous degree at a time: degree-d monomials in x_1..x_n biject with
// the length-d permutations via the Lehmer code, so the system is square.
// Rows and columns are sorted by the lexicographic order on inverse
// permutations, which keeps the elimination cheap; the solver itself makes
// no structural assumptions.  The solution is checked to be integral and to
// reproduce f exactly.
inline SchubertExpansion expand_in_schubert(const SparsePoly& f, int n) {
    if (n < 1) throw std::invalid_argument("expand_in_schubert: rank must be positive");
    if (f.max_var() > n)
        throw std::invalid_argument("expand_in_schubert: polynomial uses more than " + std::to_string(n) + " variables");
    SchubertExpansion out;
    for (const auto& [degree, part] : f.homogeneous_parts()) {
        std::vector<Permutation> perms;
        for (const auto& code : detail::compositions(degree, n)) perms.push_back(Permutation::from_lehmer(code));
        if (perms.size() > 2000)
            throw resource_limit_error("expand_in_schubert: degree slice too large (" + std::to_string(perms.size()) + ")");
        std::sort(perms.begin(), perms.end(),
                  [](const Permutation& a, const Permutation& b) { return lex_gt_inverse(a, b); });
        std::size_t m = perms.size();
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
        std::vector<Rat> b(m, Rat(0));
        std::map<Exponents, std::size_t> row_of;
        std::vector<Exponents> monos(m);
        for (std::size_t i = 0; i < m; ++i) {
            Weight code = inv_code(perms[i], n);
            monos[i] = Exponents(code.begin(), code.end());
            trim_exponents(monos[i]);
            row_of.emplace(monos[i], i);
        }
        for (std::size_t j = 0; j < m; ++j) {
            SparsePoly sp = schubert(perms[j], n);
            for (const auto& [e, c] : sp.terms()) {
                auto it = row_of.find(e);
                if (it == row_of.end()) throw std::logic_error("expand_in_schubert: monomial outside slice");
                a[it->second][j] = Rat(c);
            }
        }
        for (std::size_t i = 0; i < m; ++i) b[i] = Rat(part.coeff(monos[i]));
        auto x = solve_dense(std::move(a), std::move(b));
        if (!x) throw std::runtime_error("expand_in_schubert: inconsistent system (input outside the Schubert span)");
        SparsePoly recon;
        for (std::size_t j = 0; j < m; ++j) {
            if ((*x)[j] == 0) continue;
            if (!is_integral((*x)[j])) throw std::runtime_error("expand_in_schubert: non-integral coefficient");
            Int c = numerator((*x)[j]);
            out[perms[j]] += c;
            recon += c * schubert(perms[j], n);
        }
        if (!(recon == part)) throw std::runtime_error("expand_in_schubert: verification failed");
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Monk's rule: S_w * S_{s_nu} = sum over (p,q) in the transposition set of
// S_{w t_pq}, all coefficients 1.
inline SchubertExpansion monk_product(const Permutation& w, int nu, int n) {
    if (!(1 <= nu && nu <= n - 1)) throw std::invalid_argument("monk_product: need 1 <= nu <= n-1");
    if (!in_S_infty_n(w, n)) throw std::invalid_argument("monk_product: w not in S_infinity^(n)");
    SchubertExpansion out;
    for (auto [p, q] : monk_set(w, nu)) {
        Permutation wt = w * Permutation::transposition(p, q);
        if (!in_S_infty_n(wt, n)) throw std::logic_error("monk_product: term escapes S_infinity^(n)");
        out[wt] += 1;
    }
    return out;
}

// sum_{w in S_n} S_w(x) S_{w w0}(y) = prod_{i+j<=n} (x_i + y_j), checked in
// 2n variables with y_j = x_{n+j}.
inline bool cauchy_check(int n) {
    if (n < 1) throw std::invalid_argument("cauchy_check: rank must be positive");
    if (n > 6) throw resource_limit_error("cauchy_check: rank capped at 6");
    Permutation w0 = Permutation::longest(n);
    SparsePoly lhs;
    for (const auto& w : enumerate_Sn(n))
        lhs += schubert(w, n) * schubert(w * w0, n).shift_vars(n);
    SparsePoly rhs = SparsePoly::constant(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            rhs *= SparsePoly::variable(i) + SparsePoly::variable(n + j);
    return lhs == rhs;
}

// True iff every exponent vector of f satisfies a_i <= n-i (the span of
// {S_w : w in S_n}).
inline bool in_staircase_window(const SparsePoly& f, int n) {
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > n - 1 - static_cast<int>(i)) return false;
    return true;
}

// Bilinear form with <S_u, S_{u' w0}> = delta_{u u'}, extended bilinearly;
// both arguments must lie in the staircase window of rank n.
inline Int pairing(const SparsePoly& f, const SparsePoly& g, int n) {
    if (!in_staircase_window(f, n) || !in_staircase_window(g, n))
        throw std::invalid_argument("pairing: arguments must lie in the staircase window");
    SchubertExpansion fe = expand_in_schubert(f, n);
    SchubertExpansion ge = expand_in_schubert(g, n);
    Permutation w0 = Permutation::longest(n);
    Int out = 0;
    for (const auto& [u, c] : fe) {
        if (!in_S_n(u, n)) throw std::logic_error("pairing: expansion escapes S_n");
        auto it = ge.find(u * w0);
        if (it != ge.end()) out += c * it->second;
    }
    return out;
}

// Multiplicities n_wu with prod_{2<=i<=n} e_{l_i(w)}(x_1..x_{i-1}) =
// sum_u n_wu S_u: n_wu is the coefficient of x^{inv(w w0)} in S_{u w0},
// supported on length(u) = length(w) and u^{-1} >=lex w^{-1}, with
// n_ww = 1.
inline SchubertExpansion t_w_multiplicities(const Permutation& w, int n) {
    if (!in_S_n(w, n)) throw std::invalid_argument("t_w_multiplicities: w must lie in S_n");
    Permutation w0 = Permutation::longest(n);
    Weight target = inv_code(w * w0, n);
    Exponents te(target.begin(), target.end());
    SchubertExpansion out;
    for (const auto& u : enumerate_Sn(n)) {
        if (u.length() != w.length()) continue;
        Int c = schubert(u * w0, n).coeff(te);
        if (c == 0) continue;
        out[u] = c;
        if (!lex_ge_inverse(u, w))
            throw verification_error("t_w_multiplicities: support violates the inverse-lex condition at u=" + u.str());
    }
    auto it = out.find(w);
    if (it == out.end() || it->second != 1)
        throw verification_error("t_w_multiplicities: n_ww != 1 at w=" + w.str());
    return out;
}

// Coefficients of S_u * S_v in the Schubert basis; they must come out
// nonnegative.
inline SchubertExpansion structure_constants(const Permutation& u, const Permutation& v, int n) {
    SchubertExpansion out = expand_in_schubert(schubert(u, n) * schubert(v, n), n);
    for (const auto& [w, c] : out)
        if (c < 0)
            throw verification_error("structure_constants: negative coefficient at " + w.str());
    return out;
}

// Writes S_w as a monomial multiset, evaluates the Schur function s_lambda
// on that alphabet and expands the result; all coefficients must be
// nonnegative.
inline SchubertExpansion schur_positivity_check(const Partition& lambda, const Permutation& w, int n) {
    SparsePoly sw = schubert(w, n);
    std::vector<Exponents> alphabet = sw.monomial_multiset();
    // Rough cost guard: the h_k series has about C(m + k - 1, k) terms.
    double est = 1.0;
    int depth = lambda.parts.empty() ? 0 : lambda.parts[0] + static_cast<int>(lambda.parts.size());
    for (int i = 1; i <= depth; ++i) est *= (static_cast<double>(alphabet.size()) + i) / i;
    if (est > 2e6) throw resource_limit_error("schur_positivity_check: alphabet too large for this shape");
    SchubertExpansion out = expand_in_schubert(schur_at_monomials(lambda, alphabet), n);
    for (const auto& [u, c] : out)
        if (c < 0)
            throw verification_error("schur_positivity_check: negative coefficient at " + u.str());
    return out;
}

// The support condition: a nonzero coefficient of x^{inv(y)} in S_x forces
// y^{-1} >=lex x^{-1}.  Returns whether the implication holds for the pair.
inline bool lex_support_check(const Permutation& x, const Permutation& y, int n) {
    Weight code = inv_code(y, n);
    Int c = schubert(x, n).coeff(Exponents(code.begin(), code.end()));
    if (c == 0) return true;
    return lex_ge_inverse(y, x);
}

}  // namespace kp
