// polynomial.hpp -- sparse multivariate polynomials over the integers.
//
// Terms are keyed by exponent vectors with trailing zeros trimmed, so the
// same polynomial compares equal regardless of the ambient variable count.
// Everything is exact; divided differences perform exact division by
// x_i - x_{i+1} and assert a zero remainder.
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kp/integers.hpp"
#include "kp/permutation.hpp"

namespace kp {

// Exponent vector, nonnegative entries, trailing zeros trimmed.
using Exponents = std::vector<int>;

inline void trim_exponents(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

class SparsePoly {
  public:
    SparsePoly() = default;

    static SparsePoly constant(Int c) {
        SparsePoly p;
        if (c != 0) p.terms_.emplace(Exponents{}, std::move(c));
        return p;
    }

    static SparsePoly monomial(Exponents e, Int c = 1) {
        for (int v : e)
            if (v < 0) throw std::invalid_argument("SparsePoly: negative exponent");
        SparsePoly p;
        trim_exponents(e);
        if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    // x_i, 1-based.
    static SparsePoly variable(int i) {
        if (i < 1) throw std::invalid_argument("SparsePoly: variables are 1-based");
        Exponents e(static_cast<std::size_t>(i), 0);
        e.back() = 1;
        return monomial(std::move(e));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    Int coeff(Exponents e) const {
        trim_exponents(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    SparsePoly operator-() const {
        SparsePoly p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend SparsePoly operator*(const Int& c, const SparsePoly& p) {
        SparsePoly out;
        if (c == 0) return out;
        out.terms_ = p.terms_;
        for (auto& [e, v] : out.terms_) v *= c;
        return out;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous() const {
        bool first = true;
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            if (first) {
                d = s;
                first = false;
            } else if (s != d) {
                return false;
            }
        }
        return true;
    }

    std::map<int, SparsePoly> homogeneous_parts() const {
        std::map<int, SparsePoly> out;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            out[s].add_term(e, c);
        }
        return out;
    }

    // Highest 1-based variable index appearing; 0 for constants.
    int max_var() const {
        int m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()));
        return m;
    }

    // Swap x_i and x_{i+1} in every term.
    SparsePoly apply_s(int i) const {
        if (i < 1) throw std::invalid_argument("apply_s: variables are 1-based");
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            if (f.size() < static_cast<std::size_t>(i) + 1) f.resize(static_cast<std::size_t>(i) + 1, 0);
            std::swap(f[static_cast<std::size_t>(i) - 1], f[static_cast<std::size_t>(i)]);
            out.add_term(std::move(f), c);
        }
        return out;
    }

    SparsePoly divided_difference(int i) const;

    // Rename x_j to x_{j+k} in every term.
    SparsePoly shift_vars(int k) const {
        if (k < 0) throw std::invalid_argument("shift_vars: negative shift");
        SparsePoly out;
        for (const auto& [e, c] : terms_) {
            Exponents f(static_cast<std::size_t>(k), 0);
            f.insert(f.end(), e.begin(), e.end());
            out.add_term(std::move(f), c);
        }
        return out;
    }

    // Value at x_1 = x_2 = ... = 1, i.e. the sum of coefficients.
    Int eval_ones() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // The monomials with multiplicity given by their coefficients; requires
    // all coefficients positive.
    std::vector<Exponents> monomial_multiset() const {
        std::vector<Exponents> out;
        for (const auto& [e, c] : terms_) {
            if (c < 0) throw std::logic_error("monomial_multiset: negative coefficient");
            if (c > 1'000'000) throw resource_limit_error("monomial_multiset: multiplicity too large");
            for (Int k = 0; k < c; ++k) out.push_back(e);
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = abs(c);
            bool printed = false;
            if (a != 1 || e.empty()) {
                os << a.str();
                printed = true;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (printed) os << "*";
                os << "x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
                printed = true;
            }
        }
        return os.str();
    }

  private:
    std::map<Exponents, Int> terms_;

    void add_term(Exponents e, Int c) {
        if (c == 0) return;
        trim_exponents(e);
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend SparsePoly divide_exact_linear(const SparsePoly& f, int a, int b);
};

// Exact quotient f / (x_a - x_b).  The divisor is monic as a univariate
// polynomial in x_a, so synthetic division stays in Z; a nonzero remainder
// is an internal arithmetic error.
inline SparsePoly divide_exact_linear(const SparsePoly& f, int a, int b) {
    if (a < 1 || b < 1 || a == b) throw std::invalid_argument("divide_exact_linear: need distinct 1-based variables");
    if (f.is_zero()) return {};
    // Split f as sum_k c_k(x') * x_a^k.
    std::map<int, SparsePoly> by_deg;
    for (const auto& [e, c] : f.terms()) {
        int k = static_cast<std::size_t>(a) <= e.size() ? e[static_cast<std::size_t>(a) - 1] : 0;
        Exponents rest = e;
        if (static_cast<std::size_t>(a) <= rest.size()) rest[static_cast<std::size_t>(a) - 1] = 0;
        by_deg[k] += SparsePoly::monomial(std::move(rest), c);
    }
    int d = by_deg.rbegin()->first;
    if (d == 0) throw std::logic_error("divide_exact_linear: nonzero remainder");
    SparsePoly xb = SparsePoly::variable(b);
    std::vector<SparsePoly> q(static_cast<std::size_t>(d));
    auto coeff_of = [&](int k) -> SparsePoly {
        auto it = by_deg.find(k);
        return it == by_deg.end() ? SparsePoly{} : it->second;
    };
    q[static_cast<std::size_t>(d) - 1] = coeff_of(d);
    for (int k = d - 1; k >= 1; --k)
        q[static_cast<std::size_t>(k) - 1] = coeff_of(k) + xb * q[static_cast<std::size_t>(k)];
    SparsePoly remainder = coeff_of(0) + xb * q[0];
    if (!remainder.is_zero()) throw std::logic_error("divide_exact_linear: nonzero remainder");
    SparsePoly out;
    SparsePoly xa_pow = SparsePoly::constant(1);
    SparsePoly xa = SparsePoly::variable(a);
    for (int k = 0; k < d; ++k) {
        out += q[static_cast<std::size_t>(k)] * xa_pow;
        xa_pow = xa_pow * xa;
    }
    return out;
}

inline SparsePoly SparsePoly::divided_difference(int i) const {
    SparsePoly g = *this - apply_s(i);
    if (g.is_zero()) return {};
    return divide_exact_linear(g, i, i + 1);
}

// e_k(x_1,...,x_m): sum of the squarefree degree-k monomials.  e_0 = 1 and
// e_k = 0 for k > m.
inline SparsePoly elementary_symmetric(int k, int m) {
    if (k < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
    if (m < 0) throw std::invalid_argument("elementary_symmetric: negative variable count");
    if (k == 0) return SparsePoly::constant(1);
    if (k > m) return {};
    SparsePoly out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        Exponents e(static_cast<std::size_t>(pick.back()), 0);
        for (int v : pick) e[static_cast<std::size_t>(v) - 1] = 1;
        out += SparsePoly::monomial(std::move(e));
        // next k-combination of {1..m}
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

struct Partition {
    std::vector<int> parts;  // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    int weight() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
};

namespace detail {
inline SparsePoly determinant(const std::vector<std::vector<SparsePoly>>& m) {
    std::size_t r = m.size();
    if (r == 0) return SparsePoly::constant(1);
    if (r == 1) return m[0][0];
    // Cofactor expansion along the first row; fine at the sizes we use.
    SparsePoly out;
    for (std::size_t j = 0; j < r; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<SparsePoly>> minor(r - 1);
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k)
                if (k != j) minor[i - 1].push_back(m[i][k]);
        SparsePoly term = m[0][j] * determinant(minor);
        if (j % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}
}  // namespace detail

// Schur function s_lambda evaluated on a finite multiset of monomials as its
// alphabet, via the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
// The h_k of the alphabet are read off the truncated generating series
// prod_a 1/(1 - a t).  If lambda has more parts than the alphabet has
// letters the determinant vanishes, which is the correct value.
inline SparsePoly schur_at_monomials(const Partition& lambda, const std::vector<Exponents>& alphabet) {
    int r = static_cast<int>(lambda.parts.size());
    if (r == 0) return SparsePoly::constant(1);
    if (r > 8) throw resource_limit_error("schur_at_monomials: too many partition rows");
    int kmax = lambda.parts[0] + r - 1;
    std::vector<SparsePoly> h(static_cast<std::size_t>(kmax) + 1);
    h[0] = SparsePoly::constant(1);
    for (const Exponents& letter : alphabet) {
        std::vector<SparsePoly> pow(static_cast<std::size_t>(kmax) + 1);
        pow[0] = SparsePoly::constant(1);
        SparsePoly a = SparsePoly::monomial(letter);
        for (int s = 1; s <= kmax; ++s) pow[static_cast<std::size_t>(s)] = pow[static_cast<std::size_t>(s) - 1] * a;
        std::vector<SparsePoly> next(static_cast<std::size_t>(kmax) + 1);
        for (int k = 0; k <= kmax; ++k)
            for (int s = 0; s <= k; ++s)
                next[static_cast<std::size_t>(k)] += h[static_cast<std::size_t>(k - s)] * pow[static_cast<std::size_t>(s)];
        h = std::move(next);
    }
    auto h_at = [&](int k) -> SparsePoly {
        if (k < 0) return {};
        if (k == 0) return SparsePoly::constant(1);
        return h[static_cast<std::size_t>(k)];
    };
    std::vector<std::vector<SparsePoly>> m(static_cast<std::size_t>(r), std::vector<SparsePoly>(static_cast<std::size_t>(r)));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            m[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = h_at(lambda.parts[static_cast<std::size_t>(i) - 1] - i + j);
    return detail::determinant(m);
}

// x^lambda for a nonnegative weight.
inline SparsePoly x_to_weight(const Weight& lambda) {
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("x_to_weight: negative entry");
    return SparsePoly::monomial(Exponents(lambda.begin(), lambda.end()));
}

}  // namespace kp
