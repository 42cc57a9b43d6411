// permutation.hpp -- permutations of the positive integers with finite
// support, stored in one-line notation.
//
// A Permutation keeps the minimal window of one-line images: entries beyond
// the stored window are implicit fixed points, so every element of
// S_infinity has a unique canonical form and equality is plain vector
// equality.  On top of the group structure this header provides the
// combinatorics the rest of the library consumes: inversion numbers, the
// two inversion codes, the sets S_n and S_infinity^(n), the lexicographic
// order on inverses, Monk transposition sets, the exponents m_pq, reduced
// words and bounded enumeration.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kp/errors.hpp"

namespace kp {

// Integer weight/exponent vector; the length is fixed by the ambient rank
// of whatever context uses it.
using Weight = std::vector<int>;

class Permutation {
  public:
    Permutation() = default;

    // One-line notation w(1),...,w(m).  The window must be a permutation of
    // {1,...,m}; trailing fixed points are trimmed.
    explicit Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
        validate_window(images_);
        canonicalize();
    }

    static Permutation identity() { return Permutation(); }

    // t_{ij}: exchanges i and j.
    static Permutation transposition(int i, int j) {
        if (i == j || i < 1 || j < 1) throw std::invalid_argument("transposition: need distinct positive i, j");
        if (i > j) std::swap(i, j);
        std::vector<int> im(static_cast<std::size_t>(j));
        std::iota(im.begin(), im.end(), 1);
        std::swap(im[static_cast<std::size_t>(i) - 1], im[static_cast<std::size_t>(j) - 1]);
        return Permutation(std::move(im));
    }

    // s_i = t_{i,i+1}.
    static Permutation simple(int i) { return transposition(i, i + 1); }

    // Longest element of S_n: i -> n+1-i.
    static Permutation longest(int n) {
        if (n < 0) throw std::invalid_argument("longest: negative rank");
        std::vector<int> im(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(im));
    }

    // Inverse of the Lehmer code: w(i) is the (code[i]+1)-th smallest value
    // not used before position i.  Any finitely supported code of
    // nonnegative integers yields a unique permutation.
    static Permutation from_lehmer(const std::vector<int>& code);

    int operator()(int i) const {
        if (i < 1) throw std::invalid_argument("Permutation: positions are 1-based");
        if (static_cast<std::size_t>(i) > images_.size()) return i;
        return images_[static_cast<std::size_t>(i) - 1];
    }

    // Size of the canonical window; w fixes every point beyond it.
    int support() const { return static_cast<int>(images_.size()); }

    bool is_identity() const { return images_.empty(); }

    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv));
    }

    // Composition (u*v)(i) = u(v(i)); v acts first.
    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        int m = std::max(u.support(), v.support());
        std::vector<int> im(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) im[static_cast<std::size_t>(i) - 1] = u(v(i));
        return Permutation(std::move(im));
    }

    // Number of inversions #{i<j : w(i) > w(j)}.
    long length() const {
        long count = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++count;
        return count;
    }

    // Lehmer code l_i = #{j>i : w(i)>w(j)}, one entry per window position.
    std::vector<int> lehmer_code() const {
        std::vector<int> code(images_.size(), 0);
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++code[i];
        return code;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

    // Comma-separated one-line notation; the identity prints as "1".
    std::string str() const {
        if (images_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) os << ',';
            os << images_[i];
        }
        return os.str();
    }

  private:
    std::vector<int> images_;

    static void validate_window(const std::vector<int>& im) {
        std::vector<bool> seen(im.size(), false);
        for (int v : im) {
            if (v < 1 || static_cast<std::size_t>(v) > im.size() || seen[static_cast<std::size_t>(v) - 1])
                throw std::invalid_argument("Permutation: window is not a bijection onto {1..m}");
            seen[static_cast<std::size_t>(v) - 1] = true;
        }
    }

    void canonicalize() {
        while (!images_.empty() && images_.back() == static_cast<int>(images_.size())) images_.pop_back();
    }
};

inline Permutation Permutation::from_lehmer(const std::vector<int>& code) {
    // Values never exceed (#positions) + max(code).
    int maxc = 0;
    for (int c : code) {
        if (c < 0) throw std::invalid_argument("from_lehmer: negative code entry");
        maxc = std::max(maxc, c);
    }
    int window = static_cast<int>(code.size()) + maxc;
    std::vector<int> pool(static_cast<std::size_t>(window));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> im;
    im.reserve(code.size());
    for (int c : code) {
        im.push_back(pool[static_cast<std::size_t>(c)]);
        pool.erase(pool.begin() + c);
    }
    // Remaining pool values are appended in increasing order, i.e. fixed in
    // relative order, so just extend with them to make a valid window.
    for (int v : pool) im.push_back(v);
    return Permutation(std::move(im));
}

inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> im;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_permutation: bad entry '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size()) throw std::invalid_argument("parse_permutation: bad entry '" + token + "'");
        im.push_back(v);
    }
    if (im.empty()) throw std::invalid_argument("parse_permutation: empty input");
    return Permutation(std::move(im));
}

// True iff w(n+1) < w(n+2) < ...; such w form S_infinity^(n).
inline bool in_S_infty_n(const Permutation& w, int n) {
    if (n < 0) throw std::invalid_argument("in_S_infty_n: negative rank");
    for (int j = n + 1; j < w.support(); ++j)
        if (w(j) > w(j + 1)) return false;
    return true;
}

inline bool in_S_n(const Permutation& w, int n) { return w.support() <= n; }

// inv(w) = (#{j>i : w(i)>w(j)})_{i=1..n}, defined for w in S_infinity^(n);
// all inversions of such w start at a position <= n.
inline Weight inv_code(const Permutation& w, int n) {
    if (!in_S_infty_n(w, n)) throw std::invalid_argument("inv_code: w not in S_infinity^(" + std::to_string(n) + ")");
    Weight code(static_cast<std::size_t>(n), 0);
    std::vector<int> full = w.lehmer_code();
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (full[i] == 0) continue;
        if (static_cast<int>(i) >= n)
            throw std::logic_error("inv_code: inversion starting beyond rank window");
        code[i] = full[i];
    }
    return code;
}

// Column inversion data: l_j = #{i<j : w(i)>w(j)} together with the actual
// index sets {i_1 < ... < i_{l_j}}, for j = 1..support(w).  Positions past
// the support all have l_j = 0.
struct ColumnCodes {
    std::vector<int> counts;              // counts[j-1] = l_j
    std::vector<std::vector<int>> sets;   // sets[j-1] = {i < j : w(i) > w(j)}
};

inline ColumnCodes codes(const Permutation& w) {
    int m = w.support();
    ColumnCodes cc;
    cc.counts.assign(static_cast<std::size_t>(m), 0);
    cc.sets.assign(static_cast<std::size_t>(m), {});
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i < j; ++i)
            if (w(i) > w(j)) {
                ++cc.counts[static_cast<std::size_t>(j) - 1];
                cc.sets[static_cast<std::size_t>(j) - 1].push_back(i);
            }
    return cc;
}

// x^{-1} > y^{-1} lexicographically: some i has x^{-1} and y^{-1} agreeing
// before i and x^{-1}(i) > y^{-1}(i).  A strict total order.
inline bool lex_gt_inverse(const Permutation& x, const Permutation& y) {
    Permutation xi = x.inverse(), yi = y.inverse();
    int window = std::max(xi.support(), yi.support());
    for (int i = 1; i <= window; ++i) {
        if (xi(i) != yi(i)) return xi(i) > yi(i);
    }
    return false;
}

inline bool lex_ge_inverse(const Permutation& x, const Permutation& y) {
    return x == y || lex_gt_inverse(x, y);
}

// m_pq(w) = #{r>q : w(p) < w(r) < w(q)}.  Only r within the support window
// can contribute: beyond it w(r) = r > q >= w(q) whenever q is past the
// support, and r itself exceeds the window values otherwise.
inline int m_pq(const Permutation& w, int p, int q) {
    if (!(1 <= p && p < q)) throw std::invalid_argument("m_pq: need 1 <= p < q");
    int count = 0;
    for (int r = q + 1; r <= w.support(); ++r)
        if (w(p) < w(r) && w(r) < w(q)) ++count;
    return count;
}

// All (p,q) with p <= nu < q and length(w t_pq) = length(w) + 1.  The search
// window q <= max(support(w), nu) + 1 is exhaustive: beyond the support only
// the first fixed point can absorb a single length increment.
inline std::vector<std::pair<int, int>> monk_set(const Permutation& w, int nu) {
    if (nu < 1) throw std::invalid_argument("monk_set: nu must be positive");
    int qmax = std::max(w.support(), nu) + 1;
    long base = w.length();
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= nu; ++p)
        for (int q = nu + 1; q <= qmax; ++q)
            if ((w * Permutation::transposition(p, q)).length() == base + 1) out.emplace_back(p, q);
    return out;
}

inline std::vector<Permutation> enumerate_Sn(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_Sn: negative rank");
    if (n > 8) throw resource_limit_error("enumerate_Sn: rank capped at 8");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

namespace detail {
inline void compositions_rec(int rest, std::size_t pos, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = rest;
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= rest; ++v) {
        cur[pos] = v;
        compositions_rec(rest - v, pos + 1, cur, out);
    }
}

// All length-n vectors of nonnegative integers summing to d, in lex order.
inline std::vector<std::vector<int>> compositions(int d, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    compositions_rec(d, 0, cur, out);
    return out;
}
}  // namespace detail

// All w in S_infinity^(n) with length(w) <= max_length.  These are exactly
// the permutations whose Lehmer code is supported on the first n positions,
// so we enumerate codes; any such w moves no point beyond n + max_length.
inline std::vector<Permutation> enumerate_S_infty_n(int n, int max_length) {
    if (n < 1) throw std::invalid_argument("enumerate_S_infty_n: rank must be positive");
    if (max_length < 0) throw std::invalid_argument("enumerate_S_infty_n: negative length bound");
    if (n > 8) throw resource_limit_error("enumerate_S_infty_n: rank capped at 8");
    std::vector<Permutation> out;
    for (int d = 0; d <= max_length; ++d) {
        for (const auto& code : detail::compositions(d, n)) {
            out.push_back(Permutation::from_lehmer(code));
            if (out.size() > 2'000'000) throw resource_limit_error("enumerate_S_infty_n: too many elements");
        }
    }
    return out;
}

// Reduced word (j_1,...,j_k) with w = s_{j_1} * s_{j_2} * ... * s_{j_k}.
// Descents are peeled off the right; `pick` selects among the available
// descent positions (0 = leftmost) so callers can randomize the word.
template <class Pick>
std::vector<int> reduced_word_by(const Permutation& w, Pick&& pick) {
    std::vector<int> word;
    Permutation u = w;
    while (!u.is_identity()) {
        std::vector<int> descents;
        for (int i = 1; i < u.support(); ++i)
            if (u(i) > u(i + 1)) descents.push_back(i);
        int i = descents[pick(descents.size())];
        word.push_back(i);
        u = u * Permutation::simple(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

inline std::vector<int> reduced_word(const Permutation& w) {
    return reduced_word_by(w, [](std::size_t) { return std::size_t{0}; });
}

inline std::vector<int> random_reduced_word(const Permutation& w, std::mt19937& rng) {
    return reduced_word_by(w, [&rng](std::size_t k) {
        return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    });
}

}  // namespace kp
