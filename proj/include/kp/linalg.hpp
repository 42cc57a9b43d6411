// linalg.hpp -- exact rational linear algebra on sparse vectors.
//
// EchelonBasis maintains a reduced row echelon basis of a growing subspace:
// rows have unit leading coefficients, pivot columns are cleaned above and
// below, rows are kept sorted by pivot.  That makes bases deterministic for
// a fixed insertion order, membership a single reduction, and coordinates a
// pivot lookup.  A small dense Gaussian solver handles the square systems
// used for basis expansions.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kp/integers.hpp"

namespace kp {

// Sparse vector indexed into an ambient coordinate space.
using SparseVec = std::map<std::size_t, Rat>;

inline bool is_zero(const SparseVec& v) { return v.empty(); }

// dst += c * src
inline void axpy(SparseVec& dst, const Rat& c, const SparseVec& src) {
    if (c == 0) return;
    for (const auto& [i, x] : src) {
        auto [it, inserted] = dst.emplace(i, c * x);
        if (!inserted) {
            it->second += c * x;
            if (it->second == 0) dst.erase(it);
        }
    }
}

inline SparseVec scaled(const SparseVec& v, const Rat& c) {
    SparseVec out;
    if (c == 0) return out;
    for (const auto& [i, x] : v) out.emplace(i, c * x);
    return out;
}

class EchelonBasis {
  public:
    const std::vector<SparseVec>& rows() const { return rows_; }
    std::size_t dim() const { return rows_.size(); }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) out.push_back(r.begin()->first);
        return out;
    }

    // Residue of v after subtracting pivot rows; zero iff v is in the span.
    SparseVec reduce(SparseVec v) const {
        for (const auto& row : rows_) {
            std::size_t p = row.begin()->first;
            auto it = v.find(p);
            if (it == v.end()) continue;
            axpy(v, -it->second, row);
        }
        return v;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    // Insert v; returns true if the dimension grew.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Rat lead = v.begin()->second;
        if (lead != 1) {
            for (auto& [i, x] : v) x /= lead;
        }
        std::size_t p = v.begin()->first;
        for (auto& row : rows_) {
            auto it = row.find(p);
            if (it != row.end()) axpy(row, -it->second, v);
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->begin()->first < p) ++pos;
        rows_.insert(pos, std::move(v));
        return true;
    }

    // Coefficients of v over the basis rows, or nullopt if v is outside the
    // span.  With a reduced basis the coefficient at a row is just v's value
    // at that row's pivot.
    std::optional<std::vector<Rat>> coordinates(const SparseVec& v) const {
        std::vector<Rat> coeffs(rows_.size(), Rat(0));
        SparseVec rest = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t p = rows_[r].begin()->first;
            auto it = rest.find(p);
            if (it == rest.end()) continue;
            coeffs[r] = it->second;
            axpy(rest, -coeffs[r], rows_[r]);
        }
        if (!rest.empty()) return std::nullopt;
        return coeffs;
    }

  private:
    std::vector<SparseVec> rows_;  // sorted by pivot, fully reduced
};

// Solve A x = b exactly, A given dense row-major (m rows, k columns), via
// Gaussian elimination with back substitution.  Returns nullopt if the
// system is inconsistent or the solution is not unique.
inline std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    std::size_t m = a.size();
    std::size_t k = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < m; ++col) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = rank; r < m; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < k; ++c)
                if (a[rank][c] != 0) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (b[r] != 0) return std::nullopt;  // inconsistent
    if (rank < k) return std::nullopt;       // underdetermined
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t r = rank; r-- > 0;) {
        std::size_t col = pivot_col_of_row[r];
        Rat acc = b[r];
        for (std::size_t c = col + 1; c < k; ++c)
            if (a[r][c] != 0) acc -= a[r][c] * x[c];
        x[col] = acc / a[r][col];
    }
    return x;
}

// Breadth-first closure of span(seeds) under a family of linear operators.
// `apply(op, v)` returns the image of v; operators are applied in the given
// order, so the resulting basis is deterministic.
template <class Op, class Apply>
EchelonBasis generate_closure(const std::vector<SparseVec>& seeds, const std::vector<Op>& ops, Apply&& apply) {
    EchelonBasis basis;
    std::vector<SparseVec> work;
    for (const auto& s : seeds)
        if (basis.insert(s)) work.push_back(s);
    while (!work.empty()) {
        std::vector<SparseVec> next;
        for (const auto& v : work)
            for (const auto& op : ops) {
                SparseVec img = apply(op, v);
                if (basis.insert(img)) next.push_back(std::move(img));
            }
        work = std::move(next);
    }
    return basis;
}

}  // namespace kp
