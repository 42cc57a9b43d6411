// weight_module.hpp -- explicit finite-dimensional weight modules over the
// upper-triangular Lie algebra b_n.
//
// The ambient spaces are tensor products of exterior powers: a TensorShape
// lists columns wedge^d K^cap, an AmbientSpace indexes the product basis and
// implements the raising operators e_pq as derivations (replace index q by p
// inside a wedge, with the sorting sign).  A WeightModule is a subspace
// given by a reduced echelon basis together with per-vector weights and the
// restricted action matrix of every e_pq.  Generation, tensor products,
// quotients and coinvariants all run over exact rationals.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kp/errors.hpp"
#include "kp/integers.hpp"
#include "kp/linalg.hpp"
#include "kp/permutation.hpp"
#include "kp/polynomial.hpp"
#include "kp/schubert.hpp"

namespace kp {

// Ceiling on ambient dimensions, overridable through KP_MAX_AMBIENT_DIM or
// set_max_ambient_dim.
namespace detail {
inline std::size_t& max_ambient_dim_ref() {
    static std::size_t value = [] {
        if (const char* env = std::getenv("KP_MAX_AMBIENT_DIM")) {
            long long v = std::atoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1'000'000);
    }();
    return value;
}
}  // namespace detail

inline std::size_t max_ambient_dim() { return detail::max_ambient_dim_ref(); }
inline void set_max_ambient_dim(std::size_t v) { detail::max_ambient_dim_ref() = v; }

struct ShapeColumn {
    int degree = 0;  // wedge power
    int cap = 0;     // indices drawn from {1..cap}
    friend bool operator==(const ShapeColumn&, const ShapeColumn&) = default;
};

struct TensorShape {
    std::vector<ShapeColumn> cols;
    friend bool operator==(const TensorShape&, const TensorShape&) = default;

    TensorShape concat(const TensorShape& o) const {
        TensorShape out = *this;
        out.cols.insert(out.cols.end(), o.cols.begin(), o.cols.end());
        return out;
    }
};

// Dimension of the index space of a shape, without the materialization
// ceiling; only guards against index overflow.  Use AmbientSpace when the
// basis will actually be enumerated.
inline std::size_t ambient_dim_of(const TensorShape& shape) {
    std::size_t dim = 1;
    for (const auto& col : shape.cols) {
        if (col.degree < 0 || col.cap < 0 || col.degree > col.cap)
            throw std::invalid_argument("ambient_dim_of: invalid column shape");
        std::size_t binom = 1;
        for (int t = 1; t <= col.degree; ++t)
            binom = binom * static_cast<std::size_t>(col.cap - col.degree + t) / static_cast<std::size_t>(t);
        if (binom > 0 && dim > (static_cast<std::size_t>(1) << 50) / binom)
            throw resource_limit_error("ambient_dim_of: index space too large");
        dim *= binom;
    }
    return dim;
}

// Indexed basis of a tensor product of exterior powers.  Column subsets are
// enumerated in lexicographic order; the composite index runs with the last
// column fastest, so concatenating shapes matches the Kronecker convention
// index = index_first * dim_second + index_second.
class AmbientSpace {
  public:
    AmbientSpace(int rank, TensorShape shape) : rank_(rank), shape_(std::move(shape)) {
        if (rank_ < 0) throw std::invalid_argument("AmbientSpace: negative rank");
        subsets_.resize(shape_.cols.size());
        rank_of_.resize(shape_.cols.size());
        dim_ = 1;
        for (std::size_t c = 0; c < shape_.cols.size(); ++c) {
            const auto& col = shape_.cols[c];
            if (col.degree < 0 || col.cap < 0 || col.degree > col.cap)
                throw std::invalid_argument("AmbientSpace: invalid column shape");
            subsets_[c] = all_subsets(col.cap, col.degree);
            for (std::size_t s = 0; s < subsets_[c].size(); ++s) rank_of_[c].emplace(subsets_[c][s], s);
            dim_ *= subsets_[c].size();
            if (dim_ > max_ambient_dim()) throw resource_limit_error("AmbientSpace: dimension exceeds ceiling");
        }
        strides_.assign(shape_.cols.size(), 1);
        for (std::size_t c = shape_.cols.size(); c-- > 1;)
            strides_[c - 1] = strides_[c] * subsets_[c].size();
    }

    int rank() const { return rank_; }
    const TensorShape& shape() const { return shape_; }
    std::size_t dim() const { return dim_; }

    std::vector<std::vector<int>> subsets_at(std::size_t idx) const {
        std::vector<std::vector<int>> out(shape_.cols.size());
        for (std::size_t c = 0; c < shape_.cols.size(); ++c) {
            out[c] = subsets_[c][idx / strides_[c] % subsets_[c].size()];
        }
        return out;
    }

    std::size_t index_of(const std::vector<std::vector<int>>& subsets) const {
        if (subsets.size() != shape_.cols.size()) throw std::invalid_argument("AmbientSpace: column count mismatch");
        std::size_t idx = 0;
        for (std::size_t c = 0; c < subsets.size(); ++c) {
            auto it = rank_of_[c].find(subsets[c]);
            if (it == rank_of_[c].end()) throw std::invalid_argument("AmbientSpace: unknown column subset");
            idx += it->second * strides_[c];
        }
        return idx;
    }

    // Multiset count of indices across all columns, as a length-rank vector.
    Weight weight(std::size_t idx) const {
        Weight w(static_cast<std::size_t>(rank_), 0);
        for (std::size_t c = 0; c < shape_.cols.size(); ++c)
            for (int v : subsets_[c][idx / strides_[c] % subsets_[c].size()]) {
                if (v > rank_) throw std::logic_error("AmbientSpace: index beyond rank");
                ++w[static_cast<std::size_t>(v) - 1];
            }
        return w;
    }

    // e_pq acting as a derivation over columns: inside each wedge replace
    // one occurrence of q by p; the sign counts entries strictly between p
    // and q; terms with p already present vanish.
    void apply_e_terms(int p, int q, std::size_t idx, std::vector<std::pair<std::size_t, int>>& out) const {
        for (std::size_t c = 0; c < shape_.cols.size(); ++c) {
            if (shape_.cols[c].cap < q) continue;
            const auto& sub = subsets_[c][idx / strides_[c] % subsets_[c].size()];
            auto qit = std::lower_bound(sub.begin(), sub.end(), q);
            if (qit == sub.end() || *qit != q) continue;
            if (std::binary_search(sub.begin(), sub.end(), p)) continue;
            std::vector<int> repl = sub;
            int between = 0;
            for (int v : sub)
                if (p < v && v < q) ++between;
            repl.erase(std::lower_bound(repl.begin(), repl.end(), q));
            repl.insert(std::lower_bound(repl.begin(), repl.end(), p), p);
            std::size_t base = idx - (idx / strides_[c] % subsets_[c].size()) * strides_[c];
            std::size_t new_idx = base + rank_of_[c].at(repl) * strides_[c];
            out.emplace_back(new_idx, between % 2 ? -1 : 1);
        }
    }

    SparseVec apply_e(int p, int q, const SparseVec& v) const {
        if (!(1 <= p && p < q && q <= rank_)) throw std::invalid_argument("apply_e: need 1 <= p < q <= rank");
        SparseVec out;
        std::vector<std::pair<std::size_t, int>> terms;
        for (const auto& [idx, c] : v) {
            terms.clear();
            apply_e_terms(p, q, idx, terms);
            for (auto [j, sign] : terms) {
                auto [it, inserted] = out.emplace(j, sign > 0 ? c : -c);
                if (!inserted) {
                    it->second += sign > 0 ? c : -c;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
        return out;
    }

  private:
    int rank_;
    TensorShape shape_;
    std::vector<std::vector<std::vector<int>>> subsets_;          // per column, lex sorted
    std::vector<std::map<std::vector<int>, std::size_t>> rank_of_;  // per column
    std::vector<std::size_t> strides_;
    std::size_t dim_ = 1;

    static std::vector<std::vector<int>> all_subsets(int cap, int degree) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        build_subsets(1, cap, degree, cur, out);
        return out;
    }
    static void build_subsets(int from, int cap, int left, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v <= cap - left + 1; ++v) {
            cur.push_back(v);
            build_subsets(v + 1, cap, left - 1, cur, out);
            cur.pop_back();
        }
    }
};

// Sparse action matrix stored by columns: column b holds the module
// coordinates of e_pq applied to basis vector b.
using ActionMatrix = std::vector<SparseVec>;

struct WeightModule {
    int rank = 0;
    bool embedded = false;                                // true when shape describes a real ambient
    TensorShape shape;                                    // ambient; meaningful only when embedded
    std::vector<SparseVec> basis;                         // echelon rows over ambient coordinates
    std::vector<Weight> weights;                          // one per basis vector
    std::map<std::pair<int, int>, ActionMatrix> action;   // every 1 <= p < q <= rank

    std::size_t dim() const { return basis.size(); }

    SparsePoly character() const {
        SparsePoly out;
        for (const auto& w : weights) out += x_to_weight(w);
        return out;
    }

    const ActionMatrix& act(int p, int q) const {
        auto it = action.find({p, q});
        if (it == action.end()) throw std::invalid_argument("WeightModule: no such operator");
        return it->second;
    }

    // Image of a module-coordinate vector under e_pq.
    SparseVec apply(int p, int q, const SparseVec& v) const {
        const ActionMatrix& mat = act(p, q);
        SparseVec out;
        for (const auto& [b, c] : v) axpy(out, c, mat[b]);
        return out;
    }
};

inline std::vector<std::pair<int, int>> raising_pairs(int rank) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p < rank; ++p)
        for (int q = p + 1; q <= rank; ++q) out.emplace_back(p, q);
    return out;
}

namespace detail {
// Shared tail of module construction: given the closed echelon basis inside
// an ambient space, read off weights and restrict every e_pq.
inline WeightModule module_from_basis(const AmbientSpace& amb, const EchelonBasis& eb) {
    WeightModule mod;
    mod.rank = amb.rank();
    mod.embedded = true;
    mod.shape = amb.shape();
    mod.basis = eb.rows();
    mod.weights.reserve(mod.basis.size());
    for (const auto& row : mod.basis) {
        Weight w = amb.weight(row.begin()->first);
        for (const auto& [idx, c] : row)
            if (amb.weight(idx) != w) throw std::logic_error("module_from_basis: inhomogeneous basis row");
        mod.weights.push_back(std::move(w));
    }
    for (auto [p, q] : raising_pairs(amb.rank())) {
        ActionMatrix mat(mod.basis.size());
        for (std::size_t b = 0; b < mod.basis.size(); ++b) {
            SparseVec img = amb.apply_e(p, q, mod.basis[b]);
            auto coords = eb.coordinates(img);
            if (!coords) throw std::logic_error("module_from_basis: action escapes the subspace");
            for (std::size_t r = 0; r < coords->size(); ++r)
                if ((*coords)[r] != 0) mat[b].emplace(r, (*coords)[r]);
        }
        mod.action.emplace(std::make_pair(p, q), std::move(mat));
    }
    return mod;
}
}  // namespace detail

// Closure of span(seeds) under all raising operators inside the ambient
// space, with basis, weights and restricted action matrices.
inline WeightModule generate_submodule(const AmbientSpace& amb, const std::vector<SparseVec>& seeds) {
    EchelonBasis eb = generate_closure(seeds, raising_pairs(amb.rank()),
                                       [&amb](const std::pair<int, int>& pq, const SparseVec& v) {
                                           return amb.apply_e(pq.first, pq.second, v);
                                       });
    return detail::module_from_basis(amb, eb);
}

// The whole ambient space as a module (identity basis).
inline WeightModule full_module(const AmbientSpace& amb) {
    EchelonBasis eb;
    for (std::size_t i = 0; i < amb.dim(); ++i) eb.insert(SparseVec{{i, Rat(1)}});
    return detail::module_from_basis(amb, eb);
}

// K_lambda: one-dimensional, weight lambda, all raising operators zero.
inline WeightModule one_dim_module(int rank, Weight lambda) {
    if (static_cast<int>(lambda.size()) != rank) throw std::invalid_argument("one_dim_module: weight length != rank");
    WeightModule mod;
    mod.rank = rank;
    mod.basis = {SparseVec{{0, Rat(1)}}};
    mod.weights = {std::move(lambda)};
    for (auto pq : raising_pairs(rank)) mod.action.emplace(pq, ActionMatrix(1));
    return mod;
}

// Shape of the ambient tensor of exterior powers for the module of w:
// one column wedge^{l_j} K^n per position j with l_j(w) > 0.
inline TensorShape kp_shape(const Permutation& w, int n) {
    TensorShape shape;
    ColumnCodes cc = codes(w);
    for (std::size_t j = 0; j < cc.counts.size(); ++j)
        if (cc.counts[j] > 0) {
            for (int i : cc.sets[j])
                if (i > n) throw std::invalid_argument("kp_shape: inversion index beyond rank");
            shape.cols.push_back({cc.counts[j], n});
        }
    return shape;
}

// Column subsets of the cyclic generator u_w inside kp_shape(w, n).
inline std::vector<std::vector<int>> kp_generator_subsets(const Permutation& w) {
    std::vector<std::vector<int>> out;
    ColumnCodes cc = codes(w);
    for (std::size_t j = 0; j < cc.counts.size(); ++j)
        if (cc.counts[j] > 0) out.push_back(cc.sets[j]);
    return out;
}

struct KPModuleData {
    WeightModule mod;
    std::size_t generator_index = 0;  // ambient index of u_w
};

// The module of w: the b_n-submodule generated by u_w.  Checks the
// defining facts on construction: u_w has weight inv(w) and the character
// is the Schubert polynomial of w.
inline KPModuleData kp_module_data(const Permutation& w, int n) {
    if (!in_S_infty_n(w, n))
        throw std::invalid_argument("kp_module_data: w not in S_infinity^(" + std::to_string(n) + ")");
    AmbientSpace amb(n, kp_shape(w, n));
    std::size_t gen = amb.index_of(kp_generator_subsets(w));
    KPModuleData out{generate_submodule(amb, {SparseVec{{gen, Rat(1)}}}), gen};
    if (amb.weight(gen) != inv_code(w, n))
        throw verification_error("kp_module_data: generator weight differs from inv(w) at w=" + w.str());
    if (!(out.mod.character() == schubert(w, n)))
        throw verification_error("kp_module_data: character differs from the Schubert polynomial at w=" + w.str());
    return out;
}

inline WeightModule kp_module(const Permutation& w, int n) { return kp_module_data(w, n).mod; }

// Kronecker tensor product.  When both factors carry ambient shapes the
// result is embedded in the concatenated shape and the product of echelon
// bases is again an echelon basis; otherwise the result is abstract with an
// identity basis.  Weights add, operators act by the Leibniz rule, and the
// character is checked to multiply.
inline WeightModule tensor(const WeightModule& a, const WeightModule& b) {
    if (a.rank != b.rank) throw std::invalid_argument("tensor: rank mismatch");
    std::size_t da = a.dim(), db = b.dim();
    if (da > 0 && db > max_ambient_dim() / da) throw resource_limit_error("tensor: dimension exceeds ceiling");
    WeightModule out;
    out.rank = a.rank;
    bool embedded = a.embedded && b.embedded;
    out.embedded = embedded;
    std::size_t amb_b_dim = 1;
    if (embedded) {
        out.shape = a.shape.concat(b.shape);
        amb_b_dim = ambient_dim_of(b.shape);
        ambient_dim_of(out.shape);  // index-overflow guard; the space is never enumerated here
    }
    out.basis.reserve(da * db);
    out.weights.reserve(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            if (embedded) {
                SparseVec row;
                for (const auto& [ia, ca] : a.basis[i])
                    for (const auto& [ib, cb] : b.basis[j]) row.emplace(ia * amb_b_dim + ib, ca * cb);
                out.basis.push_back(std::move(row));
            } else {
                out.basis.push_back(SparseVec{{i * db + j, Rat(1)}});
            }
            Weight w = a.weights[i];
            for (std::size_t k = 0; k < w.size(); ++k) w[k] += b.weights[j][static_cast<std::size_t>(k)];
            out.weights.push_back(std::move(w));
        }
    for (auto pq : raising_pairs(out.rank)) {
        const ActionMatrix& ma = a.act(pq.first, pq.second);
        const ActionMatrix& mb = b.act(pq.first, pq.second);
        ActionMatrix mat(da * db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) {
                SparseVec& col = mat[i * db + j];
                for (const auto& [r, c] : ma[i]) col.emplace(r * db + j, c);
                for (const auto& [r, c] : mb[j]) {
                    auto [it, inserted] = col.emplace(i * db + r, c);
                    if (!inserted) {
                        it->second += c;
                        if (it->second == 0) col.erase(it);
                    }
                }
            }
        out.action.emplace(pq, std::move(mat));
    }
    if (!(out.character() == a.character() * b.character()))
        throw verification_error("tensor: character is not multiplicative");
    return out;
}

// Closure of generators under the module's own action matrices, as echelon
// rows in module coordinates.
inline EchelonBasis submodule_rows(const WeightModule& parent, const std::vector<SparseVec>& generators) {
    return generate_closure(generators, raising_pairs(parent.rank),
                            [&parent](const std::pair<int, int>& pq, const SparseVec& v) {
                                return parent.apply(pq.first, pq.second, v);
                            });
}

// The submodule generated inside a module, as a module of its own; rows are
// kept in parent coordinates alongside the restricted actions.
inline WeightModule submodule(const WeightModule& parent, const std::vector<SparseVec>& generators) {
    EchelonBasis eb = submodule_rows(parent, generators);
    WeightModule mod;
    mod.rank = parent.rank;
    mod.basis = eb.rows();
    mod.weights.reserve(mod.basis.size());
    for (const auto& row : mod.basis) mod.weights.push_back(parent.weights[row.begin()->first]);
    for (auto pq : raising_pairs(parent.rank)) {
        ActionMatrix mat(mod.basis.size());
        for (std::size_t b = 0; b < mod.basis.size(); ++b) {
            auto coords = eb.coordinates(parent.apply(pq.first, pq.second, mod.basis[b]));
            if (!coords) throw std::logic_error("submodule: action escapes the closure");
            for (std::size_t r = 0; r < coords->size(); ++r)
                if ((*coords)[r] != 0) mat[b].emplace(r, (*coords)[r]);
        }
        mod.action.emplace(pq, std::move(mat));
    }
    return mod;
}

struct QuotientResult {
    WeightModule mod;                 // abstract module on the non-pivot coordinates
    std::vector<std::size_t> coords;  // parent coordinate carried by each quotient basis vector
    EchelonBasis sub;                 // echelonized submodule, for projecting

    // Projection of a parent-coordinate vector to quotient coordinates.
    SparseVec project(const SparseVec& v) const {
        SparseVec residue = sub.reduce(v);
        SparseVec out;
        for (const auto& [i, c] : residue) {
            auto it = std::lower_bound(coords.begin(), coords.end(), i);
            if (it == coords.end() || *it != i) throw std::logic_error("QuotientResult: residue off the complement");
            out.emplace(static_cast<std::size_t>(it - coords.begin()), c);
        }
        return out;
    }
};

// Quotient of a module by the submodule generated by the given vectors
// (module coordinates).  Quotient coordinates are the non-pivot parent
// coordinates of the submodule's echelon form.
inline QuotientResult quotient(const WeightModule& parent, const std::vector<SparseVec>& sub_generators) {
    QuotientResult qr;
    qr.sub = submodule_rows(parent, sub_generators);
    std::vector<std::size_t> pivots = qr.sub.pivots();
    for (std::size_t i = 0; i < parent.dim(); ++i)
        if (!std::binary_search(pivots.begin(), pivots.end(), i)) qr.coords.push_back(i);
    WeightModule& mod = qr.mod;
    mod.rank = parent.rank;
    mod.basis.reserve(qr.coords.size());
    mod.weights.reserve(qr.coords.size());
    for (std::size_t k = 0; k < qr.coords.size(); ++k) {
        mod.basis.push_back(SparseVec{{k, Rat(1)}});
        mod.weights.push_back(parent.weights[qr.coords[k]]);
    }
    for (auto pq : raising_pairs(parent.rank)) {
        ActionMatrix mat(qr.coords.size());
        for (std::size_t k = 0; k < qr.coords.size(); ++k)
            mat[k] = qr.project(parent.act(pq.first, pq.second)[qr.coords[k]]);
        mod.action.emplace(pq, std::move(mat));
    }
    // Character additivity is forced by the pivot/non-pivot split; check it.
    SparsePoly sub_char;
    for (const auto& row : qr.sub.rows()) sub_char += x_to_weight(parent.weights[row.begin()->first]);
    if (!(sub_char + mod.character() == parent.character()))
        throw verification_error("quotient: characters do not add up");
    return qr;
}

// dim Hom_b(M, K_lambda) = dim of the lambda-weight space of
// M / sum_{p<q} im(e_pq): a weight-lambda functional killing every raising
// image is exactly a homomorphism to K_lambda.
inline int coinvariant_hom_dim(const WeightModule& m, const Weight& lambda) {
    int dim_lambda = 0;
    for (const auto& w : m.weights)
        if (w == lambda) ++dim_lambda;
    if (dim_lambda == 0) return 0;
    EchelonBasis images;
    for (auto pq : raising_pairs(m.rank)) {
        const ActionMatrix& mat = m.act(pq.first, pq.second);
        for (std::size_t b = 0; b < m.dim(); ++b) {
            if (mat[b].empty()) continue;
            Weight shifted = m.weights[b];
            --shifted[static_cast<std::size_t>(pq.second) - 1];
            ++shifted[static_cast<std::size_t>(pq.first) - 1];
            if (shifted == lambda) images.insert(mat[b]);
        }
    }
    return dim_lambda - static_cast<int>(images.dim());
}

// ---- structural invariants -------------------------------------------------

// Every nonzero action entry must shift the weight by eps_p - eps_q.
inline bool check_weight_shift(const WeightModule& m) {
    for (const auto& [pq, mat] : m.action)
        for (std::size_t b = 0; b < mat.size(); ++b)
            for (const auto& [r, c] : mat[b]) {
                Weight expect = m.weights[b];
                --expect[static_cast<std::size_t>(pq.second) - 1];
                ++expect[static_cast<std::size_t>(pq.first) - 1];
                if (m.weights[r] != expect) return false;
            }
    return true;
}

namespace detail {
inline SparseVec mat_apply(const ActionMatrix& m, const SparseVec& v) {
    SparseVec out;
    for (const auto& [b, c] : v) axpy(out, c, m[b]);
    return out;
}
inline ActionMatrix mat_mul(const ActionMatrix& a, const ActionMatrix& b) {
    ActionMatrix out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) out[j] = mat_apply(a, b[j]);
    return out;
}
inline bool mat_is_zero(const ActionMatrix& m) {
    for (const auto& col : m)
        if (!col.empty()) return false;
    return true;
}
inline ActionMatrix mat_sub(ActionMatrix a, const ActionMatrix& b) {
    for (std::size_t j = 0; j < a.size(); ++j) axpy(a[j], Rat(-1), b[j]);
    return a;
}
}  // namespace detail

// [e_pq, e_rs] = delta_qr e_ps - delta_sp e_rq as exact matrix identities.
inline bool check_commutators(const WeightModule& m) {
    auto pairs = raising_pairs(m.rank);
    for (auto [p, q] : pairs)
        for (auto [r, s] : pairs) {
            ActionMatrix lhs = detail::mat_sub(detail::mat_mul(m.act(p, q), m.act(r, s)),
                                               detail::mat_mul(m.act(r, s), m.act(p, q)));
            if (q == r) lhs = detail::mat_sub(std::move(lhs), m.act(p, s));
            if (s == p) {
                ActionMatrix neg = m.act(r, q);
                for (auto& col : neg)
                    for (auto& [i, c] : col) c = -c;
                lhs = detail::mat_sub(std::move(lhs), neg);
            }
            if (!detail::mat_is_zero(lhs)) return false;
        }
    return true;
}

inline bool check_nilpotency(const WeightModule& m) {
    for (const auto& [pq, mat] : m.action) {
        ActionMatrix power = mat;
        std::size_t steps = 1;
        while (!detail::mat_is_zero(power)) {
            if (steps > m.dim()) return false;
            power = detail::mat_mul(mat, power);
            ++steps;
        }
    }
    return true;
}

inline bool check_module_invariants(const WeightModule& m) {
    return check_weight_shift(m) && check_commutators(m) && check_nilpotency(m);
}

}  // namespace kp
