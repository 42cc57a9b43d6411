#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kp/weight_module.hpp"
#include "oracles.hpp"

using kp::AmbientSpace;
using kp::Permutation;
using kp::Rat;
using kp::SparsePoly;
using kp::SparseVec;
using kp::TensorShape;
using kp::WeightModule;

namespace {
SparsePoly x(int i) { return SparsePoly::variable(i); }
}  // namespace

TEST_CASE("raising operators on wedge bases") {
    // e_12 u_2 = u_1 in K^3
    AmbientSpace line(3, TensorShape{{{1, 3}}});
    SparseVec u2{{line.index_of({{2}}), Rat(1)}};
    CHECK(line.apply_e(1, 2, u2) == SparseVec{{line.index_of({{1}}), Rat(1)}});

    // e_12 (u_1 ^ u_2) = 0: the replacement collides with u_1
    AmbientSpace plane(3, TensorShape{{{2, 3}}});
    SparseVec u12{{plane.index_of({{1, 2}}), Rat(1)}};
    CHECK(plane.apply_e(1, 2, u12).empty());

    // e_13 (u_1 (x) (u_2 ^ u_3)) = -u_1 (x) (u_1 ^ u_2)
    AmbientSpace mixed(3, TensorShape{{{1, 3}, {2, 3}}});
    SparseVec v{{mixed.index_of({{1}, {2, 3}}), Rat(1)}};
    CHECK(mixed.apply_e(1, 3, v) == SparseVec{{mixed.index_of({{1}, {1, 2}}), Rat(-1)}});

    // weights count index occurrences
    CHECK(mixed.weight(mixed.index_of({{1}, {1, 2}})) == kp::Weight{2, 1, 0});
}

TEST_CASE("generated submodules") {
    AmbientSpace line(4, TensorShape{{{1, 4}}});
    for (int i = 1; i <= 4; ++i) {
        WeightModule m = kp::generate_submodule(line, {SparseVec{{line.index_of({{i}}), Rat(1)}}});
        CHECK(m.dim() == static_cast<std::size_t>(i));
        SparsePoly expect;
        for (int j = 1; j <= i; ++j) expect += x(j);
        CHECK(m.character() == expect);
    }

    // zero seeds give the zero module
    WeightModule zero = kp::generate_submodule(line, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.character().is_zero());

    // u_w for w = 3,1,2 is annihilated by every raising operator
    auto data = kp::kp_module_data(Permutation({3, 1, 2}), 3);
    CHECK(data.mod.dim() == 1);
    CHECK(data.mod.character() == x(1) * x(1));
}

TEST_CASE("cyclic modules match their Schubert characters") {
    for (int i = 1; i <= 2; ++i) {
        WeightModule m = kp::kp_module(Permutation::simple(i), 3);
        CHECK(m.dim() == static_cast<std::size_t>(i));
    }
    WeightModule top = kp::kp_module(Permutation::longest(3), 3);
    CHECK(top.dim() == 1);
    CHECK(top.character() == x(1) * x(1) * x(2));

    for (const auto& w : kp::enumerate_Sn(3)) {
        auto data = kp::kp_module_data(w, 3);
        CHECK(data.mod.character() == kp::schubert(w, 3));
        CHECK(data.mod.dim() == static_cast<std::size_t>(kp::schubert(w, 3).eval_ones()));
        AmbientSpace amb(3, data.mod.shape);
        CHECK(amb.weight(data.generator_index) == kp::inv_code(w, 3));
    }
    // some non-grassmannian members of S_infinity^(2)
    for (const auto& w : kp::enumerate_S_infty_n(2, 4))
        CHECK(kp::kp_module(w, 2).character() == kp::schubert(w, 2));
}

TEST_CASE("one-dimensional modules") {
    WeightModule k = kp::one_dim_module(3, {1, 0, 2});
    CHECK(k.dim() == 1);
    CHECK(k.character() == SparsePoly::monomial({1, 0, 2}));
    CHECK(kp::coinvariant_hom_dim(k, {1, 0, 2}) == 1);
    CHECK(kp::coinvariant_hom_dim(k, {0, 1, 2}) == 0);
}

TEST_CASE("tensor products") {
    WeightModule s1 = kp::kp_module(Permutation::simple(1), 2);
    WeightModule prod = kp::tensor(s1, s1);
    CHECK(prod.dim() == 1);
    CHECK(prod.character() == x(1) * x(1));

    WeightModule m = kp::kp_module(Permutation::simple(2), 3);
    WeightModule both = kp::tensor(kp::kp_module(Permutation::simple(1), 3), m);
    CHECK(both.dim() == 2);
    CHECK(both.character() == kp::schubert(Permutation::simple(1), 3) * kp::schubert(Permutation::simple(2), 3));

    // tensoring with K_0 preserves the character
    WeightModule k0 = kp::one_dim_module(3, {0, 0, 0});
    CHECK(kp::tensor(m, k0).character() == m.character());
    CHECK_THROWS_AS(kp::tensor(s1, m), std::invalid_argument);  // rank mismatch
}

TEST_CASE("quotients") {
    WeightModule m = kp::tensor(kp::kp_module(Permutation::simple(2), 3),
                                kp::kp_module(Permutation::simple(1), 3));
    // by the zero submodule
    kp::QuotientResult full = kp::quotient(m, {});
    CHECK(full.mod.dim() == m.dim());
    CHECK(full.mod.character() == m.character());
    // by everything
    std::vector<SparseVec> all;
    for (std::size_t i = 0; i < m.dim(); ++i) all.push_back(SparseVec{{i, Rat(1)}});
    kp::QuotientResult none = kp::quotient(m, all);
    CHECK(none.mod.dim() == 0);

    // character additivity on random submodules
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SparseVec gen;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            int c = coeff(rng);
            if (c != 0) gen.emplace(i, Rat(c));
        }
        // split a random vector into its weight components to keep the
        // submodule weight-homogeneous
        std::map<kp::Weight, SparseVec> parts;
        for (const auto& [i, c] : gen) parts[m.weights[i]].emplace(i, c);
        std::vector<SparseVec> gens;
        for (auto& [wt, v] : parts) gens.push_back(std::move(v));
        kp::QuotientResult q = kp::quotient(m, gens);
        kp::EchelonBasis sub = kp::submodule_rows(m, gens);
        SparsePoly sub_char;
        for (const auto& row : sub.rows()) sub_char += kp::x_to_weight(m.weights[row.begin()->first]);
        CHECK(sub_char + q.mod.character() == m.character());
    }
}

TEST_CASE("submodules restrict the action") {
    WeightModule m = kp::tensor(kp::kp_module(Permutation::simple(2), 3),
                                kp::kp_module(Permutation::simple(1), 3));
    // generated by a single basis vector of extremal weight
    std::size_t seed = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.weights[i] == kp::Weight{1, 1, 0}) seed = i;
    WeightModule sub = kp::submodule(m, {SparseVec{{seed, Rat(1)}}});
    CHECK(sub.dim() > 0);
    CHECK(sub.dim() <= m.dim());
    CHECK(kp::check_module_invariants(sub));
    // the whole module regenerates itself
    std::vector<SparseVec> all;
    for (std::size_t i = 0; i < m.dim(); ++i) all.push_back(SparseVec{{i, Rat(1)}});
    CHECK(kp::submodule(m, all).character() == m.character());
}

TEST_CASE("coinvariants compute Hom dimensions") {
    WeightModule s1 = kp::kp_module(Permutation::simple(1), 2);
    CHECK(kp::coinvariant_hom_dim(s1, {1, 0}) == 1);
    CHECK(kp::coinvariant_hom_dim(s1, {0, 1}) == 0);

    // coefficient of S_{3,1,2} in S_{s1} * S_{s1} equals the Hom dimension
    WeightModule triple = kp::tensor(kp::tensor(kp::kp_module(Permutation::simple(1), 3),
                                                kp::kp_module(Permutation::simple(1), 3)),
                                     kp::kp_module(Permutation::longest(3) * Permutation({3, 1, 2}), 3));
    CHECK(kp::coinvariant_hom_dim(triple, {2, 1, 0}) == 1);
}

TEST_CASE("structural invariants hold and violations are caught") {
    for (const auto& w : kp::enumerate_Sn(3)) {
        auto data = kp::kp_module_data(w, 3);
        CHECK(kp::check_module_invariants(data.mod));
        // e_pq^{m_pq(w)+1} annihilates the generator
        AmbientSpace amb(3, data.mod.shape);
        for (auto [p, q] : kp::raising_pairs(3)) {
            SparseVec v{{data.generator_index, Rat(1)}};
            for (int t = 0; t <= kp::m_pq(w, p, q); ++t) v = amb.apply_e(p, q, v);
            CHECK(v.empty());
        }
    }
    WeightModule t = kp::tensor(kp::kp_module(Permutation::simple(2), 3),
                                kp::kp_module(Permutation({2, 3, 1}), 3));
    CHECK(kp::check_module_invariants(t));

    // negative control: break an action matrix and watch the checks fail
    WeightModule broken = kp::kp_module(Permutation::simple(2), 3);
    broken.action.at({1, 2})[1].clear();
    broken.action.at({1, 2})[1].emplace(1, Rat(1));  // e_12 no longer shifts weight
    CHECK_FALSE(kp::check_weight_shift(broken));

    // zeroing e_13 on the span of u_1..u_3 contradicts [e_12, e_23] = e_13
    WeightModule broken2 = kp::kp_module(Permutation::simple(3), 4);
    CHECK(kp::check_commutators(broken2));
    broken2.action.at({1, 3}).assign(broken2.dim(), SparseVec{});
    CHECK_FALSE(kp::check_commutators(broken2));
}

TEST_CASE("ambient dimension guard") {
    TensorShape huge;
    for (int i = 0; i < 12; ++i) huge.cols.push_back({3, 8});
    CHECK_THROWS_AS(AmbientSpace(8, huge), kp::resource_limit_error);
}
