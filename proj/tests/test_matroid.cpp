#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "skelbetti/matroid.hpp"
#include "support/random_matroid.hpp"

using namespace skelbetti;
using testsupport::random_column_matroid;

namespace {

Matroid uniform(int r, int n) {
    std::vector<Mask> bases;
    append_subsets_of_size(full_mask(n), r, bases);
    return Matroid::from_masks(n, bases);
}

std::map<int, int> circuit_histogram(const Matroid& m) {
    std::map<int, int> h;
    for (Mask c : m.circuits()) ++h[popcount(c)];
    return h;
}

}  // namespace

TEST_CASE("construction validates the basis family") {
    CHECK_THROWS_AS(Matroid(4, {}), NotAMatroid);
    CHECK_THROWS_AS(Matroid(4, {{1, 2}, {3}}), NotEquicardinal);
    CHECK_THROWS_AS(Matroid(4, {{1, 2}, {3, 4}}), NotAMatroid);
    CHECK_THROWS_AS(Matroid(3, {{1, 4}}), InvalidGroundSet);

    // The rank-0 matroid is legal: a single empty basis.
    Matroid zero(3, {{}});
    CHECK(zero.rank() == 0);
    CHECK(zero.bases() == std::vector<Mask>{0});
    CHECK(zero.dual() == uniform(3, 3));

    // Duplicated bases collapse.
    Matroid u12(2, {{1}, {2}, {1}});
    CHECK(u12.bases() == std::vector<Mask>{0b01, 0b10});
}

TEST_CASE("large ground sets switch to sampled validation") {
    // n = 13 exceeds the exhaustive cutoff; both paths accept U_{2,13}.
    CHECK_NOTHROW(uniform(2, 13));
    std::vector<Mask> bases;
    append_subsets_of_size(full_mask(13), 2, bases);
    CHECK_NOTHROW(Matroid::from_masks(13, bases, /*strict=*/true));

    std::vector<std::vector<int>> singletons;
    for (int v = 1; v <= 21; ++v) singletons.push_back({v});
    CHECK_NOTHROW(Matroid(21, singletons));
    CHECK_THROWS_AS(Matroid(21, singletons, /*strict=*/true), TooLarge);
}

TEST_CASE("rank, nullity and independence on U_{2,4}") {
    Matroid u24 = uniform(2, 4);
    CHECK(u24.rank() == 2);
    CHECK(u24.rank(0) == 0);
    CHECK(u24.rank(0b0001) == 1);
    CHECK(u24.rank(0b0111) == 2);
    CHECK(u24.rank(full_mask(4)) == 2);
    CHECK(u24.nullity(0b0111) == 1);
    CHECK(u24.nullity(full_mask(4)) == 2);
    CHECK(u24.independent(0b0011));
    CHECK_FALSE(u24.independent(0b0111));

    // Self-dual, and duality is an involution.
    CHECK(u24.dual() == u24);
    Matroid m(8, counterexample_bases_m());
    CHECK(m.dual().rank() == 3);
    CHECK(m.dual().dual() == m);

    // Copies share the cache and compare equal.
    Matroid copy = u24;
    CHECK(copy == u24);
    CHECK(copy.rank(0b1110) == u24.rank(0b1110));
}

TEST_CASE("rank is monotone, unit-increasing and submodular") {
    std::mt19937_64 rng(90210);
    for (int trial = 0; trial < 6; ++trial) {
        Matroid m = random_column_matroid(rng, 7, 3);
        for (int probe = 0; probe < 200; ++probe) {
            Mask a = static_cast<Mask>(rng()) & full_mask(7);
            Mask b = static_cast<Mask>(rng()) & full_mask(7);
            CHECK(m.rank(a | b) + m.rank(a & b) <= m.rank(a) + m.rank(b));
            CHECK(m.rank(a) <= m.rank(a | b));
            int v = 1 + static_cast<int>(rng() % 7);
            int grown = m.rank(a | element_bit(v));
            CHECK(grown >= m.rank(a));
            CHECK(grown <= m.rank(a) + 1);
        }
    }
}

TEST_CASE("the shipped counterexample matroids have the expected circuits") {
    Matroid m(8, counterexample_bases_m(), /*strict=*/true);
    Matroid n(8, counterexample_bases_n(), /*strict=*/true);
    CHECK(m.rank() == 5);
    CHECK(n.rank() == 5);
    CHECK(m.bases().size() == 20);
    CHECK(n.bases().size() == 20);

    CHECK(circuit_histogram(m) == std::map<int, int>{{2, 1}, {4, 5}});
    CHECK(circuit_histogram(n) == std::map<int, int>{{2, 1}, {4, 5}});

    std::vector<Mask> expected_m = {mask_of({7, 8}, 8),       mask_of({2, 3, 4, 5}, 8),
                                    mask_of({2, 3, 4, 6}, 8), mask_of({2, 3, 5, 6}, 8),
                                    mask_of({2, 4, 5, 6}, 8), mask_of({3, 4, 5, 6}, 8)};
    std::sort(expected_m.begin(), expected_m.end());
    CHECK(m.circuits() == expected_m);

    std::vector<Mask> expected_n = {mask_of({7, 8}, 8),       mask_of({2, 3, 4, 5}, 8),
                                    mask_of({2, 3, 6, 7}, 8), mask_of({2, 3, 6, 8}, 8),
                                    mask_of({4, 5, 6, 7}, 8), mask_of({4, 5, 6, 8}, 8)};
    std::sort(expected_n.begin(), expected_n.end());
    CHECK(n.circuits() == expected_n);
}

TEST_CASE("truncation drops the rank, elongation raises it") {
    Matroid m(8, counterexample_bases_m());

    CHECK(m.truncation(0) == m);
    CHECK(m.truncation(1).rank() == 4);
    Matroid zero = m.truncation(5);
    CHECK(zero.rank() == 0);
    CHECK(zero.bases() == std::vector<Mask>{0});
    CHECK_THROWS_AS(m.truncation(-1), TruncationRange);
    CHECK_THROWS_AS(m.truncation(6), TruncationRange);

    CHECK(uniform(3, 5).truncation(1) == uniform(2, 5));

    CHECK(m.elongation(0) == m);
    CHECK(m.elongation(1).rank() == 6);
    Matroid free = m.elongation(3);
    CHECK(free.bases() == std::vector<Mask>{full_mask(8)});
    CHECK_THROWS_AS(m.elongation(-1), ElongationRange);
    CHECK_THROWS_AS(m.elongation(4), ElongationRange);

    // Truncating the independence complex is taking a skeleton.
    CHECK(m.truncation(1).independence_complex() ==
          m.independence_complex().skeleton(3));

    // Truncation and elongation are dual operations.
    for (int i : {0, 1, 2})
        CHECK(m.truncation(i).dual() == m.dual().elongation(i));
    CHECK(uniform(3, 5).truncation(1).dual() == uniform(2, 5).dual());
}

TEST_CASE("independence complexes are pure and Cohen-Macaulay") {
    std::mt19937_64 rng(1029);
    std::vector<Matroid> corpus{Matroid(8, counterexample_bases_m()), uniform(2, 5)};
    for (int trial = 0; trial < 4; ++trial)
        corpus.push_back(random_column_matroid(rng, 6, 2));

    for (const Matroid& m : corpus) {
        SimplicialComplex ic = m.independence_complex();
        CHECK(ic.is_pure());
        CHECK(ic.dimension() == m.rank() - 1);
        for (int p : {2, 3}) CHECK(depth_and_cm(ic, p).cohen_macaulay);
    }
}

TEST_CASE("matroid tables do not depend on the field") {
    Matroid m(8, counterexample_bases_m());
    BettiTable t2 = matroid_betti(m, 2);
    CHECK(matroid_betti(m, 3).entries == t2.entries);
    CHECK(matroid_betti(m, 5).entries == t2.entries);
    CHECK(matroid_betti(m, 7).entries == t2.entries);

    BettiTable ideal = t2.to_convention(Convention::ideal);
    CHECK(ideal.entries == decltype(ideal.entries){
                               {{0, 2}, 1}, {{0, 4}, 5}, {{1, 5}, 4}, {{1, 6}, 5},
                               {{2, 7}, 4}});

    Matroid n(8, counterexample_bases_n());
    CHECK(matroid_betti(n, 2).entries == t2.entries);

    BettiTable u12 = matroid_betti(Matroid(2, {{1}, {2}}), 2);
    CHECK(u12.to_convention(Convention::ideal).entries ==
          decltype(u12.entries){{{0, 2}, 1}});
}

TEST_CASE("nullity support predicts the fine grading exactly") {
    std::mt19937_64 rng(31415);
    std::vector<Matroid> corpus{Matroid(8, counterexample_bases_m()),
                                Matroid(8, counterexample_bases_n()), uniform(2, 4)};
    for (int q : {2, 3, 5}) corpus.push_back(random_column_matroid(rng, 6, q));

    for (const Matroid& m : corpus) {
        auto predicted = nullity_support(m);
        auto observed = fine_support_ideal(hochster(m.independence_complex(), 2));
        CHECK(predicted == observed);

        // The first layer of the support is the circuit list.
        std::set<Mask> layer0;
        for (const auto& [i, sigma] : predicted)
            if (i == 0) layer0.insert(sigma);
        std::vector<Mask> circuit_list = m.circuits();
        std::set<Mask> circuits(circuit_list.begin(), circuit_list.end());
        CHECK(layer0 == circuits);
    }
}

TEST_CASE("closed-form truncation table matches the direct computation") {
    Matroid m(8, counterexample_bases_m());
    BettiTable direct = matroid_betti(m.truncation(1), 2);
    BettiTable closed = truncation_betti_closed_form(matroid_betti(m, 2), 8, 5);
    CHECK(closed == direct);

    CHECK(truncation_betti_closed_form(matroid_betti(uniform(2, 4), 2), 4, 2) ==
          matroid_betti(uniform(1, 4), 2));

    // Free matroid: one step down is the circuit {1,2,3}.
    Matroid free(3, {{1, 2, 3}});
    BettiTable stepped = truncation_betti_closed_form(matroid_betti(free, 2), 3, 3);
    CHECK(stepped.entries == decltype(stepped.entries){{{0, 0}, 1}, {{1, 3}, 1}});
    CHECK(stepped == matroid_betti(uniform(2, 3), 2));

    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 5; ++trial) {
        Matroid r = random_column_matroid(rng, 6, 3);
        CHECK(truncation_betti_closed_form(matroid_betti(r, 2), 6, r.rank()) ==
              matroid_betti(r.truncation(1), 2));
    }
}

TEST_CASE("elongation shifts the ideal support by one column") {
    Matroid m(8, counterexample_bases_m());
    for (int l : {0, 1, 2}) CHECK(elongation_shift_check(m, l));
    CHECK_THROWS_AS(elongation_shift_check(m, 3), ElongationRange);
    CHECK_THROWS_AS(elongation_shift_check(m, -1), ElongationRange);

    Matroid u24 = uniform(2, 4);
    for (int l : {0, 1}) CHECK(elongation_shift_check(u24, l));

    std::mt19937_64 rng(6174);
    for (int trial = 0; trial < 4; ++trial) {
        Matroid r = random_column_matroid(rng, 6, 2);
        for (int l = 0; l < 6 - r.rank(); ++l) CHECK(elongation_shift_check(r, l));
    }
}

TEST_CASE("the counterexample report tells the whole story") {
    CounterexampleReport rep = counterexample_report();
    CHECK(rep.ok());
    CHECK(rep.base_tables_equal);
    CHECK(rep.elongation_tables_differ);
    CHECK(rep.multisets_match);

    CHECK(rep.table_m.convention == Convention::ideal);
    CHECK(rep.table_m.entries == rep.table_n.entries);
    CHECK(rep.table_m.entries == decltype(rep.table_m.entries){
                                     {{0, 2}, 1}, {{0, 4}, 5}, {{1, 5}, 4}, {{1, 6}, 5},
                                     {{2, 7}, 4}});

    CHECK(rep.elongation_m.entries == decltype(rep.elongation_m.entries){
                                          {{0, 5}, 1}, {{0, 6}, 5}, {{1, 7}, 5}});
    CHECK(rep.elongation_n.entries == decltype(rep.elongation_n.entries){
                                          {{0, 5}, 2}, {{0, 6}, 3}, {{1, 7}, 4}});

    CHECK(rep.m_values == std::vector<std::int64_t>{1, 5, 5});
    CHECK(rep.n_values == std::vector<std::int64_t>{2, 3, 4});

    std::string text = rep.to_string();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}
