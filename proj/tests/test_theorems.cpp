#include <catch2/catch_amalgamated.hpp>

#include "sudoku_chroma/extension.hpp"
#include "sudoku_chroma/forced_sets.hpp"
#include "sudoku_chroma/theorems.hpp"

using namespace sudoku_chroma;

namespace {

void check_valid_and_unique(const TheoremInstance& inst) {
    CHECK(static_cast<int>(inst.clue.domain_size()) == inst.formula_sn);
    CHECK_NOTHROW(validate_coloring(inst.graph, inst.clue));
    CHECK(is_uniquely_extendable(inst.graph, inst.clue));
}

}  // namespace

TEST_CASE("theorem ids round trip through strings", "[theorems]") {
    for (TheoremId id : {TheoremId::T21L, TheoremId::T21U, TheoremId::T22, TheoremId::T23,
                         TheoremId::T24, TheoremId::T25, TheoremId::T26}) {
        CHECK(theorem_from_string(to_string(id)) == id);
    }
    CHECK_THROWS_AS(theorem_from_string("T99"), Error);
}

TEST_CASE("cycle corona instances", "[theorems]") {
    TheoremInstance even = thm22_instance(4);
    CHECK(even.branch == "even");
    CHECK(even.graph.order() == 8);
    CHECK(even.clue.palette_size == 2);
    CHECK(even.formula_sn == 1);
    check_valid_and_unique(even);

    TheoremInstance odd = thm22_instance(5);
    CHECK(odd.branch == "odd");
    CHECK(odd.graph.order() == 10);
    CHECK(odd.graph.size() == 10);
    CHECK(odd.clue.palette_size == 3);
    CHECK(odd.clue.assignments ==
          std::map<int, int>{{0, 3}, {5, 1}, {6, 2}, {7, 3}, {8, 1}, {9, 2}});
    CHECK(odd.formula_sn == 6);
    check_valid_and_unique(odd);

    // n = 7 triggers the adjusted last pendant: (n-1)/2 is a multiple of 3.
    TheoremInstance bumped = thm22_instance(7);
    CHECK(bumped.branch == "odd, half multiple of 3");
    CHECK(bumped.clue.assignments ==
          std::map<int, int>{{0, 3}, {7, 1}, {8, 2}, {9, 3}, {10, 1}, {11, 2}, {12, 3}, {13, 2}});
    check_valid_and_unique(bumped);
}

TEST_CASE("wheel corona by a single pendant", "[theorems]") {
    TheoremInstance even = thm23_instance(4);
    CHECK(even.branch == "even");
    CHECK(even.graph.order() == 10);
    CHECK(even.clue.palette_size == 3);
    CHECK(even.clue.assignments == std::map<int, int>{{9, 1}, {5, 1}, {6, 2}, {7, 2}, {8, 2}});
    CHECK(even.formula_sn == 5);
    check_valid_and_unique(even);

    TheoremInstance odd = thm23_instance(5);
    CHECK(odd.branch == "odd");
    CHECK(odd.graph.order() == 12);
    CHECK(odd.clue.palette_size == 4);
    CHECK(odd.formula_sn == 8);
    CHECK(odd.clue.assignments.at(5) == 4);   // hub
    CHECK(odd.clue.assignments.at(0) == 3);   // first rim vertex
    CHECK(odd.clue.assignments.at(11) == 1);  // hub pendant
    check_valid_and_unique(odd);
}

TEST_CASE("wheel corona by an edge", "[theorems]") {
    TheoremInstance even = thm24_instance(4);
    CHECK(even.branch == "even");
    CHECK(even.graph.order() == 15);
    CHECK(even.graph.size() == 23);
    CHECK(even.clue.palette_size == 3);
    CHECK(even.clue.assignments ==
          std::map<int, int>{{4, 3}, {14, 1}, {6, 1}, {8, 3}, {10, 3}, {12, 3}});
    CHECK(even.formula_sn == 6);
    CHECK_NOTHROW(validate_coloring(even.graph, even.clue));
    // The clue does extend uniquely; whether six clues are necessary is a
    // different question answered by the exact search.
    CHECK(is_uniquely_extendable(even.graph, even.clue));

    TheoremInstance odd = thm24_instance(5);
    CHECK(odd.branch == "odd");
    CHECK(odd.graph.order() == 18);
    CHECK(odd.clue.palette_size == 4);
    CHECK(odd.clue.assignments ==
          std::map<int, int>{{16, 1},
                             {17, 4},
                             {6, 1},
                             {8, 2},
                             {10, 2},
                             {12, 2},
                             {14, 2},
                             {7, 4},
                             {9, 4},
                             {11, 4},
                             {13, 4},
                             {15, 1}});
    CHECK(odd.formula_sn == 12);
    check_valid_and_unique(odd);
    CHECK(forced_sets(odd.graph, 4).lower_bound == 12);
}

TEST_CASE("complete graph corona instances", "[theorems]") {
    TheoremInstance small_copies = thm25_instance(4, 2);
    CHECK(small_copies.branch == "m <= n-2");
    CHECK(small_copies.graph.order() == 12);
    CHECK(small_copies.clue.palette_size == 4);
    CHECK(small_copies.clue.assignments == std::map<int, int>{{3, 4},
                                                              {4, 2},
                                                              {5, 3},
                                                              {6, 1},
                                                              {7, 3},
                                                              {8, 1},
                                                              {9, 2},
                                                              {10, 1},
                                                              {11, 2}});
    CHECK(small_copies.formula_sn == 9);
    check_valid_and_unique(small_copies);

    TheoremInstance big_copies = thm25_instance(3, 3);
    CHECK(big_copies.branch == "m >= n-1");
    CHECK(big_copies.graph.order() == 12);
    CHECK(big_copies.clue.palette_size == 4);
    CHECK(big_copies.clue.assignments == std::map<int, int>{
                                             {3, 2}, {4, 3}, {5, 4}, {6, 3}, {7, 4}, {9, 2}, {10, 4}});
    CHECK(big_copies.formula_sn == 7);
    check_valid_and_unique(big_copies);
}

TEST_CASE("cycle corona by a path", "[theorems]") {
    TheoremInstance even = thm26_instance(4, 2);
    CHECK(even.branch == "even");
    CHECK(even.graph.order() == 12);
    CHECK(even.clue.palette_size == 3);
    CHECK(even.formula_sn == 5);
    check_valid_and_unique(even);

    TheoremInstance odd = thm26_instance(5, 3);
    CHECK(odd.branch == "odd");
    CHECK(odd.graph.order() == 20);
    CHECK(odd.clue.assignments ==
          std::map<int, int>{{6, 2}, {17, 2}, {5, 1}, {8, 1}, {11, 1}, {14, 1}});
    CHECK(odd.formula_sn == 6);
    check_valid_and_unique(odd);
}

TEST_CASE("line graph corona lower bound family", "[theorems]") {
    TheoremInstance inst = thm21_lower_instance(3);
    CHECK(inst.branch == "n = 0,2 mod 3");
    CHECK(inst.graph.order() == 12);
    CHECK(inst.clue.palette_size == 3);
    CHECK(inst.clue.assignments ==
          std::map<int, int>{{6, 1}, {7, 3}, {8, 1}, {9, 2}, {10, 2}, {11, 3}});
    CHECK(inst.formula_sn == 6);
    check_valid_and_unique(inst);
    CHECK(forced_sets(inst.graph, 3).lower_bound == 6);

    TheoremInstance bumped = thm21_lower_instance(4);
    CHECK(bumped.branch == "n = 1 mod 3");
    CHECK(bumped.graph.order() == 16);
    CHECK(bumped.formula_sn == 8);
    check_valid_and_unique(bumped);
    CHECK(forced_sets(bumped.graph, 3).lower_bound == 8);
}

TEST_CASE("pendant augmentation of a complete graph", "[theorems]") {
    PendantAugmented aug = pendant_augmented(generate({Family::Complete, 4}));
    CHECK(aug.graph.order() == 16);
    CHECK(aug.graph.size() == 18);
    CHECK(aug.clue.palette_size == 4);
    CHECK(aug.clue.domain_size() == 12);
    CHECK(aug.formula_sn == 12);
    CHECK_NOTHROW(validate_coloring(aug.graph, aug.clue));
    CHECK(is_uniquely_extendable(aug.graph, aug.clue));
    CHECK(forced_sets(aug.graph, 4).lower_bound == 12);
    CHECK(aug.graph.label(4) == "v1p1");

    CHECK_THROWS_AS(pendant_augmented(generate({Family::Cycle, 5})), HypothesisError);
}

TEST_CASE("corona upper bound family meets its formula", "[theorems]") {
    TheoremInstance inst = thm21_upper_instance(generate({Family::Complete, 4}));
    CHECK(inst.branch == "chi=4");
    CHECK(inst.graph.order() == 32);
    CHECK(inst.clue.palette_size == 4);
    CHECK(inst.clue.domain_size() == 28);
    CHECK(inst.formula_sn == 28);
    CHECK_NOTHROW(validate_coloring(inst.graph, inst.clue));
    CHECK(is_uniquely_extendable(inst.graph, inst.clue));
    CHECK(forced_sets(inst.graph, 4).lower_bound == 28);
}

TEST_CASE("instance constructors reject undersized parameters", "[theorems]") {
    CHECK_THROWS_AS(thm22_instance(2), InvalidSpecError);
    CHECK_THROWS_AS(thm23_instance(2), InvalidSpecError);
    CHECK_THROWS_AS(thm24_instance(3), InvalidSpecError);
    CHECK_THROWS_AS(thm25_instance(2, 1), InvalidSpecError);
    CHECK_THROWS_AS(thm25_instance(3, 0), InvalidSpecError);
    CHECK_THROWS_AS(thm26_instance(2, 2), InvalidSpecError);
    CHECK_THROWS_AS(thm26_instance(3, 1), InvalidSpecError);
    CHECK_THROWS_AS(thm21_lower_instance(2), InvalidSpecError);
}
