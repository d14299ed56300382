#include <catch2/catch_amalgamated.hpp>

#include "sudoku_chroma/extension.hpp"
#include "sudoku_chroma/families.hpp"
#include "sudoku_chroma/propagation.hpp"

using namespace sudoku_chroma;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("singleton forcing colors a star from one leaf", "[propagation]") {
    Graph star = generate({Family::Star, 4});  // leaves 0..3, hub 4
    PropagationResult r = propagate(star, PartialColoring{2, {{0, 1}}});
    CHECK_FALSE(r.contradiction);
    CHECK(r.coloring.domain_size() == 5);
    CHECK(r.coloring.assignments == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 2}});
    CHECK(r.lists.lists.empty());
}

TEST_CASE("singleton forcing walks along a two-color path", "[propagation]") {
    Graph p4 = generate({Family::Path, 4});
    PropagationResult r = propagate(p4, PartialColoring{2, {{0, 1}}});
    CHECK(r.coloring.assignments == std::map<int, int>{{0, 1}, {1, 2}, {2, 1}, {3, 2}});
}

TEST_CASE("propagation reports contradictions", "[propagation]") {
    Graph c4 = generate({Family::Cycle, 4});
    PropagationResult r = propagate(c4, PartialColoring{2, {{0, 1}, {2, 2}}});
    CHECK(r.contradiction);
    CHECK(r.empty_vertex == 1);
}

TEST_CASE("propagation stops at the singleton fixpoint", "[propagation]") {
    // Wheel corona, pendants of the rim colored (3,1,1,1,1), hub pendant 2,
    // first rim vertex 1.  Nothing is a singleton, so nothing moves, and the
    // lists fold in the colored neighbors.
    Graph g = corona(generate({Family::Wheel, 5}), generate({Family::Complete, 1}));
    PartialColoring clue{4, {{6, 3}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {11, 2}, {0, 1}}};
    PropagationResult r = propagate(g, clue);
    CHECK_FALSE(r.contradiction);
    CHECK(r.coloring.domain_size() == 7);
    REQUIRE(r.lists.lists.size() == 5);
    CHECK(r.lists.lists.at(1).to_vector() == std::vector<int>{2, 3, 4});
    CHECK(r.lists.lists.at(2).to_vector() == std::vector<int>{2, 3, 4});
    CHECK(r.lists.lists.at(3).to_vector() == std::vector<int>{2, 3, 4});
    CHECK(r.lists.lists.at(4).to_vector() == std::vector<int>{2, 3, 4});
    CHECK(r.lists.lists.at(5).to_vector() == std::vector<int>{3, 4});

    // The residual component is a wheel, so neither shape oracle applies.
    CHECK(residual_path_check(g, r.coloring, r.lists) == Verdict::Inconclusive);
    CHECK(residual_cycle_check(g, r.coloring, r.lists) == Verdict::Inconclusive);
    CHECK(count_extensions(g, clue, kNoCap).count == 4);
}

TEST_CASE("propagate validates its input", "[propagation]") {
    Graph c3 = generate({Family::Cycle, 3});
    CHECK_THROWS_AS(propagate(c3, PartialColoring{3, {{0, 1}, {1, 1}}}), ImproperColoringError);
}

TEST_CASE("a residual path with free lists blocks uniqueness", "[propagation]") {
    // Same wheel corona, but now the hub itself is colored: what remains of
    // the rim is a path v2..v5 with lists {3,4}, plus the isolated hub pendant.
    Graph g = corona(generate({Family::Wheel, 5}), generate({Family::Complete, 1}));
    PartialColoring clue{4, {{6, 3}, {7, 1}, {8, 1}, {9, 1}, {10, 1}, {5, 2}, {0, 1}}};
    PropagationResult r = propagate(g, clue);
    CHECK_FALSE(r.contradiction);
    CHECK(r.coloring.domain_size() == 7);
    CHECK(r.lists.lists.at(1).to_vector() == std::vector<int>{3, 4});
    CHECK(r.lists.lists.at(4).to_vector() == std::vector<int>{3, 4});
    CHECK(r.lists.lists.at(11).to_vector() == std::vector<int>{1, 3, 4});

    CHECK(residual_path_check(g, r.coloring, r.lists) == Verdict::NotUnique);
    CHECK(count_extensions(g, clue, kNoCap).count == 6);
    CHECK_FALSE(is_uniquely_extendable(g, clue));
}

TEST_CASE("a residual cycle over three colors blocks uniqueness", "[propagation]") {
    // Cycle corona with only the pendants colored: the rim survives as a
    // cycle whose lists are pairs from {1,2,3}.
    Graph g = corona(generate({Family::Cycle, 5}), generate({Family::Complete, 1}));
    PartialColoring clue{3, {{5, 1}, {6, 2}, {7, 3}, {8, 1}, {9, 2}}};
    PropagationResult r = propagate(g, clue);
    CHECK_FALSE(r.contradiction);
    CHECK(r.lists.lists.at(0).to_vector() == std::vector<int>{2, 3});
    CHECK(r.lists.lists.at(1).to_vector() == std::vector<int>{1, 3});

    CHECK(residual_cycle_check(g, r.coloring, r.lists) == Verdict::NotUnique);
    CHECK(residual_path_check(g, r.coloring, r.lists) == Verdict::Inconclusive);
    CHECK(count_extensions(g, clue, kNoCap).count == 6);
}

TEST_CASE("shape oracles reject malformed list maps", "[propagation]") {
    Graph p3 = generate({Family::Path, 3});
    PartialColoring clue{2, {{0, 1}}};
    ColorListMap bad;
    bad.lists[0] = ColorSet::full(2);  // vertex 0 is colored
    CHECK_THROWS_WITH(residual_path_check(p3, clue, bad), ContainsSubstring("colored"));
    ColorListMap out_of_range;
    out_of_range.lists[9] = ColorSet::full(2);
    CHECK_THROWS_WITH(residual_path_check(p3, clue, out_of_range),
                      ContainsSubstring("out of range"));
}

TEST_CASE("verdicts print their names", "[propagation]") {
    CHECK(std::string(to_string(Verdict::NotUnique)) == "NotUnique");
    CHECK(std::string(to_string(Verdict::Inconclusive)) == "Inconclusive");
}
