#include <catch2/catch_amalgamated.hpp>

#include "cliquereconf/feasibility.hpp"
#include "cliquereconf/witness.hpp"
#include "test_util.hpp"

using namespace cliquereconf;
using testutil::fam;

namespace {

FeasibilitySet kts(const std::string& d) {
    auto s = kts_closed(FamilyDescriptor::parse(d));
    REQUIRE(s.has_value());
    return *s;
}

FeasibilitySet ktj(const std::string& d) {
    auto s = ktj_closed(FamilyDescriptor::parse(d));
    REQUIRE(s.has_value());
    return *s;
}

}  // namespace

TEST_CASE("token sliding oracle values") {
    CHECK(kts("complete(1)") == FeasibilitySet::all_from(1));
    CHECK(kts("complete(2)") == FeasibilitySet::of({1}));
    CHECK(kts("complete(5)") == FeasibilitySet::of({1, 4}));
    CHECK(kts("path(6)") == FeasibilitySet::of({1}));
    CHECK(kts("cycle(7)") == FeasibilitySet::of({1}));
    CHECK(kts("star(4)") == FeasibilitySet::of({1}));
    CHECK(kts("completebipartite(3,4)") == FeasibilitySet::of({1}));
    CHECK(kts("book(1)") == FeasibilitySet::of({1, 2}));
    CHECK(kts("book(3)") == FeasibilitySet::of({1}));
    CHECK(kts("friendship(3)") == FeasibilitySet::of({1, 2}));
    CHECK(kts("johnson(7,3)") == FeasibilitySet::of({1, 3, 4}));
    CHECK(kts("johnson(6,3)") == FeasibilitySet::of({1, 3}));
    CHECK(kts("johnson(2,1)") == FeasibilitySet::of({1}));
    CHECK(kts("cliqueunion(3,3,1)") == FeasibilitySet::of({1, 2}));
    CHECK(kts("cliqueunion(2,2)") == FeasibilitySet::of({1}));
    CHECK(kts("cliqueunion(1,1,1)") == FeasibilitySet::all_from(1));
    CHECK(kts("cliqueunion(4,2)") == FeasibilitySet::of({1}));
}

TEST_CASE("token sliding complements") {
    CHECK(kts("complement(complete(6))") == FeasibilitySet::all_from(1));
    CHECK(kts("complement(star(1))") == FeasibilitySet::all_from(1));
    CHECK(kts("complement(star(4))") == FeasibilitySet::of({1, 3}));
    CHECK(kts("complement(star(2))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(completebipartite(3,3))") == FeasibilitySet::of({1, 2}));
    CHECK(kts("complement(completebipartite(2,2))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(completebipartite(2,5))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(book(1))") == FeasibilitySet::all_from(1));
    CHECK(kts("complement(book(2))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(book(4))") == FeasibilitySet::of({1, 3}));
    CHECK(kts("complement(path(5))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(path(4))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(cycle(6))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(cycle(5))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(cycle(4))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(friendship(1))") == FeasibilitySet::all_from(1));
    CHECK(kts("complement(friendship(2))") == FeasibilitySet::of({1}));
    CHECK(kts("complement(friendship(3))") == FeasibilitySet::of({1, 2}));
    CHECK(kts("complement(friendship(5))") == FeasibilitySet::of({1}));
}

TEST_CASE("token jumping oracle values") {
    CHECK(ktj("complete(7)") == FeasibilitySet::all_from(1));
    CHECK(ktj("path(2)") == FeasibilitySet::all_from(1));
    CHECK(ktj("path(5)") == FeasibilitySet::all_from(2));
    CHECK(ktj("cycle(3)") == FeasibilitySet::all_from(1));
    CHECK(ktj("cycle(6)") == FeasibilitySet::all_from(2));
    CHECK(ktj("star(1)") == FeasibilitySet::all_from(1));
    CHECK(ktj("star(2)") == FeasibilitySet::all_from(2));
    CHECK(ktj("star(5)") == FeasibilitySet::all_from(5));
    CHECK(ktj("completebipartite(2,3)") == FeasibilitySet::none());
    CHECK(ktj("completebipartite(2,2)") == FeasibilitySet::all_from(2));
    CHECK(ktj("book(2)") == FeasibilitySet::of({2}));
    CHECK(ktj("book(4)") == FeasibilitySet::none());
    CHECK(ktj("friendship(4)") == FeasibilitySet::all_from(4));
    CHECK(ktj("johnson(6,3)") == FeasibilitySet::of({3}));
    CHECK(ktj("johnson(5,2)") == FeasibilitySet::of({2, 3}));
    CHECK(ktj("johnson(9,1)") == FeasibilitySet::all_from(1));
    CHECK(ktj("cliqueunion(3,1)") == FeasibilitySet::all_from(2));
}

TEST_CASE("token jumping complements") {
    CHECK(ktj("complement(complete(5))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(star(3))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(completebipartite(3,4))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(book(3))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(path(3))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(path(5))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(path(6))") == FeasibilitySet::none());
    CHECK(ktj("complement(path(9))") == FeasibilitySet::none());
    CHECK(ktj("complement(cycle(5))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(cycle(6))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(cycle(7))") == FeasibilitySet::none());
    CHECK(ktj("complement(friendship(2))") == FeasibilitySet::all_from(2));
    CHECK(ktj("complement(friendship(3))") == FeasibilitySet::of({2}));
    CHECK(ktj("complement(friendship(4))") == FeasibilitySet::none());
}

TEST_CASE("oracle consistency under canonicalization") {
    CHECK(kts("completebipartite(1,5)") == kts("star(5)"));
    CHECK(ktj("completebipartite(1,5)") == ktj("star(5)"));
    CHECK(ktj("completebipartite(2,2)") == ktj("cycle(4)"));
    CHECK(kts("cocktailparty(3)") == kts("johnson(4,2)"));
    CHECK(ktj("cocktailparty(3)") == FeasibilitySet::of({2}));
    CHECK(kts("johnson(8,7)") == kts("complete(8)"));
}

TEST_CASE("johnson duality invariance") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            std::string a = "johnson(" + std::to_string(n) + "," + std::to_string(r) + ")";
            std::string b = "johnson(" + std::to_string(n) + "," + std::to_string(n - r) + ")";
            CHECK(kts(a) == kts(b));
            CHECK(ktj(a) == ktj(b));
        }
}

TEST_CASE("unclassified descriptors") {
    CHECK_FALSE(kts_closed(FamilyDescriptor::parse("cocktailparty(4)")).has_value());
    CHECK_FALSE(ktj_closed(FamilyDescriptor::parse("cocktailparty(5)")).has_value());
    CHECK_FALSE(kts_closed(FamilyDescriptor::parse("rook(3,3)")).has_value());
    CHECK_FALSE(kts_closed(FamilyDescriptor::parse("completemultipartite(3,2,2)")).has_value());
    CHECK_FALSE(kts_closed(FamilyDescriptor::parse("complement(johnson(5,2))")).has_value());
}

TEST_CASE("feasibility set representation") {
    FeasibilitySet s;
    s.finite = {3, 1, 3};
    s.tail = 4;
    s.normalize();
    CHECK(s.finite == std::vector<int>{1});
    CHECK(s.tail == 3);  // 3 is absorbed into the tail

    CHECK(FeasibilitySet::of({1, 2}).contains(2));
    CHECK_FALSE(FeasibilitySet::of({1, 2}).contains(3));
    CHECK(FeasibilitySet::all_from(5).contains(99));
    CHECK_FALSE(FeasibilitySet::all_from(5).contains(4));

    FeasibilitySet t = FeasibilitySet::of({1, 4});
    t.tail = 5;
    t.normalize();
    CHECK(FeasibilitySet::from_json(t.to_json()) == t);
    CHECK(t.to_json().dump() == R"({"finite":[1],"tail":4})");
    CHECK(FeasibilitySet::of({1, 2}).to_json().dump() == R"({"finite":[1,2],"tail":null})");
}

TEST_CASE("johnson dual map") {
    auto m41 = johnson_dual_map(4, 1);
    CHECK(m41.size() == 4);
    auto m52 = johnson_dual_map(5, 2);
    auto m53 = johnson_dual_map(5, 3);
    for (size_t i = 0; i < m52.size(); ++i)
        CHECK(m53[static_cast<size_t>(m52[i])] == static_cast<int>(i));  // involution
    CHECK_THROWS_AS(johnson_dual_map(4, 4), std::invalid_argument);
}

TEST_CASE("sliding witnesses") {
    WitnessRecipe r1 = ts_witness(FamilyDescriptor::parse("complete(4)"), 3);
    CHECK(r1.host == fam("complete(4)"));

    WitnessRecipe r2 = ts_witness(FamilyDescriptor::parse("johnson(6,2)"), 4);
    CHECK(r2.host == fam("complete(6)"));

    WitnessRecipe r3 = ts_witness(FamilyDescriptor::parse("complement(star(4))"), 3);
    CHECK(r3.host.vertex_count() == 7);  // K_4 + K_3

    WitnessRecipe r4 = ts_witness(FamilyDescriptor::parse("friendship(4)"), 2);
    CHECK(are_isomorphic(r4.host, fam("book(4)")).has_value());

    WitnessRecipe r5 = ts_witness(FamilyDescriptor::parse("complement(friendship(3))"), 2);
    CHECK(r5.host.vertex_count() == 6);

    WitnessRecipe r6 = ts_witness(FamilyDescriptor::parse("path(7)"), 1);
    CHECK(r6.host == fam("path(7)"));

    CHECK_THROWS_AS(ts_witness(FamilyDescriptor::parse("path(4)"), 2), witness_error);
    CHECK_THROWS_AS(ts_witness(FamilyDescriptor::parse("cocktailparty(4)"), 1), witness_error);
}

TEST_CASE("johnson witnesses verify past the generic matcher bound") {
    // 792 vertices: the dual level goes through the subset-complement check
    WitnessRecipe dual = ts_witness(FamilyDescriptor::parse("johnson(12,5)"), 7);
    CHECK(dual.host == fam("complete(12)"));
    // 924 vertices: the matching level is bit-equal to the target
    WitnessRecipe same = tj_witness(FamilyDescriptor::parse("johnson(12,6)"), 6);
    CHECK(same.host == fam("complete(12)"));
}

TEST_CASE("jumping witnesses") {
    WitnessRecipe r1 = tj_witness(FamilyDescriptor::parse("complete(3)"), 2);
    CHECK(are_isomorphic(r1.host, fam("star(3)")).has_value());

    WitnessRecipe r2 = tj_witness(FamilyDescriptor::parse("cycle(5)"), 4);
    CHECK(r2.host == join(fam("complete(2)"), fam("cycle(5)")));

    WitnessRecipe r3 = tj_witness(FamilyDescriptor::parse("friendship(2)"), 3);
    CHECK(r3.host.vertex_count() == 7);

    WitnessRecipe r4 = tj_witness(FamilyDescriptor::parse("star(3)"), 3);
    CHECK(r4.host.vertex_count() == 6);

    WitnessRecipe r5 = tj_witness(FamilyDescriptor::parse("book(2)"), 2);
    CHECK(r5.host.vertex_count() == 4);

    WitnessRecipe r6 = tj_witness(FamilyDescriptor::parse("complement(path(5))"), 3);
    CHECK(r6.host.vertex_count() == 6);

    WitnessRecipe r7 = tj_witness(FamilyDescriptor::parse("complement(cycle(6))"), 2);
    CHECK(r7.host == fam("completebipartite(3,2)"));

    CHECK_THROWS_AS(tj_witness(FamilyDescriptor::parse("star(4)"), 3), witness_error);
    CHECK_THROWS_AS(tj_witness(FamilyDescriptor::parse("completebipartite(2,3)"), 2), witness_error);
}
