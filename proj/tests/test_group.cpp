#include <doctest.h>

#include <map>
#include <set>

#include "ffc/group.hpp"

using namespace ffc;

TEST_CASE("group library sizes and structure") {
    CHECK(cyclic_group(6).size() == 6);
    CHECK(group_by_name("Z2xZ2").size() == 4);
    CHECK(group_by_name("S3").size() == 6);
    CHECK(group_by_name("D4").size() == 8);
    CHECK(group_by_name("Q8").size() == 8);
    CHECK(group_by_name("A4").size() == 12);
    CHECK(group_by_name("S4").size() == 24);
    CHECK(group_by_name("Z/6").size() == 6);
    CHECK_THROWS_AS(group_by_name("E8"), error);

    CHECK(cyclic_group(6).is_abelian());
    CHECK(!group_by_name("S3").is_abelian());
}

TEST_CASE("conjugacy classes of S3: sizes 1, 3, 2") {
    Group S3 = group_by_name("S3");
    std::set<std::vector<u32>> classes;
    for (u32 g = 0; g < S3.size(); ++g) classes.insert(S3.conjugacy_class(g));
    REQUIRE(classes.size() == 3);
    std::multiset<size_t> sizes;
    for (auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 3});
}

TEST_CASE("quaternion group relations") {
    Group Q8 = quaternion_group();
    // exactly one element of order 2 (that is -1)
    u32 order2 = 0;
    for (u32 g = 0; g < 8; ++g)
        if (Q8.order_of(g) == 2) ++order2;
    CHECK(order2 == 1);
    // six elements of order 4
    u32 order4 = 0;
    for (u32 g = 0; g < 8; ++g)
        if (Q8.order_of(g) == 4) ++order4;
    CHECK(order4 == 6);
    // every subgroup is normal; commutator subgroup = {1, -1}
    CHECK(Q8.commutators().size() <= 2);
    CHECK(Q8.normal_closure({2}).size() == 4); // <i> has order 4
}

TEST_CASE("orders, closures and cosets") {
    Group S4 = group_by_name("S4");
    CHECK(S4.identity() < S4.size());
    std::multiset<u32> orders;
    for (u32 g = 0; g < S4.size(); ++g) orders.insert(S4.order_of(g));
    CHECK(orders.count(1) == 1);
    CHECK(orders.count(2) == 9); // 6 transpositions + 3 double transpositions
    CHECK(orders.count(3) == 8);
    CHECK(orders.count(4) == 6);
    // A4 = commutator subgroup
    auto comm = S4.normal_closure(S4.commutators());
    CHECK(comm.size() == 12);
    for (u32 g = 0; g < S4.size(); ++g) {
        auto C = S4.coset(g, comm);
        CHECK(C.size() == 12);
    }
}

TEST_CASE("coset order computes quotient element orders") {
    Group Z6 = cyclic_group(6);
    std::vector<u32> H{0, 3}; // subgroup of order 2
    CHECK(Z6.coset_order(1, H) == 3);
    CHECK(Z6.coset_order(2, H) == 3);
    CHECK(Z6.coset_order(3, H) == 1);
}
