#include <doctest.h>

#include <set>

#include "specht/core_analysis.hpp"
#include "specht/oracle.hpp"

using namespace specht;

TEST_SUITE("oracle") {

TEST_CASE("all_partitions counts and order") {
    CHECK(oracle::all_partitions(4).size() == 5);
    CHECK(oracle::all_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(oracle::all_partitions(8).size() == 22);

    const auto list = oracle::all_partitions(6);
    CHECK(list.front() == Partition{6});
    CHECK(list.back() == Partition{1, 1, 1, 1, 1, 1});
    CHECK(std::set<Partition>(list.begin(), list.end()).size() == list.size());

    CHECK_THROWS_AS(oracle::all_partitions(61), domain_error);
    CHECK_NOTHROW(oracle::all_partitions(61, 61));
}

TEST_CASE("rim removal core") {
    CHECK(oracle::p_core_by_rim_removal(Partition{2, 1, 1, 1}, 3, 42) == Partition{2});
    CHECK(oracle::p_core_by_rim_removal(Partition{5}, 5, 7) == Partition());
    CHECK(oracle::p_core_by_rim_removal(Partition{4, 1}, 5, 1) == Partition());
}

TEST_CASE("rim removal is order independent and matches the beta-number core") {
    for (long long n = 0; n <= 13; ++n)
        for (const Partition& q : oracle::all_partitions(n))
            for (long long p : {2, 3, 5}) {
                const Partition fast = p_core(q, p);
                for (unsigned seed = 0; seed < 6; ++seed)
                    CHECK(oracle::p_core_by_rim_removal(q, p, seed) == fast);
            }
}

TEST_CASE("brute_force_block") {
    CHECK(oracle::brute_force_block(3, Partition{2}, 3).size() == 4);

    const auto tiny = oracle::brute_force_block(5, Partition(), 1);
    CHECK(std::set<Partition>(tiny.begin(), tiny.end()) ==
          std::set<Partition>{Partition{5}, Partition{1, 1, 1, 1, 1}});

    const auto s4 = oracle::brute_force_block(2, Partition(), 2);
    CHECK(std::count(s4.begin(), s4.end(), Partition{2, 2}) == 1);

    CHECK_THROWS_AS(oracle::brute_force_block(5, Partition{5}, 1), domain_error);
    CHECK_THROWS_AS(oracle::brute_force_block(3, Partition(), 30), domain_error);
}

TEST_CASE("block outputs are conjugation symmetric") {
    for (const auto& [p, core, w] :
         {std::tuple<long long, Partition, long long>{3, Partition{2}, 3},
          {3, Partition{3, 1}, 2},
          {5, Partition{2, 1}, 2}}) {
        auto direct = oracle::brute_force_block(p, core, w);
        auto conjugated = oracle::brute_force_block(p, core.conjugate(), w);
        std::set<Partition> direct_conj;
        for (const Partition& lambda : direct)
            direct_conj.insert(lambda.conjugate());
        CHECK(direct_conj == std::set<Partition>(conjugated.begin(), conjugated.end()));
    }
}

} // TEST_SUITE
