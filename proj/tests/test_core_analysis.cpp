#include <doctest.h>

#include "specht/core_analysis.hpp"
#include "specht/irreducibility.hpp"
#include "specht/oracle.hpp"

using namespace specht;

namespace {

const Partition kExampleCore = Partition::parse("17,13,9,5^2,3^3,2^4,1^4");

std::vector<Partition> partitions_up_to(long long max_n) {
    std::vector<Partition> all;
    for (long long n = 0; n <= max_n; ++n)
        for (const Partition& q : oracle::all_partitions(n))
            all.push_back(q);
    return all;
}

} // namespace

TEST_SUITE("core_analysis") {

TEST_CASE("p_core fixed points and removals") {
    CHECK(p_core(kExampleCore, 5) == kExampleCore);
    CHECK(p_core(Partition{5}, 5) == Partition());
    CHECK(p_core(Partition{2, 1, 1, 1}, 3) == Partition{2});
}

TEST_CASE("p_core is idempotent, hook free, and size-compatible") {
    for (const Partition& q : partitions_up_to(20))
        for (long long p : {2, 3, 5, 7}) {
            const Partition core = p_core(q, p);
            CHECK(is_p_hook_free(core, p));
            CHECK(p_core(core, p) == core);
            CHECK((q.size() - core.size()) % p == 0);
            CHECK(p_weight(q, p) >= 0);
        }
}

TEST_CASE("p_core commutes with conjugation") {
    for (const Partition& q : partitions_up_to(15))
        for (long long p : {2, 3, 5})
            CHECK(p_core(q.conjugate(), p) == p_core(q, p).conjugate());
}

TEST_CASE("p_weight") {
    CHECK(p_weight(Partition::parse("27,23,14,5^2,3^3,2^9,1^9"), 5) == 8);
    CHECK(p_weight(kExampleCore, 5) == 0);
    CHECK(p_weight(Partition{5, 3}, 3) == 2);
    CHECK(p_core(Partition{5, 3}, 3) == Partition{2});
}

TEST_CASE("p_residual") {
    CHECK(p_residual(kExampleCore, 5) == PResidual{4, 3});
    CHECK(p_residual(Partition(), 7) == PResidual{1, 1});
    CHECK(p_residual(Partition{2}, 3) == PResidual{2, 1});
}

TEST_CASE("residual_bound examples") {
    const ResidualBound staircase = residual_bound(Partition{2}, 3);
    CHECK(staircase.t_plus_b == 3);
    CHECK(staircase.bound == Rational(3, 1));
    CHECK(staircase.is_maximal);

    const ResidualBound empty = residual_bound(Partition(), 5);
    CHECK(empty.t_plus_b == 2);
    CHECK(empty.bound == Rational(2, 1));
    CHECK(empty.is_maximal);

    const ResidualBound example = residual_bound(kExampleCore, 5);
    CHECK(example.t_plus_b == 7);
    CHECK(example.bound == Rational(43, 5));
    CHECK_FALSE(example.is_maximal);

    CHECK_THROWS_AS(residual_bound(Partition{2, 1}, 2), domain_error);
}

TEST_CASE("residual bound holds with the equality characterization") {
    // The characterization cross-check inside residual_bound throws on
    // any disagreement, so the sweep only needs the inequality.
    for (const Partition& q : partitions_up_to(12))
        for (long long p : {3, 5}) {
            const ResidualBound rb = residual_bound(q, p);
            CHECK(rb.t_plus_b * rb.bound.den <= rb.bound.num);
        }
}

TEST_CASE("p-top cores are staircases with step p-1") {
    for (long long p : {3, 5})
        for (long long k = 1; k <= 4; ++k)
            for (long long n = 0; n <= 6; ++n)
                for (const Partition& sigma : oracle::all_partitions(n)) {
                    if (sigma.length() > k || sigma.part(k) == 0)
                        continue; // need a p-top with exactly k rows
                    const Partition tau = expand_top(sigma, k, p);
                    REQUIRE(is_p_top(tau, p));
                    std::vector<long long> staircase;
                    for (long long i = 1; i < k; ++i)
                        staircase.push_back((k - i) * (p - 1));
                    CHECK(p_core(tau, p) == Partition(staircase));
                }
}

TEST_CASE("make_block validation") {
    CHECK(make_block(5, kExampleCore, 8).n() == 110);
    CHECK_THROWS_AS(make_block(4, Partition(), 1), domain_error);
    CHECK_THROWS_AS(make_block(5, Partition{5}, 1), domain_error);
    CHECK_THROWS_AS(make_block(5, Partition(), -1), domain_error);
}

} // TEST_SUITE
