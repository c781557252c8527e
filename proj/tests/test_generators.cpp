#include "doctest.h"

#include "cyclefactor/equivcheck.hpp"
#include "cyclefactor/format.hpp"
#include "cyclefactor/generators.hpp"

using namespace cyclefactor;

TEST_SUITE_BEGIN("generators");

TEST_CASE("cubic generator: degrees, parity requirement, multi-edges kept") {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 * rng.next_int(2, 5);
        MixedGraph g = random_cubic(n, rng);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == 3);
        for (auto [u, v] : g.edges()) CHECK(u != v);
    }
    Rng r2(4);
    CHECK_THROWS_AS(random_cubic(5, r2), Error);
    CHECK_THROWS_AS(random_cubic(2, r2), Error);

    for (int trial = 0; trial < 10; ++trial) {
        MixedGraph g = random_simple_cubic(4, r2);
        // K4 is the only simple cubic graph on four vertices
        CHECK(g.edge_count() == 6);
    }
}

TEST_CASE("regular generator validates the degree") {
    Rng rng(5);
    MixedGraph g = random_regular(6, 4, rng);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 4);
    CHECK_THROWS_AS(random_regular(6, 3, rng), Error);
}

TEST_CASE("3dm generator stays in range and single-tuple instances are yes") {
    Rng rng(6);
    ProblemInstance inst = random_3dm(1, 1, rng);
    CHECK(inst.tuples.size() == 1);
    CHECK(inst.tuples[0] == std::array<int, 3>{0, 0, 0});
    for (int trial = 0; trial < 20; ++trial) {
        ProblemInstance i2 = random_3dm(rng.next_int(1, 3), rng.next_int(1, 6), rng);
        for (const auto& t : i2.tuples)
            for (int x : t) CHECK((0 <= x && x < i2.dm_size));
    }
}

TEST_CASE("identical seeds give byte-identical instances") {
    for (std::uint64_t seed : {1ULL, 42ULL, 977ULL}) {
        Rng a(seed), b(seed);
        CHECK(serialize_instance(random_smcf(6, 0.4, 0.3, a)) ==
              serialize_instance(random_smcf(6, 0.4, 0.3, b)));
        Rng c = Rng::instance_stream(seed, 3), d = Rng::instance_stream(seed, 3);
        CHECK(serialize_instance(random_prcf(4, 4, c)) == serialize_instance(random_prcf(4, 4, d)));
    }
}

TEST_CASE("equivcheck reports are reproducible for a fixed seed") {
    equivcheck::EquivOptions opts;
    opts.reduction_id = "mcf-existseven";
    opts.count = 10;
    opts.max_size = 4;
    opts.seed = 2024;
    opts.threads = 2;
    std::string first = equivcheck::run_equivcheck(opts).text;
    std::string second = equivcheck::run_equivcheck(opts).text;
    CHECK(first == second);
    CHECK(first.find("OK") != std::string::npos);
}

TEST_SUITE_END();
