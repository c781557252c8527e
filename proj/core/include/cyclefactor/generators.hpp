#pragma once

#include <cstdint>
#include <vector>

#include "cyclefactor/format.hpp"
#include "cyclefactor/graph.hpp"

namespace cyclefactor {

/// Deterministic RNG wrapper. The distribution helpers are implemented on
/// top of the raw mt19937_64 stream so generated corpora are reproducible
/// byte-for-byte regardless of the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix(seed)) {}

    std::uint64_t next_u64();
    double next_double();              // uniform in [0, 1)
    int next_int(int lo, int hi);      // uniform in [lo, hi]
    bool next_bool(double p) { return next_double() < p; }

    template <typename T> void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[next_int(0, i)]);
    }

    /// Independent per-instance stream, stable in (seed, index).
    static Rng instance_stream(std::uint64_t seed, std::uint64_t index);

private:
    static std::uint64_t splitmix(std::uint64_t x);
    std::uint64_t state_;
};

MixedGraph random_digraph(int n, double arc_prob, Rng& rng);
MixedGraph random_graph(int n, double edge_prob, Rng& rng);

/// Pairing-model cubic multigraph: loops are rejected and re-drawn,
/// parallel edges are kept. Requires even n >= 4.
MixedGraph random_cubic(int n, Rng& rng);

/// Same model with simple-graph rejection, for coloring instances.
MixedGraph random_simple_cubic(int n, Rng& rng);

/// Pairing-model 2k-regular multigraph without loops.
MixedGraph random_regular(int n, int degree, Rng& rng);

MixedGraph random_mixed(int n, double edge_prob, double arc_prob, Rng& rng);

ProblemInstance random_3dm(int n, int tuple_count, Rng& rng);
ProblemInstance random_prcf(int n, int max_edges, Rng& rng);
ProblemInstance random_smcf(int n, double edge_prob, double arc_prob, Rng& rng);

} // namespace cyclefactor
