#pragma once

#include <cstdint>

#include "cactus/graph.hpp"

namespace cactus {

// A yes-instance with its planted witness structure: contracting the spanning
// forests of the planted big sets turns g into the target cactus.
struct PlantedInstance {
    Graph g;
    int k;
    WitnessStructure planted;
    Graph target;
};

// Connected cactus on n vertices grown by attaching random edge or cycle
// blocks; deterministic per seed.
Graph random_cactus(int n, std::uint64_t seed);

// Blow up random non-cut vertices of a cactus into connected blobs so that
// the blob spanning trees total exactly k edges. Blobs may receive extra
// internal edges beyond their spanning tree.
PlantedInstance plant_contractible(const Graph& target, int k, std::uint64_t seed);

}  // namespace cactus
