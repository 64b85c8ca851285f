#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nichols/cartan_graph.hpp"

namespace nichols {

enum class NeighborhoodVariant { A5a, A5b, A5c, A6a, A6b, A7 };

const char* to_string(NeighborhoodVariant v);

struct NeighborhoodWitness {
    Permutation sigma;        // relabeling of I under which the conditions hold
    NeighborhoodVariant variant;
    std::vector<int> params;  // (a,b,c,d,e) for rank 5, (a) for rank 6, () for rank 7
};

// Scan all theta! relabelings sigma and check the full good-neighborhood
// conjunction on the relabeled diagram. Composite Cartan entries are chains
// of reflect_diagram followed by cartan_entry; a NotIFinite anywhere along a
// required chain fails that sigma. Rank must be 5/6/7 respectively.
std::optional<NeighborhoodWitness> good_A5(const GDDiagram& X);
std::optional<NeighborhoodWitness> good_A6(const GDDiagram& X);
std::optional<NeighborhoodWitness> good_A7(const GDDiagram& X);

std::optional<NeighborhoodWitness> good_A5(const CartanGraph& G, int point_id);
std::optional<NeighborhoodWitness> good_A6(const CartanGraph& G, int point_id);
std::optional<NeighborhoodWitness> good_A7(const CartanGraph& G, int point_id);

// Dispatch on rank; throws RankMismatch outside {5, 6, 7}.
std::optional<NeighborhoodWitness> good_neighborhood(const GDDiagram& X);

// First point (in BFS order) with a witness.
std::optional<std::pair<int, NeighborhoodWitness>> goodnei_exists(const CartanGraph& G);

} // namespace nichols
