#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "estrada/graph.hpp"

namespace estrada {

namespace family {
struct Complete { std::size_t n; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct CompleteBipartite { std::size_t p; std::size_t q; };
/// Star on n vertices: vertex 0 joined to 1..n-1.
struct Star { std::size_t n; };
/// G(n, p): each pair i < j, visited in lexicographic order, is an edge when
/// the next draw of std::mt19937_64(seed), mapped to [0,1) via its top 53
/// bits, is below p. The mapping avoids std::uniform_real_distribution so the
/// edge set is identical across standard libraries.
struct ErdosRenyi { std::size_t n; double p_edge; std::uint64_t seed; };
}  // namespace family

using FamilySpec = std::variant<family::Complete, family::Path, family::Cycle,
                                family::CompleteBipartite, family::Star,
                                family::ErdosRenyi>;

/// Throws InputError for n == 0, p or q == 0, cycles shorter than 3, or
/// p_edge outside [0, 1].
Graph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Vertices 0..p-1 form one side, p..p+q-1 the other.
Graph complete_bipartite_graph(std::size_t p, std::size_t q);
Graph star_graph(std::size_t n);
Graph erdos_renyi_graph(std::size_t n, double p_edge, std::uint64_t seed);

}  // namespace estrada
