#pragma once

#include <string>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

using DimVec = std::vector<long long>;

// Undirected multigraph on the irreducible characters: mult[a][b] is the
// multiplicity of chi_b inside chi_a * chi_std.
struct McKayGraph {
    std::vector<long long> degrees; // chi(id) per vertex, vertex order = row order
    std::vector<std::vector<long long>> mult;

    int num_vertices() const { return (int)degrees.size(); }
};

enum class AffineType { A, D, E6, E7, E8 };

struct RootDatum {
    McKayGraph graph;
    std::vector<std::vector<long long>> cartan; // A = 2*Id - mult
    DimVec delta;                               // primitive positive kernel vector, delta[0] = 1
    std::vector<std::vector<long long>> finite_cartan; // A with row/column 0 removed
    AffineType type = AffineType::A;
    int type_rank = 0; // the subscript: A~(rank), D~(rank), E~6/7/8

    int num_vertices() const { return graph.num_vertices(); }
    std::string type_label() const; // "A~2", "D~4", "E~8", ...
};

McKayGraph mckay_graph(const GroupData& g);

RootDatum affine_cartan(const McKayGraph& graph);

// |d| = sum_chi delta_chi d_chi
long long size_of(const DimVec& d, const RootDatum& r);

// Deterministic DOT rendering; chi_0 is highlighted, multi-edges labeled.
std::string to_dot(const McKayGraph& graph);

// Convenience: group + graph + root datum in one call.
struct GroupModel {
    GroupData group;
    RootDatum datum;
};
GroupModel build_model(const GroupSpec& spec);

} // namespace mckay
