#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cover {

// String over {0, 1, *}; wildcards match either bit.
using Schema = std::string;

// All binary strings matching the schema; 2^(#wildcards) members. N <= 20.
std::vector<std::string> schema_members(const Schema& y);

// Directed encoding graph: vertices are encodings, arcs point towards
// neighbors with a non-increasing number of degrees of freedom (equal counts
// give arcs in both directions). phi holds each vertex's member set
// extensionally, with configurations packed into bitmask integers.
struct EncodingDigraph {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> h;         // |phi(y)|
    std::vector<std::set<std::uint64_t>> phi;
    std::set<std::pair<int, int>> arcs;   // (tail, head) vertex indices

    int n_vertices() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
};

// All schemata of length N over {0,1,*}; adjacency is Hamming distance one.
// N <= 4.
EncodingDigraph build_schema_digraph(int N);

// All forests on n labeled sites with edges over every site pair; adjacency
// is symmetric difference of a single edge; phi(y) holds the spin
// configurations constant on each component. n <= 4.
EncodingDigraph build_forest_digraph(int n_sites);

// Idempotent vertex endomorphism: tail -> head, everything else fixed.
struct CollapsingMap {
    int tail;
    int head;
    int operator()(int v) const { return v == tail ? head : v; }
};

// throws if (tail, head) is not an arc of the digraph
CollapsingMap collapse(const EncodingDigraph& dg, int tail, int head);

// maps[0] applied first: T = T_{e_k}( ... T_{e_1}(v) ... )
int apply_composition(const std::vector<CollapsingMap>& maps, int v);

// Reachability condition: for every ordered vertex pair with
// phi(y') <= phi(y), some vertex with member set equal to phi(y') must be
// reachable from y along the arcs. Returns the violating pairs.
std::vector<std::pair<int, int>> check_condition_R(const EncodingDigraph& dg);

}  // namespace cover
