#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wedgematch {

// Vertices are 1-based positions on the horizontal line, 1..2n.
using Vertex = int;

struct Edge {
    Vertex left;
    Vertex right;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class PairRelation { Crossing, Nesting, Alignment };

const char* to_string(PairRelation relation);

// Perfect matching on [2n], stored as a fixed-point-free involution.
//
// The left-endpoint-sorted edge list e_1..e_n is derived once at
// construction; values are immutable afterwards, so concurrent reads
// need no synchronisation.
class Matching {
public:
    // The empty matching (n = 0).
    Matching() = default;

    // Builds from exactly n pairs covering [1, 2n]. Pairs may be given
    // in either orientation. Throws InvalidObject naming the offending
    // value on duplicate vertices, out-of-range vertices or a wrong count.
    static Matching from_pairs(std::span<const std::pair<int, int>> pairs, int n);
    static Matching from_pairs(std::span<const std::pair<int, int>> pairs);
    static Matching from_pairs(std::initializer_list<std::pair<int, int>> pairs);

    // partner[v-1] is the vertex matched to v. Throws InvalidObject
    // unless the table is a fixed-point-free involution on [1, 2n].
    static Matching from_partner_table(std::vector<int> partner);

    int size() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(partner_.size()); }

    Vertex partner(Vertex v) const { return partner_[static_cast<std::size_t>(v - 1)]; }
    bool is_left_endpoint(Vertex v) const { return partner(v) > v; }

    // Edges e_1..e_n ordered by left endpoint. edges()[i-1] is e_i.
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& partner_table() const { return partner_; }

    // 1-based position of the edge containing v in the left-endpoint order.
    int edge_index_of(Vertex v) const;
    bool contains(const Edge& e) const;

    // Re-checks the involution invariant and the cached edge order
    // against a fresh recomputation. Throws InvalidObject on failure.
    void validate() const;

    friend bool operator==(const Matching& a, const Matching& b) { return a.partner_ == b.partner_; }
    friend auto operator<=>(const Matching& a, const Matching& b) { return a.partner_ <=> b.partner_; }

private:
    explicit Matching(std::vector<int> partner);

    std::vector<int> partner_;
    std::vector<Edge> edges_;
};

// Relation of two distinct edges of one matching, in either argument order.
PairRelation classify_pair(const Edge& e, const Edge& f);

long long crossings(const Matching& m);
long long nestings(const Matching& m);
long long alignments(const Matching& m);

// ne(e, M): edges of M lying strictly below e.
long long nestings_below(const Matching& m, const Edge& e);

// st_i(M) for 1 <= i <= n-1. When e_i = (a,b) covers e_{i+1} = (c,d),
// counts endpoints v in [d, b] belonging to edges e_k with k > i
// (an edge with both endpoints in range contributes 2); otherwise 0.
long long st_component(const Matching& m, int i);
long long st_total(const Matching& m);

Edge first_edge(const Matching& m);
std::vector<Vertex> left_endpoints(const Matching& m);

struct MatchingComponent {
    int offset;          // number of vertices preceding the block
    Matching matching;   // block renumbered to start at 1
};

// Finest split of [2n] into consecutive self-contained blocks.
std::vector<MatchingComponent> irreducible_components(const Matching& m);

// Juxtaposes matchings left to right; inverse of irreducible_components.
Matching concatenate(std::span<const Matching> parts);

} // namespace wedgematch
