#include "wedgematch/matching.hpp"

#include <algorithm>
#include <string>

#include "wedgematch/error.hpp"

namespace wedgematch {

namespace {

std::vector<Edge> derive_edges(const std::vector<int>& partner)
{
    std::vector<Edge> edges;
    edges.reserve(partner.size() / 2);
    for (std::size_t i = 0; i < partner.size(); ++i) {
        const int v = static_cast<int>(i) + 1;
        if (partner[i] > v)
            edges.push_back({v, partner[i]});
    }
    return edges;
}

void check_involution(const std::vector<int>& partner)
{
    const int size = static_cast<int>(partner.size());
    if (size % 2 != 0)
        throw InvalidObject("partner table has odd length " + std::to_string(size));
    for (int v = 1; v <= size; ++v) {
        const int w = partner[static_cast<std::size_t>(v - 1)];
        if (w < 1 || w > size)
            throw InvalidObject("vertex " + std::to_string(v) + " has partner "
                                + std::to_string(w) + " outside [1, " + std::to_string(size) + "]");
        if (w == v)
            throw InvalidObject("vertex " + std::to_string(v) + " is matched to itself");
        if (partner[static_cast<std::size_t>(w - 1)] != v)
            throw InvalidObject("vertex " + std::to_string(w) + " used twice");
    }
}

} // namespace

const char* to_string(PairRelation relation)
{
    switch (relation) {
    case PairRelation::Crossing: return "crossing";
    case PairRelation::Nesting: return "nesting";
    case PairRelation::Alignment: return "alignment";
    }
    return "?";
}

Matching::Matching(std::vector<int> partner)
    : partner_(std::move(partner)), edges_(derive_edges(partner_))
{
}

Matching Matching::from_pairs(std::span<const std::pair<int, int>> pairs, int n)
{
    if (n < 0)
        throw InvalidObject("negative matching size " + std::to_string(n));
    if (static_cast<int>(pairs.size()) != n)
        throw InvalidObject("expected " + std::to_string(n) + " pairs, got "
                            + std::to_string(pairs.size()));
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    auto claim = [&](int v, int w) {
        if (v < 1 || v > 2 * n)
            throw InvalidObject("vertex " + std::to_string(v) + " out of range [1, "
                                + std::to_string(2 * n) + "]");
        auto& slot = partner[static_cast<std::size_t>(v - 1)];
        if (slot != 0)
            throw InvalidObject("vertex " + std::to_string(v) + " used twice");
        slot = w;
    };
    for (const auto& [a, b] : pairs) {
        if (a == b)
            throw InvalidObject("vertex " + std::to_string(a) + " used twice");
        claim(a, b);
        claim(b, a);
    }
    return Matching(std::move(partner));
}

Matching Matching::from_pairs(std::span<const std::pair<int, int>> pairs)
{
    return from_pairs(pairs, static_cast<int>(pairs.size()));
}

Matching Matching::from_pairs(std::initializer_list<std::pair<int, int>> pairs)
{
    return from_pairs(std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Matching Matching::from_partner_table(std::vector<int> partner)
{
    check_involution(partner);
    return Matching(std::move(partner));
}

int Matching::edge_index_of(Vertex v) const
{
    const int left = std::min(v, partner(v));
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), left,
                                     [](const Edge& e, int x) { return e.left < x; });
    return static_cast<int>(it - edges_.begin()) + 1;
}

bool Matching::contains(const Edge& e) const
{
    return e.left >= 1 && e.left < e.right && e.right <= vertex_count() && partner(e.left) == e.right;
}

void Matching::validate() const
{
    check_involution(partner_);
    if (derive_edges(partner_) != edges_)
        throw InvalidObject("cached edge order disagrees with the partner table");
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].left >= edges_[i].left)
            throw InvalidObject("edge list not strictly increasing by left endpoint");
}

PairRelation classify_pair(const Edge& e, const Edge& f)
{
    if (e == f)
        throw InvalidObject("cannot classify an edge against itself");
    const Edge& a = e.left < f.left ? e : f;
    const Edge& b = e.left < f.left ? f : e;
    if (b.left < a.right && a.right < b.right)
        return PairRelation::Crossing;
    if (b.right < a.right)
        return PairRelation::Nesting;
    return PairRelation::Alignment;
}

namespace {

struct PairCounts {
    long long crossings = 0;
    long long nestings = 0;
    long long alignments = 0;
};

PairCounts count_pairs(const Matching& m)
{
    PairCounts counts;
    const auto edges = m.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            switch (classify_pair(edges[i], edges[j])) {
            case PairRelation::Crossing: ++counts.crossings; break;
            case PairRelation::Nesting: ++counts.nestings; break;
            case PairRelation::Alignment: ++counts.alignments; break;
            }
        }
    }
    return counts;
}

} // namespace

long long crossings(const Matching& m) { return count_pairs(m).crossings; }
long long nestings(const Matching& m) { return count_pairs(m).nestings; }
long long alignments(const Matching& m) { return count_pairs(m).alignments; }

long long nestings_below(const Matching& m, const Edge& e)
{
    if (!m.contains(e))
        throw InvalidObject("edge (" + std::to_string(e.left) + "," + std::to_string(e.right)
                            + ") is not in the matching");
    long long below = 0;
    for (Vertex v = e.left + 1; v < e.right; ++v)
        if (m.is_left_endpoint(v) && m.partner(v) < e.right)
            ++below;
    return below;
}

long long st_component(const Matching& m, int i)
{
    if (i < 1 || i >= m.size())
        throw InvalidObject("st index " + std::to_string(i) + " outside [1, "
                            + std::to_string(m.size() - 1) + "]");
    const Edge& outer = m.edge(i);
    const Edge& inner = m.edge(i + 1);
    if (classify_pair(outer, inner) != PairRelation::Nesting)
        return 0;
    // Edges with index > i are exactly those whose left endpoint exceeds outer.left.
    long long count = 0;
    for (Vertex v = inner.right; v <= outer.right; ++v)
        if (std::min(v, m.partner(v)) > outer.left)
            ++count;
    return count;
}

long long st_total(const Matching& m)
{
    long long total = 0;
    for (int i = 1; i < m.size(); ++i)
        total += st_component(m, i);
    return total;
}

Edge first_edge(const Matching& m)
{
    if (m.size() == 0)
        throw InvalidObject("the empty matching has no first edge");
    return m.edge(1);
}

std::vector<Vertex> left_endpoints(const Matching& m)
{
    std::vector<Vertex> lefts;
    lefts.reserve(static_cast<std::size_t>(m.size()));
    for (const Edge& e : m.edges())
        lefts.push_back(e.left);
    return lefts;
}

std::vector<MatchingComponent> irreducible_components(const Matching& m)
{
    std::vector<MatchingComponent> parts;
    int start = 1;
    int reach = 0;
    for (Vertex v = 1; v <= m.vertex_count(); ++v) {
        reach = std::max(reach, m.partner(v));
        if (reach != v)
            continue;
        std::vector<int> block;
        block.reserve(static_cast<std::size_t>(v - start + 1));
        for (Vertex w = start; w <= v; ++w)
            block.push_back(m.partner(w) - start + 1);
        parts.push_back({start - 1, Matching::from_partner_table(std::move(block))});
        start = v + 1;
    }
    return parts;
}

Matching concatenate(std::span<const Matching> parts)
{
    std::vector<int> partner;
    for (const Matching& part : parts) {
        const int offset = static_cast<int>(partner.size());
        for (int w : part.partner_table())
            partner.push_back(w + offset);
    }
    return Matching::from_partner_table(std::move(partner));
}

} // namespace wedgematch
