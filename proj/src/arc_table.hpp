#pragma once

#include <vector>

#include "wedgematch/matching.hpp"

namespace wedgematch::detail {

// Mutable partner table used during surgery. Positions are 1-based; a
// partner of 0 marks a vertex that is currently unconnected.
class ArcTable {
public:
    explicit ArcTable(const Matching& m);

    int vertex_count() const { return static_cast<int>(partner_.size()) - 1; }
    int partner(int v) const { return partner_[static_cast<std::size_t>(v)]; }

    void connect(int a, int b);
    void disconnect(int v);

    // New unconnected vertex at position pos; vertices >= pos move up one.
    void insert_vertex(int pos);
    // Removes an unconnected vertex; vertices > pos move down one.
    void erase_vertex(int pos);

    // Throws InvalidObject if any vertex is left unconnected.
    Matching to_matching() const;

private:
    std::vector<int> partner_;
};

// Position of v after inserting a vertex at pos.
inline int shifted_up(int v, int pos) { return v >= pos ? v + 1 : v; }

} // namespace wedgematch::detail
