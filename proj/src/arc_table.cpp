#include "arc_table.hpp"

#include <string>

#include "wedgematch/error.hpp"

namespace wedgematch::detail {

ArcTable::ArcTable(const Matching& m)
    : partner_(static_cast<std::size_t>(m.vertex_count()) + 1, 0)
{
    for (int v = 1; v <= m.vertex_count(); ++v)
        partner_[static_cast<std::size_t>(v)] = m.partner(v);
}

void ArcTable::connect(int a, int b)
{
    if (a == b || partner(a) != 0 || partner(b) != 0)
        throw InvalidObject("surgery tried to connect " + std::to_string(a) + " and "
                            + std::to_string(b) + " while one is busy");
    partner_[static_cast<std::size_t>(a)] = b;
    partner_[static_cast<std::size_t>(b)] = a;
}

void ArcTable::disconnect(int v)
{
    const int w = partner(v);
    if (w != 0)
        partner_[static_cast<std::size_t>(w)] = 0;
    partner_[static_cast<std::size_t>(v)] = 0;
}

void ArcTable::insert_vertex(int pos)
{
    std::vector<int> next(partner_.size() + 1, 0);
    for (int v = 1; v < static_cast<int>(partner_.size()); ++v) {
        const int w = partner(v);
        next[static_cast<std::size_t>(shifted_up(v, pos))] = w == 0 ? 0 : shifted_up(w, pos);
    }
    partner_ = std::move(next);
}

void ArcTable::erase_vertex(int pos)
{
    if (partner(pos) != 0)
        throw InvalidObject("surgery tried to delete connected vertex " + std::to_string(pos));
    auto down = [pos](int v) { return v > pos ? v - 1 : v; };
    std::vector<int> next(partner_.size() - 1, 0);
    for (int v = 1; v < static_cast<int>(partner_.size()); ++v) {
        if (v == pos)
            continue;
        const int w = partner(v);
        next[static_cast<std::size_t>(down(v))] = w == 0 ? 0 : down(w);
    }
    partner_ = std::move(next);
}

Matching ArcTable::to_matching() const
{
    for (int v = 1; v <= vertex_count(); ++v)
        if (partner(v) == 0)
            throw InvalidObject("surgery left vertex " + std::to_string(v) + " unconnected");
    return Matching::from_partner_table(std::vector<int>(partner_.begin() + 1, partner_.end()));
}

} // namespace wedgematch::detail
