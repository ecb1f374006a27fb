#include "wedgematch/bijections.hpp"

#include <algorithm>
#include <string>

#include "arc_table.hpp"
#include "wedgematch/error.hpp"

namespace wedgematch {

using detail::ArcTable;
using detail::shifted_up;

InsertionCode InsertionCode::from_values(std::vector<int> b)
{
    const int n = static_cast<int>(b.size());
    for (int i = 1; i <= n; ++i) {
        const int bound = 2 * (n + 1 - i) - 1;
        const int value = b[static_cast<std::size_t>(i - 1)];
        if (value < 1 || value > bound)
            throw InvalidObject("code entry b_" + std::to_string(i) + " = " + std::to_string(value)
                                + " outside [1, " + std::to_string(bound) + "]");
    }
    return InsertionCode(std::move(b));
}

InsertionCode insertion_code(const WedgePath& p)
{
    const int n = p.size();
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        b[static_cast<std::size_t>(i - 1)] = p.height(n + 1 - i) + n + 1 - i;
    return InsertionCode::from_values(std::move(b));
}

WedgePath path_from_code(const InsertionCode& code)
{
    const int n = code.size();
    std::vector<int> heights(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        heights[static_cast<std::size_t>(n - i)] = code[i] - (n + 1 - i);
    return WedgePath::from_heights(std::move(heights));
}

Matching psi(const InsertionCode& code)
{
    const int n = code.size();
    std::vector<int> free(static_cast<std::size_t>(2 * n));
    for (int v = 1; v <= 2 * n; ++v)
        free[static_cast<std::size_t>(v - 1)] = v;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto target = free.begin() + code[i];
        pairs.emplace_back(free.front(), *target);
        free.erase(target);
        free.erase(free.begin());
    }
    return Matching::from_pairs(pairs, n);
}

Matching psi(const WedgePath& p) { return psi(insertion_code(p)); }

InsertionCode insertion_code(const Matching& m)
{
    std::vector<int> free(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 1; v <= m.vertex_count(); ++v)
        free[static_cast<std::size_t>(v - 1)] = v;
    std::vector<int> b;
    b.reserve(static_cast<std::size_t>(m.size()));
    while (!free.empty()) {
        const auto target = std::find(free.begin(), free.end(), m.partner(free.front()));
        b.push_back(static_cast<int>(target - free.begin()));
        free.erase(target);
        free.erase(free.begin());
    }
    return InsertionCode::from_values(std::move(b));
}

WedgePath psi_inv(const Matching& m) { return path_from_code(insertion_code(m)); }

const char* to_string(PhiCase c)
{
    switch (c) {
    case PhiCase::Aligned: return "aligned";
    case PhiCase::Crossed: return "crossed";
    case PhiCase::Nested: return "nested";
    }
    return "?";
}

namespace {

void require_two_edges(const Matching& m)
{
    if (m.size() < 2)
        throw InvalidObject("case analysis needs at least two edges, got "
                            + std::to_string(m.size()));
}

// Edges (l, partner(l)) with lo <= l <= hi whose right endpoint lies beyond r.
std::vector<Edge> edges_leaving(const Matching& m, int lo, int hi, int r)
{
    std::vector<Edge> out;
    for (int v = lo; v <= hi; ++v)
        if (m.is_left_endpoint(v) && m.partner(v) > r)
            out.push_back({v, m.partner(v)});
    return out;
}

Matching rearrange_crossed(const Matching& n2)
{
    const CrossFanContext ctx = cross_fan_context(n2);
    const int r = ctx.r;
    const auto& fan = ctx.fan;
    ArcTable t(n2);
    for (const Edge& f : fan)
        t.disconnect(f.left);
    t.insert_vertex(r);
    auto up = [r](int v) { return shifted_up(v, r); };
    for (std::size_t j = 0; j + 1 < fan.size(); ++j)
        t.connect(up(fan[j].right), up(fan[j + 1].left));
    t.connect(r, up(fan.back().right));
    t.erase_vertex(2);
    return t.to_matching();
}

Matching rearrange_nested(const Matching& n2)
{
    const NestContext ctx = nest_context(n2);
    const int r = ctx.r;
    std::vector<Edge> fan = ctx.cross_both;
    fan.insert(fan.end(), ctx.cross_outer.begin(), ctx.cross_outer.end());
    std::vector<Vertex> others = ctx.targets;
    const Vertex joined = others[static_cast<std::size_t>(ctx.s())];
    others.erase(others.begin() + ctx.s());

    ArcTable t(n2);
    t.disconnect(2);
    for (const Edge& f : fan)
        t.disconnect(f.left);
    t.insert_vertex(r);
    auto up = [r](int v) { return shifted_up(v, r); };
    t.connect(r, up(joined));
    for (std::size_t i = 0; i < fan.size(); ++i)
        t.connect(up(fan[i].right), up(others[i]));
    t.erase_vertex(2);
    return t.to_matching();
}

Matching unrearrange_crossed(const Matching& n)
{
    const int r = n.partner(1);
    const std::vector<Edge> cross = edges_leaving(n, 2, r - 1, r);
    if (cross.empty() || cross.back().left != r - 1)
        throw InvalidObject("corrupted input: crossed case without an edge at r-1");
    ArcTable t(n);
    for (const Edge& e : cross)
        t.disconnect(e.left);
    t.insert_vertex(2);
    auto up = [](int v) { return shifted_up(v, 2); };
    t.connect(2, up(cross.front().right));
    for (std::size_t j = 0; j + 1 < cross.size(); ++j)
        t.connect(up(cross[j].left), up(cross[j + 1].right));
    t.erase_vertex(up(cross.back().left));
    return t.to_matching();
}

Matching unrearrange_nested(const Matching& n)
{
    const int r = n.partner(1);
    const int u = n.partner(r - 1);
    if (u >= r - 1)
        throw InvalidObject("corrupted input: nested case without a right endpoint at r-1");
    const std::vector<Edge> cross = edges_leaving(n, 2, r - 1, r);

    std::vector<Vertex> targets;
    for (const Edge& e : cross)
        targets.push_back(e.left);
    const auto at = std::lower_bound(targets.begin(), targets.end(), u);
    const int s = static_cast<int>(at - targets.begin());
    targets.insert(at, u);
    const int p = static_cast<int>(cross.size()) - s;

    std::vector<Vertex> lefts = targets;
    const Vertex q = lefts[static_cast<std::size_t>(p)];
    lefts.erase(lefts.begin() + p);

    ArcTable t(n);
    t.disconnect(r - 1);
    for (const Edge& e : cross)
        t.disconnect(e.left);
    t.insert_vertex(2);
    auto up = [](int v) { return shifted_up(v, 2); };
    t.connect(2, up(q));
    for (std::size_t i = 0; i < cross.size(); ++i)
        t.connect(up(lefts[i]), up(cross[i].right));
    t.erase_vertex(up(r - 1));
    return t.to_matching();
}

} // namespace

PhiCase phi_case_forward(const Matching& m)
{
    require_two_edges(m);
    const int r = m.partner(1);
    if (r == 2)
        return PhiCase::Aligned;
    return m.partner(2) > r ? PhiCase::Crossed : PhiCase::Nested;
}

PhiCase phi_case_inverse(const Matching& m)
{
    require_two_edges(m);
    const int r = m.partner(1);
    if (r == 2)
        return PhiCase::Aligned;
    return m.is_left_endpoint(r - 1) ? PhiCase::Crossed : PhiCase::Nested;
}

CrossFanContext cross_fan_context(const Matching& m)
{
    if (phi_case_forward(m) != PhiCase::Crossed)
        throw InvalidObject("first two edges do not cross");
    CrossFanContext ctx;
    ctx.r = m.partner(1);
    ctx.fan = edges_leaving(m, 2, ctx.r - 1, ctx.r);
    return ctx;
}

NestContext nest_context(const Matching& m)
{
    if (phi_case_forward(m) != PhiCase::Nested)
        throw InvalidObject("first edge does not cover the second");
    NestContext ctx;
    ctx.r = m.partner(1);
    ctx.q = m.partner(2);
    ctx.cross_both = edges_leaving(m, 3, ctx.q - 1, ctx.r);
    ctx.cross_outer = edges_leaving(m, ctx.q + 1, ctx.r - 1, ctx.r);
    for (const Edge& e : ctx.cross_both)
        ctx.targets.push_back(e.left);
    ctx.targets.push_back(ctx.q);
    for (const Edge& e : ctx.cross_outer)
        ctx.targets.push_back(e.left);
    return ctx;
}

Matching rearrange_step(const Matching& n2)
{
    switch (phi_case_forward(n2)) {
    case PhiCase::Aligned: return n2;
    case PhiCase::Crossed: return rearrange_crossed(n2);
    case PhiCase::Nested: return rearrange_nested(n2);
    }
    return n2;
}

Matching unrearrange_step(const Matching& n)
{
    switch (phi_case_inverse(n)) {
    case PhiCase::Aligned: return n;
    case PhiCase::Crossed: return unrearrange_crossed(n);
    case PhiCase::Nested: return unrearrange_nested(n);
    }
    return n;
}

Matching remove_first_edge(const Matching& m)
{
    const int r = first_edge(m).right;
    ArcTable t(m);
    t.disconnect(1);
    t.erase_vertex(r);
    t.erase_vertex(1);
    return t.to_matching();
}

Matching reinsert_first_edge(const Matching& m1, int r)
{
    if (r < 2 || r > m1.vertex_count() + 2)
        throw InvalidObject("cannot reinsert a first edge ending at " + std::to_string(r));
    ArcTable t(m1);
    t.insert_vertex(1);
    t.insert_vertex(r);
    t.connect(1, r);
    return t.to_matching();
}

Matching phi(const Matching& m)
{
    if (m.size() <= 1)
        return m;
    const int r = m.partner(1);
    const Matching n1 = phi(remove_first_edge(m));
    return rearrange_step(reinsert_first_edge(n1, r));
}

Matching phi_inv(const Matching& m)
{
    if (m.size() <= 1)
        return m;
    const Matching n2 = unrearrange_step(m);
    const int r = n2.partner(1);
    const Matching m1 = phi_inv(remove_first_edge(n2));
    return reinsert_first_edge(m1, r);
}

Matching big_phi(const WedgePath& p) { return phi(psi(p)); }

WedgePath big_phi_inv(const Matching& m) { return psi_inv(phi_inv(m)); }

} // namespace wedgematch
