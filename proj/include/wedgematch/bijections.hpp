#pragma once

#include <vector>

#include "wedgematch/matching.hpp"
#include "wedgematch/path.hpp"

namespace wedgematch {

// b-sequence driving the insertion construction: 1 <= b_i <= 2(n+1-i) - 1.
class InsertionCode {
public:
    // Throws InvalidObject naming the first out-of-bounds entry.
    static InsertionCode from_values(std::vector<int> b);

    int size() const { return static_cast<int>(b_.size()); }
    int operator[](int i) const { return b_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& values() const { return b_; }

    friend bool operator==(const InsertionCode&, const InsertionCode&) = default;

private:
    explicit InsertionCode(std::vector<int> b) : b_(std::move(b)) {}

    std::vector<int> b_;
};

// b_i = a_{n+1-i} + n + 1 - i.
InsertionCode insertion_code(const WedgePath& p);
WedgePath path_from_code(const InsertionCode& code);

// psi: for i = 1..n, join the least free vertex to the b_i-th free vertex
// on its right.
Matching psi(const WedgePath& p);
Matching psi(const InsertionCode& code);
InsertionCode insertion_code(const Matching& m);
WedgePath psi_inv(const Matching& m);

enum class PhiCase { Aligned, Crossed, Nested };

const char* to_string(PhiCase c);

// Relation of e_1 and e_2 in a matching with n >= 2. Throws InvalidObject
// for n < 2.
PhiCase phi_case_forward(const Matching& m);

// Which forward case produced m: Aligned when the first edge is (1,2),
// otherwise Crossed when vertex r-1 is a left endpoint and Nested when it
// is a right endpoint (r = partner of 1).
PhiCase phi_case_inverse(const Matching& m);

// Edges f_2..f_k crossing e_1 = (1, r), ordered by left endpoint; the first
// one is e_2 = (2, q) with q > r.
struct CrossFanContext {
    int r = 0;
    std::vector<Edge> fan;
};

// e_1 = (1, r) covers e_2 = (2, q). cross_both holds the edges crossing both
// (left endpoint in (2, q)), cross_outer those crossing e_1 only (left
// endpoint in (q, r)). targets lists their left endpoints with q merged in,
// ascending, so targets[cross_both.size()] == q.
struct NestContext {
    int r = 0;
    int q = 0;
    std::vector<Edge> cross_both;
    std::vector<Edge> cross_outer;
    std::vector<Vertex> targets;

    int p() const { return static_cast<int>(cross_both.size()); }
    int s() const { return static_cast<int>(cross_outer.size()); }
};

CrossFanContext cross_fan_context(const Matching& m);
NestContext nest_context(const Matching& m);

// Single rearrangement step applied to N_2 (the recursive result with e_1
// put back), and its inverse. Both keep the first edge at (1, r).
Matching rearrange_step(const Matching& n2);
Matching unrearrange_step(const Matching& n);

// phi keeps the first edge and satisfies nestings(phi(m)) == st_total(m).
Matching phi(const Matching& m);
Matching phi_inv(const Matching& m);

// Phi = phi o psi, sending north steps to nestings.
Matching big_phi(const WedgePath& p);
WedgePath big_phi_inv(const Matching& m);

// Removes e_1 = (1, r) and renumbers; reinsert_first_edge(m1, r) undoes it.
Matching remove_first_edge(const Matching& m);
Matching reinsert_first_edge(const Matching& m1, int r);

} // namespace wedgematch
