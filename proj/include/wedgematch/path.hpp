#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

namespace wedgematch {

enum class Step : char { East = 'E', North = 'N', South = 'S' };

// Partially directed path in the wedge |y| <= x from the origin to (n, -n),
// held as the heights a_1..a_n of its east steps, -(i-1) <= a_i <= i-1.
//
// The step sequence is derived: before east step i a monotone vertical run
// moves from a_{i-1} (a_0 = 0) to a_i; after the last east step a south run
// drops from a_n to -n.
class WedgePath {
public:
    // Throws InvalidObject on an empty sequence or a bound violation,
    // naming the offending index and height.
    static WedgePath from_heights(std::vector<int> heights);

    // Walks the string from the origin. Throws ParseError on characters
    // outside {E,N,S} and InvalidObject on leaving the wedge, reversing a
    // vertical run, or not ending at (n, -n).
    static WedgePath parse_steps(std::string_view steps);

    int size() const { return static_cast<int>(heights_.size()); }
    std::span<const int> heights() const { return heights_; }
    int height(int i) const { return heights_[static_cast<std::size_t>(i - 1)]; }

    std::vector<Step> steps() const;
    std::string step_string() const;

    friend bool operator==(const WedgePath&, const WedgePath&) = default;
    friend auto operator<=>(const WedgePath&, const WedgePath&) = default;

private:
    explicit WedgePath(std::vector<int> heights) : heights_(std::move(heights)) {}

    std::vector<int> heights_;
};

int north_steps(const WedgePath& p);
int south_steps(const WedgePath& p);

// South steps taken on the line x = n, i.e. a_n + n.
int final_south_run(const WedgePath& p);

bool is_dyck(const WedgePath& p);

// Finest split at returns to y = -x after which the remainder, translated
// to the origin, is again a wedge path. Pieces are translated to the origin.
std::vector<WedgePath> components(const WedgePath& p);

// Inverse of components.
WedgePath concatenate(std::span<const WedgePath> parts);

// { i : step 2n+1-i of p is South }. Throws InvalidObject unless p is Dyck.
std::set<int> reversed_south_positions(const WedgePath& p);

} // namespace wedgematch
