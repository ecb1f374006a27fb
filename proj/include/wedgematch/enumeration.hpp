#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wedgematch/matching.hpp"
#include "wedgematch/path.hpp"

namespace wedgematch {

inline constexpr int kDefaultMaxN = 7;

// (2n-1)!! = 1 * 3 * ... * (2n-1); 1 for n = 0.
boost::multiprecision::cpp_int double_factorial(int n);

// All of P_n in lexicographic order of (a_1, ..., a_n). A non-empty
// prefix pins a_2, a_3, ... and restricts the stream to that slice.
class PathStream {
public:
    explicit PathStream(int n, std::vector<int> prefix = {});
    std::optional<WedgePath> next();

private:
    int n_;
    std::size_t pinned_;
    std::vector<int> heights_;
    bool done_ = false;
    bool started_ = false;
};

// All of M_n, lexicographic in partner choices: the least free vertex is
// joined to each free vertex in increasing order. A prefix pins the first
// choice indices (0-based rank among free vertices).
class MatchingStream {
public:
    explicit MatchingStream(int n, std::vector<int> prefix = {});
    std::optional<Matching> next();

private:
    Matching build() const;

    int n_;
    std::size_t pinned_;
    std::vector<int> choice_;
    bool done_ = false;
    bool started_ = false;
};

void for_each_path(int n, const std::function<void(const WedgePath&)>& fn);
void for_each_matching(int n, const std::function<void(const Matching&)>& fn);

enum class Statistic { NorthSteps, Nestings, Crossings, StTotal };

const char* to_string(Statistic s);
// Throws ParseError on an unknown name.
Statistic parse_statistic(std::string_view name);

struct DistributionTable {
    int n = 0;
    Statistic statistic = Statistic::Nestings;
    std::map<int, std::uint64_t> counts;

    std::uint64_t total() const;
    // Equal counts; the statistic label is not compared.
    bool same_counts(const DistributionTable& other) const { return counts == other.counts; }
};

// Throws CapExceeded when n > max_n and InvalidObject when n < 1.
DistributionTable distribution(int n, Statistic s, int max_n = kDefaultMaxN);

struct VerifyOptions {
    int max_n = kDefaultMaxN;
    unsigned jobs = 1;
    std::size_t counterexample_limit = 10;
    // Claim-label prefixes to run; empty runs everything.
    std::vector<std::string> claims;
};

struct ClaimResult {
    std::string label;
    std::uint64_t tested = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;
};

struct VerificationReport {
    static constexpr int kFormatVersion = 1;

    int n = 0;
    std::vector<ClaimResult> checks;
    std::chrono::duration<double> elapsed{0};

    bool passed() const;
    const ClaimResult* find(std::string_view label) const;
};

struct ClaimInfo {
    std::string_view label;
    std::string_view description;
};

// Every claim the harness knows, in report order.
std::span<const ClaimInfo> claim_catalog();

// Exhaustively checks every claim over P_n and M_n. Identical output for
// any jobs value. Throws CapExceeded / InvalidObject like distribution().
VerificationReport verify_all(int n, const VerifyOptions& options = {});

// Elapsed time is only included in the text form when with_timing is set;
// the JSON form never carries it.
std::string report_to_text(const VerificationReport& report, bool with_timing = false);
std::string report_to_json(const VerificationReport& report);

} // namespace wedgematch
