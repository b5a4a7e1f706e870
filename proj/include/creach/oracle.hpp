#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "creach/automaton.hpp"

namespace creach {

inline constexpr int kDefaultOracleStateCap = 24;

// One bit per state; bit q is state q.
using SubsetMask = std::uint32_t;

SubsetMask mask_of(const StateSet& s);
StateSet states_of(SubsetMask m, int n);

// Ground truth by breadth-first search over the power set from the full
// state set. Flat arrays indexed by mask; refuse n above the cap.
struct ReachabilityTable {
  int n = 0;
  std::vector<std::string> letters;
  std::vector<std::uint64_t> visited;       // bit per subset
  std::vector<SubsetMask> parent;           // kNoParent when unset
  std::vector<std::uint8_t> parent_letter;  // index into letters
  std::vector<std::uint32_t> depth;         // shortest witness length
  std::uint64_t reachable_count = 0;

  static constexpr SubsetMask kNoParent = 0xffffffffu;

  SubsetMask full() const {
    return static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
  }
  bool is_reachable(SubsetMask m) const {
    return (visited[m >> 6] >> (m & 63)) & 1u;
  }
};

// Throws CapExceeded when a.n exceeds state_cap (or the 31-state mask limit).
ReachabilityTable reachable_subsets(const Automaton& a,
                                    int state_cap = kDefaultOracleStateCap);

struct OracleVerdict {
  bool completely_reachable = false;
  std::uint64_t reachable_count = 0;
  // Unreachable non-empty subsets sorted by size then value, truncated to the
  // sample limit.
  std::vector<StateSet> unreachable_sample;
};

OracleVerdict is_completely_reachable_bruteforce(const ReachabilityTable& t,
                                                 std::size_t sample_limit);
OracleVerdict is_completely_reachable_bruteforce(
    const Automaton& a, int state_cap = kDefaultOracleStateCap,
    std::size_t sample_limit = 16);

// Shortest word with Q . w = p; throws Error when p is not reachable.
Word shortest_witness(const ReachabilityTable& t, SubsetMask p);

struct WitnessStats {
  // max_len[k] (1 <= k <= n) is the longest shortest witness over reachable
  // subsets of size k; -1 when no subset of that size is reachable.
  std::vector<int> max_len;
  std::vector<bool> exceeds_bound;  // max_len[k] > 2 n (n - k)
  bool any_exceeds = false;
};

WitnessStats witness_length_stats(const ReachabilityTable& t);

}  // namespace creach
