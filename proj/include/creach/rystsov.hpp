#pragma once

#include <compare>
#include <string>
#include <vector>

#include "creach/automaton.hpp"
#include "creach/perm_group.hpp"

namespace creach {

// The pair (excl, dupl) of some word. This is the whole BFS state for edge
// discovery: both components transform deterministically under each letter,
// so words never need to be enumerated.
struct DefectProfile {
  StateSet excluded;
  StateSet duplicated;

  int defect() const { return static_cast<int>(excluded.size()); }
  bool operator==(const DefectProfile&) const = default;
  auto operator<=>(const DefectProfile&) const = default;
};

DefectProfile profile_of(const Transformation& t);

// Profile of wx from the profile of w. The letter must be a permutation or
// the shape's defect letter.
DefectProfile profile_step(const DefectProfile& p, const Transformation& letter,
                           const AlmostGroupShape& shape);

struct ProfileEntry {
  DefectProfile profile;
  Word witness;  // shortest, ties by alphabet order
};

// Every profile of a word whose defect stays <= max_defect, in BFS discovery
// order. Complete: defect is monotone along prefixes, so cutting branches at
// |excl| > max_defect loses nothing at or below the cutoff.
std::vector<ProfileEntry> reachable_profiles(const Automaton& a,
                                             const AlmostGroupShape& shape,
                                             int max_defect);

struct RystsovVertex {
  int id = 0;
  std::vector<int> member_ids;  // previous-level vertex ids; empty at level 1
  StateSet foliage;
};

struct RystsovEdge {
  int source = 0;
  int target = 0;
  DefectProfile profile;
  Word witness;
};

struct RystsovLevel {
  int k = 0;
  std::vector<RystsovVertex> vertices;
  std::vector<RystsovEdge> edges;  // sorted by (source, target), deduplicated
  // Partition of vertex ids into strongly connected components, ordered by
  // the smallest state in each component's foliage.
  std::vector<std::vector<int>> sccs;
  int c_e_index = -1;  // index into sccs of the component containing e

  bool strongly_connected() const { return sccs.size() == 1; }
  int vertex_of(StateId q) const;  // -1 if no foliage contains q
  StateSet scc_foliage(int scc_index) const;
};

enum class StopReason { StronglyConnected, NoBigEnoughComponent };

struct RystsovHierarchy {
  std::vector<RystsovLevel> levels;
  StopReason stop_reason = StopReason::StronglyConnected;

  const RystsovLevel& final_level() const { return levels.back(); }
};

// Level 1: vertices are the states, one edge p -> q per reachable defect-1
// profile ({p},{q}).
RystsovLevel gamma1(const Automaton& a, const AlmostGroupShape& shape);

// Targets of the initial edges out of e.
StateSet d1_set(const Automaton& a, const AlmostGroupShape& shape);

// Union of dupl over reachable profiles with |excl| <= k and
// e in excl subset of leaf(C_e) at level k-1. Requires levels 1..k-1 built.
StateSet dk_set(const Automaton& a, const AlmostGroupShape& shape,
                const RystsovHierarchy& h, int k);

// Cross-check for level 1: the edge set must equal the G-translates of the
// initial edges out of e. Requires transitive generators.
bool translated_edges_check(const RystsovLevel& level1, const GeneratorSet& gens,
                            StateId e);

// Builds levels until the graph is strongly connected or no component is big
// enough (|foliage| >= k+1).
RystsovHierarchy build_hierarchy(const Automaton& a,
                                 const AlmostGroupShape& shape);

// Foliages partition Q and each one is a block whose system reproduces the
// partition.
bool foliage_system_check(const RystsovLevel& level, const GeneratorSet& gens,
                          int n);

// Deterministic DOT rendering; vertex labels are 1-indexed foliages, edge
// labels (optional) the witness words.
std::string dot_export(const RystsovLevel& level, bool edge_labels);

}  // namespace creach
