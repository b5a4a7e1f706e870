#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "creach/automaton.hpp"
#include "creach/oracle.hpp"
#include "creach/perm_group.hpp"
#include "creach/rystsov.hpp"

#include <nlohmann/json_fwd.hpp>

namespace creach {

enum class Answer { CompletelyReachable, NotCompletelyReachable };

enum class DecidedBy {
  Transitivity,              // G not transitive (necessary condition)
  InvariantBlock,            // a-invariant block containing e found
  StronglyConnectedLevel,    // hierarchy strongly connected at some level
  CoreTransitiveInvariance,  // core-transitivity theorem applied
  Oracle,                    // power-set BFS fallback
};

struct Verdict {
  Answer answer = Answer::CompletelyReachable;
  DecidedBy decided_by = DecidedBy::Oracle;
  int level = 0;                   // StronglyConnectedLevel / CoreTransitiveInvariance
  StateSet invariant_block;        // InvariantBlock / CoreTransitiveInvariance
  StateSet unreachable_complement; // complement of the invariant block
  std::uint64_t reachable_count = 0;          // Oracle
  std::vector<StateSet> unreachable_sample;   // Oracle, not-CR only
};

struct LevelSummary {
  int k = 0;
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<StateSet> scc_foliages;
  StateSet c_e_foliage;
};

struct CoreLevelResult {
  int level = 0;
  std::uint64_t core_size = 0;
  bool transitive_on_c_e = false;
};

struct PipelineReport {
  std::string source;  // input path; set by the CLI
  int n = 0;
  AlmostGroupShape shape;          // of the input automaton
  Word standardization_witness;    // empty when already standardized
  bool transitive = false;
  // Nontrivial blocks containing e; absent when intransitive or capped.
  std::optional<std::vector<Block>> blocks_containing_e;
  std::optional<StateSet> invariant_block;  // first a-invariant block found
  std::vector<LevelSummary> levels;
  std::optional<StopReason> stop_reason;
  std::vector<CoreLevelResult> core_results;
  std::vector<std::string> warnings;
  bool theory_inconclusive = false;
  std::optional<Verdict> verdict;
};

struct DecideOptions {
  bool oracle_fallback = true;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t block_lattice_cap = kDefaultBlockLatticeCap;
  int oracle_state_cap = kDefaultOracleStateCap;
  std::size_t unreachable_sample_limit = 16;
};

struct DecisionResult {
  // Empty exactly when the theory is inconclusive and the oracle fallback is
  // disabled or refused by the state cap.
  std::optional<Verdict> verdict;
  PipelineReport report;
};

// Necessary condition: G transitive and no nontrivial a-invariant block
// containing e. Returns the refuting verdict or nullopt (pass). A block
// lattice cap overflow downgrades to pass with a warning on the report.
std::optional<Verdict> necessary_check(const Automaton& a,
                                       const AlmostGroupShape& shape,
                                       const GeneratorSet& gens,
                                       std::size_t block_lattice_cap,
                                       PipelineReport* report);

// Sufficient condition: a strongly connected final level proves complete
// reachability.
std::optional<Verdict> sufficient_check(const RystsovHierarchy& h);

// If every level's core is transitive on the component of e, the final
// C_e foliage is a-invariant and the automaton is not completely reachable.
// Incomplete group enumeration downgrades to pass with a warning.
std::optional<Verdict> core_invariance_check(const Automaton& a,
                                             const AlmostGroupShape& shape,
                                             const GeneratorSet& gens,
                                             const RystsovHierarchy& h,
                                             std::size_t group_cap,
                                             PipelineReport* report);

// Full pipeline: classify, standardize, necessary, hierarchy, sufficient,
// core invariance, oracle fallback. Shape errors propagate.
DecisionResult decide(const Automaton& a, const DecideOptions& options = {});

// One-line human rendering, e.g.
// "completely reachable (strongly connected at level 2)".
std::string verdict_line(const Verdict& v);

// Multi-line human rendering of the whole report.
std::string format_report(const PipelineReport& r);

// Stable JSON schema; documented in the README.
nlohmann::json report_to_json(const PipelineReport& r);

}  // namespace creach
