#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "creach/automaton.hpp"

namespace creach {

// Bijection with its inverse kept alongside.
struct Permutation {
  std::vector<StateId> fwd;
  std::vector<StateId> inv;

  // Throws Error if t is not bijective.
  static Permutation from(const Transformation& t);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(fwd.size()); }
  StateId operator()(StateId q) const { return fwd[q]; }
  StateId pre(StateId q) const { return inv[q]; }
  bool operator==(const Permutation& o) const { return fwd == o.fwd; }
};

Permutation compose(const Permutation& p, const Permutation& q);  // p then q
Permutation inverse(const Permutation& p);
StateSet image(const StateSet& s, const Permutation& p);

struct NamedPerm {
  std::string name;
  Permutation perm;
};

// The letters of Sigma_0, in alphabet order.
using GeneratorSet = std::vector<NamedPerm>;

GeneratorSet shape_generators(const Automaton& a, const AlmostGroupShape& shape);

struct Orbit {
  StateSet states;
  // Shortest witness word over the generators per orbit member; ties broken
  // by generator order.
  std::map<StateId, Word> witness;
};

Orbit orbit(const GeneratorSet& gens, StateId q, int n);
bool is_transitive(const GeneratorSet& gens, int n);

// Evaluates a word over generator names as a permutation.
Permutation generator_word(const GeneratorSet& gens, const Word& w, int n);

using Block = StateSet;

// Smallest block of <gens> containing the seed, by union-find refinement.
// Requires a transitive generator set (the block theory assumes it).
Block minimal_block(const GeneratorSet& gens, const StateSet& seed, int n);

inline constexpr std::size_t kDefaultBlockLatticeCap = 4096;

// All blocks containing e: the join-closure of the minimal two-point blocks
// through e, joined by B, C -> minimal_block(B u C). Sorted by size, then
// lexicographically. Trivial blocks ({e} and Q) only when include_trivial.
// Throws CapExceeded when the closure grows past cap.
std::vector<Block> blocks_containing(const GeneratorSet& gens, StateId e, int n,
                                     bool include_trivial,
                                     std::size_t cap = kDefaultBlockLatticeCap);

struct BlockSystem {
  std::vector<Block> blocks;  // disjoint, cover Q, ordered by smallest member
  int index_of(StateId q) const;  // -1 if absent
  bool operator==(const BlockSystem&) const = default;
};

// Orbit of b under the generators as a partition of Q. Throws Error when an
// image partially overlaps a member (b is not a block) or the orbit does not
// cover Q; this doubles as the block-validity test.
BlockSystem system_from_block(const GeneratorSet& gens, const Block& b, int n);

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

// Explicit carrier for the generated group; breadth-first order from the
// identity.
struct GroupElements {
  std::vector<Permutation> elems;
  bool complete = false;
};

GroupElements enumerate_group(const GeneratorSet& gens, int n,
                              std::size_t cap = kDefaultGroupCap);

// { s in G : P . s = P }. Requires a complete enumeration.
GroupElements setwise_stabilizer(const GroupElements& g, const StateSet& p);

// Kernel of the induced action on the blocks: elements fixing every block
// setwise. Requires a complete enumeration.
GroupElements core_of_system(const GroupElements& g, const BlockSystem& sys);

bool is_core_transitive_on(const GroupElements& core, const Block& b);

bool is_primitive(const GeneratorSet& gens, int n);

}  // namespace creach
