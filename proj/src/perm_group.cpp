#include "creach/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace creach {

Permutation Permutation::from(const Transformation& t) {
  if (!t.is_permutation())
    throw Error("transformation is not a permutation (defect " +
                std::to_string(defect(t)) + ")");
  Permutation p;
  p.fwd = t.images;
  p.inv.resize(t.size());
  for (int q = 0; q < t.size(); ++q) p.inv[t.images[q]] = q;
  return p;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.fwd.resize(n);
  p.inv.resize(n);
  for (int q = 0; q < n; ++q) p.fwd[q] = p.inv[q] = q;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out;
  int n = p.size();
  out.fwd.resize(n);
  out.inv.resize(n);
  for (int i = 0; i < n; ++i) out.fwd[i] = q.fwd[p.fwd[i]];
  for (int i = 0; i < n; ++i) out.inv[out.fwd[i]] = i;
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out;
  out.fwd = p.inv;
  out.inv = p.fwd;
  return out;
}

StateSet image(const StateSet& s, const Permutation& p) {
  StateSet out;
  out.reserve(s.size());
  for (StateId q : s) out.push_back(p.fwd[q]);
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorSet shape_generators(const Automaton& a, const AlmostGroupShape& shape) {
  GeneratorSet gens;
  for (const std::string& name : shape.perm_letters)
    gens.push_back({name, Permutation::from(a.letter(name))});
  return gens;
}

Orbit orbit(const GeneratorSet& gens, StateId q, int n) {
  std::vector<int> parent(n, -1), via(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<StateId> queue;
  seen[q] = 1;
  queue.push_back(q);
  Orbit out;
  while (!queue.empty()) {
    StateId cur = queue.front();
    queue.pop_front();
    out.states.push_back(cur);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      StateId next = gens[gi].perm.fwd[cur];
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = cur;
        via[next] = static_cast<int>(gi);
        queue.push_back(next);
      }
    }
  }
  std::sort(out.states.begin(), out.states.end());
  for (StateId s : out.states) {
    Word w;
    for (StateId cur = s; parent[cur] >= 0; cur = parent[cur])
      w.push_back(gens[via[cur]].name);
    std::reverse(w.begin(), w.end());
    out.witness[s] = std::move(w);
  }
  return out;
}

bool is_transitive(const GeneratorSet& gens, int n) {
  if (n <= 1) return true;
  if (gens.empty()) return false;
  return static_cast<int>(orbit(gens, 0, n).states.size()) == n;
}

Permutation generator_word(const GeneratorSet& gens, const Word& w, int n) {
  Permutation p = Permutation::identity(n);
  for (const std::string& name : w) {
    const NamedPerm* g = nullptr;
    for (const NamedPerm& cand : gens)
      if (cand.name == name) g = &cand;
    if (!g) throw Error("unknown generator '" + name + "'");
    p = compose(p, g->perm);
  }
  return p;
}

namespace {

// Union-find with the absorbed root reported, for Atkinson's refinement.
struct UnionFind {
  std::vector<int> parent, rank_;
  explicit UnionFind(int n) : parent(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns the root that stopped being a representative, or -1 if already
  // in the same class.
  int unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return -1;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return rb;
  }
};

}  // namespace

Block minimal_block(const GeneratorSet& gens, const StateSet& seed, int n) {
  if (seed.empty()) throw std::invalid_argument("minimal_block: empty seed");
  if (!is_transitive(gens, n))
    throw Error("minimal_block requires transitive generators");
  UnionFind uf(n);
  std::vector<int> queue;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    int lost = uf.unite(seed[0], seed[i]);
    if (lost >= 0) queue.push_back(lost);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int gamma = queue[head];
    int delta = uf.find(gamma);
    for (const NamedPerm& g : gens) {
      int lost = uf.unite(g.perm.fwd[gamma], g.perm.fwd[delta]);
      if (lost >= 0) queue.push_back(lost);
    }
  }
  Block out;
  int root = uf.find(seed[0]);
  for (int q = 0; q < n; ++q)
    if (uf.find(q) == root) out.push_back(q);
  return out;
}

std::vector<Block> blocks_containing(const GeneratorSet& gens, StateId e, int n,
                                     bool include_trivial, std::size_t cap) {
  if (!is_transitive(gens, n))
    throw Error("blocks_containing requires transitive generators");
  std::set<Block> seen;
  std::vector<Block> items;
  auto add = [&](Block b) {
    if (seen.insert(b).second) {
      items.push_back(std::move(b));
      if (items.size() > cap)
        throw CapExceeded("block lattice too large (cap " +
                          std::to_string(cap) + ")");
    }
  };
  for (StateId q = 0; q < n; ++q)
    if (q != e) add(minimal_block(gens, {std::min(e, q), std::max(e, q)}, n));
  // Join-closure: every block containing e is a join of minimal two-point
  // blocks, and the join of two blocks is the minimal block of their union.
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (is_subset(items[j], items[i]) || is_subset(items[i], items[j]))
        continue;
      add(minimal_block(gens, set_union(items[i], items[j]), n));
    }
  }
  std::vector<Block> out(seen.begin(), seen.end());
  std::erase_if(out, [&](const Block& b) {
    return static_cast<int>(b.size()) == n;  // Q is trivial
  });
  if (include_trivial) {
    out.push_back(Block{e});
    Block q(n);
    for (int i = 0; i < n; ++i) q[i] = i;
    out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int BlockSystem::index_of(StateId q) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (contains(blocks[i], q)) return static_cast<int>(i);
  return -1;
}

BlockSystem system_from_block(const GeneratorSet& gens, const Block& b, int n) {
  if (b.empty()) throw std::invalid_argument("system_from_block: empty block");
  std::vector<Block> blocks{b};
  std::vector<int> owner(n, -1);
  for (StateId q : b) owner[q] = 0;
  for (std::size_t head = 0; head < blocks.size(); ++head) {
    Block current = blocks[head];  // copy: blocks may reallocate
    for (const NamedPerm& g : gens) {
      Block img = image(current, g.perm);
      int at = owner[img[0]];
      if (at >= 0) {
        if (blocks[at] != img)
          throw Error("not a block: image " + format_states(img) +
                      " partially overlaps " + format_states(blocks[at]));
        continue;
      }
      for (StateId q : img)
        if (owner[q] != -1)
          throw Error("not a block: image " + format_states(img) +
                      " partially overlaps " + format_states(blocks[owner[q]]));
      int idx = static_cast<int>(blocks.size());
      for (StateId q : img) owner[q] = idx;
      blocks.push_back(std::move(img));
    }
  }
  std::size_t covered = 0;
  for (const Block& blk : blocks) covered += blk.size();
  if (static_cast<int>(covered) != n)
    throw Error("block orbit covers only " + std::to_string(covered) + " of " +
                std::to_string(n) + " states (group not transitive)");
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x[0] < y[0]; });
  return BlockSystem{std::move(blocks)};
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<StateId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (StateId x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

GroupElements enumerate_group(const GeneratorSet& gens, int n, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("enumerate_group: cap must be >= 1");
  GroupElements out;
  std::unordered_set<std::vector<StateId>, VecHash> seen;
  out.elems.push_back(Permutation::identity(n));
  seen.insert(out.elems.back().fwd);
  for (std::size_t head = 0; head < out.elems.size(); ++head) {
    for (const NamedPerm& g : gens) {
      Permutation next = compose(out.elems[head], g.perm);
      if (seen.contains(next.fwd)) continue;
      if (out.elems.size() >= cap) {
        out.complete = false;
        return out;
      }
      seen.insert(next.fwd);
      out.elems.push_back(std::move(next));
    }
  }
  out.complete = true;
  return out;
}

GroupElements setwise_stabilizer(const GroupElements& g, const StateSet& p) {
  if (!g.complete)
    throw std::invalid_argument("setwise_stabilizer: incomplete enumeration");
  GroupElements out;
  out.complete = true;
  for (const Permutation& s : g.elems)
    if (image(p, s) == p) out.elems.push_back(s);
  return out;
}

GroupElements core_of_system(const GroupElements& g, const BlockSystem& sys) {
  if (!g.complete)
    throw std::invalid_argument("core_of_system: incomplete enumeration");
  GroupElements out;
  out.complete = true;
  for (const Permutation& s : g.elems) {
    bool fixes_all = true;
    for (const Block& b : sys.blocks) {
      if (image(b, s) != b) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) out.elems.push_back(s);
  }
  return out;
}

bool is_core_transitive_on(const GroupElements& core, const Block& b) {
  if (b.empty()) throw std::invalid_argument("is_core_transitive_on: empty block");
  int n = core.elems.empty() ? b.back() + 1 : core.elems.front().size();
  std::vector<char> seen(n, 0);
  std::deque<StateId> queue;
  seen[b[0]] = 1;
  queue.push_back(b[0]);
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const Permutation& s : core.elems) {
      StateId next = s.fwd[q];
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  for (StateId q : b)
    if (!seen[q]) return false;
  return true;
}

bool is_primitive(const GeneratorSet& gens, int n) {
  if (!is_transitive(gens, n)) return false;
  for (StateId q = 1; q < n; ++q)
    if (static_cast<int>(minimal_block(gens, {0, q}, n).size()) != n)
      return false;
  return true;
}

}  // namespace creach
