#include "creach/rystsov.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace creach {

DefectProfile profile_of(const Transformation& t) {
  return DefectProfile{excl(t), dupl(t)};
}

DefectProfile profile_step(const DefectProfile& p, const Transformation& letter,
                           const AlmostGroupShape& shape) {
  if (letter.is_permutation())
    return DefectProfile{image(p.excluded, letter), image(p.duplicated, letter)};

  // The defect letter. The image of w is Im = Q \ excl(w); everything below
  // follows from the preimage counts of wa: a state's count under wa is the
  // sum of the w-counts of its a-preimages, and membership in excl/dupl only
  // needs to distinguish 0 / 1 / >= 2.
  int n = letter.size();
  auto [q0, q1] = shape.collapsed;

  std::vector<char> excluded_now(n, 0);
  for (StateId q : p.excluded) excluded_now[q] = 1;

  std::vector<char> hit(n, 0);
  for (StateId q = 0; q < n; ++q)
    if (!excluded_now[q]) hit[letter.images[q]] = 1;
  StateSet new_excl;
  for (StateId s = 0; s < n; ++s)
    if (!hit[s]) new_excl.push_back(s);

  StateSet new_dupl;
  // States other than d have at most one a-preimage; they are duplicated in
  // wa exactly when that preimage is duplicated in w.
  for (StateId t : p.duplicated)
    if (t != q0 && t != q1) new_dupl.push_back(letter.images[t]);
  // d collects the counts of both collapsed states.
  bool q0_alive = !excluded_now[q0];
  bool q1_alive = !excluded_now[q1];
  bool d_duplicated = false;
  if (q0_alive && q1_alive) {
    d_duplicated = true;
  } else if (q0_alive || q1_alive) {
    StateId survivor = q0_alive ? q0 : q1;
    d_duplicated = contains(p.duplicated, survivor);
  }
  if (d_duplicated) new_dupl.push_back(shape.d);
  return DefectProfile{std::move(new_excl), normalized(std::move(new_dupl))};
}

namespace {

struct ProfileHash {
  std::size_t operator()(const DefectProfile& p) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](StateId x) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    };
    for (StateId x : p.excluded) mix(x);
    mix(-1);
    for (StateId x : p.duplicated) mix(x);
    return h;
  }
};

}  // namespace

std::vector<ProfileEntry> reachable_profiles(const Automaton& a,
                                             const AlmostGroupShape& shape,
                                             int max_defect) {
  struct Node {
    DefectProfile profile;
    int parent;
    int letter;
  };
  std::vector<Node> nodes;
  std::unordered_map<DefectProfile, int, ProfileHash> index;
  nodes.push_back({DefectProfile{}, -1, -1});
  index.emplace(nodes[0].profile, 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t li = 0; li < a.alphabet.size(); ++li) {
      // nodes may reallocate inside the loop; copy the profile out first
      DefectProfile cur = nodes[head].profile;
      DefectProfile next = profile_step(cur, a.alphabet[li].t, shape);
      if (next.defect() > max_defect) continue;
      if (index.contains(next)) continue;
      index.emplace(next, static_cast<int>(nodes.size()));
      nodes.push_back({std::move(next), static_cast<int>(head),
                       static_cast<int>(li)});
    }
  }
  std::vector<ProfileEntry> out;
  out.reserve(nodes.size());
  for (const Node& node : nodes) {
    Word w;
    for (const Node* cur = &node; cur->parent >= 0; cur = &nodes[cur->parent])
      w.push_back(a.alphabet[cur->letter].name);
    std::reverse(w.begin(), w.end());
    out.push_back({node.profile, std::move(w)});
  }
  return out;
}

int RystsovLevel::vertex_of(StateId q) const {
  for (const RystsovVertex& v : vertices)
    if (contains(v.foliage, q)) return v.id;
  return -1;
}

StateSet RystsovLevel::scc_foliage(int scc_index) const {
  StateSet out;
  for (int v : sccs[scc_index]) out = set_union(out, vertices[v].foliage);
  return out;
}

namespace {

void tarjan_dfs(int v, const std::vector<std::vector<int>>& adj, int& counter,
                std::vector<int>& number, std::vector<int>& low,
                std::vector<int>& stack_pos, std::vector<int>& stack,
                std::vector<std::vector<int>>& sccs) {
  number[v] = low[v] = counter++;
  stack_pos[v] = static_cast<int>(stack.size());
  stack.push_back(v);
  for (int w : adj[v]) {
    if (number[w] == -1) {
      tarjan_dfs(w, adj, counter, number, low, stack_pos, stack, sccs);
      low[v] = std::min(low[v], low[w]);
    } else if (number[w] < number[v] && stack_pos[w] != -1) {
      low[v] = std::min(low[v], number[w]);
    }
  }
  if (low[v] == number[v]) {
    int cut = stack_pos[v];
    std::vector<int> comp(stack.begin() + cut, stack.end());
    for (int w : comp) stack_pos[w] = -1;
    stack.resize(cut);
    sccs.push_back(std::move(comp));
  }
}

// Strongly connected components, normalized: vertices ascending inside each
// component, components ordered by the smallest state in their foliage.
void finalize_level(RystsovLevel& level, StateId e) {
  int v_count = static_cast<int>(level.vertices.size());
  std::vector<std::vector<int>> adj(v_count);
  for (const RystsovEdge& edge : level.edges) adj[edge.source].push_back(edge.target);

  std::vector<int> number(v_count, -1), low(v_count, -1), stack_pos(v_count, -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int counter = 0;
  for (int v = 0; v < v_count; ++v)
    if (number[v] == -1)
      tarjan_dfs(v, adj, counter, number, low, stack_pos, stack, sccs);

  for (auto& comp : sccs) std::sort(comp.begin(), comp.end());
  std::sort(sccs.begin(), sccs.end(),
            [&](const std::vector<int>& x, const std::vector<int>& y) {
              StateId mx = level.vertices[x[0]].foliage[0];
              for (int v : x) mx = std::min(mx, level.vertices[v].foliage[0]);
              StateId my = level.vertices[y[0]].foliage[0];
              for (int v : y) my = std::min(my, level.vertices[v].foliage[0]);
              return mx < my;
            });
  level.sccs = std::move(sccs);

  int home = level.vertex_of(e);
  level.c_e_index = -1;
  for (std::size_t i = 0; i < level.sccs.size(); ++i)
    if (std::binary_search(level.sccs[i].begin(), level.sccs[i].end(), home))
      level.c_e_index = static_cast<int>(i);
}

void sort_and_assign_edges(RystsovLevel& level,
                           std::vector<RystsovEdge> candidates) {
  // One edge per (source, target); keep the shortest witness, earliest wins
  // ties. Candidate order is deterministic (carried edges first, then BFS
  // discovery order).
  std::map<std::pair<int, int>, std::size_t> best;
  std::vector<RystsovEdge> kept;
  for (auto& cand : candidates) {
    auto key = std::make_pair(cand.source, cand.target);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, kept.size());
      kept.push_back(std::move(cand));
    } else if (cand.witness.size() < kept[it->second].witness.size()) {
      kept[it->second] = std::move(cand);
    }
  }
  std::sort(kept.begin(), kept.end(),
            [](const RystsovEdge& a, const RystsovEdge& b) {
              return std::make_pair(a.source, a.target) <
                     std::make_pair(b.source, b.target);
            });
  level.edges = std::move(kept);
}

}  // namespace

RystsovLevel gamma1(const Automaton& a, const AlmostGroupShape& shape) {
  RystsovLevel level;
  level.k = 1;
  level.vertices.reserve(a.n);
  for (StateId q = 0; q < a.n; ++q)
    level.vertices.push_back({q, {}, StateSet{q}});
  std::vector<RystsovEdge> candidates;
  for (auto& entry : reachable_profiles(a, shape, 1)) {
    if (entry.profile.defect() != 1) continue;
    candidates.push_back({entry.profile.excluded[0], entry.profile.duplicated[0],
                          entry.profile, entry.witness});
  }
  sort_and_assign_edges(level, std::move(candidates));
  finalize_level(level, shape.e);
  return level;
}

StateSet d1_set(const Automaton& a, const AlmostGroupShape& shape) {
  StateSet out;
  for (auto& entry : reachable_profiles(a, shape, 1))
    if (entry.profile.excluded == StateSet{shape.e})
      out = set_union(out, entry.profile.duplicated);
  return out;
}

StateSet dk_set(const Automaton& a, const AlmostGroupShape& shape,
                const RystsovHierarchy& h, int k) {
  if (k < 1) throw std::invalid_argument("dk_set: k must be >= 1");
  StateSet leaf_c_e;
  if (k == 1) {
    leaf_c_e = StateSet{shape.e};
  } else {
    if (static_cast<int>(h.levels.size()) < k - 1)
      throw std::invalid_argument("dk_set: hierarchy not built through level " +
                                  std::to_string(k - 1));
    const RystsovLevel& prev = h.levels[k - 2];
    leaf_c_e = prev.scc_foliage(prev.c_e_index);
  }
  StateSet out;
  for (auto& entry : reachable_profiles(a, shape, k)) {
    const DefectProfile& p = entry.profile;
    if (p.defect() < 1 || p.defect() > k) continue;
    if (!contains(p.excluded, shape.e)) continue;
    if (!is_subset(p.excluded, leaf_c_e)) continue;
    out = set_union(out, p.duplicated);
  }
  return out;
}

bool translated_edges_check(const RystsovLevel& level1, const GeneratorSet& gens,
                            StateId e) {
  int n = static_cast<int>(level1.vertices.size());
  Orbit orb = orbit(gens, e, n);
  if (static_cast<int>(orb.states.size()) != n)
    throw Error("translated_edges_check requires transitive generators");
  StateSet d1;
  for (const RystsovEdge& edge : level1.edges)
    if (edge.source == e) d1.push_back(edge.target);
  d1 = normalized(std::move(d1));

  std::set<std::pair<int, int>> expected;
  for (StateId q : orb.states) {
    Permutation sigma = generator_word(gens, orb.witness.at(q), n);
    for (StateId d : d1) expected.emplace(q, sigma.fwd[d]);
  }
  std::set<std::pair<int, int>> actual;
  for (const RystsovEdge& edge : level1.edges)
    actual.emplace(edge.source, edge.target);
  return expected == actual;
}

namespace {

RystsovLevel next_level(const Automaton& a, const AlmostGroupShape& shape,
                        const RystsovLevel& cur) {
  RystsovLevel level;
  level.k = cur.k + 1;

  // Vertices are the strongly connected components of the current level.
  std::vector<int> scc_of(cur.vertices.size(), -1);
  for (std::size_t ci = 0; ci < cur.sccs.size(); ++ci)
    for (int v : cur.sccs[ci]) scc_of[v] = static_cast<int>(ci);
  for (std::size_t ci = 0; ci < cur.sccs.size(); ++ci) {
    RystsovVertex vert;
    vert.id = static_cast<int>(ci);
    vert.member_ids = cur.sccs[ci];
    for (int v : cur.sccs[ci])
      vert.foliage = set_union(vert.foliage, cur.vertices[v].foliage);
    level.vertices.push_back(std::move(vert));
  }

  std::vector<int> vertex_of_state(a.n, -1);
  for (const RystsovVertex& v : level.vertices)
    for (StateId q : v.foliage) vertex_of_state[q] = v.id;

  std::vector<RystsovEdge> candidates;
  // Carried over: edges of the previous level between different components.
  for (const RystsovEdge& edge : cur.edges) {
    int s = scc_of[edge.source], t = scc_of[edge.target];
    if (s != t) candidates.push_back({s, t, edge.profile, edge.witness});
  }
  // New edges from words of defect exactly k+1 whose excluded set sits inside
  // one foliage and whose duplicated set touches another.
  for (auto& entry : reachable_profiles(a, shape, level.k)) {
    if (entry.profile.defect() != level.k) continue;
    int source = vertex_of_state[entry.profile.excluded[0]];
    if (!is_subset(entry.profile.excluded, level.vertices[source].foliage))
      continue;
    StateSet targets;
    for (StateId d : entry.profile.duplicated) {
      int t = vertex_of_state[d];
      if (t != source) targets.push_back(t);
    }
    for (int t : normalized(std::move(targets)))
      candidates.push_back({source, t, entry.profile, entry.witness});
  }
  sort_and_assign_edges(level, std::move(candidates));
  finalize_level(level, shape.e);
  return level;
}

}  // namespace

RystsovHierarchy build_hierarchy(const Automaton& a,
                                 const AlmostGroupShape& shape) {
  RystsovHierarchy h;
  h.levels.push_back(gamma1(a, shape));
  for (;;) {
    const RystsovLevel& cur = h.levels.back();
    if (cur.strongly_connected()) {
      h.stop_reason = StopReason::StronglyConnected;
      return h;
    }
    bool big_enough = false;
    for (std::size_t ci = 0; ci < cur.sccs.size(); ++ci) {
      std::size_t leaves = 0;
      for (int v : cur.sccs[ci]) leaves += cur.vertices[v].foliage.size();
      if (static_cast<int>(leaves) >= cur.k + 1) {
        big_enough = true;
        break;
      }
    }
    if (!big_enough) {
      h.stop_reason = StopReason::NoBigEnoughComponent;
      return h;
    }
    h.levels.push_back(next_level(a, shape, cur));
  }
}

bool foliage_system_check(const RystsovLevel& level, const GeneratorSet& gens,
                          int n) {
  std::vector<int> owner(n, -1);
  std::set<Block> foliages;
  for (const RystsovVertex& v : level.vertices) {
    if (v.foliage.empty()) return false;
    for (StateId q : v.foliage) {
      if (q < 0 || q >= n || owner[q] != -1) return false;
      owner[q] = v.id;
    }
    foliages.insert(v.foliage);
  }
  for (int q = 0; q < n; ++q)
    if (owner[q] == -1) return false;
  for (const RystsovVertex& v : level.vertices) {
    try {
      BlockSystem sys = system_from_block(gens, v.foliage, n);
      std::set<Block> reproduced(sys.blocks.begin(), sys.blocks.end());
      if (reproduced != foliages) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

std::string dot_export(const RystsovLevel& level, bool edge_labels) {
  std::ostringstream os;
  os << "digraph gamma_" << level.k << " {\n";
  os << "  rankdir=LR;\n";
  for (const RystsovVertex& v : level.vertices)
    os << "  v" << v.id << " [label=\"" << format_states(v.foliage) << "\"];\n";
  for (const RystsovEdge& e : level.edges) {
    os << "  v" << e.source << " -> v" << e.target;
    if (edge_labels) os << " [label=\"" << format_word(e.witness) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace creach
