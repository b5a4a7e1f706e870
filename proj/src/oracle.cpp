#include "creach/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace creach {

SubsetMask mask_of(const StateSet& s) {
  SubsetMask m = 0;
  for (StateId q : s) m |= SubsetMask{1} << q;
  return m;
}

StateSet states_of(SubsetMask m, int n) {
  StateSet out;
  for (int q = 0; q < n; ++q)
    if (m & (SubsetMask{1} << q)) out.push_back(q);
  return out;
}

namespace {

// Per-letter lookup tables: the image of 8 states at a time, so applying a
// letter to a subset is a handful of table ORs instead of a bit loop.
struct LetterTables {
  int byte_count = 0;
  std::vector<std::array<SubsetMask, 256>> bytes;

  LetterTables(const Transformation& t, int n) {
    byte_count = (n + 7) / 8;
    bytes.resize(byte_count);
    for (int b = 0; b < byte_count; ++b) {
      for (int v = 0; v < 256; ++v) {
        SubsetMask img = 0;
        for (int j = 0; j < 8; ++j) {
          int q = b * 8 + j;
          if ((v >> j & 1) && q < n) img |= SubsetMask{1} << t.images[q];
        }
        bytes[b][v] = img;
      }
    }
  }

  SubsetMask apply(SubsetMask m) const {
    SubsetMask img = 0;
    for (int b = 0; b < byte_count; ++b) img |= bytes[b][(m >> (8 * b)) & 255];
    return img;
  }
};

}  // namespace

ReachabilityTable reachable_subsets(const Automaton& a, int state_cap) {
  if (a.n > state_cap)
    throw CapExceeded("oracle refuses " + std::to_string(a.n) +
                      " states (cap " + std::to_string(state_cap) +
                      "; raise with --oracle-cap or ORACLE_MAX_STATES)");
  if (a.n > 31) throw CapExceeded("oracle supports at most 31 states");
  if (a.alphabet.size() > 255) throw Error("oracle supports at most 255 letters");

  ReachabilityTable t;
  t.n = a.n;
  for (const Letter& l : a.alphabet) t.letters.push_back(l.name);

  std::vector<LetterTables> tables;
  tables.reserve(a.alphabet.size());
  for (const Letter& l : a.alphabet) tables.emplace_back(l.t, a.n);

  const std::uint64_t total = std::uint64_t{1} << a.n;
  t.visited.assign((total + 63) / 64, 0);
  t.parent.assign(total, ReachabilityTable::kNoParent);
  t.parent_letter.assign(total, 0);
  t.depth.assign(total, 0);

  auto mark = [&t](SubsetMask m) { t.visited[m >> 6] |= std::uint64_t{1} << (m & 63); };

  std::vector<SubsetMask> queue;
  queue.reserve(1024);
  SubsetMask full = t.full();
  mark(full);
  queue.push_back(full);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    SubsetMask m = queue[head];
    for (std::size_t li = 0; li < tables.size(); ++li) {
      SubsetMask img = tables[li].apply(m);
      if (t.is_reachable(img)) continue;
      mark(img);
      t.parent[img] = m;
      t.parent_letter[img] = static_cast<std::uint8_t>(li);
      t.depth[img] = t.depth[m] + 1;
      queue.push_back(img);
    }
  }
  t.reachable_count = queue.size();
  return t;
}

OracleVerdict is_completely_reachable_bruteforce(const ReachabilityTable& t,
                                                 std::size_t sample_limit) {
  OracleVerdict v;
  v.reachable_count = t.reachable_count;
  const std::uint64_t total = std::uint64_t{1} << t.n;
  v.completely_reachable = t.reachable_count == total - 1;
  if (v.completely_reachable || sample_limit == 0) return v;

  std::vector<SubsetMask> unreachable;
  for (std::uint64_t m = 1; m < total; ++m)
    if (!t.is_reachable(static_cast<SubsetMask>(m)))
      unreachable.push_back(static_cast<SubsetMask>(m));
  std::sort(unreachable.begin(), unreachable.end(),
            [](SubsetMask a, SubsetMask b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              if (pa != pb) return pa < pb;
              return a < b;
            });
  if (unreachable.size() > sample_limit) unreachable.resize(sample_limit);
  for (SubsetMask m : unreachable) v.unreachable_sample.push_back(states_of(m, t.n));
  return v;
}

OracleVerdict is_completely_reachable_bruteforce(const Automaton& a,
                                                 int state_cap,
                                                 std::size_t sample_limit) {
  return is_completely_reachable_bruteforce(reachable_subsets(a, state_cap),
                                            sample_limit);
}

Word shortest_witness(const ReachabilityTable& t, SubsetMask p) {
  if (p > t.full()) throw Error("subset out of range");
  if (!t.is_reachable(p))
    throw Error("subset " + format_states(states_of(p, t.n)) + " is not reachable");
  Word w;
  for (SubsetMask m = p; t.parent[m] != ReachabilityTable::kNoParent;
       m = t.parent[m])
    w.push_back(t.letters[t.parent_letter[m]]);
  std::reverse(w.begin(), w.end());
  return w;
}

WitnessStats witness_length_stats(const ReachabilityTable& t) {
  WitnessStats s;
  s.max_len.assign(t.n + 1, -1);
  s.exceeds_bound.assign(t.n + 1, false);
  const std::uint64_t total = std::uint64_t{1} << t.n;
  for (std::uint64_t m = 1; m < total; ++m) {
    if (!t.is_reachable(static_cast<SubsetMask>(m))) continue;
    int k = std::popcount(static_cast<SubsetMask>(m));
    int len = static_cast<int>(t.depth[m]);
    if (len > s.max_len[k]) s.max_len[k] = len;
  }
  for (int k = 1; k <= t.n; ++k) {
    if (s.max_len[k] < 0) continue;
    long long bound = 2ll * t.n * (t.n - k);
    if (s.max_len[k] > bound) {
      s.exceeds_bound[k] = true;
      s.any_exceeds = true;
    }
  }
  return s;
}

}  // namespace creach
