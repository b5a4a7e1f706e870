#pragma once

#include <string>
#include <vector>

namespace creach {

// States are 0-indexed everywhere inside the library; all I/O renders them
// 1-indexed.
using StateId = int;

// Sorted, duplicate-free vector of states. Every helper below assumes and
// preserves this normal form.
using StateSet = std::vector<StateId>;

StateSet normalized(StateSet s);
bool contains(const StateSet& s, StateId q);
bool is_subset(const StateSet& a, const StateSet& b);
bool intersects(const StateSet& a, const StateSet& b);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersection(const StateSet& a, const StateSet& b);
StateSet set_difference(const StateSet& a, const StateSet& b);

// Brace notation with 1-indexed states, e.g. "{1,5}".
std::string format_states(const StateSet& s);

// Inverse of format_states; accepts "{1,5}" or "1,5". Throws on bad input.
StateSet parse_states(const std::string& text, int n);

}  // namespace creach
