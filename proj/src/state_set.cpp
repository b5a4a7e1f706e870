#include "creach/state_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace creach {

StateSet normalized(StateSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const StateSet& s, StateId q) {
  return std::binary_search(s.begin(), s.end(), q);
}

bool is_subset(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const StateSet& a, const StateSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

StateSet set_intersection(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

StateSet set_difference(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::string format_states(const StateSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i] + 1;
  }
  os << '}';
  return os.str();
}

StateSet parse_states(const std::string& text, int n) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}')
      throw std::invalid_argument("unbalanced braces in subset: " + text);
    body = body.substr(1, body.size() - 2);
  }
  StateSet out;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty())
      throw std::invalid_argument("empty state in subset: " + text);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad state '" + item + "' in subset");
    }
    if (pos != item.size())
      throw std::invalid_argument("bad state '" + item + "' in subset");
    if (v < 1 || v > n)
      throw std::invalid_argument("state " + item + " out of range 1.." +
                                  std::to_string(n));
    out.push_back(v - 1);
  }
  return normalized(std::move(out));
}

}  // namespace creach
