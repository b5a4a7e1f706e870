#include "creach/automaton.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace creach {

bool Transformation::is_permutation() const {
  std::vector<char> hit(images.size(), 0);
  for (StateId q : images) {
    if (hit[q]) return false;
    hit[q] = 1;
  }
  return true;
}

Transformation Transformation::identity(int n) {
  Transformation t;
  t.images.resize(n);
  for (int q = 0; q < n; ++q) t.images[q] = q;
  return t;
}

Transformation compose(const Transformation& t, const Transformation& u) {
  if (t.size() != u.size())
    throw std::invalid_argument("compose: length mismatch (" +
                                std::to_string(t.size()) + " vs " +
                                std::to_string(u.size()) + ")");
  Transformation out;
  out.images.resize(t.size());
  for (int q = 0; q < t.size(); ++q) out.images[q] = u.images[t.images[q]];
  return out;
}

StateSet image(const StateSet& s, const Transformation& t) {
  StateSet out;
  out.reserve(s.size());
  for (StateId q : s) out.push_back(t.images[q]);
  return normalized(std::move(out));
}

namespace {

std::vector<int> preimage_counts(const Transformation& t) {
  std::vector<int> counts(t.size(), 0);
  for (StateId q : t.images) ++counts[q];
  return counts;
}

}  // namespace

StateSet excl(const Transformation& t) {
  auto counts = preimage_counts(t);
  StateSet out;
  for (int q = 0; q < t.size(); ++q)
    if (counts[q] == 0) out.push_back(q);
  return out;
}

StateSet dupl(const Transformation& t) {
  auto counts = preimage_counts(t);
  StateSet out;
  for (int q = 0; q < t.size(); ++q)
    if (counts[q] >= 2) out.push_back(q);
  return out;
}

int defect(const Transformation& t) {
  auto counts = preimage_counts(t);
  return static_cast<int>(std::count(counts.begin(), counts.end(), 0));
}

std::pair<StateId, StateId> coll(const Transformation& t) {
  auto counts = preimage_counts(t);
  int zeros = static_cast<int>(std::count(counts.begin(), counts.end(), 0));
  if (zeros != 1)
    throw std::invalid_argument("coll: transformation has defect " +
                                std::to_string(zeros) + ", need 1");
  StateId doubled = -1;
  for (int q = 0; q < t.size(); ++q)
    if (counts[q] == 2) doubled = q;
  std::pair<StateId, StateId> pair{-1, -1};
  for (int q = 0; q < t.size(); ++q) {
    if (t.images[q] == doubled) {
      if (pair.first < 0)
        pair.first = q;
      else
        pair.second = q;
    }
  }
  return pair;
}

std::string format_word(const Word& w) {
  bool single = std::all_of(w.begin(), w.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += ' ';
    out += w[i];
  }
  return out;
}

const Transformation* Automaton::find_letter(const std::string& name) const {
  for (const Letter& l : alphabet)
    if (l.name == name) return &l.t;
  return nullptr;
}

const Transformation& Automaton::letter(const std::string& name) const {
  const Transformation* t = find_letter(name);
  if (!t) throw Error("unknown letter '" + name + "'");
  return *t;
}

int Automaton::letter_index(const std::string& name) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i].name == name) return static_cast<int>(i);
  return -1;
}

Transformation word_transformation(const Automaton& a, const Word& w) {
  Transformation t = Transformation::identity(a.n);
  for (const std::string& name : w) t = compose(t, a.letter(name));
  return t;
}

AlmostGroupShape classify_shape(const Automaton& a) {
  AlmostGroupShape shape;
  const Letter* defect_letter = nullptr;
  for (const Letter& l : a.alphabet) {
    if (l.t.is_permutation()) {
      shape.perm_letters.push_back(l.name);
      continue;
    }
    if (defect_letter)
      throw ShapeError("letters '" + defect_letter->name + "' and '" + l.name +
                       "' are both non-permutations; need exactly one");
    defect_letter = &l;
  }
  if (!defect_letter) throw ShapeError("no defect-1 letter");
  int d = defect(defect_letter->t);
  if (d != 1)
    throw ShapeError("letter '" + defect_letter->name + "' has defect " +
                     std::to_string(d) + ", need 1");
  if (a.defect_letter_hint && *a.defect_letter_hint != defect_letter->name)
    throw ShapeError("defect-letter declaration names '" +
                     *a.defect_letter_hint + "' but the defect-1 letter is '" +
                     defect_letter->name + "'");
  shape.defect_letter = defect_letter->name;
  shape.e = excl(defect_letter->t)[0];
  shape.d = dupl(defect_letter->t)[0];
  shape.collapsed = coll(defect_letter->t);
  shape.standardized =
      shape.e == shape.collapsed.first || shape.e == shape.collapsed.second;
  return shape;
}

std::pair<Automaton, Word> standardize(const Automaton& a,
                                       const AlmostGroupShape& shape) {
  if (shape.standardized) return {a, Word{}};

  // Breadth-first orbit of e over Sigma_0 with witness words; the first
  // collapsed state reached gives a shortest u.
  std::vector<int> parent(a.n, -1);
  std::vector<int> via(a.n, -1);
  std::vector<char> seen(a.n, 0);
  std::deque<StateId> queue;
  seen[shape.e] = 1;
  queue.push_back(shape.e);
  StateId hit = -1;
  while (!queue.empty() && hit < 0) {
    StateId q = queue.front();
    queue.pop_front();
    if (q == shape.collapsed.first || q == shape.collapsed.second) {
      hit = q;
      break;
    }
    for (const std::string& name : shape.perm_letters) {
      StateId r = a.letter(name).images[q];
      if (!seen[r]) {
        seen[r] = 1;
        parent[r] = q;
        via[r] = a.letter_index(name);
        queue.push_back(r);
      }
    }
  }
  if (hit < 0)
    throw ShapeError(
        "cannot standardize: no permutation word maps the excluded state into "
        "the collapsed pair");
  Word u;
  for (StateId q = hit; parent[q] >= 0; q = parent[q])
    u.push_back(a.alphabet[via[q]].name);
  std::reverse(u.begin(), u.end());

  Automaton out = a;
  Transformation prefix = word_transformation(a, u);
  for (Letter& l : out.alphabet)
    if (l.name == shape.defect_letter) l.t = compose(prefix, l.t);
  return {out, u};
}

namespace {

struct Token {
  std::string text;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

StateId parse_state(const std::string& tok, int n, int lineno) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected a state number, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(lineno, "expected a state number, got '" + tok + "'");
  if (v < 1 || v > n)
    throw ParseError(lineno, "state " + tok + " out of range 1.." +
                                 std::to_string(n));
  return v - 1;
}

Transformation parse_cycles(const std::string& spec, int n, int lineno) {
  Transformation t = Transformation::identity(n);
  std::vector<char> moved(n, 0);
  std::size_t i = 0;
  while (i < spec.size()) {
    if (spec[i] != '(')
      throw ParseError(lineno, "expected '(' in cycle notation");
    std::size_t close = spec.find(')', i);
    if (close == std::string::npos)
      throw ParseError(lineno, "unbalanced '(' in cycle notation");
    std::string body = spec.substr(i + 1, close - i - 1);
    std::vector<StateId> cycle;
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ','))
      cycle.push_back(parse_state(item, n, lineno));
    if (cycle.empty()) throw ParseError(lineno, "empty cycle");
    for (StateId q : cycle) {
      if (moved[q])
        throw ParseError(lineno, "state " + std::to_string(q + 1) +
                                     " appears in two cycles");
      moved[q] = 1;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j)
      t.images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    i = close + 1;
  }
  return t;
}

}  // namespace

Automaton parse_automaton(const std::string& text) {
  Automaton a;
  bool have_states = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "states") {
      if (have_states) throw ParseError(lineno, "duplicate 'states' line");
      if (toks.size() != 2) throw ParseError(lineno, "usage: states <n>");
      try {
        a.n = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad state count '" + toks[1] + "'");
      }
      if (a.n < 1) throw ParseError(lineno, "state count must be >= 1");
      have_states = true;
      continue;
    }
    if (!have_states)
      throw ParseError(lineno, "'states <n>' must come before '" + toks[0] + "'");
    if (toks[0] == "letter") {
      if (toks.size() < 3)
        throw ParseError(lineno, "usage: letter <name> images|cycles ...");
      const std::string& name = toks[1];
      if (a.find_letter(name))
        throw ParseError(lineno, "duplicate letter name '" + name + "'");
      Letter l;
      l.name = name;
      if (toks[2] == "images") {
        if (static_cast<int>(toks.size()) - 3 != a.n)
          throw ParseError(lineno, "expected " + std::to_string(a.n) +
                                       " images, got " +
                                       std::to_string(toks.size() - 3));
        for (int q = 0; q < a.n; ++q)
          l.t.images.push_back(parse_state(toks[3 + q], a.n, lineno));
      } else if (toks[2] == "cycles") {
        std::string spec;
        for (std::size_t j = 3; j < toks.size(); ++j) spec += toks[j];
        l.t = parse_cycles(spec, a.n, lineno);
      } else {
        throw ParseError(lineno, "expected 'images' or 'cycles', got '" +
                                     toks[2] + "'");
      }
      a.alphabet.push_back(std::move(l));
      continue;
    }
    if (toks[0] == "defect-letter") {
      if (toks.size() != 2)
        throw ParseError(lineno, "usage: defect-letter <name>");
      a.defect_letter_hint = toks[1];
      continue;
    }
    throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
  }
  if (!have_states) throw ParseError(lineno, "missing 'states <n>' line");
  if (a.alphabet.empty()) throw ParseError(lineno, "no letters");
  if (a.defect_letter_hint && !a.find_letter(*a.defect_letter_hint))
    throw ParseError(lineno, "defect-letter names unknown letter '" +
                                 *a.defect_letter_hint + "'");
  return a;
}

Automaton parse_automaton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

std::string serialize_automaton(const Automaton& a) {
  std::ostringstream os;
  os << "states " << a.n << "\n";
  for (const Letter& l : a.alphabet) {
    os << "letter " << l.name << " images";
    for (StateId q : l.t.images) os << ' ' << q + 1;
    os << "\n";
  }
  if (a.defect_letter_hint) os << "defect-letter " << *a.defect_letter_hint << "\n";
  return os.str();
}

}  // namespace creach
