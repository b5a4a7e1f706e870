#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "creach/state_set.hpp"

namespace creach {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A configured search cap was exceeded. Recoverable: callers fall back to the
// oracle or report the analysis as refused.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The alphabet does not have the almost-group shape (permutations plus
// exactly one defect-1 letter).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A total map on the state set; states act on the right, q -> images[q].
struct Transformation {
  std::vector<StateId> images;

  int size() const { return static_cast<int>(images.size()); }
  StateId operator()(StateId q) const { return images[q]; }
  bool is_permutation() const;
  bool operator==(const Transformation&) const = default;

  static Transformation identity(int n);
};

// Left-to-right action: q . (tu) = (q . t) . u.
Transformation compose(const Transformation& t, const Transformation& u);

// Image of a set under a transformation (normalized).
StateSet image(const StateSet& s, const Transformation& t);

StateSet excl(const Transformation& t);  // states with no preimage
StateSet dupl(const Transformation& t);  // states with >= 2 preimages
int defect(const Transformation& t);     // |excl|

// The two states sharing an image. Defined only for defect 1; throws
// otherwise. Returned with the smaller state first.
std::pair<StateId, StateId> coll(const Transformation& t);

// A word is a sequence of letter names; empty means the identity.
using Word = std::vector<std::string>;

// Concatenates single-character names, joins longer ones with spaces.
std::string format_word(const Word& w);

struct Letter {
  std::string name;
  Transformation t;
};

struct Automaton {
  int n = 0;
  std::vector<Letter> alphabet;
  // Optional "defect-letter" declaration from the input file; classify_shape
  // cross-checks it when present.
  std::optional<std::string> defect_letter_hint;

  const Transformation* find_letter(const std::string& name) const;
  const Transformation& letter(const std::string& name) const;  // throws Error
  int letter_index(const std::string& name) const;              // -1 if absent
};

Transformation word_transformation(const Automaton& a, const Word& w);

// The classified alphabet of an almost-group automaton.
struct AlmostGroupShape {
  std::vector<std::string> perm_letters;  // Sigma_0, in alphabet order
  std::string defect_letter;              // the letter of defect 1
  StateId e = 0;                          // excl of the defect letter
  StateId d = 0;                          // dupl of the defect letter
  std::pair<StateId, StateId> collapsed{0, 0};
  bool standardized = false;              // e in coll
};

// Splits the alphabet into permutations and exactly one defect-1 letter.
// Throws ShapeError when the automaton is not almost-group. Does not check
// transitivity.
AlmostGroupShape classify_shape(const Automaton& a);

// Replaces the defect letter a by the composite (u a) for a shortest
// Sigma_0-word u with e . u in coll(a), which puts e inside the collapsed
// pair. Returns the rewritten automaton and u; the input is returned
// unchanged with an empty word when already standardized. Throws ShapeError
// when no Sigma_0-word maps e into coll(a).
std::pair<Automaton, Word> standardize(const Automaton& a,
                                       const AlmostGroupShape& shape);

Automaton parse_automaton(const std::string& text);
Automaton parse_automaton_file(const std::string& path);

// Always emits the `images` form; parse(serialize(a)) round-trips.
std::string serialize_automaton(const Automaton& a);

}  // namespace creach
