#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graydist/container.hpp"
#include "graydist/monads.hpp"
#include "graydist/report.hpp"
#include "json.hpp"

namespace graydist {

class UnknownGenerator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TermBoundaryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Composable 1-generators, outermost first: {"base":"*", "gens":["t","s"]} is
// t.s (s applied first). base is the source object.
struct Word {
  std::string base;
  std::vector<std::string> gens;
  friend bool operator==(const Word&, const Word&) = default;
};

struct OneGen {
  std::string name;
  std::string src;
  std::string tgt;
  std::string base;    // name before factor renaming
  int factor = 0;      // 1-based tensor factor, 0 if none
  std::string origin;  // generator of the factor this is lifted from
  friend bool operator==(const OneGen&, const OneGen&) = default;
};

struct TwoGen {
  std::string name;
  Word src;
  Word tgt;
  std::string base;
  int factor = 0;
  bool crossing = false;
  std::string cross_f, cross_g;  // crossing of 1-generators f (earlier factor) and g
  friend bool operator==(const TwoGen&, const TwoGen&) = default;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { gen, id, vertical, horizontal };

struct Term {
  TermKind kind;
  std::string name;  // gen
  Word word;         // id
  TermPtr a, b;      // vertical(a after b); horizontal(a outer, b inner)
};

TermPtr gen(std::string name);
TermPtr id(Word w);
TermPtr vcomp(TermPtr after, TermPtr before);
TermPtr hcomp(TermPtr outer, TermPtr inner);
bool term_equal(const TermPtr& x, const TermPtr& y);
std::string render(const TermPtr& t);

struct Relation {
  TermPtr lhs;
  TermPtr rhs;
  std::string tag;
};

struct Presentation {
  std::vector<std::string> objects;
  std::vector<OneGen> one_gens;
  std::vector<TwoGen> two_gens;
  std::vector<Relation> relations;
  int factors = 0;

  const OneGen* one(const std::string& name) const;
  const TwoGen* two(const std::string& name) const;
};

bool presentation_equal(const Presentation& a, const Presentation& b);

// Target object of a word.
std::string word_target(const Presentation& p, const Word& w);
Word word_concat(const Presentation& p, const Word& outer, const Word& inner);
void typecheck_word(const Presentation& p, const Word& w);
std::pair<Word, Word> typecheck_term(const Presentation& p, const TermPtr& t);
// Throws unless every generator, word and relation typechecks.
void validate_presentation(const Presentation& p);

nlohmann::json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
nlohmann::json term_to_json(const TermPtr& t);
TermPtr term_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);
std::string presentation_pretty(const Presentation& p);

// Strict 2-functor from a presentation into the one-object 2-category of
// container endofunctors of finite sets.
struct Interpretation {
  std::map<std::string, Container> one_cells;
  std::map<std::string, Morphism> two_cells;
  std::map<std::string, std::string> labels;  // display names of interpreted 1-generators
};

Container eval_word(const Interpretation& in, const Word& w);
Morphism eval_term(const Interpretation& in, const TermPtr& t);
// Checks that every generator is interpreted with matching boundaries.
void validate_interpretation(const Interpretation& in, const Presentation& p);
CheckReport check_relations(const Interpretation& in, const Presentation& p, const CheckOptions& opt = {});

}  // namespace graydist
