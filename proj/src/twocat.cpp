#include "graydist/twocat.hpp"

#include <sstream>

namespace graydist {

TermPtr gen(std::string name) {
  return std::make_shared<const Term>(Term{TermKind::gen, std::move(name), {}, nullptr, nullptr});
}

TermPtr id(Word w) { return std::make_shared<const Term>(Term{TermKind::id, {}, std::move(w), nullptr, nullptr}); }

TermPtr vcomp(TermPtr after, TermPtr before) {
  return std::make_shared<const Term>(Term{TermKind::vertical, {}, {}, std::move(after), std::move(before)});
}

TermPtr hcomp(TermPtr outer, TermPtr inner) {
  return std::make_shared<const Term>(Term{TermKind::horizontal, {}, {}, std::move(outer), std::move(inner)});
}

bool term_equal(const TermPtr& x, const TermPtr& y) {
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case TermKind::gen:
      return x->name == y->name;
    case TermKind::id:
      return x->word == y->word;
    default:
      return term_equal(x->a, y->a) && term_equal(x->b, y->b);
  }
}

namespace {
std::string render_word(const Word& w) {
  if (w.gens.empty()) return "Id(" + w.base + ")";
  std::string s;
  for (std::size_t i = 0; i < w.gens.size(); ++i) s += (i ? "." : "") + w.gens[i];
  return s;
}
}  // namespace

std::string render(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::gen:
      return t->name;
    case TermKind::id:
      return render_word(t->word);
    case TermKind::vertical:
      return "(" + render(t->a) + " o " + render(t->b) + ")";
    case TermKind::horizontal:
      return "(" + render(t->a) + " . " + render(t->b) + ")";
  }
  return "?";
}

const OneGen* Presentation::one(const std::string& name) const {
  for (const auto& g : one_gens)
    if (g.name == name) return &g;
  return nullptr;
}

const TwoGen* Presentation::two(const std::string& name) const {
  for (const auto& g : two_gens)
    if (g.name == name) return &g;
  return nullptr;
}

bool presentation_equal(const Presentation& a, const Presentation& b) {
  if (a.objects != b.objects || a.one_gens != b.one_gens || a.two_gens != b.two_gens || a.factors != b.factors ||
      a.relations.size() != b.relations.size())
    return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto &x = a.relations[i], &y = b.relations[i];
    if (x.tag != y.tag || !term_equal(x.lhs, y.lhs) || !term_equal(x.rhs, y.rhs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// typing

std::string word_target(const Presentation& p, const Word& w) {
  if (w.gens.empty()) return w.base;
  const OneGen* g = p.one(w.gens.front());
  if (!g) throw UnknownGenerator("unknown 1-generator " + w.gens.front());
  return g->tgt;
}

void typecheck_word(const Presentation& p, const Word& w) {
  std::string cur = w.base;
  for (std::size_t i = w.gens.size(); i-- > 0;) {
    const OneGen* g = p.one(w.gens[i]);
    if (!g) throw UnknownGenerator("unknown 1-generator " + w.gens[i]);
    if (g->src != cur) throw TermBoundaryMismatch("word " + render_word(w) + " is not composable at " + g->name);
    cur = g->tgt;
  }
}

Word word_concat(const Presentation& p, const Word& outer, const Word& inner) {
  if (word_target(p, inner) != outer.base)
    throw TermBoundaryMismatch("words " + render_word(outer) + " and " + render_word(inner) + " are not composable");
  Word w{inner.base, outer.gens};
  w.gens.insert(w.gens.end(), inner.gens.begin(), inner.gens.end());
  return w;
}

std::pair<Word, Word> typecheck_term(const Presentation& p, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::gen: {
      const TwoGen* g = p.two(t->name);
      if (!g) throw UnknownGenerator("unknown 2-generator " + t->name);
      return {g->src, g->tgt};
    }
    case TermKind::id:
      typecheck_word(p, t->word);
      return {t->word, t->word};
    case TermKind::vertical: {
      auto [sb, tb] = typecheck_term(p, t->b);
      auto [sa, ta] = typecheck_term(p, t->a);
      if (!(tb == sa))
        throw TermBoundaryMismatch("in " + render(t) + ": target " + render_word(tb) + " of " + render(t->b) +
                                   " differs from source " + render_word(sa) + " of " + render(t->a));
      return {sb, ta};
    }
    case TermKind::horizontal: {
      auto [sb, tb] = typecheck_term(p, t->b);
      auto [sa, ta] = typecheck_term(p, t->a);
      try {
        return {word_concat(p, sa, sb), word_concat(p, ta, tb)};
      } catch (const TermBoundaryMismatch& e) {
        throw TermBoundaryMismatch("in " + render(t) + ": " + e.what());
      }
    }
  }
  throw TermBoundaryMismatch("unknown term kind");
}

void validate_presentation(const Presentation& p) {
  auto has_object = [&](const std::string& o) {
    for (const auto& x : p.objects)
      if (x == o) return true;
    return false;
  };
  for (const auto& g : p.one_gens)
    if (!has_object(g.src) || !has_object(g.tgt)) throw UnknownGenerator("1-generator " + g.name + " has unknown endpoints");
  for (const auto& g : p.two_gens) {
    typecheck_word(p, g.src);
    typecheck_word(p, g.tgt);
    if (g.src.base != g.tgt.base || word_target(p, g.src) != word_target(p, g.tgt))
      throw TermBoundaryMismatch("2-generator " + g.name + " has non-parallel boundary");
  }
  for (const auto& r : p.relations) {
    auto [sl, tl] = typecheck_term(p, r.lhs);
    auto [sr, tr] = typecheck_term(p, r.rhs);
    if (!(sl == sr) || !(tl == tr)) throw TermBoundaryMismatch("relation " + r.tag + " has sides with different boundaries");
  }
}

// ---------------------------------------------------------------------------
// serialization

nlohmann::json word_to_json(const Word& w) { return {{"base", w.base}, {"gens", w.gens}}; }

Word word_from_json(const nlohmann::json& j) {
  return Word{j.at("base").get<std::string>(), j.at("gens").get<std::vector<std::string>>()};
}

nlohmann::json term_to_json(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::gen:
      return nlohmann::json::array({"gen", t->name});
    case TermKind::id:
      return nlohmann::json::array({"id", word_to_json(t->word)});
    case TermKind::vertical:
      return nlohmann::json::array({"v", term_to_json(t->a), term_to_json(t->b)});
    case TermKind::horizontal:
      return nlohmann::json::array({"h", term_to_json(t->a), term_to_json(t->b)});
  }
  return nullptr;
}

TermPtr term_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("term must be a nonempty array");
  const std::string k = j.at(0).get<std::string>();
  if (k == "gen" && j.size() == 2) return gen(j.at(1).get<std::string>());
  if (k == "id" && j.size() == 2) return id(word_from_json(j.at(1)));
  if (k == "v" && j.size() == 3) return vcomp(term_from_json(j.at(1)), term_from_json(j.at(2)));
  if (k == "h" && j.size() == 3) return hcomp(term_from_json(j.at(1)), term_from_json(j.at(2)));
  throw std::invalid_argument("malformed term: " + j.dump());
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["objects"] = p.objects;
  j["factors"] = p.factors;
  j["one_cells"] = nlohmann::json::array();
  for (const auto& g : p.one_gens)
    j["one_cells"].push_back(
        {{"name", g.name}, {"src", g.src}, {"tgt", g.tgt}, {"base", g.base}, {"factor", g.factor}, {"origin", g.origin}});
  j["two_cells"] = nlohmann::json::array();
  for (const auto& g : p.two_gens) {
    nlohmann::json c = {{"name", g.name},     {"src", word_to_json(g.src)}, {"tgt", word_to_json(g.tgt)},
                        {"base", g.base},     {"factor", g.factor}};
    if (g.crossing) c["crossing"] = {g.cross_f, g.cross_g};
    j["two_cells"].push_back(c);
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : p.relations)
    j["relations"].push_back({{"tag", r.tag}, {"lhs", term_to_json(r.lhs)}, {"rhs", term_to_json(r.rhs)}});
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p;
  p.objects = j.at("objects").get<std::vector<std::string>>();
  p.factors = j.value("factors", 0);
  for (const auto& c : j.at("one_cells")) {
    OneGen g;
    g.name = c.at("name").get<std::string>();
    g.src = c.at("src").get<std::string>();
    g.tgt = c.at("tgt").get<std::string>();
    g.base = c.value("base", g.name);
    g.factor = c.value("factor", 0);
    g.origin = c.value("origin", g.name);
    p.one_gens.push_back(g);
  }
  for (const auto& c : j.at("two_cells")) {
    TwoGen g;
    g.name = c.at("name").get<std::string>();
    g.src = word_from_json(c.at("src"));
    g.tgt = word_from_json(c.at("tgt"));
    g.base = c.value("base", g.name);
    g.factor = c.value("factor", 0);
    if (c.contains("crossing")) {
      g.crossing = true;
      g.cross_f = c.at("crossing").at(0).get<std::string>();
      g.cross_g = c.at("crossing").at(1).get<std::string>();
    }
    p.two_gens.push_back(g);
  }
  for (const auto& r : j.at("relations"))
    p.relations.push_back({term_from_json(r.at("lhs")), term_from_json(r.at("rhs")), r.at("tag").get<std::string>()});
  validate_presentation(p);
  return p;
}

std::string presentation_pretty(const Presentation& p) {
  std::ostringstream os;
  os << "objects (" << p.objects.size() << "):";
  for (const auto& o : p.objects) os << " " << o;
  os << "\n1-generators (" << p.one_gens.size() << "):\n";
  for (const auto& g : p.one_gens) os << "  " << g.name << " : " << g.src << " -> " << g.tgt << "\n";
  os << "2-generators (" << p.two_gens.size() << "):\n";
  for (const auto& g : p.two_gens) os << "  " << g.name << " : " << render_word(g.src) << " => " << render_word(g.tgt) << "\n";
  os << "relations (" << p.relations.size() << "):\n";
  for (const auto& r : p.relations) os << "  [" << r.tag << "] " << render(r.lhs) << " = " << render(r.rhs) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// interpretation

Container eval_word(const Interpretation& in, const Word& w) {
  std::vector<AtomPtr> atoms;
  for (const auto& g : w.gens) {
    auto it = in.one_cells.find(g);
    if (it == in.one_cells.end()) throw UnknownGenerator("uninterpreted 1-generator " + g);
    atoms.insert(atoms.end(), it->second.word().begin(), it->second.word().end());
  }
  return Container(std::move(atoms));
}

Morphism eval_term(const Interpretation& in, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::gen: {
      auto it = in.two_cells.find(t->name);
      if (it == in.two_cells.end()) throw UnknownGenerator("uninterpreted 2-generator " + t->name);
      return it->second;
    }
    case TermKind::id:
      return identity(eval_word(in, t->word));
    case TermKind::vertical:
      return vertical(eval_term(in, t->a), eval_term(in, t->b));
    case TermKind::horizontal:
      return horizontal(eval_term(in, t->a), eval_term(in, t->b));
  }
  throw UnknownGenerator("unknown term kind");
}

void validate_interpretation(const Interpretation& in, const Presentation& p) {
  for (const auto& g : p.one_gens)
    if (!in.one_cells.count(g.name)) throw UnknownGenerator("uninterpreted 1-generator " + g.name);
  for (const auto& g : p.two_gens) {
    auto it = in.two_cells.find(g.name);
    if (it == in.two_cells.end()) throw UnknownGenerator("uninterpreted 2-generator " + g.name);
    if (!(it->second->src == eval_word(in, g.src)) || !(it->second->tgt == eval_word(in, g.tgt)))
      throw BoundaryMismatch("image of " + g.name + " has the wrong boundary");
  }
}

CheckReport check_relations(const Interpretation& in, const Presentation& p, const CheckOptions& opt) {
  validate_interpretation(in, p);
  CheckReport rep;
  rep.suite = "relations";
  for (const auto& r : p.relations) rep.add(equality_instance(r.tag, eval_term(in, r.lhs), eval_term(in, r.rhs), opt));
  rep.sort_by_tag();
  return rep;
}

}  // namespace graydist
