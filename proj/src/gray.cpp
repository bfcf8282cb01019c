#include "graydist/gray.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace graydist {

Presentation terminal_presentation() {
  Presentation p;
  p.objects = {"*"};
  return p;
}

Presentation walking_monad() {
  Presentation p;
  p.objects = {"*"};
  p.factors = 1;
  p.one_gens.push_back(OneGen{"t", "*", "*", "t", 1, "t"});
  const Word none{"*", {}}, t{"*", {"t"}}, tt{"*", {"t", "t"}};
  p.two_gens.push_back(TwoGen{"eta", none, t, "eta", 1, false, "", ""});
  p.two_gens.push_back(TwoGen{"mu", tt, t, "mu", 1, false, "", ""});
  const TermPtr mu = gen("mu"), eta = gen("eta"), idt = id(t);
  p.relations.push_back({vcomp(mu, hcomp(eta, idt)), idt, "monad.unit-left"});
  p.relations.push_back({vcomp(mu, hcomp(idt, eta)), idt, "monad.unit-right"});
  p.relations.push_back({vcomp(mu, hcomp(mu, idt)), vcomp(mu, hcomp(idt, mu)), "monad.assoc"});
  validate_presentation(p);
  return p;
}

std::string factor_name(const std::string& base, int k, int total) {
  return total >= 2 && k > 0 ? base + std::to_string(k) : base;
}

std::string crossing_name(const std::string& f, const std::string& g) { return "gamma(" + f + "," + g + ")"; }

std::size_t count_relations_with_prefix(const Presentation& p, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& r : p.relations)
    if (r.tag.rfind(prefix, 0) == 0) ++n;
  return n;
}

namespace {
using NameMap = std::map<std::string, std::string>;

std::string mapped(const NameMap& m, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw UnknownGenerator("unknown generator " + name);
  return it->second;
}

Word rename_word(const Word& w, const NameMap& m, const std::string& object) {
  Word out{object, {}};
  for (const auto& g : w.gens) out.gens.push_back(mapped(m, g));
  return out;
}

TermPtr rename_term(const TermPtr& t, const NameMap& m, const std::string& object) {
  switch (t->kind) {
    case TermKind::gen:
      return gen(mapped(m, t->name));
    case TermKind::id:
      return id(rename_word(t->word, m, object));
    case TermKind::vertical:
      return vcomp(rename_term(t->a, m, object), rename_term(t->b, m, object));
    case TermKind::horizontal:
      return hcomp(rename_term(t->a, m, object), rename_term(t->b, m, object));
  }
  throw UnknownGenerator("unknown term kind");
}

// Lifts the generators of one factor into the tensor. Returns the renaming.
NameMap lift_factor(const Presentation& src, int shift, int total, const std::string& object, Presentation& out) {
  NameMap m;
  for (const auto& g : src.one_gens) {
    const int k = g.factor > 0 ? g.factor + shift : 0;
    const std::string name = g.factor > 0 ? factor_name(g.base, k, total) : g.name;
    if (out.one(name)) throw std::invalid_argument("generator name clash in tensor: " + name);
    m[g.name] = name;
    out.one_gens.push_back(OneGen{name, object, object, g.base, k, g.origin});
  }
  for (const auto& g : src.two_gens) {
    TwoGen n = g;
    n.src = rename_word(g.src, m, object);
    n.tgt = rename_word(g.tgt, m, object);
    if (g.crossing) {
      n.cross_f = mapped(m, g.cross_f);
      n.cross_g = mapped(m, g.cross_g);
      n.name = crossing_name(n.cross_f, n.cross_g);
      n.factor = 0;
    } else {
      n.factor = g.factor > 0 ? g.factor + shift : 0;
      n.name = g.factor > 0 ? factor_name(g.base, n.factor, total) : g.name;
    }
    if (out.two(n.name)) throw std::invalid_argument("generator name clash in tensor: " + n.name);
    m[g.name] = n.name;
    out.two_gens.push_back(n);
  }
  for (const auto& r : src.relations) {
    std::string tag = r.tag;
    if (src.factors == 1 && total >= 2) tag += "(" + std::to_string(1 + shift) + ")";
    out.relations.push_back({rename_term(r.lhs, m, object), rename_term(r.rhs, m, object), tag});
  }
  return m;
}

struct CellChoice {
  std::string label;
  TermPtr cell;
  Word src, tgt;
};

std::vector<CellChoice> generating_cells(const Presentation& p, const std::vector<std::string>& two_names,
                                         const std::vector<std::string>& one_names, const std::string& object) {
  std::vector<CellChoice> out;
  for (const auto& n : two_names) {
    const TwoGen* g = p.two(n);
    out.push_back({n, gen(n), g->src, g->tgt});
  }
  for (const auto& n : one_names) {
    const Word w{object, {n}};
    out.push_back({"id(" + n + ")", id(w), w, w});
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word w{a.base, a.gens};
  w.gens.insert(w.gens.end(), b.gens.begin(), b.gens.end());
  return w;
}
}  // namespace

TermPtr crossing_term(const Presentation& p, const Word& f_word, const Word& g_word) {
  const std::string& o = f_word.base;
  if (f_word.gens.empty() || g_word.gens.empty()) return id(concat(f_word, g_word));
  if (f_word.gens.size() > 1) {
    const Word f1{o, {f_word.gens.front()}};
    const Word rest{o, std::vector<std::string>(f_word.gens.begin() + 1, f_word.gens.end())};
    return vcomp(hcomp(crossing_term(p, f1, g_word), id(rest)), hcomp(id(f1), crossing_term(p, rest, g_word)));
  }
  if (g_word.gens.size() > 1) {
    const Word g1{o, {g_word.gens.front()}};
    const Word rest{o, std::vector<std::string>(g_word.gens.begin() + 1, g_word.gens.end())};
    return vcomp(hcomp(id(g1), crossing_term(p, f_word, rest)), hcomp(crossing_term(p, f_word, g1), id(rest)));
  }
  const std::string name = crossing_name(f_word.gens[0], g_word.gens[0]);
  const TwoGen* c = p.two(name);
  if (!c || !c->crossing) throw UnknownGenerator("no crossing generator " + name);
  return gen(name);
}

Morphism extend_crossing(const Interpretation& in, const Presentation& p, const Word& f_word, const Word& g_word) {
  const TermPtr t = crossing_term(p, f_word, g_word);
  typecheck_term(p, t);
  return eval_term(in, t);
}

Presentation gray_tensor(const Presentation& p, const Presentation& q) {
  if (p.objects.size() != 1 || q.objects.size() != 1)
    throw std::invalid_argument("gray_tensor supports single-object presentations only");
  const int total = p.factors + q.factors;
  const std::string object = "(" + p.objects[0] + "," + q.objects[0] + ")";
  Presentation out;
  out.objects = {object};
  out.factors = total;
  const NameMap mp = lift_factor(p, 0, total, object, out);
  const NameMap mq = lift_factor(q, p.factors, total, object, out);

  std::vector<std::string> p1, q1, p2, q2, pcross;
  for (const auto& g : p.one_gens) p1.push_back(mapped(mp, g.name));
  for (const auto& g : q.one_gens) q1.push_back(mapped(mq, g.name));
  for (const auto& g : p.two_gens) (g.crossing ? pcross : p2).push_back(mapped(mp, g.name));
  for (const auto& g : q.two_gens)
    if (!g.crossing) q2.push_back(mapped(mq, g.name));

  for (const auto& f : p1)
    for (const auto& g : q1) {
      const std::string name = crossing_name(f, g);
      out.two_gens.push_back(TwoGen{name, Word{object, {f, g}}, Word{object, {g, f}}, "gamma", 0, true, f, g});
    }

  // Naturality of crossings in generating 2-cells of each side.
  const auto phis = generating_cells(out, p2, p1, object);
  const auto psis = generating_cells(out, q2, q1, object);
  for (const auto& phi : phis)
    for (const auto& psi : psis) {
      if (phi.cell->kind == TermKind::id && psi.cell->kind == TermKind::id) continue;
      const TermPtr lhs = vcomp(crossing_term(out, phi.tgt, psi.tgt), hcomp(phi.cell, psi.cell));
      const TermPtr rhs = vcomp(hcomp(psi.cell, phi.cell), crossing_term(out, phi.src, psi.src));
      out.relations.push_back({lhs, rhs, "naturality(" + phi.label + "," + psi.label + ")"});
    }

  // Yang-Baxter: each crossing of the left factor against each 1-generator h.
  for (const auto& cn : pcross) {
    const TwoGen* c = out.two(cn);
    const int i = out.one(c->cross_f)->factor, j = out.one(c->cross_g)->factor;
    for (const auto& h : q1) {
      const Word hw{object, {h}};
      const TermPtr l = crossing_term(out, c->src, hw);
      const TermPtr r = crossing_term(out, c->tgt, hw);
      const TermPtr lhs = vcomp(vcomp(hcomp(id(hw), gen(cn)), l->a), l->b);
      const TermPtr rhs = vcomp(vcomp(r->a, r->b), hcomp(gen(cn), id(hw)));
      const int k = out.one(h)->factor;
      out.relations.push_back(
          {lhs, rhs, "yang-baxter(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")"});
    }
  }
  validate_presentation(out);
  return out;
}

Presentation mnd_power(const Presentation& p, int n) {
  if (n < 0) throw std::invalid_argument("mnd_power needs n >= 0");
  Presentation r = p;
  const Presentation w = walking_monad();
  for (int i = 0; i < n; ++i) r = gray_tensor(r, w);
  return r;
}

// ---------------------------------------------------------------------------
// n-fold systems

Interpretation monad_interpretation(const MonadData& m) {
  Interpretation in;
  in.one_cells["t"] = m.functor;
  in.two_cells["eta"] = m.unit;
  in.two_cells["mu"] = m.mult;
  in.labels["t"] = m.name;
  return in;
}

Interpretation encode_pdist(const NFoldSystem& s) {
  validate_nfold(s);
  const int n = s.n;
  Interpretation in;
  for (int a = 1; a <= n; ++a) {
    const MonadData& m = s.monads[a - 1];
    const std::string t = factor_name("t", a, n);
    in.one_cells[t] = m.functor;
    in.labels[t] = m.name;
    in.two_cells[factor_name("eta", a, n)] = m.unit;
    in.two_cells[factor_name("mu", a, n)] = m.mult;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      in.two_cells[crossing_name(factor_name("t", a, n), factor_name("t", b, n))] = s.law(a, b).law;
  return in;
}

NFoldSystem decode_pdist(const Interpretation& in, int n) {
  auto one = [&](const std::string& k) {
    auto it = in.one_cells.find(k);
    if (it == in.one_cells.end()) throw UnknownGenerator("uninterpreted 1-generator " + k);
    return it->second;
  };
  auto two = [&](const std::string& k) {
    auto it = in.two_cells.find(k);
    if (it == in.two_cells.end()) throw UnknownGenerator("uninterpreted 2-generator " + k);
    return it->second;
  };
  NFoldSystem s;
  s.n = n;
  for (int k = 1; k <= n; ++k) {
    const std::string t = factor_name("t", k, n);
    auto lab = in.labels.find(t);
    MonadData m{lab == in.labels.end() ? t : lab->second, one(t), two(factor_name("eta", k, n)),
                two(factor_name("mu", k, n))};
    validate_monad(m);
    s.monads.push_back(m);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      DistLawData d{s.monads[j - 1], s.monads[i - 1],
                    two(crossing_name(factor_name("t", i, n), factor_name("t", j, n)))};
      validate_dist_law(d);
      s.laws.emplace(std::make_pair(i, j), d);
    }
  return s;
}

bool same_interpretation(const Interpretation& a, const Interpretation& b) {
  if (a.one_cells.size() != b.one_cells.size() || a.two_cells.size() != b.two_cells.size() || a.labels != b.labels)
    return false;
  for (const auto& [k, v] : a.one_cells) {
    auto it = b.one_cells.find(k);
    if (it == b.one_cells.end() || !(it->second == v)) return false;
  }
  for (const auto& [k, v] : a.two_cells) {
    auto it = b.two_cells.find(k);
    if (it == b.two_cells.end()) return false;
    if (it->second != v && !(it->second->src == v->src && it->second->tgt == v->tgt && morphism_equal(it->second, v)))
      return false;
  }
  return true;
}

}  // namespace graydist
