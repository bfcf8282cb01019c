#include "graydist/classifier.hpp"

#include <map>

namespace graydist {

Word HatOneCell::composite() const {
  Word w{path.empty() ? object : path.back().base, {}};
  for (const Word& p : path) w.gens.insert(w.gens.end(), p.gens.begin(), p.gens.end());
  return w;
}

namespace {
// Object at chain position j: the target of entry j, or the source for j = k.
std::string position_object(const Presentation& b, const HatOneCell& f, int j) {
  if (j == f.length()) return f.object;
  return word_target(b, f.path[j]);
}

Word segment(const Presentation& b, const HatOneCell& f, int lo, int hi) {
  if (lo == hi) return Word{position_object(b, f, lo), {}};
  HatOneCell s{f.path[hi - 1].base, {f.path.begin() + lo, f.path.begin() + hi}};
  return s.composite();
}

void check_path(const Presentation& b, const HatOneCell& f) {
  for (int i = 0; i < f.length(); ++i) {
    typecheck_word(b, f.path[i]);
    if (f.path[i].base != position_object(b, f, i + 1))
      throw TermBoundaryMismatch("hat 1-cell path is not composable at entry " + std::to_string(i));
  }
}
}  // namespace

void validate_hat_cell(const Presentation& b, const HatTwoCell& c) {
  check_path(b, c.source);
  check_path(b, c.target);
  const int m = c.source.length(), n = c.target.length();
  if (c.source.object != c.target.object || position_object(b, c.source, 0) != position_object(b, c.target, 0))
    throw TermBoundaryMismatch("hat 2-cell endpoints differ");
  if (c.reindex.dom_size() != n + 1 || c.reindex.cod_size() != m + 1)
    throw TermBoundaryMismatch("hat 2-cell reindex has the wrong shape");
  if (static_cast<int>(c.components.size()) != n) throw TermBoundaryMismatch("hat 2-cell component count");
  const auto& a = c.reindex.values();
  for (int i = 0; i < n; ++i) {
    auto [s, t] = typecheck_term(b, c.components[i]);
    if (!(s == segment(b, c.source, a[i], a[i + 1])) || !(t == segment(b, c.target, i, i + 1)))
      throw TermBoundaryMismatch("hat 2-cell component " + std::to_string(i) + " has the wrong boundary");
  }
}

HatTwoCell hat_identity(const HatOneCell& f) {
  HatTwoCell c{f, f, IntervalMap(MonotoneMap::identity(f.length() + 1)), {}};
  for (const Word& w : f.path) c.components.push_back(id(w));
  return c;
}

HatTwoCell hat_vertical(const Presentation& b, const HatTwoCell& c2, const HatTwoCell& c1) {
  if (!(c1.target == c2.source)) throw TermBoundaryMismatch("hat vertical composite: boundaries differ");
  const auto& beta = c2.reindex.values();
  HatTwoCell out{c1.source, c2.target, compose(c1.reindex, c2.reindex), {}};
  const auto& ab = out.reindex.values();
  for (int j = 0; j < c2.target.length(); ++j) {
    TermPtr whiskered;
    for (int i = beta[j + 1] - 1; i >= beta[j]; --i)
      whiskered = whiskered ? hcomp(c1.components[i], whiskered) : c1.components[i];
    if (!whiskered) whiskered = id(segment(b, c1.source, ab[j], ab[j]));
    out.components.push_back(vcomp(c2.components[j], whiskered));
  }
  return out;
}

HatTwoCell hat_horizontal(const Presentation& b, const HatTwoCell& c2, const HatTwoCell& c1) {
  if (c2.source.object != position_object(b, c1.source, 0))
    throw TermBoundaryMismatch("hat horizontal composite: 1-cells are not composable");
  HatOneCell src{c1.source.object, c2.source.path}, tgt{c1.target.object, c2.target.path};
  src.path.insert(src.path.end(), c1.source.path.begin(), c1.source.path.end());
  tgt.path.insert(tgt.path.end(), c1.target.path.begin(), c1.target.path.end());
  const int n2 = c2.target.length(), m2 = c2.source.length();
  std::vector<int> v(c2.reindex.values().begin(), c2.reindex.values().end());
  for (std::size_t k = 1; k < c1.reindex.values().size(); ++k) v.push_back(c1.reindex.values()[k] + m2);
  HatTwoCell out{src, tgt, IntervalMap(MonotoneMap(n2 + c1.target.length() + 1, src.length() + 1, std::move(v))),
                 c2.components};
  out.components.insert(out.components.end(), c1.components.begin(), c1.components.end());
  return out;
}

namespace {
// Removes identity units: x o id = id o x = x, id(v).id(w) = id(v.w).
TermPtr simplify(const TermPtr& t) {
  if (t->kind == TermKind::gen || t->kind == TermKind::id) return t;
  TermPtr a = simplify(t->a), b = simplify(t->b);
  if (t->kind == TermKind::vertical) {
    if (a->kind == TermKind::id) return b;
    if (b->kind == TermKind::id) return a;
    return vcomp(a, b);
  }
  if (a->kind == TermKind::id && b->kind == TermKind::id) {
    Word w{b->word.base, a->word.gens};
    w.gens.insert(w.gens.end(), b->word.gens.begin(), b->word.gens.end());
    return id(w);
  }
  return hcomp(a, b);
}
}  // namespace

bool hat_cell_equal(const HatTwoCell& a, const HatTwoCell& b) {
  if (!(a.source == b.source) || !(a.target == b.target) || !(a.reindex == b.reindex)) return false;
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!term_equal(simplify(a.components[i]), simplify(b.components[i]))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// hat(1)

Presentation hat_base_terminal() {
  Presentation p;
  p.objects = {"*"};
  return p;
}

HatOneCell hat_terminal_one(int k) { return HatOneCell{"*", std::vector<Word>(k, Word{"*", {}})}; }

HatTwoCell hat_terminal_cell(const MonotoneMap& f) {
  HatTwoCell c{hat_terminal_one(f.dom.size), hat_terminal_one(f.cod.size), dualize(f), {}};
  for (int i = 0; i < f.cod.size; ++i) c.components.push_back(id(Word{"*", {}}));
  return c;
}

MonotoneMap hat_terminal_classify(const HatTwoCell& c) { return undualize(c.reindex); }

std::vector<HatTwoCell> hat_terminal_hom(int m, int n) {
  std::vector<HatTwoCell> out;
  for (const IntervalMap& a : enumerate_interval(n + 1, m + 1)) {
    HatTwoCell c{hat_terminal_one(m), hat_terminal_one(n), a, {}};
    for (int i = 0; i < n; ++i) c.components.push_back(id(Word{"*", {}}));
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// monads

HatAssignment hat_of_monad(const MonadData& m) {
  validate_monad(m);
  auto cache = std::make_shared<std::map<int, Morphism>>();
  auto mu_k = [m, cache](int k) {
    auto it = cache->find(k);
    if (it != cache->end()) return it->second;
    Morphism r;
    if (k == 0) {
      r = m.unit;
    } else if (k == 1) {
      r = identity(m.functor);
    } else {
      r = m.mult;
      for (int j = 3; j <= k; ++j) r = vertical(m.mult, whisker(Container{}, r, m.functor));
    }
    cache->emplace(k, r);
    return r;
  };
  return [mu_k](const MonotoneMap& f) {
    const std::vector<int> prof = fiber_profile(f);
    if (prof.empty()) return identity(Container{});
    Morphism r = mu_k(prof.back());
    for (std::size_t i = prof.size() - 1; i-- > 0;) r = horizontal(mu_k(prof[i]), r);
    return r;
  };
}

MonadData tilde_of_assignment(const HatAssignment& h, const std::string& name) {
  MonadData m;
  m.name = name;
  m.functor = h(MonotoneMap::identity(1))->src;
  m.unit = h(MonotoneMap::empty_into(1));
  m.mult = h(MonotoneMap(2, 1, {0, 0}));
  validate_monad(m);
  return m;
}

}  // namespace graydist
