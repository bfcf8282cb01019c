#include "graydist/monads.hpp"

#include <sstream>

namespace graydist {

// ---------------------------------------------------------------------------
// monoids

MonoidTable MonoidTable::unchecked(std::string name, std::uint32_t size, std::uint32_t unit,
                                   std::vector<std::vector<std::uint32_t>> mult) {
  if (size == 0) throw InvalidParameter("monoid carrier must be nonempty");
  if (unit >= size) throw InvalidParameter("monoid unit out of range");
  if (mult.size() != size) throw InvalidParameter("monoid table has wrong row count");
  for (const auto& row : mult) {
    if (row.size() != size) throw InvalidParameter("monoid table has wrong column count");
    for (auto v : row)
      if (v >= size) throw InvalidParameter("monoid table entry out of range");
  }
  return MonoidTable{std::move(name), size, unit, std::move(mult)};
}

MonoidTable MonoidTable::make(std::string name, std::uint32_t size, std::uint32_t unit,
                              std::vector<std::vector<std::uint32_t>> mult) {
  MonoidTable m = unchecked(std::move(name), size, unit, std::move(mult));
  if (!m.lawful()) throw InvalidParameter("table is not a monoid: " + m.name);
  return m;
}

bool MonoidTable::lawful() const {
  for (std::uint32_t a = 0; a < size; ++a) {
    if (mult[unit][a] != a || mult[a][unit] != a) return false;
    for (std::uint32_t b = 0; b < size; ++b)
      for (std::uint32_t c = 0; c < size; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) return false;
  }
  return true;
}

MonoidTable cyclic_monoid(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return MonoidTable::make("Z" + std::to_string(n), n, 0, std::move(t));
}

MonoidTable boolean_and() { return MonoidTable::make("AND", 2, 1, {{0, 0}, {0, 1}}); }

// ---------------------------------------------------------------------------
// builtin monads

AtomPtr writer_atom(std::uint32_t m) {
  return make_atom("Writer[" + std::to_string(m) + "]", std::vector<std::uint32_t>(m, 1));
}

AtomPtr either_atom(std::uint32_t a) {
  std::vector<std::uint32_t> ar(a, 0);
  ar.push_back(1);
  return make_atom("Either[" + std::to_string(a) + "]", std::move(ar));
}

AtomPtr reader_atom(std::uint32_t r) { return make_atom("Reader[" + std::to_string(r) + "]", {r}); }

AtomPtr state_atom(std::uint32_t s) {
  const std::uint64_t n = sat_pow(s, s);
  if (n > 4096) throw InvalidParameter("state space too large");
  return make_atom("State[" + std::to_string(s) + "]", std::vector<std::uint32_t>(n, s));
}

std::uint32_t state_shape_index(const std::vector<std::uint32_t>& f, std::uint32_t s) {
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < s; ++i) idx = idx * s + f[i];
  return idx;
}

std::vector<std::uint32_t> state_shape_function(std::uint32_t index, std::uint32_t s) {
  std::vector<std::uint32_t> f(s);
  for (std::uint32_t i = s; i-- > 0;) {
    f[i] = index % s;
    index /= s;
  }
  return f;
}

void validate_monad(const MonadData& m) {
  const Container& t = m.functor;
  if (!m.unit || !m.mult) throw InvalidParameter("monad " + m.name + " is missing a structure cell");
  if (!m.unit->src.is_identity() || !(m.unit->tgt == t)) throw BoundaryMismatch("unit boundary of " + m.name);
  if (!(m.mult->src == t * t) || !(m.mult->tgt == t)) throw BoundaryMismatch("multiplication boundary of " + m.name);
}

MonadData writer(const MonoidTable& m) {
  const Container w = Container::of(writer_atom(m.size));
  MonadData d;
  d.name = "writer(" + m.name + ")";
  d.functor = w;
  d.unit = from_function(Container{}, w, [&](const Tree& x) { return Tree{m.unit, {x}}; }, "eta[" + d.name + "]");
  d.mult = from_function(
      w * w, w,
      [&](const Tree& x) {
        const Tree& inner = x.kids[0];
        return Tree{m(x.value, inner.value), {inner.kids[0]}};
      },
      "mu[" + d.name + "]");
  return d;
}

MonadData either(std::uint32_t a) {
  const Container e = Container::of(either_atom(a));
  MonadData d;
  d.name = a == 1 ? "maybe" : "either(" + std::to_string(a) + ")";
  d.functor = e;
  d.unit = from_function(Container{}, e, [a](const Tree& x) { return Tree{a, {x}}; }, "eta[" + d.name + "]");
  d.mult = from_function(
      e * e, e,
      [a](const Tree& x) {
        if (x.value < a) return Tree{x.value, {}};
        const Tree& inner = x.kids[0];
        if (inner.value < a) return Tree{inner.value, {}};
        return Tree{a, {inner.kids[0]}};
      },
      "mu[" + d.name + "]");
  return d;
}

MonadData maybe() { return either(1); }

MonadData reader(std::uint32_t r) {
  if (r == 0) throw InvalidParameter("reader needs a nonempty environment");
  const Container c = Container::of(reader_atom(r));
  MonadData d;
  d.name = "reader(" + std::to_string(r) + ")";
  d.functor = c;
  d.unit = from_function(
      Container{}, c, [r](const Tree& x) { return Tree{0, std::vector<Tree>(r, x)}; }, "eta[" + d.name + "]");
  d.mult = from_function(
      c * c, c,
      [r](const Tree& x) {
        Tree out{0, {}};
        for (std::uint32_t i = 0; i < r; ++i) out.kids.push_back(x.kids[i].kids[i]);
        return out;
      },
      "mu[" + d.name + "]");
  return d;
}

MonadData state(std::uint32_t s) {
  if (s == 0) throw InvalidParameter("state needs a nonempty state set");
  const Container c = Container::of(state_atom(s));
  MonadData d;
  d.name = "state(" + std::to_string(s) + ")";
  d.functor = c;
  std::vector<std::uint32_t> id(s);
  for (std::uint32_t i = 0; i < s; ++i) id[i] = i;
  const std::uint32_t id_shape = state_shape_index(id, s);
  d.unit = from_function(
      Container{}, c, [=](const Tree& x) { return Tree{id_shape, std::vector<Tree>(s, x)}; },
      "eta[" + d.name + "]");
  d.mult = from_function(
      c * c, c,
      [s](const Tree& x) {
        const auto f = state_shape_function(x.value, s);
        std::vector<std::uint32_t> h(s);
        Tree out;
        for (std::uint32_t i = 0; i < s; ++i) {
          const Tree& k = x.kids[i];
          h[i] = state_shape_function(k.value, s)[f[i]];
          out.kids.push_back(k.kids[f[i]]);
        }
        out.value = state_shape_index(h, s);
        return out;
      },
      "mu[" + d.name + "]");
  return d;
}

MonadData identity_monad() {
  MonadData d;
  d.name = "identity";
  d.functor = Container{};
  d.unit = identity(Container{});
  d.mult = identity(Container{});
  return d;
}

// ---------------------------------------------------------------------------
// checking

CheckInstance equality_instance(const std::string& tag, const Morphism& lhs, const Morphism& rhs,
                                const CheckOptions& opt) {
  CheckInstance inst;
  inst.tag = tag;
  const EqualityResult r = compare(lhs, rhs);
  std::ostringstream w;
  if (!r.equal) {
    w << "shapes";
    for (const auto& x : r.witnesses) {
      inst.shapes.push_back(render_shapes(x.nodes));
      w << " " << inst.shapes.back();
    }
    w << "; first: " << r.witnesses.front().text;
  }
  if (opt.oracle) {
    for (std::uint32_t x = 0; x <= opt.max_set_size; ++x) {
      auto a = eval_morphism_on_set(lhs, x, opt.oracle_cap);
      auto b = a ? eval_morphism_on_set(rhs, x, opt.oracle_cap) : std::nullopt;
      if (!a || !b) break;
      ++inst.oracle_sizes;
      if (*a != *b) {
        inst.oracle_pass = false;
        for (std::size_t e = 0; e < a->size(); ++e)
          if ((*a)[e] != (*b)[e]) {
            w << (r.equal ? "" : "; ") << "pointwise |X|=" << x << " element " << e << ": " << (*a)[e]
              << " vs " << (*b)[e];
            break;
          }
        break;
      }
    }
    if (inst.oracle_sizes > 0) inst.oracle_agrees = inst.oracle_pass == r.equal;
  }
  inst.pass = r.equal && inst.oracle_agrees;
  if (!inst.oracle_agrees) w << " [oracle disagrees with container equality]";
  inst.witness = w.str();
  return inst;
}

CheckReport check_monad(const MonadData& m, const CheckOptions& opt) {
  validate_monad(m);
  const Container& t = m.functor;
  CheckReport rep;
  rep.suite = "monad:" + m.name;
  rep.add(equality_instance("monad.unit-left", vertical(m.mult, whisker({}, m.unit, t)), identity(t), opt));
  rep.add(equality_instance("monad.unit-right", vertical(m.mult, whisker(t, m.unit, {})), identity(t), opt));
  rep.add(equality_instance("monad.assoc", vertical(m.mult, whisker({}, m.mult, t)),
                            vertical(m.mult, whisker(t, m.mult, {})), opt));
  rep.sort_by_tag();
  return rep;
}

// ---------------------------------------------------------------------------
// strength and enrichment

namespace {
void map_leaves(Tree& t, std::size_t depth, const std::function<std::uint32_t(std::uint32_t)>& fn) {
  if (depth == 0) {
    t.value = fn(t.value);
    return;
  }
  for (Tree& k : t.kids) map_leaves(k, depth - 1, fn);
}
}  // namespace

std::vector<std::uint64_t> strength(const Container& f, std::uint64_t a, std::uint64_t b) {
  TreeCodec cb(f, b), cab(f, a * b);
  const std::uint64_t fb = cb.size();
  std::vector<std::uint64_t> out(a * fb);
  for (std::uint64_t x = 0; x < a; ++x)
    for (std::uint64_t e = 0; e < fb; ++e) {
      Tree t = cb.decode(e);
      map_leaves(t, f.length(), [&](std::uint32_t y) { return static_cast<std::uint32_t>(x * b + y); });
      out[x * fb + e] = cab.encode(t);
    }
  return out;
}

std::vector<std::uint64_t> enrichment_from_strength(const Container& f, const std::vector<std::uint64_t>& h,
                                                    std::uint64_t a, std::uint64_t b) {
  // [A,B] has b^a elements, h encoded with h(0) most significant.
  const std::uint64_t homs = sat_pow(b, a);
  std::uint64_t code = 0;
  for (auto v : h) code = code * b + v;
  std::vector<std::uint64_t> ev(homs * a);
  for (std::uint64_t g = 0; g < homs; ++g) {
    std::uint64_t rest = g;
    std::vector<std::uint64_t> vals(a);
    for (std::uint64_t i = a; i-- > 0;) {
      vals[i] = rest % b;
      rest /= b;
    }
    for (std::uint64_t x = 0; x < a; ++x) ev[g * a + x] = vals[x];
  }
  const std::vector<std::uint64_t> str = strength(f, homs, a);
  const std::vector<std::uint64_t> fev = functor_action(f, ev, homs * a, b);
  const std::uint64_t fa = f.size_on(a);
  std::vector<std::uint64_t> out(fa);
  for (std::uint64_t e = 0; e < fa; ++e) out[e] = fev[str[code * fa + e]];
  return out;
}

std::vector<std::uint64_t> strength_from_enrichment(const Container& f, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t fb = f.size_on(b);
  std::vector<std::uint64_t> out(a * fb);
  for (std::uint64_t x = 0; x < a; ++x) {
    std::vector<std::uint64_t> pair(b);
    for (std::uint64_t y = 0; y < b; ++y) pair[y] = x * b + y;
    const auto img = functor_action(f, pair, b, a * b);
    for (std::uint64_t e = 0; e < fb; ++e) out[x * fb + e] = img[e];
  }
  return out;
}

CheckReport strength_enrichment_roundtrip(const Container& f, std::uint32_t max_size) {
  CheckReport rep;
  rep.suite = "strength:" + f.name();
  CheckInstance s2e = make_instance("strength.from-enrichment"), e2s = make_instance("enrichment.from-strength"), unit = make_instance("strength.unit"),
      assoc = make_instance("strength.assoc");
  auto fail = [](CheckInstance& i, const std::string& w) {
    if (i.pass) i.witness = w;
    i.pass = false;
  };
  for (std::uint64_t a = 0; a <= max_size; ++a)
    for (std::uint64_t b = 0; b <= max_size; ++b) {
      const std::string at = "|A|=" + std::to_string(a) + " |B|=" + std::to_string(b);
      if (strength_from_enrichment(f, a, b) != strength(f, a, b)) fail(s2e, at);
      const std::uint64_t homs = sat_pow(b, a);
      for (std::uint64_t g = 0; g < homs; ++g) {
        std::vector<std::uint64_t> h(a);
        std::uint64_t rest = g;
        for (std::uint64_t i = a; i-- > 0;) {
          h[i] = rest % b;
          rest /= b;
        }
        if (enrichment_from_strength(f, h, a, b) != functor_action(f, h, a, b)) fail(e2s, at + " h#" + std::to_string(g));
      }
    }
  for (std::uint64_t b = 0; b <= max_size; ++b) {
    const auto s = strength(f, 1, b);
    for (std::uint64_t e = 0; e < s.size(); ++e)
      if (s[e] != e) fail(unit, "|B|=" + std::to_string(b));
  }
  // Under the pair encoding both bracketings of A x A' x B coincide, so the
  // associativity coherence compares str_{AxA',B} with str_{A,A'xB} o (A x str_{A',B}).
  for (std::uint64_t a = 0; a <= max_size; ++a)
    for (std::uint64_t a2 = 0; a2 <= max_size; ++a2)
      for (std::uint64_t b = 0; b <= max_size; ++b) {
        const auto big = strength(f, a * a2, b);
        const auto inner = strength(f, a2, b);
        const auto outer = strength(f, a, a2 * b);
        const std::uint64_t fb = f.size_on(b), fab = f.size_on(a2 * b);
        for (std::uint64_t x = 0; x < a; ++x)
          for (std::uint64_t y = 0; y < a2; ++y)
            for (std::uint64_t e = 0; e < fb; ++e)
              if (big[(x * a2 + y) * fb + e] != outer[x * fab + inner[y * fb + e]])
                fail(assoc, "|A|=" + std::to_string(a) + " |A'|=" + std::to_string(a2) + " |B|=" + std::to_string(b));
      }
  rep.add(e2s);
  rep.add(s2e);
  rep.add(assoc);
  rep.add(unit);
  rep.sort_by_tag();
  return rep;
}

}  // namespace graydist
