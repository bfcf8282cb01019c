#include "graydist/parametric.hpp"

#include <functional>
#include <sstream>

namespace graydist {

namespace {
Tree replace_leaves(const Tree& t, std::size_t depth, const std::function<Tree(const Tree&)>& fn) {
  if (depth == 0) return fn(t);
  Tree out{t.value, {}};
  for (const Tree& k : t.kids) out.kids.push_back(replace_leaves(k, depth - 1, fn));
  return out;
}

void fail(CheckInstance& i, const std::string& w) {
  if (i.pass) i.witness = w;
  i.pass = false;
}

std::vector<std::uint64_t> component(const Morphism& m, std::uint64_t x, const CheckOptions& opt) {
  auto v = eval_morphism_on_set(m, x, opt.oracle_cap);
  if (!v) throw std::runtime_error("component too large to evaluate at |X|=" + std::to_string(x));
  return *v;
}

std::vector<std::uint64_t> after(const std::vector<std::uint64_t>& g, const std::vector<std::uint64_t>& f) {
  std::vector<std::uint64_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

// All functions of the given domain size into cod, as value tables.
std::vector<std::vector<std::uint64_t>> all_functions(std::uint64_t dom, std::uint64_t cod) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::uint64_t n = sat_pow(cod, dom);
  for (std::uint64_t c = 0; c < n; ++c) {
    std::vector<std::uint64_t> f(dom);
    std::uint64_t rest = c;
    for (std::uint64_t i = dom; i-- > 0;) {
      f[i] = rest % cod;
      rest /= cod;
    }
    out.push_back(std::move(f));
  }
  return out;
}
}  // namespace

// ---------------------------------------------------------------------------
// modules

bool writer_module_lawful(const MonoidTable& m, const WriterModule& x) {
  const std::uint64_t a = x.carrier;
  if (x.action.size() != m.size * a) return false;
  for (std::uint64_t v : x.action)
    if (v >= a) return false;
  for (std::uint64_t e = 0; e < a; ++e) {
    if (x.action[m.unit * a + e] != e) return false;
    for (std::uint32_t p = 0; p < m.size; ++p)
      for (std::uint32_t q = 0; q < m.size; ++q)
        if (x.action[p * a + x.action[q * a + e]] != x.action[m(p, q) * a + e]) return false;
  }
  return true;
}

WriterModule make_writer_module(const MonoidTable& m, std::uint64_t carrier, std::vector<std::uint64_t> action) {
  WriterModule x{carrier, std::move(action)};
  if (!writer_module_lawful(m, x)) throw InvalidModule("action is not a module over " + m.name);
  return x;
}

WriterModule free_writer_module(const MonoidTable& m, std::uint64_t a) {
  const std::uint64_t n = m.size * a;
  std::vector<std::uint64_t> act(m.size * n);
  for (std::uint32_t p = 0; p < m.size; ++p)
    for (std::uint32_t q = 0; q < m.size; ++q)
      for (std::uint64_t e = 0; e < a; ++e) act[p * n + q * a + e] = m(p, q) * a + e;
  return make_writer_module(m, n, std::move(act));
}

std::vector<WriterModule> default_writer_samples(const MonoidTable& m) {
  std::vector<WriterModule> out;
  for (std::uint64_t a = 1; a <= 2; ++a) out.push_back(free_writer_module(m, a));
  for (std::uint64_t a = 0; a <= 2; ++a)
    for (auto& act : all_functions(m.size * a, a)) {
      WriterModule x{a, act};
      if (writer_module_lawful(m, x)) out.push_back(std::move(x));
    }
  return out;
}

// ---------------------------------------------------------------------------
// laws

Morphism writer_strength(const MonoidTable& m, const Container& f) {
  const Container w = Container::of(writer_atom(m.size));
  const std::size_t k = f.length();
  return from_function(
      w * f, f * w,
      [k](const Tree& x) {
        const std::uint32_t s = x.value;
        return replace_leaves(x.kids[0], k, [s](const Tree& l) { return Tree{s, {l}}; });
      },
      "str[" + f.name() + "]");
}

Morphism either_lift(std::uint32_t a, const Container& f, const Morphism& point) {
  if (!point->src.is_identity() || !(point->tgt == f)) throw BoundaryMismatch("point of " + f.name());
  const Container e = Container::of(either_atom(a));
  const std::size_t k = f.length();
  const Tree unit_tree = graydist::apply(point, Tree{0, {}});
  return from_function(
      e * f, f * e,
      [a, k, unit_tree](const Tree& x) {
        if (x.value < a) {
          const std::uint32_t s = x.value;
          return replace_leaves(unit_tree, k, [s](const Tree&) { return Tree{s, {}}; });
        }
        return replace_leaves(x.kids[0], k, [a](const Tree& l) { return Tree{a, {l}}; });
      },
      "lift[" + f.name() + "]");
}

DistLawData dwriter(const MonoidTable& m, const MonadData& t) {
  validate_monad(t);
  return DistLawData{t, writer(m), writer_strength(m, t.functor)};
}

DistLawData deither(std::uint32_t a, const MonadData& t) {
  validate_monad(t);
  return DistLawData{t, either(a), either_lift(a, t.functor, t.unit)};
}

std::string ParamKind::name() const {
  return kind == writer_kind ? "dwriter(" + monoid.name + ")" : "deither(" + std::to_string(a) + ")";
}

DistLawData parametric_law(const ParamKind& k, const MonadData& t) {
  return k.kind == ParamKind::writer_kind ? dwriter(k.monoid, t) : deither(k.a, t);
}

DistMorphismData parametric_on_morphism(const ParamKind& k, const MonadMorphismData& m,
                                        const std::optional<Morphism>& point) {
  if (k.kind == ParamKind::writer_kind) return {m.carrier, writer_strength(k.monoid, m.carrier), m.phi};
  Morphism p;
  if (point) {
    p = *point;
  } else if (m.carrier.is_identity()) {
    p = identity(Container{});
  } else {
    throw InvalidParameter("deither on a non-identity carrier needs a point");
  }
  return {m.carrier, either_lift(k.a, m.carrier, p), m.phi};
}

CheckReport check_parametric_functoriality(const ParamKind& k, const MonadData& t, const MonadData& t2,
                                           const MonadMorphismData& m, const CheckOptions& opt) {
  CheckReport rep;
  rep.suite = k.name() + " on " + t.name + "->" + t2.name;
  CheckReport pre = check_monad_morphism(t, t2, m, opt);
  rep.merge(pre, "premise");
  const DistLawData src = parametric_law(k, t), tgt = parametric_law(k, t2);
  rep.merge(check_dist_morphism(src, tgt, parametric_on_morphism(k, m), opt));
  const DistMorphismData idimg = parametric_on_morphism(k, identity_monad_morphism(t));
  const DistMorphismData idd = identity_dist_morphism(src);
  rep.add(equality_instance("functor.identity.phi", idimg.phi, idd.phi, opt));
  rep.add(equality_instance("functor.identity.psi", idimg.psi, idd.psi, opt));
  rep.sort_by_tag();
  return rep;
}

CheckReport check_parametric_composition(const ParamKind& k, const MonadMorphismData& m1,
                                         const MonadMorphismData& m2, const CheckOptions& opt) {
  CheckReport rep;
  rep.suite = k.name() + " composition";
  const DistMorphismData lhs = parametric_on_morphism(k, compose_monad_morphisms(m2, m1));
  const DistMorphismData rhs = compose_dist_morphisms(parametric_on_morphism(k, m2), parametric_on_morphism(k, m1));
  if (!(lhs.carrier == rhs.carrier)) throw BoundaryMismatch("composite carriers differ");
  rep.add(equality_instance("functor.compose.phi", lhs.phi, rhs.phi, opt));
  rep.add(equality_instance("functor.compose.psi", lhs.psi, rhs.psi, opt));
  return rep;
}

// ---------------------------------------------------------------------------
// lifts

CheckReport lift_writer_modules(const MonoidTable& m, const MonadData& t, const std::vector<WriterModule>& samples,
                                const CheckOptions& opt) {
  validate_monad(t);
  const Container& tf = t.functor;
  const std::uint64_t ms = m.size;
  const Morphism law = dwriter(m, t).law;
  CheckReport rep;
  rep.suite = "lift-writer:" + m.name + "/" + t.name;
  CheckInstance unit = make_instance("lift.module-unit"), assoc = make_instance("lift.module-assoc"), carrier = make_instance("lift.carrier"),
      eta = make_instance("lift.unit-morphism"), mu = make_instance("lift.mult-morphism"), coh = make_instance("lift.law-coherence");
  for (std::size_t si = 0; si < samples.size(); ++si) {
    const WriterModule& x = samples[si];
    if (!writer_module_lawful(m, x)) throw InvalidModule("sample " + std::to_string(si) + " is not a module");
    const std::string at = "sample " + std::to_string(si) + " (|A|=" + std::to_string(x.carrier) + ")";
    const std::uint64_t a = x.carrier, ta = tf.size_on(a);
    // phi-hat = T(phi) o str
    const auto str = strength(tf, ms, a);
    const auto tphi = functor_action(tf, x.action, ms * a, a);
    const auto hat = after(tphi, str);
    const WriterModule lifted{ta, hat};
    if (hat.size() != ms * eval_on_set(tf, a)) fail(carrier, at);
    if (!writer_module_lawful(m, lifted)) {
      bool unit_ok = true;
      for (std::uint64_t e = 0; e < ta; ++e)
        if (hat[m.unit * ta + e] != e) unit_ok = false;
      fail(unit_ok ? assoc : unit, at);
      if (!unit_ok) {
        WriterModule probe = lifted;
        for (std::uint64_t e = 0; e < ta; ++e) probe.action[m.unit * ta + e] = e;
        if (!writer_module_lawful(m, probe)) fail(assoc, at);
      }
    }
    const auto law_a = component(law, a, opt);
    if (after(tphi, law_a) != hat) fail(coh, at);
    const auto eta_a = component(t.unit, a, opt);
    for (std::uint32_t p = 0; p < ms; ++p)
      for (std::uint64_t e = 0; e < a; ++e)
        if (eta_a[x.action[p * a + e]] != hat[p * ta + eta_a[e]]) fail(eta, at);
    const std::uint64_t tta = tf.size_on(ta);
    if (sat_mul(ms, tta) <= opt.oracle_cap && sat_mul(ms, tf.size_on(ms * ta)) <= opt.oracle_cap) {
      const auto str2 = strength(tf, ms, ta);
      const auto thathat = functor_action(tf, hat, ms * ta, ta);
      const auto hathat = after(thathat, str2);
      const auto mu_a = component(t.mult, a, opt);
      for (std::uint32_t p = 0; p < ms; ++p)
        for (std::uint64_t y = 0; y < tta; ++y)
          if (mu_a[hathat[p * tta + y]] != hat[p * ta + mu_a[y]]) fail(mu, at);
    } else {
      fail(mu, at + ": too large to evaluate");
    }
  }
  for (auto* i : {&assoc, &carrier, &coh, &mu, &unit, &eta}) rep.add(*i);
  rep.sort_by_tag();
  return rep;
}

std::vector<CosliceObject> default_coslice_samples(std::uint32_t a) {
  std::vector<CosliceObject> out;
  for (std::uint64_t x = 0; x <= 2; ++x)
    for (auto& f : all_functions(a, x)) out.push_back({x, f});
  return out;
}

std::vector<CosliceMorphism> coslice_morphisms(const std::vector<CosliceObject>& objs) {
  std::vector<CosliceMorphism> out;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (auto& h : all_functions(objs[i].carrier, objs[j].carrier))
        if (after(h, objs[i].point) == objs[j].point) out.push_back({i, j, h});
  return out;
}

CheckReport lift_coslice(std::uint32_t a, const Container& f, const Morphism& point, const std::optional<Morphism>& mult,
                         const std::vector<CosliceObject>& samples, const std::vector<CosliceMorphism>& morphisms,
                         const CheckOptions& opt) {
  if (!point->src.is_identity() || !(point->tgt == f)) throw BoundaryMismatch("point of " + f.name());
  CheckReport rep;
  rep.suite = "lift-coslice:" + std::to_string(a) + "/" + f.name();
  CheckInstance pt = make_instance("coslice.point"), fun = make_instance("coslice.functor"), nat = make_instance("coslice.point-natural"), ident = make_instance("coslice.identity"),
      comp = make_instance("coslice.composition"), mu = make_instance("coslice.mult");
  const auto ua = component(point, a, opt);
  std::vector<std::vector<std::uint64_t>> hats;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const CosliceObject& o = samples[i];
    if (o.point.size() != a) throw InvalidModule("coslice sample has the wrong domain");
    const std::string at = "object " + std::to_string(i);
    const auto fphi = functor_action(f, o.point, a, o.carrier);
    const auto hat = after(fphi, ua);
    hats.push_back(hat);
    const auto ux = component(point, o.carrier, opt);
    if (after(ux, o.point) != hat) fail(pt, at);
    const std::uint64_t fx = f.size_on(o.carrier);
    std::vector<std::uint64_t> idx(o.carrier);
    for (std::uint64_t e = 0; e < o.carrier; ++e) idx[e] = e;
    const auto fid = functor_action(f, idx, o.carrier, o.carrier);
    for (std::uint64_t e = 0; e < fx; ++e)
      if (fid[e] != e) fail(ident, at);
    if (mult) {
      const auto hathat = after(functor_action(f, hat, a, fx), ua);
      const auto mux = component(*mult, o.carrier, opt);
      if (after(mux, hathat) != hat) fail(mu, at);
    }
  }
  for (std::size_t k = 0; k < morphisms.size(); ++k) {
    const CosliceMorphism& h = morphisms[k];
    const CosliceObject &x = samples.at(h.from), &y = samples.at(h.to);
    if (after(h.map, x.point) != y.point) throw InvalidModule("sample map is not a coslice morphism");
    const std::string at = "morphism " + std::to_string(k);
    const auto fh = functor_action(f, h.map, x.carrier, y.carrier);
    if (after(fh, hats[h.from]) != hats[h.to]) fail(fun, at);
    if (after(fh, component(point, x.carrier, opt)) != after(component(point, y.carrier, opt), h.map)) fail(nat, at);
  }
  for (std::size_t k1 = 0; k1 < morphisms.size(); ++k1)
    for (std::size_t k2 = 0; k2 < morphisms.size(); ++k2) {
      const CosliceMorphism &h = morphisms[k1], &g = morphisms[k2];
      if (h.to != g.from) continue;
      const std::uint64_t x = samples[h.from].carrier, y = samples[h.to].carrier, z = samples[g.to].carrier;
      if (functor_action(f, after(g.map, h.map), x, z) !=
          after(functor_action(f, g.map, y, z), functor_action(f, h.map, x, y)))
        fail(comp, "morphisms " + std::to_string(k1) + "," + std::to_string(k2));
    }
  for (auto* i : {&comp, &fun, &ident, &pt, &nat}) rep.add(*i);
  if (mult) rep.add(mu);
  rep.sort_by_tag();
  return rep;
}

CheckInstance either_lift_law_coherence(std::uint32_t a, const MonadData& t, const CheckOptions& opt) {
  CheckInstance inst = make_instance("lift.law-coherence");
  const Container& tf = t.functor;
  const Morphism law = deither(a, t).law;
  const auto ua = component(t.unit, a, opt);
  for (std::uint64_t x = 0; x <= opt.max_set_size; ++x) {
    const auto lx = component(law, x, opt);
    std::vector<std::uint64_t> inl(a), inr(x);
    for (std::uint64_t i = 0; i < a; ++i) inl[i] = i;
    for (std::uint64_t i = 0; i < x; ++i) inr[i] = a + i;
    const auto tinl = functor_action(tf, inl, a, a + x);
    const auto tinr = functor_action(tf, inr, x, a + x);
    std::vector<std::uint64_t> expect;
    for (std::uint64_t i = 0; i < a; ++i) expect.push_back(tinl[ua[i]]);
    for (auto v : tinr) expect.push_back(v);
    if (expect != lx) fail(inst, "|X|=" + std::to_string(x));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// cocartesian structure

CocartesianMonoid unique_cocartesian_monoid(std::uint32_t a) {
  if (a > 3) throw InvalidParameter("size-limit-exceeded: |A| must be at most 3");
  CocartesianMonoid r;
  r.size = a;
  for (auto& m : all_functions(2 * a, a)) {
    ++r.candidates;
    bool ok = true;
    for (std::uint32_t x = 0; x < a && ok; ++x) ok = m[x] == x && m[a + x] == x;
    // (m + A) versus (A + m) on A + A + A
    for (std::uint32_t blk = 0; blk < 3 && ok; ++blk)
      for (std::uint32_t x = 0; x < a && ok; ++x) {
        const std::uint64_t l = blk == 2 ? m[a + x] : m[m[blk * a + x]];
        const std::uint64_t rr = blk == 0 ? m[x] : m[a + m[(blk - 1) * a + x]];
        ok = l == rr;
      }
    if (ok) {
      ++r.lawful;
      r.mult.assign(m.begin(), m.end());
    }
  }
  r.unique = r.lawful == 1;
  bool codiag = r.unique;
  for (std::uint32_t x = 0; x < a && codiag; ++x) codiag = r.mult[x] == x && r.mult[a + x] == x;
  r.is_codiagonal = codiag;
  return r;
}

CheckReport modules_coslice_iso(std::uint32_t a, std::uint32_t bound) {
  if (bound > 3) throw InvalidParameter("bound must be at most 3");
  CheckReport rep;
  rep.suite = "modules-coslice:" + std::to_string(a);
  CheckInstance count = make_instance("modules.count"), form = make_instance("modules.form"), round = make_instance("modules.roundtrip"), mor = make_instance("modules.morphisms");
  struct Mod {
    std::uint64_t x;
    std::vector<std::uint64_t> sigma;  // A + X -> X
  };
  std::vector<Mod> modules;
  std::vector<CosliceObject> coslices;
  for (std::uint64_t x = 0; x <= bound; ++x) {
    std::size_t found = 0;
    for (auto& s : all_functions(a + x, x)) {
      bool ok = true;
      for (std::uint64_t e = 0; e < x && ok; ++e) ok = s[a + e] == e;
      // sigma o (m + X) = sigma o (A + sigma) on A + A + X, m the codiagonal
      for (std::uint64_t i = 0; i < a && ok; ++i) ok = s[i] == s[i] && s[i] == s[a + s[i]];
      for (std::uint64_t e = 0; e < x && ok; ++e) ok = s[a + e] == s[a + s[a + e]];
      if (!ok) continue;
      ++found;
      modules.push_back({x, s});
    }
    auto cs = all_functions(a, x);
    for (auto& p : cs) coslices.push_back({x, p});
    if (found != cs.size())
      fail(count, "|X|=" + std::to_string(x) + ": " + std::to_string(found) + " modules, " + std::to_string(cs.size()) +
                      " coslice objects");
  }
  // module -> coslice: sigma o inl; coslice -> module: <phi, id>
  for (const auto& md : modules) {
    std::vector<std::uint64_t> phi(md.sigma.begin(), md.sigma.begin() + a);
    std::vector<std::uint64_t> back = phi;
    for (std::uint64_t e = 0; e < md.x; ++e) back.push_back(e);
    if (back != md.sigma) fail(form, "module on |X|=" + std::to_string(md.x));
    bool present = false;
    for (const auto& c : coslices)
      if (c.carrier == md.x && c.point == phi) present = true;
    if (!present) fail(round, "module on |X|=" + std::to_string(md.x));
  }
  for (const auto& c : coslices) {
    std::vector<std::uint64_t> s = c.point;
    for (std::uint64_t e = 0; e < c.carrier; ++e) s.push_back(e);
    bool present = false;
    for (const auto& md : modules)
      if (md.x == c.carrier && md.sigma == s) present = true;
    if (!present) fail(round, "coslice object on |X|=" + std::to_string(c.carrier));
  }
  for (const auto& m1 : modules)
    for (const auto& m2 : modules) {
      const std::vector<std::uint64_t> p1(m1.sigma.begin(), m1.sigma.begin() + a),
          p2(m2.sigma.begin(), m2.sigma.begin() + a);
      std::size_t nmod = 0, ncos = 0;
      for (auto& h : all_functions(m1.x, m2.x)) {
        bool module_map = true;
        for (std::uint64_t i = 0; i < a && module_map; ++i) module_map = h[m1.sigma[i]] == m2.sigma[i];
        for (std::uint64_t e = 0; e < m1.x && module_map; ++e) module_map = h[m1.sigma[a + e]] == m2.sigma[a + h[e]];
        const bool coslice_map = after(h, p1) == p2;
        if (module_map) ++nmod;
        if (coslice_map) ++ncos;
        if (module_map != coslice_map) fail(mor, "|X|=" + std::to_string(m1.x) + " |Y|=" + std::to_string(m2.x));
      }
      if (nmod != ncos) fail(mor, "morphism counts differ");
    }
  for (auto* i : {&count, &form, &mor, &round}) rep.add(*i);
  return rep;
}

}  // namespace graydist
