#include "graydist/laws.hpp"

#include <stdexcept>

namespace graydist {

namespace {
Morphism wl(const Container& left, const Morphism& m) { return whisker(left, m, {}); }
Morphism wr(const Morphism& m, const Container& right) { return whisker({}, m, right); }
Morphism v3(const Morphism& c, const Morphism& b, const Morphism& a) { return vertical(c, vertical(b, a)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw BoundaryMismatch(what);
}
}  // namespace

void validate_dist_law(const DistLawData& d) {
  validate_monad(d.first);
  validate_monad(d.second);
  const Container &t1 = d.first.functor, &t2 = d.second.functor;
  require(d.law && d.law->src == t2 * t1 && d.law->tgt == t1 * t2, "law boundary of " + law_name(d));
}

std::string law_name(const DistLawData& d) { return d.second.name + "." + d.first.name + "->" + d.first.name + "." + d.second.name; }

CheckReport check_dist_law(const DistLawData& d, const CheckOptions& opt) {
  validate_dist_law(d);
  const Container &t1 = d.first.functor, &t2 = d.second.functor;
  const Morphism &e1 = d.first.unit, &m1 = d.first.mult, &e2 = d.second.unit, &m2 = d.second.mult, &g = d.law;
  CheckReport rep;
  rep.suite = "dist:" + law_name(d);
  rep.add(equality_instance("dist.unit-first", vertical(g, wl(t2, e1)), wr(e1, t2), opt));
  rep.add(equality_instance("dist.unit-second", vertical(g, wr(e2, t1)), wl(t1, e2), opt));
  rep.add(equality_instance("dist.mult-first", vertical(g, wl(t2, m1)), v3(wr(m1, t2), wl(t1, g), wr(g, t1)), opt));
  rep.add(equality_instance("dist.mult-second", vertical(g, wr(m2, t1)), v3(wl(t1, m2), wr(g, t2), wl(t2, g)), opt));
  rep.sort_by_tag();
  return rep;
}

MonadData compose_via_law(const DistLawData& d) {
  validate_dist_law(d);
  const Container &t1 = d.first.functor, &t2 = d.second.functor;
  MonadData m;
  m.name = d.first.name + "*" + d.second.name;
  m.functor = t1 * t2;
  m.unit = horizontal(d.first.unit, d.second.unit);
  m.mult = vertical(horizontal(d.first.mult, d.second.mult), whisker(t1, d.law, t2));
  return m;
}

// ---------------------------------------------------------------------------
// Mnd(B)

MonadMorphismData identity_monad_morphism(const MonadData& m) { return {Container{}, identity(m.functor)}; }

MonadMorphismData compose_monad_morphisms(const MonadMorphismData& g, const MonadMorphismData& f) {
  return {g.carrier * f.carrier, vertical(wl(g.carrier, f.phi), wr(g.phi, f.carrier))};
}

CheckReport check_monad_morphism(const MonadData& source, const MonadData& target, const MonadMorphismData& m,
                                 const CheckOptions& opt) {
  validate_monad(source);
  validate_monad(target);
  const Container &f = m.carrier, &tx = source.functor, &ty = target.functor;
  require(m.phi && m.phi->src == ty * f && m.phi->tgt == f * tx, "monad morphism boundary");
  CheckReport rep;
  rep.suite = "mnd-1-cell:" + source.name + "->" + target.name;
  rep.add(equality_instance("mnd.1-cell.unit", vertical(m.phi, wr(target.unit, f)), wl(f, source.unit), opt));
  rep.add(equality_instance("mnd.1-cell.mult", vertical(m.phi, wr(target.mult, f)),
                            v3(wl(f, source.mult), wr(m.phi, tx), wl(ty, m.phi)), opt));
  rep.sort_by_tag();
  return rep;
}

CheckInstance check_mnd_two_cell(const MonadData& source, const MonadData& target, const MonadMorphismData& f,
                                 const MonadMorphismData& g, const Morphism& alpha, const std::string& tag,
                                 const CheckOptions& opt) {
  require(alpha->src == f.carrier && alpha->tgt == g.carrier, "2-cell boundary");
  return equality_instance(tag, vertical(wr(alpha, source.functor), f.phi), vertical(g.phi, wl(target.functor, alpha)),
                           opt);
}

// ---------------------------------------------------------------------------
// monads in Mnd

MonadInMnd encode_as_monad_in_mnd(const DistLawData& d) {
  validate_dist_law(d);
  return MonadInMnd{d.second, d.first.name, {d.first.functor, d.law}, d.first.unit, d.first.mult};
}

DistLawData decode_from_monad_in_mnd(const MonadInMnd& m) {
  DistLawData d{MonadData{m.carrier_name, m.one_cell.carrier, m.unit, m.mult}, m.base, m.one_cell.phi};
  validate_dist_law(d);
  return d;
}

CheckReport check_monad_in_mnd(const MonadInMnd& m, const CheckOptions& opt) {
  const MonadData carrier{m.carrier_name, m.one_cell.carrier, m.unit, m.mult};
  validate_monad(carrier);
  CheckReport rep;
  rep.suite = "mnd-monad:" + m.carrier_name + "/" + m.base.name;
  rep.merge(check_monad_morphism(m.base, m.base, m.one_cell, opt));
  const MonadMorphismData idm = identity_monad_morphism(m.base);
  rep.add(check_mnd_two_cell(m.base, m.base, idm, m.one_cell, m.unit, "mnd.unit-2-cell", opt));
  const MonadMorphismData sq = compose_monad_morphisms(m.one_cell, m.one_cell);
  rep.add(check_mnd_two_cell(m.base, m.base, sq, m.one_cell, m.mult, "mnd.mult-2-cell", opt));
  CheckReport mon = check_monad(carrier, opt);
  for (auto& i : mon.instances) i.tag = "mnd." + i.tag;
  rep.merge(mon);
  rep.sort_by_tag();
  return rep;
}

std::string dist_axiom_for_mnd_condition(const std::string& tag) {
  if (tag == "mnd.1-cell.unit") return "dist.unit-second";
  if (tag == "mnd.1-cell.mult") return "dist.mult-second";
  if (tag == "mnd.unit-2-cell") return "dist.unit-first";
  if (tag == "mnd.mult-2-cell") return "dist.mult-first";
  return "";
}

bool same_monad(const MonadData& a, const MonadData& b) {
  auto same = [](const Morphism& x, const Morphism& y) { return x == y || (x->src == y->src && x->tgt == y->tgt && morphism_equal(x, y)); };
  return a.name == b.name && a.functor == b.functor && same(a.unit, b.unit) && same(a.mult, b.mult);
}

bool same_dist_law(const DistLawData& a, const DistLawData& b) {
  return same_monad(a.first, b.first) && same_monad(a.second, b.second) &&
         (a.law == b.law || (a.law->src == b.law->src && a.law->tgt == b.law->tgt && morphism_equal(a.law, b.law)));
}

MonadData dist_projection(const DistLawData& d, Projection which) {
  switch (which) {
    case Projection::u1:
      return d.second;
    case Projection::u2:
      return d.first;
    case Projection::c:
      return compose_via_law(d);
  }
  throw std::invalid_argument("unknown projection");
}

// ---------------------------------------------------------------------------
// Dist(B)

DistMorphismData identity_dist_morphism(const DistLawData& d) {
  return {Container{}, identity(d.second.functor), identity(d.first.functor)};
}

DistMorphismData compose_dist_morphisms(const DistMorphismData& g, const DistMorphismData& f) {
  return {g.carrier * f.carrier, vertical(wl(g.carrier, f.phi), wr(g.phi, f.carrier)),
          vertical(wl(g.carrier, f.psi), wr(g.psi, f.carrier))};
}

MonadMorphismData dist_projection_on_morphism(const DistMorphismData& m, Projection which) {
  switch (which) {
    case Projection::u1:
      return {m.carrier, m.phi};
    case Projection::u2:
      return {m.carrier, m.psi};
    case Projection::c: {
      // (psi.t) o (u.phi) : u.r.f -> f.s.t
      const Container u = m.psi->src.slice(0, m.psi->src.length() - m.carrier.length());
      const Container t = m.phi->tgt.slice(m.carrier.length(), m.phi->tgt.length());
      return {m.carrier, vertical(wr(m.psi, t), wl(u, m.phi))};
    }
  }
  throw std::invalid_argument("unknown projection");
}

CheckReport check_dist_morphism(const DistLawData& src, const DistLawData& tgt, const DistMorphismData& m,
                                const CheckOptions& opt) {
  validate_dist_law(src);
  validate_dist_law(tgt);
  const Container& f = m.carrier;
  const Container &t = src.second.functor, &s = src.first.functor;
  const Container &r = tgt.second.functor, &u = tgt.first.functor;
  CheckReport rep;
  rep.suite = "dist-1-cell:" + law_name(src) + "=>" + law_name(tgt);
  CheckReport a = check_monad_morphism(src.second, tgt.second, {f, m.phi}, opt);
  for (auto& i : a.instances) i.tag = "distmor.a." + i.tag.substr(std::string("mnd.1-cell.").size());
  CheckReport b = check_monad_morphism(src.first, tgt.first, {f, m.psi}, opt);
  for (auto& i : b.instances) i.tag = "distmor.b." + i.tag.substr(std::string("mnd.1-cell.").size());
  rep.merge(a);
  rep.merge(b);
  rep.add(equality_instance("distmor.c", v3(wr(m.psi, t), wl(u, m.phi), wr(tgt.law, f)),
                            v3(wl(f, src.law), wr(m.phi, s), wl(r, m.psi)), opt));
  rep.sort_by_tag();
  return rep;
}

CheckReport check_yang_baxter(const Morphism& l12, const Morphism& l13, const Morphism& l23, const MonadData& t1,
                              const MonadData& t2, const MonadData& t3, const CheckOptions& opt) {
  const Container &a = t1.functor, &b = t2.functor, &c = t3.functor;
  require(l12->src == a * b && l12->tgt == b * a, "yang-baxter: boundary of l12");
  require(l13->src == a * c && l13->tgt == c * a, "yang-baxter: boundary of l13");
  require(l23->src == b * c && l23->tgt == c * b, "yang-baxter: boundary of l23");
  CheckReport rep;
  rep.suite = "yang-baxter:" + t1.name + "," + t2.name + "," + t3.name;
  rep.add(equality_instance("yang-baxter(1,2,3)", v3(wl(c, l12), wr(l13, b), wl(a, l23)),
                            v3(wr(l23, a), wl(b, l13), wr(l12, c)), opt));
  return rep;
}

const DistLawData& NFoldSystem::law(int i, int j) const {
  auto it = laws.find({i, j});
  if (it == laws.end()) throw std::out_of_range("missing law (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

void validate_nfold(const NFoldSystem& s) {
  if (s.n < 1 || static_cast<int>(s.monads.size()) != s.n) throw std::invalid_argument("n-fold system size mismatch");
  for (const auto& m : s.monads) validate_monad(m);
  if (static_cast<int>(s.laws.size()) != s.n * (s.n - 1) / 2) throw std::invalid_argument("n-fold system law count");
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j) {
      const DistLawData& d = s.law(i, j);
      validate_dist_law(d);
      require(d.first.functor == s.monads[j - 1].functor && d.second.functor == s.monads[i - 1].functor,
              "law (" + std::to_string(i) + "," + std::to_string(j) + ") does not match its monads");
    }
}

CheckReport check_nfold(const NFoldSystem& s, const CheckOptions& opt) {
  validate_nfold(s);
  CheckReport rep;
  rep.suite = "nfold(" + std::to_string(s.n) + ")";
  for (int k = 1; k <= s.n; ++k) rep.merge(check_monad(s.monads[k - 1], opt), "monad(" + std::to_string(k) + ")");
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j)
      rep.merge(check_dist_law(s.law(i, j), opt), "law(" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 1; i <= s.n; ++i)
    for (int j = i + 1; j <= s.n; ++j)
      for (int k = j + 1; k <= s.n; ++k) {
        CheckReport yb = check_yang_baxter(s.law(i, j).law, s.law(i, k).law, s.law(j, k).law, s.monads[i - 1],
                                           s.monads[j - 1], s.monads[k - 1], opt);
        for (auto& inst : yb.instances)
          inst.tag = "yang-baxter(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        rep.merge(yb);
      }
  rep.sort_by_tag();
  return rep;
}

}  // namespace graydist
