#include "graydist/suites.hpp"

#include <map>
#include <set>

#include "graydist/classifier.hpp"
#include "graydist/ordinals.hpp"

namespace graydist {

namespace {
void fail(CheckInstance& i, const std::string& w) {
  if (i.pass) i.witness = w;
  i.pass = false;
}

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

std::set<std::string> failing(const CheckReport& r) {
  auto v = r.failing_tags();
  return {v.begin(), v.end()};
}
}  // namespace

CheckReport composition_suite(const DistLawData& d, const CheckOptions& opt) {
  const MonadData c = compose_via_law(d);
  CheckReport rep;
  rep.suite = "compose:" + law_name(d);
  rep.merge(check_monad(c, opt));
  CheckInstance act = make_instance("compose.action");
  const Container &t1 = d.first.functor, &t2 = d.second.functor;
  for (std::uint64_t x = 0; x <= opt.max_set_size; ++x) {
    if (eval_on_set(c.functor, x) != eval_on_set(t1, eval_on_set(t2, x))) fail(act, "|X|=" + std::to_string(x));
    for (std::uint64_t y = 0; y <= opt.max_set_size; ++y)
      for (const auto& h : all_functions(x, y)) {
        const auto direct = functor_action(c.functor, h, x, y);
        const auto nested = functor_action(t1, functor_action(t2, h, x, y), eval_on_set(t2, x), eval_on_set(t2, y));
        if (direct != nested) fail(act, "|X|=" + std::to_string(x) + " |Y|=" + std::to_string(y));
      }
  }
  rep.add(act);
  rep.sort_by_tag();
  return rep;
}

std::vector<Morphism> law_mutations(const Morphism& law) {
  const MorphismTable base = materialize(law);
  const std::uint64_t nt = base.tgt.shape_count();
  std::vector<std::size_t> arity(nt);
  for (std::uint64_t s = 0; s < nt; ++s) arity[s] = leaf_count(generic_tree(base.tgt, s), base.tgt.length());
  std::vector<Morphism> out;
  const std::string label = law->label.empty() ? "law" : law->label;
  for (std::size_t s = 0; s < base.shape_map.size(); ++s) {
    const std::size_t src_arity = leaf_count(generic_tree(base.src, s), base.src.length());
    for (std::uint64_t t = 0; t < nt; ++t) {
      if (t == base.shape_map[s] || arity[t] != base.position_maps[s].size()) continue;
      MorphismTable m = base;
      m.shape_map[s] = t;
      out.push_back(make_table(std::move(m), label + "[shape " + std::to_string(s) + "->" + std::to_string(t) + "]"));
    }
    for (std::size_t p = 0; p < base.position_maps[s].size(); ++p)
      for (std::uint32_t q = 0; q < src_arity; ++q) {
        if (q == base.position_maps[s][p]) continue;
        MorphismTable m = base;
        m.position_maps[s][p] = q;
        out.push_back(make_table(std::move(m), label + "[shape " + std::to_string(s) + " pos " + std::to_string(p) +
                                                   "->" + std::to_string(q) + "]"));
      }
  }
  return out;
}

MutationStats mnd_mutation_stats(const DistLawData& d, const CheckOptions& opt) {
  MutationStats st;
  for (const Morphism& mut : law_mutations(d.law)) {
    ++st.total;
    const DistLawData md{d.first, d.second, mut};
    const auto dist_fail = failing(check_dist_law(md, opt));
    if (dist_fail.size() != 1) continue;
    ++st.single_axiom;
    const auto mnd_fail = failing(check_monad_in_mnd(encode_as_monad_in_mnd(md), opt));
    if (mnd_fail.size() == 1 && dist_axiom_for_mnd_condition(*mnd_fail.begin()) == *dist_fail.begin()) {
      ++st.matched;
    } else if (st.first_mismatch.empty()) {
      st.first_mismatch = mut->label;
    }
  }
  return st;
}

CheckReport mnd_in_mnd_suite(const DistLawData& d, bool mutations, const CheckOptions& opt) {
  CheckReport rep;
  rep.suite = "mnd-in-mnd:" + law_name(d);
  const MonadInMnd enc = encode_as_monad_in_mnd(d);
  CheckInstance rt = make_instance("mnd.roundtrip");
  if (!same_dist_law(decode_from_monad_in_mnd(enc), d)) fail(rt, "decode(encode(law)) differs");
  rep.add(rt);
  const CheckReport mnd = check_monad_in_mnd(enc, opt);
  rep.merge(mnd);
  CheckInstance agree = make_instance("mnd.conditions");
  const CheckReport dist = check_dist_law(d, opt);
  for (const auto& i : mnd.instances) {
    const std::string ax = dist_axiom_for_mnd_condition(i.tag);
    if (ax.empty()) continue;
    const CheckInstance* j = dist.find(ax);
    if (!j || j->pass != i.pass) fail(agree, i.tag + " disagrees with " + ax);
  }
  rep.add(agree);
  if (mutations) {
    const MutationStats st = mnd_mutation_stats(d, opt);
    CheckInstance mi = make_instance("mnd.mutations");
    if (st.matched != st.single_axiom) fail(mi, "mutant " + st.first_mismatch);
    rep.add(mi);
  }
  rep.sort_by_tag();
  return rep;
}

CheckReport duality_suite(int max_size) {
  CheckReport rep;
  rep.suite = "duality";
  CheckInstance card = make_instance("duality.cardinality"), inj = make_instance("duality.injective"),
                inv = make_instance("duality.inverse"), contra = make_instance("duality.contravariant"),
                ident = make_instance("duality.identity");
  std::map<std::pair<int, int>, std::vector<MonotoneMap>> hom;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b) hom[{a, b}] = enumerate_monotone(a, b);
  for (int a = 0; a <= max_size; ++a) {
    if (!(dualize(MonotoneMap::identity(a)) == IntervalMap(MonotoneMap::identity(a + 1))))
      fail(ident, "[" + std::to_string(a) + "]");
    for (int b = 0; b <= max_size; ++b) {
      const std::string at = std::to_string(a) + "->" + std::to_string(b);
      const auto& fs = hom[{a, b}];
      const auto is = enumerate_interval(b + 1, a + 1);
      if (fs.size() != is.size()) fail(card, at);
      std::set<std::vector<int>> seen;
      for (const auto& f : fs) {
        const IntervalMap d = dualize(f);
        seen.insert(d.values());
        if (!(undualize(d) == f)) fail(inv, to_string(f));
      }
      if (seen.size() != fs.size()) fail(inj, at);
      for (const auto& i : is)
        if (!(dualize(undualize(i)) == i)) fail(inv, "interval map on " + at);
    }
  }
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (int c = 0; c <= max_size; ++c)
        for (const auto& f : hom[{a, b}])
          for (const auto& g : hom[{b, c}])
            if (!(dualize(compose(g, f)) == compose(dualize(f), dualize(g))))
              fail(contra, to_string(g) + " after " + to_string(f));
  for (auto* i : {&card, &contra, &ident, &inj, &inv}) rep.add(*i);
  return rep;
}

CheckReport classifier_suite(int max_size, const std::vector<MonadData>& monads) {
  CheckReport rep;
  rep.suite = "classifier";
  const Presentation b = hat_base_terminal();
  CheckInstance count = make_instance("hat.count"), vert = make_instance("hat.vertical"),
                hor = make_instance("hat.horizontal"), inter = make_instance("hat.interchange");
  std::map<std::pair<int, int>, std::vector<HatTwoCell>> hom;
  for (int m = 0; m <= max_size; ++m)
    for (int n = 0; n <= max_size; ++n) {
      auto cells = hat_terminal_hom(m, n);
      const std::uint64_t expect = m == 0 ? 1 : binomial(m + n - 1, m);
      std::set<std::vector<int>> classified;
      for (const auto& c : cells) {
        validate_hat_cell(b, c);
        classified.insert(hat_terminal_classify(c).values);
      }
      std::set<std::vector<int>> delta;
      for (const auto& f : enumerate_monotone(m, n)) delta.insert(f.values);
      if (cells.size() != expect || classified != delta)
        fail(count, "(" + std::to_string(m) + "," + std::to_string(n) + "): " + std::to_string(cells.size()));
      hom[{m, n}] = std::move(cells);
    }
  for (int x = 0; x <= max_size; ++x)
    for (int y = 0; y <= max_size; ++y)
      for (int z = 0; z <= max_size; ++z)
        for (const auto& c1 : hom[{x, y}])
          for (const auto& c2 : hom[{y, z}]) {
            const HatTwoCell v = hat_vertical(b, c2, c1);
            const MonotoneMap f = hat_terminal_classify(c1), g = hat_terminal_classify(c2);
            if (!hat_cell_equal(v, hat_terminal_cell(compose(g, f))) || !(hat_terminal_classify(v) == compose(g, f)))
              fail(vert, to_string(g) + " after " + to_string(f));
          }
  std::vector<const HatTwoCell*> all;
  for (const auto& [k, v] : hom)
    for (const auto& c : v) all.push_back(&c);
  for (const HatTwoCell* c1 : all)
    for (const HatTwoCell* c2 : all) {
      const HatTwoCell h = hat_horizontal(b, *c2, *c1);
      const MonotoneMap sum = ordinal_sum(hat_terminal_classify(*c1), hat_terminal_classify(*c2));
      if (!hat_cell_equal(h, hat_terminal_cell(sum)) || !(hat_terminal_classify(h) == sum))
        fail(hor, to_string(sum));
    }
  // Interchange, lengths <= 2.
  const int li = std::min(max_size, 2);
  for (int f = 0; f <= li; ++f)
    for (int g = 0; g <= li; ++g)
      for (int h = 0; h <= li; ++h)
        for (int f2 = 0; f2 <= li; ++f2)
          for (int g2 = 0; g2 <= li; ++g2)
            for (int h2 = 0; h2 <= li; ++h2)
              for (const auto& a : hom[{f, g}])
                for (const auto& be : hom[{g, h}])
                  for (const auto& ga : hom[{f2, g2}])
                    for (const auto& de : hom[{g2, h2}]) {
                      const HatTwoCell lhs = hat_horizontal(b, hat_vertical(b, be, a), hat_vertical(b, de, ga));
                      const HatTwoCell rhs = hat_vertical(b, hat_horizontal(b, be, de), hat_horizontal(b, a, ga));
                      if (!hat_cell_equal(lhs, rhs)) fail(inter, "lengths " + std::to_string(f) + std::to_string(g) +
                                                                     std::to_string(h) + "/" + std::to_string(f2) +
                                                                     std::to_string(g2) + std::to_string(h2));
                    }
  for (auto* i : {&count, &hor, &inter, &vert}) rep.add(*i);
  for (const auto& m : monads) {
    CheckInstance t = make_instance("hat.tilde(" + m.name + ")");
    if (!same_monad(tilde_of_assignment(hat_of_monad(m), m.name), m)) fail(t, "tilde(hat(" + m.name + ")) differs");
    rep.add(t);
  }
  rep.sort_by_tag();
  return rep;
}

CheckReport gray_counts_suite(int max_n) {
  CheckReport rep;
  rep.suite = "gray";
  for (int n = 0; n <= max_n; ++n) {
    const Presentation p = mnd_power(terminal_presentation(), n);
    validate_presentation(p);
    const std::string s = "(" + std::to_string(n) + ")";
    const std::uint64_t c2 = binomial(n, 2), c3 = binomial(n, 3);
    CheckInstance one = make_instance("gray.one-gens" + s), two = make_instance("gray.two-gens" + s),
                  yb = make_instance("gray.yang-baxter" + s);
    if (p.one_gens.size() != static_cast<std::size_t>(n)) fail(one, std::to_string(p.one_gens.size()));
    if (p.two_gens.size() != 2 * static_cast<std::size_t>(n) + c2) fail(two, std::to_string(p.two_gens.size()));
    const std::size_t ybc = count_relations_with_prefix(p, "yang-baxter");
    if (ybc != c3) fail(yb, std::to_string(ybc));
    rep.add(one);
    rep.add(two);
    rep.add(yb);
  }
  rep.sort_by_tag();
  return rep;
}

}  // namespace graydist
