#include "doctest.h"
#include "graydist/gray.hpp"
#include "graydist/parametric.hpp"
#include "graydist/suites.hpp"

using namespace graydist;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

NFoldSystem triple(const MonadData& t3) {
  NFoldSystem s;
  s.n = 3;
  const MonadData e = either(1), w = writer(cyclic_monoid(2));
  s.monads = {e, w, t3};
  s.laws.emplace(std::make_pair(1, 2), deither(1, w));
  s.laws.emplace(std::make_pair(1, 3), deither(1, t3));
  s.laws.emplace(std::make_pair(2, 3), dwriter(cyclic_monoid(2), t3));
  return s;
}

NFoldSystem pair(const DistLawData& d) {
  NFoldSystem s;
  s.n = 2;
  s.monads = {d.second, d.first};
  s.laws.emplace(std::make_pair(1, 2), d);
  return s;
}

CheckOptions fast() {
  CheckOptions o;
  o.oracle = false;
  return o;
}

// Function composition of pointwise components: g after f.
std::vector<std::uint64_t> after(const std::vector<std::uint64_t>& g, const std::vector<std::uint64_t>& f) {
  std::vector<std::uint64_t> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

struct Cell {
  TermPtr term;
  Word src, tgt;
};

// Cells of one factor with boundary words of length <= 2.
std::vector<Cell> small_cells(const std::string& object, int k, int n) {
  const std::string t = factor_name("t", k, n);
  const Word e{object, {}}, w1{object, {t}}, w2{object, {t, t}};
  const TermPtr eta = gen(factor_name("eta", k, n)), mu = gen(factor_name("mu", k, n));
  return {{eta, e, w1},
          {mu, w2, w1},
          {id(w1), w1, w1},
          {id(w2), w2, w2},
          {hcomp(eta, id(w1)), w1, w2},
          {hcomp(id(w1), eta), w1, w2},
          {hcomp(eta, eta), e, w2},
          {vcomp(hcomp(eta, id(w1)), mu), w2, w2},
          {vcomp(mu, hcomp(id(w1), eta)), w1, w1}};
}

}  // namespace

TEST_SUITE("gray") {
  TEST_CASE("walking monad") {
    const Presentation p = walking_monad();
    CHECK(p.objects.size() == 1);
    CHECK(p.one_gens.size() == 1);
    CHECK(p.two_gens.size() == 2);
    CHECK(p.relations.size() == 3);
    for (const auto& r : p.relations)
      if (r.tag == "monad.assoc") {
        const auto [s, t] = typecheck_term(p, r.lhs);
        CHECK(s.gens.size() == 3);
        CHECK(t.gens.size() == 1);
      }
    CHECK(check_relations(monad_interpretation(maybe()), p).pass());
  }

  TEST_CASE("tensor of two walking monads") {
    const Presentation p = gray_tensor(walking_monad(), walking_monad());
    CHECK(p.objects.size() == 1);
    CHECK(p.one_gens.size() == 2);
    CHECK(p.two_gens.size() == 5);
  }

  TEST_CASE("terminal presentation is a unit") {
    const Presentation q = gray_tensor(terminal_presentation(), walking_monad());
    CHECK(q.one_gens.size() == 1);
    CHECK(q.two_gens.size() == 2);
    CHECK(q.relations.size() == 3);
    CHECK(presentation_equal(mnd_power(terminal_presentation(), 0), terminal_presentation()));
  }

  TEST_CASE("mnd_power counts") {
    for (int n = 0; n <= 4; ++n) {
      const Presentation p = mnd_power(terminal_presentation(), n);
      CHECK(p.one_gens.size() == static_cast<std::size_t>(n));
      CHECK(p.two_gens.size() == 2 * n + choose(n, 2));
      CHECK(count_relations_with_prefix(p, "yang-baxter") == choose(n, 3));
      CHECK(count_relations_with_prefix(p, "monad.") == static_cast<std::size_t>(3 * n));
    }
    CHECK(gray_counts_suite(4).pass());
  }

  TEST_CASE("crossings with identity words are identities") {
    const NFoldSystem s = triple(maybe());
    const Presentation p = mnd_power(terminal_presentation(), 3);
    const Interpretation in = encode_pdist(s);
    const std::string o = p.objects[0];
    const Word t1{o, {"t1"}}, t3{o, {"t3"}}, none{o, {}};
    CHECK(morphism_equal(extend_crossing(in, p, t1, none), identity(s.monads[0].functor)));
    CHECK(morphism_equal(extend_crossing(in, p, none, t3), identity(s.monads[2].functor)));
  }

  TEST_CASE("extend_crossing on longer words matches the pointwise ladder") {
    const DistLawData d = dwriter(cyclic_monoid(2), maybe());
    const NFoldSystem s = pair(d);
    const Presentation p = mnd_power(terminal_presentation(), 2);
    const Interpretation in = encode_pdist(s);
    const std::string o = p.objects[0];
    const Container a = s.monads[0].functor, b = s.monads[1].functor;
    const Morphism g = d.law;  // t1.t2 => t2.t1
    for (std::uint64_t x = 0; x <= 3; ++x) {
      // (t1.t1, t2): first t1.g, then g.t1.
      const auto lad1 = after(*eval_morphism_on_set(whisker({}, g, a), x), *eval_morphism_on_set(whisker(a, g, {}), x));
      CHECK(*eval_morphism_on_set(extend_crossing(in, p, Word{o, {"t1", "t1"}}, Word{o, {"t2"}}), x) == lad1);
      // (t1, t2.t2): first g.t2, then t2.g.
      const auto lad2 = after(*eval_morphism_on_set(whisker(b, g, {}), x), *eval_morphism_on_set(whisker({}, g, b), x));
      CHECK(*eval_morphism_on_set(extend_crossing(in, p, Word{o, {"t1"}}, Word{o, {"t2", "t2"}}), x) == lad2);
    }
  }

  TEST_CASE("naturality on words of length <= 2 agrees with the generator-level check") {
    std::vector<NFoldSystem> systems{triple(maybe()), triple(reader(2)), pair(dwriter(cyclic_monoid(2), maybe()))};
    for (const auto& s : systems) {
      const Presentation p = mnd_power(terminal_presentation(), s.n);
      const Interpretation in = encode_pdist(s);
      const bool generator_level = check_relations(in, p, fast()).pass();
      bool word_level = true;
      for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j)
          for (const auto& phi : small_cells(p.objects[0], i, s.n))
            for (const auto& psi : small_cells(p.objects[0], j, s.n)) {
              const TermPtr lhs = vcomp(crossing_term(p, phi.tgt, psi.tgt), hcomp(phi.term, psi.term));
              const TermPtr rhs = vcomp(hcomp(psi.term, phi.term), crossing_term(p, phi.src, psi.src));
              typecheck_term(p, lhs);
              word_level = word_level && morphism_equal(eval_term(in, lhs), eval_term(in, rhs));
            }
      CHECK(word_level == generator_level);
      CHECK(word_level);
    }
  }

  TEST_CASE("encode and decode") {
    const NFoldSystem s = triple(maybe());
    const Interpretation in = encode_pdist(s);
    const NFoldSystem back = decode_pdist(in, 3);
    CHECK(back.laws.size() == 3);
    CHECK(same_interpretation(encode_pdist(back), in));
    for (int k = 0; k < 3; ++k) CHECK(same_monad(back.monads[k], s.monads[k]));
    for (const auto& [key, d] : s.laws) CHECK(same_dist_law(back.law(key.first, key.second), d));

    const NFoldSystem two = decode_pdist(encode_pdist(pair(dwriter(cyclic_monoid(2), maybe()))), 2);
    CHECK(two.n == 2);
    CHECK(two.laws.size() == 1);

    Interpretation bad = in;
    bad.two_cells["gamma(t1,t2)"] = s.law(1, 3).law;
    CHECK_THROWS(decode_pdist(bad, 3));
  }

  TEST_CASE("check_nfold agrees with check_relations") {
    for (const auto& t : {maybe(), reader(2)}) {
      const NFoldSystem s = triple(t);
      const Presentation p = mnd_power(terminal_presentation(), 3);
      CHECK(check_nfold(s).pass());
      CHECK(check_relations(encode_pdist(s), p).pass());
      int checked = 0;
      for (auto key : {std::make_pair(1, 2), std::make_pair(1, 3), std::make_pair(2, 3)})
        for (const Morphism& mut : law_mutations(s.law(key.first, key.second).law)) {
          NFoldSystem c = s;
          c.laws.at(key).law = mut;
          CHECK(check_nfold(c, fast()).pass() == check_relations(encode_pdist(c), p, fast()).pass());
          if (++checked % 4 == 0) break;
        }
    }
  }
}
