#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graydist/container.hpp"
#include "graydist/monads.hpp"
#include "graydist/report.hpp"

namespace graydist {

// law : second.first -> first.second
struct DistLawData {
  MonadData first;
  MonadData second;
  Morphism law;
};

void validate_dist_law(const DistLawData& d);
std::string law_name(const DistLawData& d);

// Tags: dist.unit-first, dist.unit-second, dist.mult-first, dist.mult-second.
CheckReport check_dist_law(const DistLawData& d, const CheckOptions& opt = {});

// Carrier first.second, unit eta1.eta2, multiplication (mu1.mu2) o (t1.law.t2).
MonadData compose_via_law(const DistLawData& d);

// A 1-cell of Mnd: phi : tY.f -> f.tX.
struct MonadMorphismData {
  Container carrier;
  Morphism phi;
};

MonadMorphismData identity_monad_morphism(const MonadData& m);
// (g, psi) after (f, phi) = (g.f, (g.phi) o (psi.f)).
MonadMorphismData compose_monad_morphisms(const MonadMorphismData& g, const MonadMorphismData& f);

// Tags: mnd.1-cell.unit, mnd.1-cell.mult.
CheckReport check_monad_morphism(const MonadData& source, const MonadData& target, const MonadMorphismData& m,
                                 const CheckOptions& opt = {});
// alpha : (f, phi) => (g, psi) with (alpha.tX) o phi = psi o (tY.alpha). Tag mnd.2-cell.
CheckInstance check_mnd_two_cell(const MonadData& source, const MonadData& target, const MonadMorphismData& f,
                                 const MonadMorphismData& g, const Morphism& alpha, const std::string& tag,
                                 const CheckOptions& opt = {});

// A monad in Mnd(B): on the base monad, the 1-cell (carrier, phi) with unit
// and multiplication 2-cells.
struct MonadInMnd {
  MonadData base;
  std::string carrier_name;
  MonadMorphismData one_cell;
  Morphism unit;
  Morphism mult;
};

MonadInMnd encode_as_monad_in_mnd(const DistLawData& d);
DistLawData decode_from_monad_in_mnd(const MonadInMnd& m);
// Tags: mnd.1-cell.unit, mnd.1-cell.mult, mnd.unit-2-cell, mnd.mult-2-cell,
// and mnd.monad.* for the monad laws of the carrier.
CheckReport check_monad_in_mnd(const MonadInMnd& m, const CheckOptions& opt = {});
// Distributive-law axiom matching each Mnd(Mnd) condition.
std::string dist_axiom_for_mnd_condition(const std::string& tag);

// Field-by-field identity (same functors, same or equal structure cells).
bool same_monad(const MonadData& a, const MonadData& b);
bool same_dist_law(const DistLawData& a, const DistLawData& b);

enum class Projection { u1, u2, c };
MonadData dist_projection(const DistLawData& d, Projection which);

// 1-cell of Dist between a source law (t = second, s = first, law) and a
// target law (r = second, u = first, law): phi : r.f -> f.t, psi : u.f -> f.s.
struct DistMorphismData {
  Container carrier;
  Morphism phi;
  Morphism psi;
};

DistMorphismData identity_dist_morphism(const DistLawData& d);
DistMorphismData compose_dist_morphisms(const DistMorphismData& g, const DistMorphismData& f);
MonadMorphismData dist_projection_on_morphism(const DistMorphismData& m, Projection which);

// Tags: distmor.a.unit, distmor.a.mult, distmor.b.unit, distmor.b.mult, distmor.c.
CheckReport check_dist_morphism(const DistLawData& src, const DistLawData& tgt, const DistMorphismData& m,
                                const CheckOptions& opt = {});

// l_ij : Ti.Tj -> Tj.Ti. Tag yang-baxter(1,2,3).
CheckReport check_yang_baxter(const Morphism& l12, const Morphism& l13, const Morphism& l23, const MonadData& t1,
                              const MonadData& t2, const MonadData& t3, const CheckOptions& opt = {});

struct NFoldSystem {
  int n = 0;
  std::vector<MonadData> monads;                     // T1..Tn, index k-1
  std::map<std::pair<int, int>, DistLawData> laws;  // (i, j), i < j, 1-based; first = Tj, second = Ti

  const DistLawData& law(int i, int j) const;
};

void validate_nfold(const NFoldSystem& s);
// Suite prefixes: monad(k), law(i,j), yang-baxter(i,j,k).
CheckReport check_nfold(const NFoldSystem& s, const CheckOptions& opt = {});

}  // namespace graydist
