#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graydist/monads.hpp"
#include "graydist/ordinals.hpp"
#include "graydist/twocat.hpp"

namespace graydist {

// (k, F) with F strict: a path of k 1-cells of B, outermost first. Entries may
// be identity words.
struct HatOneCell {
  std::string object;
  std::vector<Word> path;

  int length() const { return static_cast<int>(path.size()); }
  Word composite() const;
  friend bool operator==(const HatOneCell&, const HatOneCell&) = default;
};

// (phi, alpha) : F => G with alpha : [n] -> [m] an interval map and one
// component per generating arrow i -> i+1 of [n]:
// phi_i : F(alpha(i) -> alpha(i+1)) => G(i -> i+1).
struct HatTwoCell {
  HatOneCell source;
  HatOneCell target;
  IntervalMap reindex;
  std::vector<TermPtr> components;
};

// Throws TermBoundaryMismatch unless the cell typechecks in b.
void validate_hat_cell(const Presentation& b, const HatTwoCell& c);
HatTwoCell hat_identity(const HatOneCell& f);
// c2 after c1.
HatTwoCell hat_vertical(const Presentation& b, const HatTwoCell& c2, const HatTwoCell& c1);
// c2 outer, c1 inner: path c2.path ++ c1.path, reindex alpha2 block then alpha1.
HatTwoCell hat_horizontal(const Presentation& b, const HatTwoCell& c2, const HatTwoCell& c1);
// Equality up to identity units in the components.
bool hat_cell_equal(const HatTwoCell& a, const HatTwoCell& b);

// hat(1): B the terminal presentation, 1-cells the lengths.
Presentation hat_base_terminal();
HatOneCell hat_terminal_one(int k);
// Cell of hat(1) classified by f : m -> n, reindex dualize(f).
HatTwoCell hat_terminal_cell(const MonotoneMap& f);
MonotoneMap hat_terminal_classify(const HatTwoCell& c);
std::vector<HatTwoCell> hat_terminal_hom(int m, int n);

using HatAssignment = std::function<Morphism(const MonotoneMap&)>;

// f with fiber profile (k0..kn) goes to mu_k0 . ... . mu_kn (fiber 0 outermost)
// where mu_0 = eta, mu_1 = id, mu_2 = mu, mu_k = mu o (mu_(k-1).t).
HatAssignment hat_of_monad(const MonadData& m);
// (t, eta, mu) = (carrier of h(id_1), h(empty map into 1), h(sigma)).
MonadData tilde_of_assignment(const HatAssignment& h, const std::string& name = "tilde");

}  // namespace graydist
