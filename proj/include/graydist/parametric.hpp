#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graydist/laws.hpp"

namespace graydist {

class InvalidModule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writer case: action M x A -> A at index m * |A| + a.
struct WriterModule {
  std::uint64_t carrier = 0;
  std::vector<std::uint64_t> action;
};

// Coslice case: point A -> X.
struct CosliceObject {
  std::uint64_t carrier = 0;
  std::vector<std::uint64_t> point;
};

struct CosliceMorphism {
  std::size_t from = 0, to = 0;  // indices into the sample list
  std::vector<std::uint64_t> map;
};

WriterModule make_writer_module(const MonoidTable& m, std::uint64_t carrier, std::vector<std::uint64_t> action);
bool writer_module_lawful(const MonoidTable& m, const WriterModule& x);
WriterModule free_writer_module(const MonoidTable& m, std::uint64_t a);
// Free modules on |A| <= 2 plus every module on carriers of size <= 2.
std::vector<WriterModule> default_writer_samples(const MonoidTable& m);

// first = T, second = Writer_M, law = strength of T : W.T -> T.W.
DistLawData dwriter(const MonoidTable& m, const MonadData& t);
// first = T, second = Either_A, law = <eta o inl, T(inr)> : E.T -> T.E.
DistLawData deither(std::uint32_t a, const MonadData& t);

// Canonical strength W.F -> F.W of a container F.
Morphism writer_strength(const MonoidTable& m, const Container& f);
// Lift E.F -> F.E of a pointed container (F, point).
Morphism either_lift(std::uint32_t a, const Container& f, const Morphism& point);

struct ParamKind {
  enum Kind { writer_kind, either_kind } kind;
  MonoidTable monoid;
  std::uint32_t a = 0;

  static ParamKind writer(const MonoidTable& m) { return {writer_kind, m, 0}; }
  static ParamKind either(std::uint32_t a) { return {either_kind, {}, a}; }
  std::string name() const;
};

DistLawData parametric_law(const ParamKind& k, const MonadData& t);
// Image of a Mnd 1-cell (carrier, phi) : T -> T'. The either case needs a
// point of the carrier; the identity carrier uses the identity.
DistMorphismData parametric_on_morphism(const ParamKind& k, const MonadMorphismData& m,
                                        const std::optional<Morphism>& point = std::nullopt);
// Dist 1-cell conditions for the image plus identity preservation.
CheckReport check_parametric_functoriality(const ParamKind& k, const MonadData& t, const MonadData& t2,
                                           const MonadMorphismData& m, const CheckOptions& opt = {});
// F(m2 o m1) = F(m2) o F(m1) for m1 : T1 -> T2, m2 : T2 -> T3.
CheckReport check_parametric_composition(const ParamKind& k, const MonadMorphismData& m1,
                                         const MonadMorphismData& m2, const CheckOptions& opt = {});

CheckReport lift_writer_modules(const MonoidTable& m, const MonadData& t, const std::vector<WriterModule>& samples,
                                const CheckOptions& opt = {});

// Samples: every point A -> X for |X| <= 2, with every coslice morphism between them.
std::vector<CosliceObject> default_coslice_samples(std::uint32_t a);
std::vector<CosliceMorphism> coslice_morphisms(const std::vector<CosliceObject>& objs);
// With mult set, also checks the lifted multiplication (monad case).
CheckReport lift_coslice(std::uint32_t a, const Container& f, const Morphism& point, const std::optional<Morphism>& mult,
                         const std::vector<CosliceObject>& samples, const std::vector<CosliceMorphism>& morphisms,
                         const CheckOptions& opt = {});
// F-hat on the free coslice object (A, id) against the deither law at every
// set of size <= max_set_size.
CheckInstance either_lift_law_coherence(std::uint32_t a, const MonadData& t, const CheckOptions& opt = {});

struct CocartesianMonoid {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> mult;  // A + A -> A, inl block first
  std::uint64_t candidates = 0;
  std::uint64_t lawful = 0;
  bool unique = false;
  bool is_codiagonal = false;
};

CocartesianMonoid unique_cocartesian_monoid(std::uint32_t a);
CheckReport modules_coslice_iso(std::uint32_t a, std::uint32_t bound);

}  // namespace graydist
