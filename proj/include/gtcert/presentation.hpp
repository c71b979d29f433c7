#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "gtcert/matrix.hpp"
#include "gtcert/word.hpp"

namespace gtcert {

// Surgery coefficient m/n with n >= 1 and gcd(|m|, n) = 1. The infinite slope
// is not representable; parsers reject it before this type is reached.
struct Slope {
  std::int64_t m = 0;
  std::int64_t n = 1;
  bool operator==(const Slope&) const = default;
};

Slope make_slope(std::int64_t m, std::int64_t n);

struct Crossing {
  int over = 0;  // arc running over
  int in = 0;    // under-arc entering
  int out = 0;   // under-arc leaving
  int sign = 1;  // +1 right-handed, -1 left-handed
  bool operator==(const Crossing&) const = default;
};

// Arc-labelled knot diagram. Planarity/realizability is not checked; the
// presentation built from it defines whatever group it defines.
struct Diagram {
  std::vector<Crossing> crossings;
  int arcs = 0;
  std::vector<int> traversal;  // cyclic order of arcs along the knot
  int base_overarc = 0;

  void validate() const;
};

struct Peripheral {
  Word meridian;
  Word longitude;
};

class Presentation;
using PresentationRef = std::shared_ptr<const Presentation>;

struct Provenance {
  enum class Kind { Torus, Lin, Wirtinger, Filled, Custom };
  Kind kind = Kind::Custom;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::optional<Slope> slope;     // Filled
  PresentationRef parent;         // Filled
  std::optional<Diagram> diagram; // Wirtinger
};

// Immutable group presentation with optional peripheral pair.
class Presentation {
 public:
  Presentation(AlphabetRef alphabet, std::vector<Word> relators,
               std::optional<Peripheral> peripheral = std::nullopt, Provenance provenance = {});

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::optional<Peripheral>& peripheral() const { return peripheral_; }
  const Provenance& provenance() const { return provenance_; }

  const Word& relator(int index) const;
  int generator_count() const { return alphabet_->size(); }

 private:
  AlphabetRef alphabet_;
  std::vector<Word> relators_;
  std::optional<Peripheral> peripheral_;
  Provenance provenance_;
};

// <x, y | x^p = y^q> with peripheral pair mu = x^a y^b (aq + bp = 1, |a|
// minimal, ties positive) and lambda = x^p mu^{-pq}.
Presentation torus_presentation(std::int64_t p, std::int64_t q);

// Genus-one two-bridge ("double twist") knot group:
// <a, b, t | t a^p t^-1 = b^-1 a^p,  t b^-q a^-1 t^-1 = b^-q>,
// meridian t, longitude [b^q, a^p].
Presentation lin_presentation(std::int64_t p, std::int64_t q);

struct OverarcData {
  int crossing_count = 0;  // total crossings
  int negative_count = 0;  // negative crossings, all over the base overarc
};

struct WirtingerResult {
  Presentation presentation;
  OverarcData overarc;
};

// One generator per arc, relator t_out = t_over^sign t_in t_over^-sign per
// crossing; meridian is the base overarc's generator, longitude is the
// writhe-corrected product of over-arc generators along the traversal.
WirtingerResult wirtinger(const Diagram& diagram);

// Appends the filling relator mu^m lambda^n.
Presentation dehn_fill(const Presentation& p, Slope slope);

// Exponent-sum matrix: one row per relator, one column per generator.
IntegerMatrix abelianization_matrix(const Presentation& p);
std::vector<Int> exponent_vector(const Presentation& p, const Word& w);

PresentationRef share(Presentation p);

}  // namespace gtcert
