#pragma once

#include <optional>
#include <vector>

#include "gtcert/derivation.hpp"
#include "gtcert/presentation.hpp"
#include "gtcert/word.hpp"

namespace gtcert {

// Searches for x with target = x * relator^e * x^-1 in the free group
// (e = +1/-1), via cyclic reduction and rotation matching.
struct ConjugateMatch {
  int exponent = 1;
  Word conjugator;
};
std::optional<ConjugateMatch> express_as_conjugate(const Word& target, const Word& relator);

// Certified equality lhs =_G rhs: carries conjugated-relator factors with
// lhs * rhs^-1 == factor_product(factors) in the free group. Every
// construction re-checks that identity, so a witness can never drift from
// its claim.
class Equality {
 public:
  Equality(PresentationRef p, Word lhs, Word rhs, std::vector<RelatorFactor> factors);

  static Equality reflexive(PresentationRef p, Word w);
  // relator =_G identity
  static Equality from_relator(PresentationRef p, int index);
  // lhs =_G rhs justified by one conjugated relator, found automatically.
  static Equality single(PresentationRef p, Word lhs, Word rhs);

  Equality symmetric() const;
  // u = v  ->  u^-1 = v^-1
  Equality inverted() const;
  // u = v  ->  y u y^-1 = y v y^-1
  Equality conjugated(const Word& y) const;

  // (u1 = v1), (u2 = v2)  ->  u1 u2 = v1 v2
  static Equality product(const Equality& a, const Equality& b);
  // (u = v), (v = w)  ->  u = w; requires a.rhs() == b.lhs() structurally.
  static Equality chain(const Equality& a, const Equality& b);

  const PresentationRef& presentation() const { return presentation_; }
  const Word& lhs() const { return lhs_; }
  const Word& rhs() const { return rhs_; }
  const std::vector<RelatorFactor>& factors() const { return factors_; }

 private:
  PresentationRef presentation_;
  Word lhs_;
  Word rhs_;
  std::vector<RelatorFactor> factors_;
};

}  // namespace gtcert
