#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtcert/derivation.hpp"
#include "gtcert/equality.hpp"
#include "gtcert/oracle.hpp"
#include "gtcert/presentation.hpp"
#include "gtcert/word.hpp"

namespace gtcert {

// Product of conjugates x_1 g x_1^-1 ... x_k g x_k^-1. Builders keep the
// conjugator list nonempty; deserialized data may be empty and is rejected
// by verify.
struct ConjugateProduct {
  Word base;
  std::vector<Word> conjugators;

  std::int64_t k() const { return static_cast<std::int64_t>(conjugators.size()); }
};

Word realize(const ConjugateProduct& cp);
// y (prod x_i g x_i^-1) y^-1 = prod (y x_i) g (y x_i)^-1
ConjugateProduct conjugate_product(const ConjugateProduct& cp, const Word& y);
ConjugateProduct concat_products(const ConjugateProduct& c1, const ConjugateProduct& c2);
// g^n h^n as the standard product of conjugates of gh; a free-group identity.
ConjugateProduct lemma41_1(const Word& g, const Word& h, std::int64_t n);

struct Evidence {
  enum class Kind { AbelianOrder, FiniteQuotientWitness, Assumed };
  Kind kind = Kind::Assumed;
  std::int64_t order = 0;                  // AbelianOrder
  std::vector<Permutation> images;         // FiniteQuotientWitness generator images

  static Evidence assumed() { return Evidence{}; }
  static Evidence abelian_order(std::int64_t m);
  static Evidence quotient_witness(std::vector<Permutation> images);
};

// Claim target in <<base>>^+ : the proof log replays
// realize(product) * target^-1 to the identity.
struct MembershipCertificate {
  PresentationRef presentation;
  Word target;
  ConjugateProduct product;
  DerivationLog proof;
};

// Membership of the identity, i.e. the base is a generalized torsion element
// (given the nontriviality evidence).
struct TorsionCertificate {
  MembershipCertificate membership;
  Evidence evidence;
};

// Builder-side certificate: the replayable log is regenerated from the factor
// list, so combinators stay in the free-group witness calculus.
class CertifiedMembership {
 public:
  CertifiedMembership(PresentationRef p, Word target, ConjugateProduct product,
                      std::vector<RelatorFactor> factors);

  static CertifiedMembership from_equality(const Equality& realize_equals_target,
                                           ConjugateProduct product);
  // base in <<base>>^+ with a single trivial conjugator.
  static CertifiedMembership trivial(PresentationRef p, Word base);

  CertifiedMembership conjugated(const Word& y) const;
  static CertifiedMembership concatenated(const CertifiedMembership& a,
                                          const CertifiedMembership& b);
  // target must be reduce(g h); returns certificate for reduce(g^n h^n).
  CertifiedMembership power_pair(const Word& g, const Word& h, std::int64_t n) const;
  // target must be reduce([g, h]); returns certificate for reduce([g^n, h^m]).
  CertifiedMembership power_commutator(const Word& g, const Word& h, std::int64_t n,
                                       std::int64_t m) const;
  // Extends the proof by target =_G new_target.
  CertifiedMembership retarget(const Equality& target_equals_new_target) const;

  MembershipCertificate to_certificate() const;

  const PresentationRef& presentation() const { return presentation_; }
  const Word& target() const { return target_; }
  const ConjugateProduct& product() const { return product_; }
  const std::vector<RelatorFactor>& factors() const { return factors_; }

 private:
  PresentationRef presentation_;
  Word target_;
  ConjugateProduct product_;
  std::vector<RelatorFactor> factors_;
};

CertifiedMembership certified_from(const MembershipCertificate& cert, ReplayOptions opts = {});

MembershipCertificate lemma41_2(const MembershipCertificate& cert, const Word& g, const Word& h,
                                std::int64_t n);
MembershipCertificate lemma41_3(const MembershipCertificate& cert, const Word& g, const Word& h,
                                std::int64_t n, std::int64_t m);

struct VerifyReport {
  Verdict verdict = Verdict::Rejected;
  std::vector<std::string> reasons;
  std::int64_t k = 0;
  ReplayReport replay;
  std::optional<std::int64_t> base_order_h1;  // torsion certificates only
  bool exact_order_claim = false;             // k == m with abelian_order(m)
  bool nontriviality_machine_checked = false;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

VerifyReport verify(const MembershipCertificate& cert, ReplayOptions opts = {});
VerifyReport verify(const TorsionCertificate& cert, ReplayOptions opts = {});

}  // namespace gtcert
