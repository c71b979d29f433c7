#include "gtcert/certificate.hpp"

#include <stdexcept>

namespace gtcert {

Word realize(const ConjugateProduct& cp) {
  Word acc = Word::identity(cp.base.alphabet());
  for (const Word& x : cp.conjugators) acc = concat(acc, conjugate(cp.base, x));
  return acc;
}

ConjugateProduct conjugate_product(const ConjugateProduct& cp, const Word& y) {
  ConjugateProduct out{cp.base, {}};
  out.conjugators.reserve(cp.conjugators.size());
  for (const Word& x : cp.conjugators) out.conjugators.push_back(concat(y, x));
  return out;
}

ConjugateProduct concat_products(const ConjugateProduct& c1, const ConjugateProduct& c2) {
  if (!(c1.base == c2.base)) throw std::invalid_argument("conjugate products have different bases");
  ConjugateProduct out = c1;
  out.conjugators.insert(out.conjugators.end(), c2.conjugators.begin(), c2.conjugators.end());
  return out;
}

ConjugateProduct lemma41_1(const Word& g, const Word& h, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("conjugate expansion needs n >= 1");
  require_same_alphabet(g, h);
  ConjugateProduct cp{concat(g, h), {}};
  for (std::int64_t i = n - 1; i >= 0; --i) cp.conjugators.push_back(power(g, i));
  if (!(realize(cp) == concat(power(g, n), power(h, n))))
    throw std::logic_error("conjugate expansion failed to reduce to g^n h^n");
  return cp;
}

Evidence Evidence::abelian_order(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("abelian order evidence needs m >= 1");
  Evidence e;
  e.kind = Kind::AbelianOrder;
  e.order = m;
  return e;
}

Evidence Evidence::quotient_witness(std::vector<Permutation> images) {
  Evidence e;
  e.kind = Kind::FiniteQuotientWitness;
  e.images = std::move(images);
  return e;
}

CertifiedMembership::CertifiedMembership(PresentationRef p, Word target, ConjugateProduct product,
                                         std::vector<RelatorFactor> factors)
    : presentation_(std::move(p)), target_(std::move(target)), product_(std::move(product)),
      factors_(std::move(factors)) {
  if (!presentation_) throw std::invalid_argument("certificate requires a presentation");
  if (product_.conjugators.empty())
    throw std::invalid_argument("conjugate product must be nonempty");
  const Word binding = concat(realize(product_), inverse(target_));
  if (!(factor_product(*presentation_, factors_) == binding))
    throw std::logic_error("membership factors do not certify the target");
}

CertifiedMembership CertifiedMembership::from_equality(const Equality& realize_equals_target,
                                                       ConjugateProduct product) {
  if (!(realize_equals_target.lhs() == realize(product)))
    throw std::logic_error("equality lhs is not the realized product");
  return CertifiedMembership(realize_equals_target.presentation(), realize_equals_target.rhs(),
                             std::move(product), realize_equals_target.factors());
}

CertifiedMembership CertifiedMembership::trivial(PresentationRef p, Word base) {
  ConjugateProduct cp{base, {Word::identity(base.alphabet())}};
  return CertifiedMembership(std::move(p), std::move(base), std::move(cp), {});
}

CertifiedMembership CertifiedMembership::conjugated(const Word& y) const {
  std::vector<RelatorFactor> factors;
  factors.reserve(factors_.size());
  for (const RelatorFactor& f : factors_)
    factors.push_back({f.relator_index, f.exponent, concat(y, f.conjugator)});
  return CertifiedMembership(presentation_, conjugate(target_, y), conjugate_product(product_, y),
                             std::move(factors));
}

CertifiedMembership CertifiedMembership::concatenated(const CertifiedMembership& a,
                                                      const CertifiedMembership& b) {
  // R1 R2 (t1 t2)^-1 = (R1 (R2 t2^-1) R1^-1) (R1 t1^-1)
  const Word r1 = realize(a.product_);
  std::vector<RelatorFactor> factors;
  factors.reserve(a.factors_.size() + b.factors_.size());
  for (const RelatorFactor& f : b.factors_)
    factors.push_back({f.relator_index, f.exponent, concat(r1, f.conjugator)});
  factors.insert(factors.end(), a.factors_.begin(), a.factors_.end());
  return CertifiedMembership(a.presentation_, concat(a.target_, b.target_),
                             concat_products(a.product_, b.product_), std::move(factors));
}

CertifiedMembership CertifiedMembership::power_pair(const Word& g, const Word& h,
                                                    std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("power_pair needs n >= 1");
  if (!(target_ == concat(g, h)))
    throw std::invalid_argument("certificate target is not the product g h");
  CertifiedMembership result = conjugated(power(g, n - 1));
  for (std::int64_t i = n - 2; i >= 0; --i)
    result = concatenated(result, conjugated(power(g, i)));
  if (!(result.target_ == concat(power(g, n), power(h, n))))
    throw std::logic_error("power_pair did not land on g^n h^n");
  return result;
}

CertifiedMembership CertifiedMembership::power_commutator(const Word& g, const Word& h,
                                                          std::int64_t n, std::int64_t m) const {
  if (n < 1 || m < 1) throw std::invalid_argument("power_commutator needs n, m >= 1");
  if (!(target_ == commutator(g, h)))
    throw std::invalid_argument("certificate target is not the commutator [g, h]");
  // [g,h] = g^-1 (h^-1 g h), so the pair lemma lifts to g^-n h^-1 g^n h,
  // and a second application lands on [g^n, h^m].
  const CertifiedMembership stage = power_pair(inverse(g), conjugate(g, inverse(h)), n);
  const Word gn_conj = concat(power(g, -n), conjugate(power(g, n), inverse(h)));
  (void)gn_conj;
  const Word left = concat(power(g, -n), concat(inverse(h), power(g, n)));
  const CertifiedMembership result = stage.power_pair(left, h, m);
  if (!(result.target_ == commutator(power(g, n), power(h, m))))
    throw std::logic_error("power_commutator did not land on [g^n, h^m]");
  return result;
}

CertifiedMembership CertifiedMembership::retarget(const Equality& eq) const {
  if (!(eq.lhs() == target_)) throw std::logic_error("retarget equality must start at the target");
  std::vector<RelatorFactor> factors = factors_;
  factors.insert(factors.end(), eq.factors().begin(), eq.factors().end());
  return CertifiedMembership(presentation_, eq.rhs(), product_, std::move(factors));
}

MembershipCertificate CertifiedMembership::to_certificate() const {
  const Word start = concat(realize(product_), inverse(target_));
  return MembershipCertificate{presentation_, target_, product_,
                               log_from_conjugate_factors(*presentation_, start, factors_)};
}

CertifiedMembership certified_from(const MembershipCertificate& cert, ReplayOptions opts) {
  if (!cert.presentation) throw std::invalid_argument("certificate has no presentation");
  const Word binding = concat(realize(cert.product), inverse(cert.target));
  if (!(cert.proof.start == binding))
    throw std::invalid_argument("proof start does not bind the product to the target");
  auto factors = extract_conjugate_factors(*cert.presentation, cert.proof, opts);
  if (!factors) throw std::invalid_argument("certificate proof does not replay to the identity");
  return CertifiedMembership(cert.presentation, cert.target, cert.product, std::move(*factors));
}

MembershipCertificate lemma41_2(const MembershipCertificate& cert, const Word& g, const Word& h,
                                std::int64_t n) {
  if (n < 1) throw std::invalid_argument("lemma41_2 needs n >= 1");
  if (n == 1) {
    certified_from(cert);  // still validate
    return cert;
  }
  return certified_from(cert).power_pair(g, h, n).to_certificate();
}

MembershipCertificate lemma41_3(const MembershipCertificate& cert, const Word& g, const Word& h,
                                std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("lemma41_3 needs n, m >= 1");
  if (n == 1 && m == 1) {
    certified_from(cert);
    return cert;
  }
  return certified_from(cert).power_commutator(g, h, n, m).to_certificate();
}

namespace {

VerifyReport verify_membership(const MembershipCertificate& cert, ReplayOptions opts,
                               bool require_identity_target) {
  VerifyReport report;
  report.k = cert.product.k();
  try {
    if (!cert.presentation) {
      report.reasons.push_back("certificate has no presentation");
      return report;
    }
    const Presentation& p = *cert.presentation;
    if (!compatible_alphabets(cert.target.alphabet(), p.alphabet()) ||
        !compatible_alphabets(cert.product.base.alphabet(), p.alphabet())) {
      report.reasons.push_back("certificate words over a different alphabet");
      return report;
    }
    if (cert.product.conjugators.empty()) {
      report.reasons.push_back("non-empty product required");
      return report;
    }
    if (require_identity_target && !cert.target.is_identity()) {
      report.reasons.push_back("torsion certificate target must be the identity");
      return report;
    }
    const Word binding = concat(realize(cert.product), inverse(cert.target));
    if (!(cert.proof.start == binding)) {
      report.reasons.push_back("proof start does not bind the product to the target");
      return report;
    }
    report.replay = replay(p, cert.proof, opts);
    report.verdict = report.replay.verdict;
    if (report.replay.verdict != Verdict::Accepted && !report.replay.reason.empty())
      report.reasons.push_back("replay: " + report.replay.reason);
    return report;
  } catch (const std::invalid_argument& e) {
    report.verdict = Verdict::Rejected;
    report.reasons.push_back(e.what());
    return report;
  }
}

}  // namespace

VerifyReport verify(const MembershipCertificate& cert, ReplayOptions opts) {
  return verify_membership(cert, opts, false);
}

VerifyReport verify(const TorsionCertificate& cert, ReplayOptions opts) {
  VerifyReport report = verify_membership(cert.membership, opts, true);
  if (report.verdict != Verdict::Accepted) return report;

  const Presentation& p = *cert.membership.presentation;
  const Word& base = cert.membership.product.base;
  const std::int64_t k = report.k;

  if (base.is_identity()) {
    report.verdict = Verdict::Rejected;
    report.reasons.push_back("base element is the identity word");
    return report;
  }

  // k copies of [base] must vanish in H_1, whatever the evidence says.
  const std::int64_t order = element_order_in_h1(p, base);
  report.base_order_h1 = order;
  if (order == 0 || k % order != 0) {
    report.verdict = Verdict::Rejected;
    report.reasons.push_back("conjugate count is incompatible with the abelianized base class");
    return report;
  }

  switch (cert.evidence.kind) {
    case Evidence::Kind::AbelianOrder: {
      const std::int64_t m = cert.evidence.order;
      if (m < 1 || order != m) {
        report.verdict = Verdict::Rejected;
        report.reasons.push_back("claimed abelian order does not match the recomputed order");
        return report;
      }
      if (k % m != 0) {
        report.verdict = Verdict::Rejected;
        report.reasons.push_back("conjugate count is not a multiple of the claimed order");
        return report;
      }
      report.exact_order_claim = (k == m);
      report.nontriviality_machine_checked = m > 1;
      if (m == 1)
        report.reasons.push_back("abelianization cannot witness nontriviality for a trivial class");
      break;
    }
    case Evidence::Kind::FiniteQuotientWitness: {
      const auto& images = cert.evidence.images;
      if (images.size() != static_cast<std::size_t>(p.generator_count()) || images.empty()) {
        report.verdict = Verdict::Rejected;
        report.reasons.push_back("quotient witness has the wrong number of generator images");
        return report;
      }
      const int degree = static_cast<int>(images.front().size());
      for (const Permutation& perm : images) {
        std::vector<bool> seen(static_cast<std::size_t>(degree), false);
        bool ok = static_cast<int>(perm.size()) == degree;
        for (std::int32_t v : perm) {
          if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)]) {
            ok = false;
            break;
          }
          seen[static_cast<std::size_t>(v)] = true;
        }
        if (!ok) {
          report.verdict = Verdict::Rejected;
          report.reasons.push_back("quotient witness image is not a permutation");
          return report;
        }
      }
      if (!satisfies_relators(p, images, degree)) {
        report.verdict = Verdict::Rejected;
        report.reasons.push_back("quotient witness does not satisfy the relators");
        return report;
      }
      if (is_identity_permutation(permutation_image(images, base, degree))) {
        report.verdict = Verdict::Rejected;
        report.reasons.push_back("quotient witness does not separate the base from the identity");
        return report;
      }
      report.nontriviality_machine_checked = true;
      break;
    }
    case Evidence::Kind::Assumed:
      report.reasons.push_back("nontriviality of the base is assumed, not machine-checked");
      break;
  }
  return report;
}

}  // namespace gtcert
