#include "gtcert/equality.hpp"

#include <stdexcept>

namespace gtcert {

std::optional<ConjugateMatch> express_as_conjugate(const Word& target, const Word& relator) {
  if (!same_alphabet(target, relator)) return std::nullopt;
  auto [tc, tcore] = cyclic_reduce(target);
  if (tcore.is_identity()) return std::nullopt;
  for (int exp : {1, -1}) {
    const Word r = exp == 1 ? relator : inverse(relator);
    auto [rc, rcore] = cyclic_reduce(r);
    if (rcore.letter_length() != tcore.letter_length()) continue;
    const std::vector<int> t_letters = to_letters(tcore);
    const std::vector<int> r_letters = to_letters(rcore);
    const std::size_t len = r_letters.size();
    for (std::size_t k = 0; k < len; ++k) {
      bool match = true;
      for (std::size_t i = 0; i < len && match; ++i)
        match = t_letters[i] == r_letters[(k + i) % len];
      if (!match) continue;
      // tcore = rot_k(rcore) = prefix^-1 * rcore * prefix with prefix = rcore[:k]
      const Word prefix = split_at_letter(rcore, static_cast<std::int64_t>(k)).first;
      const Word x = concat(concat(tc, inverse(prefix)), inverse(rc));
      if (conjugate(r, x) == target) return ConjugateMatch{exp, x};
    }
  }
  return std::nullopt;
}

Equality::Equality(PresentationRef p, Word lhs, Word rhs, std::vector<RelatorFactor> factors)
    : presentation_(std::move(p)), lhs_(std::move(lhs)), rhs_(std::move(rhs)),
      factors_(std::move(factors)) {
  if (!presentation_) throw std::invalid_argument("equality requires a presentation");
  require_same_alphabet(lhs_, rhs_);
  if (!compatible_alphabets(lhs_.alphabet(), presentation_->alphabet()))
    throw std::invalid_argument("equality words over a different alphabet");
  if (!(concat(lhs_, inverse(rhs_)) == factor_product(*presentation_, factors_)))
    throw std::logic_error("equality witness does not certify its claim");
}

Equality Equality::reflexive(PresentationRef p, Word w) {
  Word copy = w;
  return Equality(std::move(p), std::move(w), std::move(copy), {});
}

Equality Equality::from_relator(PresentationRef p, int index) {
  Word r = p->relator(index);
  Word id = Word::identity(p->alphabet());
  std::vector<RelatorFactor> factors{{index, 1, id}};
  return Equality(std::move(p), std::move(r), std::move(id), std::move(factors));
}

Equality Equality::single(PresentationRef p, Word lhs, Word rhs) {
  const Word target = concat(lhs, inverse(rhs));
  if (target.is_identity()) return Equality(std::move(p), std::move(lhs), std::move(rhs), {});
  for (int i = 0; i < static_cast<int>(p->relators().size()); ++i) {
    if (auto m = express_as_conjugate(target, p->relator(i))) {
      std::vector<RelatorFactor> factors{{i, m->exponent, m->conjugator}};
      return Equality(std::move(p), std::move(lhs), std::move(rhs), std::move(factors));
    }
  }
  throw std::logic_error("no single conjugated relator certifies " + lhs.str() + " = " + rhs.str());
}

Equality Equality::symmetric() const {
  // rhs * lhs^-1 = (lhs * rhs^-1)^-1: reverse the factors and flip exponents.
  std::vector<RelatorFactor> factors;
  factors.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    factors.push_back({it->relator_index, -it->exponent, it->conjugator});
  return Equality(presentation_, rhs_, lhs_, std::move(factors));
}

Equality Equality::inverted() const {
  // u^-1 * v = u^-1 (v u^-1) u = conj(( lhs rhs^-1 )^-1, u^-1) expanded.
  std::vector<RelatorFactor> factors;
  factors.reserve(factors_.size());
  const Word u_inv = inverse(lhs_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    factors.push_back({it->relator_index, -it->exponent, concat(u_inv, it->conjugator)});
  return Equality(presentation_, u_inv, inverse(rhs_), std::move(factors));
}

Equality Equality::conjugated(const Word& y) const {
  std::vector<RelatorFactor> factors;
  factors.reserve(factors_.size());
  for (const RelatorFactor& f : factors_)
    factors.push_back({f.relator_index, f.exponent, concat(y, f.conjugator)});
  return Equality(presentation_, conjugate(lhs_, y), conjugate(rhs_, y), std::move(factors));
}

Equality Equality::product(const Equality& a, const Equality& b) {
  if (a.presentation_ != b.presentation_ &&
      !compatible_alphabets(a.presentation_->alphabet(), b.presentation_->alphabet()))
    throw std::invalid_argument("equalities over different presentations");
  // u1 u2 (v1 v2)^-1 = (u1 v1^-1) * v1 (u2 v2^-1) v1^-1
  std::vector<RelatorFactor> factors = a.factors_;
  for (const RelatorFactor& f : b.factors_)
    factors.push_back({f.relator_index, f.exponent, concat(a.rhs_, f.conjugator)});
  return Equality(a.presentation_, concat(a.lhs_, b.lhs_), concat(a.rhs_, b.rhs_),
                  std::move(factors));
}

Equality Equality::chain(const Equality& a, const Equality& b) {
  if (!(a.rhs_ == b.lhs_))
    throw std::logic_error("equality chain mismatch: " + a.rhs_.str() + " vs " + b.lhs_.str());
  std::vector<RelatorFactor> factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return Equality(a.presentation_, a.lhs_, b.rhs_, std::move(factors));
}

}  // namespace gtcert
