#include "gtcert/derivation.hpp"

#include <stdexcept>

namespace gtcert {

namespace {

void validate_move(const Presentation& p, const Word& w, const Move& mv) {
  if (mv.relator_index < 0 || mv.relator_index >= static_cast<int>(p.relators().size()))
    throw std::invalid_argument("move relator index out of range");
  if (mv.exponent != 1 && mv.exponent != -1)
    throw std::invalid_argument("move exponent must be +1 or -1");
  if (mv.position < 0 || mv.position > w.letter_length())
    throw std::invalid_argument("move position out of range");
  if (!compatible_alphabets(mv.conjugator.alphabet(), p.alphabet()))
    throw std::invalid_argument("move conjugator over a different alphabet");
}

}  // namespace

Word apply_move(const Presentation& p, const Word& w, const Move& mv) {
  validate_move(p, w, mv);
  const Word inserted = conjugate(power(p.relator(mv.relator_index), mv.exponent), mv.conjugator);
  auto [left, right] = split_at_letter(w, mv.position);
  return concat(concat(left, inserted), right);
}

ReplayReport replay(const Presentation& p, const DerivationLog& log, ReplayOptions opts) {
  ReplayReport report;
  if (!compatible_alphabets(log.start.alphabet(), p.alphabet())) {
    report.verdict = Verdict::Rejected;
    report.reason = "start word over a different alphabet";
    return report;
  }
  Word w = log.start;
  report.max_length = w.letter_length();
  for (std::size_t i = 0; i < log.moves.size(); ++i) {
    try {
      w = apply_move(p, w, log.moves[i]);
    } catch (const std::invalid_argument& e) {
      report.verdict = Verdict::Rejected;
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = e.what();
      report.final_word = w;
      return report;
    }
    ++report.steps;
    report.max_length = std::max(report.max_length, w.letter_length());
    if (w.letter_length() > opts.max_letters) {
      report.verdict = Verdict::Overflow;
      report.failed_step = static_cast<std::int64_t>(i);
      report.reason = "word length ceiling exceeded";
      report.final_word = w;
      return report;
    }
  }
  report.final_word = w;
  if (w.is_identity()) {
    report.verdict = Verdict::Accepted;
  } else {
    report.verdict = Verdict::Rejected;
    report.reason = "final word is not the identity";
  }
  return report;
}

Word factor_word(const Presentation& p, const RelatorFactor& f) {
  if (f.relator_index < 0 || f.relator_index >= static_cast<int>(p.relators().size()))
    throw std::invalid_argument("factor relator index out of range");
  if (f.exponent != 1 && f.exponent != -1)
    throw std::invalid_argument("factor exponent must be +1 or -1");
  return conjugate(power(p.relator(f.relator_index), f.exponent), f.conjugator);
}

Word factor_product(const Presentation& p, std::span<const RelatorFactor> factors) {
  Word acc = Word::identity(p.alphabet());
  for (const RelatorFactor& f : factors) acc = concat(acc, factor_word(p, f));
  return acc;
}

DerivationLog log_from_conjugate_factors(const Presentation& p, const Word& start,
                                         std::span<const RelatorFactor> factors) {
  if (!(factor_product(p, factors) == start))
    throw std::logic_error("factorization does not reduce to the start word");
  DerivationLog log{start, {}};
  Word w = start;
  for (std::size_t i = factors.size(); i-- > 0;) {
    const RelatorFactor& f = factors[i];
    Move mv{w.letter_length(), f.relator_index, -f.exponent, f.conjugator};
    log.moves.push_back(mv);
    w = apply_move(p, w, mv);
  }
  if (!w.is_identity()) throw std::logic_error("factor peeling did not reach the identity");
  return log;
}

std::optional<std::vector<RelatorFactor>> extract_conjugate_factors(const Presentation& p,
                                                                    const DerivationLog& log,
                                                                    ReplayOptions opts) {
  if (!compatible_alphabets(log.start.alphabet(), p.alphabet())) return std::nullopt;
  // Each move left-multiplies by (prefix * conj) r^exp (prefix * conj)^-1, so
  // an accepted replay yields start = D_1^-1 D_2^-1 ... D_s^-1.
  std::vector<RelatorFactor> factors;
  Word w = log.start;
  for (const Move& mv : log.moves) {
    Word next;
    try {
      next = apply_move(p, w, mv);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    const Word prefix = split_at_letter(w, mv.position).first;
    factors.push_back({mv.relator_index, -mv.exponent, concat(prefix, mv.conjugator)});
    w = next;
    if (w.letter_length() > opts.max_letters) return std::nullopt;
  }
  if (!w.is_identity()) return std::nullopt;
  return factors;
}

DerivationLog compose_logs(const Presentation& p, const DerivationLog& for_u,
                           const DerivationLog& for_v, ReplayOptions opts) {
  require_same_alphabet(for_u.start, for_v.start);
  const Word start = concat(for_u.start, for_v.start);
  auto fu = extract_conjugate_factors(p, for_u, opts);
  auto fv = extract_conjugate_factors(p, for_v, opts);
  if (!fu || !fv) return DerivationLog{start, {}};
  fu->insert(fu->end(), fv->begin(), fv->end());
  return log_from_conjugate_factors(p, start, *fu);
}

}  // namespace gtcert
