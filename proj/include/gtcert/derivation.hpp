#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gtcert/presentation.hpp"
#include "gtcert/word.hpp"

namespace gtcert {

// One elementary step: splice conjugator * relator^exponent * conjugator^-1
// into the current word. Position indexes the letter expansion of the current
// reduced word, so it stays unambiguous as syllables merge.
struct Move {
  std::int64_t position = 0;
  int relator_index = 0;
  int exponent = 1;  // +1 or -1
  Word conjugator;
};

// Replayable proof that `start` lies in the normal closure of the relators:
// replay must end at the identity word.
struct DerivationLog {
  Word start;
  std::vector<Move> moves;
};

enum class Verdict { Accepted, Rejected, Overflow };

struct ReplayOptions {
  std::int64_t max_letters = 1'000'000;
};

struct ReplayReport {
  Verdict verdict = Verdict::Rejected;
  Word final_word;
  std::int64_t steps = 0;
  std::int64_t max_length = 0;
  std::optional<std::int64_t> failed_step;
  std::string reason;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

// Splices the conjugated relator in and reduces; the group element is
// unchanged. Throws on invalid indices.
Word apply_move(const Presentation& p, const Word& w, const Move& mv);

ReplayReport replay(const Presentation& p, const DerivationLog& log, ReplayOptions opts = {});

// One conjugated-relator factor of a free-group factorization.
struct RelatorFactor {
  int relator_index = 0;
  int exponent = 1;  // +1 or -1
  Word conjugator;
};

Word factor_word(const Presentation& p, const RelatorFactor& f);
Word factor_product(const Presentation& p, std::span<const RelatorFactor> factors);

// Builds the log that peels factors off the end of `start`; requires
// start == factor_product(factors) in the free group.
DerivationLog log_from_conjugate_factors(const Presentation& p, const Word& start,
                                         std::span<const RelatorFactor> factors);

// Recovers a left factorization start = C_1 ... C_s from an accepted replay;
// nullopt when the log does not replay to the identity.
std::optional<std::vector<RelatorFactor>> extract_conjugate_factors(const Presentation& p,
                                                                    const DerivationLog& log,
                                                                    ReplayOptions opts = {});

// Log for concat(u, v) from logs for u and v. When both inputs replay to the
// identity the composite does too, with one move per input move; otherwise the
// composite is a moveless log (sound, accepted only for the identity word).
DerivationLog compose_logs(const Presentation& p, const DerivationLog& for_u,
                           const DerivationLog& for_v, ReplayOptions opts = {});

}  // namespace gtcert
