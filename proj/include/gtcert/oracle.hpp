#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtcert/matrix.hpp"
#include "gtcert/presentation.hpp"
#include "gtcert/word.hpp"

namespace gtcert {

// Invariant factors d_1 | d_2 | ... of an integer matrix (nonnegative,
// including trivial 1s), plus the rank.
struct SmithForm {
  std::vector<Int> factors;
  int rank = 0;
  int rows = 0;
  int cols = 0;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

// d = left * m * (column ops); left is the accumulated unimodular row
// transform, so cokernel coordinates of v are left * v.
struct SmithDecomposition {
  std::vector<Int> diagonal;  // min(rows, cols) entries, nonnegative
  IntegerMatrix left;
  int rank = 0;
};

SmithDecomposition smith_decomposition(IntegerMatrix m);

struct HomologySummary {
  std::vector<Int> torsion;  // invariant factors > 1
  int free_rank = 0;
};

// H_1 of the presented group, from the Smith form of the relator matrix.
HomologySummary homology(const Presentation& p);

// Order of w's class in H_1; 0 means infinite order.
std::int64_t element_order_in_h1(const Presentation& p, const Word& w);

// Coset table over the generators and their inverses. Complete tables are
// closed under all generator actions and satisfy every relator cycle.
class CosetTable {
 public:
  enum class Status { Complete, Overflow };

  CosetTable(int generator_count, Status status, std::vector<std::int32_t> entries,
             std::int64_t cap, std::int64_t total_defined);

  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  int generator_count() const { return generators_; }
  int index() const;  // live cosets; only for complete tables
  std::int64_t cap() const { return cap_; }
  std::int64_t total_defined() const { return total_defined_; }

  std::int32_t action(std::int32_t coset, int letter) const;  // letter in signed encoding

 private:
  int generators_ = 0;
  Status status_ = Status::Overflow;
  std::vector<std::int32_t> entries_;  // rows x 2g
  std::int64_t cap_ = 0;
  std::int64_t total_defined_ = 0;
};

// Coset enumeration of <alphabet | relators> over the subgroup generated by
// subgroup_generators. Overflow is a status, not an error.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        std::int64_t cap);

using Permutation = std::vector<std::int32_t>;

Permutation permutation_eval(const CosetTable& table, const Word& w);

struct QuotientSearchOptions {
  int degree = 5;
  std::uint64_t seed = 0;
  std::int64_t samples = 200000;  // only used beyond the exhaustive degree cap
  int exhaustive_max_degree = 5;
};

struct QuotientSearchResult {
  int degree = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::int64_t tuples_checked = 0;
  // One entry per homomorphism: the generator images.
  std::vector<std::vector<Permutation>> homomorphisms;
};

// Brute-force search for homomorphisms into the symmetric group of the given
// degree; exhaustive through degree 5, seeded sampling for 6 and 7.
QuotientSearchResult finite_quotient_search(const Presentation& p, QuotientSearchOptions opts = {});

// Image of w under generator images; identity permutation when w is empty.
Permutation permutation_image(const std::vector<Permutation>& generator_images, const Word& w,
                              int degree);
bool satisfies_relators(const Presentation& p, const std::vector<Permutation>& generator_images,
                        int degree);
bool is_identity_permutation(const Permutation& perm);

}  // namespace gtcert
