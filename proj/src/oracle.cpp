#include "gtcert/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gtcert {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithDecomposition smith_decomposition(IntegerMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  IntegerMatrix left = IntegerMatrix::eye(rows);

  auto add_row = [&](int dst, int src, const Int& c) {
    for (int j = 0; j < cols; ++j) m.at(dst, j) += c * m.at(src, j);
    for (int j = 0; j < rows; ++j) left.at(dst, j) += c * left.at(src, j);
  };
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < rows; ++j) std::swap(left.at(a, j), left.at(b, j));
  };
  auto negate_row = [&](int a) {
    for (int j = 0; j < cols; ++j) m.at(a, j) = -m.at(a, j);
    for (int j = 0; j < rows; ++j) left.at(a, j) = -left.at(a, j);
  };
  auto add_col = [&](int dst, int src, const Int& c) {
    for (int i = 0; i < rows; ++i) m.at(i, dst) += c * m.at(i, src);
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  };

  const int dim = std::min(rows, cols);
  int rank = 0;
  for (int s = 0; s < dim; ++s) {
    int pi = -1, pj = -1;
    for (int i = s; i < rows; ++i)
      for (int j = s; j < cols; ++j)
        if (m.at(i, j) != 0 &&
            (pi < 0 || int_abs(m.at(i, j)) < int_abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(s, pi);
    swap_cols(s, pj);

    // Euclidean elimination; swapping a smaller remainder into the pivot
    // strictly shrinks it, so this terminates with the gcd in place.
    while (true) {
      bool swapped = false;
      for (int i = s + 1; i < rows; ++i) {
        if (m.at(i, s) == 0) continue;
        const Int q = m.at(i, s) / m.at(s, s);
        if (q != 0) add_row(i, s, -q);
        if (m.at(i, s) != 0) {
          swap_rows(s, i);
          swapped = true;
        }
      }
      if (swapped) continue;
      for (int j = s + 1; j < cols; ++j) {
        if (m.at(s, j) == 0) continue;
        const Int q = m.at(s, j) / m.at(s, s);
        if (q != 0) add_col(j, s, -q);
        if (m.at(s, j) != 0) {
          swap_cols(s, j);
          swapped = true;
        }
      }
      if (swapped) continue;
      // Pivot must divide the remaining block for the divisibility chain.
      bool fixed = false;
      for (int i = s + 1; i < rows && !fixed; ++i)
        for (int j = s + 1; j < cols && !fixed; ++j)
          if (m.at(i, j) % m.at(s, s) != 0) {
            add_row(s, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (m.at(s, s) < 0) negate_row(s);
    ++rank;
  }

  SmithDecomposition out;
  out.diagonal.resize(static_cast<std::size_t>(dim));
  for (int s = 0; s < dim; ++s) out.diagonal[static_cast<std::size_t>(s)] = m.at(s, s);
  out.left = std::move(left);
  out.rank = rank;
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition dec = smith_decomposition(m);
  SmithForm form;
  form.factors = std::move(dec.diagonal);
  form.rank = dec.rank;
  form.rows = m.rows();
  form.cols = m.cols();
  return form;
}

HomologySummary homology(const Presentation& p) {
  const SmithForm form = smith_normal_form(abelianization_matrix(p));
  HomologySummary h;
  for (const Int& d : form.factors)
    if (d > 1) h.torsion.push_back(d);
  h.free_rank = p.generator_count() - form.rank;
  return h;
}

std::int64_t element_order_in_h1(const Presentation& p, const Word& w) {
  const IntegerMatrix mt = abelianization_matrix(p).transposed();
  const SmithDecomposition dec = smith_decomposition(mt);
  const std::vector<Int> u = multiply(dec.left, exponent_vector(p, w));
  const int g = mt.rows();
  const int dim = static_cast<int>(dec.diagonal.size());
  Int order = 1;
  for (int i = 0; i < g; ++i) {
    const Int d = i < dim ? dec.diagonal[static_cast<std::size_t>(i)] : Int(0);
    const Int& ui = u[static_cast<std::size_t>(i)];
    if (d == 0) {
      if (ui != 0) return 0;  // nonzero free coordinate: infinite order
    } else if (d > 1) {
      const Int contribution = d / gcd(d, int_abs(ui));
      order = lcm(order, contribution);
    }
  }
  return static_cast<std::int64_t>(order);
}

CosetTable::CosetTable(int generator_count, Status status, std::vector<std::int32_t> entries,
                       std::int64_t cap, std::int64_t total_defined)
    : generators_(generator_count), status_(status), entries_(std::move(entries)), cap_(cap),
      total_defined_(total_defined) {}

int CosetTable::index() const {
  if (!complete()) throw std::logic_error("coset table is not complete");
  return static_cast<int>(entries_.size() / static_cast<std::size_t>(2 * generators_));
}

std::int32_t CosetTable::action(std::int32_t coset, int letter) const {
  if (!complete()) throw std::invalid_argument("coset table is not complete");
  const int cols = 2 * generators_;
  if (coset < 0 || coset >= index() || letter < 0 || letter >= cols)
    throw std::invalid_argument("coset table access out of range");
  return entries_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(cols) +
                  static_cast<std::size_t>(letter)];
}

namespace {

// HLT enumeration with a standard coincidence queue. Rows of dead cosets are
// kept so that every reference to a dying coset can be found through its own
// row (the table stays involution-consistent).
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_generators, std::int64_t cap)
      : ngens_(p.generator_count()), cols_(2 * p.generator_count()), cap_(cap) {
    if (cap < 1) throw std::invalid_argument("coset cap must be at least 1");
    for (const Word& r : p.relators()) relators_.push_back(to_letters(r));
    for (const Word& w : subgroup_generators) {
      if (!compatible_alphabets(w.alphabet(), p.alphabet()))
        throw std::invalid_argument("subgroup generator over a different alphabet");
      subgroup_.push_back(to_letters(w));
    }
    new_coset();
  }

  CosetTable run() {
    for (const auto& w : subgroup_)
      if (!overflow_) scan_and_fill(0, w);
    for (std::int32_t alpha = 0; alpha < next_ && !overflow_; ++alpha) {
      if (rep(alpha) != alpha) continue;
      for (const auto& w : relators_) {
        if (overflow_) break;
        scan_and_fill(alpha, w);
        if (rep(alpha) != alpha) break;  // died during processing
      }
      if (overflow_ || rep(alpha) != alpha) continue;
      for (int l = 0; l < cols_ && !overflow_; ++l)
        if (entry(alpha, l) < 0) define(alpha, l);
    }
    if (overflow_)
      return CosetTable(ngens_, CosetTable::Status::Overflow, {}, cap_, total_defined_);
    return CosetTable(ngens_, CosetTable::Status::Complete, compact(), cap_, total_defined_);
  }

 private:
  static int inv(int letter) { return letter ^ 1; }

  std::int32_t& entry(std::int32_t c, int l) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(l)];
  }

  std::int32_t new_coset() {
    const std::int32_t c = next_++;
    ++total_defined_;
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    parent_.push_back(c);
    return c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t up = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = up;
    }
    return r;
  }

  bool define(std::int32_t a, int l) {
    if (next_ >= cap_) {
      overflow_ = true;
      return false;
    }
    const std::int32_t b = new_coset();
    entry(a, l) = b;
    entry(b, inv(l)) = a;
    return true;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    std::size_t i = 0;
    while (i < queue_.size()) {
      const std::int32_t gamma = queue_[i++];
      for (int x = 0; x < cols_; ++x) {
        const std::int32_t delta = entry(gamma, x);
        if (delta < 0) continue;
        entry(delta, inv(x)) = -1;
        const std::int32_t mu = rep(gamma);
        const std::int32_t nu = rep(delta);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, inv(x)) >= 0) {
          merge(mu, entry(nu, inv(x)));
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
    queue_.clear();
  }

  void scan_and_fill(std::int32_t alpha, const std::vector<std::int32_t>& w) {
    if (w.empty()) return;
    std::int32_t f = alpha;
    std::int64_t i = 0;
    std::int32_t b = alpha;
    std::int64_t j = static_cast<std::int64_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) >= 0) f = entry(f, w[i]), ++i;
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(w[j])) >= 0) b = entry(b, inv(w[j])), --j;
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[i]) = b;
        entry(b, inv(w[i])) = f;
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  std::vector<std::int32_t> compact() {
    std::vector<std::int32_t> dense(static_cast<std::size_t>(next_), -1);
    std::int32_t live = 0;
    for (std::int32_t c = 0; c < next_; ++c)
      if (rep(c) == c) dense[static_cast<std::size_t>(c)] = live++;
    std::vector<std::int32_t> out(static_cast<std::size_t>(live) * static_cast<std::size_t>(cols_));
    for (std::int32_t c = 0; c < next_; ++c) {
      if (rep(c) != c) continue;
      for (int l = 0; l < cols_; ++l) {
        const std::int32_t d = entry(c, l);
        if (d < 0) throw std::logic_error("complete table has an undefined entry");
        out[static_cast<std::size_t>(dense[static_cast<std::size_t>(c)]) *
                static_cast<std::size_t>(cols_) +
            static_cast<std::size_t>(l)] = dense[static_cast<std::size_t>(rep(d))];
      }
    }
    // Closure check: every relator cycles at every live coset.
    for (std::int32_t c = 0; c < live; ++c) {
      for (const auto& w : relators_) {
        std::int32_t cur = c;
        for (const std::int32_t l : w)
          cur = out[static_cast<std::size_t>(cur) * static_cast<std::size_t>(cols_) +
                    static_cast<std::size_t>(l)];
        if (cur != c) throw std::logic_error("relator does not close on the final table");
      }
    }
    return out;
  }

  int ngens_;
  int cols_;
  std::int64_t cap_;
  std::vector<std::vector<std::int32_t>> relators_;
  std::vector<std::vector<std::int32_t>> subgroup_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::int32_t next_ = 0;
  std::int64_t total_defined_ = 0;
  bool overflow_ = false;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_generators,
                        std::int64_t cap) {
  Enumerator e(p, subgroup_generators, cap);
  return e.run();
}

Permutation permutation_eval(const CosetTable& table, const Word& w) {
  if (!table.complete()) throw std::invalid_argument("coset table is not complete");
  const int n = table.index();
  Permutation perm(static_cast<std::size_t>(n));
  const std::vector<int> letters = to_letters(w);
  for (std::int32_t point = 0; point < n; ++point) {
    std::int32_t cur = point;
    for (int l : letters) cur = table.action(cur, l);
    perm[static_cast<std::size_t>(point)] = cur;
  }
  return perm;
}

Permutation permutation_image(const std::vector<Permutation>& generator_images, const Word& w,
                              int degree) {
  std::vector<Permutation> inverses(generator_images.size());
  for (std::size_t g = 0; g < generator_images.size(); ++g) {
    inverses[g].resize(static_cast<std::size_t>(degree));
    for (std::int32_t i = 0; i < degree; ++i)
      inverses[g][static_cast<std::size_t>(generator_images[g][static_cast<std::size_t>(i)])] = i;
  }
  Permutation perm(static_cast<std::size_t>(degree));
  for (std::int32_t point = 0; point < degree; ++point) {
    std::int32_t cur = point;
    for (const Syllable& s : w.syllables()) {
      const Permutation& img = s.exponent > 0 ? generator_images[static_cast<std::size_t>(s.generator)]
                                              : inverses[static_cast<std::size_t>(s.generator)];
      const std::int64_t reps = s.exponent < 0 ? -s.exponent : s.exponent;
      for (std::int64_t r = 0; r < reps; ++r) cur = img[static_cast<std::size_t>(cur)];
    }
    perm[static_cast<std::size_t>(point)] = cur;
  }
  return perm;
}

bool is_identity_permutation(const Permutation& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

bool satisfies_relators(const Presentation& p, const std::vector<Permutation>& generator_images,
                        int degree) {
  for (const Word& r : p.relators())
    if (!is_identity_permutation(permutation_image(generator_images, r, degree))) return false;
  return true;
}

QuotientSearchResult finite_quotient_search(const Presentation& p, QuotientSearchOptions opts) {
  if (opts.degree < 1 || opts.degree > 7)
    throw std::invalid_argument("quotient search degree must be between 1 and 7");
  const int d = opts.degree;
  const int g = p.generator_count();

  std::vector<Permutation> perms;
  {
    Permutation id(static_cast<std::size_t>(d));
    for (std::int32_t i = 0; i < d; ++i) id[static_cast<std::size_t>(i)] = i;
    Permutation cur = id;
    do {
      perms.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
  }
  const std::size_t nperm = perms.size();

  QuotientSearchResult result;
  result.degree = d;
  result.seed = opts.seed;
  result.exhaustive = d <= opts.exhaustive_max_degree;

  auto try_tuple = [&](const std::vector<std::size_t>& pick) {
    std::vector<Permutation> images;
    images.reserve(static_cast<std::size_t>(g));
    for (std::size_t idx : pick) images.push_back(perms[idx]);
    ++result.tuples_checked;
    if (satisfies_relators(p, images, d)) result.homomorphisms.push_back(std::move(images));
  };

  if (result.exhaustive) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(g), 0);
    while (true) {
      try_tuple(pick);
      int pos = g - 1;
      while (pos >= 0) {
        if (++pick[static_cast<std::size_t>(pos)] < nperm) break;
        pick[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> dist(0, nperm - 1);
    std::vector<std::size_t> pick(static_cast<std::size_t>(g));
    for (std::int64_t s = 0; s < opts.samples; ++s) {
      for (auto& idx : pick) idx = dist(rng);
      try_tuple(pick);
    }
  }
  return result;
}

}  // namespace gtcert
