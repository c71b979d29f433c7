#include "gtcert/presentation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gtcert {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(abs64(a), abs64(b)); }

}  // namespace

Slope make_slope(std::int64_t m, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("slope denominator must be nonzero (infinity filling is rejected)");
  if (n < 0) {
    m = -m;
    n = -n;
  }
  if (gcd64(m, n) != 1) throw std::invalid_argument("slope must be in lowest terms");
  return Slope{m, n};
}

void Diagram::validate() const {
  if (arcs <= 0) throw std::invalid_argument("diagram needs at least one arc");
  if (static_cast<int>(crossings.size()) != arcs)
    throw std::invalid_argument("diagram must have as many crossings as arcs");
  auto check_arc = [&](int a, const char* what) {
    if (a < 0 || a >= arcs)
      throw std::invalid_argument(std::string("diagram ") + what + " arc id out of range");
  };
  check_arc(base_overarc, "base");
  std::vector<int> in_deg(static_cast<std::size_t>(arcs), 0), out_deg(static_cast<std::size_t>(arcs), 0);
  for (const Crossing& c : crossings) {
    check_arc(c.over, "over");
    check_arc(c.in, "in");
    check_arc(c.out, "out");
    if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
    ++in_deg[static_cast<std::size_t>(c.in)];
    ++out_deg[static_cast<std::size_t>(c.out)];
  }
  for (int a = 0; a < arcs; ++a) {
    if (in_deg[static_cast<std::size_t>(a)] != 1 || out_deg[static_cast<std::size_t>(a)] != 1)
      throw std::invalid_argument("each arc must enter and leave exactly one crossing");
  }
  if (static_cast<int>(traversal.size()) != arcs)
    throw std::invalid_argument("traversal must list every arc once");
  std::vector<bool> seen(static_cast<std::size_t>(arcs), false);
  for (int a : traversal) {
    check_arc(a, "traversal");
    if (seen[static_cast<std::size_t>(a)]) throw std::invalid_argument("traversal repeats an arc");
    seen[static_cast<std::size_t>(a)] = true;
  }
  // The crossing consuming traversal[i] must emit traversal[i+1].
  for (int i = 0; i < arcs; ++i) {
    const int cur = traversal[static_cast<std::size_t>(i)];
    const int next = traversal[static_cast<std::size_t>((i + 1) % arcs)];
    bool found = false;
    for (const Crossing& c : crossings) {
      if (c.in == cur) {
        if (c.out != next)
          throw std::invalid_argument("traversal order disagrees with crossing in/out arcs");
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("no crossing consumes a traversed arc");
  }
}

Presentation::Presentation(AlphabetRef alphabet, std::vector<Word> relators,
                           std::optional<Peripheral> peripheral, Provenance provenance)
    : alphabet_(std::move(alphabet)),
      relators_(std::move(relators)),
      peripheral_(std::move(peripheral)),
      provenance_(std::move(provenance)) {
  if (!alphabet_) throw std::invalid_argument("presentation requires an alphabet");
  for (const Word& r : relators_) {
    if (!compatible_alphabets(r.alphabet(), alphabet_))
      throw std::invalid_argument("relator over a different alphabet");
    if (r.is_identity()) throw std::invalid_argument("relator must be nonempty");
  }
  if (peripheral_) {
    if (!compatible_alphabets(peripheral_->meridian.alphabet(), alphabet_) ||
        !compatible_alphabets(peripheral_->longitude.alphabet(), alphabet_))
      throw std::invalid_argument("peripheral words over a different alphabet");
  }
}

const Word& Presentation::relator(int index) const {
  if (index < 0 || index >= static_cast<int>(relators_.size()))
    throw std::invalid_argument("relator index out of range");
  return relators_[static_cast<std::size_t>(index)];
}

PresentationRef share(Presentation p) { return std::make_shared<const Presentation>(std::move(p)); }

Presentation torus_presentation(std::int64_t p, std::int64_t q) {
  if (p < 2 || p >= q) throw std::invalid_argument("torus parameters need 2 <= p < q");
  if (gcd64(p, q) != 1) throw std::invalid_argument("torus parameters must be coprime");

  auto alphabet = Alphabet::make({"x", "y"});
  const Word x = Word::generator(alphabet, 0);
  const Word y = Word::generator(alphabet, 1);
  const Word relator = concat(power(x, p), power(y, -q));

  // a q + b p = 1 with |a| minimal (ties resolved positive); the class of mu
  // then generates H_1 and lambda = x^p mu^{-pq} is null-homologous.
  std::int64_t a0 = 0, b0 = 0;
  {
    std::int64_t old_r = q, r = p, old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::int64_t tmp = old_r - quot * r;
      old_r = r;
      r = tmp;
      tmp = old_s - quot * s;
      old_s = s;
      s = tmp;
    }
    a0 = old_s;                  // a0 q == 1 (mod p)
    b0 = (1 - a0 * q) / p;
  }
  std::int64_t best_a = a0 - p * (a0 / p);
  // candidates around zero, tie -> positive
  std::int64_t cand[2] = {best_a, best_a > 0 ? best_a - p : best_a + p};
  best_a = (abs64(cand[0]) < abs64(cand[1]) || (abs64(cand[0]) == abs64(cand[1]) && cand[0] > 0))
               ? cand[0]
               : cand[1];
  const std::int64_t best_b = (1 - best_a * q) / p;
  if (best_a * q + best_b * p != 1) throw std::logic_error("extended gcd failed");

  const Word mu = concat(power(x, best_a), power(y, best_b));
  const Word lambda = concat(power(x, p), power(mu, -p * q));

  Provenance prov;
  prov.kind = Provenance::Kind::Torus;
  prov.p = p;
  prov.q = q;
  return Presentation(alphabet, {relator}, Peripheral{mu, lambda}, std::move(prov));
}

Presentation lin_presentation(std::int64_t p, std::int64_t q) {
  if (p <= 0) throw std::invalid_argument("lin presentation needs p > 0");
  if (q == 0) throw std::invalid_argument("lin presentation needs q != 0");

  auto alphabet = Alphabet::make({"a", "b", "t"});
  const Word a = Word::generator(alphabet, 0);
  const Word b = Word::generator(alphabet, 1);
  const Word t = Word::generator(alphabet, 2);

  // t a^p t^-1 = b^-1 a^p  and  t b^-q a^-1 t^-1 = b^-q, rewritten as relators.
  const Word r1 = concat({t, power(a, p), inverse(t), power(a, -p), b});
  const Word r2 = concat({t, power(b, -q), inverse(a), inverse(t), power(b, q)});

  Provenance prov;
  prov.kind = Provenance::Kind::Lin;
  prov.p = p;
  prov.q = q;
  return Presentation(alphabet, {r1, r2},
                      Peripheral{t, commutator(power(b, q), power(a, p))}, std::move(prov));
}

WirtingerResult wirtinger(const Diagram& diagram) {
  diagram.validate();
  const int n = diagram.arcs;

  std::vector<std::string> symbols;
  symbols.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) symbols.push_back("t" + std::to_string(i));
  auto alphabet = Alphabet::make(symbols);
  auto gen = [&](int arc, std::int64_t e = 1) { return Word::generator(alphabet, arc, e); };

  std::vector<Word> relators;
  for (const Crossing& c : diagram.crossings) {
    const Word r = concat({gen(c.over, c.sign), gen(c.in), gen(c.over, -c.sign), gen(c.out, -1)});
    // Degenerate kinks produce freely trivial relators; drop them so the
    // presentation invariant (nonempty relators) holds.
    if (!r.is_identity()) relators.push_back(r);
  }

  int negatives = 0;
  for (const Crossing& c : diagram.crossings) {
    if (c.sign < 0) {
      if (c.over != diagram.base_overarc)
        throw std::invalid_argument(
            "negative crossings must run under the base overarc (single successive run)");
      ++negatives;
    }
  }

  const int writhe = static_cast<int>(diagram.crossings.size()) - 2 * negatives;

  // Longitude traversal starts on the base overarc; passing under a crossing
  // contributes t_over^sign. Prefixing t_base^-writhe makes it null-homologous.
  int pos0 = 0;
  for (int i = 0; i < n; ++i)
    if (diagram.traversal[static_cast<std::size_t>(i)] == diagram.base_overarc) pos0 = i;
  std::vector<Syllable> lambda_raw = power(gen(diagram.base_overarc), -writhe).syllables();
  for (int s = 0; s < n; ++s) {
    const int arc = diagram.traversal[static_cast<std::size_t>((pos0 + s) % n)];
    for (const Crossing& c : diagram.crossings) {
      if (c.in == arc) {
        lambda_raw.push_back({c.over, c.sign});
        break;
      }
    }
  }
  const Word lambda = free_reduce(alphabet, std::move(lambda_raw));

  Provenance prov;
  prov.kind = Provenance::Kind::Wirtinger;
  prov.diagram = diagram;
  Presentation pres(alphabet, std::move(relators),
                    Peripheral{gen(diagram.base_overarc), lambda}, std::move(prov));
  return WirtingerResult{std::move(pres),
                         OverarcData{static_cast<int>(diagram.crossings.size()), negatives}};
}

Presentation dehn_fill(const Presentation& p, Slope slope) {
  if (!p.peripheral()) throw std::invalid_argument("dehn filling requires a peripheral pair");
  make_slope(slope.m, slope.n);  // revalidate
  const Word filling = concat(power(p.peripheral()->meridian, slope.m),
                              power(p.peripheral()->longitude, slope.n));
  if (filling.is_identity())
    throw std::invalid_argument("filling relator is freely trivial for this slope");
  std::vector<Word> relators = p.relators();
  relators.push_back(filling);

  Provenance prov;
  prov.kind = Provenance::Kind::Filled;
  prov.slope = slope;
  prov.parent = share(p);
  return Presentation(p.alphabet(), std::move(relators), p.peripheral(), std::move(prov));
}

std::vector<Int> exponent_vector(const Presentation& p, const Word& w) {
  if (!compatible_alphabets(w.alphabet(), p.alphabet()))
    throw std::invalid_argument("word over a different alphabet");
  std::vector<Int> v(static_cast<std::size_t>(p.generator_count()));
  for (const Syllable& s : w.syllables()) v[static_cast<std::size_t>(s.generator)] += s.exponent;
  return v;
}

IntegerMatrix abelianization_matrix(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (int i = 0; i < m.rows(); ++i) {
    const auto row = exponent_vector(p, p.relators()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

}  // namespace gtcert
