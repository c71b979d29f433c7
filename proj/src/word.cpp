#include "gtcert/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gtcert {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw std::invalid_argument("generator symbol must be nonempty");
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '^')
        throw std::invalid_argument("generator symbol '" + s + "' contains whitespace or '^'");
    }
    if (!index_.emplace(s, i).second)
      throw std::invalid_argument("duplicate generator symbol '" + s + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> symbols) {
  return std::make_shared<const Alphabet>(std::move(symbols));
}

const std::string& Alphabet::symbol(int index) const {
  if (index < 0 || index >= size()) throw std::invalid_argument("generator index out of range");
  return symbols_[index];
}

std::optional<int> Alphabet::find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::index_of(std::string_view symbol) const {
  auto idx = find(symbol);
  if (!idx) throw std::invalid_argument("unknown generator symbol '" + std::string(symbol) + "'");
  return *idx;
}

bool compatible_alphabets(const AlphabetRef& a, const AlphabetRef& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

bool same_alphabet(const Word& u, const Word& v) {
  return compatible_alphabets(u.alphabet(), v.alphabet());
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (!same_alphabet(u, v)) throw std::invalid_argument("alphabet mismatch");
}

Word free_reduce(AlphabetRef alphabet, std::vector<Syllable> raw) {
  if (!alphabet) throw std::invalid_argument("word requires an alphabet");
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.generator < 0 || s.generator >= alphabet->size())
      throw std::invalid_argument("syllable generator index out of range");
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  Word w;
  w.alphabet_ = std::move(alphabet);
  w.syllables_ = std::move(out);
  return w;
}

Word Word::identity(AlphabetRef alphabet) { return free_reduce(std::move(alphabet), {}); }

Word Word::generator(AlphabetRef alphabet, int index, std::int64_t exponent) {
  return free_reduce(std::move(alphabet), {{index, exponent}});
}

Word Word::parse(AlphabetRef alphabet, std::string_view text) {
  std::vector<Syllable> raw;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    std::int64_t exp = 1;
    std::string sym = token;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      sym = token.substr(0, caret);
      const std::string e = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (ec != std::errc() || ptr != e.data() + e.size())
        throw std::invalid_argument("bad exponent in token '" + token + "'");
    }
    raw.push_back({alphabet->index_of(sym), exp});
  }
  return free_reduce(std::move(alphabet), std::move(raw));
}

std::int64_t Word::letter_length() const {
  std::int64_t n = 0;
  for (const Syllable& s : syllables_) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Syllable& s : syllables_) {
    if (!first) out << ' ';
    first = false;
    out << alphabet_->symbol(s.generator);
    if (s.exponent != 1) out << '^' << s.exponent;
  }
  return out.str();
}

bool Word::operator==(const Word& other) const {
  if (!compatible_alphabets(alphabet_, other.alphabet_)) return false;
  return syllables_ == other.syllables_;
}

Word inverse(const Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    raw.push_back({it->generator, -it->exponent});
  return free_reduce(w.alphabet(), std::move(raw));
}

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  std::vector<Syllable> raw = u.syllables();
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return free_reduce(u.alphabet(), std::move(raw));
}

Word concat(std::initializer_list<Word> words) {
  if (words.size() == 0) throw std::invalid_argument("concat of no words");
  Word acc = *words.begin();
  bool first = true;
  for (const Word& w : words) {
    if (first) {
      first = false;
      continue;
    }
    acc = concat(acc, w);
  }
  return acc;
}

Word conjugate(const Word& g, const Word& x) { return concat(concat(x, g), inverse(x)); }

Word commutator(const Word& g, const Word& h) {
  return concat(concat(inverse(g), inverse(h)), concat(g, h));
}

Word power(const Word& w, std::int64_t k) {
  if (k == 0) return Word::identity(w.alphabet());
  const Word base = k < 0 ? inverse(w) : w;
  const std::int64_t reps = k < 0 ? -k : k;
  std::vector<Syllable> raw;
  raw.reserve(base.syllables().size() * static_cast<std::size_t>(reps));
  for (std::int64_t i = 0; i < reps; ++i)
    raw.insert(raw.end(), base.syllables().begin(), base.syllables().end());
  return free_reduce(w.alphabet(), std::move(raw));
}

std::pair<Word, Word> split_at_letter(const Word& w, std::int64_t pos) {
  if (pos < 0 || pos > w.letter_length())
    throw std::invalid_argument("letter position out of range");
  std::vector<Syllable> left, right;
  std::int64_t seen = 0;
  for (const Syllable& s : w.syllables()) {
    const std::int64_t len = s.exponent < 0 ? -s.exponent : s.exponent;
    if (seen + len <= pos) {
      left.push_back(s);
    } else if (seen >= pos) {
      right.push_back(s);
    } else {
      const std::int64_t take = pos - seen;  // 0 < take < len
      const std::int64_t sign = s.exponent < 0 ? -1 : 1;
      left.push_back({s.generator, sign * take});
      right.push_back({s.generator, sign * (len - take)});
    }
    seen += len;
  }
  return {free_reduce(w.alphabet(), std::move(left)), free_reduce(w.alphabet(), std::move(right))};
}

std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = w;
  std::vector<Syllable> conj;
  while (true) {
    const auto& syl = core.syllables();
    if (syl.size() < 2) break;
    const Syllable& first = syl.front();
    const Syllable& last = syl.back();
    if (first.generator != last.generator || (first.exponent > 0) == (last.exponent > 0)) break;
    const std::int64_t cut = std::min(first.exponent < 0 ? -first.exponent : first.exponent,
                                      last.exponent < 0 ? -last.exponent : last.exponent);
    const std::int64_t sign = first.exponent < 0 ? -1 : 1;
    conj.push_back({first.generator, sign * cut});
    std::vector<Syllable> raw = syl;
    raw.front().exponent -= sign * cut;
    raw.back().exponent += sign * cut;
    core = free_reduce(core.alphabet(), std::move(raw));
  }
  return {free_reduce(w.alphabet(), std::move(conj)), core};
}

std::vector<int> to_letters(const Word& w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.letter_length()));
  for (const Syllable& s : w.syllables()) {
    const int letter = s.exponent > 0 ? 2 * s.generator : 2 * s.generator + 1;
    const std::int64_t len = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < len; ++i) out.push_back(letter);
  }
  return out;
}

Word from_letters(AlphabetRef alphabet, const std::vector<int>& letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (int l : letters) raw.push_back({l / 2, l % 2 == 0 ? 1 : -1});
  return free_reduce(std::move(alphabet), std::move(raw));
}

Word rebase(const Word& w, AlphabetRef target) {
  std::vector<Syllable> raw;
  raw.reserve(w.syllables().size());
  for (const Syllable& s : w.syllables())
    raw.push_back({target->index_of(w.alphabet()->symbol(s.generator)), s.exponent});
  return free_reduce(std::move(target), std::move(raw));
}

}  // namespace gtcert
