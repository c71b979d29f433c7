#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gtcert {

// Interned generator alphabet. One instance per presentation; operations on
// words from different alphabets are errors, not coercions.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int index) const;
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<int> find(std::string_view symbol) const;
  int index_of(std::string_view symbol) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

struct Syllable {
  int generator = 0;
  std::int64_t exponent = 0;
  bool operator==(const Syllable&) const = default;
};

// Reduced free-group word. Normal form: adjacent syllables carry distinct
// generators, every exponent is nonzero; the empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word identity(AlphabetRef alphabet);
  static Word generator(AlphabetRef alphabet, int index, std::int64_t exponent = 1);
  // Tokens separated by whitespace, each "sym" or "sym^k"; "1" is the identity.
  static Word parse(AlphabetRef alphabet, std::string_view text);

  const AlphabetRef& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  // Number of letters in the exponent-(+/-1) expansion.
  std::int64_t letter_length() const;

  std::string str() const;

  bool operator==(const Word& other) const;

  friend Word free_reduce(AlphabetRef alphabet, std::vector<Syllable> raw);

 private:
  AlphabetRef alphabet_;
  std::vector<Syllable> syllables_;
};

// Unique normal form of a raw syllable list; the only Word factory.
Word free_reduce(AlphabetRef alphabet, std::vector<Syllable> raw);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<Word> words);
// x g x^-1, reduced.
Word conjugate(const Word& g, const Word& x);
// g^-1 h^-1 g h, reduced.
Word commutator(const Word& g, const Word& h);
Word power(const Word& w, std::int64_t k);

bool same_alphabet(const Word& u, const Word& v);
void require_same_alphabet(const Word& u, const Word& v);
bool compatible_alphabets(const AlphabetRef& a, const AlphabetRef& b);

// Splits at a letter boundary: w == concat(first, second) without reduction
// across the cut. pos in [0, letter_length].
std::pair<Word, Word> split_at_letter(const Word& w, std::int64_t pos);

// w as c * core * c^-1 with core cyclically reduced.
std::pair<Word, Word> cyclic_reduce(const Word& w);

// Signed letter encoding: generator g with exponent +1 -> 2g, -1 -> 2g+1.
std::vector<int> to_letters(const Word& w);
Word from_letters(AlphabetRef alphabet, const std::vector<int>& letters);

// Maps w onto a larger alphabet containing all of w's symbols by name.
Word rebase(const Word& w, AlphabetRef target);

}  // namespace gtcert
