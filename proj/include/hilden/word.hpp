#pragma once

// Free-group words over a named alphabet.
//
// A Word is an immutable, freely reduced sequence of signed letters. Letters
// are small integers; the alphabet carries the name table used for text I/O.
// When words denote maps, the right factor acts first: u * v applies v, then u.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hilden {

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) {
        throw std::invalid_argument("Alphabet: empty generator name");
      }
      if (!index_.emplace(names_[i], i).second) {
        throw std::invalid_argument("Alphabet: duplicate generator name '" +
                                    names_[i] + "'");
      }
    }
  }

  std::size_t size() const noexcept { return names_.size(); }

  std::string const& name(std::size_t id) const { return names_.at(id); }

  std::vector<std::string> const& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t id(std::string_view name) const {
    if (auto i = find(name)) {
      return *i;
    }
    throw std::out_of_range("Alphabet: unknown generator '" + std::string(name) +
                            "'");
  }

  bool operator==(Alphabet const& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string>                     names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

inline AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

inline bool same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b) {
  if (a == b) {
    return true;
  }
  return a && b && *a == *b;
}

// A signed generator packed into one integer: +(g+1) or -(g+1).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t generator, int sign)
      : code_(sign < 0 ? -static_cast<std::int32_t>(generator + 1)
                       : static_cast<std::int32_t>(generator + 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t generator() const noexcept {
    return static_cast<std::uint32_t>((code_ < 0 ? -code_ : code_) - 1);
  }
  constexpr int           sign() const noexcept { return code_ < 0 ? -1 : 1; }
  constexpr std::int32_t  code() const noexcept { return code_; }
  constexpr Letter        inverse() const noexcept { return from_code(-code_); }

  constexpr bool operator==(Letter const&) const = default;

 private:
  std::int32_t code_ = 1;
};

namespace detail {

  // Appends with free cancellation against the current tail.
  inline void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().code() == -l.code()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }

  inline void append_reduced(std::vector<Letter>&   out,
                             std::span<Letter const> tail) {
    for (Letter l : tail) {
      push_reduced(out, l);
    }
  }

  inline void append_inverse_reduced(std::vector<Letter>&   out,
                                     std::span<Letter const> w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      push_reduced(out, it->inverse());
    }
  }

  inline std::vector<Letter> reduced(std::span<Letter const> raw) {
    std::vector<Letter> out;
    out.reserve(raw.size());
    append_reduced(out, raw);
    return out;
  }

  inline bool is_reduced(std::span<Letter const> w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].code() == -w[i - 1].code()) {
        return false;
      }
    }
    return true;
  }

}  // namespace detail

class Word {
 public:
  Word() = default;

  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  // Freely reduces `raw`; every generator id must lie in the alphabet.
  Word(AlphabetPtr alphabet, std::span<Letter const> raw)
      : alphabet_(std::move(alphabet)), letters_(detail::reduced(raw)) {
    validate();
  }

  Word(AlphabetPtr alphabet, std::initializer_list<Letter> raw)
      : Word(std::move(alphabet), std::span<Letter const>(raw.begin(), raw.size())) {}

  static Word generator(AlphabetPtr alphabet, std::size_t id, int sign = 1) {
    Letter l(static_cast<std::uint32_t>(id), sign);
    return Word(std::move(alphabet), std::span<Letter const>(&l, 1));
  }

  static Word generator(AlphabetPtr const& alphabet, std::string_view name,
                        int sign = 1) {
    return generator(alphabet, alphabet->id(name), sign);
  }

  AlphabetPtr const&           alphabet() const noexcept { return alphabet_; }
  std::vector<Letter> const&   letters() const noexcept { return letters_; }
  std::span<Letter const>      span() const noexcept { return letters_; }
  std::size_t                  size() const noexcept { return letters_.size(); }
  bool                         empty() const noexcept { return letters_.empty(); }
  Letter                       operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(Word const& other) const {
    return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
  }

 private:
  struct trusted_tag {};
  Word(AlphabetPtr alphabet, std::vector<Letter>&& reduced, trusted_tag)
      : alphabet_(std::move(alphabet)), letters_(std::move(reduced)) {}

  void validate() const {
    if (!alphabet_) {
      if (!letters_.empty()) {
        throw std::invalid_argument("Word: letters without an alphabet");
      }
      return;
    }
    for (Letter l : letters_) {
      if (l.generator() >= alphabet_->size()) {
        throw std::out_of_range("Word: generator id out of range");
      }
    }
  }

  friend Word make_word_unchecked(AlphabetPtr, std::vector<Letter>&&);

  AlphabetPtr         alphabet_;
  std::vector<Letter> letters_;
};

// `letters` must already be freely reduced and in range.
inline Word make_word_unchecked(AlphabetPtr alphabet, std::vector<Letter>&& letters) {
  return Word(std::move(alphabet), std::move(letters), Word::trusted_tag{});
}

inline Word reduce(AlphabetPtr alphabet, std::span<Letter const> raw) {
  return Word(std::move(alphabet), raw);
}

inline Word multiply(Word const& u, Word const& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) {
    if (u.empty() && !u.alphabet()) {
      return v;
    }
    if (v.empty() && !v.alphabet()) {
      return u;
    }
    throw std::invalid_argument("multiply: alphabet mismatch");
  }
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out = u.letters();
  detail::append_reduced(out, v.span());
  return make_word_unchecked(u.alphabet() ? u.alphabet() : v.alphabet(),
                             std::move(out));
}

inline Word operator*(Word const& u, Word const& v) { return multiply(u, v); }

inline Word invert(Word const& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return make_word_unchecked(w.alphabet(), std::move(out));
}

// h * w * h^-1
inline Word conjugate(Word const& w, Word const& h) {
  return multiply(multiply(h, w), invert(h));
}

inline Word power(Word const& w, long exponent) {
  Word base   = exponent < 0 ? invert(w) : w;
  Word result(w.alphabet());
  for (long i = 0; i < std::labs(exponent); ++i) {
    result = multiply(result, base);
  }
  return result;
}

// [a, b] = a b a^-1 b^-1
inline Word commutator(Word const& a, Word const& b) {
  return multiply(multiply(a, b), invert(multiply(b, a)));
}

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

inline CyclicReduction cyclically_reduce(Word const& w) {
  auto const&  l  = w.letters();
  std::size_t  lo = 0;
  std::size_t  hi = l.size();
  while (hi - lo >= 2 && l[lo].code() == -l[hi - 1].code()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(l.begin() + lo, l.begin() + hi);
  std::vector<Letter> conj(l.begin(), l.begin() + lo);
  return {make_word_unchecked(w.alphabet(), std::move(core)),
          make_word_unchecked(w.alphabet(), std::move(conj))};
}

using SubstitutionMap = std::unordered_map<std::size_t, Word>;

// Homomorphic extension of `images` to `w`, landing in `target`.
inline Word substitute(Word const& w, SubstitutionMap const& images,
                       AlphabetPtr target) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    auto it = images.find(l.generator());
    if (it == images.end()) {
      throw std::out_of_range("substitute: no image for generator '" +
                              w.alphabet()->name(l.generator()) + "'");
    }
    Word const& img = it->second;
    if (!img.empty() && !same_alphabet(img.alphabet(), target)) {
      throw std::invalid_argument("substitute: image outside target alphabet");
    }
    if (l.sign() > 0) {
      detail::append_reduced(out, img.span());
    } else {
      detail::append_inverse_reduced(out, img.span());
    }
  }
  return make_word_unchecked(std::move(target), std::move(out));
}

// Same, with images indexed by generator id.
inline Word substitute(Word const& w, std::span<Word const> images,
                       AlphabetPtr target) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.generator() >= images.size()) {
      throw std::out_of_range("substitute: no image for generator id " +
                              std::to_string(l.generator()));
    }
    auto const& img = images[l.generator()];
    if (l.sign() > 0) {
      detail::append_reduced(out, img.span());
    } else {
      detail::append_inverse_reduced(out, img.span());
    }
  }
  return make_word_unchecked(std::move(target), std::move(out));
}

inline long exponent_sum(Word const& w) {
  long s = 0;
  for (Letter l : w.letters()) {
    s += l.sign();
  }
  return s;
}

////////////////////////////////////////////////////////////////////////////
// Text form: "a b^-1 c", "1" for the empty word.
////////////////////////////////////////////////////////////////////////////

inline std::string to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += w.alphabet()->name(w[i].generator());
    if (w[i].sign() < 0) {
      out += "^-1";
    }
  }
  return out;
}

class parse_error : public std::invalid_argument {
 public:
  parse_error(std::string const& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

  struct Token {
    std::string_view text;
    std::size_t      offset;
  };

  inline std::vector<Token> split_tokens(std::string_view s) {
    std::vector<Token> out;
    std::size_t        i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
      }
      if (i > start) {
        out.push_back({s.substr(start, i - start), start});
      }
    }
    return out;
  }

}  // namespace detail

inline Word parse_word(AlphabetPtr const& alphabet, std::string_view text) {
  std::vector<Letter> raw;
  for (auto const& tok : detail::split_tokens(text)) {
    if (tok.text == "1") {
      continue;
    }
    std::string_view name = tok.text;
    int              sign = 1;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      name = name.substr(0, name.size() - 3);
      sign = -1;
    }
    auto id = alphabet->find(name);
    if (!id) {
      throw parse_error("unknown generator '" + std::string(name) + "'", tok.offset);
    }
    raw.emplace_back(static_cast<std::uint32_t>(*id), sign);
  }
  return Word(alphabet, std::span<Letter const>(raw));
}

}  // namespace hilden
