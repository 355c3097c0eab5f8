#pragma once

// Braid words in B_m, left normal form, and the generator dictionary for the
// Hilden generators in B_{2n+2}.
//
// A positive permutation braid is stored as its permutation. The permutation
// of a word u v is compose(perm(u), perm(v)), as for psi_of_braid_word.

#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hilden/perm.hpp"
#include "hilden/word.hpp"

namespace hilden {

// Alphabet {g1, ..., g(m-1)}; generator id k-1 is sigma_k. Cached per m.
inline AlphabetPtr artin_alphabet(std::size_t m) {
  static std::mutex                         mtx;
  static std::map<std::size_t, AlphabetPtr> cache;
  std::lock_guard<std::mutex>               lock(mtx);
  auto&                                     slot = cache[m];
  if (!slot) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      names.push_back("g" + std::to_string(k));
    }
    slot = make_alphabet(std::move(names));
  }
  return slot;
}

struct BraidWord {
  std::size_t strands = 0;
  Word        word;

  BraidWord() = default;
  BraidWord(std::size_t m, Word w) : strands(m), word(std::move(w)) {
    if (!word.empty() && !same_alphabet(word.alphabet(), artin_alphabet(m))) {
      throw std::invalid_argument("BraidWord: word is not over the Artin alphabet");
    }
    if (!word.alphabet()) {
      word = Word(artin_alphabet(m));
    }
  }

  std::size_t size() const noexcept { return word.size(); }

  bool operator==(BraidWord const&) const = default;
};

// Signed 1-based sigma indices: {2, -3} is sigma_2 sigma_3^-1.
inline BraidWord sigma_word(std::size_t m, std::vector<int> const& sigmas) {
  std::vector<Letter> raw;
  raw.reserve(sigmas.size());
  for (int s : sigmas) {
    int k = s < 0 ? -s : s;
    if (k < 1 || static_cast<std::size_t>(k) >= m) {
      throw std::out_of_range("sigma index " + std::to_string(k) +
                              " out of range for m=" + std::to_string(m));
    }
    raw.emplace_back(static_cast<std::uint32_t>(k - 1), s < 0 ? -1 : 1);
  }
  return BraidWord(m, Word(artin_alphabet(m), std::span<Letter const>(raw)));
}

inline void check_same_strands(BraidWord const& a, BraidWord const& b) {
  if (a.strands != b.strands) {
    throw std::invalid_argument("braid strand counts differ: " +
                                std::to_string(a.strands) + " vs " +
                                std::to_string(b.strands));
  }
}

inline BraidWord operator*(BraidWord const& a, BraidWord const& b) {
  check_same_strands(a, b);
  return BraidWord(a.strands, multiply(a.word, b.word));
}

inline BraidWord inverse(BraidWord const& a) {
  return BraidWord(a.strands, invert(a.word));
}

inline BraidWord power(BraidWord const& a, long k) {
  return BraidWord(a.strands, power(a.word, k));
}

inline long exponent_sum(BraidWord const& b) { return exponent_sum(b.word); }

// Delta = sigma_1 (sigma_2 sigma_1) ... (sigma_{m-1} ... sigma_1)
inline BraidWord delta(std::size_t m) {
  std::vector<int> s;
  for (int k = 1; static_cast<std::size_t>(k) < m; ++k) {
    for (int j = k; j >= 1; --j) {
      s.push_back(j);
    }
  }
  return sigma_word(m, s);
}

inline BraidWord full_twist(std::size_t m) {
  auto d = delta(m);
  return d * d;
}

// Braid-grammar text: g<k> / G<k>, "1" when empty.
inline std::string to_braid_string(BraidWord const& b) {
  if (b.word.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < b.word.size(); ++i) {
    if (i) {
      out += ' ';
    }
    out += b.word[i].sign() > 0 ? 'g' : 'G';
    out += std::to_string(b.word[i].generator() + 1);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Left normal form
////////////////////////////////////////////////////////////////////////////

struct BraidNormalForm {
  std::size_t       strands     = 0;
  long              delta_power = 0;
  std::vector<Perm> factors;

  bool operator==(BraidNormalForm const&) const = default;
};

namespace garside {

  inline Perm longest(std::size_t m) {
    Perm w(m);
    for (std::size_t i = 0; i < m; ++i) {
      w.raw()[i] = static_cast<std::uint8_t>(m - 1 - i);
    }
    return w;
  }

  // Delta^-1 A Delta
  inline Perm tau(Perm const& a) {
    std::size_t m = a.degree();
    Perm        b(m);
    for (std::size_t i = 0; i < m; ++i) {
      b.raw()[i] = static_cast<std::uint8_t>(m - 1 - a.raw()[m - 1 - i]);
    }
    return b;
  }

  // i (0-based) with A = A' sigma_{i+1}.
  inline bool finishes_with(Perm const& a, std::size_t i) {
    return a.raw()[i] > a.raw()[i + 1];
  }

  // Makes (a, b) left-weighted, keeping the product a b. Returns true if
  // anything moved.
  inline bool normalize_pair(Perm& a, Perm& b) {
    std::size_t m     = a.degree();
    bool        moved = false;
    std::vector<std::uint8_t> binv(m);
    while (true) {
      for (std::size_t x = 0; x < m; ++x) {
        binv[b.raw()[x]] = static_cast<std::uint8_t>(x);
      }
      std::size_t i = 0;
      for (; i + 1 < m; ++i) {
        if (binv[i] > binv[i + 1] && !finishes_with(a, i)) {
          break;
        }
      }
      if (i + 1 >= m) {
        return moved;
      }
      std::swap(a.raw()[i], a.raw()[i + 1]);
      std::swap(b.raw()[binv[i]], b.raw()[binv[i + 1]]);
      moved = true;
    }
  }

  // Incremental builder. The real factor k is tau^flip(stored[k]).
  class Builder {
   public:
    explicit Builder(std::size_t m)
        : m_(m), delta_(longest(m)), id_(m) {}

    void push(Letter l) {
      std::size_t i = l.generator();
      if (i + 1 >= m_) {
        throw std::out_of_range("normal_form: letter out of range");
      }
      Perm d(m_);
      if (l.sign() > 0) {
        std::swap(d.raw()[i], d.raw()[i + 1]);
      } else {
        // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)
        --p_;
        flip_ = !flip_;
        d = delta_;
        std::swap(d.raw()[i], d.raw()[i + 1]);
      }
      append(flip_ ? tau(d) : d);
    }

    BraidNormalForm finish() const {
      BraidNormalForm nf;
      nf.strands     = m_;
      nf.delta_power = p_;
      nf.factors.reserve(f_.size());
      for (auto const& a : f_) {
        nf.factors.push_back(flip_ ? tau(a) : a);
      }
      return nf;
    }

   private:
    void append(Perm d) {
      if (d.is_identity()) {
        return;
      }
      f_.push_back(std::move(d));
      for (std::size_t j = f_.size() - 1; j > 0; --j) {
        if (!normalize_pair(f_[j - 1], f_[j])) {
          break;
        }
      }
      while (!f_.empty() && f_.back().is_identity()) {
        f_.pop_back();
      }
      while (!f_.empty() && f_.front() == delta_) {
        // Delta is tau-invariant, so it leaves the stored list unchanged.
        f_.pop_front();
        ++p_;
      }
    }

    std::size_t      m_;
    Perm             delta_;
    Perm             id_;
    long             p_    = 0;
    bool             flip_ = false;
    std::deque<Perm> f_;
  };

}  // namespace garside

inline BraidNormalForm normal_form(BraidWord const& b) {
  if (b.strands < 1) {
    throw std::invalid_argument("normal_form: no strands");
  }
  garside::Builder builder(b.strands);
  for (Letter l : b.word.letters()) {
    builder.push(l);
  }
  return builder.finish();
}

inline bool is_left_weighted(BraidNormalForm const& nf) {
  auto   m     = nf.strands;
  auto   delta = garside::longest(m);
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    auto const& a = nf.factors[k];
    if (a.is_identity() || a == delta) {
      return false;
    }
    if (k + 1 < nf.factors.size()) {
      Perm x = a;
      Perm y = nf.factors[k + 1];
      if (garside::normalize_pair(x, y)) {
        return false;
      }
    }
  }
  return true;
}

inline bool braids_equal(BraidWord const& a, BraidWord const& b) {
  check_same_strands(a, b);
  if (exponent_sum(a) != exponent_sum(b)) {
    return false;
  }
  return normal_form(a * inverse(b)) == BraidNormalForm{a.strands, 0, {}};
}

// A word for a normal form: Delta^p followed by positive factor words.
inline BraidWord word_of(BraidNormalForm const& nf) {
  std::size_t m = nf.strands;
  BraidWord   w = power(delta(m), nf.delta_power);
  for (auto const& f : nf.factors) {
    // Bubble-sort f down to the identity; the swaps read right to left give
    // a reduced word for f.
    Perm             x = f;
    std::vector<int> rev;
    bool             swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        if (x.raw()[i] > x.raw()[i + 1]) {
          std::swap(x.raw()[i], x.raw()[i + 1]);
          rev.push_back(static_cast<int>(i + 1));
          swapped = true;
        }
      }
    }
    std::vector<int> s(rev.rbegin(), rev.rend());
    w = w * sigma_word(m, s);
  }
  return w;
}

inline std::string to_string(BraidNormalForm const& nf) {
  std::string out = "delta_power " + std::to_string(nf.delta_power) + "; " +
                    std::to_string(nf.factors.size()) + " factors";
  for (auto const& f : nf.factors) {
    out += " " + to_cycle_string(f);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////////
// Generator dictionary, m = 2n+2
////////////////////////////////////////////////////////////////////////////

namespace dict {

  inline std::size_t strands(std::size_t n) { return 2 * n + 2; }

  inline void check_n(std::size_t n) {
    if (n < 1) {
      throw std::out_of_range("dictionary: n must be >= 1");
    }
  }

  inline void check_index(std::size_t i, std::size_t lo, std::size_t hi,
                          char const* what) {
    if (i < lo || i > hi) {
      throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                              " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    }
  }

  inline BraidWord s(std::size_t n, std::size_t i) {
    check_n(n);
    check_index(i, 1, n, "s");
    int k = static_cast<int>(2 * i);
    return sigma_word(strands(n), {k, k + 1, k - 1, k});
  }

  inline BraidWord r(std::size_t n, std::size_t i) {
    check_n(n);
    check_index(i, 1, n, "r");
    int k = static_cast<int>(2 * i);
    return sigma_word(strands(n), {-k, -(k + 1), k - 1, k});
  }

  inline BraidWord t(std::size_t n, std::size_t i) {
    check_n(n);
    check_index(i, 1, n + 1, "t");
    int k = static_cast<int>(2 * i - 1);
    return sigma_word(strands(n), {k, k});
  }

  // The element r = sigma_1 sigma_3 ... sigma_{2n+1}.
  inline BraidWord rho(std::size_t n) {
    check_n(n);
    std::vector<int> w;
    for (std::size_t i = 1; i <= 2 * n + 1; i += 2) {
      w.push_back(static_cast<int>(i));
    }
    return sigma_word(strands(n), w);
  }

  inline BraidWord h(std::size_t n, std::size_t i) {
    check_n(n);
    check_index(i, 1, 2 * n, "h");
    int k = static_cast<int>(i);
    return sigma_word(strands(n), {k, k + 1, k});
  }

  enum class Pure { p, x, y };

  inline BraidWord alpha(Pure kind, std::size_t n, std::size_t i, std::size_t j) {
    check_n(n);
    if (i > j) {
      std::swap(i, j);
    }
    check_index(i, 1, n, "pure");
    check_index(j, i + 1, n + 1, "pure");
    BraidWord base;
    switch (kind) {
      case Pure::p: base = s(n, i) * s(n, i); break;
      case Pure::x: base = s(n, i) * inverse(r(n, i)); break;
      case Pure::y: base = inverse(r(n, i)) * s(n, i); break;
    }
    for (std::size_t k = i + 1; k + 1 <= j; ++k) {
      auto sk = s(n, k);
      base    = sk * base * inverse(sk);
    }
    return base;
  }

  inline BraidWord p(std::size_t n, std::size_t i, std::size_t j) {
    return alpha(Pure::p, n, i, j);
  }
  inline BraidWord x(std::size_t n, std::size_t i, std::size_t j) {
    return alpha(Pure::x, n, i, j);
  }
  inline BraidWord y(std::size_t n, std::size_t i, std::size_t j) {
    return alpha(Pure::y, n, i, j);
  }

  // s = s_n ... s_2 s_1 t_1
  inline BraidWord s_total(std::size_t n) {
    BraidWord w(strands(n), Word(artin_alphabet(strands(n))));
    for (std::size_t i = n; i >= 1; --i) {
      w = w * s(n, i);
    }
    return w * t(n, 1);
  }

  // z = sigma_1 ... sigma_{2n+1} sigma_{2n+1} ... sigma_1
  inline BraidWord z(std::size_t n) {
    check_n(n);
    std::vector<int> w;
    for (int k = 1; k <= static_cast<int>(2 * n + 1); ++k) {
      w.push_back(k);
    }
    for (int k = static_cast<int>(2 * n + 1); k >= 1; --k) {
      w.push_back(k);
    }
    return sigma_word(strands(n), w);
  }

}  // namespace dict

// Named generator with index parameters, as in the dictionary:
// s, r, t, h take one index; p, x, y take two; rho, s_total, z, delta,
// full_twist take none.
inline BraidWord build_generator(std::string_view name, std::vector<std::size_t> const& idx,
                                 std::size_t n) {
  auto need = [&](std::size_t count) {
    if (idx.size() != count) {
      throw std::invalid_argument("generator '" + std::string(name) + "' takes " +
                                  std::to_string(count) + " indices");
    }
  };
  if (name == "s") { need(1); return dict::s(n, idx[0]); }
  if (name == "r") { need(1); return dict::r(n, idx[0]); }
  if (name == "t") { need(1); return dict::t(n, idx[0]); }
  if (name == "h") { need(1); return dict::h(n, idx[0]); }
  if (name == "p") { need(2); return dict::p(n, idx[0], idx[1]); }
  if (name == "x") { need(2); return dict::x(n, idx[0], idx[1]); }
  if (name == "y") { need(2); return dict::y(n, idx[0], idx[1]); }
  if (name == "rho") { need(0); return dict::rho(n); }
  if (name == "s_total") { need(0); return dict::s_total(n); }
  if (name == "z") { need(0); return dict::z(n); }
  if (name == "delta") { need(0); dict::check_n(n); return delta(dict::strands(n)); }
  if (name == "full_twist") {
    need(0);
    dict::check_n(n);
    return full_twist(dict::strands(n));
  }
  throw std::invalid_argument("unknown dictionary generator '" + std::string(name) + "'");
}

////////////////////////////////////////////////////////////////////////////
// Token grammar
////////////////////////////////////////////////////////////////////////////

struct BraidParseContext {
  std::size_t strands = 0;  // required
  std::size_t n       = 0;  // 0 when generator-level tokens are unavailable
};

namespace detail {

  inline bool parse_uint(std::string_view s, std::size_t& out) {
    if (s.empty()) {
      return false;
    }
    out = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return false;
      }
      out = out * 10 + static_cast<std::size_t>(c - '0');
      if (out > 1'000'000) {
        return false;
      }
    }
    return true;
  }

  inline BraidWord parse_braid_token(std::string_view tok, std::size_t offset,
                                     BraidParseContext const& ctx) {
    auto fail = [&](std::string const& why) -> BraidWord {
      throw parse_error(why + " in token '" + std::string(tok) + "'", offset);
    };
    if (tok == "1") {
      return BraidWord(ctx.strands, Word(artin_alphabet(ctx.strands)));
    }
    bool inv = false;
    std::string lower(tok);
    if (tok == "rho" || tok == "RHO") {
      inv   = tok == "RHO";
      lower = "rho";
    } else {
      inv = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
      lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    }
    char      head = lower[0];
    BraidWord w;
    auto      need_n = [&]() {
      if (ctx.n == 0) {
        fail("generator tokens need n (strand count must be even, or pass --n)");
      }
    };
    try {
      if (lower == "rho") {
        need_n();
        w = dict::rho(ctx.n);
      } else if (head == 'g') {
        std::size_t k = 0;
        if (!parse_uint(std::string_view(lower).substr(1), k)) {
          fail("bad sigma index");
        }
        if (k < 1 || k >= ctx.strands) {
          fail("sigma index out of range for " + std::to_string(ctx.strands) +
               " strands");
        }
        w = sigma_word(ctx.strands, {static_cast<int>(k)});
      } else if (head == 's' || head == 'r' || head == 't') {
        need_n();
        std::size_t i = 0;
        if (!parse_uint(std::string_view(lower).substr(1), i)) {
          fail("bad index");
        }
        w = build_generator(std::string(1, head), {i}, ctx.n);
      } else if (head == 'p' || head == 'x' || head == 'y') {
        need_n();
        auto body = std::string_view(lower).substr(1);
        auto dot  = body.find('.');
        std::size_t i = 0, j = 0;
        if (dot == std::string_view::npos || !parse_uint(body.substr(0, dot), i) ||
            !parse_uint(body.substr(dot + 1), j)) {
          fail("expected <i>.<j>");
        }
        if (i == j) {
          fail("indices must differ");
        }
        w = build_generator(std::string(1, head), {i, j}, ctx.n);
      } else {
        fail("unknown token");
      }
    } catch (std::out_of_range const& e) {
      fail(e.what());
    }
    if (w.strands != ctx.strands) {
      fail("strand count mismatch");
    }
    return inv ? inverse(w) : w;
  }

}  // namespace detail

inline BraidWord parse_braid(std::string_view text, BraidParseContext const& ctx) {
  if (ctx.strands < 2) {
    throw std::invalid_argument("parse_braid: need at least 2 strands");
  }
  BraidWord w(ctx.strands, Word(artin_alphabet(ctx.strands)));
  for (auto const& tok : hilden::detail::split_tokens(text)) {
    w = w * detail::parse_braid_token(tok.text, tok.offset, ctx);
  }
  return w;
}

}  // namespace hilden
