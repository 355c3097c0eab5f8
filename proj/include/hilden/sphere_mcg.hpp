#pragma once

// Word problem in the mapping class group of the m-marked sphere.
//
// A braid acts on F_m = <x_1, ..., x_m> by
//   sigma_i: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,
// and the action of u v is action(u) o action(v). Eliminating
// x_m = (x_1 ... x_{m-1})^-1 gives automorphisms of F_{m-1}. Two braids give
// the same mapping class iff their automorphisms differ by an inner one.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilden/braid.hpp"
#include "hilden/perm.hpp"
#include "hilden/word.hpp"

namespace hilden {

inline constexpr std::size_t default_letter_budget = 1'000'000;

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Alphabet {x1, ..., x(m-1)}, cached.
inline AlphabetPtr sphere_alphabet(std::size_t m) {
  static std::mutex                         mtx;
  static std::map<std::size_t, AlphabetPtr> cache;
  std::lock_guard<std::mutex>               lock(mtx);
  auto&                                     slot = cache[m];
  if (!slot) {
    std::vector<std::string> names;
    for (std::size_t k = 1; k + 1 <= m; ++k) {
      names.push_back("x" + std::to_string(k));
    }
    slot = make_alphabet(std::move(names));
  }
  return slot;
}

// images[i] is the image of x_{i+1}; there are m of them, the last being the
// image of x_m, all written over x_1 ... x_{m-1}.
struct FreeAuto {
  std::size_t       m = 0;
  std::vector<Word> images;

  std::size_t rank() const noexcept { return m - 1; }
  std::size_t total_length() const {
    std::size_t t = 0;
    for (auto const& w : images) {
      t += w.size();
    }
    return t;
  }
  bool operator==(FreeAuto const&) const = default;
};

inline Word sphere_boundary_word(std::size_t m) {
  // (x_1 ... x_{m-1})^-1
  std::vector<Letter> l;
  for (std::size_t k = m - 1; k >= 1; --k) {
    l.emplace_back(static_cast<std::uint32_t>(k - 1), -1);
  }
  return make_word_unchecked(sphere_alphabet(m), std::move(l));
}

inline FreeAuto identity_auto(std::size_t m) {
  if (m < 2) {
    throw std::invalid_argument("sphere action needs m >= 2");
  }
  FreeAuto a;
  a.m = m;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    a.images.push_back(Word::generator(sphere_alphabet(m), k));
  }
  a.images.push_back(sphere_boundary_word(m));
  return a;
}

namespace detail {

  using Letters = std::vector<Letter>;

  // a b a^-1, reduced; inputs reduced.
  inline Letters conj_letters(Letters const& a, Letters const& b) {
    Letters out;
    out.reserve(2 * a.size() + b.size());
    out = a;
    append_reduced(out, b);
    append_inverse_reduced(out, a);
    return out;
  }

  // a^-1 b a
  inline Letters conj_inv_letters(Letters const& a, Letters const& b) {
    Letters out;
    out.reserve(2 * a.size() + b.size());
    append_inverse_reduced(out, a);
    append_reduced(out, b);
    append_reduced(out, a);
    return out;
  }

}  // namespace detail

// Applies the letters of `w` on the right of `start` (start o action(w)).
inline FreeAuto apply_braid(FreeAuto start, Word const& w,
                            std::size_t budget = default_letter_budget) {
  std::size_t const m = start.m;
  std::vector<detail::Letters> p(m);
  std::size_t                  total = 0;
  for (std::size_t k = 0; k < m; ++k) {
    p[k] = start.images[k].letters();
    total += p[k].size();
  }
  for (Letter l : w.letters()) {
    std::size_t i = l.generator();
    if (i + 1 >= m) {
      throw std::out_of_range("artin_action: letter out of range");
    }
    total -= p[i].size() + p[i + 1].size();
    if (l.sign() > 0) {
      auto ni  = detail::conj_letters(p[i], p[i + 1]);
      p[i + 1] = std::move(p[i]);
      p[i]     = std::move(ni);
    } else {
      auto ni1 = detail::conj_inv_letters(p[i + 1], p[i]);
      p[i]     = std::move(p[i + 1]);
      p[i + 1] = std::move(ni1);
    }
    total += p[i].size() + p[i + 1].size();
    if (total > budget) {
      throw budget_exceeded("artin_action: image length " + std::to_string(total) +
                            " exceeds letter budget " + std::to_string(budget));
    }
  }
  FreeAuto out;
  out.m = m;
  auto alpha = sphere_alphabet(m);
  for (auto& letters : p) {
    out.images.push_back(make_word_unchecked(alpha, std::move(letters)));
  }
  return out;
}

inline FreeAuto artin_action(BraidWord const& b,
                             std::size_t budget = default_letter_budget) {
  return apply_braid(identity_auto(b.strands), b.word, budget);
}

// (f o g)(x) = f(g(x))
inline FreeAuto compose(FreeAuto const& f, FreeAuto const& g) {
  if (f.m != g.m) {
    throw std::invalid_argument("compose: rank mismatch");
  }
  std::vector<Word> fi(f.images.begin(), f.images.end() - 1);
  FreeAuto          h;
  h.m = f.m;
  for (auto const& w : g.images) {
    h.images.push_back(substitute(w, std::span<Word const>(fi), sphere_alphabet(f.m)));
  }
  return h;
}

namespace detail {

  struct Runs {
    long        head = 0;  // exponent of the leading x_j-run
    long        tail = 0;  // exponent of the trailing x_j-run
    std::size_t begin = 0, end = 0;  // the middle part [begin, end)
  };

  inline Runs split_runs(Letters const& w, std::uint32_t j) {
    Runs r;
    r.end = w.size();
    while (r.begin < r.end && w[r.begin].generator() == j) {
      r.head += w[r.begin].sign();
      ++r.begin;
    }
    while (r.end > r.begin && w[r.end - 1].generator() == j) {
      r.tail += w[r.end - 1].sign();
      --r.end;
    }
    return r;
  }

  inline Letters conj_by(Letters const& c, Letters const& w) { return conj_letters(c, w); }

}  // namespace detail

// A word c with f(x_i) = c g(x_i) c^-1 for every free generator x_i, if one
// exists. The answer is exact: the conjugator is pinned down by one generator
// whose g-image is conjugate to a single letter, up to a power of that
// letter, and the power is pinned down by any other generator.
inline std::optional<Word> conj_equal(FreeAuto const& f, FreeAuto const& g) {
  if (f.m != g.m) {
    throw std::invalid_argument("conj_equal: rank mismatch");
  }
  std::size_t const rank  = f.rank();
  auto              alpha = sphere_alphabet(f.m);
  using detail::Letters;

  auto verify = [&](Letters const& c) -> std::optional<Word> {
    for (std::size_t l = 0; l < rank; ++l) {
      if (detail::conj_by(c, g.images[l].letters()) != f.images[l].letters()) {
        return std::nullopt;
      }
    }
    return make_word_unchecked(alpha, Letters(c));
  };

  if (rank == 1) {
    // Abelian: only the trivial conjugation.
    if (f.images[0] == g.images[0]) {
      return Word(alpha);
    }
    return std::nullopt;
  }

  // Pick i with g(x_i) = G x_j^e G^-1.
  for (std::size_t i = 0; i < rank; ++i) {
    auto gc = cyclically_reduce(g.images[i]);
    if (gc.core.size() != 1) {
      continue;
    }
    auto fc = cyclically_reduce(f.images[i]);
    if (fc.core.letters() != gc.core.letters()) {
      return std::nullopt;
    }
    Letter const        xj = gc.core[0];
    std::uint32_t const j  = xj.generator();
    Letters const&      G  = gc.conjugator.letters();
    Letters const&      F  = fc.conjugator.letters();

    // c = F x_j^k G^-1. Find k from another generator.
    for (std::size_t l = 0; l < rank; ++l) {
      if (l == i) {
        continue;
      }
      Letters A = detail::conj_inv_letters(F, f.images[l].letters());
      Letters B = detail::conj_inv_letters(G, g.images[l].letters());
      auto    rb = detail::split_runs(B, j);
      if (rb.begin == rb.end) {
        // B is a power of x_j and says nothing about k.
        continue;
      }
      auto ra = detail::split_runs(A, j);
      if (ra.end - ra.begin != rb.end - rb.begin ||
          !std::equal(A.begin() + static_cast<std::ptrdiff_t>(ra.begin),
                      A.begin() + static_cast<std::ptrdiff_t>(ra.end),
                      B.begin() + static_cast<std::ptrdiff_t>(rb.begin))) {
        return std::nullopt;
      }
      long k = ra.head - rb.head;
      if (ra.tail != rb.tail - k) {
        return std::nullopt;
      }
      Letters c = F;
      Letter  step(j, k < 0 ? -1 : 1);
      for (long q = 0; q < std::labs(k); ++q) {
        detail::push_reduced(c, step);
      }
      detail::append_inverse_reduced(c, G);
      return verify(c);
    }
    // Every other image is conjugate into <x_j> by G, which an automorphism
    // of a free group of rank >= 2 cannot do.
    return std::nullopt;
  }
  throw std::domain_error(
      "conj_equal: no generator image is conjugate to a single letter");
}

inline std::optional<Word> is_inner(FreeAuto const& a) {
  return conj_equal(a, identity_auto(a.m));
}

// Equality of mapping classes. Compares action(a) with action(b) directly,
// which keeps the images shorter than acting by a b^-1.
inline bool mcg_equal(BraidWord const& a, BraidWord const& b,
                      std::size_t budget = default_letter_budget) {
  check_same_strands(a, b);
  return conj_equal(artin_action(a, budget), artin_action(b, budget)).has_value();
}

// Whether `w` is trivial in Mod_{0,m}; splits w = u v and compares u with v^-1.
inline bool mcg_trivial(BraidWord const& w, std::size_t budget = default_letter_budget) {
  auto const& l   = w.word.letters();
  std::size_t mid = l.size() / 2;
  Word u(w.word.alphabet(), std::span<Letter const>(l.data(), mid));
  Word v(w.word.alphabet(), std::span<Letter const>(l.data() + mid, l.size() - mid));
  return mcg_equal(BraidWord(w.strands, u), BraidWord(w.strands, invert(v)), budget);
}

inline bool is_liftable_class(BraidWord const& b) {
  return is_liftable(psi_of_braid_word(b.word, b.strands));
}

// The permutation pi with a(x_i) conjugate to x_{pi(i)} (x_m included), or
// nullopt if some image is not conjugate to a generator.
inline std::optional<Perm> induced_permutation(FreeAuto const& a) {
  std::size_t const m = a.m;
  std::vector<int>  img(m, 0);
  auto              boundary = sphere_boundary_word(m).letters();
  for (std::size_t i = 0; i < m; ++i) {
    auto core = cyclically_reduce(a.images[i]).core.letters();
    if (core.size() == 1 && core[0].sign() > 0) {
      img[i] = static_cast<int>(core[0].generator() + 1);
      continue;
    }
    if (core.size() != boundary.size()) {
      return std::nullopt;
    }
    bool found = false;
    for (std::size_t shift = 0; shift < core.size() && !found; ++shift) {
      found = true;
      for (std::size_t q = 0; q < core.size(); ++q) {
        if (!(core[(q + shift) % core.size()] == boundary[q])) {
          found = false;
          break;
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
    img[i] = static_cast<int>(m);
  }
  try {
    return Perm::from_images(img);
  } catch (std::invalid_argument const&) {
    return std::nullopt;
  }
}

}  // namespace hilden
