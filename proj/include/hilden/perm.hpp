#pragma once

// Permutations of {1,...,m} and the parity/block subgroups of S_{2n+2}.
//
// Points are 1-based at the interface and 0-based in storage.
// compose(f, g)(x) == f(g(x)).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hilden/word.hpp"

namespace hilden {

class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t m) : img_(m) {
    std::iota(img_.begin(), img_.end(), std::uint8_t{0});
  }

  // From 1-based images: images[i-1] = p(i).
  static Perm from_images(std::vector<int> const& images) {
    Perm p;
    p.img_.resize(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int v = images[i];
      if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[v - 1]) {
        throw std::invalid_argument("Perm: images are not a bijection");
      }
      seen[v - 1]  = true;
      p.img_[i]    = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  static Perm transposition(std::size_t m, std::size_t a, std::size_t b) {
    Perm p(m);
    p.check_point(a);
    p.check_point(b);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
  }

  std::size_t degree() const noexcept { return img_.size(); }

  // 1-based image.
  std::size_t operator()(std::size_t x) const {
    check_point(x);
    return img_[x - 1] + 1;
  }

  std::vector<std::uint8_t> const& raw() const noexcept { return img_; }
  std::vector<std::uint8_t>&       raw() noexcept { return img_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) {
        return false;
      }
    }
    return true;
  }

  Perm inverse() const {
    Perm q;
    q.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      q.img_[img_[i]] = static_cast<std::uint8_t>(i);
    }
    return q;
  }

  bool operator==(Perm const&) const  = default;
  auto operator<=>(Perm const&) const = default;

 private:
  void check_point(std::size_t x) const {
    if (x < 1 || x > img_.size()) {
      throw std::out_of_range("Perm: point " + std::to_string(x) + " out of range");
    }
  }

  std::vector<std::uint8_t> img_;
};

inline Perm compose(Perm const& f, Perm const& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  Perm h(f.degree());
  for (std::size_t i = 0; i < f.degree(); ++i) {
    h.raw()[i] = f.raw()[g.raw()[i]];
  }
  return h;
}

inline std::string to_cycle_string(Perm const& p) {
  std::string       out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.raw()[i] == i) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool        first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(j + 1);
      first = false;
      j     = p.raw()[j];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

inline Perm parse_cycles(std::string_view text, std::size_t m) {
  Perm   p(m);
  auto   trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "id" || trimmed.empty()) {
    return p;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') {
      throw parse_error("expected '('", i);
    }
    ++i;
    std::vector<std::size_t> cyc;
    while (true) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i >= text.size()) {
        throw parse_error("unterminated cycle", i);
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      std::size_t v     = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (i == start) {
        throw parse_error("expected a point", i);
      }
      if (v < 1 || v > m) {
        throw parse_error("point " + std::to_string(v) + " out of range", start);
      }
      if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) {
        throw parse_error("repeated point in cycle", start);
      }
      cyc.push_back(v);
    }
    // Cycles are applied right to left; (a b)(b c) means (b c) first.
    Perm c(m);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t from = cyc[k] - 1;
      std::size_t to   = cyc[(k + 1) % cyc.size()] - 1;
      c.raw()[from] = static_cast<std::uint8_t>(to);
    }
    p = compose(p, c);
  }
  return p;
}

////////////////////////////////////////////////////////////////////////////
// Psi: sigma_i -> (i i+1)
////////////////////////////////////////////////////////////////////////////

// Letters of `w` are read as sigma_{id+1}.
inline Perm psi_of_braid_word(Word const& w, std::size_t m) {
  Perm p(m);
  // Right-to-left accumulation: p = s_{i1} o ... o s_{ik}. Composing
  // p o s_i swaps the images at positions i, i+1.
  for (Letter l : w.letters()) {
    std::size_t i = l.generator();
    if (i + 1 >= m) {
      throw std::out_of_range("psi: letter index " + std::to_string(i + 1) +
                              " out of range for m=" + std::to_string(m));
    }
    std::swap(p.raw()[i], p.raw()[i + 1]);
  }
  return p;
}

inline bool is_parity_preserving(Perm const& p) {
  for (std::size_t i = 0; i < p.degree(); i += 2) {
    if (p.raw()[i] % 2 != 0) {
      return false;
    }
  }
  return true;
}

inline bool is_parity_reversing(Perm const& p) {
  for (std::size_t i = 0; i < p.degree(); i += 2) {
    if (p.raw()[i] % 2 != 1) {
      return false;
    }
  }
  return true;
}

inline bool is_liftable(Perm const& p) {
  return p.degree() % 2 == 0 && (is_parity_preserving(p) || is_parity_reversing(p));
}

inline bool preserves_blocks(Perm const& p) {
  if (p.degree() % 2 != 0) {
    return false;
  }
  for (std::size_t i = 0; i < p.degree(); i += 2) {
    if (p.raw()[i] / 2 != p.raw()[i + 1] / 2) {
      return false;
    }
  }
  return true;
}

// 0 when parity preserving, 1 when reversing.
inline int pi_to_z2(Perm const& p) {
  if (is_parity_preserving(p)) {
    return 0;
  }
  if (is_parity_reversing(p)) {
    return 1;
  }
  throw std::domain_error("pi: permutation is not liftable");
}

// beta(j) = ceil(j/2); Pi(p)(i) = beta(p(2i)).
inline Perm block_permutation(Perm const& p) {
  if (!preserves_blocks(p)) {
    throw std::domain_error("Pi: permutation does not preserve blocks");
  }
  std::size_t      n1 = p.degree() / 2;
  std::vector<int> images(n1);
  for (std::size_t i = 1; i <= n1; ++i) {
    std::size_t j = p(2 * i);
    images[i - 1] = static_cast<int>((j + 1) / 2);
  }
  return Perm::from_images(images);
}

////////////////////////////////////////////////////////////////////////////
// Subgroups by exhaustive filter
////////////////////////////////////////////////////////////////////////////

enum class SubgroupLabel { W, V, VW, Soe, SoxSe };

inline std::string to_string(SubgroupLabel l) {
  switch (l) {
    case SubgroupLabel::W: return "W";
    case SubgroupLabel::V: return "V";
    case SubgroupLabel::VW: return "VW";
    case SubgroupLabel::Soe: return "Soe";
    case SubgroupLabel::SoxSe: return "SoxSe";
  }
  return "?";
}

inline bool subgroup_predicate(SubgroupLabel l, Perm const& p) {
  switch (l) {
    case SubgroupLabel::W: return is_liftable(p);
    case SubgroupLabel::V: return preserves_blocks(p);
    case SubgroupLabel::VW: return preserves_blocks(p) && is_liftable(p);
    case SubgroupLabel::Soe: return preserves_blocks(p) && is_parity_preserving(p);
    case SubgroupLabel::SoxSe: return is_parity_preserving(p);
  }
  return false;
}

class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubgroupTable {
  std::size_t    m = 0;
  SubgroupLabel  label{};
  std::set<Perm> elements;
};

inline constexpr std::size_t max_enumeration_n = 4;

inline SubgroupTable enumerate_subgroup(SubgroupLabel label, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_subgroup: n must be >= 1");
  }
  if (n > max_enumeration_n) {
    throw capacity_error("enumerate_subgroup: n=" + std::to_string(n) +
                         " exceeds the exhaustive limit n<=" +
                         std::to_string(max_enumeration_n));
  }
  SubgroupTable t;
  t.m     = 2 * n + 2;
  t.label = label;
  Perm p(t.m);
  do {
    if (subgroup_predicate(label, p)) {
      t.elements.insert(p);
    }
  } while (std::next_permutation(p.raw().begin(), p.raw().end()));
  return t;
}

// Closure of `gens` under composition (finite groups only).
inline std::set<Perm> generate_group(std::vector<Perm> const& gens, std::size_t m) {
  std::set<Perm>    seen{Perm(m)};
  std::vector<Perm> frontier{Perm(m)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace hilden
