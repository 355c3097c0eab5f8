#pragma once

// Finite presentations of the Hilden-type groups, parametric in n (and k).
//
// Each relation is kept as lhs = rhs; the relator word is lhs rhs^-1, and a
// commutation f <-> h is stored as fh = hf. Family tags follow the relation
// labels of the presentations.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hilden/braid.hpp"
#include "hilden/perm.hpp"
#include "hilden/word.hpp"

namespace hilden {

struct Relation {
  std::string id;   // e.g. "(2)(b)[i=1,e=-1]"
  std::string tag;  // e.g. "(2)(b)"
  Word        lhs;
  Word        rhs;

  Word relator() const { return lhs * invert(rhs); }
};

struct Presentation {
  std::string              name;
  std::size_t              n = 0;
  std::size_t              k = 0;  // 0 when the group has no k
  AlphabetPtr              alphabet;
  std::vector<Relation>    relations;

  std::vector<std::string> const& generators() const { return alphabet->names(); }
  std::size_t                     relator_count() const { return relations.size(); }
  std::vector<Word>               relators() const {
    std::vector<Word> out;
    out.reserve(relations.size());
    for (auto const& r : relations) {
      out.push_back(r.relator());
    }
    return out;
  }
};

class count_mismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

  inline std::size_t choose(std::size_t a, std::size_t b) {
    if (b > a) {
      return 0;
    }
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) {
      r = r * (a - b + i) / i;
    }
    return r;
  }

  inline std::string ij(std::size_t i, std::size_t j) {
    return std::to_string(i) + "." + std::to_string(j);
  }

  class Builder {
   public:
    Builder(std::string name, std::size_t n, std::size_t k,
            std::vector<std::string> generators)
        : alphabet_(make_alphabet(std::move(generators))) {
      pres_.name     = std::move(name);
      pres_.n        = n;
      pres_.k        = k;
      pres_.alphabet = alphabet_;
    }

    Word g(std::string_view name) const { return Word::generator(alphabet_, name); }
    Word one() const { return Word(alphabet_); }

    // Product of generators by name.
    Word prod(std::vector<std::string> const& names) const {
      Word w = one();
      for (auto const& x : names) {
        w = w * g(x);
      }
      return w;
    }

    void rel(std::string const& tag, std::string const& params, Word lhs, Word rhs) {
      Relation r;
      r.tag = tag;
      r.id  = params.empty() ? tag : tag + "[" + params + "]";
      r.lhs = std::move(lhs);
      r.rhs = std::move(rhs);
      pres_.relations.push_back(std::move(r));
    }

    void comm(std::string const& tag, std::string const& params, Word const& a,
              Word const& b) {
      rel(tag, params, a * b, b * a);
    }

    // Asserts the number of relations tagged `tag` equals `expected`.
    void expect(std::string const& tag, std::size_t expected) const {
      std::size_t got = 0;
      for (auto const& r : pres_.relations) {
        got += r.tag == tag;
      }
      if (got != expected) {
        throw count_mismatch(pres_.name + " n=" + std::to_string(pres_.n) + ": family " +
                             tag + " has " + std::to_string(got) + " relators, expected " +
                             std::to_string(expected));
      }
    }

    void expect_total(std::size_t expected) const {
      if (pres_.relations.size() != expected) {
        throw count_mismatch(pres_.name + ": " + std::to_string(pres_.relations.size()) +
                             " relators, expected " + std::to_string(expected));
      }
    }

    Presentation take() { return std::move(pres_); }

    AlphabetPtr const& alphabet() const { return alphabet_; }

   private:
    AlphabetPtr  alphabet_;
    Presentation pres_;
  };

  inline void check_n(std::size_t n) {
    if (n < 1) {
      throw std::invalid_argument("presentation: n must be >= 1");
    }
  }

  // Generator names, optionally with a prefix ("~" for the tilde copies).
  struct Names {
    std::string pre;
    std::string s(std::size_t i) const { return pre + "s" + std::to_string(i); }
    std::string r(std::size_t i) const { return pre + "r" + std::to_string(i); }
    std::string t(std::size_t i) const { return pre + "t" + std::to_string(i); }
    std::string rho() const { return pre + "r"; }
  };

  inline std::vector<std::string> lh_generators(std::size_t n, Names const& nm) {
    std::vector<std::string> g;
    for (std::size_t i = 1; i <= n; ++i) g.push_back(nm.s(i));
    for (std::size_t i = 1; i <= n; ++i) g.push_back(nm.r(i));
    for (std::size_t i = 1; i <= n + 1; ++i) g.push_back(nm.t(i));
    g.push_back(nm.rho());
    return g;
  }

  inline std::vector<std::string> pure_generators(std::size_t n) {
    std::vector<std::string> g;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        for (char a : {'p', 'x', 'y'}) {
          g.push_back(std::string(1, a) + ij(i, j));
        }
      }
    }
    return g;
  }

  inline std::string P(char a, std::size_t i, std::size_t j) {
    if (i > j) {
      std::swap(i, j);
    }
    return std::string(1, a) + ij(i, j);
  }

  // Families (1) and (2) shared by the LH-type presentations.
  inline void add_lh_12(Builder& b, std::size_t n, Names const& nm) {
    auto S = [&](std::size_t i) { return b.g(nm.s(i)); };
    auto R = [&](std::size_t i) { return b.g(nm.r(i)); };
    auto T = [&](std::size_t i) { return b.g(nm.t(i)); };
    auto rho = b.g(nm.rho());
    auto A   = [&](char a, std::size_t i) { return a == 's' ? S(i) : R(i); };
    auto is  = [](std::size_t i) { return "i=" + std::to_string(i); };

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 2; j <= n; ++j) {
        for (char a : {'s', 'r'}) {
          for (char c : {'s', 'r'}) {
            b.comm("(1)(a)",
                   std::string(1, a) + std::to_string(i) + "," + std::string(1, c) +
                       std::to_string(j),
                   A(a, i), A(c, j));
          }
        }
      }
    }
    b.expect("(1)(a)", n >= 2 ? 2 * (n - 1) * (n - 2) : 0);

    for (char a : {'s', 'r'}) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n + 1; ++j) {
          if (j != i && j != i + 1) {
            b.comm("(1)(b)", std::string(1, a) + std::to_string(i) + ",t" + std::to_string(j),
                   A(a, i), T(j));
          }
        }
      }
    }
    b.expect("(1)(b)", 2 * n * (n - 1));

    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        b.comm("(1)(c)", "i=" + std::to_string(i) + ",j=" + std::to_string(j), T(i), T(j));
      }
    }
    b.expect("(1)(c)", n * (n + 1) / 2);

    for (std::size_t i = 1; i <= n; ++i) {
      b.comm("(1)(d)", is(i), S(i), rho);
    }
    b.expect("(1)(d)", n);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      b.comm("(1)(e)", is(i), T(i), rho);
    }
    b.expect("(1)(e)", n + 1);

    for (char a : {'s', 'r'}) {
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        b.rel("(2)(a)", std::string(1, a) + "," + is(i), A(a, i) * A(a, i + 1) * A(a, i),
              A(a, i + 1) * A(a, i) * A(a, i + 1));
      }
    }
    b.expect("(2)(a)", 2 * (n - 1));

    for (int e : {1, -1}) {
      for (std::size_t i = 1; i + 1 <= n; ++i) {
        auto ss = power(S(i), e) * power(S(i + 1), e);
        b.rel("(2)(b)", is(i) + ",e=" + std::to_string(e), ss * R(i), R(i + 1) * ss);
      }
    }
    b.expect("(2)(b)", 2 * (n - 1));

    for (std::size_t i = 1; i + 1 <= n; ++i) {
      b.rel("(2)(c)", is(i), R(i) * R(i + 1) * S(i), S(i + 1) * R(i) * R(i + 1));
    }
    b.expect("(2)(c)", n - 1);

    for (std::size_t i = 1; i <= n; ++i) {
      b.rel("(2)(d)", is(i), R(i) * rho * S(i), rho * S(i) * invert(R(i)));
    }
    b.expect("(2)(d)", n);

    for (int e : {1, -1}) {
      for (std::size_t i = 1; i <= n; ++i) {
        b.rel("(2)(e)", is(i) + ",e=" + std::to_string(e), power(S(i), e) * T(i),
              T(i + 1) * power(S(i), e));
      }
    }
    b.expect("(2)(e)", 2 * n);

    for (std::size_t i = 1; i <= n; ++i) {
      b.rel("(2)(f)", is(i), R(i) * T(i), T(i + 1) * R(i));
    }
    b.expect("(2)(f)", n);

    for (std::size_t i = 1; i <= n; ++i) {
      b.rel("(2)(g)", is(i), T(i) * S(i) * S(i) * R(i), R(i) * S(i) * S(i) * T(i + 1));
    }
    b.expect("(2)(g)", n);
  }

  // r_1 ... r_n s_n ... s_1 t_1
  inline Word zeta_word(Builder const& b, std::size_t n, Names const& nm) {
    Word w = b.one();
    for (std::size_t i = 1; i <= n; ++i) w = w * b.g(nm.r(i));
    for (std::size_t i = n; i >= 1; --i) w = w * b.g(nm.s(i));
    return w * b.g(nm.t(1));
  }

  inline Word t_product(Builder const& b, std::size_t n, Names const& nm) {
    Word w = b.one();
    for (std::size_t i = 1; i <= n + 1; ++i) w = w * b.g(nm.t(i));
    return w;
  }

  // s_1 (s_2 s_1) ... (s_n ... s_1)
  inline Word staircase(Builder const& b, std::size_t n, Names const& nm) {
    Word w = b.one();
    for (std::size_t top = 1; top <= n; ++top) {
      for (std::size_t i = top; i >= 1; --i) w = w * b.g(nm.s(i));
    }
    return w;
  }

  inline void add_lh_345(Builder& b, std::size_t n, Names const& nm) {
    auto rho = b.g(nm.rho());
    b.rel("(3)", "", rho * rho, t_product(b, n, nm));
    b.rel("(4)", "", zeta_word(b, n, nm), b.one());
    auto st = staircase(b, n, nm);
    b.rel("(5)", "", t_product(b, n, nm) * st * st, b.one());
  }

  // The pure-generator families shared by PH1, PH and the intermediate LH.
  inline void add_ph1(Builder& b, std::size_t n) {
    std::size_t const N = n + 1;
    auto A = [&](char a, std::size_t i, std::size_t j) { return b.g(P(a, i, j)); };
    auto T = [&](std::size_t i) { return b.g("t" + std::to_string(i)); };
    auto c2 = choose(N, 2);

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        for (std::size_t k = 1; k <= N; ++k)
          b.comm("(C-pt)", ij(i, j) + ",k=" + std::to_string(k), A('p', i, j), T(k));
    b.expect("(C-pt)", c2 * N);

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        b.comm("(C-tt)", "i=" + std::to_string(i) + ",j=" + std::to_string(j), T(i), T(j));
    b.expect("(C-tt)", c2);

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        for (std::size_t k = 1; k <= N; ++k)
          if (k != i) b.comm("(C-xt)", ij(i, j) + ",k=" + std::to_string(k), A('x', i, j), T(k));
    b.expect("(C-xt)", c2 * n);

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        for (std::size_t k = 1; k <= N; ++k)
          if (k != j) b.comm("(C-yt)", ij(i, j) + ",k=" + std::to_string(k), A('y', i, j), T(k));
    b.expect("(C-yt)", c2 * n);

    auto quad = [](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
      return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," +
             std::to_string(l);
    };
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        for (std::size_t k = j + 1; k <= N; ++k)
          for (std::size_t l = k + 1; l <= N; ++l)
            for (char a : {'p', 'x', 'y'})
              for (char c : {'p', 'x', 'y'})
                b.comm("(C1)", quad(i, j, k, l) + "," + a + c, A(a, i, j), A(c, k, l));
    b.expect("(C1)", 9 * choose(N, 4));

    // Table of (alpha, beta, gamma) for the three cyclic orderings.
    static char const* const table[3][8] = {
        {"ppp", "pyy", "xpp", "xxp", "xyy", "ypp", "ypx", "yyy"},   // i<j<k
        {"ppp", "pxy", "xpp", "xpx", "xxy", "ypp", "yxy", "yyp"},   // j<k<i
        {"ppp", "pxx", "xpp", "xxx", "xyp", "ypp", "ypy", "yxx"}};  // k<i<j
    for (std::size_t a = 1; a <= N; ++a)
      for (std::size_t bb = a + 1; bb <= N; ++bb)
        for (std::size_t c = bb + 1; c <= N; ++c) {
          std::size_t const ijk[3][3] = {{a, bb, c}, {c, a, bb}, {bb, c, a}};
          for (int row = 0; row < 3; ++row) {
            auto [i, j, k] = std::tuple(ijk[row][0], ijk[row][1], ijk[row][2]);
            for (auto const* abg : table[row]) {
              b.comm("(C2)",
                     std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                         "," + abg,
                     A(abg[0], i, j), A(abg[1], i, k) * A(abg[2], j, k));
            }
          }
        }
    b.expect("(C2)", 24 * choose(N, 3));

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        for (std::size_t k = j + 1; k <= N; ++k)
          for (std::size_t l = k + 1; l <= N; ++l)
            for (char a : {'p', 'x', 'y'})
              for (char c : {'p', 'x', 'y'}) {
                auto pjk = A('p', j, k);
                b.comm("(C3)", quad(i, j, k, l) + "," + a + c, A(a, i, k),
                       pjk * A(c, j, l) * invert(pjk));
              }
    b.expect("(C3)", 9 * choose(N, 4));

    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        b.comm("(M-x)", ij(i, j), A('x', i, j), A('p', i, j) * T(i));
    b.expect("(M-x)", c2);
    for (std::size_t i = 1; i <= N; ++i)
      for (std::size_t j = i + 1; j <= N; ++j)
        b.comm("(M-y)", ij(i, j), A('y', i, j), A('p', i, j) * T(j));
    b.expect("(M-y)", c2);
  }

  inline void add_zf(Builder& b, std::size_t n) {
    std::size_t const N = n + 1;
    Word              z = b.one();
    for (std::size_t j = N; j >= 2; --j) z = z * invert(b.g(P('x', 1, j)));
    for (std::size_t j = 2; j <= N; ++j) z = z * b.g(P('p', 1, j));
    z = z * b.g("t1");
    b.rel("(Z)", "", z, b.one());

    Word f = b.one();
    for (std::size_t i = 1; i <= N; ++i) f = f * b.g("t" + std::to_string(i));
    for (std::size_t j = 2; j <= N; ++j)
      for (std::size_t i = 1; i < j; ++i) f = f * b.g(P('p', i, j));
    b.rel("(F)", "", f, b.one());
  }

}  // namespace detail

inline Presentation build_LH(std::size_t n) {
  detail::check_n(n);
  detail::Names nm{""};
  detail::Builder b("lh", n, 0, detail::lh_generators(n, nm));
  detail::add_lh_12(b, n, nm);
  detail::add_lh_345(b, n, nm);
  std::size_t const total = 2 * (n - 1) * (n - 2) + 2 * n * (n - 1) + n * (n + 1) / 2 + n +
                            (n + 1) + 2 * (n - 1) + 2 * (n - 1) + (n - 1) + n + 2 * n + n + n + 3;
  b.expect_total(total);
  return b.take();
}

inline Presentation build_PH1(std::size_t n) {
  detail::check_n(n);
  auto gens = detail::pure_generators(n);
  for (std::size_t i = 1; i <= n + 1; ++i) gens.push_back("t" + std::to_string(i));
  detail::Builder b("ph1", n, 0, gens);
  detail::add_ph1(b, n);
  return b.take();
}

inline Presentation build_PH(std::size_t n) {
  detail::check_n(n);
  auto gens = detail::pure_generators(n);
  for (std::size_t i = 1; i <= n + 1; ++i) gens.push_back("t" + std::to_string(i));
  detail::Builder b("ph", n, 0, gens);
  detail::add_ph1(b, n);
  detail::add_zf(b, n);
  return b.take();
}

inline Presentation build_VW(std::size_t n) {
  detail::check_n(n);
  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back("sb" + std::to_string(i));
  gens.push_back("rb");
  detail::Builder b("vw", n, 0, gens);
  auto S  = [&](std::size_t i) { return b.g("sb" + std::to_string(i)); };
  auto rb = b.g("rb");
  for (std::size_t i = 1; i <= n; ++i) b.rel("(1)", "i=" + std::to_string(i), S(i) * S(i), b.one());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      b.comm("(2)", "i=" + std::to_string(i) + ",j=" + std::to_string(j), S(i), S(j));
  for (std::size_t i = 1; i + 1 <= n; ++i)
    b.rel("(3)", "i=" + std::to_string(i), S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1));
  b.rel("(4)", "", rb * rb, b.one());
  for (std::size_t i = 1; i <= n; ++i) b.comm("(5)", "i=" + std::to_string(i), S(i), rb);
  b.expect("(1)", n);
  b.expect("(2)", n >= 2 ? (n - 1) * (n - 2) / 2 : 0);
  b.expect("(3)", n - 1);
  b.expect("(5)", n);
  return b.take();
}

inline Presentation build_intermediate_LH(std::size_t n) {
  detail::check_n(n);
  std::size_t const N = n + 1;
  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back("s" + std::to_string(i));
  for (std::size_t i = 1; i <= N; ++i) gens.push_back("t" + std::to_string(i));
  gens.push_back("r");
  for (auto const& g : detail::pure_generators(n)) gens.push_back(g);
  detail::Builder b("intermediate-lh", n, 0, gens);
  detail::add_ph1(b, n);
  detail::add_zf(b, n);

  auto S   = [&](std::size_t i) { return b.g("s" + std::to_string(i)); };
  auto T   = [&](std::size_t i) { return b.g("t" + std::to_string(i)); };
  auto A   = [&](char a, std::size_t i, std::size_t j) { return b.g(detail::P(a, i, j)); };
  auto rho = b.g("r");
  auto is  = [](std::size_t i) { return "i=" + std::to_string(i); };

  for (std::size_t i = 1; i <= n; ++i) b.rel("(1)", is(i), S(i) * S(i), A('p', i, i + 1));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 2; j <= n; ++j)
      b.comm("(2)", is(i) + ",j=" + std::to_string(j), S(i), S(j));
  for (std::size_t i = 1; i + 1 <= n; ++i)
    b.rel("(3)", is(i), S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1));
  b.rel("(4)", "", rho * rho, detail::t_product(b, n, detail::Names{""}));
  for (std::size_t i = 1; i <= n; ++i) b.comm("(5)", is(i), S(i), rho);

  // (A1)(a): s_k t_i s_k^-1
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 1; i <= N; ++i) {
      std::size_t target = i == k ? k + 1 : (i == k + 1 ? k : i);
      b.rel("(A1)(a)", "k=" + std::to_string(k) + "," + is(i), S(k) * T(i) * invert(S(k)),
            T(target));
    }
  b.expect("(A1)(a)", n * N);

  // (A1)(b): s_i alpha_{i,i+1} s_i^-1
  for (std::size_t i = 1; i <= n; ++i) {
    auto p = A('p', i, i + 1);
    auto c = [&](Word const& w) { return S(i) * w * invert(S(i)); };
    b.rel("(A1)(b)", is(i) + ",p", c(p), p);
    b.rel("(A1)(b)", is(i) + ",x", c(A('x', i, i + 1)), p * A('y', i, i + 1) * invert(p));
    b.rel("(A1)(b)", is(i) + ",y", c(A('y', i, i + 1)), A('x', i, i + 1));
  }
  b.expect("(A1)(b)", 3 * n);

  // (A1)(c): s_k alpha_{i,j} s_k^-1 for the remaining (i, j, k).
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        if (k == i && j == i + 1) {
          continue;
        }
        for (char a : {'p', 'x', 'y'}) {
          Word rhs;
          if (k + 1 == i) {
            auto p = A('p', i - 1, i);
            rhs    = p * A(a, i - 1, j) * invert(p);
          } else if (k == i) {
            rhs = A(a, i + 1, j);
          } else if (k + 1 == j) {
            auto p = A('p', j - 1, j);
            rhs    = p * A(a, i, j - 1) * invert(p);
          } else if (k == j) {
            rhs = A(a, i, j + 1);
          } else {
            rhs = A(a, i, j);
          }
          b.rel("(A1)(c)", detail::ij(i, j) + ",k=" + std::to_string(k) + "," + a,
                S(k) * A(a, i, j) * invert(S(k)), rhs);
        }
      }
  b.expect("(A1)(c)", 3 * (n * detail::choose(N, 2) - n));

  for (std::size_t i = 1; i <= N; ++i) b.comm("(A2)(a)", is(i), rho, T(i));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) b.comm("(A2)(b)", detail::ij(i, j), rho, A('p', i, j));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (char a : {'x', 'y'})
        b.rel("(A2)(c)", detail::ij(i, j) + "," + a, rho * A(a, i, j) * invert(rho),
              invert(A(a, i, j)) * A('p', i, j));
  b.expect("(A2)(a)", N);
  b.expect("(A2)(b)", detail::choose(N, 2));
  b.expect("(A2)(c)", 2 * detail::choose(N, 2));
  return b.take();
}

inline Presentation build_prop_LH(std::size_t n) {
  detail::check_n(n);
  std::size_t const N = n + 1;
  detail::Names     nm{""};
  auto              gens = detail::lh_generators(n, nm);
  for (auto const& g : detail::pure_generators(n)) gens.push_back(g);
  gens.push_back("s");
  detail::Builder b("prop-lh", n, 0, gens);
  detail::add_lh_12(b, n, nm);
  detail::add_lh_345(b, n, nm);

  auto S   = [&](std::size_t i) { return b.g("s" + std::to_string(i)); };
  auto R   = [&](std::size_t i) { return b.g("r" + std::to_string(i)); };
  auto A   = [&](char a, std::size_t i, std::size_t j) { return b.g(detail::P(a, i, j)); };
  auto rho = b.g("r");
  auto s   = b.g("s");
  auto is  = [](std::size_t i) { return "i=" + std::to_string(i); };

  for (std::size_t i = 1; i <= n; ++i) {
    b.rel("(6)(a)", is(i) + ",p", A('p', i, i + 1), S(i) * S(i));
    b.rel("(6)(a)", is(i) + ",x", A('x', i, i + 1), S(i) * invert(R(i)));
    b.rel("(6)(a)", is(i) + ",y", A('y', i, i + 1), invert(R(i)) * S(i));
  }
  b.expect("(6)(a)", 3 * n);

  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 2; j <= N; ++j)
      for (char a : {'p', 'x', 'y'}) {
        Word c = b.one();
        for (std::size_t q = j - 1; q >= i + 1; --q) c = c * S(q);
        b.rel("(6)(b)", detail::ij(i, j) + "," + a, A(a, i, j), c * A(a, i, i + 1) * invert(c));
      }
  b.expect("(6)(b)", 3 * detail::choose(n, 2));

  {
    Word w = b.one();
    for (std::size_t i = n; i >= 1; --i) w = w * S(i);
    b.rel("(6)(c)", "", s, w * b.g("t1"));
  }

  for (std::size_t j = 2; j <= N; ++j)
    for (auto [a, c] : {std::pair{'p', 'p'}, std::pair{'x', 'y'}, std::pair{'y', 'x'}})
      b.rel("(6)(d)", "j=" + std::to_string(j) + "," + a + c, s * A(a, 1, j) * invert(s),
            A(c, j - 1, N));
  b.expect("(6)(d)", 3 * n);

  for (std::size_t i = 2; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (char a : {'p', 'x', 'y'})
        b.rel("(6)(e)", detail::ij(i, j) + "," + a, s * A(a, i, j) * invert(s),
              A(a, i - 1, j - 1));
  b.expect("(6)(e)", 3 * detail::choose(n, 2));

  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) b.comm("(6)(f)", detail::ij(i, j), rho, A('p', i, j));
  b.expect("(6)(f)", detail::choose(N, 2));

  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (char a : {'x', 'y'})
        b.rel("(6)(g)", detail::ij(i, j) + "," + a, rho * A(a, i, j) * invert(rho),
              invert(A(a, i, j)) * A('p', i, j));
  b.expect("(6)(g)", 2 * detail::choose(N, 2));
  return b.take();
}

inline Presentation build_SH(std::size_t n, std::size_t k) {
  detail::check_n(n);
  if (k < 3) {
    throw std::invalid_argument("build_SH: k must be >= 3");
  }
  detail::Names   nm{"~"};
  detail::Builder b("sh", n, k, detail::lh_generators(n, nm));
  detail::add_lh_12(b, n, nm);

  auto rho  = b.g(nm.rho());
  auto zeta = detail::zeta_word(b, n, nm);
  b.rel("(3)", "", rho * rho, detail::t_product(b, n, nm));
  b.rel("(4)", "k=" + std::to_string(k), power(zeta, static_cast<long>(k)), b.one());

  // t_{n+1} ... t_1 ((s_n ... s_1)(s_n ... s_2) ... (s_n))^2
  Word tt = b.one();
  for (std::size_t i = n + 1; i >= 1; --i) tt = tt * b.g(nm.t(i));
  Word blocks = b.one();
  for (std::size_t low = 1; low <= n; ++low)
    for (std::size_t i = n; i >= low; --i) blocks = blocks * b.g(nm.s(i));
  b.rel("(5)", "", tt * blocks * blocks, b.one());

  b.comm("(6)(a)", "s", zeta, b.g(nm.s(1)));
  b.comm("(6)(a)", "r", zeta, b.g(nm.r(1)));
  Word rr = b.one();
  for (std::size_t i = 1; i <= n; ++i) rr = rr * b.g(nm.r(i));
  b.rel("(6)(b)", "", rr * b.g(nm.t(n + 1)), b.g(nm.t(1)) * rr);
  b.rel("(6)(c)", "", rho * zeta, invert(zeta) * rho);
  return b.take();
}

inline std::vector<std::string> const& group_names() {
  static std::vector<std::string> const names{"lh", "ph", "ph1", "prop-lh", "intermediate-lh",
                                              "sh", "vw"};
  return names;
}

inline Presentation build_presentation(std::string_view group, std::size_t n, std::size_t k = 0) {
  if (group == "lh") return build_LH(n);
  if (group == "ph") return build_PH(n);
  if (group == "ph1") return build_PH1(n);
  if (group == "prop-lh") return build_prop_LH(n);
  if (group == "intermediate-lh") return build_intermediate_LH(n);
  if (group == "sh") return build_SH(n, k);
  if (group == "vw") return build_VW(n);
  throw std::invalid_argument("unknown group '" + std::string(group) + "'");
}

////////////////////////////////////////////////////////////////////////////
// Generator assignments
////////////////////////////////////////////////////////////////////////////

// Braid word for a generator name: s<i>, r<i>, t<i>, r, s, p<i>.<j>, x<i>.<j>,
// y<i>.<j>, plus z and D2 (full twist); a leading "~" is dropped (tilde copies map to their images).
inline BraidWord dictionary_word(std::string_view name, std::size_t n) {
  if (!name.empty() && name.front() == '~') {
    name.remove_prefix(1);
  }
  if (name == "r") {
    return dict::rho(n);
  }
  if (name == "s") {
    return dict::s_total(n);
  }
  if (name == "z") {
    return dict::z(n);
  }
  if (name == "D2") {
    return full_twist(dict::strands(n));
  }
  if (name.size() < 2) {
    throw std::invalid_argument("no dictionary entry for '" + std::string(name) + "'");
  }
  char        head = name.front();
  auto        body = name.substr(1);
  std::size_t i = 0, j = 0;
  auto        dot = body.find('.');
  if (dot == std::string_view::npos) {
    if (!hilden::detail::parse_uint(body, i) || (head != 's' && head != 'r' && head != 't')) {
      throw std::invalid_argument("no dictionary entry for '" + std::string(name) + "'");
    }
    return build_generator(std::string(1, head), {i}, n);
  }
  if (!hilden::detail::parse_uint(body.substr(0, dot), i) ||
      !hilden::detail::parse_uint(body.substr(dot + 1), j) ||
      (head != 'p' && head != 'x' && head != 'y')) {
    throw std::invalid_argument("no dictionary entry for '" + std::string(name) + "'");
  }
  return build_generator(std::string(1, head), {i, j}, n);
}

// Braid images of every generator, indexed by generator id.
inline std::vector<BraidWord> dictionary_assignment(Presentation const& p) {
  std::vector<BraidWord> out;
  for (auto const& g : p.generators()) {
    out.push_back(dictionary_word(g, p.n));
  }
  return out;
}

// Permutation images for the VW generators: sb<i> -> Psi(s_i), rb -> Psi(r).
inline std::vector<Perm> vw_assignment(Presentation const& p) {
  std::size_t       m = 2 * p.n + 2;
  std::vector<Perm> out;
  for (auto const& g : p.generators()) {
    BraidWord w = g == "rb" ? dict::rho(p.n) : dict::s(p.n, std::stoul(g.substr(2)));
    out.push_back(psi_of_braid_word(w.word, m));
  }
  return out;
}

inline BraidWord braid_image(Word const& w, std::vector<BraidWord> const& images,
                             std::size_t strands) {
  std::vector<Word> ws;
  ws.reserve(images.size());
  for (auto const& b : images) {
    ws.push_back(b.word);
  }
  return BraidWord(strands, substitute(w, std::span<Word const>(ws), artin_alphabet(strands)));
}

inline Perm perm_image(Word const& w, std::vector<Perm> const& images, std::size_t m) {
  Perm p(m);
  for (Letter l : w.letters()) {
    Perm const& g = images.at(l.generator());
    p             = compose(p, l.sign() > 0 ? g : g.inverse());
  }
  return p;
}

////////////////////////////////////////////////////////////////////////////
// JSON
////////////////////////////////////////////////////////////////////////////

inline nlohmann::json to_json(Presentation const& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["n"]    = p.n;
  if (p.k) {
    j["k"] = p.k;
  } else {
    j["k"] = nullptr;
  }
  j["generators"] = p.generators();
  auto rels       = nlohmann::json::array();
  auto tags       = nlohmann::json::array();
  auto ids        = nlohmann::json::array();
  for (auto const& r : p.relations) {
    rels.push_back(to_string(r.relator()));
    tags.push_back(r.tag);
    ids.push_back(r.id);
  }
  j["relators"] = rels;
  j["tags"]     = tags;
  j["ids"]      = ids;
  return j;
}

inline Presentation presentation_from_json(nlohmann::json const& j) {
  Presentation p;
  p.name     = j.at("name").get<std::string>();
  p.n        = j.at("n").get<std::size_t>();
  p.k        = j.contains("k") && !j["k"].is_null() ? j["k"].get<std::size_t>() : 0;
  p.alphabet = make_alphabet(j.at("generators").get<std::vector<std::string>>());
  auto const& rels = j.at("relators");
  std::vector<std::string> tags =
      j.contains("tags") ? j["tags"].get<std::vector<std::string>>() : std::vector<std::string>{};
  std::vector<std::string> ids =
      j.contains("ids") ? j["ids"].get<std::vector<std::string>>() : std::vector<std::string>{};
  for (std::size_t i = 0; i < rels.size(); ++i) {
    Relation r;
    r.lhs = parse_word(p.alphabet, rels[i].get<std::string>());
    r.rhs = Word(p.alphabet);
    r.tag = i < tags.size() ? tags[i] : "";
    r.id  = i < ids.size() ? ids[i] : "#" + std::to_string(i + 1);
    p.relations.push_back(std::move(r));
  }
  return p;
}

}  // namespace hilden
