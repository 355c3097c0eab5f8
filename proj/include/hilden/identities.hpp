#pragma once

// Auxiliary identities among the dictionary elements, instantiated over their
// index ranges. Each is stored as a Relation (lhs = rhs) over the generators
// of the extended LH presentation plus z and D2, so the same harness checks
// them.

#include <cstddef>
#include <string>

#include "hilden/presentation.hpp"

namespace hilden {

inline Presentation lemma_identities(std::size_t n) {
  detail::check_n(n);
  std::size_t const N = n + 1;
  detail::Names     nm{""};
  auto              gens = detail::lh_generators(n, nm);
  for (auto const& g : detail::pure_generators(n)) gens.push_back(g);
  gens.push_back("s");
  gens.push_back("z");
  gens.push_back("D2");
  detail::Builder b("lemmas", n, 0, gens);

  auto S   = [&](std::size_t i) { return b.g("s" + std::to_string(i)); };
  auto R   = [&](std::size_t i) { return b.g("r" + std::to_string(i)); };
  auto T   = [&](std::size_t i) { return b.g("t" + std::to_string(i)); };
  auto A   = [&](char a, std::size_t i, std::size_t j) { return b.g(detail::P(a, i, j)); };
  auto D   = [&](char a, std::size_t i) { return a == 's' ? S(i) : R(i); };
  auto rho = b.g("r");
  auto is  = [](std::size_t i) { return "i=" + std::to_string(i); };
  auto num = [](std::size_t x) { return std::to_string(x); };

  // Commutation and conjugation relations, r^2, and the closing relations.
  detail::add_lh_12(b, n, nm);
  detail::add_lh_345(b, n, nm);

  // Base pure elements.
  for (std::size_t i = 1; i <= n; ++i) {
    b.rel("pxy-base", is(i) + ",p", A('p', i, i + 1), S(i) * S(i));
    b.rel("pxy-base", is(i) + ",x", A('x', i, i + 1), S(i) * invert(R(i)));
    b.rel("pxy-base", is(i) + ",y", A('y', i, i + 1), invert(R(i)) * S(i));
  }
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 2; j <= N; ++j)
      for (char a : {'p', 'x', 'y'})
        b.rel("pxy-shift-j", detail::ij(i, j) + "," + a, invert(S(j - 1)) * A(a, i, j) * S(j - 1),
              A(a, i, j - 1));
  for (std::size_t i = 2; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (char a : {'p', 'x', 'y'})
        b.rel("pxy-shift-i", detail::ij(i, j) + "," + a, invert(S(i - 1)) * A(a, i, j) * S(i - 1),
              A(a, i - 1, j));

  // Moving t's across runs of s's.
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (long e : {1L, -1L}) {
        Word down = b.one(), up = b.one();
        for (std::size_t q = j - 1; q >= i; --q) down = down * power(S(q), e);
        for (std::size_t q = i; q <= j - 1; ++q) up = up * power(S(q), e);
        auto tag = detail::ij(i, j) + ",e=" + std::to_string(e);
        b.rel("t-shift", tag + ",down", down * T(i), T(j) * down);
        b.rel("t-shift", tag + ",up", up * T(j), T(i) * up);
        for (std::size_t k = i + 1; k <= j; ++k) {
          b.rel("t-shift", tag + ",down,k=" + num(k), down * T(k), T(k - 1) * down);
          b.rel("t-shift", tag + ",up,k=" + num(k), up * T(k - 1), T(k) * up);
        }
      }

  // The pure-generator relations, which hold among the dictionary images.
  detail::add_ph1(b, n);
  detail::add_zf(b, n);

  // alpha_{i,j} as a conjugate of alpha_{j-1,j}.
  for (std::size_t i = 1; i + 2 <= N; ++i)
    for (std::size_t j = i + 2; j <= N; ++j)
      for (char a : {'p', 'x', 'y'}) {
        Word c = b.one();
        for (std::size_t q = j - 2; q >= i; --q) c = c * S(q);
        b.rel("alpha-conj", detail::ij(i, j) + "," + a, A(a, i, j),
              invert(c) * A(a, j - 1, j) * c);
      }

  for (std::size_t i = 2; i <= n; ++i)
    for (long e : {1L, -1L})
      for (char a : {'p', 'x', 'y'}) {
        auto u = power(S(i - 1), e);
        auto v = power(S(i), -e);
        b.rel("swap-conj", is(i) + ",e=" + std::to_string(e) + "," + a,
              u * A(a, i, i + 1) * invert(u), v * A(a, i - 1, i) * invert(v));
      }

  for (std::size_t i = 1; i + 1 <= n; ++i)
    for (char d : {'s', 'r'})
      b.comm("delta-commute", is(i) + "," + d, D(d, i), S(i + 1) * S(i) * S(i) * S(i + 1));

  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 3; j <= N; ++j)
      for (std::size_t k = i + 1; k + 1 < j; ++k)
        for (char a : {'p', 'x', 'y'})
          for (char d : {'s', 'r'})
            b.comm("alpha-commute", detail::ij(i, j) + ",k=" + num(k) + "," + a + d, A(a, i, j),
                   D(d, k));

  // Non-increasing cyclic rotations of (C1) and (C3).
  for (std::size_t q1 = 1; q1 <= N; ++q1)
    for (std::size_t q2 = q1 + 1; q2 <= N; ++q2)
      for (std::size_t q3 = q2 + 1; q3 <= N; ++q3)
        for (std::size_t q4 = q3 + 1; q4 <= N; ++q4) {
          std::size_t const q[4] = {q1, q2, q3, q4};
          for (int rot = 1; rot < 4; ++rot) {
            auto i = q[rot % 4], j = q[(rot + 1) % 4], k = q[(rot + 2) % 4], l = q[(rot + 3) % 4];
            auto quad = num(i) + "," + num(j) + "," + num(k) + "," + num(l);
            for (char a : {'p', 'x', 'y'})
              for (char c : {'p', 'x', 'y'}) {
                b.comm("C1-cyclic", quad + "," + a + c, A(a, i, j), A(c, k, l));
                auto pjk = A('p', j, k);
                b.comm("C3-cyclic", quad + "," + a + c, A(a, i, k), pjk * A(c, j, l) * invert(pjk));
              }
          }
        }

  // s-conjugation and r-conjugation of the pure elements.
  auto s = b.g("s");
  {
    Word w = b.one();
    for (std::size_t i = n; i >= 1; --i) w = w * S(i);
    b.rel("s-def", "", s, w * T(1));
  }
  for (std::size_t j = 2; j <= N; ++j)
    for (auto [a, c] : {std::pair{'p', 'p'}, std::pair{'x', 'y'}, std::pair{'y', 'x'}})
      b.rel("s-conj", "j=" + num(j) + "," + a + c, s * A(a, 1, j) * invert(s), A(c, j - 1, N));
  for (std::size_t i = 2; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j)
      for (char a : {'p', 'x', 'y'})
        b.rel("s-conj", detail::ij(i, j) + "," + a, s * A(a, i, j) * invert(s),
              A(a, i - 1, j - 1));
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = i + 1; j <= N; ++j) {
      b.comm("r-conj", detail::ij(i, j) + ",p", rho, A('p', i, j));
      for (char a : {'x', 'y'})
        b.rel("r-conj", detail::ij(i, j) + "," + a, rho * A(a, i, j) * invert(rho),
              invert(A(a, i, j)) * A('p', i, j));
    }

  // Braid-level forms of the closing relations.
  auto t_prod = detail::t_product(b, n, nm);
  auto st     = detail::staircase(b, n, nm);
  b.rel("zeta-z", "", detail::zeta_word(b, n, nm), b.g("z"));
  b.rel("staircase-D2", "", t_prod * st * st, b.g("D2"));
  {
    Word z = b.one();
    for (std::size_t j = N; j >= 2; --j) z = z * invert(A('x', 1, j));
    for (std::size_t j = 2; j <= N; ++j) z = z * A('p', 1, j);
    b.rel("Z-zeta", "", z * T(1), detail::zeta_word(b, n, nm));
    b.rel("Z-z", "", z * T(1), b.g("z"));
  }
  {
    Word f = t_prod;
    for (std::size_t j = 2; j <= N; ++j)
      for (std::size_t i = 1; i < j; ++i) f = f * A('p', i, j);
    b.rel("F-D2", "", f, b.g("D2"));
  }
  for (std::size_t i = 2; i <= N; ++i) {
    Word lhs = b.one();
    for (std::size_t q = 1; q < i; ++q) lhs = lhs * A('p', q, i);
    Word down = b.one(), up = b.one();
    for (std::size_t q = i - 1; q >= 2; --q) down = down * S(q);
    for (std::size_t q = 2; q <= i - 1; ++q) up = up * S(q);
    b.rel("p-product", is(i), lhs, down * S(1) * S(1) * up);
  }
  return b.take();
}

}  // namespace hilden
