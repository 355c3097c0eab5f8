#include <catch_amalgamated.hpp>

#include <random>

#include "hilden/braid.hpp"
#include "oracles.hpp"

using namespace hilden;

namespace {

// Applies one random defining-relation rewrite (or inserts a cancelling pair)
// somewhere in w. The result is equal to w in B_m.
oracle::Seq rewrite(std::mt19937_64& rng, oracle::Seq w, int m) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> gen(1, m - 1);
  std::uniform_int_distribution<std::size_t> pos(0, w.size());
  std::size_t at = pos(rng);
  auto        ins = [&](oracle::Seq piece) {
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), piece.begin(), piece.end());
  };
  int i = gen(rng);
  switch (kind(rng)) {
    case 0: ins({i, -i}); break;
    case 1: ins({-i, i}); break;
    case 2:
      if (i + 1 <= m - 1) {
        // s_i s_{i+1} s_i (s_{i+1} s_i s_{i+1})^-1
        ins({i, i + 1, i, -(i + 1), -i, -(i + 1)});
      }
      break;
    case 3: {
      int j = gen(rng);
      if (std::abs(i - j) >= 2) {
        ins({i, j, -i, -j});
      }
      break;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("normal form examples", "[braid]") {
  auto nf = normal_form(sigma_word(3, {1, -1}));
  CHECK(nf.delta_power == 0);
  CHECK(nf.factors.empty());
  nf = normal_form(sigma_word(3, {1, 2, 1}));
  CHECK(nf.delta_power == 1);
  CHECK(nf.factors.empty());
  nf = normal_form(sigma_word(2, {-1}));
  CHECK(nf.delta_power == -1);
  CHECK(nf.factors.empty());
  nf = normal_form(delta(5) * delta(5));
  CHECK(nf.delta_power == 2);
  CHECK(nf.factors.empty());
}

TEST_CASE("braids_equal examples", "[braid]") {
  CHECK(braids_equal(sigma_word(4, {1, 2, 1}), sigma_word(4, {2, 1, 2})));
  CHECK(braids_equal(sigma_word(4, {1, 3}), sigma_word(4, {3, 1})));
  CHECK_FALSE(braids_equal(sigma_word(3, {1}), sigma_word(3, {2})));
  CHECK_FALSE(braids_equal(sigma_word(4, {1, 3, 1}), sigma_word(4, {3, 1, 3})));
  CHECK_THROWS(braids_equal(sigma_word(3, {1}), sigma_word(4, {1})));
}

TEST_CASE("exponent sums and Delta", "[braid]") {
  for (std::size_t m = 2; m <= 10; ++m) {
    CHECK(delta(m).size() == m * (m - 1) / 2);
    CHECK(exponent_sum(full_twist(m)) == static_cast<long>(m * (m - 1)));
  }
  CHECK(exponent_sum(sigma_word(4, {1, -2, 3, 3})) == 2);
}

TEST_CASE("dictionary words", "[braid]") {
  CHECK(to_braid_string(dict::s(1, 1)) == "g2 g3 g1 g2");
  CHECK(to_braid_string(dict::r(1, 1)) == "G2 G3 g1 g2");
  CHECK(to_braid_string(dict::t(2, 3)) == "g5 g5");
  CHECK(to_braid_string(dict::rho(2)) == "g1 g3 g5");
  CHECK(to_braid_string(dict::z(1)) == "g1 g2 g3 g3 g2 g1");
  CHECK(to_braid_string(dict::h(2, 3)) == "g3 g4 g3");
  CHECK(dict::p(2, 1, 3).size() == 16);
  CHECK(dict::p(2, 3, 1) == dict::p(2, 1, 3));
  CHECK(dict::s_total(2) == dict::s(2, 2) * dict::s(2, 1) * dict::t(2, 1));
  CHECK_THROWS_AS(dict::s(2, 3), std::out_of_range);
  CHECK_THROWS_AS(dict::t(2, 4), std::out_of_range);
  CHECK_THROWS_AS(dict::p(2, 1, 4), std::out_of_range);
  CHECK(build_generator("x", {1, 2}, 1) == dict::x(1, 1, 2));
  CHECK_THROWS(build_generator("q", {}, 1));
}

TEST_CASE("token grammar", "[braid]") {
  BraidParseContext ctx{4, 1};
  CHECK(parse_braid("g2 g3 g1 g2", ctx) == dict::s(1, 1));
  CHECK(parse_braid("s1", ctx) == dict::s(1, 1));
  CHECK(parse_braid("S1", ctx) == inverse(dict::s(1, 1)));
  CHECK(parse_braid("rho RHO", ctx).word.empty());
  CHECK(parse_braid("p1.2 X1.2", ctx) == dict::p(1, 1, 2) * inverse(dict::x(1, 1, 2)));
  CHECK(parse_braid("1", ctx).word.empty());
  try {
    (void) parse_braid("g1 g9", ctx);
    FAIL("expected a parse error");
  } catch (parse_error const& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_braid("s1", BraidParseContext{4, 0}), parse_error);
  CHECK_THROWS_AS(parse_braid("s2", ctx), parse_error);
  CHECK_THROWS_AS(parse_braid("q1", ctx), parse_error);
}

namespace {

oracle::Seq seq_of(BraidWord const& b) {
  oracle::Seq s;
  for (auto l : b.word.letters()) {
    s.push_back(l.sign() * static_cast<int>(l.generator() + 1));
  }
  return s;
}

}  // namespace

TEST_CASE("normal form output is left-weighted and reproduces the braid", "[braid][property]") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 3000; ++it) {
    int  m  = 2 + it % 7;
    auto w  = sigma_word(static_cast<std::size_t>(m), oracle::random_seq(rng, m - 1, 40));
    auto nf = normal_form(w);
    REQUIRE(is_left_weighted(nf));
    REQUIRE(normal_form(word_of(nf)) == nf);
  }
  // The faithful action on F_m confirms the normal-form word is the same braid.
  for (int it = 0; it < 1000; ++it) {
    int  m  = 2 + it % 4;
    auto w  = sigma_word(static_cast<std::size_t>(m), oracle::random_seq(rng, m - 1, 8));
    auto back = word_of(normal_form(w));
    REQUIRE(oracle::free_action(seq_of(back), m) == oracle::free_action(seq_of(w), m));
  }
}

TEST_CASE("canonicity under relator rewrites", "[braid][property]") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10000; ++it) {
    int  m = 3 + it % 6;
    auto w = oracle::random_seq(rng, m - 1, 30);
    auto v = w;
    for (int k = 0; k < 4; ++k) {
      v = rewrite(rng, v, m);
    }
    auto bw = sigma_word(static_cast<std::size_t>(m), w);
    auto bv = sigma_word(static_cast<std::size_t>(m), v);
    REQUIRE(normal_form(bw) == normal_form(bv));
    REQUIRE(braids_equal(bw, bv));
    // Perturb the exponent sum: never equal.
    auto bx = bv * sigma_word(static_cast<std::size_t>(m), {1 + static_cast<int>(rng() % (m - 1))});
    REQUIRE_FALSE(braids_equal(bw, bx));
  }
}

TEST_CASE("braids_equal agrees with the faithful free-group action", "[braid][property]") {
  std::mt19937_64 rng(29);
  int             equal_seen = 0;
  for (int it = 0; it < 4000; ++it) {
    int  m = 3 + it % 3;
    // Short words over few generators so that coincidences do occur.
    auto u = oracle::random_seq(rng, m - 1, 6);
    auto v = oracle::random_seq(rng, m - 1, 6);
    long su = 0, sv = 0;
    for (int x : u) su += x > 0 ? 1 : -1;
    for (int x : v) sv += x > 0 ? 1 : -1;
    if (su != sv) {
      continue;
    }
    bool expected = oracle::free_action(u, m) == oracle::free_action(v, m);
    equal_seen += expected;
    REQUIRE(braids_equal(sigma_word(static_cast<std::size_t>(m), u),
                         sigma_word(static_cast<std::size_t>(m), v)) == expected);
  }
  CHECK(equal_seen > 10);
}

TEST_CASE("w w^-1 is trivial", "[braid][property]") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 2000; ++it) {
    std::size_t m = 2 + static_cast<std::size_t>(it % 9);
    auto        w = sigma_word(m, oracle::random_seq(rng, static_cast<int>(m - 1), 50));
    REQUIRE(braids_equal(w * inverse(w), BraidWord(m, Word(artin_alphabet(m)))));
  }
}

TEST_CASE("full twist is central", "[braid][property]") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 2000; ++it) {
    std::size_t m  = 2 + static_cast<std::size_t>(it % 7);
    auto        w  = sigma_word(m, oracle::random_seq(rng, static_cast<int>(m - 1), 30));
    auto        d2 = full_twist(m);
    REQUIRE(braids_equal(d2 * w, w * d2));
  }
  // Delta alone is not central for m >= 3.
  CHECK_FALSE(braids_equal(delta(3) * sigma_word(3, {1}), sigma_word(3, {1}) * delta(3)));
}
