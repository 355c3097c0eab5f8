#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hilden/braid.hpp"
#include "hilden/perm.hpp"
#include "oracles.hpp"

using namespace hilden;

namespace {

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

Perm C(std::string_view s, std::size_t m) { return parse_cycles(s, m); }

Perm random_perm(std::mt19937_64& rng, std::size_t m) {
  Perm p(m);
  std::shuffle(p.raw().begin(), p.raw().end(), rng);
  return p;
}

}  // namespace

TEST_CASE("compose applies the right factor first", "[perm]") {
  // f = (1 2), g = (2 3): f(g(1)) = 2, f(g(2)) = 3, f(g(3)) = 1.
  auto h = compose(C("(1 2)", 4), C("(2 3)", 4));
  CHECK(h(1) == 2);
  CHECK(h(2) == 3);
  CHECK(h(3) == 1);
  CHECK(h(4) == 4);
  CHECK(to_cycle_string(h) == "(1 2 3)");
  auto g = C("(1 3 4)", 4);
  CHECK(compose(Perm(4), g) == g);
  CHECK(compose(g, g.inverse()).is_identity());
  CHECK_THROWS(compose(Perm(3), Perm(4)));
}

TEST_CASE("cycle notation round trip", "[perm]") {
  CHECK(to_cycle_string(Perm(5)) == "id");
  CHECK(C("id", 4).is_identity());
  CHECK(to_cycle_string(C("(1 3)(2 4)", 4)) == "(1 3)(2 4)");
  CHECK_THROWS_AS(C("(1 5)", 4), parse_error);
  CHECK_THROWS_AS(C("(1 2", 4), parse_error);
  CHECK_THROWS_AS(C("(1 1)", 4), parse_error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto p = random_perm(rng, 8);
    REQUIRE(C(to_cycle_string(p), 8) == p);
  }
}

TEST_CASE("psi of dictionary words", "[perm]") {
  CHECK(psi_of_braid_word(dict::s(1, 1).word, 4) == C("(1 3)(2 4)", 4));
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t m = 2 * n + 2;
    std::string expected;
    for (std::size_t i = 1; i <= m; i += 2) {
      expected += "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")";
    }
    CHECK(psi_of_braid_word(dict::rho(n).word, m) == C(expected, m));
    for (std::size_t i = 1; i <= n; ++i) {
      auto want = C("(" + std::to_string(2 * i - 1) + " " + std::to_string(2 * i + 1) +
                        ")(" + std::to_string(2 * i) + " " + std::to_string(2 * i + 2) + ")",
                    m);
      CHECK(psi_of_braid_word(dict::s(n, i).word, m) == want);
      CHECK(psi_of_braid_word(dict::r(n, i).word, m) == want);
    }
  }
  CHECK(psi_of_braid_word(Word(artin_alphabet(4)), 4).is_identity());
  CHECK_THROWS_AS(psi_of_braid_word(sigma_word(6, {5}).word, 4), std::out_of_range);
}

TEST_CASE("parity and block predicates", "[perm]") {
  CHECK(is_parity_preserving(C("(1 3)(2 4)", 4)));
  CHECK(is_parity_reversing(C("(1 2)(3 4)", 4)));
  auto t = C("(1 2)", 4);
  CHECK_FALSE(is_parity_preserving(t));
  CHECK_FALSE(is_parity_reversing(t));
  CHECK_FALSE(is_liftable(t));
  CHECK(is_liftable(Perm(4)));
  CHECK(preserves_blocks(C("(1 3)(2 4)", 4)));
  CHECK_FALSE(preserves_blocks(C("(2 3)", 4)));
  CHECK(preserves_blocks(Perm(6)));
}

TEST_CASE("predicates agree with a set-based oracle", "[perm][property]") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10000; ++it) {
    std::size_t m = 2 * (1 + it % 4) + 2;
    auto        p = random_perm(rng, m);
    std::set<std::size_t> odd_img;
    for (std::size_t x = 1; x <= m; x += 2) {
      odd_img.insert(p(x));
    }
    bool all_odd  = std::all_of(odd_img.begin(), odd_img.end(), [](auto v) { return v % 2 == 1; });
    bool all_even = std::all_of(odd_img.begin(), odd_img.end(), [](auto v) { return v % 2 == 0; });
    REQUIRE(is_parity_preserving(p) == all_odd);
    REQUIRE(is_parity_reversing(p) == all_even);
    std::set<std::set<std::size_t>> blocks, images;
    for (std::size_t x = 1; x <= m; x += 2) {
      blocks.insert({x, x + 1});
      images.insert({p(x), p(x + 1)});
    }
    REQUIRE(preserves_blocks(p) == (blocks == images));
  }
}

TEST_CASE("psi is a homomorphism and matches a naive oracle", "[perm][property]") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 10000; ++it) {
    std::size_t n = 1 + static_cast<std::size_t>(it % 4);
    std::size_t m = 2 * n + 2;
    auto        u = oracle::random_seq(rng, static_cast<int>(m - 1), 30);
    auto        v = oracle::random_seq(rng, static_cast<int>(m - 1), 30);
    auto        bu = sigma_word(m, u), bv = sigma_word(m, v);
    auto        pu = psi_of_braid_word(bu.word, m);
    auto        pv = psi_of_braid_word(bv.word, m);
    REQUIRE(psi_of_braid_word((bu * bv).word, m) == compose(pu, pv));
    REQUIRE(pu == Perm::from_images(oracle::naive_perm(u, static_cast<int>(m))));
  }
}

TEST_CASE("pi and Pi", "[perm]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t m = 2 * n + 2;
    for (std::size_t i = 1; i <= n; ++i) {
      auto Ps = block_permutation(psi_of_braid_word(dict::s(n, i).word, m));
      CHECK(Ps == Perm::transposition(n + 1, i, i + 1));
    }
    CHECK(pi_to_z2(psi_of_braid_word(dict::rho(n).word, m)) == 1);
    CHECK(block_permutation(Perm(m)).is_identity());
  }
  CHECK_THROWS_AS(pi_to_z2(C("(1 2)", 4)), std::domain_error);
  CHECK_THROWS_AS(block_permutation(C("(2 3)", 4)), std::domain_error);
}

TEST_CASE("pi and Pi are homomorphisms", "[perm][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto vw = enumerate_subgroup(SubgroupLabel::VW, n);
    auto v  = enumerate_subgroup(SubgroupLabel::V, n);
    std::vector<Perm> vwl(vw.elements.begin(), vw.elements.end());
    std::vector<Perm> vl(v.elements.begin(), v.elements.end());
    std::mt19937_64   rng(n);
    for (int it = 0; it < 2000; ++it) {
      auto const& a = vwl[rng() % vwl.size()];
      auto const& b = vwl[rng() % vwl.size()];
      REQUIRE(pi_to_z2(compose(a, b)) == (pi_to_z2(a) + pi_to_z2(b)) % 2);
      auto const& c = vl[rng() % vl.size()];
      auto const& d = vl[rng() % vl.size()];
      REQUIRE(block_permutation(compose(c, d)) ==
              compose(block_permutation(c), block_permutation(d)));
    }
  }
}

TEST_CASE("subgroup orders", "[perm]") {
  CHECK(enumerate_subgroup(SubgroupLabel::VW, 1).elements.size() == 4);
  CHECK(enumerate_subgroup(SubgroupLabel::V, 1).elements.size() == 8);
  CHECK(enumerate_subgroup(SubgroupLabel::Soe, 1).elements.size() == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t f = factorial(n + 1);
    CHECK(enumerate_subgroup(SubgroupLabel::W, n).elements.size() == 2 * f * f);
    CHECK(enumerate_subgroup(SubgroupLabel::V, n).elements.size() == (std::size_t{1} << (n + 1)) * f);
    CHECK(enumerate_subgroup(SubgroupLabel::VW, n).elements.size() == 2 * f);
    CHECK(enumerate_subgroup(SubgroupLabel::Soe, n).elements.size() == f);
    CHECK(enumerate_subgroup(SubgroupLabel::SoxSe, n).elements.size() == f * f);
  }
  CHECK_THROWS_AS(enumerate_subgroup(SubgroupLabel::W, 5), capacity_error);
}

TEST_CASE("enumerated tables are subgroups", "[perm]") {
  for (auto label : {SubgroupLabel::W, SubgroupLabel::V, SubgroupLabel::VW,
                     SubgroupLabel::Soe, SubgroupLabel::SoxSe}) {
    auto t = enumerate_subgroup(label, 2);
    CHECK(t.elements.count(Perm(t.m)) == 1);
    for (auto const& a : t.elements) {
      REQUIRE(t.elements.count(a.inverse()) == 1);
    }
    std::mt19937_64   rng(1);
    std::vector<Perm> l(t.elements.begin(), t.elements.end());
    for (int i = 0; i < 500; ++i) {
      REQUIRE(t.elements.count(compose(l[rng() % l.size()], l[rng() % l.size()])) == 1);
    }
  }
}

TEST_CASE("Pi restricted to Soe is a bijection onto S_{n+1}", "[perm]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto           soe = enumerate_subgroup(SubgroupLabel::Soe, n);
    std::set<Perm> image;
    for (auto const& p : soe.elements) {
      image.insert(block_permutation(p));
    }
    CHECK(image.size() == soe.elements.size());
    CHECK(image.size() == factorial(n + 1));
  }
}

TEST_CASE("ker Pi on V is generated by the block swaps", "[perm]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t    m = 2 * n + 2;
    auto           v = enumerate_subgroup(SubgroupLabel::V, n);
    std::set<Perm> kernel;
    for (auto const& p : v.elements) {
      if (block_permutation(p).is_identity()) {
        kernel.insert(p);
      }
    }
    CHECK(kernel.size() == (std::size_t{1} << (n + 1)));
    // Products of distinct (2i-1 2i) over all subsets.
    std::set<Perm> products;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n + 1)); ++mask) {
      Perm p(m);
      for (std::size_t i = 1; i <= n + 1; ++i) {
        if (mask & (std::size_t{1} << (i - 1))) {
          p = compose(p, Perm::transposition(m, 2 * i - 1, 2 * i));
        }
      }
      products.insert(p);
    }
    CHECK(products == kernel);
  }
}

TEST_CASE("psi images of the generators generate VW", "[perm]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t       m = 2 * n + 2;
    std::vector<Perm> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      gens.push_back(psi_of_braid_word(dict::s(n, i).word, m));
      gens.push_back(psi_of_braid_word(dict::r(n, i).word, m));
    }
    for (std::size_t i = 1; i <= n + 1; ++i) {
      gens.push_back(psi_of_braid_word(dict::t(n, i).word, m));
    }
    gens.push_back(psi_of_braid_word(dict::rho(n).word, m));
    CHECK(generate_group(gens, m) == enumerate_subgroup(SubgroupLabel::VW, n).elements);
  }
}
