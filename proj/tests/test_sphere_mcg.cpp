#include <catch_amalgamated.hpp>

#include <random>

#include "hilden/sphere_mcg.hpp"
#include "oracles.hpp"

using namespace hilden;

namespace {

BraidWord B(std::size_t m, oracle::Seq const& s) { return sigma_word(m, s); }

BraidWord empty_braid(std::size_t m) { return BraidWord(m, Word(artin_alphabet(m))); }

Word X(std::size_t m, std::string_view s) { return parse_word(sphere_alphabet(m), s); }

// Mod_{0,4} is detected by (PSL(2,Z) image, permutation).
bool mod04_trivial_oracle(oracle::Seq const& w) {
  return oracle::psl2_of_b4(w) == oracle::Mat{1, 0, 0, 1} &&
         oracle::naive_perm(w, 4) == std::vector<int>{1, 2, 3, 4};
}

// Mod_{0,3} is S_3.
bool mod03_trivial_oracle(oracle::Seq const& w) {
  return oracle::naive_perm(w, 3) == std::vector<int>{1, 2, 3};
}

}  // namespace

TEST_CASE("artin action examples", "[mcg]") {
  CHECK(artin_action(empty_braid(4)) == identity_auto(4));
  auto a = artin_action(B(3, {1}));
  CHECK(a.images[0] == X(3, "x1 x2 x1^-1"));
  CHECK(a.images[1] == X(3, "x1"));
  // On F_4 the full twist is conjugation by x1 x2 x3 x4, which is trivial
  // once x4 = (x1 x2 x3)^-1.
  auto ft = full_twist(4);
  oracle::Seq seq;
  for (auto l : ft.word.letters()) {
    seq.push_back(l.sign() * static_cast<int>(l.generator() + 1));
  }
  auto free_images = oracle::free_action(seq, 4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(free_images[static_cast<std::size_t>(i - 1)] ==
          oracle::naive_reduce(oracle::Seq{1, 2, 3, 4, i, -4, -3, -2, -1}));
  }
  CHECK(artin_action(ft) == identity_auto(4));
  CHECK_THROWS_AS(artin_action(full_twist(8), 10), budget_exceeded);
}

TEST_CASE("is_inner", "[mcg]") {
  auto id = identity_auto(4);
  auto w  = is_inner(id);
  REQUIRE(w);
  CHECK(w->empty());

  FreeAuto cx2 = id;
  auto     x2  = X(4, "x2");
  for (auto& im : cx2.images) {
    im = conjugate(im, x2);
  }
  auto c = is_inner(cx2);
  REQUIRE(c);
  CHECK(*c == x2);

  CHECK_FALSE(is_inner(artin_action(B(4, {1}))));
}

TEST_CASE("mcg_equal examples", "[mcg]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t m = 2 * n + 2;
    CHECK(mcg_equal(full_twist(m), empty_braid(m)));
    CHECK(mcg_equal(dict::z(n), empty_braid(m)));
    CHECK_FALSE(mcg_equal(B(m, {1}), empty_braid(m)));
    CHECK_FALSE(mcg_equal(delta(m), empty_braid(m)));
  }
  CHECK(mcg_trivial(dict::z(2)));
  CHECK_FALSE(mcg_trivial(dict::t(2, 1)));
}

TEST_CASE("is_liftable_class", "[mcg]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      CHECK(is_liftable_class(dict::s(n, i)));
      CHECK(is_liftable_class(dict::r(n, i)));
    }
    for (std::size_t i = 1; i <= n + 1; ++i) {
      CHECK(is_liftable_class(dict::t(n, i)));
    }
    CHECK(is_liftable_class(dict::rho(n)));
    CHECK_FALSE(is_liftable_class(B(2 * n + 2, {1})));
  }
}

TEST_CASE("artin action is a homomorphism", "[mcg][property]") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 1000; ++it) {
    std::size_t m = 3 + static_cast<std::size_t>(it % 6);
    auto        u = B(m, oracle::random_seq(rng, static_cast<int>(m - 1), 8));
    auto        v = B(m, oracle::random_seq(rng, static_cast<int>(m - 1), 8));
    REQUIRE(artin_action(u * v) == compose(artin_action(u), artin_action(v)));
  }
}

TEST_CASE("artin action matches psi on conjugacy classes", "[mcg][property]") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 2000; ++it) {
    std::size_t m = 3 + static_cast<std::size_t>(it % 6);
    auto        w = B(m, oracle::random_seq(rng, static_cast<int>(m - 1), 12));
    auto        p = induced_permutation(artin_action(w));
    REQUIRE(p);
    REQUIRE(*p == psi_of_braid_word(w.word, m));
  }
}

TEST_CASE("braid equality implies mapping class equality", "[mcg][property]") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 500; ++it) {
    std::size_t m = 4 + static_cast<std::size_t>(it % 3);
    auto        u = oracle::random_seq(rng, static_cast<int>(m - 1), 10);
    // v: u with a braid relation spliced in.
    auto v = u;
    int  i = 1 + static_cast<int>(rng() % (m - 2));
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2),
             {i, i + 1, i, -(i + 1), -i, -(i + 1)});
    REQUIRE(braids_equal(B(m, u), B(m, v)));
    REQUIRE(mcg_equal(B(m, u), B(m, v)));
  }
}

TEST_CASE("normal closure of z and the full twist is killed", "[mcg][property]") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 300; ++it) {
    std::size_t n = 1 + static_cast<std::size_t>(it % 3);
    std::size_t m = 2 * n + 2;
    auto        w = B(m, oracle::random_seq(rng, static_cast<int>(m - 1), 10));
    REQUIRE(mcg_equal(w * dict::z(n) * inverse(w), empty_braid(m)));
    REQUIRE(mcg_equal(w * full_twist(m), w));
    REQUIRE(mcg_trivial(w * inverse(dict::z(n)) * inverse(w) * full_twist(m)));
  }
}

TEST_CASE("mcg_equal agrees with independent oracles on m = 3, 4", "[mcg][property]") {
  std::mt19937_64 rng(59);
  int             trivial_seen = 0;
  for (int it = 0; it < 3000; ++it) {
    auto w4 = oracle::random_seq(rng, 3, 10);
    bool e4 = mod04_trivial_oracle(w4);
    trivial_seen += e4;
    REQUIRE(mcg_equal(B(4, w4), empty_braid(4)) == e4);
    REQUIRE(mcg_trivial(B(4, w4)) == e4);
    auto w3 = oracle::random_seq(rng, 2, 10);
    REQUIRE(mcg_equal(B(3, w3), empty_braid(3)) == mod03_trivial_oracle(w3));
  }
  CHECK(trivial_seen > 5);
}

TEST_CASE("mcg images of B_4 surject onto S_4", "[mcg]") {
  std::vector<Perm> gens;
  for (int i = 1; i <= 3; ++i) {
    gens.push_back(*induced_permutation(artin_action(B(4, {i}))));
  }
  CHECK(generate_group(gens, 4).size() == 24);
}
