#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace tamari_b;
using oracle::perm;

namespace {

std::set<Reflection> as_set(std::vector<Reflection> const& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("identity") {
  CHECK(SignedPermutation::identity(3) == perm({1, 2, 3}));
  CHECK(SignedPermutation::identity(1) == perm({1}));
  CHECK(SignedPermutation::identity(5) == perm({1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(SignedPermutation::identity(0), DomainError);
  CHECK_THROWS_AS(SignedPermutation::identity(13), DomainError);
}

TEST_CASE("sign symmetry of the full map") {
  auto const p = perm({-2, 4, 3, -1});
  for (int a = 1; a <= 4; ++a) CHECK(p(-a) == -p(a));
  CHECK(p.position_of(-4) == -2);
  CHECK(p.long_one_line() == std::vector<int>{1, -3, -4, 2, -2, 4, 3, -1});
  CHECK(to_long_string(perm({-3, 1, -2})) == "2 -1 3 | -3 1 -2");
}

TEST_CASE("generator multiplication") {
  auto const e2 = SignedPermutation::identity(2);
  CHECK(mul_gen_left(Generator{0}, e2) == perm({-1, 2}));
  CHECK(mul_gen_left(Generator{1}, perm({-1, 2})) == perm({-2, 1}));
  CHECK(mul_gen_left(Generator{0}, perm({-1, 2})) == e2);
  CHECK(mul_gen_right(e2, Generator{1}) == perm({2, 1}));
  CHECK(mul_gen_right(perm({2, 1}), Generator{1}) == e2);
  CHECK(mul_gen_right(perm({-1, 2}), Generator{0}) == e2);
  CHECK_THROWS_AS(mul_gen_left(Generator{2}, e2), DomainError);
  CHECK_THROWS_AS(mul_gen_right(e2, Generator{-1}), DomainError);
}

TEST_CASE("reflection multiplication") {
  auto const e3 = SignedPermutation::identity(3);
  CHECK(mul_reflection_right(e3, Reflection::sign(2)) == perm({1, -2, 3}));
  CHECK(mul_reflection_right(e3, Reflection::pos(1, 3)) == perm({3, 2, 1}));
  CHECK(mul_reflection_right(e3, Reflection::neg(1, 3)) == perm({-3, 2, -1}));
  auto const e2 = SignedPermutation::identity(2);
  CHECK(mul_reflection_left(Reflection::sign(1), e2) == perm({-1, 2}));
  CHECK(mul_reflection_left(Reflection::pos(1, 2), perm({2, 1})) == e2);
  CHECK(mul_reflection_left(Reflection::neg(1, 2), e2) == perm({-2, -1}));
  CHECK_THROWS_AS(mul_reflection_right(e2, Reflection::sign(3)), DomainError);
}

TEST_CASE("reflection normal forms") {
  CHECK(Reflection::exchanging(-2, 5) == Reflection::neg(2, 5));
  CHECK(Reflection::exchanging(5, -2) == Reflection::neg(2, 5));
  CHECK(Reflection::exchanging(-3, -1) == Reflection::pos(1, 3));
  CHECK(Reflection::exchanging(4, -4) == Reflection::sign(4));
  CHECK(to_string(Reflection::neg(1, 2)) == "((-2 1))");
  CHECK(to_string(Reflection::pos(2, 3)) == "((2 3))");
  CHECK(to_string(Reflection::sign(4)) == "[[4]]");
  CHECK_THROWS_AS(Reflection::exchanging(2, 2), DomainError);
  // the reflection as a permutation agrees with its action on points
  for (auto const& t : all_reflections(4)) {
    auto const p = as_permutation(t, 4);
    for (int a = 1; a <= 4; ++a) CHECK(p(a) == t(a));
    CHECK(reflection_of(p) == t);
    CHECK(compose(p, p) == SignedPermutation::identity(4));
  }
  CHECK(all_reflections(5).size() == 25);
}

TEST_CASE("inversion sets") {
  auto const p = perm({-2, 4, 3, -1, 6, 5, 8, 7, 9});
  std::set<Reflection> const inv{
      Reflection::sign(1),    Reflection::sign(4),    Reflection::pos(2, 3),
      Reflection::pos(2, 4),  Reflection::pos(3, 4),  Reflection::pos(5, 6),
      Reflection::pos(7, 8),  Reflection::neg(1, 4)};
  CHECK(as_set(inversion_set(p)) == inv);
  std::set<Reflection> const cov{Reflection::sign(4), Reflection::pos(2, 3),
                                 Reflection::pos(5, 6), Reflection::pos(7, 8)};
  CHECK(as_set(cover_inversions(p)) == cov);
  CHECK(coxeter_length(p) == 8);
  // s_0 s_1 s_2 s_7 s_5 s_3 s_2 s_0
  Word w{{Generator{0}, Generator{1}, Generator{2}, Generator{7}, Generator{5},
          Generator{3}, Generator{2}, Generator{0}}};
  CHECK(evaluate(w, 9) == p);

  auto const q = perm({-2, -1, 5, 3, 4});
  CHECK(as_set(inversion_set(q))
        == std::set<Reflection>{Reflection::sign(1), Reflection::sign(2),
                                Reflection::neg(1, 2), Reflection::pos(3, 4),
                                Reflection::pos(3, 5)});
  CHECK(as_set(cover_inversions(q))
        == std::set<Reflection>{Reflection::sign(2), Reflection::pos(3, 5)});
  CHECK(inversion_set(SignedPermutation::identity(4)).empty());
  CHECK(cover_inversions(SignedPermutation::identity(3)).empty());
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> v;
    for (int a = 1; a <= n; ++a) v.push_back(-a);
    CHECK(coxeter_length(perm(v)) == n * n);
  }
}

TEST_CASE("inversion sets are sorted canonically") {
  auto const inv = inversion_set(perm({-3, 1, -2}));
  CHECK(std::is_sorted(inv.begin(), inv.end()));
  CHECK(inv.front().kind == ReflectionKind::Sign);
}

TEST_CASE("length agrees with breadth-first search") {
  for (int n = 1; n <= 4; ++n) {
    auto const dist = oracle::bfs_lengths(n);
    REQUIRE(dist.size() == oracle::whole_group(n).size());
    for (auto const& [p, d] : dist) {
      CHECK(coxeter_length(p) == d);
      CHECK(inversion_set(p).size() == static_cast<std::size_t>(d));
      CHECK(static_cast<std::size_t>(inversion_mask(p).count())
            == static_cast<std::size_t>(d));
    }
  }
}

TEST_CASE("generators are involutions and change length by one") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& p : oracle::whole_group(n)) {
      for (int s = 0; s < n; ++s) {
        Generator const g{s};
        CHECK(mul_gen_left(g, mul_gen_left(g, p)) == p);
        CHECK(mul_gen_right(mul_gen_right(p, g), g) == p);
        CHECK(std::abs(coxeter_length(mul_gen_right(p, g)) - coxeter_length(p))
              == 1);
        CHECK(std::abs(coxeter_length(mul_gen_left(g, p)) - coxeter_length(p))
              == 1);
      }
    }
  }
}

TEST_CASE("right descents agree with the length oracle") {
  std::mt19937 rng(7);
  CHECK_FALSE(has_right_descent(SignedPermutation::identity(3), Generator{1}));
  CHECK(has_right_descent(perm({-1, 2}), Generator{0}));
  CHECK(has_right_descent(perm({-1, -2}), Generator{1}));
  CHECK(has_right_descent(perm({-1, 2}), Generator{1}) == false);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const p = oracle::random_element(5, rng);
    Generator const s{static_cast<int>(rng() % 5)};
    bool const by_length = coxeter_length(mul_gen_right(p, s)) < coxeter_length(p);
    CHECK(has_right_descent(p, s) == by_length);
  }
  CHECK_THROWS_AS(has_right_descent(perm({1, 2}), Generator{2}), DomainError);
}

TEST_CASE("right multiplication by an inversion shortens") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& p : oracle::whole_group(n)) {
      for (auto const& t : all_reflections(n)) {
        bool const shorter =
            coxeter_length(mul_reflection_right(p, t)) < coxeter_length(p);
        CHECK(is_inversion(p, t) == shorter);
      }
    }
  }
}

TEST_CASE("cover inversions count lower covers in the weak order") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& p : oracle::whole_group(n)) {
      auto const cov = cover_inversions(p);
      auto const inv = as_set(inversion_set(p));
      int lower = 0;
      for (int s = 0; s < n; ++s) {
        if (coxeter_length(mul_gen_left(Generator{s}, p)) < coxeter_length(p)) {
          ++lower;
        }
      }
      CHECK(cov.size() == static_cast<std::size_t>(lower));
      for (auto const& t : cov) {
        CHECK(inv.count(t) == 1);
        int const a = t.i;
        int const b = t(a);
        auto const q = mul_reflection_right(p, t);
        CHECK(mul_reflection_left(Reflection::exchanging(p(a), p(b)), p) == q);
        CHECK(coxeter_length(q) == coxeter_length(p) - 1);
        // removing a cover inversion removes exactly t
        auto const smaller = as_set(inversion_set(q));
        std::set<Reflection> expected = inv;
        expected.erase(t);
        CHECK(smaller == expected);
      }
    }
  }
}

TEST_CASE("weak order is a partial order") {
  auto const e3 = SignedPermutation::identity(3);
  CHECK_FALSE(weak_leq(perm({-1, 2}), perm({2, 1})));
  CHECK_THROWS_AS(weak_leq(e3, SignedPermutation::identity(2)), DomainError);
  for (int n = 1; n <= 3; ++n) {
    auto const g = oracle::whole_group(n);
    for (auto const& u : g) {
      CHECK(weak_leq(SignedPermutation::identity(n), u));
      CHECK(weak_leq(u, u));
      for (auto const& v : g) {
        if (u != v && weak_leq(u, v)) CHECK_FALSE(weak_leq(v, u));
        if (!weak_leq(u, v)) continue;
        for (auto const& w : g) {
          if (weak_leq(v, w)) CHECK(weak_leq(u, w));
        }
      }
    }
  }
}

TEST_CASE("group operations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto const a = oracle::random_element(6, rng);
    auto const b = oracle::random_element(6, rng);
    for (int x = -6; x <= 6; ++x) {
      if (x == 0) continue;
      CHECK(compose(a, b)(x) == a(b(x)));
    }
    CHECK(compose(a, inverse(a)) == SignedPermutation::identity(6));
    CHECK(coxeter_length(inverse(a)) == coxeter_length(a));
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_signed_permutation("-2,-1,5,3,4") == perm({-2, -1, 5, 3, 4}));
  CHECK(parse_signed_permutation("1,2,3") == SignedPermutation::identity(3));
  CHECK(parse_signed_permutation(" -3,1,-2") == perm({-3, 1, -2}));
  CHECK(parse_signed_permutation("[-3, 1, -2]") == perm({-3, 1, -2}));
  CHECK(parse_signed_permutation("-3 1 -2") == perm({-3, 1, -2}));
  CHECK_THROWS_AS(parse_signed_permutation("1,1,2"), NotAPermutation);
  CHECK_THROWS_AS(parse_signed_permutation("1,0,2"), NotAPermutation);
  CHECK_THROWS_AS(parse_signed_permutation("1,4,2"), NotAPermutation);
  CHECK_THROWS_AS(parse_signed_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("1,x"), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("1,2-"), ParseError);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto const p = oracle::random_element(1 + trial % 12, rng);
    CHECK(parse_signed_permutation(to_string(p)) == p);
  }
  CHECK(to_string(perm({-3, 2, 1})) == "[-3,2,1]");
}
