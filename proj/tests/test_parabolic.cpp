#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace tamari_b;
using oracle::comp;
using oracle::perm;

namespace {

// s_hi s_{hi-1} ... s_lo for each (hi, lo).
Word runs(std::vector<std::pair<int, int>> const& parts) {
  Word w;
  for (auto [hi, lo] : parts) {
    for (int s = hi; s >= lo; --s) w.letters.push_back(Generator{s});
  }
  return w;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("compositions") {
  auto const one = all_compositions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "1");
  CHECK(one[1].to_string() == "0,1");
  std::set<std::string> two;
  for (auto const& a : all_compositions(2)) two.insert(a.to_string());
  CHECK(two == std::set<std::string>{"2", "1,1", "0,2", "0,1,1"});
  for (int n = 1; n <= 8; ++n) {
    auto const all = all_compositions(n);
    std::set<std::string> names;
    for (auto const& a : all) {
      CHECK(a.degree() == n);
      names.insert(a.to_string());
    }
    CHECK(all.size() == (1u << n));
    CHECK(names.size() == all.size());
  }
  CHECK_THROWS_AS(all_compositions(0), DomainError);

  auto const a = comp("0,3,1,2,1");
  CHECK(a.split());
  CHECK(a.degree() == 7);
  CHECK(a.region_of(3) == 1);
  CHECK(a.region_of(4) == 2);
  CHECK(comp("4,2,2").join());
  CHECK(comp("4,2,2").region_of(1) == 1);
  CHECK_THROWS_AS(a.region_of(8), DomainError);
  CHECK_THROWS_AS(comp("1,0,2"), ParseError);
  CHECK_THROWS_AS(comp("0"), ParseError);
  CHECK_THROWS_AS(comp("a,1"), ParseError);
  CHECK_THROWS_AS(comp("7,6"), ParseError);
  CHECK(comp(" 0, 2, 1").to_string() == "0,2,1");
}

TEST_CASE("quotient membership") {
  CHECK(is_member(comp("0,1,2"), perm({-1, 2, 3})));
  CHECK_FALSE(is_member(comp("1,2"), perm({-1, 2, 3})));
  CHECK(is_member(comp("0,3,1,2,1"), perm({-3, -2, -1, -4, -6, -5, -7})));
  CHECK_THROWS_AS(is_member(comp("0,1,2"), perm({1, 2})), DomainError);
  CHECK_THROWS_AS(require_member(comp("1,2"), perm({-1, 2, 3})), DomainError);
}

TEST_CASE("quotient enumeration") {
  CHECK(enumerate_quotient(comp("0,1,2")).size() == 24);
  CHECK(enumerate_quotient(comp("1,2")).size() == 12);
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_quotient(TypeBComposition::full_group(n)).size()
          == (1u << n) * factorial(n));
  }
  EnumerationOptions tight;
  tight.cap = 100;
  try {
    enumerate_quotient(TypeBComposition::full_group(4), tight);
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& e) {
    CHECK(e.required() == 384);
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("direct enumeration matches the descent filter") {
  for (auto const& a : oracle::compositions_up_to(4)) {
    INFO(a.to_string());
    CHECK(enumerate_quotient(a) == oracle::filtered_quotient(a));
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  EnumerationOptions par;
  par.threads = 4;
  for (auto const& a : all_compositions(5)) {
    CHECK(enumerate_quotient(a, par) == enumerate_quotient(a));
  }
}

TEST_CASE("streaming enumeration visits each element once") {
  auto const a = comp("0,2,1,2");
  std::vector<SignedPermutation> seen;
  for_each_quotient_element(a, [&](SignedPermutation const& p) { seen.push_back(p); });
  std::sort(seen.begin(), seen.end());
  CHECK(seen == enumerate_quotient(a));
}

TEST_CASE("coset decomposition") {
  for (auto const& a : oracle::compositions_up_to(5)) {
    INFO(a.to_string());
    auto const q = enumerate_quotient(a).size();
    CHECK(q * oracle::subgroup_order(a) == (1u << a.degree()) * factorial(a.degree()));
    CHECK(q == quotient_size(a));
  }
}

TEST_CASE("parabolic longest elements") {
  CHECK(longest_element(comp("0,3,1,2,1")) == perm({-3, -2, -1, -4, -6, -5, -7}));
  CHECK(longest_element(comp("4,2,2")) == perm({1, 2, 3, 4, -6, -5, -8, -7}));
  CHECK(longest_element(TypeBComposition::full_group(4)) == perm({-1, -2, -3, -4}));
  CHECK(parabolic_length(comp("0,3,1,2,1")) == 45);
  CHECK(parabolic_length(comp("4,2,2")) == 46);
  for (int n = 1; n <= 6; ++n) {
    CHECK(parabolic_length(TypeBComposition::full_group(n)) == n * n);
  }
  for (auto const& a : oracle::compositions_up_to(5)) {
    INFO(a.to_string());
    auto const w = longest_element(a);
    auto const e = SignedPermutation::identity(a.degree());
    CHECK(is_member(a, w));
    CHECK(coxeter_length(w) == parabolic_length(a));
    auto const inv_w = inversion_mask(w);
    for (auto const& p : enumerate_quotient(a)) {
      CHECK(weak_leq(p, w));
      CHECK(weak_leq(e, p));
      CHECK((inversion_mask(p) & ~inv_w).none());
    }
  }
}

TEST_CASE("quotient is the interval below the longest element") {
  for (auto const& a : oracle::compositions_up_to(4)) {
    INFO(a.to_string());
    auto const w = longest_element(a);
    std::vector<SignedPermutation> interval;
    for (auto const& p : oracle::whole_group(a.degree())) {
      if (weak_leq(p, w)) interval.push_back(p);
    }
    CHECK(interval == enumerate_quotient(a));
  }
}

TEST_CASE("skew shapes") {
  auto const t = skew_shape(comp("0,3,1,2,1"));
  CHECK(t.mu == std::vector<int>{7, 7, 7, 4, 3, 3, 1});
  CHECK(t.lambda == std::vector<int>{14, 13, 12, 11, 10, 9, 8});
  auto const u = skew_shape(comp("4,2,2"));
  CHECK(u.mu == std::vector<int>{8, 8, 8, 8, 4, 4, 2, 2});
  CHECK(u.lambda == std::vector<int>{12, 12, 12, 12, 12, 11, 10, 9});
  CHECK(skew_shape(TypeBComposition::full_group(4)).cell_count() == 16);
  for (auto const& a : oracle::compositions_up_to(6)) {
    auto const tab = inversion_tableau(a);
    CHECK(tab.cell_count() == static_cast<std::size_t>(parabolic_length(a)));
    for (int k = 1; k <= a.degree(); ++k) {
      CHECK(tab.row(k).first_column == tab.mu[k - 1] + 1);
      CHECK(tab.row(k).last_column == tab.lambda[k - 1]);
    }
  }
  CHECK(t.dump().find("[[1]]") != std::string::npos);
}

TEST_CASE("sorting words of parabolic longest elements") {
  CHECK(sorting_word_longest(comp("0,3,1,2,1"))
        == runs({{6, 0}, {5, 0}, {6, 0}, {6, 0}, {4, 0}, {5, 0}, {6, 0}}));
  CHECK(sorting_word_longest(comp("4,2,2"))
        == runs({{6, 0}, {7, 0}, {6, 0}, {7, 0}, {4, 1}, {5, 2}, {6, 3}, {7, 4}}));
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> r(n, {n - 1, 0});
    CHECK(sorting_word_longest(TypeBComposition::full_group(n)) == runs(r));
  }
  CHECK(to_string(runs({{2, 0}})) == "s2 s1 s0");
}

TEST_CASE("c-sorting words") {
  CHECK(c_sorting_word(SignedPermutation::identity(3)).empty());
  CHECK(c_sorting_word(perm({-3, -2, -1, -4, -6, -5, -7}))
        == runs({{6, 0}, {5, 0}, {6, 0}, {6, 0}, {4, 0}, {5, 0}, {6, 0}}));
  CHECK(c_sorting_word(perm({-1, -2, -3, -4}))
        == runs({{3, 0}, {3, 0}, {3, 0}, {3, 0}}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto const p = oracle::random_element(1 + trial % 6, rng);
    auto const w = c_sorting_word(p);
    CHECK(evaluate(w, p.degree()) == p);
    CHECK(is_reduced(w, p.degree()));
  }
}

TEST_CASE("sorting words evaluate to the longest element") {
  for (auto const& a : oracle::compositions_up_to(5)) {
    INFO(a.to_string());
    auto const w = sorting_word_longest(a);
    CHECK(w.size() == static_cast<std::size_t>(parabolic_length(a)));
    CHECK(evaluate(w, a.degree()) == longest_element(a));
    CHECK(is_reduced(w, a.degree()));
    CHECK(c_sorting_word(longest_element(a)) == w);
  }
}

TEST_CASE("inversion orders") {
  CHECK(inversion_order(comp("0,1")) == std::vector<Reflection>{Reflection::sign(1)});
  CHECK(inversion_order(comp("0,1,1"))
        == std::vector<Reflection>{Reflection::sign(1), Reflection::neg(1, 2),
                                   Reflection::sign(2), Reflection::pos(1, 2)});
  std::vector<Reflection> const n4{
      Reflection::sign(1),   Reflection::neg(1, 2), Reflection::neg(1, 3),
      Reflection::neg(1, 4), Reflection::sign(2),   Reflection::neg(2, 3),
      Reflection::neg(2, 4), Reflection::pos(1, 2), Reflection::sign(3),
      Reflection::neg(3, 4), Reflection::pos(1, 3), Reflection::pos(2, 3),
      Reflection::sign(4),   Reflection::pos(1, 4), Reflection::pos(2, 4),
      Reflection::pos(3, 4)};
  CHECK(inversion_order(TypeBComposition::full_group(4)) == n4);
  for (auto const& a : oracle::compositions_up_to(5)) {
    INFO(a.to_string());
    auto const order = inversion_order(a);
    CHECK(order == inversion_order_from_word(sorting_word_longest(a), a.degree()));
    std::set<Reflection> const as_set(order.begin(), order.end());
    CHECK(as_set.size() == order.size());
    auto const inv = inversion_set(longest_element(a));
    CHECK(as_set == std::set<Reflection>(inv.begin(), inv.end()));
  }
}
