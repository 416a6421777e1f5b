#include <doctest.h>

#include "support.hpp"

using namespace nhtest;

namespace {

#define CHECK_FAILS_WITH(expected_code, expr)        \
  do {                                               \
    bool caught_ = false;                            \
    try {                                            \
      (void)(expr);                                  \
    } catch (const Error& e_) {                      \
      caught_ = true;                                \
      CHECK(e_.code() == (expected_code));           \
    }                                                \
    CHECK_MESSAGE(caught_, "expected " #expr " to fail"); \
  } while (0)

Element from_word(const CoxeterSystem& sys, std::initializer_list<int> word) {
  std::vector<int> w(word);
  return sys.element_from_word(w);
}

}  // namespace

TEST_CASE("Coxeter orders follow the crystallographic rule") {
  CHECK(make_A2().coxeter_order(0, 1) == 3);
  CHECK(make_B2().coxeter_order(0, 1) == 4);
  CHECK(make_B2().coxeter_order(1, 0) == 4);
  CHECK(make_G2().coxeter_order(0, 1) == 6);
  CHECK(make_A1xA1().coxeter_order(0, 1) == 2);
  CHECK(make_A1aff().coxeter_order(0, 1) == kInfiniteOrder);
  CHECK(make_A2().coxeter_order(0, 0) == 1);
}

TEST_CASE("invalid Cartan matrices are rejected") {
  CHECK_FAILS_WITH(ErrorCode::DiagonalNotTwo, CoxeterSystem::create({"s"}, {{3}}));
  CHECK_FAILS_WITH(ErrorCode::PositiveOffDiagonal,
                   CoxeterSystem::create({"s", "t"}, {{2, 1}, {-1, 2}}));
  CHECK_FAILS_WITH(ErrorCode::AsymmetricZero,
                   CoxeterSystem::create({"s", "t"}, {{2, 0}, {-1, 2}}));
}

TEST_CASE("Coxeter matrix overrides are checked against the action") {
  // matching override is fine
  std::vector<std::vector<unsigned>> ok = {{1, 3}, {3, 1}};
  CoxeterSystem sys = CoxeterSystem::create({"s", "t"}, {{2, -1}, {-1, 2}}, ok);
  CHECK(sys.coxeter_order(0, 1) == 3);

  std::vector<std::vector<unsigned>> wrong = {{1, 4}, {4, 1}};
  CHECK_FAILS_WITH(ErrorCode::OrderMismatch,
                   CoxeterSystem::create({"s", "t"}, {{2, -1}, {-1, 2}}, wrong));

  std::vector<std::vector<unsigned>> inf = {{1, kInfiniteOrder}, {kInfiniteOrder, 1}};
  CHECK_FAILS_WITH(ErrorCode::OrderMismatch,
                   CoxeterSystem::create({"s", "t"}, {{2, -1}, {-1, 2}}, inf));
  // infinity override is consistent when p >= 4
  CoxeterSystem aff = CoxeterSystem::create({"s", "t"}, {{2, -2}, {-2, 2}}, inf);
  CHECK(aff.coxeter_order(0, 1) == kInfiniteOrder);
}

TEST_CASE("element_from_word basics") {
  CoxeterSystem a2 = make_A2();
  CHECK(from_word(a2, {}) == a2.identity());
  CHECK(from_word(a2, {}).length() == 0);
  CHECK(from_word(a2, {0, 1, 0}).length() == 3);
  CHECK(from_word(a2, {0, 0}) == a2.identity());
  std::vector<int> bad{0, 7};
  CHECK_FAILS_WITH(ErrorCode::BadGenerator, a2.element_from_word(bad));
}

TEST_CASE("length of commuting products in D4") {
  CoxeterSystem d4 = make_D4();
  int s = d4.generator_index("s"), u = d4.generator_index("u"), v = d4.generator_index("v");
  CHECK(from_word(d4, {s, u, v}).length() == 3);
  CHECK(from_word(d4, {s, u, v}) == from_word(d4, {v, u, s}));
}

TEST_CASE("right descents agree with length drops on all of A2") {
  CoxeterSystem a2 = make_A2();
  CHECK_FALSE(a2.identity().right_descent(0));
  CHECK(a2.generator(0).right_descent(0));
  Element st = from_word(a2, {0, 1});
  CHECK_FALSE(st.right_descent(0));
  CHECK(st.right_descent(1));
  for (const Element& w : full_group(a2))
    for (int s = 0; s < 2; ++s)
      CHECK(w.right_descent(s) == (w.times(s).length() < w.length()));
}

TEST_CASE("Bruhat order examples and axioms") {
  CoxeterSystem a2 = make_A2();
  Element sts = from_word(a2, {0, 1, 0});
  CHECK(bruhat_leq(a2.identity(), sts));
  CHECK(bruhat_leq(a2.generator(0), sts));
  Element st = from_word(a2, {0, 1});
  Element ts = from_word(a2, {1, 0});
  CHECK_FALSE(bruhat_leq(st, ts));
  CHECK_FALSE(bruhat_leq(ts, st));

  for (const CoxeterSystem& sys : {make_A2(), make_B2(), make_A3()}) {
    std::vector<Element> all = full_group(sys);
    for (const Element& x : all) {
      CHECK(bruhat_leq(x, x));
      for (const Element& y : all) {
        CHECK(bruhat_leq(x, y) == bruhat_leq_subwords(x, y));
        if (x != y && bruhat_leq(x, y)) CHECK_FALSE(bruhat_leq(y, x));
        for (const Element& z : all)
          if (bruhat_leq(x, y) && bruhat_leq(y, z)) CHECK(bruhat_leq(x, z));
      }
    }
  }
}

TEST_CASE("demazure star absorbs descents") {
  CoxeterSystem a2 = make_A2();
  Element s = a2.generator(0);
  CHECK(demazure_star(s, 0) == s);
  CHECK(demazure_star(a2.identity(), 0) == s);
  Element sts = from_word(a2, {0, 1, 0});
  CHECK(demazure_star(sts, 1) == sts);
  CHECK(demazure_star(sts, 0) == sts);
}

TEST_CASE("demazure star is associative on all A2 triples") {
  CoxeterSystem a2 = make_A2();
  std::vector<Element> all = full_group(a2);
  for (const Element& x : all)
    for (const Element& y : all)
      for (const Element& z : all)
        CHECK(demazure_star(demazure_star(x, y), z) == demazure_star(x, demazure_star(y, z)));
}

TEST_CASE("every subexpression endpoint is below the star product") {
  for (const CoxeterSystem& sys : {make_A2(), make_B2()}) {
    for (int len = 0; len <= 6; ++len)
      for (const auto& word : all_words(2, len)) {
        Expression w = make_expression(sys, word);
        Element star = sys.demazure_product(word);
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
          Bits bits(len, 0);
          for (int i = 0; i < len; ++i) bits[i] = (mask >> i) & 1;
          CHECK(bruhat_leq(decorate(w, bits).endpoint, star));
        }
      }
  }
}

TEST_CASE("demazure product of a reduced word is the ordinary product") {
  CoxeterSystem b2 = make_B2();
  std::vector<int> word{0, 1, 0, 1};
  CHECK(b2.demazure_product(word) == b2.element_from_word(word));
  CHECK(b2.demazure_product(word).length() == 4);
}

TEST_CASE("demazure product is the Bruhat-maximal subexpression endpoint") {
  CoxeterSystem a2 = make_A2();
  std::vector<int> word{0, 1, 0, 1};
  Element star = a2.demazure_product(word);
  CHECK(star == from_word(a2, {0, 1, 0}));
  Expression w = make_expression(a2, word);
  bool attained = false;
  for (unsigned long mask = 0; mask < 16; ++mask) {
    Bits bits(4);
    for (int i = 0; i < 4; ++i) bits[i] = (mask >> i) & 1;
    Element endpoint = decorate(w, bits).endpoint;
    CHECK(bruhat_leq(endpoint, star));
    attained = attained || endpoint == star;
  }
  CHECK(attained);
}

TEST_CASE("every subexpression endpoint stays below the star product in D4") {
  CoxeterSystem d4 = make_D4();
  NamedSystem ns{"D4", d4};
  std::vector<int> word = parse_word(d4, "s u v t s u v");
  Element star = d4.demazure_product(word);
  CHECK(star.length() == 7);  // this word is reduced
  CHECK(star == d4.element_from_word(word));
  Expression w = make_expression(d4, word);
  for (unsigned long mask = 0; mask < 128; ++mask) {
    Bits bits(7);
    for (int i = 0; i < 7; ++i) bits[i] = (mask >> i) & 1;
    CHECK(bruhat_leq(decorate(w, bits).endpoint, star));
  }
}

TEST_CASE("canonical words are reduced, deterministic and round-trip") {
  CoxeterSystem a2 = make_A2();
  CHECK(canonical_word(a2.identity()).empty());
  CHECK(canonical_word(a2.generator(1)) == std::vector<int>{1});
  CHECK(canonical_word(from_word(a2, {0, 1, 0})) == std::vector<int>({0, 1, 0}));
  CHECK(canonical_word(from_word(a2, {1, 0, 1})) == std::vector<int>({0, 1, 0}));

  std::mt19937 rng(20240817);
  for (const CoxeterSystem& sys : {make_A2(), make_B2(), make_A3(), make_D4()}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word = random_word(rng, sys.rank(), 1 + trial % 12);
      Element w = sys.element_from_word(word);
      std::vector<int> cw = canonical_word(w);
      CHECK(sys.element_from_word(cw) == w);
      CHECK(cw.size() == w.length());
    }
  }
}

TEST_CASE("braid relations hold on action matrices") {
  auto braid_check = [](const CoxeterSystem& sys) {
    unsigned m = sys.coxeter_order(0, 1);
    REQUIRE(m != kInfiniteOrder);
    std::vector<int> left, right;
    for (unsigned i = 0; i < m; ++i) {
      left.push_back(i % 2 == 0 ? 0 : 1);
      right.push_back(i % 2 == 0 ? 1 : 0);
    }
    CHECK(sys.element_from_word(left) == sys.element_from_word(right));
    CHECK(sys.element_from_word(left).length() == m);
  };
  braid_check(make_A1xA1());
  braid_check(make_A2());
  braid_check(make_B2());
  braid_check(make_G2());
}

TEST_CASE("word length bounds element length") {
  std::mt19937 rng(7);
  for (const CoxeterSystem& sys : {make_A2(), make_B2(), make_A3(), make_D4(), make_A1aff()}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> word = random_word(rng, sys.rank(), 1 + trial % 12);
      CHECK(sys.element_from_word(word).length() <= word.size());
    }
  }
}

TEST_CASE("affine systems produce arbitrarily long elements") {
  CoxeterSystem aff = make_A1aff();
  std::vector<int> word;
  for (int i = 0; i < 14; ++i) word.push_back(i % 2);
  CHECK(aff.element_from_word(word).length() == 14);
}

TEST_CASE("elements of different systems do not mix") {
  CoxeterSystem a = make_A2(), b = make_A2();
  CHECK_FAILS_WITH(ErrorCode::SystemMismatch, bruhat_leq(a.identity(), b.identity()));
}
