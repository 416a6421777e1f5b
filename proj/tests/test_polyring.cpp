#include <doctest.h>

#include "support.hpp"

using namespace nhtest;

namespace {
Polynomial alpha(const CoxeterSystem& sys, int s) { return Polynomial::variable(sys, s); }
}  // namespace

TEST_CASE("ring operation basics") {
  CoxeterSystem a2 = make_A2();
  Polynomial f = alpha(a2, 0) * alpha(a2, 1) + Polynomial::constant(a2, 3);
  CHECK(f + Polynomial::zero(a2) == f);
  CHECK(alpha(a2, 0) * alpha(a2, 1) == alpha(a2, 1) * alpha(a2, 0));
  Polynomial lhs = (alpha(a2, 0) + alpha(a2, 1)) * (alpha(a2, 0) + alpha(a2, 1));
  Polynomial rhs = alpha(a2, 0) * alpha(a2, 0) +
                   alpha(a2, 0) * alpha(a2, 1).scaled(2) + alpha(a2, 1) * alpha(a2, 1);
  CHECK(lhs == rhs);
}

TEST_CASE("generator action on the simple roots") {
  CoxeterSystem a2 = make_A2();
  CHECK(act(0, alpha(a2, 0)) == -alpha(a2, 0));
  CHECK(act(0, alpha(a2, 1)) == alpha(a2, 1) + alpha(a2, 0));
  // with <alpha_t^vee, alpha_s> = -2: t(alpha_s) = alpha_s + 2 alpha_t
  CoxeterSystem b2 = make_B2();
  CHECK(act(1, alpha(b2, 0)) == alpha(b2, 0) + alpha(b2, 1).scaled(2));
  CHECK(act(0, alpha(b2, 1)) == alpha(b2, 1) + alpha(b2, 0));
}

TEST_CASE("the action is an involutive ring automorphism") {
  std::mt19937 rng(11);
  for (const CoxeterSystem& sys : {make_A2(), make_B2(), make_G2(), make_A3()}) {
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial f = random_polynomial(rng, sys);
      Polynomial g = random_polynomial(rng, sys);
      int s = trial % sys.rank();
      CHECK(act(s, act(s, f)) == f);
      CHECK(act(s, f * g) == act(s, f) * act(s, g));
      CHECK(act(s, f + g) == act(s, f) + act(s, g));
    }
  }
}

TEST_CASE("apply matches iterated generator actions") {
  std::mt19937 rng(12);
  CoxeterSystem b2 = make_B2();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> word = random_word(rng, 2, trial % 5);
    Polynomial f = random_polynomial(rng, b2);
    Polynomial stepwise = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) stepwise = act(*it, stepwise);
    CHECK(apply(b2.element_from_word(word), f) == stepwise);
  }
}

TEST_CASE("Demazure operator on generators and invariants") {
  CoxeterSystem a2 = make_A2();
  CHECK(demazure(0, alpha(a2, 0)) == Polynomial::constant(a2, 2));
  CHECK(demazure(0, alpha(a2, 1)) == Polynomial::constant(a2, -1));  // <a_t, a_s^vee>
  CHECK(demazure(0, Polynomial::constant(a2, 1)).is_zero());
  CHECK(demazure(0, alpha(a2, 0) * alpha(a2, 0)).is_zero());  // s-invariant
  CoxeterSystem b2 = make_B2();
  CHECK(demazure(0, alpha(b2, 1)) == Polynomial::constant(b2, -1));
  CHECK(demazure(1, alpha(b2, 0)) == Polynomial::constant(b2, -2));
}

TEST_CASE("Demazure operator identities on random polynomials") {
  std::mt19937 rng(13);
  for (const CoxeterSystem& sys : {make_A2(), make_B2(), make_G2(), make_A3()}) {
    for (int trial = 0; trial < 25; ++trial) {
      Polynomial f = random_polynomial(rng, sys);
      Polynomial g = random_polynomial(rng, sys);
      int s = trial % sys.rank();
      CHECK(demazure(s, demazure(s, f)).is_zero());
      // twisted Leibniz
      CHECK(demazure(s, f * g) == demazure(s, f) * g + act(s, f) * demazure(s, g));
      CHECK(demazure(s, act(s, f)) == -demazure(s, f));
      CHECK(act(s, f) == f - alpha(sys, s) * demazure(s, f));
    }
  }
}

TEST_CASE("Demazure operators satisfy the braid relations") {
  std::mt19937 rng(14);
  for (const CoxeterSystem& sys : {make_A1xA1(), make_A2(), make_B2(), make_G2()}) {
    unsigned m = sys.coxeter_order(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial f = random_polynomial(rng, sys, 4, 4);
      Polynomial left = f, right = f;
      for (unsigned i = 0; i < m; ++i) {
        left = demazure(i % 2 == 0 ? 0 : 1, left);
        right = demazure(i % 2 == 0 ? 1 : 0, right);
      }
      CHECK(left == right);
    }
  }
}

TEST_CASE("polynomials of different systems do not mix") {
  CoxeterSystem a = make_A2(), b = make_B2();
  bool caught = false;
  try {
    (void)(Polynomial::variable(a, 0) + Polynomial::variable(b, 0));
  } catch (const Error& e) {
    caught = true;
    CHECK(e.code() == ErrorCode::SystemMismatch);
  }
  CHECK(caught);
}

TEST_CASE("rendering is deterministic graded-lex") {
  CoxeterSystem a2 = make_A2();
  Polynomial f = alpha(a2, 0) * alpha(a2, 0) * alpha(a2, 1) - Polynomial::constant(a2, 2);
  CHECK(f.str() == "a_s^2*a_t - 2");
  CHECK(Polynomial::zero(a2).str() == "0");
  CHECK((-alpha(a2, 0) * alpha(a2, 1) + Polynomial::constant(a2, 2)).str() == "-a_s*a_t + 2");
  CHECK((alpha(a2, 1) + alpha(a2, 0)).str() == "a_s + a_t");
  CHECK(alpha(a2, 0).scaled(-3).str() == "-3*a_s");
}

TEST_CASE("graded degree doubles the exponent sum") {
  CoxeterSystem a2 = make_A2();
  CHECK(alpha(a2, 0).graded_degree() == 2);
  CHECK((alpha(a2, 0) * alpha(a2, 1)).graded_degree() == 4);
  CHECK(Polynomial::constant(a2, 5).graded_degree() == 0);
  CHECK(Polynomial::zero(a2).graded_degree() == -1);
  CHECK((alpha(a2, 0) + Polynomial::constant(a2, 1)).is_homogeneous() == false);
  CHECK((alpha(a2, 0) + alpha(a2, 1)).is_homogeneous());
}
