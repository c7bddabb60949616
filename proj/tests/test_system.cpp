#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace lpkit;
using namespace lpkit::test;

namespace {

template <class S>
void check_idempotents(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec) {
  auto [A, As] = realize_matrices(sys);
  const Index n = A.rows();
  Matrix<S> sum = zero_matrix<S>(n, n, sys.field);
  for (int i = 0; i < spec.size(); ++i) {
    CHECK(rank(spec.E[i]) == 1);
    CHECK(A * spec.E[i] == spec.theta[i] * spec.E[i]);
    for (int j = 0; j < spec.size(); ++j) {
      Matrix<S> prod = spec.E[i] * spec.E[j];
      if (i == j)
        CHECK(prod == spec.E[i]);
      else
        CHECK(is_zero(prod));
    }
    sum += spec.E[i];
  }
  CHECK(sum == identity_matrix<S>(n, sys.field));
}

}  // namespace

TEST_CASE("validation reports every violation") {
  auto sys = make<Rational>(QQ, {0, 0, 0}, {2, 0}, {0, 2}, {2, 0, -2});
  auto report = validate_system(sys);
  CHECK_FALSE(report.ok());
  CHECK(report.violations.size() == 2);
  CHECK(report.str().find("superdiagonal zero at 1") != std::string::npos);
  CHECK(report.str().find("subdiagonal zero at 1") != std::string::npos);

  auto short_b = make<Rational>(QQ, {0, 0, 0}, {2}, {1, 2}, {2, 0, -2});
  CHECK(validate_system(short_b).str().find("length") != std::string::npos);
  try {
    realize_matrices(short_b);
    FAIL("invalid system realized");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSystem);
  }
}

TEST_CASE("K2 realizes the expected matrices and spectrum") {
  auto sys = k2();
  auto [A, As] = realize_matrices(sys);
  CHECK(A(0, 1) == q(2));
  CHECK(A(1, 0) == q(1));
  CHECK(A(2, 1) == q(2));
  CHECK(A(1, 2) == q(1));
  CHECK(As(2, 2) == q(-2));
  auto spec = compute_spectrum(sys);
  CHECK(spec.theta == rats({-2, 0, 2}));
  check_idempotents(sys, spec);
}

TEST_CASE("eigenvalue hints") {
  auto sys = k3();
  auto spec = compute_spectrum(sys, std::optional(rats({3, 1, -1, -3})));
  CHECK(spec.theta == rats({3, 1, -1, -3}));
  auto expect_kind = [&](std::vector<Rational> hint, ErrorKind kind) {
    try {
      compute_spectrum(sys, std::optional(hint));
      FAIL("bad hint accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == kind);
    }
  };
  expect_kind(rats({3, 1, -1}), ErrorKind::HintInvalid);
  expect_kind(rats({3, 1, -1, 2}), ErrorKind::HintInvalid);
  expect_kind(rats({3, 1, 1, -3}), ErrorKind::HintInvalid);
}

TEST_CASE("multiplicity-free failures") {
  auto rotation = make<Rational>(QQ, {0, 0}, {1}, {-1}, {1, -1});
  CHECK_THROWS_AS(compute_spectrum(rotation), Error);
  // x^2 - 2x - 4 = (x - 1)^2 over GF(5).
  const auto F = FieldSpec::prime(5);
  auto doubled = make<ModP>(F, {0, 2}, {1}, {4}, {0, 1});
  try {
    compute_spectrum(doubled);
    FAIL("repeated eigenvalue accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultiplicityFree);
  }
}

TEST_CASE("idempotent axioms: Krawtchouk and random prime-field systems") {
  for (int d = 2; d <= 6; ++d) {
    auto [sys, theta] = gen_krawtchouk<Rational>(d, QQ);
    check_idempotents(sys, compute_spectrum(sys));
  }
  for (const auto& sys : random_corpus(40, 5, 1, 6, {101, 10007})) check_idempotents(sys, compute_spectrum(sys));
}

TEST_CASE("trace scalars") {
  auto sys = hamming<Rational>(3, 4);
  for (int i = 0; i <= 3; ++i) CHECK(intersection_a(sys, i) == q(2 * i));
  auto spec = k3_spectrum();
  CHECK(dual_a(k3(), spec, 0) == q(0));
  CHECK_THROWS_AS(intersection_a(sys, 4), Error);
  CHECK_THROWS_AS(dual_a(k3(), spec, -1), Error);
  CHECK(dual_idempotent(sys, 2)(2, 2) == q(1));
}

TEST_CASE("tridiagonal powers: zero pattern and corner products") {
  std::mt19937_64 rng(19);
  const std::uint64_t p = 10007;
  const auto F = FieldSpec::prime(p);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 6);
    auto sys = gen_random(d, F, rng());
    auto A = realize_matrices(sys).A;
    Matrix<ModP> power = identity_matrix<ModP>(d + 1, F);
    for (int r = 0; r <= d; ++r) {
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          if (r < std::abs(i - j)) CHECK(power(i, j).is_zero());
          if (r == j - i) {
            ModP prod = mod(1, p);
            for (int h = i; h < j; ++h) prod *= A(h, h + 1);
            CHECK(power(i, j) == prod);
            CHECK_FALSE(power(i, j).is_zero());
          }
          if (r == i - j) {
            ModP prod = mod(1, p);
            for (int h = j; h < i; ++h) prod *= A(h + 1, h);
            CHECK(power(i, j) == prod);
            CHECK_FALSE(power(i, j).is_zero());
          }
        }
      power = (power * A).eval();
    }
  }
}

TEST_CASE("antiautomorphism realized by diagonal conjugation") {
  std::mt19937_64 rng(23);
  const std::uint64_t p = 10007;
  const auto F = FieldSpec::prime(p);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    auto sys = gen_random(d, F, rng());
    auto spec = compute_spectrum(sys);
    auto [A, As] = realize_matrices(sys);
    CHECK(dagger(sys, A) == A);
    CHECK(dagger(sys, As) == As);
    for (int i = 0; i <= d; ++i) {
      CHECK(dagger(sys, dual_idempotent(sys, i)) == dual_idempotent(sys, i));
      CHECK(dagger(sys, spec.E[i]) == spec.E[i]);
    }
    auto X = random_matrix(d + 1, p, rng);
    auto Y = random_matrix(d + 1, p, rng);
    Matrix<ModP> XY = X * Y;
    CHECK(dagger(sys, XY) == dagger(sys, Y) * dagger(sys, X));
    CHECK(dagger(sys, dagger(sys, X)) == X);
    auto k = dagger_conjugator(sys);
    for (const auto& x : k) CHECK_FALSE(x.is_zero());
  }
}

TEST_CASE("reorder relabels eigenvalues with their idempotents") {
  auto sys = k2();
  auto spec = compute_spectrum(sys);
  auto r = reorder(spec, {2, 0, 1});
  CHECK(r.theta == rats({2, -2, 0}));
  CHECK(r.E[0] == spec.E[2]);
  CHECK_THROWS_AS(reorder(spec, {0, 1}), Error);
}
