#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace lpkit;
using namespace lpkit::test;

namespace {

std::vector<std::tuple<std::string, std::string, std::string>> expected_fixtures() {
  std::ifstream in(data_path("expected.txt"));
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string file, verdict, beta;
    is >> file >> verdict >> beta;
    out.emplace_back(file, verdict, beta);
  }
  return out;
}

template <class S>
bool direct(const TridiagonalSystem<S>& sys) {
  return is_q_polynomial(sys, compute_spectrum(sys), Route::Direct).qpoly;
}

template <class S>
bool theorem(const TridiagonalSystem<S>& sys) {
  return is_q_polynomial(sys, compute_spectrum(sys), Route::Theorem).qpoly;
}

// Q-polynomial prime-field systems: Krawtchouk shapes moved by random
// rescalings and affine maps, which keep the property.
std::vector<TridiagonalSystem<ModP>> leonard_corpus(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TridiagonalSystem<ModP>> out;
  const std::uint64_t p = 10007;
  const auto F = FieldSpec::prime(p);
  auto draw = [&] { return ModP(static_cast<std::int64_t>(1 + rng() % (p - 1)), p); };
  for (int k = 0; k < count; ++k) {
    const int d = 3 + k % 4;
    TridiagonalSystem<ModP> sys = k % 3 == 0 ? hamming<ModP>(d, 3 + k % 5, F) : gen_krawtchouk<ModP>(d, F).first;
    std::vector<ModP> targets;
    for (int i = 0; i < d; ++i) targets.push_back(draw());
    sys = rescale_superdiagonal(sys, targets);
    out.push_back(affine_transform(sys, draw(), draw(), draw(), draw()));
  }
  return out;
}

}  // namespace

TEST_CASE("condition (ii) solution sets") {
  auto k3sol = solve_condition_ii(rats({3, 1, -1, -3}), QQ);
  REQUIRE(k3sol);
  CHECK(k3sol->dimension() == 0);
  CHECK(k3sol->particular(0) == q(2));
  CHECK(k3sol->particular(1) == q(0));

  auto d2 = solve_condition_ii(rats({2, 0, -2}), QQ);
  REQUIRE(d2);
  CHECK(d2->dimension() == 1);
  CHECK(d2->particular(1) == q(0));

  auto other = solve_condition_ii(rats({0, 1, 3, 8}), QQ);
  REQUIRE(other);
  CHECK(other->particular(0) == q(3));
  CHECK(other->particular(1) == q(0));

  CHECK_FALSE(solve_condition_ii(rats({0, 1, 3, 8, 1}), QQ));
}

TEST_CASE("extending the dual eigenvalues") {
  CHECK(extend_dual_eigenvalues(rats({3, 1, -1, -3}), q(2), q(0)) == rats({5, 3, 1, -1, -3, -5}));
  CHECK(extend_dual_eigenvalues(rats({4, 4, 4}), q(2), q(0)) == rats({4, 4, 4, 4, 4}));
  CHECK(extend_dual_eigenvalues(rats({1, 2}), q(0), q(0)) == rats({-2, 1, 2, -1}));
}

TEST_CASE("condition (iii) solution sets") {
  auto ext = rats({5, 3, 1, -1, -3, -5});
  auto sol = solve_condition_iii(k3(), ext);
  REQUIRE(sol);
  CHECK(sol->dimension() == 0);
  CHECK(is_zero(sol->particular));

  auto d1 = gen_krawtchouk<Rational>(1, QQ).first;
  auto d1sol = solve_condition_iii(d1, extend_dual_eigenvalues(d1.theta_star, q(2), q(0)));
  REQUIRE(d1sol);
  CHECK(d1sol->dimension() == 1);

  auto bumped = k3();
  bumped.a[2] = q(1);
  CHECK_FALSE(solve_condition_iii(bumped, ext));
}

TEST_CASE("delta star") {
  CHECK(compute_delta_star(rats({5, 3, 1, -1, -3, -5}), q(2), q(0)) == q(4));
  CHECK(compute_delta_star(rats({7, 7, 7, 7, 7}), q(2), q(0)) == q(0));
  try {
    compute_delta_star(rats({0, 1, 3, 8, 20}), q(2), q(0));
    FAIL("non-recurrent list accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConstant);
  }
}

TEST_CASE("AW2 identity on K3 and d = 1") {
  auto sys = k3();
  auto spec = k3_spectrum();
  auto w = find_witness(sys);
  REQUIRE(w);
  CHECK(w->beta == q(2));
  CHECK(w->delta_star == q(4));
  CHECK(verify_aw2(sys, spec, *w));
  auto bad = *w;
  bad.omega = q(1);
  CHECK_FALSE(verify_aw2(sys, spec, bad));

  auto d1 = gen_krawtchouk<Rational>(1, QQ).first;
  auto w1 = find_witness(d1);
  REQUIRE(w1);
  CHECK(verify_aw2(d1, compute_spectrum(d1), *w1));
}

TEST_CASE("Q-polynomial verdicts on small examples") {
  auto sys = k3();
  auto spec = k3_spectrum();
  auto dv = is_q_polynomial(sys, spec, Route::Direct);
  auto tv = is_q_polynomial(sys, spec, Route::Theorem);
  CHECK(dv.qpoly);
  CHECK(tv.qpoly);
  REQUIRE(tv.witness);
  CHECK(tv.witness->beta == q(2));
  CHECK(tv.witness->gamma_star == q(0));
  CHECK(tv.witness->gamma == q(0));
  CHECK(tv.witness->omega == q(0));
  CHECK(tv.witness->eta_star == q(0));
  CHECK(tv.witness->delta_star == q(4));

  auto dup = mutate_theta_star(k3(), 1, q(3));
  CHECK(direct(dup) == theorem(dup));
  CHECK_FALSE(theorem(dup));

  auto dup2 = mutate_theta_star(k3(), 2, q(3));
  CHECK(direct(dup2) == theorem(dup2));

  auto flat = make<Rational>(QQ, {0, 0, 0, 0}, {3, 2, 1}, {1, 2, 3}, {2, 2, 2, 2});
  CHECK_FALSE(direct(flat));

  auto noop = mutate_theta_star(k3(), 2, q(-1));
  CHECK(noop == k3());

  try {
    is_q_polynomial(k2(), compute_spectrum(k2()), Route::Theorem);
    FAIL("theorem route ran for d = 2");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RouteUnavailable);
  }
  CHECK(direct(k2()));
}

TEST_CASE("Leonard ordering") {
  auto sys = k3();
  auto spec = compute_spectrum(sys);
  CHECK(spec.theta == rats({-3, -1, 1, 3}));
  CHECK(leonard_ordering(sys, spec) == std::vector<int>{0, 1, 2, 3});
  auto flat = make<Rational>(QQ, {0, 0, 0, 0}, {3, 2, 1}, {1, 2, 3}, {2, 2, 2, 2});
  try {
    leonard_ordering(flat, compute_spectrum(flat));
    FAIL("non-path accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotQPolynomial);
  }
}

TEST_CASE("fixture instances from the independent oracle") {
  for (const auto& [file, verdict, beta] : expected_fixtures()) {
    CAPTURE(file);
    auto inst = read_instance_file(data_path(file));
    auto sys = to_system<Rational>(inst);
    auto spec = compute_spectrum(sys, theta_hint<Rational>(inst));
    auto dv = is_q_polynomial(sys, spec, Route::Direct);
    auto tv = is_q_polynomial(sys, spec, Route::Theorem);
    CHECK(dv.qpoly == (verdict == "yes"));
    CHECK(tv.qpoly == dv.qpoly);
    if (dv.qpoly) {
      REQUIRE(tv.witness);
      CHECK(tv.witness->beta == ScalarTraits<Rational>::parse(beta, QQ));
      CHECK(verify_aw2(sys, spec, *tv.witness));
    }
  }
}

TEST_CASE("Krawtchouk systems are Q-polynomial with beta 2") {
  for (int d = 3; d <= 7; ++d) {
    auto [sys, theta] = gen_krawtchouk<Rational>(d, QQ);
    auto spec = compute_spectrum(sys);
    for (auto route : {Route::Direct, Route::Theorem}) {
      auto v = is_q_polynomial(sys, spec, route);
      CHECK(v.qpoly);
      REQUIRE(v.witness);
      CHECK(v.witness->beta == q(2));
      CHECK(v.witness->gamma_star == q(0));
      CHECK(v.witness->gamma == q(0));
    }
  }
}

TEST_CASE("affine maps keep the verdict") {
  auto moved = affine_transform(k3(), q(2), q(0), q(3), q(1));
  CHECK(moved.theta_star == rats({10, 4, -2, -8}));
  CHECK(direct(moved));
  CHECK(theorem(moved));
  auto k2moved = affine_transform(k2(), q(1), q(5), q(1), q(0));
  CHECK(compute_spectrum(k2moved).theta == rats({3, 5, 7}));
  CHECK(affine_transform(k3(), q(1), q(0), q(1), q(0)) == k3());
  CHECK_THROWS_AS(affine_transform(k3(), q(0), q(0), q(1), q(0)), Error);
}

TEST_CASE("both routes agree, including mutated negatives") {
  int negatives = 0, positives = 0;
  std::mt19937_64 rng(73);
  std::vector<TridiagonalSystem<ModP>> corpus = leonard_corpus(24, 79);
  for (const auto& sys : random_corpus(20, 83, 3, 6, {101, 10007})) corpus.push_back(sys);
  const std::size_t base = corpus.size();
  for (std::size_t k = 0; k < base; ++k) {
    const auto& sys = corpus[k];
    const auto p = sys.field.modulus;
    int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(sys.d() + 1));
    corpus.push_back(mutate_theta_star(sys, idx, sys.theta_star[idx] + mod(1 + static_cast<long>(rng() % 50), p)));
  }
  for (const auto& sys : corpus) {
    const bool dq = direct(sys);
    CHECK(dq == theorem(sys));
    (dq ? positives : negatives)++;
  }
  CHECK(negatives >= 20);
  CHECK(positives >= 20);
}

TEST_CASE("eigenvalue recurrences along the Leonard ordering") {
  for (const auto& sys : leonard_corpus(20, 89)) {
    auto spec = compute_spectrum(sys);
    auto v = is_q_polynomial(sys, spec, Route::Direct);
    REQUIRE(v.qpoly);
    REQUIRE(v.witness);
    CHECK(verify_aw2(sys, spec, *v.witness));
    auto ordered = reorder(spec, *v.leonard_order);
    const auto& th = ordered.theta;
    const auto& ts = sys.theta_star;
    const auto& w = *v.witness;
    const int d = sys.d();
    for (int i = 1; i < d; ++i) CHECK(th[i - 1] - w.beta * th[i] + th[i + 1] == w.gamma);
    if (d >= 4) {
      for (int i = 2; i <= d - 1; ++i) {
        CHECK((th[i - 2] - th[i + 1]) / (th[i - 1] - th[i]) == w.beta + scalar<ModP>(1, sys.field));
        CHECK((ts[i - 2] - ts[i + 1]) / (ts[i - 1] - ts[i]) == w.beta + scalar<ModP>(1, sys.field));
      }
    }
    auto iii = solve_condition_iii(sys, w.theta_star_ext);
    REQUIRE(iii);
    CHECK(iii->particular(0) == w.gamma);

    // Perturbing any one scalar breaks the identity.
    const ModP one = scalar<ModP>(1, sys.field);
    for (int k = 0; k < 6; ++k) {
      auto bad = w;
      ModP* field[] = {&bad.beta, &bad.gamma_star, &bad.delta_star, &bad.gamma, &bad.omega, &bad.eta_star};
      *field[k] += one;
      CHECK_FALSE(verify_aw2(sys, spec, bad));
    }
  }
}
