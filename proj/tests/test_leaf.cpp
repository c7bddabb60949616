#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace lpkit;
using namespace lpkit::test;

namespace {

void expect_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

// Runs every method whose preconditions hold on (sys, r, s) and compares with
// the graph. Returns the number of evaluated (pair, method) verdicts.
template <class S>
int check_against_graph(const TridiagonalSystem<S>& sys, int* denials) {
  auto spec = compute_spectrum(sys);
  auto g = build_delta(sys, spec);
  const int n = spec.size();
  const bool appendix = appendix_applicable(sys);
  int evaluated = 0;
  for (int r = 0; r < n; ++r) {
    std::optional<TridiagonalSystem<S>> rebased;
    if (appendix) {
      try {
        rebased = rebase_to_row_sum(sys, spec.theta[r]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CosineVanishes) throw;
      }
    }
    for (int s = 0; s < n; ++s) {
      if (r == s) continue;
      const bool truth = is_leaf_pair(g, r, s);
      std::vector<LeafVerdict<S>> verdicts;
      verdicts.push_back(leaf_by_subspace(sys, spec, r, s));
      verdicts.push_back(leaf_by_recurrence(sys, spec, r, s));
      verdicts.push_back(leaf_by_ratio(sys, spec, r, s));
      if (appendix) {
        verdicts.push_back(appendix_a(sys, spec, r, s));
        verdicts.push_back(appendix_a(sys, spec, r, s, true));
      }
      if (rebased) verdicts.push_back(appendix_b(*rebased, compute_spectrum(*rebased), r, s));
      for (const auto& v : verdicts) {
        CAPTURE(to_string(v.method));
        CAPTURE(r);
        CAPTURE(s);
        CHECK(v.confirmed == truth);
        if (v.confirmed) {
          REQUIRE(v.kappa);
          CHECK(*v.kappa == dual_a(sys, spec, r));
          CHECK(*v.kappa != sys.theta_star[0]);
        }
        ++evaluated;
        if (!v.confirmed) ++*denials;
      }
    }
  }
  return evaluated;
}

}  // namespace

TEST_CASE("subspace method on K3") {
  auto sys = k3();
  auto spec = k3_spectrum();
  auto v = leaf_by_subspace(sys, spec, 0, 1);
  CHECK(v.confirmed);
  CHECK(v.kappa == q(0));
  CHECK_FALSE(leaf_by_subspace(sys, spec, 0, 2).confirmed);
  CHECK_FALSE(leaf_by_subspace(sys, spec, 1, 0).confirmed);
  expect_error(ErrorKind::EqualIndices, [&] { leaf_by_subspace(sys, spec, 1, 1); });
  expect_error(ErrorKind::IndexOutOfRange, [&] { leaf_by_subspace(sys, spec, 0, 4); });
}

TEST_CASE("recurrence method on K3 and scalar A*") {
  auto sys = k3();
  auto spec = k3_spectrum();
  CHECK(leaf_by_recurrence(sys, spec, 0, 1).confirmed);
  auto denied = leaf_by_recurrence(sys, spec, 0, 3);
  CHECK_FALSE(denied.confirmed);
  CHECK(denied.failing_index == 0);

  auto flat = make<Rational>(QQ, {0, 0, 0, 0}, {3, 2, 1}, {1, 2, 3}, {7, 7, 7, 7});
  auto flat_spec = compute_spectrum(flat);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      if (r != s) CHECK_FALSE(leaf_by_recurrence(flat, flat_spec, r, s).confirmed);
}

TEST_CASE("ratio method on K3") {
  auto sys = k3();
  auto spec = k3_spectrum();
  CHECK(leaf_by_ratio(sys, spec, 0, 1).confirmed);
  auto denied = leaf_by_ratio(sys, spec, 0, 2);
  CHECK_FALSE(denied.confirmed);
  CHECK(denied.failing_index == 1);
  // a*_0 = (-3 + 21 - 21 - 21)/8 = θ*_0, so r = 0 is denied up front.
  auto shifted = make<Rational>(QQ, {0, 0, 0, 0}, {3, 2, 1}, {1, 2, 3}, {-3, 7, -7, -21});
  auto sspec = compute_spectrum(shifted, std::optional(rats({3, 1, -1, -3})));
  REQUIRE(dual_a(shifted, sspec, 0) == q(-3));
  for (int s = 1; s < 4; ++s) CHECK_FALSE(leaf_by_ratio(shifted, sspec, 0, s).confirmed);
}

TEST_CASE("first appendix loop") {
  auto sys = k3();
  auto spec = k3_spectrum();
  auto v = appendix_a(sys, spec, 0, 1);
  CHECK(v.confirmed);
  CHECK(v.kappa == q(0));
  auto w = appendix_a(sys, spec, 3, 2);
  CHECK(w.confirmed);
  CHECK(w.kappa == dual_a(sys, spec, 3));
  CHECK(leaf_by_subspace(sys, spec, 3, 2).confirmed);
  CHECK_FALSE(appendix_a(sys, spec, 1, 0).confirmed);
  CHECK_FALSE(appendix_a(sys, spec, 1, 0, true).confirmed);

  expect_error(ErrorKind::PreconditionViolated, [] {
    auto s1 = gen_krawtchouk<Rational>(1, QQ).first;
    appendix_a(s1, compute_spectrum(s1), 0, 1);
  });
  expect_error(ErrorKind::PreconditionViolated, [] {
    auto m = mutate_theta_star(k3(), 2, q(3));
    appendix_a(m, compute_spectrum(m), 0, 1);
  });
}

TEST_CASE("second appendix loop") {
  auto sys = k3();
  auto spec = k3_spectrum();
  auto v = appendix_b(sys, spec, 0, 1);
  CHECK(v.confirmed);
  CHECK(v.kappa == q(0));
  auto denied = appendix_b(sys, spec, 0, 2);
  CHECK_FALSE(denied.confirmed);
  CHECK(denied.failing_index == 1);
  expect_error(ErrorKind::PreconditionViolated, [] {
    auto n = normalize(k2());
    appendix_b(n, compute_spectrum(n), 0, 1);
  });
  // Row sum 3 differs from θ_1 = 1.
  expect_error(ErrorKind::PreconditionViolated, [&] { appendix_b(sys, spec, 1, 0); });
}

TEST_CASE("method names") {
  for (auto m : kAllLeafMethods) CHECK(parse_leaf_method(to_string(m)) == m);
  CHECK(parse_leaf_method("appendix-a") == LeafMethod::AppendixA);
  CHECK_THROWS_AS(parse_leaf_method("guess"), Error);
}

TEST_CASE("all methods agree with the graph") {
  int denials = 0, evaluated = 0;
  for (int d = 2; d <= 6; ++d) evaluated += check_against_graph(gen_krawtchouk<Rational>(d, QQ).first, &denials);
  evaluated += check_against_graph(hamming<Rational>(3, 4), &denials);
  evaluated += check_against_graph(johnson<Rational>(7, 3), &denials);
  int random_denials = 0, random_evaluated = 0;
  for (const auto& sys : random_corpus(60, 61, 2, 6, {101, 10007}))
    random_evaluated += check_against_graph(sys, &random_denials);
  CHECK(evaluated > 0);
  CHECK(random_denials * 10 >= random_evaluated * 3);
}

TEST_CASE("verdicts survive rescaling and affine maps") {
  std::mt19937_64 rng(67);
  for (const auto& sys : random_corpus(30, 71, 2, 5, {10007})) {
    const auto p = sys.field.modulus;
    std::vector<ModP> targets;
    for (int i = 0; i < sys.d(); ++i) targets.push_back(ModP(static_cast<std::int64_t>(1 + rng() % (p - 1)), p));
    auto other = rescale_superdiagonal(sys, targets);
    auto moved = affine_transform(sys, mod(3, p), mod(5, p), mod(7, p), mod(11, p));
    auto spec = compute_spectrum(sys);
    auto ospec = compute_spectrum(other);
    // θ -> 3θ + 5 can reorder the canonical spectrum, so match by value.
    auto mspec = compute_spectrum(moved);
    auto image = [&](int r) {
      for (int k = 0; k < mspec.size(); ++k)
        if (mspec.theta[k] == mod(3, p) * spec.theta[r] + mod(5, p)) return k;
      FAIL("eigenvalue not transported");
      return -1;
    };
    for (int r = 0; r < spec.size(); ++r)
      for (int s = 0; s < spec.size(); ++s) {
        if (r == s) continue;
        for (auto m : {LeafMethod::Subspace, LeafMethod::Recurrence, LeafMethod::Ratio, LeafMethod::AppendixA}) {
          bool base = decide_leaf(m, sys, spec, r, s).confirmed;
          CHECK(decide_leaf(m, other, ospec, r, s).confirmed == base);
          CHECK(decide_leaf(m, moved, mspec, image(r), image(s)).confirmed == base);
        }
      }
  }
}
