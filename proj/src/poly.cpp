#include "lpkit/poly.hpp"

#include <set>

namespace lpkit {

namespace {

constexpr unsigned long kTrialBound = 1'000'000;
constexpr std::size_t kMaxCandidates = 4'000'000;
constexpr std::uint64_t kMaxExhaustiveModulus = std::uint64_t{1} << 22;

// Prime factorization of n > 0 as (prime, exponent) pairs.
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  auto pull = [&](const mpz_class& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  pull(2);
  for (unsigned long p = 3; p <= kTrialBound && mpz_class(p) * p <= n; p += 2) pull(p);
  if (n > 1) {
    bool prime = n <= mpz_class(kTrialBound) * kTrialBound || mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    if (!prime)
      throw Error(ErrorKind::Unsupported,
                  "cannot factor " + n.get_str() + " for rational-root search; supply eigenvalues explicitly");
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factorize(abs(n))) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

template <class S>
std::vector<Root<S>> deflate_roots(Poly<S> p, const std::vector<S>& candidates, const FieldSpec& field) {
  std::vector<Root<S>> roots;
  for (const S& r : candidates) {
    if (p.degree() <= 0) break;
    int mult = 0;
    while (p.degree() > 0 && p(r).is_zero()) {
      p = divmod(p, Poly<S>::linear(r, field)).first;
      ++mult;
    }
    if (mult) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end(), [](const Root<S>& x, const Root<S>& y) {
    return ScalarTraits<S>::canonical_less(x.value, y.value);
  });
  return roots;
}

}  // namespace

template <>
std::vector<Root<Rational>> roots_in_field(const Poly<Rational>& p, const FieldSpec& field) {
  ScalarTraits<Rational>::check_field(field);
  if (p.is_zero()) throw Error(ErrorKind::PreconditionViolated, "roots of the zero polynomial");
  if (p.degree() == 0) return {};

  // Integer-scale, then strip the λ^k factor.
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coeffs()) ints.push_back(c.value().get_num() * (lcm / c.value().get_den()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;

  std::vector<Rational> candidates;
  if (low > 0) candidates.emplace_back(0);
  if (ints.size() - low > 1) {
    const mpz_class& a0 = ints[low];
    const mpz_class& an = ints.back();
    // Cauchy bound: every root satisfies |r| <= 1 + max |a_i / a_n|.
    mpq_class bound = 0;
    for (std::size_t i = low; i + 1 < ints.size(); ++i) bound = std::max(bound, mpq_class(abs(ints[i]), abs(an)));
    bound += 1;
    auto num_divs = divisors(a0);
    auto den_divs = divisors(an);
    if (num_divs.size() * den_divs.size() > kMaxCandidates)
      throw Error(ErrorKind::Unsupported, "too many rational-root candidates; supply eigenvalues explicitly");
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& q : den_divs) {
      for (const auto& pn : num_divs) {
        mpq_class r(pn, q);
        r.canonicalize();
        if (r > bound) continue;
        if (!seen.emplace(r.get_num().get_str(), r.get_den().get_str()).second) continue;
        candidates.emplace_back(r);
        candidates.emplace_back(mpq_class(-r));
      }
    }
  }
  return deflate_roots(p, candidates, field);
}

template <>
std::vector<Root<ModP>> roots_in_field(const Poly<ModP>& p, const FieldSpec& field) {
  ScalarTraits<ModP>::check_field(field);
  if (p.is_zero()) throw Error(ErrorKind::PreconditionViolated, "roots of the zero polynomial");
  if (p.degree() == 0) return {};
  if (field.modulus > kMaxExhaustiveModulus)
    throw Error(ErrorKind::Unsupported,
                "exhaustive root search limited to p < 2^22; supply eigenvalues explicitly for " + field.str());
  std::vector<ModP> candidates;
  for (std::uint64_t x = 0; x < field.modulus; ++x) {
    ModP v(static_cast<std::int64_t>(x), field.modulus);
    if (p(v).is_zero()) candidates.push_back(v);
  }
  return deflate_roots(p, candidates, field);
}

}  // namespace lpkit
