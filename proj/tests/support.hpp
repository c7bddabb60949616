// Shared fixtures for the unit tests and the acceptance binary.
#ifndef LPKIT_TESTS_SUPPORT_HPP
#define LPKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpkit/cosine.hpp"
#include "lpkit/delta.hpp"
#include "lpkit/instances.hpp"
#include "lpkit/leaf.hpp"
#include "lpkit/qpoly.hpp"

#ifndef LPKIT_TEST_DATA
#define LPKIT_TEST_DATA "tests/data"
#endif

namespace lpkit::test {

inline const FieldSpec QQ = FieldSpec::rationals();

inline Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

inline ModP mod(long v, std::uint64_t p) { return ModP(v, p); }

template <class S>
std::vector<S> list(std::initializer_list<long> xs, const FieldSpec& field) {
  std::vector<S> out;
  for (long x : xs) out.push_back(scalar<S>(x, field));
  return out;
}

inline std::vector<Rational> rats(std::initializer_list<long> xs) { return list<Rational>(xs, QQ); }

/// Rational polynomial from coefficients, constant term first.
inline Poly<Rational> rpoly(std::initializer_list<Rational> coeffs) { return Poly<Rational>(std::vector<Rational>(coeffs)); }

template <class S>
TridiagonalSystem<S> make(const FieldSpec& field, std::initializer_list<long> a, std::initializer_list<long> b,
                          std::initializer_list<long> c, std::initializer_list<long> ts) {
  return {field, list<S>(a, field), list<S>(b, field), list<S>(c, field), list<S>(ts, field)};
}

inline TridiagonalSystem<Rational> k2() { return gen_krawtchouk<Rational>(2, QQ).first; }
inline TridiagonalSystem<Rational> k3() { return gen_krawtchouk<Rational>(3, QQ).first; }

/// K3 with the eigenvalues in the order (3, 1, -1, -3).
inline Spectrum<Rational> k3_spectrum() {
  auto [sys, theta] = gen_krawtchouk<Rational>(3, QQ);
  return compute_spectrum(sys, std::optional(theta));
}

/// Hamming H(d, n): a_i = i(n-2), b_i = (d-i)(n-1), c_i = i, θ*_i = (n-1)d - ni.
template <class S>
TridiagonalSystem<S> hamming(int d, int n, const FieldSpec& field = QQ) {
  TridiagonalSystem<S> sys;
  sys.field = field;
  for (int i = 0; i <= d; ++i) {
    sys.a.push_back(scalar<S>(i * (n - 2), field));
    sys.theta_star.push_back(scalar<S>((n - 1) * d - n * i, field));
    if (i < d) sys.b.push_back(scalar<S>((d - i) * (n - 1), field));
    if (i > 0) sys.c.push_back(scalar<S>(i, field));
  }
  return sys;
}

/// Johnson J(n, d) with θ*_i = d(n-d) - ni, an affine image of the dual
/// eigenvalues for the first eigenvalue.
template <class S>
TridiagonalSystem<S> johnson(int n, int d, const FieldSpec& field = QQ) {
  TridiagonalSystem<S> sys;
  sys.field = field;
  const int k = d * (n - d);
  for (int i = 0; i <= d; ++i) {
    int bi = i < d ? (d - i) * (n - d - i) : 0;
    int ci = i * i;
    sys.a.push_back(scalar<S>(k - bi - ci, field));
    sys.theta_star.push_back(scalar<S>(k - n * i, field));
    if (i < d) sys.b.push_back(scalar<S>(bi, field));
    if (i > 0) sys.c.push_back(scalar<S>(ci, field));
  }
  return sys;
}

inline std::string data_path(const std::string& name) { return std::string(LPKIT_TEST_DATA) + "/" + name; }

inline std::map<std::string, std::string> read_golden(const std::string& name) {
  std::ifstream in(data_path(name));
  std::map<std::string, std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    out[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return out;
}

template <class S>
std::string joined(const std::vector<S>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

/// Random GF(p) systems with d in [dmin, dmax], p drawn from `primes`.
inline std::vector<TridiagonalSystem<ModP>> random_corpus(int count, std::uint64_t seed, int dmin, int dmax,
                                                          const std::vector<std::uint64_t>& primes) {
  std::mt19937_64 rng(seed);
  std::vector<TridiagonalSystem<ModP>> out;
  for (int k = 0; k < count; ++k) {
    int d = dmin + static_cast<int>(rng() % static_cast<std::uint64_t>(dmax - dmin + 1));
    std::uint64_t p = primes[rng() % primes.size()];
    out.push_back(gen_random(d, FieldSpec::prime(p), rng()));
  }
  return out;
}

/// Ground truth from the graph: r has exactly one neighbour and it is s.
inline bool is_leaf_pair(const DeltaGraph& g, int r, int s) { return g.degree(r) == 1 && g.adjacent(r, s); }

/// A uniformly random square matrix over GF(p).
inline Matrix<ModP> random_matrix(Index n, std::uint64_t p, std::mt19937_64& rng) {
  Matrix<ModP> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = ModP(static_cast<std::int64_t>(rng() % p), p);
  return m;
}

}  // namespace lpkit::test

#endif  // LPKIT_TESTS_SUPPORT_HPP
