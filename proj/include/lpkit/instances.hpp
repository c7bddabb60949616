#ifndef LPKIT_INSTANCES_HPP
#define LPKIT_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpkit/system.hpp"

namespace lpkit {

/// a_i = 0, b_i = d - i, c_i = i, θ*_i = d - 2i; returns the system and its
/// eigenvalues θ_i = d - 2i. Throws CharacteristicTooSmall when p <= 2d.
template <class S>
std::pair<TridiagonalSystem<S>, std::vector<S>> gen_krawtchouk(int d, const FieldSpec& field);

/// A -> uA + vI (entrywise on a, b, c) and A* -> u*A* + v*I. Throws ZeroScale.
template <class S>
TridiagonalSystem<S> affine_transform(const TridiagonalSystem<S>& sys, const S& u, const S& v, const S& ustar,
                                      const S& vstar);

/// Copy of sys with θ*_k replaced. Throws IndexOutOfRange.
template <class S>
TridiagonalSystem<S> mutate_theta_star(const TridiagonalSystem<S>& sys, int k, const S& value);

/// Random system over GF(p) whose A has d+1 distinct eigenvalues in GF(p),
/// with pairwise distinct θ*_i. Deterministic in `seed`. Throws
/// GenerationFailed after `max_attempts` unsuccessful draws.
TridiagonalSystem<ModP> gen_random(int d, const FieldSpec& field, std::uint64_t seed, int max_attempts = 50);

/// Text form of an instance. Scalars are kept as strings until the scalar type
/// is chosen.
///
///   # comment
///   label: free text
///   field: Q | GF(p)
///   d: 3
///   a: 0 0 0 0
///   b: 3 2 1
///   c: 1 2 3
///   theta_star: 3 1 -1 -3
///   theta: 3 1 -1 -3        (optional eigenvalue order)
struct InstanceFile {
  FieldSpec field;
  int d = 0;
  std::vector<std::string> a, b, c, theta_star;
  std::optional<std::vector<std::string>> theta;
  std::string label;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError naming the line and field.
InstanceFile parse_instance_file(std::string_view text);
std::string serialize_instance(const InstanceFile& file);

/// Scalars parsed in file.field, then validated (InvalidSystem).
template <class S>
TridiagonalSystem<S> to_system(const InstanceFile& file);

template <class S>
std::optional<std::vector<S>> theta_hint(const InstanceFile& file);

template <class S>
InstanceFile to_instance_file(const TridiagonalSystem<S>& sys, const std::optional<std::vector<S>>& theta = std::nullopt,
                              std::string label = {});

InstanceFile read_instance_file(const std::string& path);

}  // namespace lpkit

#endif  // LPKIT_INSTANCES_HPP
