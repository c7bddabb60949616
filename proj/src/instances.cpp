#include "lpkit/instances.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace lpkit {

template <class S>
std::pair<TridiagonalSystem<S>, std::vector<S>> gen_krawtchouk(int d, const FieldSpec& field) {
  ScalarTraits<S>::check_field(field);
  if (d < 1) throw Error(ErrorKind::InvalidSystem, "d must be at least 1");
  if (field.kind == FieldKind::PrimeField && field.modulus <= static_cast<std::uint64_t>(2 * d))
    throw Error(ErrorKind::CharacteristicTooSmall,
                field.str() + " is too small for d = " + std::to_string(d) + " (need p > 2d)");
  TridiagonalSystem<S> sys;
  sys.field = field;
  std::vector<S> theta;
  for (int i = 0; i <= d; ++i) {
    sys.a.push_back(scalar<S>(0, field));
    sys.theta_star.push_back(scalar<S>(d - 2 * i, field));
    theta.push_back(scalar<S>(d - 2 * i, field));
    if (i < d) sys.b.push_back(scalar<S>(d - i, field));
    if (i > 0) sys.c.push_back(scalar<S>(i, field));
  }
  return {std::move(sys), std::move(theta)};
}

template <class S>
TridiagonalSystem<S> affine_transform(const TridiagonalSystem<S>& sys, const S& u, const S& v, const S& ustar,
                                      const S& vstar) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroScale, "u must be nonzero");
  if (ustar.is_zero()) throw Error(ErrorKind::ZeroScale, "u* must be nonzero");
  TridiagonalSystem<S> out = sys;
  for (auto& x : out.a) x = u * x + v;
  for (auto& x : out.b) x = u * x;
  for (auto& x : out.c) x = u * x;
  for (auto& x : out.theta_star) x = ustar * x + vstar;
  return out;
}

template <class S>
TridiagonalSystem<S> mutate_theta_star(const TridiagonalSystem<S>& sys, int k, const S& value) {
  if (k < 0 || k > sys.d())
    throw Error(ErrorKind::IndexOutOfRange, "theta_star index " + std::to_string(k) + " out of range", k);
  TridiagonalSystem<S> out = sys;
  out.theta_star[k] = value;
  return out;
}

namespace {

// Monic p_0..p_{d+1} from the characteristic polynomial and a monic p_d by
// running the Euclidean algorithm backwards through the three-term
// recurrence. Fails unless every remainder drops the degree by exactly one.
bool unwind_recurrence(const Poly<ModP>& chi, const Poly<ModP>& pd, std::vector<ModP>& a, std::vector<ModP>& e) {
  const int d = pd.degree();
  const ModP zero(0, chi.leading().modulus());
  a.assign(d + 1, ModP());
  e.assign(d + 1, ModP());
  Poly<ModP> hi = chi, lo = pd;
  for (int i = d; i >= 0; --i) {
    auto [quo, rem] = divmod(hi, lo);
    a[i] = zero - quo.coeff(0);
    if (i == 0) return rem.is_zero();
    if (rem.degree() != i - 1) return false;
    e[i] = -rem.leading();
    hi = std::move(lo);
    lo = (-e[i]).inverse() * rem;
  }
  return true;
}

}  // namespace

TridiagonalSystem<ModP> gen_random(int d, const FieldSpec& field, std::uint64_t seed, int max_attempts) {
  ScalarTraits<ModP>::check_field(field);
  if (d < 1) throw Error(ErrorKind::InvalidSystem, "d must be at least 1");
  const std::uint64_t p = field.modulus;
  if (p < static_cast<std::uint64_t>(d) + 2)
    throw Error(ErrorKind::CharacteristicTooSmall, field.str() + " has too few elements for d = " + std::to_string(d));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> any(0, p - 1), nonzero(1, p - 1);
  auto draw = [&](auto& dist) { return ModP(static_cast<std::int64_t>(dist(rng)), p); };
  auto distinct = [&](int count) {
    std::vector<ModP> out;
    std::set<std::uint64_t> seen;
    while (static_cast<int>(out.size()) < count) {
      std::uint64_t x = any(rng);
      if (seen.insert(x).second) out.emplace_back(static_cast<std::int64_t>(x), p);
    }
    return out;
  };

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Spectrum first: χ splits with distinct roots by construction, and the
    // monic p_d is uniform, so accepted draws are uniform over the systems
    // with a split, multiplicity-free A.
    auto theta = distinct(d + 1);
    Poly<ModP> chi = Poly<ModP>::constant(ModP(1, p));
    for (const auto& t : theta) chi = chi * Poly<ModP>::linear(t, field);
    std::vector<ModP> coeffs;
    for (int i = 0; i < d; ++i) coeffs.push_back(draw(any));
    coeffs.push_back(ModP(1, p));
    std::vector<ModP> a, e;
    if (!unwind_recurrence(chi, Poly<ModP>(coeffs), a, e)) continue;

    TridiagonalSystem<ModP> sys;
    sys.field = field;
    sys.a = a;
    for (int i = 0; i < d; ++i) sys.b.push_back(draw(nonzero));
    for (int i = 1; i <= d; ++i) sys.c.push_back(e[i] / sys.b[i - 1]);
    sys.theta_star = distinct(d + 1);
    ensure(compute_spectrum(sys).size() == d + 1, "generated system is not multiplicity-free");
    return sys;
  }
  throw Error(ErrorKind::GenerationFailed,
              "no multiplicity-free system after " + std::to_string(max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Instance files

namespace {

const char* const kKeys[] = {"label", "field", "d", "a", "b", "c", "theta_star", "theta"};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail_at(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg, line);
}

template <class S>
void check_scalars(const std::vector<std::string>& list, const FieldSpec& field, int line, const char* key) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      ScalarTraits<S>::parse(list[i], field);
    } catch (const Error& err) {
      fail_at(line, std::string("field '") + key + "' entry " + std::to_string(i) + ": " + err.message());
    }
  }
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  std::map<std::string, std::pair<int, std::string>> seen;
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail_at(lineno, "expected 'key: value', got '" + line + "'");
    std::string key = trim(std::string_view(line).substr(0, colon));
    std::string value = trim(std::string_view(line).substr(colon + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      fail_at(lineno, "unknown field '" + key + "'");
    if (seen.count(key)) fail_at(lineno, "field '" + key + "' given twice (first on line " +
                                             std::to_string(seen[key].first) + ")");
    seen[key] = {lineno, value};
  }
  for (const char* key : {"field", "d", "a", "b", "c", "theta_star"})
    if (!seen.count(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");

  InstanceFile f;
  if (seen.count("label")) f.label = seen["label"].second;
  try {
    f.field = FieldSpec::parse(seen["field"].second);
  } catch (const Error& err) {
    fail_at(seen["field"].first, std::string("field 'field': ") + err.message());
  }
  const auto& [dline, dtext] = seen["d"];
  auto [ptr, ec] = std::from_chars(dtext.data(), dtext.data() + dtext.size(), f.d);
  if (ec != std::errc() || ptr != dtext.data() + dtext.size() || f.d < 1)
    fail_at(dline, "field 'd' must be a positive integer, got '" + dtext + "'");

  auto list = [&](const char* key, int want) {
    const auto& [line, value] = seen[key];
    auto out = tokens(value);
    if (static_cast<int>(out.size()) != want)
      fail_at(line, std::string("field '") + key + "' has " + std::to_string(out.size()) + " entries, expected " +
                        std::to_string(want));
    if (f.field.kind == FieldKind::Rationals)
      check_scalars<Rational>(out, f.field, line, key);
    else
      check_scalars<ModP>(out, f.field, line, key);
    return out;
  };
  f.a = list("a", f.d + 1);
  f.b = list("b", f.d);
  f.c = list("c", f.d);
  f.theta_star = list("theta_star", f.d + 1);
  if (seen.count("theta")) f.theta = list("theta", f.d + 1);
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::vector<std::string>& xs) {
    os << key << ":";
    for (const auto& x : xs) os << ' ' << x;
    os << '\n';
  };
  if (!f.label.empty()) os << "label: " << f.label << '\n';
  os << "field: " << f.field.str() << '\n';
  os << "d: " << f.d << '\n';
  line("a", f.a);
  line("b", f.b);
  line("c", f.c);
  line("theta_star", f.theta_star);
  if (f.theta) line("theta", *f.theta);
  return os.str();
}

namespace {

template <class S>
std::vector<S> parse_list(const std::vector<std::string>& xs, const FieldSpec& field) {
  std::vector<S> out;
  for (const auto& x : xs) out.push_back(ScalarTraits<S>::parse(x, field));
  return out;
}

template <class S>
std::vector<std::string> format_list(const std::vector<S>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(ScalarTraits<S>::format(x));
  return out;
}

}  // namespace

template <class S>
TridiagonalSystem<S> to_system(const InstanceFile& f) {
  if (f.field.kind != ScalarTraits<S>::kind)
    throw Error(ErrorKind::FieldMismatch, "instance is over " + f.field.str());
  TridiagonalSystem<S> sys{f.field, parse_list<S>(f.a, f.field), parse_list<S>(f.b, f.field),
                           parse_list<S>(f.c, f.field), parse_list<S>(f.theta_star, f.field)};
  require_valid(sys);
  return sys;
}

template <class S>
std::optional<std::vector<S>> theta_hint(const InstanceFile& f) {
  if (!f.theta) return std::nullopt;
  return parse_list<S>(*f.theta, f.field);
}

template <class S>
InstanceFile to_instance_file(const TridiagonalSystem<S>& sys, const std::optional<std::vector<S>>& theta,
                              std::string label) {
  require_valid(sys);
  InstanceFile f;
  f.field = sys.field;
  f.d = sys.d();
  f.a = format_list(sys.a);
  f.b = format_list(sys.b);
  f.c = format_list(sys.c);
  f.theta_star = format_list(sys.theta_star);
  if (theta) f.theta = format_list(*theta);
  f.label = std::move(label);
  return f;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_instance_file(os.str());
}

#define LPKIT_INSTANTIATE(S)                                                                                  \
  template std::pair<TridiagonalSystem<S>, std::vector<S>> gen_krawtchouk(int, const FieldSpec&);             \
  template TridiagonalSystem<S> affine_transform(const TridiagonalSystem<S>&, const S&, const S&, const S&,   \
                                                 const S&);                                                   \
  template TridiagonalSystem<S> mutate_theta_star(const TridiagonalSystem<S>&, int, const S&);                \
  template TridiagonalSystem<S> to_system(const InstanceFile&);                                               \
  template std::optional<std::vector<S>> theta_hint(const InstanceFile&);                                     \
  template InstanceFile to_instance_file(const TridiagonalSystem<S>&, const std::optional<std::vector<S>>&,   \
                                         std::string);

LPKIT_INSTANTIATE(Rational)
LPKIT_INSTANTIATE(ModP)

}  // namespace lpkit
