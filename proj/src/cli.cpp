#include "lpkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "lpkit/cosine.hpp"
#include "lpkit/delta.hpp"
#include "lpkit/instances.hpp"
#include "lpkit/leaf.hpp"
#include "lpkit/qpoly.hpp"

namespace lpkit {
namespace {

using json = nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Options {
  std::string file;
  std::string dir;
  std::string route = "direct";
  bool json = false;

  int r = -1, s = -1;
  std::string method;
  bool paranoid = false;

  int d = 0;
  std::string field;
  std::optional<std::uint64_t> seed;

  std::optional<std::string> theta;
  bool search = false;

  std::optional<std::string> beta, gamma_star, delta_star, gamma, omega, eta_star;
};

template <class S>
std::string str(const S& x) {
  return ScalarTraits<S>::format(x);
}

template <class S>
std::string join(const std::vector<S>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    if constexpr (std::is_same_v<S, int>)
      out += std::to_string(xs[i]);
    else
      out += str(xs[i]);
  }
  return out;
}

template <class S>
json json_list(const std::vector<S>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(str(x));
  return out;
}

template <class S>
struct Loaded {
  InstanceFile file;
  TridiagonalSystem<S> sys;
  Spectrum<S> spec;
};

template <class S>
Loaded<S> load(const InstanceFile& f) {
  auto sys = to_system<S>(f);
  auto spec = compute_spectrum(sys, theta_hint<S>(f));
  return {f, std::move(sys), std::move(spec)};
}

// Calls fn(Loaded<S>) with S picked from the instance's field.
template <class Fn>
int with_instance(const std::string& path, Fn&& fn) {
  InstanceFile f = read_instance_file(path);
  if (f.field.kind == FieldKind::Rationals) return fn(load<Rational>(f));
  return fn(load<ModP>(f));
}

template <class S>
void print_witness(std::ostream& out, const RecurrenceWitness<S>& w) {
  out << "beta = " << str(w.beta) << "\n"
      << "gamma* = " << str(w.gamma_star) << "\n"
      << "delta* = " << str(w.delta_star) << "\n"
      << "gamma = " << str(w.gamma) << "\n"
      << "omega = " << str(w.omega) << "\n"
      << "eta* = " << str(w.eta_star) << "\n"
      << "theta*_ext = " << join(w.theta_star_ext) << "\n";
}

template <class S>
json witness_json(const RecurrenceWitness<S>& w) {
  return json{{"beta", str(w.beta)},          {"gamma_star", str(w.gamma_star)}, {"delta_star", str(w.delta_star)},
              {"gamma", str(w.gamma)},        {"omega", str(w.omega)},           {"eta_star", str(w.eta_star)},
              {"theta_star_ext", json_list(w.theta_star_ext)}};
}

template <class S>
int check_one(const Loaded<S>& in, const Options& opt, std::ostream& out, std::ostream& err, json* doc) {
  const auto& sys = in.sys;
  const auto& spec = in.spec;
  const bool want_direct = opt.route != "theorem";
  const bool want_theorem = opt.route != "direct";
  const bool theorem_available = sys.d() >= 3;
  if (opt.route == "theorem" && !theorem_available)
    throw Error(ErrorKind::RouteUnavailable, "the theorem route needs d >= 3 (got d = " + std::to_string(sys.d()) + ")");

  std::optional<QPolyVerdict<S>> direct, theorem;
  if (want_direct) direct = is_q_polynomial(sys, spec, Route::Direct);
  if (want_theorem && theorem_available) theorem = is_q_polynomial(sys, spec, Route::Theorem);

  const QPolyVerdict<S>& primary = direct ? *direct : *theorem;
  const bool disagree = direct && theorem && direct->qpoly != theorem->qpoly;
  const auto& witness = primary.witness ? primary.witness : (theorem ? theorem->witness : std::nullopt);

  if (doc) {
    (*doc)["file"] = opt.file;
    (*doc)["label"] = in.file.label;
    (*doc)["field"] = sys.field.str();
    (*doc)["d"] = sys.d();
    (*doc)["theta"] = json_list(spec.theta);
    if (direct) (*doc)["direct"] = direct->qpoly;
    if (theorem) {
      (*doc)["theorem"] = theorem->qpoly;
      if (theorem->failed_condition) (*doc)["failed_condition"] = std::string(to_string(*theorem->failed_condition));
    } else if (want_theorem) {
      (*doc)["theorem"] = nullptr;
    }
    if (direct && direct->leonard_order) (*doc)["leonard_order"] = *direct->leonard_order;
    if (primary.qpoly && witness) (*doc)["witness"] = witness_json(*witness);
    (*doc)["qpoly"] = primary.qpoly;
    if (disagree) (*doc)["error"] = "routes disagree";
  } else {
    out << "instance: " << (in.file.label.empty() ? opt.file : in.file.label) << " (" << sys.field.str()
        << ", d = " << sys.d() << ")\n";
    out << "eigenvalues: " << join(spec.theta) << "\n";
    if (direct) out << "direct: " << (direct->qpoly ? "Q-polynomial" : "not Q-polynomial") << "\n";
    if (theorem) {
      out << "theorem: " << (theorem->qpoly ? "Q-polynomial" : "not Q-polynomial");
      if (theorem->failed_condition) out << " (condition " << to_string(*theorem->failed_condition) << " fails)";
      out << "\n";
    } else if (want_theorem) {
      out << "theorem: unavailable for d < 3\n";
    }
    if (direct && direct->leonard_order) {
      std::vector<S> ordered;
      for (int k : *direct->leonard_order) ordered.push_back(spec.theta[k]);
      out << "leonard order: " << join(*direct->leonard_order) << " (eigenvalues " << join(ordered) << ")\n";
    }
    if (primary.qpoly && witness) print_witness(out, *witness);
  }
  if (disagree) {
    err << "error: direct and theorem routes disagree on " << opt.file << "\n";
    return kError;
  }
  return primary.qpoly ? kTrue : kFalse;
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.file.empty() == opt.dir.empty()) {
    err << "error: check needs exactly one of FILE or --dir\n";
    return kError;
  }
  std::vector<std::string> files;
  if (!opt.dir.empty()) {
    for (const auto& entry : std::filesystem::directory_iterator(opt.dir))
      if (entry.is_regular_file() && entry.path().extension() == ".lp") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(opt.file);
  }

  json all = json::array();
  int worst = kTrue;
  for (const auto& path : files) {
    Options one = opt;
    one.file = path;
    json doc;
    int code;
    try {
      code = with_instance(path, [&](const auto& in) { return check_one(in, one, out, err, opt.json ? &doc : nullptr); });
    } catch (const Error& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      doc = json{{"file", path}, {"error", e.what()}};
      code = kError;
    }
    if (opt.json) all.push_back(doc);
    if (!opt.json && files.size() > 1) out << "\n";
    worst = std::max(worst, code);
  }
  if (opt.json) out << (opt.dir.empty() ? all.at(0) : all).dump(2) << "\n";
  return worst;
}

int cmd_delta(const Options& opt, std::ostream& out) {
  return with_instance(opt.file, [&](const auto& in) {
    auto g = build_delta(in.sys, in.spec);
    auto order = path_order(g);
    auto lv = leaves(g);
    if (opt.json) {
      json doc{{"vertices", g.size()}, {"theta", json_list(in.spec.theta)}};
      doc["edges"] = g.edges();
      doc["degrees"] = g.degrees();
      doc["leaves"] = lv;
      doc["connected"] = is_connected(g);
      doc["path"] = order ? json(*order) : json(nullptr);
      out << doc.dump(2) << "\n";
      return kTrue;
    }
    out << "vertices: " << g.size() << " (eigenvalues " << join(in.spec.theta) << ")\n";
    out << "edges:";
    for (auto [i, j] : g.edges()) out << " " << i << "-" << j;
    out << "\ndegrees: " << join(g.degrees()) << "\n";
    out << "leaves: " << join(lv) << "\n";
    out << "connected: " << (is_connected(g) ? "yes" : "no") << "\n";
    out << "path: " << (order ? join(*order) : std::string("no")) << "\n";
    return kTrue;
  });
}

int cmd_leaf(const Options& opt, std::ostream& out) {
  const LeafMethod method = parse_leaf_method(opt.method);
  return with_instance(opt.file, [&](const auto& in) {
    auto v = decide_leaf(method, in.sys, in.spec, opt.r, opt.s, opt.paranoid);
    if (opt.json) {
      json doc{{"r", opt.r}, {"s", opt.s}, {"method", std::string(to_string(method))}, {"confirmed", v.confirmed}};
      doc["kappa"] = v.kappa ? json(str(*v.kappa)) : json(nullptr);
      doc["failing_index"] = v.failing_index ? json(*v.failing_index) : json(nullptr);
      out << doc.dump(2) << "\n";
    } else {
      out << "(" << opt.r << ", " << opt.s << ") " << (v.confirmed ? "confirmed" : "denied") << " by "
          << to_string(method);
      if (v.confirmed && v.kappa) out << ", kappa = " << str(*v.kappa);
      if (!v.confirmed && v.failing_index) out << ", first failing index " << *v.failing_index;
      out << "\n";
    }
    return v.confirmed ? kTrue : kFalse;
  });
}

int cmd_gen(const std::string& family, const Options& opt, std::ostream& out) {
  if (family == "krawtchouk") {
    FieldSpec field = opt.field.empty() ? FieldSpec::rationals() : FieldSpec::parse(opt.field);
    auto emit = [&](auto tag) {
      using S = decltype(tag);
      auto [sys, theta] = gen_krawtchouk<S>(opt.d, field);
      out << serialize_instance(to_instance_file(sys, std::optional(theta), "krawtchouk d=" + std::to_string(opt.d)));
    };
    if (field.kind == FieldKind::Rationals)
      emit(Rational());
    else
      emit(ModP());
    return kTrue;
  }
  if (opt.field.empty()) throw Error(ErrorKind::InvalidField, "gen random needs --field GF(p)");
  FieldSpec field = FieldSpec::parse(opt.field);
  if (field.kind != FieldKind::PrimeField) throw Error(ErrorKind::InvalidField, "gen random works over GF(p) only");
  std::uint64_t seed = 0;
  if (opt.seed) {
    seed = *opt.seed;
  } else if (const char* env = std::getenv("LPKIT_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("LPKIT_SEED is not an integer: '") + env + "'");
    }
  }
  auto sys = gen_random(opt.d, field, seed);
  out << serialize_instance(to_instance_file<ModP>(sys, std::nullopt,
                                                   "random d=" + std::to_string(opt.d) + " seed=" + std::to_string(seed)));
  return kTrue;
}

int cmd_verify_aw2(const Options& opt, std::ostream& out) {
  return with_instance(opt.file, [&](const auto& in) {
    using S = std::decay_t<decltype(in.sys.a[0])>;
    auto found = find_witness(in.sys);
    const bool any_override =
        opt.beta || opt.gamma_star || opt.delta_star || opt.gamma || opt.omega || opt.eta_star;
    if (!found && !any_override) {
      out << "no recurrence witness exists for this pair\n";
      return kFalse;
    }
    const S zero = scalar<S>(0, in.sys.field);
    RecurrenceWitness<S> w = found ? *found : RecurrenceWitness<S>{zero, zero, zero, zero, zero, zero, {}};
    auto take = [&](const std::optional<std::string>& text, S& slot) {
      if (text) slot = ScalarTraits<S>::parse(*text, in.sys.field);
    };
    take(opt.beta, w.beta);
    take(opt.gamma_star, w.gamma_star);
    take(opt.delta_star, w.delta_star);
    take(opt.gamma, w.gamma);
    take(opt.omega, w.omega);
    take(opt.eta_star, w.eta_star);
    w.theta_star_ext = extend_dual_eigenvalues(in.sys.theta_star, w.beta, w.gamma_star);
    const bool ok = verify_aw2(in.sys, in.spec, w);
    print_witness(out, w);
    out << "identity " << (ok ? "holds" : "fails") << "\n";
    return ok ? kTrue : kFalse;
  });
}

int cmd_rebase(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.theta.has_value() == opt.search) {
    err << "error: rebase needs exactly one of --theta or --search\n";
    return kError;
  }
  return with_instance(opt.file, [&](const auto& in) {
    using S = std::decay_t<decltype(in.sys.a[0])>;
    std::vector<S> candidates;
    if (opt.theta) {
      candidates.push_back(ScalarTraits<S>::parse(*opt.theta, in.sys.field));
    } else {
      candidates = in.spec.theta;
      std::sort(candidates.begin(), candidates.end(), ScalarTraits<S>::canonical_less);
    }
    for (const auto& theta : candidates) {
      try {
        auto rebased = rebase_to_row_sum(in.sys, theta);
        auto label = in.file.label.empty() ? std::string("rebased") : in.file.label + ", rebased";
        out << "# row sum " << str(theta) << "\n"
            << serialize_instance(to_instance_file(rebased, std::optional(in.spec.theta), label));
        return kTrue;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CosineVanishes) throw;
        err << "theta = " << str(theta) << ": " << e.what() << "\n";
      }
    }
    return kFalse;
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for tridiagonal/diagonal pairs: graph of the pair, leaves, Q-polynomiality.", "lpkit"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "decide whether the pair is Q-polynomial");
  check->add_option("file", opt.file, "instance file");
  check->add_option("--dir", opt.dir, "check every *.lp file in a directory");
  check->add_option("--route", opt.route, "direct, theorem or both")
      ->check(CLI::IsMember({"direct", "theorem", "both"}));
  check->add_flag("--json", opt.json, "machine-readable output");

  auto* delta = app.add_subcommand("delta", "print the graph of the pair");
  delta->add_option("file", opt.file, "instance file")->required();
  delta->add_flag("--json", opt.json, "machine-readable output");

  auto* leaf = app.add_subcommand("leaf", "is vertex r a leaf whose only neighbour is s?");
  leaf->add_option("file", opt.file, "instance file")->required();
  leaf->add_option("--r", opt.r, "vertex r")->required();
  leaf->add_option("--s", opt.s, "vertex s")->required();
  leaf->add_option("--method", opt.method, "subspace, recurrence, ratio, appendix-a or appendix-b")->required();
  leaf->add_flag("--paranoid", opt.paranoid, "appendix-a: also check the last relation");
  leaf->add_flag("--json", opt.json, "machine-readable output");

  auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
  gen->require_subcommand(1);
  auto* kraw = gen->add_subcommand("krawtchouk", "a_i = 0, b_i = d-i, c_i = i, theta*_i = d-2i");
  kraw->add_option("--d", opt.d, "diameter")->required();
  kraw->add_option("--field", opt.field, "Q (default) or GF(p)");
  auto* rnd = gen->add_subcommand("random", "random multiplicity-free system over GF(p)");
  rnd->add_option("--d", opt.d, "diameter")->required();
  rnd->add_option("--field", opt.field, "GF(p)")->required();
  rnd->add_option("--seed", opt.seed, "seed (default: $LPKIT_SEED, else 0)");

  auto* aw2 = app.add_subcommand("verify-aw2", "check the cubic relation with the computed (or given) scalars");
  aw2->add_option("file", opt.file, "instance file")->required();
  aw2->add_option("--beta", opt.beta);
  aw2->add_option("--gamma-star", opt.gamma_star);
  aw2->add_option("--delta-star", opt.delta_star);
  aw2->add_option("--gamma", opt.gamma);
  aw2->add_option("--omega", opt.omega);
  aw2->add_option("--eta-star", opt.eta_star);

  auto* rebase = app.add_subcommand("rebase", "rescale the basis so every row of A sums to theta");
  rebase->add_option("file", opt.file, "instance file")->required();
  rebase->add_option("--theta", opt.theta, "target eigenvalue");
  rebase->add_flag("--search", opt.search, "try every eigenvalue in canonical order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kError;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out, err);
    if (delta->parsed()) return cmd_delta(opt, out);
    if (leaf->parsed()) return cmd_leaf(opt, out);
    if (kraw->parsed()) return cmd_gen("krawtchouk", opt, out);
    if (rnd->parsed()) return cmd_gen("random", opt, out);
    if (aw2->parsed()) return cmd_verify_aw2(opt, out);
    if (rebase->parsed()) return cmd_rebase(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << app.help();
  return kError;
}

}  // namespace lpkit
