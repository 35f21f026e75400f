#include "oddred/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "oddred/errors.hpp"
#include "oddred/json_io.hpp"
#include "oddred/oddred.hpp"

namespace oddred {

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string graph;
  std::string constraint;
  std::string point;
  std::string out;
  std::string csv;
  std::string family = "matching";
  std::string scope = "rank";
  std::string c_value = "0";
  int n = 0;
  std::vector<int> cycle;
  int k = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  int cap = kDefaultColumnCap;
  std::int64_t bound = 0;
  std::size_t iterations = 2000;
  std::size_t samples = 0;
  bool verify = false;
};

struct Outcome {
  std::string status;
  Json certificate;
  int exit_code = kExitOk;
  bool randomized = false;
};

// Payloads written with --out nest the graph next to the constraint or point, so a
// consumer can take the same file for both flags.
const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

Graph load_graph(const std::string& path) { return graph_from_json(unwrap(read_json_file(path), "graph")); }
RedBlueGraph load_red_blue(const std::string& path) {
  return red_blue_from_json(unwrap(read_json_file(path), "graph"));
}

CInducedSpec spec_from(const Options& o) {
  if (o.n == 0 || o.cycle.empty()) throw InvalidArgument("--n and --cycle are required");
  return CInducedSpec(o.n, o.cycle);
}

int threads_from(const Options& o) {
  if (o.threads > 0) return o.threads;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

// Base graph G of a doubled graph H: edges {u+, v-} with u != v.
Graph base_of_doubled(const Graph& h) {
  if (h.vertex_count() % 2 != 0) throw FormatError("a doubled graph has an even number of vertices");
  const int n = h.vertex_count() / 2;
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (e.u >= n || e.v < n) throw FormatError("edge " + edge_key(e) + " does not join V+ to V-");
    int u = e.u;
    int v = e.v - n;
    if (u < v) edges.emplace_back(u, v);
  }
  Graph base(n, edges);
  TransferContext check(base);
  if (check.doubled().graph().edges().size() != h.edges().size() ||
      !std::equal(h.edges().begin(), h.edges().end(), check.doubled().graph().edges().begin())) {
    throw FormatError("graph is not the doubling of a simple graph");
  }
  return base;
}

struct TransformedInput {
  TransferContext ctx;
  Constraint constraint;
  std::optional<CInducedSpec> spec;
};

TransformedInput transformed_input(const Options& o) {
  if (!o.constraint.empty()) {
    Json j = read_json_file(o.constraint);
    Graph h = o.graph.empty() ? graph_from_json(unwrap(j, "graph")) : load_graph(o.graph);
    TransferContext ctx(base_of_doubled(h));
    Constraint c = constraint_from_json(unwrap(j, "constraint"), ctx.doubled().graph());
    return {std::move(ctx), std::move(c), std::nullopt};
  }
  CInducedSpec spec = spec_from(o);
  TransferContext ctx(complete_graph(spec.n()));
  Constraint c = canonical_transform(build_c_induced(spec), ctx);
  return {std::move(ctx), std::move(c), spec};
}

Json bundle(const Json& graph, const char* key, Json payload) {
  Json j;
  j["graph"] = graph;
  j[key] = std::move(payload);
  return j;
}

Json lambda_to_json(const MuLambda& t) {
  return Json{{"mu", to_string(t.mu)}, {"lambda", rational_vector_to_json(t.lambda)}};
}

Json matching_report(const RedBlueGraph& h, const Matching& m) {
  return Json{{"edges", edge_list_to_json(h.graph(), m.edges)}, {"red_count", h.red_count(m.edges)}};
}

// ---- subcommands ----

Outcome facet_build(const Options& o) {
  CInducedSpec spec = spec_from(o);
  Graph kn = complete_graph(spec.n());
  Json payload = bundle(graph_to_json(kn), "constraint", constraint_to_json(build_c_induced(spec), kn));
  payload["s"] = spec.s();
  payload["t"] = spec.t();
  return {"built", std::move(payload)};
}

Outcome facet_certify(const Options& o) {
  CInducedSpec spec = spec_from(o);
  Graph kn = complete_graph(spec.n());
  try {
    auto cert = certify_dominant_facet(spec);
    return {"certified", certificate_to_json(cert, kn)};
  } catch (const RankShortfall& e) {
    return {"rank_shortfall", Json{{"achieved", e.achieved()}, {"required", e.required()}}, kExitCertificationFailure};
  } catch (const CertificationError& e) {
    return {"not_certified", Json{{"reason", e.what()}}, kExitCertificationFailure};
  }
}

Outcome transfer_canonical(const Options& o) {
  if (!o.constraint.empty()) {
    Json j = read_json_file(o.constraint);
    Graph g = o.graph.empty() ? graph_from_json(unwrap(j, "graph")) : load_graph(o.graph);
    Constraint c = constraint_from_json(unwrap(j, "constraint"), g);
    TransferContext ctx(g);
    auto t = canonical_transform(c, ctx);
    return {"transformed", bundle(graph_to_json(ctx.doubled()), "constraint", constraint_to_json(t, ctx.doubled().graph()))};
  }
  auto in = transformed_input(o);
  const auto& h = in.ctx.doubled();
  return {"transformed", bundle(graph_to_json(h), "constraint", constraint_to_json(in.constraint, h.graph()))};
}

Json facet_report_json(const MatchingFacetReport& r, const Graph& g) {
  Json j{{"valid", r.valid()},
         {"proper", r.proper()},
         {"polytope_dim", r.polytope_dim},
         {"face_dim", r.face_dim},
         {"vertices", r.generator_count},
         {"tight", r.tight_count}};
  if (r.violating) j["violating_matching"] = edge_list_to_json(g, r.violating->edges);
  return j;
}

Outcome transfer_certify(const Options& o) {
  RedBlueGraph h;
  Constraint c;
  if (!o.constraint.empty() && !o.graph.empty()) {
    h = load_red_blue(o.graph);
    c = constraint_from_json(unwrap(read_json_file(o.constraint), "constraint"), h.graph());
  } else if (!o.constraint.empty()) {
    Json j = read_json_file(o.constraint);
    h = red_blue_from_json(unwrap(j, "graph"));
    c = constraint_from_json(unwrap(j, "constraint"), h.graph());
  } else {
    auto in = transformed_input(o);
    h = in.ctx.doubled();
    c = in.constraint;
  }
  OddRedMatchingSet vertices(h);
  auto report = analyze_matching_facet(vertices, c);
  Json payload = facet_report_json(report, h.graph());
  if (!report.certified()) return {"not_facet", std::move(payload), kExitCertificationFailure};
  payload["certificate"] = certificate_to_json(report.certificate, h.graph());
  return {"certified", std::move(payload)};
}

BoundFamily family_from(const Options& o) {
  return o.family == "bimodular" ? BoundFamily::Bimodular : BoundFamily::Matching;
}

Outcome complexity_check(const Options& o) {
  auto in = transformed_input(o);
  const int n = in.ctx.base().vertex_count();
  auto m = to_matrix(in.constraint, in.ctx);
  auto report = check_complexity_bounds(m, n, family_from(o));
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw FormatError("cannot write '" + o.csv + "'");
    write_matrix_csv(csv, m);
  }
  Json payload{{"report", complexity_to_json(report)}, {"matrix", matrix_to_json(m)}};
  bool ok = report.ok();
  Outcome out;
  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    std::size_t violations = 0;
    Json first = nullptr;
    for (std::size_t i = 0; i < o.samples; ++i) {
      auto t = sample_integral_mu_lambda(n, rng);
      auto r = check_complexity_bounds(apply_mu_lambda(m, t), n, family_from(o));
      if (!r.ok()) {
        if (violations++ == 0) first = Json{{"sample", i}, {"transform", lambda_to_json(t)}, {"report", complexity_to_json(r)}};
      }
    }
    payload["samples"] = Json{{"count", o.samples}, {"violations", violations}, {"first_violation", first}};
    ok = ok && violations == 0;
    out.randomized = true;
  }
  out.status = ok ? "bounds_hold" : "bounds_violated";
  out.certificate = std::move(payload);
  out.exit_code = ok ? kExitOk : kExitCertificationFailure;
  return out;
}

Outcome complexity_reduce(const Options& o) {
  CInducedSpec spec = spec_from(o);
  TransferContext ctx(complete_graph(spec.n()));
  auto t = canonical_transform(build_c_induced(spec), ctx);
  auto lambda = build_low_complexity_lambda(spec);
  auto reduced = apply_mu_lambda(t, lambda, ctx);
  auto m = to_matrix(reduced, ctx);
  auto params = shift_parameters(spec.n());
  auto distinct = count_distinct(m.values());
  auto bound = distinct_count_bound(spec.n(), params);
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw FormatError("cannot write '" + o.csv + "'");
    write_matrix_csv(csv, m);
  }
  Json payload = bundle(graph_to_json(ctx.doubled()), "constraint", constraint_to_json(reduced, ctx.doubled().graph()));
  payload["transform"] = lambda_to_json(lambda);
  payload["m1"] = params.m1;
  payload["m2"] = params.m2;
  payload["distinct_before"] = count_distinct(to_matrix(t, ctx).values());
  payload["distinct"] = distinct;
  payload["bound"] = to_string(bound);
  payload["report"] = complexity_to_json(check_complexity_bounds(m, spec.n()));
  bool ok = Rational(static_cast<long>(distinct)) <= bound;
  if (o.verify) {
    bool same = same_face_check(t, reduced, ctx);
    payload["same_face"] = same;
    ok = ok && same;
  }
  return {ok ? "reduced" : "reduction_check_failed", std::move(payload), ok ? kExitOk : kExitCertificationFailure};
}

Outcome complexity_search(const Options& o) {
  auto in = transformed_input(o);
  const int n = in.ctx.base().vertex_count();
  auto m = to_matrix(in.constraint, in.ctx);
  auto result = search_low_complexity(m, o.bound > 0 ? o.bound : n, o.seed, o.iterations);
  Json payload{{"start_distinct", result.start_distinct},
               {"best_distinct", result.best_distinct},
               {"evaluations", result.evaluations},
               {"transform", lambda_to_json(result.best)},
               {"note", "heuristic search; best_distinct is an observed value, not a proven minimum"}};
  Outcome out{"searched", std::move(payload)};
  out.randomized = true;
  return out;
}

Outcome label_membership(const Options& o) {
  if (o.graph.empty() || o.point.empty()) throw InvalidArgument("--graph and --point are required");
  auto h = load_red_blue(o.graph);
  auto x = point_from_json(unwrap(read_json_file(o.point), "point"), h.graph());
  auto r = q_membership(h, x, threads_from(o));
  Json payload = membership_to_json(r, h.graph());
  std::string status = payload["status"];
  return {status, std::move(payload)};
}

Outcome label_counterexample(const Options& o) {
  auto ce = build_counterexample();
  const Graph& g = ce.graph.graph();
  Json payload = bundle(graph_to_json(ce.graph), "point", point_to_json(ce.point, g));
  if (!o.verify) return {"built", std::move(payload)};
  bool in_q = std::holds_alternative<InQ>(q_membership(ce.graph, ce.point, threads_from(o)));
  auto matchings = enumerate_odd_red_perfect_matchings(ce.graph);
  std::vector<RationalVector> generators;
  for (const auto& m : matchings) generators.push_back(incidence_vector(g.edge_count(), m.edges));
  auto membership = conv_membership(generators, ce.point);
  bool in_p = std::holds_alternative<Inside>(membership);
  int e37 = g.require_edge(2, 6);
  bool unused = std::none_of(matchings.begin(), matchings.end(), [&](const Matching& m) {
    return std::binary_search(m.edges.begin(), m.edges.end(), e37);
  });
  Json verify{{"y_in_Q", in_q},
              {"y_in_P", in_p},
              {"odd_red_matchings", matchings.size()},
              {"edge_2-6_in_no_odd_red_matching", unused}};
  if (auto* sep = std::get_if<Outside>(&membership)) {
    verify["separator"] = constraint_to_json(sep->separator, g);
  }
  payload["verify"] = std::move(verify);
  bool ok = in_q && !in_p && unused;
  return {ok ? "verified" : "verification_failed", std::move(payload), ok ? kExitOk : kExitCertificationFailure};
}

Outcome reduce_maxcut(const Options& o) {
  if (o.graph.empty()) throw InvalidArgument("--graph is required");
  Graph g = load_graph(o.graph);
  auto inst = reduce_maxcut_to_separation(g, o.k);
  Json payload = bundle(graph_to_json(inst.doubled), "point", point_to_json(inst.point, inst.doubled.graph()));
  payload["k"] = inst.k;
  payload["alpha"] = to_string(inst.alpha);
  if (!o.verify) return {"reduced", std::move(payload)};
  int best = brute_force_max_cut(g);
  auto membership = q_membership(inst.doubled, inst.point, threads_from(o));
  bool violated = std::holds_alternative<LabelViolation>(membership);
  bool consistent = violated == (best >= o.k);
  payload["verify"] = Json{{"max_cut", best},
                           {"cut_at_least_k", best >= o.k},
                           {"membership", membership_to_json(membership, inst.doubled.graph())},
                           {"consistent", consistent}};
  return {consistent ? "verified" : "verification_failed", std::move(payload),
          consistent ? kExitOk : kExitCertificationFailure};
}

Outcome bimodular_build(const Options& o) {
  if (o.graph.empty()) throw InvalidArgument("--graph is required");
  auto h = load_red_blue(o.graph);
  return {"built", system_to_json(build_bimodular_system(h))};
}

Outcome bimodular_check(const Options& o) {
  if (o.graph.empty()) throw InvalidArgument("--graph is required");
  auto h = load_red_blue(o.graph);
  auto scope = o.scope == "nonnegativity" ? MinorScope::EdgeNonnegativity : MinorScope::SystemRank;
  auto r = check_bimodularity(build_bimodular_system(h), o.cap, scope);
  Json payload = bimodularity_to_json(r);
  payload["scope"] = o.scope;
  return {r.ok ? "bimodular" : "minor_out_of_range", std::move(payload), r.ok ? kExitOk : kExitCertificationFailure};
}

Outcome bimodular_translate(const Options& o) {
  if (o.constraint.empty()) throw InvalidArgument("--constraint is required");
  Json j = read_json_file(o.constraint);
  RedBlueGraph h = o.graph.empty() ? red_blue_from_json(unwrap(j, "graph")) : load_red_blue(o.graph);
  Constraint ab = constraint_from_json(unwrap(j, "constraint"), h.graph());
  Rational c = parse_rational(o.c_value);
  auto translated = translate_facet(ab.coefficients, c, ab.rhs, h);
  translated.sense = ab.sense;
  return {"translated", bundle(graph_to_json(h), "constraint", constraint_to_json(translated, h.graph()))};
}

Outcome solve(const Options& o) {
  if (o.graph.empty()) throw InvalidArgument("--graph is required");
  auto h = load_red_blue(o.graph);
  auto r = solve_odd_red_pm(h);
  Json payload{{"iterations", r.iterations}};
  if (auto* m = std::get_if<Matching>(&r.outcome)) {
    payload["matching"] = matching_report(h, *m);
    return {"found", std::move(payload)};
  }
  if (std::holds_alternative<NoOddRedMatching>(r.outcome)) {
    return {"no_odd_red_matching", std::move(payload), kExitNoOddRed};
  }
  return {"no_perfect_matching", std::move(payload), kExitNoPerfectMatching};
}

struct Registered {
  std::string name;
  CLI::App* app;
  std::function<Outcome(const Options&)> run;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Odd-red perfect matching polytope toolkit"};
  app.require_subcommand(1);
  std::vector<Registered> commands;
  std::vector<std::pair<std::string, std::string*>> file_flags;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of vertices of K_n (odd, >= 5)");
    sub->add_option("--cycle", o.cycle, "vertices of the (n-2)-cycle")->delimiter(',');
  };
  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph JSON file"); };
  auto add_constraint = [&](CLI::App* sub) { sub->add_option("--constraint", o.constraint, "constraint JSON file"); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  };
  auto add_verify = [&](CLI::App* sub) { sub->add_flag("--verify", o.verify, "run the desk-scale checks"); };
  auto add_csv = [&](CLI::App* sub) { sub->add_option("--csv", o.csv, "write the coefficient matrix as CSV"); };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };

  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help,
                     std::function<Outcome(const Options&)> run) {
    auto* sub = parent->add_subcommand(name, help);
    std::string full = parent == &app ? name : parent->get_name() + " " + name;
    commands.push_back({full, sub, std::move(run)});
    return sub;
  };

  auto* facet = group("facet", "C-induced constraints of the odd cycle dominant");
  add_spec(command(facet, "build-c-induced", "write the C-induced constraint", facet_build));
  add_spec(command(facet, "certify-dominant", "certify the constraint as a facet of the dominant", facet_certify));

  auto* transfer = group("transfer", "lift constraints to the doubled graph");
  auto* canonical = command(transfer, "canonical", "canonical transformation", transfer_canonical);
  add_spec(canonical);
  add_graph(canonical);
  add_constraint(canonical);
  auto* certify = command(transfer, "certify", "certify a facet of the odd-red matching polytope", transfer_certify);
  add_spec(certify);
  add_graph(certify);
  add_constraint(certify);

  auto* complexity = group("complexity", "coefficient complexity of transformed constraints");
  auto* check = command(complexity, "check", "max-abs and distinct-count bounds", complexity_check);
  add_spec(check);
  add_graph(check);
  add_constraint(check);
  add_csv(check);
  add_seed(check);
  check->add_option("--samples", o.samples, "random integral mu/lambda images to test");
  check->add_option("--family", o.family, "bound family")->check(CLI::IsMember({"matching", "bimodular"}));
  auto* reduce_cmd = command(complexity, "reduce", "apply the low-complexity shift", complexity_reduce);
  add_spec(reduce_cmd);
  add_csv(reduce_cmd);
  add_verify(reduce_cmd);
  auto* search = command(complexity, "search", "heuristic search for fewer distinct entries", complexity_search);
  add_spec(search);
  add_graph(search);
  add_constraint(search);
  add_seed(search);
  search->add_option("--bound", o.bound, "lambda entries range over [-B, B]; default n");
  search->add_option("--iterations", o.iterations, "search steps");

  auto* label = group("label", "label constraint relaxation");
  auto* membership = command(label, "membership", "decide membership in Q", label_membership);
  add_graph(membership);
  membership->add_option("--point", o.point, "point JSON file");
  add_threads(membership);
  auto* counter = command(label, "counterexample", "the point in Q outside P", label_counterexample);
  add_verify(counter);
  add_threads(counter);

  auto* reduce = group("reduce", "hardness reductions");
  auto* maxcut = command(reduce, "maxcut", "cubic max-cut to Q separation", reduce_maxcut);
  add_graph(maxcut);
  maxcut->add_option("--k", o.k, "cut size threshold");
  add_verify(maxcut);
  add_threads(maxcut);

  auto* bimodular = group("bimodular", "bimodular formulation");
  add_graph(command(bimodular, "build", "build the system", bimodular_build));
  auto* bcheck = command(bimodular, "check", "enumerate maximal subdeterminants", bimodular_check);
  add_graph(bcheck);
  bcheck->add_option("--cap", o.cap, "column limit");
  bcheck->add_option("--scope", o.scope, "rank: r x r minors; nonnegativity: with -I rows for x >= 0")
      ->check(CLI::IsMember({"rank", "nonnegativity"}));
  auto* translate = command(bimodular, "translate", "map a face (a, c, b) to the edge space", bimodular_translate);
  add_graph(translate);
  add_constraint(translate);
  translate->add_option("--c", o.c_value, "coefficient of y");

  auto* solve_cmd = command(&app, "solve", "find an odd-red perfect matching", solve);
  add_graph(solve_cmd);

  for (auto& reg : commands) {
    reg.app->add_option("--out", o.out, "also write the payload to this file");
    if (!reg.app->get_option_no_throw("--seed")) add_seed(reg.app);
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Registered* chosen = nullptr;
  for (const auto& reg : commands) {
    if (reg.app->parsed()) chosen = &reg;
  }
  if (!chosen) {
    err << app.help();
    return kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Json inputs;
    inputs["command"] = chosen->name;
    Json flags = Json::object();
    Json files = Json::object();
    for (const auto* opt : chosen->app->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--out") continue;
      auto results = opt->results();
      flags[opt->get_name()] = results;
      if (opt->get_name() == "--graph" || opt->get_name() == "--constraint" || opt->get_name() == "--point") {
        for (const auto& path : results) files[path] = sha256_hex(read_file(path));
      }
    }
    inputs["flags"] = flags;
    inputs["files"] = files;
    std::string digest = sha256_hex(inputs.dump());

    Outcome result = chosen->run(o);
    Json report;
    report["command"] = chosen->name;
    report["inputs_digest"] = digest;
    report["outcome"] = result.status;
    report["certificate"] = result.certificate;
    if (result.randomized) report["seed"] = o.seed;
    out << report.dump(2) << "\n";
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) throw FormatError("cannot write '" + o.out + "'");
      f << result.certificate.dump(2) << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << chosen->name << ": " << result.status << " (" << std::fixed << std::setprecision(3) << secs << " s)\n";
    return result.exit_code;
  } catch (const FormatError& e) {
    err << chosen->name << ": data error: " << e.what() << "\n";
    return kExitDataFormat;
  } catch (const DimensionMismatch& e) {
    err << chosen->name << ": data error: " << e.what() << "\n";
    return kExitDataFormat;
  } catch (const InvalidArgument& e) {
    err << chosen->name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    err << chosen->name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificationError& e) {
    err << chosen->name << ": certification failed: " << e.what() << "\n";
    return kExitCertificationFailure;
  } catch (const ValidityError& e) {
    err << chosen->name << ": " << e.what() << "\n";
    return kExitCertificationFailure;
  }
}

}  // namespace oddred
