#include "cli.hpp"

#include "hbtensor/error.hpp"
#include "hbtensor/io.hpp"
#include "hbtensor/paths.hpp"
#include "hbtensor/spectral.hpp"
#include "hbtensor/tensor.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hbtensor::cli {

using nlohmann::ordered_json;

std::uint64_t dense_limit_from_env() {
  if (const char* env = std::getenv("HBTENSOR_MAX_DENSE")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
    }
  }
  return kDefaultDenseLimit;
}

namespace {

void emit(const Command& cmd, std::ostream& out, const std::string& content) {
  if (cmd.out) {
    io::write_file(*cmd.out, content);
  } else {
    out << content;
  }
}

ordered_json number_json(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).convert_to<std::int64_t>();
  return to_string(q);
}

std::string label_list(const HbGraph& h, const std::vector<std::size_t>& vertices) {
  std::string s;
  for (std::size_t v : vertices) s += (s.empty() ? "" : " ") + h.vertices()[v];
  return s.empty() ? "-" : s;
}

Approach require_approach(const Command& cmd) {
  if (!cmd.approach) throw Error(ErrorKind::Precondition, "--approach {str|sil|lay} is required");
  return *cmd.approach;
}

std::string tensor_text(const SymTensor& t, const std::string& format, bool full) {
  if (format == "json") return io::tensor_to_json(t);
  std::ostringstream os;
  io::write_coo(os, t, full ? CooMode::full : CooMode::canonical, dense_limit_from_env());
  return os.str();
}

SymTensor read_tensor_file(const std::string& path) {
  const std::string text = io::read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return io::tensor_from_json(text);
  std::istringstream is(text);
  return io::read_coo(is);
}

int cmd_info(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  const bool has_edges = h.size() != 0;
  const Rational range = has_edges ? m_range(h) : Rational(0);
  const Rational corange = has_edges ? m_corange(h) : Rational(0);
  const bool uniform = has_edges && range == corange;
  bool regular = h.num_vertices() != 0;
  for (std::size_t v = 1; v < h.num_vertices() && regular; ++v) regular = m_degree(h, v) == m_degree(h, 0);

  if (cmd.format == "json") {
    ordered_json doc;
    doc["order"] = number_json(order(h));
    doc["size"] = h.size();
    doc["m_range"] = number_json(range);
    doc["m_corange"] = number_json(corange);
    doc["natural"] = h.natural();
    doc["m_uniform"] = uniform;
    doc["m_regular"] = regular;
    ordered_json isolated = ordered_json::array();
    for (std::size_t v : isolated_vertices(h)) isolated.push_back(h.vertices()[v]);
    doc["isolated"] = std::move(isolated);
    ordered_json vertices = ordered_json::array();
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
      vertices.push_back({{"id", h.vertices()[v]},
                          {"m_degree", number_json(m_degree(h, v))},
                          {"degree", degree(h, v)},
                          {"max_mult", number_json(max_multiplicity(h, v))}});
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (std::size_t j = 0; j < h.size(); ++j) edges.push_back(number_json(h.edge(j).m_cardinality()));
    doc["edge_m_cardinality"] = std::move(edges);
    emit(cmd, out, doc.dump(2) + "\n");
    return kOk;
  }

  std::ostringstream os;
  os << "order: " << to_string(order(h)) << "\n";
  os << "size: " << h.size() << "\n";
  os << "m_range: " << (has_edges ? to_string(range) : "-") << "\n";
  os << "m_corange: " << (has_edges ? to_string(corange) : "-") << "\n";
  os << "natural: " << (h.natural() ? "yes" : "no") << "\n";
  os << "m_uniform: " << (uniform ? "yes" : "no") << "\n";
  os << "m_regular: " << (regular ? "yes" : "no") << "\n";
  os << "isolated: " << label_list(h, isolated_vertices(h)) << "\n";
  os << "vertex,m_degree,degree,max_mult\n";
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    os << h.vertices()[v] << "," << to_string(m_degree(h, v)) << "," << degree(h, v) << ","
       << to_string(max_multiplicity(h, v)) << "\n";
  }
  os << "incidence:\n" << io::incidence_to_csv(h);
  emit(cmd, out, os.str());
  return kOk;
}

int cmd_dual(const Command& cmd, std::ostream& out) {
  emit(cmd, out, io::hbgraph_to_json(dual(io::hbgraph_from_json(io::read_file(cmd.input)))));
  return kOk;
}

int cmd_uniformize(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  const auto result = uniformize(h, require_approach(cmd));
  emit(cmd, out, io::hbgraph_to_json(result.graph));
  if (cmd.trace_out) io::write_file(*cmd.trace_out, io::trace_to_json(result.trace));
  return kOk;
}

int cmd_tensor(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  const auto [tensor, trace] = e_adjacency_tensor(h, require_approach(cmd));
  emit(cmd, out, tensor_text(tensor, cmd.format, cmd.full));
  if (cmd.trace_out) io::write_file(*cmd.trace_out, io::trace_to_json(trace));
  return kOk;
}

ordered_json report_json(const SpectralBoundReport& r) {
  ordered_json doc;
  doc["approach"] = std::string(to_string(r.approach));
  doc["r_h"] = r.r_h;
  doc["delta"] = number_json(r.delta);
  doc["delta_star"] = number_json(r.delta_star);
  doc["bound"] = number_json(r.bound);
  doc["delta_star_closed_form"] = r.delta_star_closed ? number_json(*r.delta_star_closed) : ordered_json();
  doc["empirical_lambda"] = r.empirical_lambda ? ordered_json(*r.empirical_lambda) : ordered_json();
  doc["converged"] = r.converged;
  return doc;
}

bool is_hypergraph(const HbGraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(), [](const Multiset& e) {
    return std::all_of(e.entries().begin(), e.entries().end(), [](const auto& m) { return m.second == 1; });
  });
}

bool same_edge_family(const HbGraph& a, const HbGraph& b) {
  if (!same_universe(a.universe(), b.universe()) || a.size() != b.size()) return false;
  std::vector<std::map<std::size_t, Rational>> ea;
  std::vector<std::map<std::size_t, Rational>> eb;
  for (const auto& e : a.edges()) ea.push_back(e.entries());
  for (const auto& e : b.edges()) eb.push_back(e.entries());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

int cmd_verify(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  const Approach approach = require_approach(cmd);
  AdjacencyTensor built = [&] {
    if (!cmd.from_tensor) return e_adjacency_tensor(h, approach);
    if (!cmd.trace_in) throw Error(ErrorKind::Precondition, "--from-tensor needs --trace");
    return AdjacencyTensor{read_tensor_file(*cmd.from_tensor), io::trace_from_json(io::read_file(*cmd.trace_in))};
  }();
  const SymTensor& t = built.tensor;
  const UniformisationTrace& trace = built.trace;

  ordered_json checks = ordered_json::object();
  ordered_json details = ordered_json::object();
  bool all_pass = true;
  auto record = [&](const char* name, auto&& check) {
    bool ok = false;
    try {
      ok = check();
    } catch (const Error& e) {
      details[name] = e.what();
    }
    checks[name] = ok;
    all_pass = all_pass && ok;
  };

  record("shape", [&] { return t.order() == trace.r_h && t.dim() == trace.dim() && trace.n() == h.num_vertices(); });
  record("degree_retrieval", [&] {
    for (std::size_t i = 0; i < h.num_vertices(); ++i) {
      if (row_sum(t, i) != m_degree(h, i)) return false;
    }
    return true;
  });
  record("total_sum", [&] {
    Rational total = 0;
    for (std::size_t i = 0; i < t.dim(); ++i) total += row_sum(t, i);
    return total == Rational(trace.r_h) * h.size();
  });
  record("edge_distribution", [&] {
    std::map<unsigned, BigInt> truth;
    for (const auto& e : h.edges()) truth[to_natural(e.m_cardinality())] += 1;
    auto recovered = edge_distribution(t, trace, h.size());
    ordered_json dist = ordered_json::object();
    for (const auto& [r, c] : recovered) dist[std::to_string(r)] = c.convert_to<std::int64_t>();
    details["edge_distribution"] = std::move(dist);
    return recovered == truth;
  });
  record("reconstruction", [&] { return same_edge_family(reconstruct(t, trace), h); });
  if (approach == Approach::silo && is_hypergraph(h)) {
    record("hypergraph_reduction", [&] { return hypergraph_tensor(h).tensor == t; });
  }

  SpectralBoundReport bound;
  bool have_bound = false;
  record("spectral_bound", [&] {
    bound = spectral_bound(t, trace);
    have_bound = true;
    if (t.order() >= 2) {
      PowerIterationOptions opts;
      opts.seed = cmd.seed;
      opts.max_iterations = cmd.iterations;
      const auto est = estimate_max_eigenvalue(t, opts);
      bound.empirical_lambda = est.lambda;
      bound.converged = est.converged;
      if (est.lambda > to_double(bound.bound) + 1e-6) return false;
    }
    return !bound.delta_star_closed || *bound.delta_star_closed == bound.delta_star;
  });

  if (cmd.bound_only) {
    if (!have_bound) throw Error(ErrorKind::TraceMismatch, details.value("spectral_bound", "bound unavailable"));
    emit(cmd, out, report_json(bound).dump(2) + "\n");
    return all_pass ? kOk : kCheckFailed;
  }

  ordered_json doc;
  doc["approach"] = std::string(to_string(approach));
  doc["pass"] = all_pass;
  doc["checks"] = std::move(checks);
  doc["details"] = std::move(details);
  if (have_bound) doc["spectral"] = report_json(bound);
  emit(cmd, out, doc.dump(2) + "\n");
  return all_pass ? kOk : kCheckFailed;
}

std::string distance_text(std::optional<std::size_t> d) { return d ? std::to_string(*d) : "inf"; }

int cmd_paths(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  ordered_json doc;
  if (cmd.from_vertex || cmd.to_vertex) {
    if (!cmd.from_vertex || !cmd.to_vertex) throw Error(ErrorKind::Precondition, "--from and --to go together");
    doc["distance"] = distance_text(distance(h, h.vertex_index(*cmd.from_vertex), h.vertex_index(*cmd.to_vertex)));
  }
  ordered_json components = ordered_json::array();
  for (const auto& c : connected_components(h)) {
    ordered_json ids = ordered_json::array();
    for (std::size_t v : c) ids.push_back(h.vertices()[v]);
    components.push_back(std::move(ids));
  }
  doc["components"] = std::move(components);
  doc["connected"] = is_connected(h);
  doc["diameter"] = distance_text(diameter(h));
  emit(cmd, out, doc.dump(2) + "\n");
  return kOk;
}

int cmd_export(const Command& cmd, std::ostream& out) {
  const HbGraph h = io::hbgraph_from_json(io::read_file(cmd.input));
  if (cmd.format == "csv") {
    emit(cmd, out, io::incidence_to_csv(h));
  } else if (cmd.format == "coo") {
    const auto built = e_adjacency_tensor(h, require_approach(cmd));
    emit(cmd, out, tensor_text(built.tensor, "coo", cmd.full));
    if (cmd.trace_out) io::write_file(*cmd.trace_out, io::trace_to_json(built.trace));
  } else {
    emit(cmd, out, io::hbgraph_to_json(h));
  }
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParseError;
    default: return kPreconditionError;
  }
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::info: return cmd_info(cmd, out);
      case Verb::dual: return cmd_dual(cmd, out);
      case Verb::uniformize: return cmd_uniformize(cmd, out);
      case Verb::tensor: return cmd_tensor(cmd, out);
      case Verb::verify: return cmd_verify(cmd, out);
      case Verb::paths: return cmd_paths(cmd, out);
      case Verb::export_: return cmd_export(cmd, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyper-bag-graph metrics and e-adjacency tensors", "hbtensor"};
  app.require_subcommand(1);

  Command cmd;
  std::string approach_text;
  const std::map<std::string, std::string> approaches{{"str", "str"}, {"sil", "sil"}, {"lay", "lay"},
                                                      {"straightforward", "str"}, {"silo", "sil"},
                                                      {"layered", "lay"}};

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", cmd.input, "hb-graph JSON file")->required(); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", cmd.out, "output file (stdout by default)"); };
  auto add_approach = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--approach,-a", approach_text, "str|sil|lay")
                    ->transform(CLI::CheckedTransformer(approaches, CLI::ignore_case));
    if (required) opt->required();
  };

  auto* info = app.add_subcommand("info", "structural metrics of an hb-graph");
  add_input(info);
  add_out(info);
  info->add_option("--format", cmd.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* dual_cmd = app.add_subcommand("dual", "dual hb-graph as JSON");
  add_input(dual_cmd);
  add_out(dual_cmd);

  auto* uni = app.add_subcommand("uniformize", "m-uniformized hb-graph and its trace");
  add_input(uni);
  add_out(uni);
  add_approach(uni, true);
  uni->add_option("--trace", cmd.trace_out, "trace JSON output file");

  auto* ten = app.add_subcommand("tensor", "e-adjacency tensor");
  add_input(ten);
  add_out(ten);
  add_approach(ten, true);
  ten->add_option("--format", cmd.format, "coo|json")->check(CLI::IsMember({"coo", "json"}));
  ten->add_option("--trace", cmd.trace_out, "trace JSON output file");
  ten->add_flag("--full", cmd.full, "expand every index permutation (size guarded)");

  auto* ver = app.add_subcommand("verify", "check the tensor identities against the hb-graph");
  add_input(ver);
  add_out(ver);
  add_approach(ver, true);
  ver->add_option("--from-tensor", cmd.from_tensor, "check this tensor file instead of building one");
  ver->add_option("--trace", cmd.trace_in, "trace JSON for --from-tensor");
  ver->add_flag("--bound", cmd.bound_only, "print only the spectral bound report");
  ver->add_option("--seed", cmd.seed, "power iteration seed");
  ver->add_option("--iterations", cmd.iterations, "power iteration cap");

  auto* pth = app.add_subcommand("paths", "distance, components and diameter");
  add_input(pth);
  add_out(pth);
  pth->add_option("--from", cmd.from_vertex, "source vertex id");
  pth->add_option("--to", cmd.to_vertex, "target vertex id");

  auto* exp = app.add_subcommand("export", "re-emit the hb-graph as json, incidence csv or tensor coo");
  add_input(exp);
  add_out(exp);
  add_approach(exp, false);
  exp->add_option("--format", cmd.format, "json|coo|csv")->check(CLI::IsMember({"json", "coo", "csv"}));
  exp->add_option("--trace", cmd.trace_out, "trace JSON output file (coo only)");
  exp->add_flag("--full", cmd.full, "expand every index permutation (size guarded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  const std::pair<CLI::App*, Verb> verbs[] = {{info, Verb::info},       {dual_cmd, Verb::dual}, {uni, Verb::uniformize},
                                              {ten, Verb::tensor},      {ver, Verb::verify},    {pth, Verb::paths},
                                              {exp, Verb::export_}};
  for (const auto& [sub, verb] : verbs) {
    if (sub->parsed()) cmd.verb = verb;
  }
  if (!approach_text.empty()) cmd.approach = parse_approach(approach_text);
  return execute(cmd, out, err);
}

}  // namespace hbtensor::cli
