#include "report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "cdecomp/error.hpp"
#include "cdecomp/normal_blowup.hpp"
#include "cdecomp/quasi_types.hpp"
#include "cdecomp/structure.hpp"

namespace cdecomp::tools
{

using nlohmann::json;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{ return std::chrono::duration<double>(Clock::now() - t).count(); }

json type_json(QPType const &t)
{
  json j;
  j["type"] = std::string(to_string(t.tag));
  j["primitive"] = t.primitive_variant ? json(std::string(primitive_name(*t.primitive_variant))) : json(nullptr);
  return j;
}

json generators_json(PermGroup const &g)
{
  json a = json::array();
  for (auto const &s : g.generators())
    a.push_back(s.to_cycle_string());
  return a;
}

/// m and l when e is the coordinate decomposition of [m]^l (coordinate 0
/// most significant), which the report writes without the point lists.
std::optional<std::pair<std::size_t, std::size_t>> product_shape(CartesianDecomposition const &e)
{
  if (!e.homogeneous())
    return std::nullopt;
  std::size_t const m = e.partition(0).size();
  std::size_t const l = e.index();
  for (Point p = 0; p < e.degree(); ++p) {
    auto t = decode_tuple(p, m, l);
    for (std::size_t i = 0; i < l; ++i)
      if (e.partition(i).cell_of(p) != t[i])
        return std::nullopt;
  }
  return std::pair{m, l};
}

CartesianDecomposition product_decomposition(std::size_t m, std::size_t l)
{
  std::size_t n = 1;
  for (std::size_t i = 0; i < l; ++i) {
    n *= m;
    if (n > std::numeric_limits<Point>::max())
      throw Error(ErrorCode::LimitExceeded, "product decomposition too large");
  }
  std::vector<Partition> parts;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::size_t> labels(n);
    for (Point p = 0; p < n; ++p)
      labels[p] = decode_tuple(p, m, l)[i];
    parts.push_back(Partition::from_labels(labels));
  }
  return validate(std::move(parts));
}

json decomposition_witness(CartesianDecomposition const &e)
{
  json j;
  if (auto shape = product_shape(e)) {
    j["product"] = {{"cells", shape->first}, {"index", shape->second}};
  } else {
    json parts = json::array();
    for (auto const &p : e.partitions())
      parts.push_back(p.to_string());
    j["partitions"] = parts;
  }
  return j;
}

json profile_json(TransitivityProfile const &p)
{
  json mins = json::array();
  for (auto const &r : p.minimal_normals)
    mins.push_back({{"order", r.subgroup.order()}, {"transitive", r.is_transitive}, {"abelian", r.is_abelian}});
  return {{"minimal_normals", mins},
          {"transitive_count", p.transitive_count},
          {"quasiprimitive", p.quasiprimitive},
          {"innately_transitive", p.innately_transitive}};
}

/// Group-level facts through either the point action or a cell group.
json group_json(std::optional<PermGroup> const &g, std::optional<CellGroup> const &cg, AnalysisOptions const &opts)
{
  json j;
  std::size_t degree = cg ? cg->decomposition().degree() : g->degree();
  bool transitive = cg ? cg->transitive_on_points(cg->group()) : is_transitive(*g);
  j["group_summary"] = {{"degree", degree},
                        {"order", cg ? cg->group().order() : g->order()},
                        {"transitive", transitive},
                        {"primitive", nullptr}};
  j["profile"] = nullptr;
  j["qp_type"] = nullptr;
  if (!transitive)
    return j;
  if (degree <= opts.max_primitivity_degree)
    j["group_summary"]["primitive"] = is_primitive(cg ? cg->lift(cg->group()) : *g);
  auto p = cg ? profile(*cg) : profile(*g);
  j["profile"] = profile_json(p);
  if (p.quasiprimitive)
    j["qp_type"] = type_json(cg ? qp_type(*cg, opts.max_primitivity_degree) : qp_type(*g));
  else
    j["qp_type_reason"] = "not quasiprimitive";
  return j;
}

json decomposition_json(std::optional<PermGroup> const &g, std::optional<CellGroup> given,
                        CartesianDecomposition const &e)
{
  json j = decomposition_witness(e);
  j["index"] = e.index();
  j["homogeneous"] = e.homogeneous();
  bool invariant = given.has_value() || is_invariant(*g, e);
  j["invariant"] = invariant;
  j["transitive_on"] = nullptr;
  j["normal"] = nullptr;
  j["blowup"] = nullptr;
  j["trichotomy"] = nullptr;
  j["components"] = json::array();
  if (!invariant)
    return j;
  CellGroup cg = given ? *given : CellGroup(*g, e);
  j["transitive_on"] = is_transitive(cg.partition_action_group());
  auto b = is_blowup(cg);
  auto cert = b.certificate ? b.certificate : is_normal_decomposition(cg);
  if (cert)
    j["normal"] = {{"witness_order", cert->witness.order()}};
  j["blowup"] = b.blowup;
  bool all_qp = true;
  for (std::size_t i = 0; i < e.index(); ++i) {
    auto c = component(cg, i);
    json cj = {{"degree", c.degree()}, {"order", c.order()}, {"qp_type", nullptr}};
    if (!is_transitive(c))
      cj["qp_type_reason"] = "intransitive";
    else if (!profile(c).quasiprimitive)
      cj["qp_type_reason"] = "not quasiprimitive";
    else
      cj["qp_type"] = type_json(qp_type(c));
    all_qp = all_qp && !cj["qp_type"].is_null();
    j["components"].push_back(cj);
  }
  if (j["transitive_on"].get<bool>() && cert && all_qp) {
    auto v = classify_trichotomy(cg);
    j["trichotomy"] = {{"case", std::string(to_string(v.kind))},
                       {"witness_order", v.witness.order()},
                       {"centralizer_order", v.centralizer.order()}};
  } else {
    j["trichotomy_reason"] = "preconditions not met (transitive, normal, quasiprimitive components)";
  }
  return j;
}

std::vector<Perm> parse_perm_list(json const &a, std::size_t degree)
{
  std::vector<Perm> gens;
  for (auto const &s : a)
    gens.push_back(parse_cycles(s.get<std::string>(), degree));
  return gens;
}

Partition parse_partition(std::string const &text, std::size_t degree)
{
  std::vector<std::vector<Point>> cells;
  std::istringstream in(text);
  char c;
  while (in >> c) {
    if (c != '{')
      throw Error(ErrorCode::ParseError, "partition text '" + text + "': expected '{'");
    std::vector<Point> cell;
    std::string tok;
    while (in >> std::ws && in.peek() != '}' && in >> tok) {
      if (tok.back() == '}') {
        tok.pop_back();
        in.unget();
      }
      cell.push_back(static_cast<Point>(std::stoul(tok)));
    }
    in.get();
    cells.push_back(std::move(cell));
  }
  return Partition(degree, std::move(cells));
}

} // namespace

json analyze(AnalysisInput const &in, AnalysisOptions const &opts)
{
  auto start = Clock::now();
  if (!in.group && !in.cells)
    throw Error(ErrorCode::InvalidSpec, "analysis input has no group");
  json r;
  r["schema"] = report_schema;
  r["name"] = in.name;

  std::vector<CartesianDecomposition> decs = in.decompositions;
  if (in.cells && decs.empty())
    decs.push_back(in.cells->decomposition());
  json input;
  if (in.group && in.group->degree() <= opts.search_options.max_degree) {
    input["degree"] = in.group->degree();
    input["generators"] = generators_json(*in.group);
  } else if (in.cells) {
    input["cell_degree"] = in.cells->group().degree();
    input["cell_generators"] = generators_json(in.cells->group());
  }
  r["input"] = input;

  if (in.group && in.group->degree() > opts.search_options.max_degree && !in.cells)
    throw Error(ErrorCode::LimitExceeded, "degree " + std::to_string(in.group->degree()) + " exceeds --max-degree " +
                                              std::to_string(opts.search_options.max_degree));

  if (opts.search) {
    if (!in.group)
      throw Error(ErrorCode::InvalidSpec, "search needs a group on points");
    auto found = search_invariant_decompositions(*in.group, opts.search_options);
    decs.insert(decs.end(), found.begin(), found.end());
  }

  // Large point groups are analysed on the cells of an invariant decomposition.
  std::optional<CellGroup> group_cells = in.cells;
  if (!group_cells && in.group && in.group->degree() > 1000)
    for (auto const &e : decs)
      if (is_invariant(*in.group, e)) {
        group_cells.emplace(*in.group, e);
        break;
      }
  auto t0 = Clock::now();
  auto gj = group_json(group_cells ? std::optional<PermGroup>{} : in.group, group_cells, opts);
  for (auto &[k, v] : gj.items())
    r[k] = v;
  double group_secs = seconds_since(t0);

  r["decompositions"] = json::array();
  json dec_secs = json::array();
  for (auto const &e : decs) {
    auto t1 = Clock::now();
    std::optional<CellGroup> given;
    if (in.cells && in.cells->decomposition() == e)
      given = in.cells;
    if (!given && !in.group)
      throw Error(ErrorCode::InvalidSpec, "a decomposition other than the cell decomposition needs a point group");
    r["decompositions"].push_back(decomposition_json(in.group, given, e));
    dec_secs.push_back(seconds_since(t1));
  }
  if (opts.timings)
    r["timings"] = {{"group_seconds", group_secs}, {"decomposition_seconds", dec_secs},
                    {"total_seconds", seconds_since(start)}};
  return r;
}

AnalysisInput input_from_report(json const &report)
{
  try {
    if (report.at("schema").get<int>() != report_schema)
      throw Error(ErrorCode::ParseError, "unsupported report schema");
    AnalysisInput in;
    in.name = report.value("name", "");
    auto const &input = report.at("input");
    std::size_t degree = report.at("group_summary").at("degree").get<std::size_t>();
    if (input.contains("generators"))
      in.group = PermGroup(degree, parse_perm_list(input.at("generators"), degree));
    for (auto const &d : report.at("decompositions")) {
      if (d.contains("product")) {
        in.decompositions.push_back(product_decomposition(d["product"].at("cells"), d["product"].at("index")));
      } else {
        std::vector<Partition> parts;
        for (auto const &p : d.at("partitions"))
          parts.push_back(parse_partition(p.get<std::string>(), degree));
        in.decompositions.push_back(validate(std::move(parts)));
      }
    }
    if (input.contains("cell_generators")) {
      if (in.decompositions.empty())
        throw Error(ErrorCode::ParseError, "cell generators without a decomposition");
      std::size_t cd = input.at("cell_degree").get<std::size_t>();
      in.cells.emplace(in.decompositions.front(), PermGroup(cd, parse_perm_list(input.at("cell_generators"), cd)));
      in.decompositions.erase(in.decompositions.begin());
    }
    return in;
  } catch (json::exception const &e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

json verdicts(json report)
{
  report.erase("timings");
  return report;
}

std::string format_report(json const &r)
{
  std::ostringstream ss;
  auto const &g = r.at("group_summary");
  ss << r.value("name", std::string("group")) << ": degree " << g["degree"] << ", order " << g["order"]
     << (g["transitive"].get<bool>() ? ", transitive" : ", intransitive");
  if (!g["primitive"].is_null())
    ss << (g["primitive"].get<bool>() ? ", primitive" : ", imprimitive");
  ss << "\n";
  if (!r["profile"].is_null()) {
    auto const &p = r["profile"];
    ss << "minimal normal subgroups:";
    for (auto const &m : p["minimal_normals"])
      ss << " " << m["order"] << (m["transitive"].get<bool>() ? "(transitive)" : "(intransitive)");
    ss << "\nquasiprimitive: " << (p["quasiprimitive"].get<bool>() ? "yes" : "no")
       << ", innately transitive: " << (p["innately_transitive"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (!r["qp_type"].is_null()) {
    ss << "type: " << r["qp_type"]["type"].get<std::string>();
    if (!r["qp_type"]["primitive"].is_null())
      ss << " (primitive " << r["qp_type"]["primitive"].get<std::string>() << ")";
    ss << "\n";
  }
  std::size_t i = 0;
  for (auto const &d : r["decompositions"]) {
    ss << "decomposition " << i++ << ": index " << d["index"] << (d["homogeneous"].get<bool>() ? ", homogeneous" : "");
    if (!d["invariant"].get<bool>()) {
      ss << ", not invariant\n";
      continue;
    }
    ss << ", transitive " << (d["transitive_on"].get<bool>() ? "yes" : "no");
    ss << ", normal " << (d["normal"].is_null() ? std::string("no") : "yes (witness order " + d["normal"]["witness_order"].dump() + ")");
    ss << ", blow-up " << (d["blowup"].get<bool>() ? "yes" : "no");
    if (!d["trichotomy"].is_null())
      ss << ", trichotomy " << d["trichotomy"]["case"].get<std::string>();
    ss << "\n";
    for (auto const &c : d["components"]) {
      ss << "  component: degree " << c["degree"] << ", order " << c["order"];
      if (!c["qp_type"].is_null())
        ss << ", type " << c["qp_type"]["type"].get<std::string>();
      else if (c.contains("qp_type_reason"))
        ss << ", " << c["qp_type_reason"].get<std::string>();
      ss << "\n";
    }
  }
  if (r.contains("timings"))
    ss << "total " << r["timings"]["total_seconds"].get<double>() << " s\n";
  return ss.str();
}

} // namespace cdecomp::tools
