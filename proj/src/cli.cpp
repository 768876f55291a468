#include "defreg/cli.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace defreg::cli {

using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

template <class Int>
std::optional<Int> parse_uint(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty())
    return std::nullopt;
  return value;
}

std::string read_source(const InputSource& source) {
  if (source.kind == InputSource::Kind::Inline)
    return source.value;
  std::ifstream in(source.value, std::ios::binary);
  if (!in)
    throw ParseError("cannot open input file '" + source.value + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string lattice_name(LatticeStatus s) {
  return s == LatticeStatus::VerifiedStructural ? "verified-structural" : "assumed";
}

std::string check_name(CheckStatus s) {
  switch (s) {
  case CheckStatus::Holds:
    return "holds";
  case CheckStatus::Fails:
    return "fails";
  case CheckStatus::NotCheckable:
    return "not-checkable";
  }
  return "unknown";
}

ordered_json bound_json(const ExtendedInt& b) {
  if (b.is_neg_inf())
    return ordered_json{{"tag", "neg_inf"}};
  return ordered_json{{"tag", "finite"}, {"value", b.value()}};
}

std::string id_list(const AnalysisPoset& poset, const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i)
    s += (i ? ", " : "") + poset.element(members[i]).id;
  return s + "}";
}

} // namespace

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "rationals" || text == "Q")
    return FieldSpec::rationals();
  if (text.starts_with("gf:")) {
    const auto p = parse_uint<std::uint64_t>(text.substr(3));
    if (!p)
      throw ParseError("invalid field characteristic in '" + std::string(text) + "'");
    return FieldSpec::prime_field(*p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected rational or gf:P)");
}

RingContext parse_vars(std::string_view text) {
  std::vector<std::string> names;
  for (auto part : split(text, ','))
    names.emplace_back(part);
  if (names.size() == 1 && names.front().empty())
    throw ParseError("no variables declared");
  for (const auto& n : names)
    if (n.empty() || n.find_first_of("*^ \t") != std::string::npos)
      throw ParseError("invalid variable name '" + n + "'");
  return RingContext(std::move(names));
}

SquarefreeIdeal parse_monomial(const RingContext& ring, std::string_view gens) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < ring.nvars(); ++i)
    index.emplace(ring.var_names()[i], i);
  if (trim(gens).empty())
    throw ZeroIdeal("no generators given");
  std::vector<IndexSet> generators;
  for (auto gen : split(gens, ',')) {
    if (gen.empty())
      throw ParseError("empty generator in '" + std::string(gens) + "'");
    if (gen == "1")
      throw ParseError("the unit monomial generates the whole ring");
    IndexSet vars;
    for (auto factor : split(gen, '*')) {
      std::string_view name = factor;
      if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
        name = trim(factor.substr(0, caret));
        const auto exp = parse_uint<unsigned>(trim(factor.substr(caret + 1)));
        if (!exp)
          throw ParseError("invalid exponent in '" + std::string(factor) + "'");
        if (*exp != 1)
          throw NonSquarefree("generator '" + std::string(gen) + "' is not squarefree");
      }
      auto it = index.find(std::string(name));
      if (it == index.end())
        throw UnknownVariable("unknown variable '" + std::string(name) + "' in generator '" + std::string(gen) + "'");
      if (std::find(vars.begin(), vars.end(), it->second) != vars.end())
        throw NonSquarefree("generator '" + std::string(gen) + "' repeats variable '" + std::string(name) + "'");
      vars.push_back(it->second);
    }
    generators.push_back(make_index_set(std::move(vars)));
  }
  return SquarefreeIdeal(ring, std::move(generators));
}

Graph parse_graph(std::string_view text) {
  std::optional<std::uint32_t> n;
  std::vector<Graph::Edge> edges;
  std::size_t line_no = 0;
  bool seen_content = false;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!seen_content && line.starts_with("format")) {
      seen_content = true;
      auto rest = trim(line.substr(6));
      if (rest.starts_with(":"))
        rest = trim(rest.substr(1));
      if (parse_uint<int>(rest) != kFormatVersion)
        throw ParseError(where + "unsupported format version '" + std::string(rest) + "'");
      continue;
    }
    seen_content = true;
    std::istringstream fields{std::string(line)};
    std::string a;
    std::string b;
    std::string extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra))
      throw ParseError(where + "expected two fields, got '" + std::string(line) + "'");
    if (!n) {
      const auto count = parse_uint<std::uint32_t>(b);
      if (a != "n" || !count || *count == 0)
        throw ParseError(where + "expected header 'n <count>'");
      n = *count;
      continue;
    }
    const auto u = parse_uint<std::uint32_t>(a);
    const auto v = parse_uint<std::uint32_t>(b);
    if (!u || !v)
      throw ParseError(where + "invalid edge '" + std::string(line) + "'");
    if (!(1 <= *u && *u < *v && *v <= *n))
      throw ParseError(where + "edge must satisfy 1 <= u < v <= " + std::to_string(*n));
    edges.emplace_back(*u, *v);
  }
  if (!n)
    throw ParseError("missing header 'n <count>'");
  return Graph(*n, std::move(edges));
}

AnalysisPoset parse_poset_doc(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("poset document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object())
      throw ParseError("poset document must be a JSON object");
    if (!doc.contains("format") || doc.at("format").get<int>() != kFormatVersion)
      throw ParseError("poset document needs \"format\": 1");
    std::optional<RingContext> ring;
    if (doc.contains("nvars")) {
      const auto nvars = doc.at("nvars").get<std::size_t>();
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= nvars; ++i)
        names.push_back("x" + std::to_string(i));
      ring = RingContext(std::move(names));
    }
    const auto& elements = doc.at("elements");
    if (!elements.is_array() || elements.empty())
      throw ParseError("poset document has no elements");

    std::vector<IdealNode> nodes;
    std::map<std::string, std::size_t> index;
    for (const auto& e : elements) {
      IdealNode node;
      node.id = e.at("id").get<std::string>();
      if (node.id.empty())
        throw ParseError("element with empty id");
      const auto dim = e.at("dim").get<long long>();
      if (dim < 0)
        throw ParseError("element '" + node.id + "' has negative dim");
      node.dim = static_cast<std::size_t>(dim);
      if (e.contains("height")) {
        const auto h = e.at("height").get<long long>();
        if (h < 0)
          throw ParseError("element '" + node.id + "' has negative height");
        node.height = static_cast<std::size_t>(h);
      }
      node.is_cm = e.value("cm", true);
      node.is_prime = true;
      node.repr = AbstractLabel{e.value("label", node.id)};
      if (!index.emplace(node.id, nodes.size()).second)
        throw DuplicateId("duplicate element id '" + node.id + "'");
      nodes.push_back(std::move(node));
    }

    const std::size_t n = nodes.size();
    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      leq[i * n + i] = 1;
    if (doc.contains("relations")) {
      for (const auto& r : doc.at("relations")) {
        if (!r.is_array() || r.size() != 2)
          throw ParseError("each relation must be a pair [a, b]");
        const auto a = r.at(0).get<std::string>();
        const auto b = r.at(1).get<std::string>();
        if (!index.contains(a) || !index.contains(b))
          throw UnknownElement("relation mentions unknown element '" + (index.contains(a) ? b : a) + "'");
        leq[index[a] * n + index[b]] = 1;
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j])
              leq[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq[i * n + j] && leq[j * n + i])
          throw CyclicRelations("relations form a cycle through '" + nodes[i].id + "' and '" + nodes[j].id + "'");
    return AnalysisPoset(std::move(nodes), std::move(leq), std::move(ring));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed poset document: ") + e.what());
  }
}

ordered_json report_to_json(const AnalysisPoset& poset, const BoundReport& report, const ReportToggles& toggles) {
  ordered_json out;
  out["format"] = kFormatVersion;
  out["ring"] = {{"nvars", report.ring ? ordered_json(report.ring->nvars()) : ordered_json(nullptr)}};
  out["field"] = report.field.to_string();

  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& e = poset.element(i);
    elements.push_back({{"id", e.id},
                        {"dim", e.dim},
                        {"height", e.height ? ordered_json(*e.height) : ordered_json(nullptr)},
                        {"maximal", poset.is_maximal(i)},
                        {"ideal", describe(e, report.ring ? &*report.ring : nullptr)}});
  }
  ordered_json covers = ordered_json::array();
  for (const auto& [a, b] : hasse(poset))
    covers.push_back({a, b});
  out["poset"] = {{"elements", std::move(elements)}, {"covers", std::move(covers)}};

  ordered_json mults = ordered_json::array();
  for (std::size_t q = 0; q < report.mult.size(); ++q)
    for (int d = -1; d <= report.mult.max_degree(q); ++d)
      mults.push_back({{"id", poset.element(q).id}, {"degree", d}, {"value", report.mult.at(q, d)}});
  out["multiplicities"] = std::move(mults);

  ordered_json bounds = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json members = ordered_json::array();
    for (auto p : e.s.members)
      members.push_back(poset.element(p).id);
    ordered_json entry{{"j", e.j},
                       {"S", std::move(members)},
                       {"bound", bound_json(e.bound)},
                       {"cap", e.cap},
                       {"certified", report.certified()}};
    if (toggles.filtration) {
      ordered_json layers = ordered_json::array();
      for (const auto& layer : e.layers) {
        ordered_json summands = ordered_json::array();
        for (const auto& [p, exp] : layer.summands)
          summands.push_back({{"id", poset.element(p).id}, {"exponent", exp}});
        layers.push_back({{"k", layer.k}, {"dim", e.j - layer.k}, {"summands", std::move(summands)}});
      }
      entry["layers"] = std::move(layers);
    }
    if (toggles.witnesses) {
      ordered_json w = ordered_json::array();
      for (auto p : e.witnesses)
        w.push_back(poset.element(p).id);
      entry["witnesses"] = std::move(w);
    }
    bounds.push_back(std::move(entry));
  }
  out["bounds"] = std::move(bounds);
  out["conditions"] = {{"i", lattice_name(report.conditions.cond_i)},
                       {"ii", report.conditions.cond_ii},
                       {"iii", check_name(report.conditions.cond_iii)}};
  out["mt_level"] = report.mt ? ordered_json(report.mt->level) : ordered_json(nullptr);
  out["mt_level_vacuous"] = report.mt ? ordered_json(report.mt->vacuous) : ordered_json(nullptr);
  out["assumptions"] = report.assumptions;
  return out;
}

std::string report_to_text(const AnalysisPoset& poset, const BoundReport& report, const ReportToggles& toggles) {
  std::ostringstream out;
  const RingContext* ring = report.ring ? &*report.ring : nullptr;
  out << "format: " << kFormatVersion << '\n';
  out << "field: " << report.field.to_string() << '\n';
  if (ring) {
    out << "ring: " << ring->nvars() << " variables, canonical module A(" << ring->twist() << ")\n";
  }
  out << "poset size: " << poset.size() << '\n';
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& e = poset.element(i);
    out << "  " << e.id << "  " << describe(e, ring) << "  dim " << e.dim;
    if (e.height)
      out << "  height " << *e.height;
    if (poset.is_maximal(i))
      out << "  maximal";
    out << '\n';
  }
  if (toggles.hasse) {
    out << "covers:\n";
    for (const auto& [a, b] : hasse(poset))
      out << "  " << a << " < " << b << '\n';
  }
  for (const auto& e : report.entries) {
    out << "S_" << e.j << " = " << id_list(poset, e.s.members) << '\n';
    out << "reg K^" << e.j << " <= " << e.bound.to_string() << " (cap " << e.cap << ")\n";
    if (toggles.filtration) {
      for (const auto& layer : e.layers) {
        out << "  layer k=" << layer.k << " (dim " << e.j - layer.k << "):";
        if (layer.summands.empty())
          out << " 0";
        for (std::size_t s = 0; s < layer.summands.size(); ++s) {
          const auto& [p, exp] = layer.summands[s];
          out << (s ? " +" : "") << " K^" << e.j - layer.k << "(A/I_" << poset.element(p).id << ")^" << exp;
        }
        out << '\n';
      }
    }
    if (toggles.witnesses)
      out << "  nonvanishing witnesses: " << id_list(poset, e.witnesses) << '\n';
  }
  if (toggles.check) {
    out << "conditions: i=" << lattice_name(report.conditions.cond_i)
        << " ii=" << (report.conditions.cond_ii ? "true" : "false")
        << " iii=" << check_name(report.conditions.cond_iii) << '\n';
    out << "certified: " << (report.certified() ? "yes" : "no") << '\n';
  }
  if (report.mt)
    out << "MT level: " << report.mt->level << (report.mt->vacuous ? " (vacuous)" : "") << '\n';
  for (const auto& a : report.assumptions)
    out << "assumption: " << a << '\n';
  return out.str();
}

ReportDigest digest(const AnalysisPoset& poset, const BoundReport& report) {
  ReportDigest d;
  for (const auto& e : report.entries) {
    auto& ids = d.s_sets[e.j];
    for (auto p : e.s.members)
      ids.push_back(poset.element(p).id);
    d.bounds[e.j] = e.bound;
  }
  for (std::size_t q = 0; q < report.mult.size(); ++q)
    for (int deg = -1; deg <= report.mult.max_degree(q); ++deg)
      d.multiplicities[{poset.element(q).id, deg}] = report.mult.at(q, deg);
  return d;
}

ReportDigest parse_report_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    if (doc.at("format").get<int>() != kFormatVersion)
      throw ParseError("unsupported report format");
    ReportDigest d;
    for (const auto& b : doc.at("bounds")) {
      const auto j = b.at("j").get<std::size_t>();
      d.s_sets[j] = b.at("S").get<std::vector<std::string>>();
      const auto& bound = b.at("bound");
      d.bounds[j] = bound.at("tag") == "neg_inf" ? ExtendedInt::neg_inf()
                                                  : ExtendedInt{bound.at("value").get<std::int64_t>()};
    }
    for (const auto& m : doc.at("multiplicities"))
      d.multiplicities[{m.at("id").get<std::string>(), m.at("degree").get<int>()}] = m.at("value").get<std::size_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    std::optional<AnalysisPoset> poset;
    switch (config.mode) {
    case Mode::Monomial: {
      const RingContext ring = parse_vars(config.vars);
      poset = build_monomial_poset(parse_monomial(ring, config.gens), config.max_poset);
      break;
    }
    case Mode::Graph:
      poset = build_q_poset(parse_graph(read_source(config.input)), config.max_poset);
      break;
    case Mode::Poset:
      poset = parse_poset_doc(read_source(config.input));
      if (poset->size() > config.max_poset)
        throw ClosureBudgetExceeded("poset document exceeds the element budget of " +
                                    std::to_string(config.max_poset));
      break;
    }
    AnalysisOptions options;
    options.field = config.field;
    options.face_budget = config.max_faces;
    options.only_j = config.only_j;
    const BoundReport report = analyze(*poset, options);
    const ReportToggles toggles{config.filtration, config.witnesses, config.check, config.hasse};
    if (config.format == OutputFormat::Json)
      result.output = report_to_json(*poset, report, toggles).dump(2) + "\n";
    else
      result.output = report_to_text(*poset, report, toggles);
    if (config.strict && !report.certified()) {
      result.exit_code = kConditionFailure;
      result.error = "condition check failed: bounds are not certified";
    }
  } catch (const BudgetExceeded& e) {
    result.exit_code = kBudgetExceeded;
    result.error = e.what();
  } catch (const Error& e) {
    result.exit_code = kParseError;
    result.error = e.what();
  }
  return result;
}

} // namespace defreg::cli
