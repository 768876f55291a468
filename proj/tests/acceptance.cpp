// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "defreg/binomial_edge.hpp"
#include "defreg/bounds.hpp"
#include "defreg/cli.hpp"
#include "defreg/monomial.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace defreg;
namespace t = defreg::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<std::string> ids_of(const AnalysisPoset& p, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx)
    out.push_back(p.element(i).id);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i];
  return s + "}";
}

std::multiset<std::size_t> dims(const AnalysisPoset& p) {
  std::multiset<std::size_t> out;
  for (const auto& e : p.elements())
    out.insert(e.dim);
  return out;
}

using Ids = std::vector<std::string>;

AnalysisPoset two_planes() {
  return build_monomial_poset(
      cli::parse_monomial(cli::parse_vars("x,y,z,w"), "x*z,x*w,y*z,y*w"));
}
AnalysisPoset line_and_point() {
  return build_monomial_poset(cli::parse_monomial(cli::parse_vars("x,y,z"), "x*y,x*z"));
}
AnalysisPoset face_ring() { return cli::parse_poset_doc(t::read_fixture("toric_face_ring.json")); }
Graph path5_graph() { return cli::parse_graph(t::read_fixture("path5.edges")); }
Graph k35_graph() { return cli::parse_graph(t::read_fixture("k3_5.edges")); }

// Random inputs shared by the oracle and property criteria.
struct Corpus {
  std::vector<std::pair<std::uint32_t, std::vector<IndexSet>>> monomial;
  std::vector<Graph> all_connected;
  std::vector<Graph> random_graphs;
};

Corpus make_corpus() {
  Corpus c;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::uint32_t> nv(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = nv(rng);
    std::uniform_int_distribution<int> ng(1, 7);
    std::uniform_int_distribution<std::uint32_t> sz(1, std::min<std::uint32_t>(n, 4));
    std::vector<IndexSet> gens;
    const int count = ng(rng);
    for (int g = 0; g < count; ++g) {
      std::vector<std::uint32_t> pool(n);
      std::iota(pool.begin(), pool.end(), 0U);
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(sz(rng));
      gens.push_back(make_index_set(pool));
    }
    c.monomial.emplace_back(n, gens);
  }
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (auto& g : t::connected_graphs(n))
      c.all_connected.push_back(std::move(g));
  std::uniform_int_distribution<std::uint32_t> gn(2, 8);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = gn(rng);
    c.random_graphs.emplace_back(n, t::random_edges(rng, n, density(rng)));
  }
  return c;
}

RingContext ring_of(std::uint32_t n) {
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return RingContext(names);
}

Outcome criterion_two_planes() {
  Outcome o;
  const auto p = two_planes();
  const auto r = analyze(p);
  o.expect(p.size() == 3 && dims(p) == std::multiset<std::size_t>{2, 2, 0}, "poset shape");
  o.expect(r.entries.size() == 3, "entry count");
  if (!o.ok)
    return o;
  o.expect(r.entries[0].s.members.empty() && r.entries[0].bound.is_neg_inf(), "j=0");
  o.expect(ids_of(p, r.entries[1].s.members) == Ids{"p3"} && r.entries[1].bound == ExtendedInt(0), "j=1");
  o.expect(ids_of(p, r.entries[2].s.members) == Ids{"p1", "p2"} && r.entries[2].bound == ExtendedInt(2), "j=2");
  o.detail = o.ok ? "S_1=" + join(ids_of(p, r.entries[1].s.members)) + " bounds -inf,0,2" : o.detail;
  return o;
}

Outcome criterion_line_and_point() {
  Outcome o;
  const auto p = line_and_point();
  const auto r = analyze(p);
  o.expect(dims(p) == std::multiset<std::size_t>{2, 1, 0}, "poset dims");
  o.expect(ids_of(p, r.entries[1].s.members) == Ids{"p2", "p3"}, "S_1");
  o.expect(ids_of(p, r.entries[2].s.members) == Ids{"p1"}, "S_2");
  o.expect(r.entries[2].bound == ExtendedInt(2), "bound_2");
  // The formula's value; the true regularity of K^1 is smaller, which an
  // upper bound allows.
  o.expect(r.entries[1].bound == ExtendedInt(1), "bound_1");
  if (o.ok)
    o.detail = "S_1={p2,p3} S_2={p1} bound_1=1 bound_2=2";
  return o;
}

Outcome criterion_face_ring() {
  Outcome o;
  const auto p = face_ring();
  const auto r = analyze(p);
  o.expect(p.size() == 7, "size");
  o.expect(ids_of(p, r.entries[2].s.members) == Ids{"p2", "p4", "p6", "p7"}, "S_2");
  o.expect(ids_of(p, r.entries[3].s.members) == Ids{"p1", "p3", "p5"}, "S_3");
  o.expect(r.entries[2].bound == ExtendedInt(2) && r.entries[3].bound == ExtendedInt(3), "bounds");
  if (o.ok)
    o.detail = "S_2=" + join(ids_of(p, r.entries[2].s.members)) + " S_3=" + join(ids_of(p, r.entries[3].s.members));
  return o;
}

Outcome criterion_path() {
  Outcome o;
  const auto p = build_q_poset(path5_graph());
  std::set<std::size_t> d;
  for (const auto& e : p.elements())
    d.insert(e.dim);
  o.expect(p.size() == 17, "|Q| = " + std::to_string(p.size()));
  o.expect(d == std::set<std::size_t>{3, 4, 5, 6}, "dims");
  if (o.ok)
    o.detail = "|Q|=17 dims {3,4,5,6}";
  return o;
}

// Reference labels for the complete bipartite example, by structure.
std::string reference_label(const CliquePrime& p) {
  const IndexSet a{1, 2, 3};
  const IndexSet b{4, 5, 6, 7, 8};
  const std::vector<IndexSet> singles_b{{4}, {5}, {6}, {7}, {8}};
  const std::vector<IndexSet> singles_a{{1}, {2}, {3}};
  if (p.killed == a && p.blocks == singles_b)
    return "p1";
  if (p.killed.empty())
    return "p2";
  if (p.killed == a && p.blocks == std::vector<IndexSet>{b})
    return "p3";
  if (p.killed == b && p.blocks == singles_a)
    return "p4";
  if (p.killed.size() == 8)
    return "p5";
  if (p.killed == b && p.blocks == std::vector<IndexSet>{a})
    return "p6";
  return "?";
}

Outcome criterion_bipartite() {
  Outcome o;
  const auto p = build_q_poset(k35_graph());
  o.expect(p.size() == 6, "|Q| = " + std::to_string(p.size()));
  o.expect(dims(p) == std::multiset<std::size_t>{10, 9, 6, 6, 0, 4}, "dims");
  if (!o.ok)
    return o;
  std::map<std::string, std::string> to_ref;
  for (const auto& e : p.elements())
    to_ref[e.id] = reference_label(std::get<CliquePrime>(e.repr));
  std::set<std::string> labels;
  for (const auto& [id, ref] : to_ref)
    labels.insert(ref);
  o.expect(labels == std::set<std::string>{"p1", "p2", "p3", "p4", "p5", "p6"}, "label map");

  std::set<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : hasse(p))
    covers.emplace(to_ref[a], to_ref[b]);
  const std::set<std::pair<std::string, std::string>> expected_covers{
      {"p3", "p1"}, {"p3", "p2"}, {"p6", "p2"}, {"p6", "p4"}, {"p5", "p3"}, {"p5", "p6"}};
  o.expect(covers == expected_covers, "covers");

  const auto r = analyze(p);
  const std::map<std::size_t, std::pair<std::string, long>> expected{
      {5, {"p6", 4}}, {6, {"p4", 6}}, {7, {"p3", 6}}, {9, {"p2", 9}}, {10, {"p1", 10}}};
  for (const auto& e : r.entries) {
    std::vector<std::string> refs;
    for (auto i : e.s.members)
      refs.push_back(to_ref[p.element(i).id]);
    auto it = expected.find(e.j);
    if (it == expected.end()) {
      o.expect(refs.empty() && e.bound.is_neg_inf(), "S_" + std::to_string(e.j) + " should be empty");
    } else {
      o.expect(refs == Ids{it->second.first}, "S_" + std::to_string(e.j) + " = " + join(refs));
      o.expect(e.bound == ExtendedInt(it->second.second), "bound_" + std::to_string(e.j));
    }
  }
  if (o.ok)
    o.detail = "|Q|=6, 6 covers, bounds 4,6,6,9,10 at j=5,6,7,9,10";
  return o;
}

Outcome criterion_monomial_oracle(const Corpus& c) {
  Outcome o;
  for (const auto& [n, gens] : c.monomial) {
    std::vector<IndexSet> got;
    for (const auto& p : minimal_primes(SquarefreeIdeal(ring_of(n), gens)))
      got.push_back(p.vars);
    o.expect(got == t::brute_force_minimal_covers(n, gens), "mismatch at nvars=" + std::to_string(n));
  }
  if (o.ok)
    o.detail = std::to_string(c.monomial.size()) + " ideals agree";
  return o;
}

Outcome criterion_graph_oracle(const Corpus& c) {
  Outcome o;
  auto check = [&](const Graph& g) {
    std::set<t::OraclePrime> got;
    for (const auto& p : minimal_primes_graph(g))
      got.insert(t::to_oracle(p));
    o.expect(got == t::oracle_graph_minimal_primes(g),
             "mismatch on graph with n=" + std::to_string(g.n()) + ", " + std::to_string(g.edges().size()) +
                 " edges");
  };
  for (const auto& g : c.all_connected)
    check(g);
  for (const auto& g : c.random_graphs)
    check(g);
  if (o.ok)
    o.detail = std::to_string(c.all_connected.size()) + " connected + " + std::to_string(c.random_graphs.size()) +
               " random graphs agree";
  return o;
}

// Smallest edge bitmask over all vertex relabelings; equal exactly for
// isomorphic graphs.
std::uint64_t canonical_form(const Graph& g) {
  std::vector<std::uint32_t> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0U);
  auto slot = [&](std::uint32_t u, std::uint32_t v) {
    if (u > v)
      std::swap(u, v);
    return v * (v - 1) / 2 + u;
  };
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges())
      mask |= std::uint64_t{1} << slot(perm[u - 1], perm[v - 1]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Criteria 1-6 posets, one graph per isomorphism class from the exhaustive
// enumeration, and the random graphs.
std::vector<AnalysisPoset> structural_posets(const Corpus& c) {
  std::vector<AnalysisPoset> out{two_planes(), line_and_point(), face_ring(), build_q_poset(path5_graph()),
                                 build_q_poset(k35_graph())};
  for (const auto& [n, gens] : c.monomial)
    out.push_back(build_monomial_poset(SquarefreeIdeal(ring_of(n), gens)));
  std::set<std::pair<std::uint32_t, std::uint64_t>> seen;
  for (const auto& g : c.all_connected)
    if (seen.emplace(g.n(), canonical_form(g)).second)
      out.push_back(build_q_poset(g));
  for (const auto& g : c.random_graphs)
    out.push_back(build_q_poset(g));
  return out;
}

// Every poset built from criteria 1-7 inputs.
std::vector<AnalysisPoset> all_posets(const Corpus& c) {
  std::vector<AnalysisPoset> out{two_planes(), line_and_point(), face_ring(), build_q_poset(path5_graph()),
                                 build_q_poset(k35_graph())};
  for (const auto& [n, gens] : c.monomial)
    out.push_back(build_monomial_poset(SquarefreeIdeal(ring_of(n), gens)));
  for (const auto& g : c.all_connected)
    out.push_back(build_q_poset(g));
  for (const auto& g : c.random_graphs)
    out.push_back(build_q_poset(g));
  return out;
}

Outcome criterion_cap(const std::vector<AnalysisPoset>& posets) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& p : posets) {
    for (const auto& e : analyze(p).entries) {
      o.expect(e.bound <= ExtendedInt(static_cast<std::int64_t>(e.j)),
               "bound " + e.bound.to_string() + " exceeds j=" + std::to_string(e.j));
      ++checked;
    }
  }
  if (o.ok)
    o.detail = std::to_string(checked) + " (poset, j) pairs over " + std::to_string(posets.size()) + " posets";
  return o;
}

Outcome criterion_homology() {
  Outcome o;
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto c = SimplicialComplex::generated_by(t::random_facets(rng, 12));
    const auto hq = reduced_homology(c, FieldSpec::rationals());
    const auto h2 = reduced_homology(c, FieldSpec::prime_field(2));
    o.expect(hq.at(0) == t::skeleton_components(c) - 1, "H_0 vs components");
    long long chi_q = 0;
    long long chi_2 = 0;
    for (int d = -1; d <= c.dimension(); ++d) {
      chi_q += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(hq.at(d));
      chi_2 += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h2.at(d));
      o.expect(hq.at(d) <= h2.at(d), "dim over Q exceeds dim over GF(2)");
    }
    o.expect(chi_q == t::reduced_euler_characteristic(c), "Euler identity over Q");
    o.expect(chi_2 == t::reduced_euler_characteristic(c), "Euler identity over GF(2)");
  }
  if (o.ok)
    o.detail = "300 random complexes";
  return o;
}

Outcome criterion_poset_structure(const std::vector<AnalysisPoset>& posets) {
  Outcome o;
  std::size_t intervals = 0;
  for (const auto& p : posets) {
    o.expect(check_conditions(p).cond_iii == CheckStatus::Holds, "strict height check");
    const auto m = multiplicities(p, FieldSpec::rationals());
    for (std::size_t q = 0; q < p.size(); ++q) {
      o.expect((m.at(q, -1) != 0) == p.is_maximal(q), "mult(q,-1) vs maximality");
      // Closed intervals [x, q] have maximum q.
      for (std::size_t x = 0; x < p.size(); ++x) {
        if (!p.leq(x, q))
          continue;
        std::vector<std::size_t> members;
        for (std::size_t r = 0; r < p.size(); ++r)
          if (p.leq(x, r) && p.leq(r, q))
            members.push_back(r);
        o.expect(reduced_homology(order_complex(induced_subposet(p, members)), FieldSpec::rationals()).is_zero(),
                 "interval with a maximum has homology");
        ++intervals;
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(posets.size()) + " posets up to isomorphism, " + std::to_string(intervals) +
               " intervals";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  std::vector<cli::RunConfig> configs;
  auto mono = [](std::string vars, std::string gens) {
    cli::RunConfig c;
    c.mode = cli::Mode::Monomial;
    c.vars = std::move(vars);
    c.gens = std::move(gens);
    return c;
  };
  auto file = [](cli::Mode mode, const std::string& name) {
    cli::RunConfig c;
    c.mode = mode;
    c.input = {cli::InputSource::Kind::File, t::fixture_path(name)};
    return c;
  };
  configs.push_back(mono("x,y,z,w", "x*z,x*w,y*z,y*w"));
  configs.push_back(mono("x,y,z", "x*y,x*z"));
  configs.push_back(file(cli::Mode::Poset, "toric_face_ring.json"));
  configs.push_back(file(cli::Mode::Graph, "path5.edges"));
  configs.push_back(file(cli::Mode::Graph, "k3_5.edges"));
  for (auto& c : configs) {
    c.format = cli::OutputFormat::Json;
    c.filtration = c.witnesses = c.check = c.hasse = true;
    const auto first = cli::run(c);
    o.expect(first.exit_code == cli::kOk, "run failed: " + first.error);
    for (int rep = 0; rep < 3; ++rep)
      o.expect(cli::run(c).output == first.output, "outputs differ");
  }
  if (o.ok)
    o.detail = "5 inputs, 4 runs each, byte-identical";
  return o;
}

} // namespace

int main() {
  const auto corpus = make_corpus();
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"two planes: poset, S-sets and bounds", criterion_two_planes},
      {"line and point: S-sets and bounds", criterion_line_and_point},
      {"abstract seven-element poset: S-sets and bounds", criterion_face_ring},
      {"path on 5 vertices: closure size and dimensions", criterion_path},
      {"complete bipartite 3+5: closure, covers, S-sets, bounds", criterion_bipartite},
      {"monomial minimal primes vs brute-force covers", [&] { return criterion_monomial_oracle(corpus); }},
      {"binomial-edge minimal primes vs exhaustive oracle", [&] { return criterion_graph_oracle(corpus); }},
      {"bound_j <= j on every input", [&] { return criterion_cap(all_posets(corpus)); }},
      {"homology identities on random complexes", criterion_homology},
      {"poset structure properties", [&] { return criterion_poset_structure(structural_posets(corpus)); }},
      {"deterministic structured output", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %2zu. %s (%s) [%lld ms]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
