#include "defreg/cli.hpp"
#include "defreg/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace defreg;
using namespace defreg::cli;

namespace {

RunConfig monomial_config(std::string vars, std::string gens) {
  RunConfig c;
  c.mode = Mode::Monomial;
  c.vars = std::move(vars);
  c.gens = std::move(gens);
  return c;
}

RunConfig file_config(Mode mode, const std::string& fixture) {
  RunConfig c;
  c.mode = mode;
  c.input = {InputSource::Kind::File, testing::fixture_path(fixture)};
  return c;
}

} // namespace

TEST_CASE("field parsing") {
  CHECK(parse_field("rational") == FieldSpec::rationals());
  CHECK(parse_field("gf:7") == FieldSpec::prime_field(7));
  CHECK_THROWS_AS(parse_field("gf:8"), InvalidField);
  CHECK_THROWS_AS(parse_field("gf:"), ParseError);
  CHECK_THROWS_AS(parse_field("real"), ParseError);
}

TEST_CASE("monomial parsing") {
  const auto ring = parse_vars("x, y,z");
  CHECK(ring.var_names() == std::vector<std::string>{"x", "y", "z"});
  CHECK_THROWS_AS(parse_vars(""), ParseError);
  CHECK_THROWS_AS(parse_vars("x,x"), InputError);

  const auto ideal = parse_monomial(ring, "x*y, x*z^1");
  CHECK(ideal.generators() == std::vector<IndexSet>{{0, 1}, {0, 2}});
  CHECK_THROWS_AS(parse_monomial(ring, "x^2"), NonSquarefree);
  CHECK_THROWS_AS(parse_monomial(ring, "x*x"), NonSquarefree);
  CHECK_THROWS_AS(parse_monomial(ring, "x*q"), UnknownVariable);
  CHECK_THROWS_AS(parse_monomial(ring, ""), ZeroIdeal);
  CHECK_THROWS_AS(parse_monomial(ring, "1"), ParseError);
}

TEST_CASE("graph parsing") {
  const auto g = parse_graph("# a triangle\nn 3\n1 2\n2 3\n1 3\n");
  CHECK(g.n() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(parse_graph(testing::read_fixture("path5.edges")).edges().size() == 4);
  CHECK_THROWS_AS(parse_graph("1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n 3\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n 3\n1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("format: 2\nn 3\n"), ParseError);
}

TEST_CASE("poset document parsing") {
  const auto p = parse_poset_doc(testing::read_fixture("toric_face_ring.json"));
  CHECK(p.size() == 7);
  REQUIRE(p.ring());
  CHECK(p.ring()->nvars() == 6);
  CHECK(p.leq(p.index_of("p7"), p.index_of("p1")));  // by transitivity

  CHECK_THROWS_AS(parse_poset_doc("{"), ParseError);
  CHECK_THROWS_AS(parse_poset_doc(R"({"format":1,"elements":[]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_doc(R"({"elements":[{"id":"a","dim":0}]})"), ParseError);
  CHECK_THROWS_AS(parse_poset_doc(R"({"format":1,"elements":[{"id":"a","dim":0},{"id":"a","dim":1}]})"),
                  DuplicateId);
  CHECK_THROWS_AS(parse_poset_doc(R"({"format":1,"elements":[{"id":"a","dim":0}],"relations":[["a","b"]]})"),
                  UnknownElement);
  CHECK_THROWS_AS(parse_poset_doc(R"({"format":1,"elements":[{"id":"a","dim":0},{"id":"b","dim":1}],
                                      "relations":[["a","b"],["b","a"]]})"),
                  CyclicRelations);
}

TEST_CASE("exit codes") {
  CHECK(run(monomial_config("x,y,z,w", "x*z,x*w,y*z,y*w")).exit_code == kOk);

  const auto bad = run(monomial_config("x,y", "x*x"));
  CHECK(bad.exit_code == kParseError);
  CHECK_FALSE(bad.error.empty());
  CHECK(bad.output.empty());

  auto tight = file_config(Mode::Graph, "path5.edges");
  tight.max_poset = 5;
  CHECK(run(tight).exit_code == kBudgetExceeded);

  auto faces = file_config(Mode::Graph, "path5.edges");
  faces.max_faces = 3;
  CHECK(run(faces).exit_code == kBudgetExceeded);

  CHECK(run(file_config(Mode::Graph, "missing.edges")).exit_code == kParseError);

  RunConfig strict;
  strict.mode = Mode::Poset;
  strict.strict = true;
  strict.input = {InputSource::Kind::Inline,
                  R"({"format":1,"elements":[{"id":"a","dim":1},{"id":"b","dim":0}],"relations":[["b","a"]]})"};
  CHECK(run(strict).exit_code == kConditionFailure);
  strict.strict = false;
  CHECK(run(strict).exit_code == kOk);
}

TEST_CASE("text report") {
  const auto out = run(file_config(Mode::Graph, "path5.edges")).output;
  CHECK(out.rfind("format: 1\n", 0) == 0);
  CHECK(out.find("poset size: 17\n") != std::string::npos);
  CHECK(out.find("ring: 10 variables, canonical module A(-10)") != std::string::npos);

  auto cfg = monomial_config("x,y,z,w", "x*z,x*w,y*z,y*w");
  cfg.field = FieldSpec::prime_field(2);
  const auto text = run(cfg).output;
  CHECK(text.find("field: gf:2") != std::string::npos);
  CHECK(text.find("reg K^0 <= -inf (cap 0)") != std::string::npos);
  CHECK(text.find("MT level: 1") != std::string::npos);
}

TEST_CASE("json report round trip") {
  for (const auto& [mode, fixture] : std::vector<std::pair<Mode, std::string>>{
           {Mode::Graph, "path5.edges"}, {Mode::Graph, "k3_5.edges"}, {Mode::Poset, "toric_face_ring.json"}}) {
    auto cfg = file_config(mode, fixture);
    cfg.format = OutputFormat::Json;
    cfg.filtration = cfg.witnesses = cfg.check = cfg.hasse = true;
    const auto first = run(cfg);
    REQUIRE(first.exit_code == kOk);
    CHECK(run(cfg).output == first.output);

    const auto poset = mode == Mode::Graph ? build_q_poset(parse_graph(testing::read_fixture(fixture)))
                                           : parse_poset_doc(testing::read_fixture(fixture));
    const auto report = analyze(poset);
    CHECK(parse_report_json(first.output) == digest(poset, report));

    const auto j = nlohmann::json::parse(first.output);
    CHECK(j["format"] == 1);
    CHECK(j["bounds"][0]["bound"]["tag"] == "neg_inf");
  }
  CHECK_THROWS_AS(parse_report_json(R"({"format":2})"), ParseError);
  CHECK_THROWS_AS(parse_report_json("[]"), ParseError);
}
