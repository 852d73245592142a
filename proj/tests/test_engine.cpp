#include <doctest.h>

#include <stabcv/engine.hpp>
#include <stabcv/error.hpp>
#include <stabcv/json_io.hpp>
#include <stabcv/presets.hpp>

#include "oracles.hpp"

using namespace stabcv;

namespace {

Polynomial P(std::string_view text, std::size_t nvars = 2) { return parse_polynomial(text, nvars); }

}  // namespace

TEST_CASE("exchange relation on the initial seeds") {
  const std::vector<Polynomial> ones(2, Polynomial::one(2));
  CHECK(exchange_label(preset("kronecker").quiver(), ones, 0) == P("y0 + 1"));
  CHECK(exchange_label(preset("conifold").quiver(), ones, 0) == P("y0 + 1"));

  const Quiver q1 = preset("kronecker").quiver().mutate(0, TwoCyclePolicy::CancelTwoCycles);
  const std::vector<Polynomial> labels{P("y0 + 1"), Polynomial::one(2)};
  CHECK(exchange_label(q1, labels, 1) == P("y0^2*y1 + y0^2 + 2*y0 + 1"));
}

TEST_CASE("preset runs reproduce the printed tables") {
  const MutationTrace k = run(preset("kronecker"), 4);
  CHECK(k[1].f == P("y0 + 1"));
  CHECK(k[2].f == P("y0^2*y1 + y0^2 + 2*y0 + 1"));
  CHECK(k[3].f == P("y0^3*y1^2 + 2*y0^3*y1 + 2*y0^2*y1 + y0^3 + 3*y0^2 + 3*y0 + 1"));
  CHECK(truncate(k[4].f, 2) == P("6*y0^2 + 4*y0 + 1"));

  const MutationTrace c = run(preset("conifold"), 2);
  CHECK(c[2].f == P("y0^4*y1 + 2*y0^3*y1 + y0^2*y1 + y0^2 + 2*y0 + 1"));

  const MutationTrace f = run(preset("f0"), 4);
  CHECK(f[4].f == P("y0^2*y1^2*y3 + 2*y0*y1^2*y3 + y1^2*y3 + y1^2 + 2*y1 + 1", 4));
  CHECK(f[3].f == P("y0^2*y1^2*y2 + 2*y0^2*y1*y2 + y0^2*y2 + y0^2 + 2*y0 + 1", 4));
}

TEST_CASE("Kronecker recurrence") {
  const MutationTrace t = run(preset("kronecker"), 30);
  for (std::int64_t k = 2; k <= 30; ++k) {
    const Polynomial lhs = oracle::multiply(t[k].f, t[k - 2].f);
    const Polynomial rhs = Polynomial::monomial(ExponentVector{k, k - 1}) + oracle::multiply(t[k - 1].f, t[k - 1].f);
    CHECK_MESSAGE(lhs == rhs, "k = " << k);
  }
}

TEST_CASE("F-polynomial shape along the preset runs") {
  for (const auto& [name, steps] : {std::pair{"kronecker", 20}, {"conifold", 10}, {"f0", 12}}) {
    const MutationTrace t = run(preset(name), steps);
    for (std::size_t k = 0; k <= t.steps(); ++k) {
      CHECK(t[k].f.coefficient(ExponentVector(t.nvars())) == 1);
      CHECK(t[k].f.all_coefficients_positive());
    }
  }
}

TEST_CASE("labels change only at the mutated vertex") {
  const Preset& p = preset("f0");
  MutationRun r(p.quiver(), p.sequence, p.policy);
  std::vector<Polynomial> before(r.labels().begin(), r.labels().end());
  for (int s = 0; s < 8; ++s) {
    const StepRecord rec = r.advance();
    for (std::size_t v = 0; v < before.size(); ++v) {
      if (v == *rec.vertex) CHECK(r.labels()[v] == rec.f);
      else CHECK(r.labels()[v] == before[v]);
    }
    before.assign(r.labels().begin(), r.labels().end());
  }
}

TEST_CASE("subsampling") {
  const MutationTrace t = run(preset("f0"), 8);
  const MutationTrace same = subsample(t, 1, 1);
  REQUIRE(same.steps() == t.steps());
  for (std::size_t k = 0; k <= t.steps(); ++k) CHECK(same[k].f == t[k].f);

  const MutationTrace even = subsample(t, 2, 2);
  REQUIRE(even.steps() == 4);
  CHECK(even[1].f == P("y1 + 1", 4));
  CHECK(even[2].f == t[4].f);
  CHECK(even[2].source_step == 4);
  CHECK(even[2].k == 2);

  const MutationTrace odd = subsample(t, 1, 2);
  CHECK(odd[2].f == t[3].f);
  CHECK_THROWS_AS(subsample(t, 1, 0), InvalidInput);
}

TEST_CASE("even F0 steps fold onto the conifold") {
  const MutationTrace even = subsample(run(preset("f0"), 12), 2, 2);
  const MutationTrace conifold = run(preset("conifold"), 6);
  for (std::size_t k = 1; k <= 6; ++k) CHECK(substitute(even[k].f, f0_folding()) == conifold[k].f);
}

TEST_CASE("run limits and bad sequences") {
  CHECK_THROWS_AS(run(preset("kronecker"), 65), InvalidInput);
  CHECK(run(preset("kronecker"), 3, RunLimits{.max_steps = 3}).steps() == 3);
  const std::vector<std::size_t> frozen{2};
  CHECK_THROWS_AS(run(preset("kronecker").quiver(), frozen, TwoCyclePolicy::CancelTwoCycles, 1),
                  FrozenVertexMutation);
}

TEST_CASE("trace JSON round trip") {
  const MutationTrace t = run(preset("conifold"), 4);
  const Json j = to_json(t, true);
  REQUIRE(j.size() == 5);
  CHECK(j[2]["k"] == 2);
  CHECK(j[0]["C"] == Json::parse("[[-1, 0], [0, -1]]"));
  const MutationTrace back = trace_from_json(Json::parse(j.dump()));
  REQUIRE(back.steps() == 4);
  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(back[k].f == t[k].f);
    CHECK(back[k].c == t[k].c);
    CHECK(back[k].quiver == t[k].quiver);
    CHECK(back[k].vertex == t[k].vertex);
  }
  CHECK_THROWS_AS(trace_from_json(to_json(t, false)), InvalidInput);
}
