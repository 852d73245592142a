#include "stabcv/json_io.hpp"

#include <string>

#include "stabcv/error.hpp"

namespace stabcv {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json exponent_json(const ExponentVector& e) {
  Json out = Json::array();
  for (auto v : e) out.push_back(v);
  return out;
}

ExponentVector exponent_from_json(const Json& j, std::size_t nvars) {
  const auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != nvars) throw VariableCountMismatch(nvars, v.size());
  return ExponentVector(std::span<const std::int64_t>(v));
}

Integer integer_from_json(const Json& j) {
  Integer c;
  if (j.is_string()) {
    if (c.set_str(j.get<std::string>(), 10) != 0)
      throw InvalidInput("coefficient is not a decimal integer: " + j.get<std::string>());
  } else {
    c = static_cast<long>(j.get<std::int64_t>());
  }
  return c;
}

}  // namespace

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.canonical_terms())
    terms.push_back(Json{{"coeff", c.get_str()}, {"exp", exponent_json(e)}});
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const auto nvars = j.at("nvars").get<std::size_t>();
    Polynomial p(nvars);
    for (const auto& t : j.at("terms")) p.accumulate(exponent_from_json(t.at("exp"), nvars), integer_from_json(t.at("coeff")));
    return p;
  });
}

Json to_json(const IntMatrix& m) { return Json(m.to_nested()); }

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    return IntMatrix::from_nested(j.get<std::vector<std::vector<std::int64_t>>>());
  });
}

Json to_json(const Quiver& q) {
  return Json{{"n", q.mutable_count()}, {"arrows", to_json(q.arrow_matrix())}};
}

Quiver quiver_from_json(const Json& j) {
  return guarded("quiver", [&] {
    return Quiver::from_arrows(j.at("n").get<std::size_t>(), matrix_from_json(j.at("arrows")));
  });
}

Json to_json(const MutationTrace& trace, bool with_quivers) {
  Json out = Json::array();
  for (const auto& rec : trace.records()) {
    Json r{{"k", rec.k}, {"F", to_json(rec.f)}, {"C", to_json(rec.c)}};
    if (with_quivers) {
      if (rec.vertex) r["vertex"] = *rec.vertex;
      r["quiver"] = to_json(rec.quiver);
    }
    out.push_back(std::move(r));
  }
  return out;
}

MutationTrace trace_from_json(const Json& j) {
  return guarded("trace", [&] {
    if (!j.is_array() || j.empty()) throw InvalidInput("trace JSON must be a nonempty array");
    auto record = [](const Json& r) {
      return StepRecord{.k = r.at("k").get<std::size_t>(),
                        .source_step = r.at("k").get<std::size_t>(),
                        .vertex = r.contains("vertex") ? std::optional(r.at("vertex").get<std::size_t>())
                                                       : std::nullopt,
                        .f = polynomial_from_json(r.at("F")),
                        .c = matrix_from_json(r.at("C")),
                        .quiver = quiver_from_json(r.at("quiver"))};
    };
    MutationTrace trace(record(j[0]));
    for (std::size_t i = 1; i < j.size(); ++i) {
      StepRecord rec = record(j[i]);
      if (rec.k != i) throw InvalidInput("trace records must be numbered 0, 1, 2, ...");
      trace.push(std::move(rec));
    }
    return trace;
  });
}

Json to_json(const StableReport& report) {
  Json terms = Json::array();
  for (const auto& t : report.terms)
    terms.push_back(Json{{"exp", exponent_json(t.exponent)},
                         {"coeff", t.coefficient.get_str()},
                         {"first_stable_step", t.first_stable_step}});
  return Json{{"degree_cap", report.degree_cap},
              {"period", report.period},
              {"window", report.window},
              {"horizon", report.horizon},
              {"terms", std::move(terms)}};
}

StableReport stable_report_from_json(const Json& j, std::size_t nvars) {
  return guarded("stable report", [&] {
    StableReport r{.degree_cap = j.at("degree_cap").get<std::int64_t>(),
                   .period = j.at("period").get<std::size_t>(),
                   .window = j.at("window").get<std::size_t>(),
                   .horizon = j.at("horizon").get<std::size_t>(),
                   .nvars = nvars,
                   .terms = {}};
    for (const auto& t : j.at("terms"))
      r.terms.push_back(StableTerm{exponent_from_json(t.at("exp"), nvars),
                                   integer_from_json(t.at("coeff")),
                                   t.at("first_stable_step").get<std::size_t>()});
    return r;
  });
}

Json to_json(const PyramidShape& shape, const ColorScheme& scheme) {
  Json stones = Json::array();
  Json supports = Json::array();
  const auto all = shape.stones();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Stone& s = all[i];
    stones.push_back(Json{{"j", s.layer},
                          {"r", s.row},
                          {"p", s.pos},
                          {"role", s.role == StoneRole::White ? "white" : "black"},
                          {"color", scheme.variable(s)}});
    for (std::size_t a : shape.resting_on(i)) supports.push_back(Json::array({a, i}));
  }
  return Json{{"kind", std::string(to_string(shape.kind()))},
              {"k", shape.size()},
              {"stones", std::move(stones)},
              {"rests_on", std::move(supports)}};
}

}  // namespace stabcv
