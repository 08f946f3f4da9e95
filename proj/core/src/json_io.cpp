#include "hyalba/json_io.hpp"

#include "hyalba/errors.hpp"
#include "hyalba/syntax.hpp"

namespace hyalba {

using nlohmann::json;

namespace {

SymbolKind kind_from_string(const std::string& s) {
  if (s == "PropVar") return SymbolKind::PropVar;
  if (s == "StateVar") return SymbolKind::StateVar;
  if (s == "Nominal") return SymbolKind::Nominal;
  throw Error("unknown symbol kind '" + s + "'");
}

}  // namespace

json to_json(const Symbol& s) {
  return json{{"kind", std::string(to_string(s.kind))}, {"name", s.name}, {"index", s.index}};
}

json to_json(const Formula& f) {
  if (f.is_atom() && has_symbol(f.op())) return to_json(f.symbol());
  json j{{"kind", std::string(to_string(f.op()))}};
  if (has_symbol(f.op())) j["symbol"] = to_json(f.symbol());
  if (!f.is_atom()) {
    json kids = json::array();
    for (const auto& k : f.children()) kids.push_back(to_json(k));
    j["children"] = std::move(kids);
  }
  return j;
}

json to_json(const Inequality& ineq) { return json{{"lhs", to_json(ineq.lhs)}, {"rhs", to_json(ineq.rhs)}}; }

json to_json(const QuasiInequality& q) {
  json ants = json::array();
  for (const auto& a : q.antecedents) ants.push_back(to_json(a));
  return json{{"antecedents", std::move(ants)}, {"conclusion", to_json(q.conclusion)}};
}

Symbol symbol_from_json(const json& j) {
  return Symbol{kind_from_string(j.at("kind").get<std::string>()), j.at("name").get<std::string>(),
                j.value("index", 0u)};
}

Formula formula_from_json(const json& j) {
  Connective c = connective_from_string(j.at("kind").get<std::string>());
  switch (c) {
    case Connective::PropVar:
    case Connective::StateVar:
    case Connective::Nominal:
      return Formula::atom(symbol_from_json(j));
    case Connective::Top:
      return Formula::top();
    case Connective::Bottom:
      return Formula::bottom();
    default:
      break;
  }
  const auto& kids = j.at("children");
  if (static_cast<int>(kids.size()) != arity(c)) {
    throw Error("wrong number of children for " + std::string(to_string(c)));
  }
  switch (c) {
    case Connective::Not:
      return Formula::negation(formula_from_json(kids[0]));
    case Connective::Diamond:
      return Formula::diamond(formula_from_json(kids[0]));
    case Connective::Box:
      return Formula::box(formula_from_json(kids[0]));
    case Connective::AtNominal:
    case Connective::AtStateVar:
      return Formula::at(symbol_from_json(j.at("symbol")), formula_from_json(kids[0]));
    case Connective::Binder:
      return Formula::binder(symbol_from_json(j.at("symbol")), formula_from_json(kids[0]));
    case Connective::Or:
      return Formula::disjunction(formula_from_json(kids[0]), formula_from_json(kids[1]));
    case Connective::And:
      return Formula::conjunction(formula_from_json(kids[0]), formula_from_json(kids[1]));
    case Connective::Implies:
      return Formula::implication(formula_from_json(kids[0]), formula_from_json(kids[1]));
    default:
      throw Error("unexpected formula kind");
  }
}

Inequality inequality_from_json(const json& j) {
  return {formula_from_json(j.at("lhs")), formula_from_json(j.at("rhs"))};
}

QuasiInequality quasi_from_json(const json& j) {
  QuasiInequality q;
  for (const auto& a : j.at("antecedents")) q.antecedents.push_back(inequality_from_json(a));
  q.conclusion = inequality_from_json(j.at("conclusion"));
  return q;
}

}  // namespace hyalba

namespace hyalba {

json to_json(const OrderType& eps) {
  json j = json::object();
  for (std::size_t k = 0; k < eps.size(); ++k) j[eps.vars()[k].name] = std::string(to_string(eps.values()[k]));
  return j;
}

OrderType order_type_from_json(const json& j) {
  OrderType eps;
  for (const auto& [name, value] : j.items()) eps.set(Symbol::prop(name), epsilon_from_string(value.get<std::string>()));
  return eps;
}

json to_json(const Branch& b) {
  json path = json::array();
  for (std::size_t k = 0; k < b.path.size(); ++k) {
    json e{{"sign", std::string(to_string(b.path[k].sign))}, {"node", std::string(to_string(b.path[k].op))}};
    if (k == 0) e["symbol"] = to_json(b.leaf);
    path.push_back(std::move(e));
  }
  return json{{"side", std::string(to_string(b.side))},
              {"leaf", b.leaf.name},
              {"position", b.position},
              {"path", std::move(path)},
              {"text", b.str()},
              {"skeletal", b.skeletal()}};
}

json to_json(const Classification& c) {
  json branches = json::array();
  for (const auto& b : c.branches) branches.push_back(to_json(b));
  return json{{"skeletal", c.skeletal},
              {"order_type", c.order_type ? to_json(*c.order_type) : json(nullptr)},
              {"critical_branches", std::move(branches)},
              {"definite", c.definite}};
}

namespace {

json ineq_list(const std::vector<Inequality>& v) {
  json out = json::array();
  for (const auto& i : v) out.push_back(json{{"text", print(i)}, {"ast", to_json(i)}});
  return out;
}

std::vector<Inequality> ineq_list_from_json(const json& j) {
  std::vector<Inequality> out;
  for (const auto& e : j) out.push_back(inequality_from_json(e.at("ast")));
  return out;
}

}  // namespace

json to_json(const Step& s) {
  json introduced = json::array();
  for (const auto& sym : s.introduced) introduced.push_back(to_json(sym));
  return json{{"rule", s.rule},
              {"justification", s.justification},
              {"consumed", ineq_list(s.consumed)},
              {"produced", ineq_list(s.produced)},
              {"introduced", std::move(introduced)}};
}

Step step_from_json(const json& j) {
  Step s;
  s.rule = j.at("rule").get<std::string>();
  s.justification = j.at("justification").get<std::string>();
  s.consumed = ineq_list_from_json(j.at("consumed"));
  s.produced = ineq_list_from_json(j.at("produced"));
  for (const auto& e : j.at("introduced")) s.introduced.push_back(symbol_from_json(e));
  return s;
}

json to_json(const AlbaTrace& t) {
  json pre = json::array();
  for (const auto& s : t.preprocess) pre.push_back(to_json(s));
  json systems = json::array();
  for (const auto& st : t.systems) {
    json steps = json::array();
    for (const auto& s : st.steps) steps.push_back(to_json(s));
    systems.push_back(json{{"origin", st.origin},
                           {"source", json{{"text", print(st.source)}, {"ast", to_json(st.source)}}},
                           {"steps", std::move(steps)},
                           {"final", ineq_list(st.final.inequalities)}});
  }
  return json{{"input", json{{"text", print(t.input)}, {"ast", to_json(t.input)}}},
              {"preprocess", std::move(pre)},
              {"preprocessed", ineq_list(t.preprocessed)},
              {"systems", std::move(systems)}};
}

json pure_entry_json(const QuasiInequality& q) { return json{{"text", print(q)}, {"ast", to_json(q)}}; }

json to_json(const KripkeFrame& f) {
  json rel = json::array();
  for (auto [u, v] : f.edges()) rel.push_back(json::array({u, v}));
  return json{{"worlds", f.size()}, {"relation", std::move(rel)}};
}

KripkeFrame frame_from_json(const json& j) {
  KripkeFrame f(j.at("worlds").get<std::size_t>());
  for (const auto& e : j.at("relation")) f.add_edge(e.at(0).get<World>(), e.at(1).get<World>());
  return f;
}

json to_json(const KripkeModel& m, const Assignment& g) {
  json j = to_json(m.frame());
  json noms = json::object();
  for (const auto& [i, w] : m.nominal_valuation()) noms[i.name] = w;
  json ps = json::object();
  for (const auto& [p, ext] : m.prop_valuation()) {
    json worlds = json::array();
    for (World w = 0; w < m.frame().size(); ++w) {
      if ((ext >> w) & 1U) worlds.push_back(w);
    }
    ps[p.name] = std::move(worlds);
  }
  json asg = json::object();
  for (const auto& [x, w] : g.values()) asg[x.name] = w;
  j["nominals"] = std::move(noms);
  j["props"] = std::move(ps);
  j["assignment"] = std::move(asg);
  return j;
}

ModelInstance model_from_json(const json& j) {
  ModelInstance mi{KripkeModel(frame_from_json(j)), Assignment{}};
  for (const auto& [name, w] : j.value("nominals", json::object()).items()) {
    mi.model.set_nominal(Symbol::nominal(name), w.get<World>());
  }
  for (const auto& [name, ws] : j.value("props", json::object()).items()) {
    WorldMask m = 0;
    for (const auto& w : ws) m |= WorldMask{1} << w.get<World>();
    mi.model.set_prop(Symbol::prop(name), m);
  }
  for (const auto& [name, w] : j.value("assignment", json::object()).items()) {
    mi.assignment.bind(Symbol::state(name), w.get<World>());
  }
  return mi;
}

}  // namespace hyalba
