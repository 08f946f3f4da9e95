#pragma once

#include <nlohmann/json.hpp>

#include "hyalba/alba.hpp"
#include "hyalba/classify.hpp"
#include "hyalba/formula.hpp"
#include "hyalba/semantics.hpp"

namespace hyalba {

// AST serialization. Atoms:
//   {"kind": "PropVar" | "StateVar" | "Nominal", "name": "p", "index": 0}
// Constants: {"kind": "Top"} / {"kind": "Bottom"}
// Connectives: {"kind": "And", "children": [lhs, rhs]}
// @ and binder also carry {"symbol": <atom object>}.
nlohmann::json to_json(const Symbol& s);
nlohmann::json to_json(const Formula& f);
nlohmann::json to_json(const Inequality& ineq);
nlohmann::json to_json(const QuasiInequality& q);

Symbol symbol_from_json(const nlohmann::json& j);
Formula formula_from_json(const nlohmann::json& j);
Inequality inequality_from_json(const nlohmann::json& j);
QuasiInequality quasi_from_json(const nlohmann::json& j);

// {"p1": "1", "p2": "d"} keyed by variable name, in variable order.
nlohmann::json to_json(const OrderType& eps);
OrderType order_type_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Branch& b);
// {"skeletal", "order_type", "critical_branches", "definite"}
nlohmann::json to_json(const Classification& c);

nlohmann::json to_json(const Step& s);
Step step_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlbaTrace& t);

// Quasi-inequality with both its text and AST.
nlohmann::json pure_entry_json(const QuasiInequality& q);

// {"worlds": n, "relation": [[u, v], ...]}
nlohmann::json to_json(const KripkeFrame& f);
KripkeFrame frame_from_json(const nlohmann::json& j);
// Frame fields plus "nominals", "props" and "assignment".
nlohmann::json to_json(const KripkeModel& m, const Assignment& g);
ModelInstance model_from_json(const nlohmann::json& j);

}  // namespace hyalba
