#pragma once

// Reference semantics for the tests: a direct transcription of the
// satisfaction clauses over adjacency matrices and std::set valuations.
// Shares nothing with the library evaluator except the Formula type.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hyalba/formula.hpp"
#include "hyalba/semantics.hpp"

namespace oracle {

using hyalba::Formula;
using hyalba::Inequality;
using hyalba::QuasiInequality;
using hyalba::Symbol;

struct Frame {
  int n = 0;
  std::vector<std::vector<bool>> r;

  bool rel(int u, int v) const { return r[u][v]; }
};

struct Model {
  Frame frame;
  std::map<Symbol, std::set<int>> props;
  std::map<Symbol, int> nominals;
  std::map<Symbol, int> vars;
};

bool sat(const Model& m, int w, const Formula& f);
bool everywhere(const Model& m, const Formula& f);
bool holds(const Model& m, const Inequality& ineq);
bool holds(const Model& m, const QuasiInequality& q);

struct Atoms {
  std::set<Symbol> props;
  std::set<Symbol> nominals;
  std::set<Symbol> free_vars;
};
void collect(const Formula& f, Atoms& out);
Atoms collect(const Inequality& ineq);
Atoms collect(const std::vector<QuasiInequality>& qs);

// Every frame with 1..max_size worlds (own enumeration order).
std::vector<Frame> frames(int max_size);
Frame from_library(const hyalba::KripkeFrame& f);
Model from_library(const hyalba::ModelInstance& mi);

// Calls `visit` on every model over `atoms` on `frame`; stops when it returns false.
bool for_each_model(const Frame& frame, const Atoms& atoms, const std::function<bool(const Model&)>& visit);

bool frame_valid(const Frame& frame, const Formula& f);
bool frame_valid(const Frame& frame, const std::vector<QuasiInequality>& qs);

bool reflexive(const Frame& f);
bool transitive(const Frame& f);
bool symmetric(const Frame& f);

}  // namespace oracle
