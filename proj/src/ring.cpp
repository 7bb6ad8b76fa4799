#include "degloci/ring.hpp"

#include <set>

#include "degloci/error.hpp"

namespace degloci {

RingPtr PolyRing::make(Field field, std::vector<std::string> vars, OrderKind order,
                       std::vector<int> weights, int block) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
  }
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (weights.size() != vars.size()) throw PreconditionError("weight vector length mismatch");
  for (int w : weights)
    if (w < 0) throw PreconditionError("variable weights must be nonnegative");
  if (order == OrderKind::Block && (block < 0 || block > static_cast<int>(vars.size())))
    throw PreconditionError("block size out of range");
  auto ring = std::shared_ptr<PolyRing>(new PolyRing());
  ring->field_ = field;
  ring->vars_ = std::move(vars);
  ring->weights_ = std::move(weights);
  ring->order_ = MonomialOrder{order, ring->nvars(), order == OrderKind::Block ? block : 0};
  return ring;
}

int PolyRing::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::vector<int> PolyRing::positive_degree_vars() const {
  std::vector<int> out;
  for (int i = 0; i < nvars(); ++i)
    if (weight(i) > 0) out.push_back(i);
  return out;
}

RingPtr PolyRing::with_order(OrderKind kind, int block) const {
  return make(field_, vars_, kind, weights_, block);
}

RingPtr PolyRing::with_field(Field field) const {
  return make(field, vars_, order_.kind, weights_, order_.block);
}

RingPtr PolyRing::with_vars(std::vector<std::string> vars, std::vector<int> weights) const {
  OrderKind kind = order_.kind == OrderKind::Block ? OrderKind::Grevlex : order_.kind;
  return make(field_, std::move(vars), kind, std::move(weights));
}

bool PolyRing::same_as(const PolyRing& other) const {
  return this == &other || (field_ == other.field_ && vars_ == other.vars_ &&
                            weights_ == other.weights_ && order_ == other.order_);
}

std::string PolyRing::describe() const {
  std::string s = field_.name() + "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += vars_[static_cast<std::size_t>(i)];
  }
  return s + "] " + order_.name();
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!a || !b) throw RingMismatch(std::string(where) + ": polynomial without a ring");
  if (a != b && !a->same_as(*b))
    throw RingMismatch(std::string(where) + ": " + a->describe() + " vs " + b->describe());
}

}  // namespace degloci
