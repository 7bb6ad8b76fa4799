#pragma once

#include <memory>
#include <string>
#include <vector>

#include "degloci/coeff.hpp"
#include "degloci/monomial.hpp"

namespace degloci {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A graded polynomial ring K[x_0..x_{n-1}] with a fixed monomial order.
/// Weights are the nonnegative grading degrees of the variables; the
/// irrelevant ideal m is generated by the variables of positive weight.
class PolyRing {
 public:
  static RingPtr make(Field field, std::vector<std::string> vars,
                      OrderKind order = OrderKind::Grevlex, std::vector<int> weights = {},
                      int block = 0);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;
  std::vector<int> positive_degree_vars() const;

  RingPtr with_order(OrderKind kind, int block = 0) const;
  RingPtr with_field(Field field) const;
  /// Same field and order kind; variables and weights replaced.
  RingPtr with_vars(std::vector<std::string> vars, std::vector<int> weights) const;

  /// Structural equality (field, variables, weights, order).
  bool same_as(const PolyRing& other) const;
  std::string describe() const;

 private:
  PolyRing() = default;
  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  MonomialOrder order_;
};

/// Throws RingMismatch unless the two rings are structurally equal.
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace degloci
