#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <splitlimit/series.hpp>

namespace splitlimit {

// Expression DAG for combinatorial specifications: {+, *, exp_ge(r),
// constants, z, u, unknowns, baked-in known series}.  Shared subexpressions
// are shared pointers, and the evaluator memoizes per pass, so writing the
// same argument series once and referencing it from several equations costs
// one evaluation.
class SpecExpr {
 public:
  enum class Kind { Const, Z, U, Ref, Baked, Add, Mul, ExpGe };

  using Ptr = std::shared_ptr<const SpecExpr>;

  static Ptr constant(Rat c);
  static Ptr z();
  static Ptr u();
  static Ptr ref(std::string name);
  static Ptr baked(TruncatedSeries s);
  static Ptr add(std::vector<Ptr> args);
  static Ptr mul(std::vector<Ptr> args);
  static Ptr exp_ge(Ptr arg, int r);

  Kind kind() const { return kind_; }
  const Rat& const_value() const { return cval_; }
  const std::string& name() const { return name_; }
  const TruncatedSeries& baked_series() const { return baked_; }
  const std::vector<Ptr>& args() const { return args_; }
  int exp_threshold() const { return r_; }

  void collect_refs(std::vector<std::string>& out) const;
  bool mentions_u() const;

 private:
  SpecExpr() = default;

  Kind kind_ = Kind::Const;
  Rat cval_;
  std::string name_;
  TruncatedSeries baked_;
  std::vector<Ptr> args_;
  int r_ = 0;
};

using ExprPtr = SpecExpr::Ptr;

// small builder DSL
ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);

// A combinatorial specification: each unknown is the left side of exactly one
// equation; right sides may reference declared unknowns, z and u.
struct SpecSystem {
  std::vector<std::pair<std::string, ExprPtr>> equations;
  bool bivariate = false;

  void validate() const;
};

// Jacobi-style fixpoint solve, one pass over all equations per round, with a
// truncation order that grows by one per pass: a well-founded system settles
// at least one new coefficient degree per pass, and the iteration stops when
// a full-order pass changes nothing.  Throws "ill-founded specification" when
// the pass budget is exhausted without stabilizing.
std::map<std::string, TruncatedSeries> solve_fixpoint(const SpecSystem& sys, int order);

}  // namespace splitlimit
