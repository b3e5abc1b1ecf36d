#include <splitlimit/specsystem.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace splitlimit {

ExprPtr SpecExpr::constant(Rat c) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Const;
  e->cval_ = std::move(c);
  return e;
}

ExprPtr SpecExpr::z() {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Z;
  return e;
}

ExprPtr SpecExpr::u() {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::U;
  return e;
}

ExprPtr SpecExpr::ref(std::string name) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Ref;
  e->name_ = std::move(name);
  return e;
}

ExprPtr SpecExpr::baked(TruncatedSeries s) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Baked;
  e->baked_ = std::move(s);
  return e;
}

ExprPtr SpecExpr::add(std::vector<Ptr> args) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Add;
  e->args_ = std::move(args);
  return e;
}

ExprPtr SpecExpr::mul(std::vector<Ptr> args) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::Mul;
  e->args_ = std::move(args);
  return e;
}

ExprPtr SpecExpr::exp_ge(Ptr arg, int r) {
  auto e = std::shared_ptr<SpecExpr>(new SpecExpr);
  e->kind_ = Kind::ExpGe;
  e->args_ = {std::move(arg)};
  e->r_ = r;
  return e;
}

void SpecExpr::collect_refs(std::vector<std::string>& out) const {
  if (kind_ == Kind::Ref) out.push_back(name_);
  for (const auto& a : args_) a->collect_refs(out);
}

bool SpecExpr::mentions_u() const {
  if (kind_ == Kind::U) return true;
  if (kind_ == Kind::Baked && baked_.vars() == 2) return true;
  return std::any_of(args_.begin(), args_.end(),
                     [](const Ptr& a) { return a->mentions_u(); });
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return SpecExpr::add({a, b}); }
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return SpecExpr::mul({a, b}); }

void SpecSystem::validate() const {
  std::set<std::string> lhs;
  for (const auto& [name, rhs] : equations) {
    if (!lhs.insert(name).second)
      throw std::invalid_argument("unknown '" + name + "' defined twice");
    (void)rhs;
  }
  for (const auto& [name, rhs] : equations) {
    std::vector<std::string> refs;
    rhs->collect_refs(refs);
    for (const auto& r : refs)
      if (!lhs.count(r))
        throw std::invalid_argument("equation for '" + name +
                                    "' references undeclared unknown '" + r + "'");
  }
}

namespace {

class PassEvaluator {
 public:
  PassEvaluator(const std::map<std::string, TruncatedSeries>& env, int order, int vars)
      : env_(env), order_(order), vars_(vars) {}

  const TruncatedSeries& eval(const SpecExpr& e) {
    auto it = memo_.find(&e);
    if (it != memo_.end()) return it->second;
    TruncatedSeries v = compute(e);
    return memo_.emplace(&e, std::move(v)).first->second;
  }

 private:
  TruncatedSeries compute(const SpecExpr& e) {
    switch (e.kind()) {
      case SpecExpr::Kind::Const:
        return TruncatedSeries::constant(e.const_value(), order_, vars_);
      case SpecExpr::Kind::Z:
        return TruncatedSeries::z(order_, vars_);
      case SpecExpr::Kind::U:
        if (vars_ != 2) throw std::logic_error("u in a univariate system");
        return TruncatedSeries::u(order_);
      case SpecExpr::Kind::Ref: {
        const auto& s = env_.at(e.name());
        TruncatedSeries t = s.order() > order_ ? s.truncated(order_) : s;
        if (t.vars() == 1 && vars_ == 2) t = t.promoted_bivariate();
        return t;
      }
      case SpecExpr::Kind::Baked: {
        const auto& s = e.baked_series();
        if (s.order() < order_)
          throw std::invalid_argument("baked series order too low for requested solve");
        TruncatedSeries t = s.truncated(order_);
        if (t.vars() == 1 && vars_ == 2) t = t.promoted_bivariate();
        return t;
      }
      case SpecExpr::Kind::Add: {
        TruncatedSeries acc = TruncatedSeries::zero(order_, vars_);
        for (const auto& a : e.args()) acc = acc + eval(*a);
        return acc;
      }
      case SpecExpr::Kind::Mul: {
        TruncatedSeries acc = TruncatedSeries::constant(1, order_, vars_);
        for (const auto& a : e.args()) acc = acc * eval(*a);
        return acc;
      }
      case SpecExpr::Kind::ExpGe:
        return splitlimit::exp_ge(eval(*e.args()[0]), e.exp_threshold());
    }
    throw std::logic_error("unreachable expression kind");
  }

  const std::map<std::string, TruncatedSeries>& env_;
  int order_;
  int vars_;
  std::unordered_map<const SpecExpr*, TruncatedSeries> memo_;
};

}  // namespace

std::map<std::string, TruncatedSeries> solve_fixpoint(const SpecSystem& sys, int order) {
  if (order < 0) throw std::invalid_argument("solve_fixpoint: order must be >= 0");
  sys.validate();
  const int vars = sys.bivariate ? 2 : 1;

  std::map<std::string, TruncatedSeries> env;
  for (const auto& [name, rhs] : sys.equations)
    env.emplace(name, TruncatedSeries::zero(order, vars));

  const int max_passes = 2 * order + 16;
  int t = 0;
  for (int pass = 1; pass <= max_passes; ++pass) {
    PassEvaluator ev(env, t, vars);
    bool changed = false;
    std::map<std::string, TruncatedSeries> next;
    for (const auto& [name, rhs] : sys.equations) {
      TruncatedSeries v = ev.eval(*rhs);
      if (v != env.at(name).truncated(t)) changed = true;
      next.emplace(name, std::move(v));
    }
    for (auto& [name, v] : next) {
      // splice the freshly computed prefix into the full-order value
      TruncatedSeries& dst = env.at(name);
      for (int n = 0; n <= t; ++n) {
        int jmax = std::max(dst.u_degree(n), v.u_degree(n));
        for (int j = 0; j <= jmax; ++j) dst.set_coeff(n, j, v.coeff(n, j));
      }
    }
    if (!changed && t == order) return env;
    if (t < order) ++t;
  }
  throw std::runtime_error("ill-founded specification");
}

}  // namespace splitlimit
