#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "qseries/qexpr.hpp"
#include "qseries/qfunctions.hpp"

namespace qseries::qexpr {

namespace {

Expr node(Node n) { return std::make_shared<const Node>(std::move(n)); }

bool is_binary(NodeKind k) {
  return k == NodeKind::Add || k == NodeKind::Subtract ||
         k == NodeKind::Multiply || k == NodeKind::Divide;
}

}  // namespace

Expr make_integer(const mpz_class& value) {
  if (value < 0) throw std::invalid_argument("integer literals are nonnegative");
  Node n;
  n.kind = NodeKind::Integer;
  n.value = value;
  return node(std::move(n));
}

Expr make_qpower(long exponent) {
  if (exponent < 0) throw std::invalid_argument("q-power must be nonnegative");
  Node n;
  n.kind = NodeKind::QPower;
  n.exponent = exponent;
  return node(std::move(n));
}

Expr make_euler(std::size_t k) {
  if (k == 0) throw std::invalid_argument("f_k needs k >= 1");
  Node n;
  n.kind = NodeKind::Euler;
  n.k = k;
  return node(std::move(n));
}

Expr make_cubic_theta(std::size_t k) {
  if (k == 0) throw std::invalid_argument("a(q^k) needs k >= 1");
  Node n;
  n.kind = NodeKind::CubicTheta;
  n.k = k;
  return node(std::move(n));
}

Expr make_septic(char which) {
  if (which != 'A' && which != 'B' && which != 'C') {
    throw std::invalid_argument("septic atom must be A, B or C");
  }
  Node n;
  n.kind = NodeKind::Septic;
  n.septic = which;
  return node(std::move(n));
}

Expr make_theta(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("theta needs a, b >= 1");
  Node n;
  n.kind = NodeKind::Theta;
  n.a = a;
  n.b = b;
  return node(std::move(n));
}

Expr make_negate(Expr e) {
  Node n;
  n.kind = NodeKind::Negate;
  n.children = {std::move(e)};
  return node(std::move(n));
}

Expr make_binary(NodeKind kind, Expr lhs, Expr rhs) {
  if (!is_binary(kind)) throw std::invalid_argument("not a binary operator");
  Node n;
  n.kind = kind;
  n.children = {std::move(lhs), std::move(rhs)};
  return node(std::move(n));
}

Expr make_power(Expr base, long exponent) {
  if (base->kind == NodeKind::QPower && base->exponent == 1 && exponent >= 0) {
    return make_qpower(exponent);
  }
  Node n;
  n.kind = NodeKind::Power;
  n.exponent = exponent;
  n.children = {std::move(base)};
  return node(std::move(n));
}

Expr make_substitute(Expr e, std::size_t k) {
  if (e->kind != NodeKind::Septic) {
    throw std::invalid_argument("power substitution applies to A, B or C");
  }
  if (k == 0) throw std::invalid_argument("substitution power must be >= 1");
  Node n;
  n.kind = NodeKind::Substitute;
  n.k = k;
  n.children = {std::move(e)};
  return node(std::move(n));
}

namespace {

int precedence(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Subtract:
      return 1;
    case NodeKind::Multiply:
    case NodeKind::Divide:
      return 2;
    case NodeKind::Negate:
      return 3;
    case NodeKind::Power:
      return 4;
    case NodeKind::QPower:
      return n.exponent == 1 ? 5 : 4;
    default:
      return 5;
  }
}

std::string print_at(const Expr& e, int min_prec);

std::string print_node(const Node& n) {
  auto q_arg = [](std::size_t k) {
    return k == 1 ? std::string("(q)") : "(q^" + std::to_string(k) + ")";
  };
  switch (n.kind) {
    case NodeKind::Integer:
      return n.value.get_str();
    case NodeKind::QPower:
      return n.exponent == 1 ? "q" : "q^" + std::to_string(n.exponent);
    case NodeKind::Euler:
      return "f" + std::to_string(n.k);
    case NodeKind::CubicTheta:
      return "a" + q_arg(n.k);
    case NodeKind::Septic:
      return std::string(1, n.septic);
    case NodeKind::Theta:
      return "theta(" + std::to_string(n.a) + "," + std::to_string(n.b) + ")";
    case NodeKind::Negate:
      return "-" + print_at(n.children[0], 3);
    case NodeKind::Add:
      return print_at(n.children[0], 1) + " + " + print_at(n.children[1], 2);
    case NodeKind::Subtract:
      return print_at(n.children[0], 1) + " - " + print_at(n.children[1], 2);
    case NodeKind::Multiply:
      return print_at(n.children[0], 2) + "*" + print_at(n.children[1], 3);
    case NodeKind::Divide:
      return print_at(n.children[0], 2) + "/" + print_at(n.children[1], 3);
    case NodeKind::Power:
      return print_at(n.children[0], 5) + "^" + std::to_string(n.exponent);
    case NodeKind::Substitute:
      return std::string(1, n.children[0]->septic) + q_arg(n.k);
  }
  return {};
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s = print_node(*e);
  return precedence(*e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Expr& e) { return print_at(e, 0); }

bool structurally_equal(const Expr& x, const Expr& y) {
  if (x->kind != y->kind || x->value != y->value ||
      x->exponent != y->exponent || x->k != y->k || x->a != y->a ||
      x->b != y->b || x->septic != y->septic ||
      x->children.size() != y->children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x->children.size(); ++i) {
    if (!structurally_equal(x->children[i], y->children[i])) return false;
  }
  return true;
}

EvalError::EvalError(std::string subexpression, const std::string& reason)
    : std::runtime_error("cannot evaluate '" + subexpression + "': " + reason),
      subexpression_(std::move(subexpression)) {}

namespace {

class Evaluator {
 public:
  explicit Evaluator(CoefficientRing ring) : ring_(ring) {}

  Series eval(const Expr& e, std::size_t order) {
    try {
      return eval_node(*e, order);
    } catch (const EvalError&) {
      throw;
    } catch (const SeriesError& err) {
      throw EvalError(print(e), err.what());
    }
  }

 private:
  Series eval_node(const Node& n, std::size_t order) {
    switch (n.kind) {
      case NodeKind::Integer:
        return Series::monomial(ring_, order, 0, n.value);
      case NodeKind::QPower:
        return Series::monomial(ring_, order,
                                static_cast<std::size_t>(n.exponent));
      case NodeKind::Euler:
        return cached({0, n.k, 0, order},
                      [&] { return euler_f(n.k, order, ring_); });
      case NodeKind::CubicTheta:
        return cached({1, n.k, 0, order},
                      [&] { return borwein_a(n.k, order, ring_); });
      case NodeKind::Theta:
        return cached({2, n.a, n.b, order}, [&] {
          return ramanujan_theta({n.a, n.b}, order, ring_);
        });
      case NodeKind::Septic:
        return septic(n.septic, order);
      case NodeKind::Negate:
        return negate(eval(n.children[0], order));
      case NodeKind::Add:
        return add(eval(n.children[0], order), eval(n.children[1], order));
      case NodeKind::Subtract:
        return subtract(eval(n.children[0], order),
                        eval(n.children[1], order));
      case NodeKind::Multiply:
        return mul(eval(n.children[0], order), eval(n.children[1], order));
      case NodeKind::Divide:
        return divide(eval(n.children[0], order), eval(n.children[1], order));
      case NodeKind::Power:
        return power(eval(n.children[0], order), n.exponent);
      case NodeKind::Substitute: {
        // Evaluate at ceil(order / k) so that the substituted series is
        // known all the way to `order`.
        const std::size_t inner = (order + n.k - 1) / n.k;
        return substitute_power(eval(n.children[0], inner), n.k, order);
      }
    }
    throw std::logic_error("unhandled expression node");
  }

  Series septic(char which, std::size_t order) {
    auto it = septic_.find(order);
    if (it == septic_.end()) {
      it = septic_.emplace(order, septic_abc(order, ring_)).first;
    }
    switch (which) {
      case 'A': return it->second.A;
      case 'B': return it->second.B;
      default: return it->second.C;
    }
  }

  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t>;

  template <class F>
  Series cached(const Key& key, F&& build) {
    auto it = atoms_.find(key);
    if (it == atoms_.end()) it = atoms_.emplace(key, build()).first;
    return it->second;
  }

  CoefficientRing ring_;
  std::map<Key, Series> atoms_;
  std::map<std::size_t, SepticQuotients> septic_;
};

}  // namespace

Series evaluate(const Expr& e, const EvalContext& ctx) {
  if (ctx.order == 0) throw std::invalid_argument("evaluation order must be >= 1");
  return Evaluator(ctx.ring).eval(e, ctx.order);
}

}  // namespace qseries::qexpr
