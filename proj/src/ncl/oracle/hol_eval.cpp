#include "ncl/oracle/hol_eval.hpp"

#include <unordered_map>

#include "ncl/error.hpp"
#include "ncl/holkit/hol_printer.hpp"
#include "ncl/holkit/typecheck.hpp"

namespace ncl::oracle {

using namespace ncl::hol;

namespace {

struct TypeInfo {
  const TypeInfo* arg = nullptr;
  const TypeInfo* res = nullptr;
  std::string text;
  hol::HolTypePtr hol;
  bool small = true;
  bool card_known = true;
  uint64_t card = 0;
  // Small function types.
  uint64_t entries = 0;
  bool packed = false;
  unsigned res_bits = 0;
  uint64_t res_mask = 0;
  std::vector<uint64_t> powers;

  bool is_function() const { return arg != nullptr; }

  uint64_t extract(uint64_t v, uint64_t i) const {
    if (packed) return res_bits == 0 ? 0 : (v >> (i * res_bits)) & res_mask;
    return (v / powers[i]) % res->card;
  }
  uint64_t place(uint64_t r, uint64_t i) const {
    return packed ? (res_bits == 0 ? 0 : r << (i * res_bits)) : r * powers[i];
  }
};

enum class Op { Var, Const, App, Redex, Lambda, Forall, Exists, Not, And, Or, Implies, Iff, Equal, True, False };

struct Node {
  Op op = Op::True;
  const TypeInfo* type = nullptr;
  const TypeInfo* var_type = nullptr;  // binders
  std::size_t slot = 0;                // Var and binders
  int id = -1;                         // Const
  const Node* a = nullptr;
  const Node* b = nullptr;
  const HolTerm* source = nullptr;
};

struct ConstSlot {
  std::string name;
  HolTypePtr type;
  HolTermPtr body;          // definitions only
  const Node* node = nullptr;
  bool closed = false;      // definition independent of the model
  bool resolving = false;
  bool has_value = false;
  uint64_t generation = 0;  // model generation of a model-dependent value
  Value value;
};

}  // namespace

struct HolEvaluator::Impl {
  struct Context {
    std::map<std::string, uint64_t> carriers;
    std::map<std::string, std::unique_ptr<TypeInfo>> types;
    std::vector<std::unique_ptr<Node>> pool;
    std::vector<ConstSlot> consts;
    std::map<std::string, int> const_ids;
    std::unordered_map<const HolTerm*, const Node*> compiled;
  };

  ConstantTypes decl_types;
  std::vector<std::pair<std::string, HolTermPtr>> definitions;
  uint64_t budget;
  std::map<std::string, std::unique_ptr<Context>> contexts;
  Context* ctx = nullptr;
  uint64_t generation = 0;
  std::vector<Value> env;
  HolEvaluator* owner = nullptr;

  // ---- types -------------------------------------------------------------

  const TypeInfo* info(const HolTypePtr& t) {
    std::string key = to_string(*t);
    auto it = ctx->types.find(key);
    if (it != ctx->types.end()) return it->second.get();
    auto ti = std::make_unique<TypeInfo>();
    ti->text = key;
    ti->hol = t;
    if (!t->is_function()) {
      uint64_t card = 0;
      if (t->name == "$o") {
        card = 2;
      } else {
        auto c = ctx->carriers.find(t->name);
        if (c == ctx->carriers.end())
          throw Error(ErrorCode::InternalError, "no carrier for type " + t->name);
        card = c->second;
      }
      ti->card = card;
    } else {
      ti->arg = info(t->arg);
      ti->res = info(t->result);
      layout(*ti);
    }
    const TypeInfo* out = ti.get();
    ctx->types[key] = std::move(ti);
    return out;
  }

  static void layout(TypeInfo& ti) {
    const TypeInfo& a = *ti.arg;
    const TypeInfo& r = *ti.res;
    if (!a.small || !a.card_known || !r.small || !r.card_known || a.card > 64 * 64) {
      ti.small = false;
      ti.card_known = false;
      return;
    }
    ti.entries = a.card;
    uint64_t rc = r.card;
    if ((rc & (rc - 1)) == 0) {
      unsigned k = 0;
      while ((uint64_t{1} << k) < rc) ++k;
      if (k * a.card > 64) {
        ti.small = false;
        ti.card_known = false;
        return;
      }
      ti.packed = true;
      ti.res_bits = k;
      ti.res_mask = k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
      unsigned total = static_cast<unsigned>(k * a.card);
      ti.card_known = total < 64;
      ti.card = ti.card_known ? uint64_t{1} << total : 0;
      return;
    }
    uint64_t p = 1;
    for (uint64_t i = 0; i < a.card; ++i) {
      ti.powers.push_back(p);
      if (p > UINT64_MAX / rc) {
        ti.small = false;
        ti.card_known = false;
        return;
      }
      p *= rc;
    }
    ti.card = p;
  }

  // ---- compilation -------------------------------------------------------

  Node* make(Op op, const TypeInfo* type, const HolTerm* source) {
    ctx->pool.push_back(std::make_unique<Node>());
    Node* n = ctx->pool.back().get();
    n->op = op;
    n->type = type;
    n->source = source;
    return n;
  }

  int const_id(const std::string& name) {
    auto it = ctx->const_ids.find(name);
    if (it != ctx->const_ids.end()) return it->second;
    auto dt = decl_types.find(name);
    if (dt == decl_types.end()) throw Error(ErrorCode::TypeError, "undeclared constant " + name);
    ConstSlot slot;
    slot.name = name;
    slot.type = dt->second;
    int id = static_cast<int>(ctx->consts.size());
    ctx->consts.push_back(slot);
    ctx->const_ids[name] = id;
    for (const auto& [n, body] : definitions) {
      if (n != name) continue;
      ctx->consts[id].body = body;
      ctx->consts[id].resolving = true;
      std::vector<HolTypePtr> scope;
      std::vector<std::string> outer;
      outer.swap(names_);
      const Node* node = compile(body, scope);
      names_.swap(outer);
      bool closed = true;
      for (const auto& c : constants(body)) {
        int cid = const_id(c);
        closed = closed && !ctx->consts[cid].resolving && ctx->consts[cid].closed;
      }
      ctx->consts[id].node = node;
      ctx->consts[id].closed = closed;
      ctx->consts[id].resolving = false;
    }
    return id;
  }

  const Node* compile(const HolTermPtr& t, std::vector<HolTypePtr>& scope) {
    switch (t->kind) {
      case TermKind::Var: {
        Node* n = make(Op::Var, info(t->type), t.get());
        n->slot = lookup_slot(t->name);
        return n;
      }
      case TermKind::Const: {
        int id = const_id(t->name);
        Node* n = make(Op::Const, info(ctx->consts[id].type), t.get());
        n->id = id;
        return n;
      }
      case TermKind::True:
        return make(Op::True, info(bool_type()), t.get());
      case TermKind::False:
        return make(Op::False, info(bool_type()), t.get());
      case TermKind::App: {
        const Node* f = compile(t->left, scope);
        const Node* x = compile(t->right, scope);
        if (!f->type->is_function())
          throw Error(ErrorCode::TypeError, "applying a non-function: " + print_term(t));
        Node* n = make(f->op == Op::Lambda ? Op::Redex : Op::App, f->type->res, t.get());
        n->a = f;
        n->b = x;
        return n;
      }
      case TermKind::Lambda:
      case TermKind::Forall:
      case TermKind::Exists: {
        const TypeInfo* vt = info(t->type);
        std::size_t slot = names_.size();
        names_.push_back(t->name);
        scope.push_back(t->type);
        const Node* body = compile(t->left, scope);
        scope.pop_back();
        names_.pop_back();
        Op op = t->kind == TermKind::Lambda ? Op::Lambda
                : t->kind == TermKind::Forall ? Op::Forall : Op::Exists;
        const TypeInfo* type = op == Op::Lambda ? info(arrow(t->type, type_of_node(body))) : info(bool_type());
        Node* n = make(op, type, t.get());
        n->var_type = vt;
        n->slot = slot;
        n->a = body;
        return n;
      }
      case TermKind::Not: {
        Node* n = make(Op::Not, info(bool_type()), t.get());
        n->a = compile(t->left, scope);
        return n;
      }
      default: {
        static const std::map<TermKind, Op> ops = {{TermKind::And, Op::And}, {TermKind::Or, Op::Or},
                                                   {TermKind::Implies, Op::Implies},
                                                   {TermKind::Iff, Op::Iff}, {TermKind::Equal, Op::Equal}};
        Node* n = make(ops.at(t->kind), info(bool_type()), t.get());
        n->a = compile(t->left, scope);
        n->b = compile(t->right, scope);
        return n;
      }
    }
  }

  static HolTypePtr type_of_node(const Node* n) { return n->type->hol; }

  std::size_t lookup_slot(const std::string& name) {
    for (std::size_t i = names_.size(); i-- > 0;)
      if (names_[i] == name) return i;
    throw Error(ErrorCode::TypeError, "unbound variable " + name);
  }

  std::vector<std::string> names_;

  // ---- evaluation --------------------------------------------------------

  Value eval(const Node* n);

  Value apply(const Value& f, const TypeInfo* ft, const Value& x) {
    if (f.big) return f.big->apply(*owner, x);
    return Value{ft->extract(f.bits, x.bits), nullptr};
  }

  Value constant(int id) {
    ConstSlot& c = ctx->consts[id];
    if (!c.body) {
      if (c.generation != generation || !c.has_value)
        throw Error(ErrorCode::InternalError, "no interpretation for constant " + c.name);
      return c.value;
    }
    if (c.has_value && (c.closed || c.generation == generation)) return c.value;
    std::vector<Value> saved;
    saved.swap(env);
    Value v = eval(c.node);
    env.swap(saved);
    ConstSlot& again = ctx->consts[id];
    again.value = v;
    again.has_value = true;
    again.generation = generation;
    return v;
  }

  Value materialize(const Node* lambda) {
    const TypeInfo* t = lambda->type;
    uint64_t bits = 0;
    for (uint64_t i = 0; i < t->entries; ++i) {
      env.push_back(Value{i, nullptr});
      Value r = eval(lambda->a);
      env.pop_back();
      bits += t->place(r.bits, i);
    }
    return Value{bits, nullptr};
  }

  uint64_t quantifier_range(const Node* n) {
    const TypeInfo* vt = n->var_type;
    if (!vt->small || !vt->card_known || vt->card > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "quantification over " + vt->text + " exceeds the evaluation budget");
    return vt->card;
  }
};

namespace {

struct Closure : BigFunction {
  HolEvaluator::Impl* impl;
  const Node* lambda;
  std::vector<Value> env;
  std::unordered_map<uint64_t, Value> memo;

  Value apply(HolEvaluator&, const Value& arg) override {
    bool key = !arg.big;
    if (key) {
      auto it = memo.find(arg.bits);
      if (it != memo.end()) return it->second;
    }
    std::vector<Value> saved;
    saved.swap(impl->env);
    impl->env = env;
    impl->env.push_back(arg);
    Value r = impl->eval(lambda->a);
    impl->env.swap(saved);
    if (key) memo.emplace(arg.bits, r);
    return r;
  }
};

}  // namespace

Value HolEvaluator::Impl::eval(const Node* n) {
  switch (n->op) {
    case Op::Var:
      return env[n->slot];
    case Op::Const:
      return constant(n->id);
    case Op::True:
      return Value{1, nullptr};
    case Op::False:
      return Value{0, nullptr};
    case Op::Redex: {
      Value x = eval(n->b);
      env.push_back(x);
      Value r = eval(n->a->a);
      env.pop_back();
      return r;
    }
    case Op::App: {
      Value f = eval(n->a);
      Value x = eval(n->b);
      return apply(f, n->a->type, x);
    }
    case Op::Lambda: {
      if (n->type->small) return materialize(n);
      auto c = std::make_shared<Closure>();
      c->impl = this;
      c->lambda = n;
      c->env = env;
      return Value{0, c};
    }
    case Op::Forall:
    case Op::Exists: {
      bool universal = n->op == Op::Forall;
      uint64_t range = quantifier_range(n);
      for (uint64_t i = 0; i < range; ++i) {
        env.push_back(Value{i, nullptr});
        bool v = eval(n->a).bits != 0;
        env.pop_back();
        if (v != universal) return Value{universal ? 0u : 1u, nullptr};
      }
      return Value{universal ? 1u : 0u, nullptr};
    }
    case Op::Not:
      return Value{eval(n->a).bits ? 0u : 1u, nullptr};
    case Op::And:
      return Value{eval(n->a).bits && eval(n->b).bits ? 1u : 0u, nullptr};
    case Op::Or:
      return Value{eval(n->a).bits || eval(n->b).bits ? 1u : 0u, nullptr};
    case Op::Implies:
      return Value{!eval(n->a).bits || eval(n->b).bits ? 1u : 0u, nullptr};
    case Op::Iff:
      return Value{(eval(n->a).bits != 0) == (eval(n->b).bits != 0) ? 1u : 0u, nullptr};
    case Op::Equal: {
      Value l = eval(n->a);
      Value r = eval(n->b);
      if (l.big || r.big)
        throw Error(ErrorCode::BudgetExceeded, "equality between large function values");
      return Value{l.bits == r.bits ? 1u : 0u, nullptr};
    }
  }
  return Value{};
}

HolEvaluator::HolEvaluator(const HolProblem& problem, uint64_t quantifier_budget)
    : impl_(std::make_unique<Impl>()) {
  impl_->decl_types = constant_types(problem);
  for (const auto& e : problem.entries)
    if (e.segment == Segment::Definition) impl_->definitions.emplace_back(e.symbol, e.formula->right);
  impl_->budget = quantifier_budget;
  impl_->owner = this;
}

HolEvaluator::~HolEvaluator() = default;

void HolEvaluator::set_carriers(const std::map<std::string, uint64_t>& carriers) {
  std::string key;
  for (const auto& [t, n] : carriers) key += t + "=" + std::to_string(n) + ";";
  auto& slot = impl_->contexts[key];
  if (!slot) {
    slot = std::make_unique<Impl::Context>();
    slot->carriers = carriers;
  }
  impl_->ctx = slot.get();
  ++impl_->generation;
}

void HolEvaluator::set_constant(const std::string& name, Value value) {
  int id = impl_->const_id(name);
  ConstSlot& c = impl_->ctx->consts[id];
  if (c.body) throw Error(ErrorCode::InternalError, "cannot interpret defined constant " + name);
  c.value = std::move(value);
  c.has_value = true;
  c.generation = impl_->generation;
}

void HolEvaluator::set_interp(const FiniteInterp& interp) {
  set_carriers(interp.carriers);
  for (const auto& [name, v] : interp.constants) set_constant(name, v);
}

Value HolEvaluator::encode(const HolTypePtr& type,
                           const std::function<uint64_t(const std::vector<uint64_t>&)>& table) {
  std::vector<uint64_t> args;
  std::function<uint64_t(const TypeInfo*)> rec = [&](const TypeInfo* t) -> uint64_t {
    if (!t->is_function()) return table(args);
    if (!t->small)
      throw Error(ErrorCode::BudgetExceeded, "model table of type " + t->text + " is too large");
    uint64_t bits = 0;
    for (uint64_t i = 0; i < t->entries; ++i) {
      args.push_back(i);
      bits += t->place(rec(t->res), i);
      args.pop_back();
    }
    return bits;
  };
  const TypeInfo* t = impl_->info(type);
  return Value{rec(t), nullptr};
}

Value HolEvaluator::eval(const HolTermPtr& term) {
  auto it = impl_->ctx->compiled.find(term.get());
  const Node* node;
  if (it != impl_->ctx->compiled.end()) {
    node = it->second;
  } else {
    std::vector<HolTypePtr> scope;
    node = impl_->compile(term, scope);
    impl_->ctx->compiled[term.get()] = node;
  }
  impl_->env.clear();
  return impl_->eval(node);
}

Value HolEvaluator::apply(const Value& fn, const Value& arg, const HolTypePtr& fn_type) {
  return impl_->apply(fn, impl_->info(fn_type), arg);
}

}  // namespace ncl::oracle
