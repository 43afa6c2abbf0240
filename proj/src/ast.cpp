#include "vocheck/ast.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vocheck {

ExprPtr Expr::clone() const {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->int_val = int_val;
  e->bool_val = bool_val;
  e->name = name;
  e->pos = pos;
  e->kids.reserve(kids.size());
  for (const auto& k : kids) e->kids.push_back(k->clone());
  return e;
}

ExprPtr make_name(std::string n, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->op = Expr::Op::Name;
  e->name = std::move(n);
  e->pos = std::move(pos);
  return e;
}

ExprPtr make_int(long long v, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->op = Expr::Op::IntLit;
  e->int_val = v;
  e->pos = std::move(pos);
  return e;
}

ExprPtr make_bool(bool v, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->op = Expr::Op::BoolLit;
  e->bool_val = v;
  e->pos = std::move(pos);
  return e;
}

ExprPtr make_binary(Expr::Op op, ExprPtr l, ExprPtr r, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->kids.push_back(std::move(l));
  e->kids.push_back(std::move(r));
  e->pos = std::move(pos);
  return e;
}

ExprPtr make_unary(Expr::Op op, ExprPtr k, SourcePos pos) {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->kids.push_back(std::move(k));
  e->pos = std::move(pos);
  return e;
}

namespace {

const char* op_token(Expr::Op op) {
  switch (op) {
    case Expr::Op::Eq: return "=";
    case Expr::Op::Ne: return "/=";
    case Expr::Op::Lt: return "<";
    case Expr::Op::Le: return "<=";
    case Expr::Op::Gt: return ">";
    case Expr::Op::Ge: return ">=";
    case Expr::Op::In: return "in";
    case Expr::Op::Add: return "+";
    case Expr::Op::Sub: return "-";
    case Expr::Op::Mul: return "*";
    case Expr::Op::And: return "and";
    case Expr::Op::Or: return "or";
    case Expr::Op::Implies: return "=>";
    case Expr::Op::Range: return "..";
    case Expr::Op::Override: return "<+";
    default: return "?";
  }
}

// Precedence for printing with minimal parentheses; higher binds tighter.
int prec(Expr::Op op) {
  switch (op) {
    case Expr::Op::Implies: return 1;
    case Expr::Op::Or: return 2;
    case Expr::Op::And: return 3;
    case Expr::Op::Not: return 4;
    case Expr::Op::Eq:
    case Expr::Op::Ne:
    case Expr::Op::Lt:
    case Expr::Op::Le:
    case Expr::Op::Gt:
    case Expr::Op::Ge:
    case Expr::Op::In: return 5;
    case Expr::Op::Range: return 6;
    case Expr::Op::Override: return 7;
    case Expr::Op::Add:
    case Expr::Op::Sub: return 8;
    case Expr::Op::Mul: return 9;
    case Expr::Op::Neg: return 10;
    default: return 11;
  }
}

void print_expr(const Expr& e, std::ostream& os, int parent_prec) {
  int p = prec(e.op);
  bool paren = p < parent_prec;
  switch (e.op) {
    case Expr::Op::IntLit: os << e.int_val; return;
    case Expr::Op::BoolLit: os << (e.bool_val ? "TRUE" : "FALSE"); return;
    case Expr::Op::Name: os << e.name; return;
    case Expr::Op::SetLit: {
      os << "{";
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) os << ", ";
        print_expr(*e.kids[i], os, 0);
      }
      os << "}";
      return;
    }
    case Expr::Op::MapLit: {
      os << "{";
      for (size_t i = 0; i + 1 < e.kids.size(); i += 2) {
        if (i) os << ", ";
        print_expr(*e.kids[i], os, 0);
        os << " |-> ";
        print_expr(*e.kids[i + 1], os, 0);
      }
      os << "}";
      return;
    }
    case Expr::Op::Apply:
      print_expr(*e.kids[0], os, 11);
      os << "(";
      print_expr(*e.kids[1], os, 0);
      os << ")";
      return;
    case Expr::Op::Not:
      if (paren) os << "(";
      os << "not ";
      print_expr(*e.kids[0], os, p + 1);
      if (paren) os << ")";
      return;
    case Expr::Op::Neg:
      if (paren) os << "(";
      os << "-";
      print_expr(*e.kids[0], os, p + 1);
      if (paren) os << ")";
      return;
    default: {
      if (paren) os << "(";
      print_expr(*e.kids[0], os, p);
      os << " " << op_token(e.op) << " ";
      print_expr(*e.kids[1], os, p + 1);
      if (paren) os << ")";
      return;
    }
  }
}

}  // namespace

std::string Expr::to_string() const {
  std::ostringstream os;
  print_expr(*this, os, 0);
  return os.str();
}

Event Event::clone() const {
  Event e;
  e.name = name;
  e.extends = extends;
  e.pos = pos;
  for (const auto& p : params) e.params.push_back({p.name, p.type, p.pos});
  for (const auto& g : guards) e.guards.push_back({g.label, g.expr->clone(), g.pos});
  for (const auto& a : actions) e.actions.push_back({a.label, a.variable, a.rhs->clone(), a.pos});
  return e;
}

Machine Machine::clone_shallow() const {
  Machine m;
  m.name = name;
  m.refines = refines;
  m.sees = sees;
  for (const auto& v : variables) m.variables.push_back({v.name, v.type, v.pos});
  for (const auto& inv : invariants)
    m.invariants.push_back({inv.label, inv.expr->clone(), inv.pos});
  m.has_init = has_init;
  if (has_init) m.init = init.clone();
  for (const auto& e : events) m.events.push_back(e.clone());
  m.pos = pos;
  m.from_view = from_view;
  m.view_name = view_name;
  m.fixed_constants = fixed_constants;
  return m;
}

const Context* Project::find_context(const std::string& name) const {
  auto it = context_index.find(name);
  return it == context_index.end() ? nullptr : &contexts[it->second];
}

const Machine* Project::find_machine(const std::string& name) const {
  auto it = machine_index.find(name);
  return it == machine_index.end() ? nullptr : &machines[it->second];
}

Machine* Project::find_machine_mut(const std::string& name) {
  auto it = machine_index.find(name);
  return it == machine_index.end() ? nullptr : &machines[it->second];
}

std::vector<const Context*> Project::visible_contexts(const Machine& m) const {
  std::vector<const Context*> out;
  std::set<std::string> seen;
  // Declaration order of `sees`, each followed by its extends chain.
  for (const auto& cname : m.sees) {
    std::string cur = cname;
    while (!cur.empty()) {
      if (!seen.insert(cur).second) break;
      const Context* c = find_context(cur);
      if (!c) break;
      out.push_back(c);
      cur = c->extends;
    }
  }
  return out;
}

const ConstantDecl* Project::find_constant(const Machine& m, const std::string& name) const {
  for (const Context* c : visible_contexts(m))
    for (const auto& cd : c->constants)
      if (cd.name == name) return &cd;
  return nullptr;
}

const VariableDecl* Project::find_variable(const Machine& m, const std::string& name) const {
  for (const auto& v : m.variables)
    if (v.name == name) return &v;
  return nullptr;
}

const Event* Project::find_event(const Machine& m, const std::string& name) const {
  for (const auto& e : m.events)
    if (e.name == name) return &e;
  return nullptr;
}

int Project::refinement_distance(const std::string& ancestor, const std::string& m) const {
  int depth = 0;
  std::string cur = m;
  std::set<std::string> seen;
  while (!cur.empty() && seen.insert(cur).second) {
    if (cur == ancestor) return depth;
    const Machine* mm = find_machine(cur);
    if (!mm) return -1;
    cur = mm->refines;
    ++depth;
  }
  return -1;
}

}  // namespace vocheck
