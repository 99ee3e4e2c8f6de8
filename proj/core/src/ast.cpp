#include "uclidmini/ast.h"

namespace uclidmini {

// ---------------------------------------------------------------------------
// Type
// ---------------------------------------------------------------------------

TypePtr Type::mk(Kind k, Span sp)
{
  auto t = std::make_unique<Type>();
  t->kind = k;
  t->span = sp;
  return t;
}

TypePtr Type::named(std::string n, Span sp)
{
  auto t = mk(Kind::Named, sp);
  t->name = std::move(n);
  return t;
}

TypePtr Type::bitvec(int w, Span sp)
{
  auto t = mk(Kind::BitVec, sp);
  t->width = w;
  return t;
}

TypePtr Type::array(TypePtr idx, TypePtr el, Span sp)
{
  auto t = mk(Kind::Array, sp);
  t->index = std::move(idx);
  t->elem = std::move(el);
  return t;
}

TypePtr Type::clone() const
{
  auto t = std::make_unique<Type>();
  t->kind = kind;
  t->width = width;
  t->name = name;
  t->span = span;
  if (index) t->index = index->clone();
  if (elem) t->elem = elem->clone();
  return t;
}

bool Type::equals(const Type& o) const
{
  if (kind != o.kind || width != o.width || name != o.name) return false;
  if (static_cast<bool>(index) != static_cast<bool>(o.index)) return false;
  if (index && !index->equals(*o.index)) return false;
  if (static_cast<bool>(elem) != static_cast<bool>(o.elem)) return false;
  if (elem && !elem->equals(*o.elem)) return false;
  return true;
}

std::string Type::str() const
{
  switch (kind)
  {
    case Kind::Bool: return "boolean";
    case Kind::Int: return "integer";
    case Kind::Real: return "real";
    case Kind::BitVec: return "bv" + std::to_string(width);
    case Kind::Array: return "[" + index->str() + "]" + elem->str();
    case Kind::Named: return name;
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

const char* unopText(UnOp op)
{
  switch (op)
  {
    case UnOp::Not: return "!";
    case UnOp::Neg: return "-";
    case UnOp::BvNot: return "~";
  }
  return "?";
}

const char* binopText(BinOp op)
{
  switch (op)
  {
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    case BinOp::Implies: return "==>";
    case BinOp::Iff: return "<==>";
    case BinOp::Eq: return "==";
    case BinOp::Neq: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::RealDiv: return "/";
    case BinOp::IntDiv: return "div";
    case BinOp::Mod: return "mod";
    case BinOp::BvAnd: return "&";
    case BinOp::BvOr: return "|";
    case BinOp::BvXor: return "^";
    case BinOp::Concat: return "++";
  }
  return "?";
}

ExprPtr Expr::clone() const
{
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->span = span;
  e->boolVal = boolVal;
  e->intVal = intVal;
  e->realText = realText;
  e->bvWidth = bvWidth;
  e->name = name;
  e->traceIdx = traceIdx;
  e->unop = unop;
  e->binop = binop;
  e->hi = hi;
  e->lo = lo;
  e->quantIsForall = quantIsForall;
  e->boundVar = boundVar;
  if (boundType) e->boundType = boundType->clone();
  e->groupName = groupName;
  e->sort = sort;
  e->args.reserve(args.size());
  for (const auto& a : args) e->args.push_back(a->clone());
  return e;
}

bool Expr::equals(const Expr& o) const
{
  if (kind != o.kind) return false;
  if (boolVal != o.boolVal || intVal != o.intVal || realText != o.realText
      || bvWidth != o.bvWidth || name != o.name || traceIdx != o.traceIdx
      || unop != o.unop || binop != o.binop || hi != o.hi || lo != o.lo
      || quantIsForall != o.quantIsForall || boundVar != o.boundVar
      || groupName != o.groupName)
  {
    return false;
  }
  if (static_cast<bool>(boundType) != static_cast<bool>(o.boundType))
  {
    return false;
  }
  if (boundType && !boundType->equals(*o.boundType)) return false;
  if (args.size() != o.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
  {
    if (!args[i]->equals(*o.args[i])) return false;
  }
  return true;
}

ExprPtr Expr::boolLit(bool v, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::BoolLit;
  e->boolVal = v;
  e->span = sp;
  return e;
}

ExprPtr Expr::intLit(BigInt v, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::IntLit;
  e->intVal = std::move(v);
  e->span = sp;
  return e;
}

ExprPtr Expr::realLit(std::string text, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::RealLit;
  e->realText = std::move(text);
  e->span = sp;
  return e;
}

ExprPtr Expr::bvLit(BigInt v, int width, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::BvLit;
  e->intVal = std::move(v);
  e->bvWidth = width;
  e->span = sp;
  return e;
}

ExprPtr Expr::ident(std::string n, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Ident;
  e->name = std::move(n);
  e->span = sp;
  return e;
}

ExprPtr Expr::member(ExprPtr base, std::string field, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Member;
  e->name = std::move(field);
  e->span = sp;
  e->args.push_back(std::move(base));
  return e;
}

ExprPtr Expr::traceIndex(ExprPtr base, int n, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::TraceIndex;
  e->traceIdx = n;
  e->span = sp;
  e->args.push_back(std::move(base));
  return e;
}

ExprPtr Expr::primed(ExprPtr base, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Primed;
  e->span = sp;
  e->args.push_back(std::move(base));
  return e;
}

ExprPtr Expr::old(ExprPtr base, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Old;
  e->span = sp;
  e->args.push_back(std::move(base));
  return e;
}

ExprPtr Expr::unary(UnOp op, ExprPtr a, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Unary;
  e->unop = op;
  e->span = sp;
  e->args.push_back(std::move(a));
  return e;
}

ExprPtr Expr::binary(BinOp op, ExprPtr a, ExprPtr b, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Binary;
  e->binop = op;
  e->span = sp;
  e->args.push_back(std::move(a));
  e->args.push_back(std::move(b));
  return e;
}

ExprPtr Expr::ite(ExprPtr c, ExprPtr t, ExprPtr els, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Ite;
  e->span = sp;
  e->args.push_back(std::move(c));
  e->args.push_back(std::move(t));
  e->args.push_back(std::move(els));
  return e;
}

ExprPtr Expr::app(std::string f, std::vector<ExprPtr> as, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::App;
  e->name = std::move(f);
  e->args = std::move(as);
  e->span = sp;
  return e;
}

ExprPtr Expr::select(ExprPtr a, ExprPtr i, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Select;
  e->span = sp;
  e->args.push_back(std::move(a));
  e->args.push_back(std::move(i));
  return e;
}

ExprPtr Expr::store(ExprPtr a, ExprPtr i, ExprPtr v, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Store;
  e->span = sp;
  e->args.push_back(std::move(a));
  e->args.push_back(std::move(i));
  e->args.push_back(std::move(v));
  return e;
}

ExprPtr Expr::extract(ExprPtr a, int hi, int lo, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::Extract;
  e->hi = hi;
  e->lo = lo;
  e->span = sp;
  e->args.push_back(std::move(a));
  return e;
}

ExprPtr Expr::finiteQuant(bool forall, std::string v, TypePtr t,
                          std::string group, ExprPtr body, Span sp)
{
  auto e = std::make_unique<Expr>();
  e->kind = ExprKind::FiniteQuant;
  e->quantIsForall = forall;
  e->boundVar = std::move(v);
  e->boundType = std::move(t);
  e->groupName = std::move(group);
  e->span = sp;
  e->args.push_back(std::move(body));
  return e;
}

std::optional<std::string> exprAsDottedName(const Expr& e)
{
  if (e.kind == ExprKind::Ident) return e.name;
  if (e.kind == ExprKind::Member)
  {
    auto base = exprAsDottedName(*e.args[0]);
    if (!base) return std::nullopt;
    return *base + "." + e.name;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stmt
// ---------------------------------------------------------------------------

Block cloneBlock(const Block& b)
{
  Block out;
  out.reserve(b.size());
  for (const auto& s : b) out.push_back(s->clone());
  return out;
}

bool blockEquals(const Block& a, const Block& b)
{
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
  {
    if (!a[i]->equals(*b[i])) return false;
  }
  return true;
}

static std::vector<NamedExpr> cloneNamedExprs(const std::vector<NamedExpr>& v)
{
  std::vector<NamedExpr> out;
  out.reserve(v.size());
  for (const auto& ne : v)
  {
    out.push_back({ne.name, ne.expr->clone(), ne.span});
  }
  return out;
}

static bool namedExprsEqual(const std::vector<NamedExpr>& a,
                            const std::vector<NamedExpr>& b)
{
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
  {
    if (a[i].name != b[i].name || !a[i].expr->equals(*b[i].expr)) return false;
  }
  return true;
}

StmtPtr Stmt::clone() const
{
  auto s = std::make_unique<Stmt>();
  s->kind = kind;
  s->span = span;
  s->lhsName = lhsName;
  s->lhsPrimed = lhsPrimed;
  if (lhsIndex) s->lhsIndex = lhsIndex->clone();
  if (rhs) s->rhs = rhs->clone();
  s->name = name;
  if (cond) s->cond = cond->clone();
  s->body = cloneBlock(body);
  s->elseBody = cloneBlock(elseBody);
  for (const auto& arm : arms)
  {
    CaseArm a;
    a.guard = arm.guard->clone();
    a.body = cloneBlock(arm.body);
    s->arms.push_back(std::move(a));
  }
  s->loopVar = loopVar;
  s->forLo = forLo;
  s->forHi = forHi;
  s->invariants = cloneNamedExprs(invariants);
  s->callee = callee;
  for (const auto& a : args) s->args.push_back(a->clone());
  return s;
}

bool Stmt::equals(const Stmt& o) const
{
  if (kind != o.kind) return false;
  if (lhsName != o.lhsName || lhsPrimed != o.lhsPrimed || name != o.name
      || loopVar != o.loopVar || forLo != o.forLo || forHi != o.forHi
      || callee != o.callee)
  {
    return false;
  }
  auto optEq = [](const ExprPtr& a, const ExprPtr& b) {
    if (static_cast<bool>(a) != static_cast<bool>(b)) return false;
    return !a || a->equals(*b);
  };
  if (!optEq(lhsIndex, o.lhsIndex) || !optEq(rhs, o.rhs) || !optEq(cond, o.cond))
  {
    return false;
  }
  if (!blockEquals(body, o.body) || !blockEquals(elseBody, o.elseBody))
  {
    return false;
  }
  if (arms.size() != o.arms.size()) return false;
  for (size_t i = 0; i < arms.size(); ++i)
  {
    if (!arms[i].guard->equals(*o.arms[i].guard)) return false;
    if (!blockEquals(arms[i].body, o.arms[i].body)) return false;
  }
  if (!namedExprsEqual(invariants, o.invariants)) return false;
  if (args.size() != o.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
  {
    if (!args[i]->equals(*o.args[i])) return false;
  }
  return true;
}

StmtPtr Stmt::assign(std::string lhs, bool primed, ExprPtr index, ExprPtr rhs,
                     Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Assign;
  s->lhsName = std::move(lhs);
  s->lhsPrimed = primed;
  s->lhsIndex = std::move(index);
  s->rhs = std::move(rhs);
  s->span = sp;
  return s;
}

StmtPtr Stmt::havoc(std::string n, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Havoc;
  s->name = std::move(n);
  s->span = sp;
  return s;
}

StmtPtr Stmt::assertStmt(ExprPtr e, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Assert;
  s->cond = std::move(e);
  s->span = sp;
  return s;
}

StmtPtr Stmt::assumeStmt(ExprPtr e, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Assume;
  s->cond = std::move(e);
  s->span = sp;
  return s;
}

StmtPtr Stmt::ifStmt(ExprPtr c, Block then, Block els, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::If;
  s->cond = std::move(c);
  s->body = std::move(then);
  s->elseBody = std::move(els);
  s->span = sp;
  return s;
}

StmtPtr Stmt::caseStmt(std::vector<CaseArm> arms, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Case;
  s->arms = std::move(arms);
  s->span = sp;
  return s;
}

StmtPtr Stmt::forStmt(std::string v, BigInt lo, BigInt hi, Block b, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::For;
  s->loopVar = std::move(v);
  s->forLo = std::move(lo);
  s->forHi = std::move(hi);
  s->body = std::move(b);
  s->span = sp;
  return s;
}

StmtPtr Stmt::whileStmt(ExprPtr c, std::vector<NamedExpr> invs, Block b,
                        Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::While;
  s->cond = std::move(c);
  s->invariants = std::move(invs);
  s->body = std::move(b);
  s->span = sp;
  return s;
}

StmtPtr Stmt::call(std::string p, std::vector<ExprPtr> args, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::Call;
  s->callee = std::move(p);
  s->args = std::move(args);
  s->span = sp;
  return s;
}

StmtPtr Stmt::nextInst(std::string inst, Span sp)
{
  auto s = std::make_unique<Stmt>();
  s->kind = StmtKind::NextInst;
  s->name = std::move(inst);
  s->span = sp;
  return s;
}

// ---------------------------------------------------------------------------
// Decl
// ---------------------------------------------------------------------------

Param Param::clone() const
{
  Param p;
  p.name = name;
  p.type = type->clone();
  p.isOutput = isOutput;
  p.span = span;
  return p;
}

bool Param::equals(const Param& o) const
{
  return name == o.name && isOutput == o.isOutput && type->equals(*o.type);
}

static std::vector<Param> cloneParams(const std::vector<Param>& ps)
{
  std::vector<Param> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.clone());
  return out;
}

static bool paramsEqual(const std::vector<Param>& a,
                        const std::vector<Param>& b)
{
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
  {
    if (!a[i].equals(b[i])) return false;
  }
  return true;
}

DeclPtr Decl::clone() const
{
  auto d = std::make_unique<Decl>();
  d->kind = kind;
  d->span = span;
  d->name = name;
  if (typeDef) d->typeDef = typeDef->clone();
  d->enumVariants = enumVariants;
  d->isEnumDef = isEnumDef;
  d->varKind = varKind;
  if (type) d->type = type->clone();
  d->params = cloneParams(params);
  if (retType) d->retType = retType->clone();
  if (body) d->body = body->clone();
  for (const auto& r : grammar)
  {
    GrammarRule g;
    g.nonterminal = r.nonterminal;
    g.type = r.type->clone();
    for (const auto& a : r.alternatives) g.alternatives.push_back(a->clone());
    g.span = r.span;
    d->grammar.push_back(std::move(g));
  }
  d->oracleBinary = oracleBinary;
  d->requiresClauses = cloneNamedExprs(requiresClauses);
  d->ensuresClauses = cloneNamedExprs(ensuresClauses);
  d->modifiesList = modifiesList;
  d->locals = cloneParams(locals);
  if (procBody) d->procBody = cloneBlock(*procBody);
  d->block = cloneBlock(block);
  d->moduleName = moduleName;
  for (const auto& [port, e] : bindings)
  {
    d->bindings.emplace_back(port, e->clone());
  }
  d->arity = arity;
  if (specExpr) d->specExpr = specExpr->clone();
  if (elemType) d->elemType = elemType->clone();
  for (const auto& e : elements) d->elements.push_back(e->clone());
  return d;
}

bool Decl::equals(const Decl& o) const
{
  if (kind != o.kind || name != o.name) return false;
  auto optTypeEq = [](const TypePtr& a, const TypePtr& b) {
    if (static_cast<bool>(a) != static_cast<bool>(b)) return false;
    return !a || a->equals(*b);
  };
  auto optExprEq = [](const ExprPtr& a, const ExprPtr& b) {
    if (static_cast<bool>(a) != static_cast<bool>(b)) return false;
    return !a || a->equals(*b);
  };
  if (!optTypeEq(typeDef, o.typeDef) || enumVariants != o.enumVariants
      || isEnumDef != o.isEnumDef || varKind != o.varKind
      || !optTypeEq(type, o.type) || !paramsEqual(params, o.params)
      || !optTypeEq(retType, o.retType) || !optExprEq(body, o.body)
      || oracleBinary != o.oracleBinary || modifiesList != o.modifiesList
      || !paramsEqual(locals, o.locals) || moduleName != o.moduleName
      || arity != o.arity || !optExprEq(specExpr, o.specExpr)
      || !optTypeEq(elemType, o.elemType))
  {
    return false;
  }
  if (grammar.size() != o.grammar.size()) return false;
  for (size_t i = 0; i < grammar.size(); ++i)
  {
    if (grammar[i].nonterminal != o.grammar[i].nonterminal) return false;
    if (!grammar[i].type->equals(*o.grammar[i].type)) return false;
    if (grammar[i].alternatives.size() != o.grammar[i].alternatives.size())
    {
      return false;
    }
    for (size_t j = 0; j < grammar[i].alternatives.size(); ++j)
    {
      if (!grammar[i].alternatives[j]->equals(*o.grammar[i].alternatives[j]))
      {
        return false;
      }
    }
  }
  if (!namedExprsEqual(requiresClauses, o.requiresClauses)
      || !namedExprsEqual(ensuresClauses, o.ensuresClauses))
  {
    return false;
  }
  if (procBody.has_value() != o.procBody.has_value()) return false;
  if (procBody && !blockEquals(*procBody, *o.procBody)) return false;
  if (!blockEquals(block, o.block)) return false;
  if (bindings.size() != o.bindings.size()) return false;
  for (size_t i = 0; i < bindings.size(); ++i)
  {
    if (bindings[i].first != o.bindings[i].first) return false;
    if (!bindings[i].second->equals(*o.bindings[i].second)) return false;
  }
  if (elements.size() != o.elements.size()) return false;
  for (size_t i = 0; i < elements.size(); ++i)
  {
    if (!elements[i]->equals(*o.elements[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Control / module
// ---------------------------------------------------------------------------

bool ControlCommand::equals(const ControlCommand& o) const
{
  return kind == o.kind && k == o.k && procName == o.procName && vars == o.vars
         && expect == o.expect;
}

ControlBlock ControlBlock::clone() const
{
  ControlBlock c;
  c.commands = commands;
  c.span = span;
  return c;
}

bool ControlBlock::equals(const ControlBlock& o) const
{
  if (commands.size() != o.commands.size()) return false;
  for (size_t i = 0; i < commands.size(); ++i)
  {
    if (!commands[i].equals(o.commands[i])) return false;
  }
  return true;
}

AstModule AstModule::clone() const
{
  AstModule m;
  m.name = name;
  m.span = span;
  for (const auto& d : decls) m.decls.push_back(d->clone());
  if (control) m.control = control->clone();
  return m;
}

bool AstModule::equals(const AstModule& o) const
{
  if (name != o.name) return false;
  if (decls.size() != o.decls.size()) return false;
  for (size_t i = 0; i < decls.size(); ++i)
  {
    if (!decls[i]->equals(*o.decls[i])) return false;
  }
  if (control.has_value() != o.control.has_value()) return false;
  if (control && !control->equals(*o.control)) return false;
  return true;
}

const Decl* AstModule::findDecl(DeclKind k, const std::string& n) const
{
  for (const auto& d : decls)
  {
    if (d->kind == k && d->name == n) return d.get();
  }
  return nullptr;
}

}  // namespace uclidmini
