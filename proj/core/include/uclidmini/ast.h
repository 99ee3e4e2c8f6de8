#ifndef UCLIDMINI_AST_H
#define UCLIDMINI_AST_H

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uclidmini/bigint.h"
#include "uclidmini/diagnostics.h"
#include "uclidmini/sort.h"

namespace uclidmini {

// ---------------------------------------------------------------------------
// Types as written in source. Resolution to solver sorts happens during
// typechecking (Named types may be aliases, enums or uninterpreted sorts).
// ---------------------------------------------------------------------------

struct Type;
using TypePtr = std::unique_ptr<Type>;

struct Type
{
  enum class Kind
  {
    Bool,
    Int,
    Real,
    BitVec,
    Array,
    Named,
  };

  Kind kind = Kind::Bool;
  int width = 0;      // BitVec
  TypePtr index;      // Array
  TypePtr elem;       // Array
  std::string name;   // Named
  Span span;

  TypePtr clone() const;
  bool equals(const Type& o) const;  // structural, ignoring spans
  std::string str() const;

  static TypePtr mk(Kind k, Span sp = {});
  static TypePtr named(std::string n, Span sp = {});
  static TypePtr bitvec(int w, Span sp = {});
  static TypePtr array(TypePtr idx, TypePtr el, Span sp = {});
};

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class UnOp
{
  Not,    // !
  Neg,    // unary -
  BvNot,  // ~
};

enum class BinOp
{
  And,
  Or,
  Implies,
  Iff,
  Eq,
  Neq,
  Lt,
  Le,
  Gt,
  Ge,
  Add,
  Sub,
  Mul,
  RealDiv,  // "/" on reals
  IntDiv,   // "div"
  Mod,      // "mod"
  BvAnd,
  BvOr,
  BvXor,
  Concat,
};

const char* unopText(UnOp op);
const char* binopText(BinOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class ExprKind
{
  BoolLit,
  IntLit,
  RealLit,
  BvLit,
  Ident,
  Member,      // base.field   (instance member access, or a flat dotted var)
  TraceIndex,  // base.n       (n-th trace copy, hyper specs only)
  Primed,      // x'           (next-state variable, assignment targets)
  Old,         // old(x)       (ensures clauses)
  Unary,
  Binary,
  Ite,          // if c then a else b
  App,          // f(e1, ..., en)
  Select,       // a[i]
  Store,        // a[i -> v]
  Extract,      // x[hi:lo]
  FiniteQuant,  // finite_forall / finite_exists (v : T) in g :: body
};

/**
 * One expression node. A single tagged struct is used for the whole
 * expression language; `args` holds the children in a fixed order per kind:
 *   Unary: [operand]           Binary: [lhs, rhs]        Ite: [cond, then, else]
 *   App: arguments             Select: [array, index]    Store: [array, index, value]
 *   Extract: [operand]         Member/TraceIndex/Primed/Old: [base]
 *   FiniteQuant: [body]
 */
struct Expr
{
  ExprKind kind = ExprKind::BoolLit;
  Span span;

  bool boolVal = false;
  BigInt intVal;         // IntLit value / BvLit value
  std::string realText;  // RealLit: exact decimal text, e.g. "1.25"
  int bvWidth = 0;       // BvLit

  std::string name;  // Ident, App callee, Member field
  int traceIdx = 0;  // TraceIndex
  UnOp unop = UnOp::Not;
  BinOp binop = BinOp::And;
  int hi = 0, lo = 0;  // Extract

  bool quantIsForall = true;  // FiniteQuant
  std::string boundVar;
  TypePtr boundType;
  std::string groupName;

  std::vector<ExprPtr> args;

  // Filled in by the typechecker.
  Sort sort;

  ExprPtr clone() const;
  bool equals(const Expr& o) const;  // structural, ignoring spans and sorts

  // Factories.
  static ExprPtr boolLit(bool v, Span sp = {});
  static ExprPtr intLit(BigInt v, Span sp = {});
  static ExprPtr realLit(std::string text, Span sp = {});
  static ExprPtr bvLit(BigInt v, int width, Span sp = {});
  static ExprPtr ident(std::string n, Span sp = {});
  static ExprPtr member(ExprPtr base, std::string field, Span sp = {});
  static ExprPtr traceIndex(ExprPtr base, int n, Span sp = {});
  static ExprPtr primed(ExprPtr base, Span sp = {});
  static ExprPtr old(ExprPtr base, Span sp = {});
  static ExprPtr unary(UnOp op, ExprPtr a, Span sp = {});
  static ExprPtr binary(BinOp op, ExprPtr a, ExprPtr b, Span sp = {});
  static ExprPtr ite(ExprPtr c, ExprPtr t, ExprPtr e, Span sp = {});
  static ExprPtr app(std::string f, std::vector<ExprPtr> as, Span sp = {});
  static ExprPtr select(ExprPtr a, ExprPtr i, Span sp = {});
  static ExprPtr store(ExprPtr a, ExprPtr i, ExprPtr v, Span sp = {});
  static ExprPtr extract(ExprPtr a, int hi, int lo, Span sp = {});
  static ExprPtr finiteQuant(bool forall, std::string v, TypePtr t,
                             std::string group, ExprPtr body, Span sp = {});
};

/** Renders `e` as a dotted path ("c1.x") if it is an Ident/Member chain. */
std::optional<std::string> exprAsDottedName(const Expr& e);

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using Block = std::vector<StmtPtr>;

Block cloneBlock(const Block& b);
bool blockEquals(const Block& a, const Block& b);

struct NamedExpr
{
  std::string name;  // may be empty (auto-named later)
  ExprPtr expr;
  Span span;
};

enum class StmtKind
{
  Assign,    // lhs = rhs;  lhs' = rhs;  lhs[i] = rhs;
  Havoc,     // havoc x;
  Assert,    // assert e;
  Assume,    // assume e;
  If,        // if (c) { ... } else { ... }
  Case,      // case g1 : { ... } g2 : { ... } esac
  For,       // for i in lo .. hi { ... }   (hi exclusive)
  While,     // while (c) invariant ...; { ... }
  Call,      // p(e1, ..., en);
  NextInst,  // next(inst);
};

struct Stmt
{
  StmtKind kind = StmtKind::Assign;
  Span span;

  // Assign
  std::string lhsName;  // dotted names allowed (elaborated modules)
  bool lhsPrimed = false;
  ExprPtr lhsIndex;  // non-null for lhs[i] = rhs
  ExprPtr rhs;

  // Havoc / NextInst target
  std::string name;

  // Assert / Assume / If / While condition
  ExprPtr cond;

  Block body;      // If-then / For / While
  Block elseBody;  // If-else

  struct CaseArm
  {
    ExprPtr guard;
    Block body;
  };
  std::vector<CaseArm> arms;

  // For
  std::string loopVar;
  BigInt forLo, forHi;

  // While
  std::vector<NamedExpr> invariants;

  // Call
  std::string callee;
  std::vector<ExprPtr> args;

  StmtPtr clone() const;
  bool equals(const Stmt& o) const;

  static StmtPtr assign(std::string lhs, bool primed, ExprPtr index,
                        ExprPtr rhs, Span sp = {});
  static StmtPtr havoc(std::string n, Span sp = {});
  static StmtPtr assertStmt(ExprPtr e, Span sp = {});
  static StmtPtr assumeStmt(ExprPtr e, Span sp = {});
  static StmtPtr ifStmt(ExprPtr c, Block then, Block els, Span sp = {});
  static StmtPtr caseStmt(std::vector<CaseArm> arms, Span sp = {});
  static StmtPtr forStmt(std::string v, BigInt lo, BigInt hi, Block b,
                         Span sp = {});
  static StmtPtr whileStmt(ExprPtr c, std::vector<NamedExpr> invs, Block b,
                           Span sp = {});
  static StmtPtr call(std::string p, std::vector<ExprPtr> args, Span sp = {});
  static StmtPtr nextInst(std::string inst, Span sp = {});
};

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

struct Param
{
  std::string name;
  TypePtr type;
  bool isOutput = false;  // procedure out-parameters
  Span span;

  Param clone() const;
  bool equals(const Param& o) const;
};

/** One synthesis-grammar rule: `N : type ::= alt | alt | ... ;` */
struct GrammarRule
{
  std::string nonterminal;
  TypePtr type;
  std::vector<ExprPtr> alternatives;
  Span span;
};

enum class DeclKind
{
  Type,
  Var,
  Func,      // uninterpreted function
  Define,    // macro
  SynthFun,
  OracleFun,
  Procedure,
  Init,
  Next,
  Instance,
  Invariant,
  HyperInvariant,
  Axiom,
  HyperAxiom,
  Group,
};

enum class VarKind
{
  Var,
  Input,
  Output,
  Const,
};

struct Decl;
using DeclPtr = std::unique_ptr<Decl>;

struct Decl
{
  DeclKind kind = DeclKind::Var;
  Span span;
  std::string name;

  // Type: one of typeDef (alias), enumVariants (enum), or neither
  // (uninterpreted sort).
  TypePtr typeDef;
  std::vector<std::string> enumVariants;
  bool isEnumDef = false;

  // Var
  VarKind varKind = VarKind::Var;
  TypePtr type;

  // Func / Define / SynthFun / OracleFun / Procedure
  std::vector<Param> params;
  TypePtr retType;
  ExprPtr body;  // Define
  std::vector<GrammarRule> grammar;
  std::string oracleBinary;

  // Procedure
  std::vector<NamedExpr> requiresClauses;
  std::vector<NamedExpr> ensuresClauses;
  std::vector<std::string> modifiesList;
  std::vector<Param> locals;
  std::optional<Block> procBody;  // nullopt: contract-only procedure

  // Init / Next
  Block block;

  // Instance
  std::string moduleName;
  std::vector<std::pair<std::string, ExprPtr>> bindings;

  // Invariant / HyperInvariant / Axiom / HyperAxiom
  int arity = 1;
  ExprPtr specExpr;

  // Group
  TypePtr elemType;
  std::vector<ExprPtr> elements;

  DeclPtr clone() const;
  bool equals(const Decl& o) const;
};

// ---------------------------------------------------------------------------
// Control block
// ---------------------------------------------------------------------------

struct ControlCommand
{
  enum class Kind
  {
    Bmc,
    Induction,
    KInduction,
    VerifyProc,
    Synthesize,
    Check,
    CheckSat,
    PrintResults,
    PrintCex,
  };
  enum class Expect
  {
    None,
    Observable,
    Unobservable,
  };

  Kind kind = Kind::Check;
  Span span;
  int k = 0;                      // Bmc / KInduction
  std::string procName;          // VerifyProc
  std::vector<std::string> vars;  // PrintCex
  Expect expect = Expect::None;   // CheckSat

  bool equals(const ControlCommand& o) const;
};

struct ControlBlock
{
  std::vector<ControlCommand> commands;
  Span span;

  ControlBlock clone() const;
  bool equals(const ControlBlock& o) const;
};

// ---------------------------------------------------------------------------
// Module
// ---------------------------------------------------------------------------

struct AstModule
{
  std::string name;
  Span span;
  std::vector<DeclPtr> decls;
  std::optional<ControlBlock> control;

  AstModule clone() const;
  bool equals(const AstModule& o) const;  // structural, ignoring spans

  const Decl* findDecl(DeclKind k, const std::string& n) const;
};

}  // namespace uclidmini

#endif
