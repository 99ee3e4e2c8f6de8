#ifndef UCLIDMINI_TOKEN_H
#define UCLIDMINI_TOKEN_H

#include <string>

#include "uclidmini/diagnostics.h"

namespace uclidmini {

enum class Tok
{
  // Literals and identifiers.
  IDENT,
  INT_LIT,
  REAL_LIT,
  BV_LIT,
  TRUE,
  FALSE,

  // Keywords.
  KW_MODULE,
  KW_TYPE,
  KW_VAR,
  KW_INPUT,
  KW_OUTPUT,
  KW_CONST,
  KW_FUNCTION,
  KW_DEFINE,
  KW_SYNTHESIS,
  KW_ORACLE,
  KW_PROCEDURE,
  KW_REQUIRES,
  KW_ENSURES,
  KW_MODIFIES,
  KW_INIT,
  KW_NEXT,
  KW_INVARIANT,
  KW_HYPERINVARIANT,
  KW_AXIOM,
  KW_HYPERAXIOM,
  KW_GROUP,
  KW_INSTANCE,
  KW_CONTROL,
  KW_ASSERT,
  KW_ASSUME,
  KW_HAVOC,
  KW_IF,
  KW_THEN,
  KW_ELSE,
  KW_CASE,
  KW_ESAC,
  KW_FOR,
  KW_WHILE,
  KW_FINITE_FORALL,
  KW_FINITE_EXISTS,
  KW_IN,
  KW_OLD,
  KW_ENUM,
  KW_GRAMMAR,

  // Punctuation.
  LPAREN,
  RPAREN,
  LBRACE,
  RBRACE,
  LBRACKET,
  RBRACKET,
  SEMI,
  COLON,
  COLONCOLON,
  COMMA,
  DOT,
  DOTDOT,
  PRIME,
  ARROW,     // ->
  ASSIGN,    // =
  PRODUCES,  // ::=

  // Operators.
  NOT,      // !
  AND,      // &&
  OR,       // ||
  IMPLIES,  // ==>
  IFF,      // <==>
  EQ,       // ==
  NEQ,      // !=
  LT,
  LE,
  GT,
  GE,
  PLUS,
  MINUS,
  STAR,
  SLASH,
  KW_DIV,
  KW_MOD,
  AMP,    // &
  PIPE,   // |
  CARET,  // ^
  TILDE,  // ~
  CONCAT, // ++

  END_OF_FILE,
};

const char* tokName(Tok t);

struct Token
{
  Tok kind = Tok::END_OF_FILE;
  std::string text;
  Span span;
};

}  // namespace uclidmini

#endif
