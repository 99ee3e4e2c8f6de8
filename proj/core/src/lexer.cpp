#include "uclidmini/lexer.h"

#include <cctype>
#include <unordered_map>

namespace uclidmini {

const char* tokName(Tok t)
{
  switch (t)
  {
    case Tok::IDENT: return "identifier";
    case Tok::INT_LIT: return "integer literal";
    case Tok::REAL_LIT: return "real literal";
    case Tok::BV_LIT: return "bitvector literal";
    case Tok::TRUE: return "'true'";
    case Tok::FALSE: return "'false'";
    case Tok::KW_MODULE: return "'module'";
    case Tok::KW_TYPE: return "'type'";
    case Tok::KW_VAR: return "'var'";
    case Tok::KW_INPUT: return "'input'";
    case Tok::KW_OUTPUT: return "'output'";
    case Tok::KW_CONST: return "'const'";
    case Tok::KW_FUNCTION: return "'function'";
    case Tok::KW_DEFINE: return "'define'";
    case Tok::KW_SYNTHESIS: return "'synthesis'";
    case Tok::KW_ORACLE: return "'oracle'";
    case Tok::KW_PROCEDURE: return "'procedure'";
    case Tok::KW_REQUIRES: return "'requires'";
    case Tok::KW_ENSURES: return "'ensures'";
    case Tok::KW_MODIFIES: return "'modifies'";
    case Tok::KW_INIT: return "'init'";
    case Tok::KW_NEXT: return "'next'";
    case Tok::KW_INVARIANT: return "'invariant'";
    case Tok::KW_HYPERINVARIANT: return "'hyperinvariant'";
    case Tok::KW_AXIOM: return "'axiom'";
    case Tok::KW_HYPERAXIOM: return "'hyperaxiom'";
    case Tok::KW_GROUP: return "'group'";
    case Tok::KW_INSTANCE: return "'instance'";
    case Tok::KW_CONTROL: return "'control'";
    case Tok::KW_ASSERT: return "'assert'";
    case Tok::KW_ASSUME: return "'assume'";
    case Tok::KW_HAVOC: return "'havoc'";
    case Tok::KW_IF: return "'if'";
    case Tok::KW_THEN: return "'then'";
    case Tok::KW_ELSE: return "'else'";
    case Tok::KW_CASE: return "'case'";
    case Tok::KW_ESAC: return "'esac'";
    case Tok::KW_FOR: return "'for'";
    case Tok::KW_WHILE: return "'while'";
    case Tok::KW_FINITE_FORALL: return "'finite_forall'";
    case Tok::KW_FINITE_EXISTS: return "'finite_exists'";
    case Tok::KW_IN: return "'in'";
    case Tok::KW_OLD: return "'old'";
    case Tok::KW_ENUM: return "'enum'";
    case Tok::KW_GRAMMAR: return "'grammar'";
    case Tok::LPAREN: return "'('";
    case Tok::RPAREN: return "')'";
    case Tok::LBRACE: return "'{'";
    case Tok::RBRACE: return "'}'";
    case Tok::LBRACKET: return "'['";
    case Tok::RBRACKET: return "']'";
    case Tok::SEMI: return "';'";
    case Tok::COLON: return "':'";
    case Tok::COLONCOLON: return "'::'";
    case Tok::COMMA: return "','";
    case Tok::DOT: return "'.'";
    case Tok::DOTDOT: return "'..'";
    case Tok::PRIME: return "'''";
    case Tok::ARROW: return "'->'";
    case Tok::ASSIGN: return "'='";
    case Tok::PRODUCES: return "'::='";
    case Tok::NOT: return "'!'";
    case Tok::AND: return "'&&'";
    case Tok::OR: return "'||'";
    case Tok::IMPLIES: return "'==>'";
    case Tok::IFF: return "'<==>'";
    case Tok::EQ: return "'=='";
    case Tok::NEQ: return "'!='";
    case Tok::LT: return "'<'";
    case Tok::LE: return "'<='";
    case Tok::GT: return "'>'";
    case Tok::GE: return "'>='";
    case Tok::PLUS: return "'+'";
    case Tok::MINUS: return "'-'";
    case Tok::STAR: return "'*'";
    case Tok::SLASH: return "'/'";
    case Tok::KW_DIV: return "'div'";
    case Tok::KW_MOD: return "'mod'";
    case Tok::AMP: return "'&'";
    case Tok::PIPE: return "'|'";
    case Tok::CARET: return "'^'";
    case Tok::TILDE: return "'~'";
    case Tok::CONCAT: return "'++'";
    case Tok::END_OF_FILE: return "end of file";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string, Tok>& keywordTable()
{
  static const std::unordered_map<std::string, Tok> table = {
      {"module", Tok::KW_MODULE},
      {"type", Tok::KW_TYPE},
      {"var", Tok::KW_VAR},
      {"input", Tok::KW_INPUT},
      {"output", Tok::KW_OUTPUT},
      {"const", Tok::KW_CONST},
      {"function", Tok::KW_FUNCTION},
      {"define", Tok::KW_DEFINE},
      {"synthesis", Tok::KW_SYNTHESIS},
      {"oracle", Tok::KW_ORACLE},
      {"procedure", Tok::KW_PROCEDURE},
      {"requires", Tok::KW_REQUIRES},
      {"ensures", Tok::KW_ENSURES},
      {"modifies", Tok::KW_MODIFIES},
      {"init", Tok::KW_INIT},
      {"next", Tok::KW_NEXT},
      {"invariant", Tok::KW_INVARIANT},
      {"hyperinvariant", Tok::KW_HYPERINVARIANT},
      {"axiom", Tok::KW_AXIOM},
      {"hyperaxiom", Tok::KW_HYPERAXIOM},
      {"group", Tok::KW_GROUP},
      {"instance", Tok::KW_INSTANCE},
      {"control", Tok::KW_CONTROL},
      {"assert", Tok::KW_ASSERT},
      {"assume", Tok::KW_ASSUME},
      {"havoc", Tok::KW_HAVOC},
      {"if", Tok::KW_IF},
      {"then", Tok::KW_THEN},
      {"else", Tok::KW_ELSE},
      {"case", Tok::KW_CASE},
      {"esac", Tok::KW_ESAC},
      {"for", Tok::KW_FOR},
      {"while", Tok::KW_WHILE},
      {"finite_forall", Tok::KW_FINITE_FORALL},
      {"finite_exists", Tok::KW_FINITE_EXISTS},
      {"in", Tok::KW_IN},
      {"old", Tok::KW_OLD},
      {"enum", Tok::KW_ENUM},
      {"grammar", Tok::KW_GRAMMAR},
      {"true", Tok::TRUE},
      {"false", Tok::FALSE},
      {"div", Tok::KW_DIV},
      {"mod", Tok::KW_MOD},
  };
  return table;
}

class Lexer
{
 public:
  Lexer(std::shared_ptr<const SourceFile> file, DiagnosticList& diags)
      : d_file(std::move(file)), d_src(d_file->contents), d_diags(diags)
  {
  }

  std::vector<Token> run()
  {
    std::vector<Token> toks;
    while (true)
    {
      skipTrivia();
      if (atEnd())
      {
        toks.push_back(make(Tok::END_OF_FILE, d_pos, 0));
        break;
      }
      size_t start = d_pos;
      char c = d_src[d_pos];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      {
        lexWord(toks, start);
      }
      else if (std::isdigit(static_cast<unsigned char>(c)))
      {
        lexNumber(toks, start);
      }
      else
      {
        lexPunct(toks, start);
      }
    }
    return toks;
  }

 private:
  bool atEnd() const { return d_pos >= d_src.size(); }
  char peek(size_t off = 0) const
  {
    return d_pos + off < d_src.size() ? d_src[d_pos + off] : '\0';
  }
  void advance()
  {
    if (d_src[d_pos] == '\n')
    {
      ++d_line;
      d_col = 1;
    }
    else
    {
      ++d_col;
    }
    ++d_pos;
  }

  void skipTrivia()
  {
    while (!atEnd())
    {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n')
      {
        advance();
      }
      else if (c == '/' && peek(1) == '/')
      {
        while (!atEnd() && peek() != '\n') advance();
      }
      else if (c == '/' && peek(1) == '*')
      {
        Span open = hereSpan(2);
        advance();
        advance();
        bool closed = false;
        while (!atEnd())
        {
          if (peek() == '*' && peek(1) == '/')
          {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed)
        {
          d_diags.push_back(
              {DiagKind::LexError, open, "unterminated block comment"});
        }
      }
      else
      {
        break;
      }
    }
  }

  Span hereSpan(int len) const
  {
    Span s;
    s.file = d_file;
    s.line = d_line;
    s.col = d_col;
    s.len = len;
    return s;
  }

  Token make(Tok kind, size_t start, size_t len)
  {
    Token t;
    t.kind = kind;
    t.text = d_src.substr(start, len);
    t.span.file = d_file;
    t.span.line = d_startLine;
    t.span.col = d_startCol;
    t.span.len = static_cast<int>(len);
    return t;
  }

  void markStart()
  {
    d_startLine = d_line;
    d_startCol = d_col;
  }

  void lexWord(std::vector<Token>& toks, size_t start)
  {
    markStart();
    while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek()))
                        || peek() == '_'))
    {
      advance();
    }
    std::string word = d_src.substr(start, d_pos - start);
    auto it = keywordTable().find(word);
    toks.push_back(
        make(it != keywordTable().end() ? it->second : Tok::IDENT, start,
             d_pos - start));
  }

  // 123, 1.5, 3bv8
  void lexNumber(std::vector<Token>& toks, size_t start)
  {
    markStart();
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
    {
      advance();
    }
    // Bitvector literal: <value>bv<width>
    if (peek() == 'b' && peek(1) == 'v'
        && std::isdigit(static_cast<unsigned char>(peek(2))))
    {
      advance();
      advance();
      while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
      {
        advance();
      }
      toks.push_back(make(Tok::BV_LIT, start, d_pos - start));
      return;
    }
    // Real literal: digits '.' digits. A bare '..' is the range operator.
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))
    {
      advance();
      while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
      {
        advance();
      }
      toks.push_back(make(Tok::REAL_LIT, start, d_pos - start));
      return;
    }
    toks.push_back(make(Tok::INT_LIT, start, d_pos - start));
  }

  void lexPunct(std::vector<Token>& toks, size_t start)
  {
    markStart();
    auto emit = [&](Tok k, int n) {
      for (int i = 0; i < n; ++i) advance();
      toks.push_back(make(k, start, d_pos - start));
    };
    char c = peek();
    switch (c)
    {
      case '(': emit(Tok::LPAREN, 1); return;
      case ')': emit(Tok::RPAREN, 1); return;
      case '{': emit(Tok::LBRACE, 1); return;
      case '}': emit(Tok::RBRACE, 1); return;
      case '[': emit(Tok::LBRACKET, 1); return;
      case ']': emit(Tok::RBRACKET, 1); return;
      case ';': emit(Tok::SEMI, 1); return;
      case ',': emit(Tok::COMMA, 1); return;
      case '\'': emit(Tok::PRIME, 1); return;
      case '~': emit(Tok::TILDE, 1); return;
      case '^': emit(Tok::CARET, 1); return;
      case '*': emit(Tok::STAR, 1); return;
      case '/': emit(Tok::SLASH, 1); return;
      case ':':
        if (peek(1) == ':' && peek(2) == '=') { emit(Tok::PRODUCES, 3); return; }
        if (peek(1) == ':') { emit(Tok::COLONCOLON, 2); return; }
        emit(Tok::COLON, 1);
        return;
      case '.':
        if (peek(1) == '.') { emit(Tok::DOTDOT, 2); return; }
        emit(Tok::DOT, 1);
        return;
      case '-':
        if (peek(1) == '>') { emit(Tok::ARROW, 2); return; }
        emit(Tok::MINUS, 1);
        return;
      case '+':
        if (peek(1) == '+') { emit(Tok::CONCAT, 2); return; }
        emit(Tok::PLUS, 1);
        return;
      case '!':
        if (peek(1) == '=') { emit(Tok::NEQ, 2); return; }
        emit(Tok::NOT, 1);
        return;
      case '&':
        if (peek(1) == '&') { emit(Tok::AND, 2); return; }
        emit(Tok::AMP, 1);
        return;
      case '|':
        if (peek(1) == '|') { emit(Tok::OR, 2); return; }
        emit(Tok::PIPE, 1);
        return;
      case '=':
        if (peek(1) == '=' && peek(2) == '>') { emit(Tok::IMPLIES, 3); return; }
        if (peek(1) == '=') { emit(Tok::EQ, 2); return; }
        emit(Tok::ASSIGN, 1);
        return;
      case '<':
        if (peek(1) == '=' && peek(2) == '=' && peek(3) == '>')
        {
          emit(Tok::IFF, 4);
          return;
        }
        if (peek(1) == '=') { emit(Tok::LE, 2); return; }
        emit(Tok::LT, 1);
        return;
      case '>':
        if (peek(1) == '=') { emit(Tok::GE, 2); return; }
        emit(Tok::GT, 1);
        return;
      default: break;
    }
    d_diags.push_back({DiagKind::LexError, hereSpan(1),
                       std::string("illegal character '") + c + "'"});
    advance();
  }

  std::shared_ptr<const SourceFile> d_file;
  const std::string& d_src;
  DiagnosticList& d_diags;
  size_t d_pos = 0;
  int d_line = 1;
  int d_col = 1;
  int d_startLine = 1;
  int d_startCol = 1;
};

}  // namespace

std::vector<Token> lex(std::shared_ptr<const SourceFile> file,
                       DiagnosticList& diags)
{
  return Lexer(std::move(file), diags).run();
}

}  // namespace uclidmini
