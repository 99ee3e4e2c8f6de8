#ifndef UCLIDMINI_DIAGNOSTICS_H
#define UCLIDMINI_DIAGNOSTICS_H

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace uclidmini {

/** One input file. Contents are newline-normalized to LF before lexing. */
struct SourceFile
{
  std::string path;
  std::string contents;

  static std::shared_ptr<const SourceFile> make(std::string path,
                                                std::string contents)
  {
    auto f = std::make_shared<SourceFile>();
    f->path = std::move(path);
    // Normalize CRLF / lone CR to LF.
    std::string norm;
    norm.reserve(contents.size());
    for (size_t i = 0; i < contents.size(); ++i)
    {
      char c = contents[i];
      if (c == '\r')
      {
        if (i + 1 < contents.size() && contents[i + 1] == '\n') continue;
        norm.push_back('\n');
        continue;
      }
      norm.push_back(c);
    }
    f->contents = std::move(norm);
    return f;
  }
};

/** A half-open source range: 1-based line/column plus byte length. */
struct Span
{
  std::shared_ptr<const SourceFile> file;
  int line = 1;
  int col = 1;
  int len = 0;

  std::string location() const
  {
    std::ostringstream os;
    os << (file ? file->path : std::string("<unknown>")) << ":" << line << ":"
       << col;
    return os.str();
  }
};

enum class DiagKind
{
  LexError,
  ParseError,
  TypeMismatch,
  UnknownIdentifier,
  IllegalAssignment,
  CyclicInstantiation,
  UnboundPort,
  RecursiveProcedure,
  MissingLoopInvariant,
  NonLiteralForBound,
  UnknownGroup,
  Other,
};

struct Diagnostic
{
  DiagKind kind = DiagKind::Other;
  Span span;
  std::string message;

  std::string str() const
  {
    return span.location() + ": error: " + message;
  }
};

using DiagnosticList = std::vector<Diagnostic>;

inline std::string renderDiagnostics(const DiagnosticList& ds)
{
  std::string out;
  for (const auto& d : ds)
  {
    out += d.str();
    out += '\n';
  }
  return out;
}

}  // namespace uclidmini

#endif
