#ifndef UCLIDMINI_LEXER_H
#define UCLIDMINI_LEXER_H

#include <memory>
#include <vector>

#include "uclidmini/diagnostics.h"
#include "uclidmini/token.h"

namespace uclidmini {

/**
 * Converts a source file into a token vector ending in END_OF_FILE.
 * Illegal characters are reported as LexError diagnostics; lexing continues
 * past them so that one pass reports every bad character.
 */
std::vector<Token> lex(std::shared_ptr<const SourceFile> file,
                       DiagnosticList& diags);

}  // namespace uclidmini

#endif
