#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "integdistill/error.hpp"
#include "integdistill/syntax.hpp"

namespace integdistill {

/// Lossless lexer. Whitespace and comments are attached to the following
/// token as leading trivia; trailing trivia lives on the end-of-file token.
/// `\r\n` counts as a single line break. Throws LexError.
std::vector<Token> tokenize(std::string_view source, std::string_view path = {});

/// Parses a whole MiniOO file. Stops at the first error (ParseError/LexError).
SyntaxTree parse(std::string_view source, std::string_view path = {});

/// Reassembles the file from the token stream.
std::string emit(const SyntaxTree& tree);

}  // namespace integdistill
