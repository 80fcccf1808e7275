#ifndef WV_PARSER_HPP
#define WV_PARSER_HPP

#include <stdexcept>
#include <string>

#include "wv/expr.hpp"

namespace wv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

// Parses the expression grammar: identifiers t, x, p, u, v, w (with `_`
// derivative suffixes over {t,x}), parameter names, f/h function symbols with
// prime marks, operators + - * / ^, rational literals.
JetExpr parse(const std::string& text);

}  // namespace wv

#endif
