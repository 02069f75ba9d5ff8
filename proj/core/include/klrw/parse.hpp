#ifndef KLRW_PARSE_HPP
#define KLRW_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "klrw/algebra.hpp"
#include "klrw/quiver.hpp"

namespace klrw {

// ---------------------------------------------------------------------------
// Text grammar for morphisms and chains, shared by the command line tool
// and the parameter files:
//
//   chain   :=  '[' expr ('|' expr)* ']'  |  expr
//   expr    :=  ['-'] term (('+' | '-') term)*  |  '0'
//   term    :=  [rational '*'] factor ('.' factor)*
//   factor  :=  atom ['*s^' nat]
//   atom    :=  'e(' n ')' | 'p(' n ')' | 'q(' n ')' | 's(' n ')'
//             | 'a(' n ',' n ')'
//   rational:=  nat ['/' nat]
//
// Composition '.' is in action order: in "q(1).p(2)" the right factor acts
// first, so the product is mu2(q(1), p(2)) = s(1).  Whitespace separates
// tokens freely.  print on a canonical form (the to_string output of any
// algebra element or chain) parses back to the same value.
// ---------------------------------------------------------------------------

// Syntax or composition error with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A single expression: sum of scalar multiples of composed words, reduced.
// Chamber indices are validated against the configuration.
AlgElem parse_morphism(const std::string& text, const QuiverConfig& cfg);

// A bracketed chain, or a single expression as a chain of length one.
std::vector<AlgElem> parse_chain(const std::string& text, const QuiverConfig& cfg);

std::string to_string(const std::vector<AlgElem>& chain);

}  // namespace klrw

#endif
