#include "itg/symbols.hpp"

#include <sstream>

namespace itg {

std::string to_string(const GeneratorSymbol& s) {
  std::ostringstream out;
  switch (s.kind) {
    case GeneratorSymbol::Kind::epsilon:
      return "eps";
    case GeneratorSymbol::Kind::xi:
      return "xi";
    case GeneratorSymbol::Kind::eta:
      return "eta";
    case GeneratorSymbol::Kind::circuit_elem:
      out << "C" << s.a << "(" << s.b << ")";
      return out.str();
    case GeneratorSymbol::Kind::cocircuit_elem:
      out << "D" << s.a << "(" << s.b << ")";
      return out.str();
    case GeneratorSymbol::Kind::quad_square:
      out << "[C" << s.a << " C" << s.b << "|C" << s.c << " C" << s.d << "]";
      return out.str();
    case GeneratorSymbol::Kind::quad_paren:
      out << "(C" << s.a << " C" << s.b << "|C" << s.c << " C" << s.d << ")";
      return out.str();
    case GeneratorSymbol::Kind::basis:
      out << "b" << s.a;
      return out.str();
  }
  return "?";
}

std::string to_string(const SignedSymbol& s) {
  if (s.is_identity) return "1";
  return (s.sign < 0 ? "-" : "+") + to_string(s.symbol);
}

}  // namespace itg
