#pragma once

#include <compare>
#include <string>

namespace itg {

// Name of a presentation generator. Circuit and cocircuit indices refer
// to the canonical enumerations of the matroid at hand.
struct GeneratorSymbol {
  enum class Kind {
    epsilon,         // sign generator of the extended group
    xi,              // sign generator of the square-bracket presentation
    eta,             // sign generator of the small presentation
    circuit_elem,    // C(x): a = circuit index, b = element
    cocircuit_elem,  // D(y): a = cocircuit index, b = element
    quad_square,     // [C_a C_b | C_c C_d]
    quad_paren,      // (C_a C_b | C_c C_d)
    basis,           // anonymous basis vector, a = index
  };

  Kind kind = Kind::basis;
  int a = 0, b = 0, c = 0, d = 0;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

inline GeneratorSymbol epsilon_symbol() { return {GeneratorSymbol::Kind::epsilon}; }
inline GeneratorSymbol xi_symbol() { return {GeneratorSymbol::Kind::xi}; }
inline GeneratorSymbol eta_symbol() { return {GeneratorSymbol::Kind::eta}; }
inline GeneratorSymbol circuit_elem_symbol(int circuit, int element) {
  return {GeneratorSymbol::Kind::circuit_elem, circuit, element};
}
inline GeneratorSymbol cocircuit_elem_symbol(int cocircuit, int element) {
  return {GeneratorSymbol::Kind::cocircuit_elem, cocircuit, element};
}
inline GeneratorSymbol quad_square_symbol(int a, int b, int c, int d) {
  return {GeneratorSymbol::Kind::quad_square, a, b, c, d};
}
inline GeneratorSymbol quad_paren_symbol(int a, int b, int c, int d) {
  return {GeneratorSymbol::Kind::quad_paren, a, b, c, d};
}
inline GeneratorSymbol basis_symbol(int index) {
  return {GeneratorSymbol::Kind::basis, index};
}

std::string to_string(const GeneratorSymbol& s);

// A generator reference with a sign, or the group identity.
struct SignedSymbol {
  int sign = 1;  // +1 or -1; identity carries +1
  bool is_identity = true;
  GeneratorSymbol symbol;

  static SignedSymbol identity() { return {}; }
  static SignedSymbol of(int sign, GeneratorSymbol s) { return {sign, false, s}; }

  friend bool operator==(const SignedSymbol&, const SignedSymbol&) = default;
};

std::string to_string(const SignedSymbol& s);

}  // namespace itg
