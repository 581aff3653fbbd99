#pragma once

// The character group of G = (Z/n)^2 in two coordinate systems.
//
// The v-basis is the eigenbasis of the canonical linearization of O_C(1)
// on the degree-n Fermat curve: x, y, z carry the characters v1, v2,
// -(v1+v2). It is a basis exactly when gcd(n, 3) = 1, and it is the
// primary representation here because the diagonal homomorphisms and the
// h^1 criterion live in it. Standard coordinates (the dual basis of G)
// are derived on demand.
//
// Basis change, with e1 = (1,0), e2 = (0,1) the standard characters:
//   e1 = 2 v1 + v2,  e2 = v1 + 2 v2,  v1 + v2 = 3^{-1} (e1 + e2).

#include <cstdint>

#include "beauville/arith.hpp"

namespace beauville {

// Exponents of x^a y^b z^c; degree is a+b+c, never stored separately.
struct Monomial {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t degree() const noexcept { return a + b + c; }

    friend bool operator==(const Monomial& lhs, const Monomial& rhs) noexcept {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
    }
};

// A character s*v1 + t*v2 in v-coordinates.
struct CharacterV {
    Residue s;
    Residue t;

    Modulus modulus() const noexcept { return s.modulus(); }

    CharacterV operator+(const CharacterV& rhs) const { return {s + rhs.s, t + rhs.t}; }
    CharacterV operator-(const CharacterV& rhs) const { return {s - rhs.s, t - rhs.t}; }
    CharacterV operator-() const { return {-s, -t}; }

    bool is_zero() const noexcept { return s.is_zero() && t.is_zero(); }

    // Injective encoding s*n + t, usable as an associative-container key.
    std::int64_t key() const noexcept { return s.value() * modulus().value() + t.value(); }

    friend bool operator==(const CharacterV& lhs, const CharacterV& rhs) {
        return lhs.s == rhs.s && lhs.t == rhs.t;
    }
    friend bool operator!=(const CharacterV& lhs, const CharacterV& rhs) {
        return !(lhs == rhs);
    }
};

// A character in the standard basis of Hom(G, C*).
struct CharacterStd {
    Residue x;
    Residue y;

    friend bool operator==(const CharacterStd& lhs, const CharacterStd& rhs) {
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
    friend bool operator!=(const CharacterStd& lhs, const CharacterStd& rhs) {
        return !(lhs == rhs);
    }
};

// Character of x^a y^b z^c under the canonical linearization:
// (a-c) v1 + (b-c) v2. Requires gcd(n, 3) = 1 and a, b, c >= 0.
CharacterV monomial_character(const Monomial& mon, Modulus n);

// (x, y) |-> (2x + y, x + 2y). Requires gcd(n, 3) = 1.
CharacterV standard_to_v(const CharacterStd& chi);

// Inverse change of basis: (s, t) |-> 3^{-1} (2s - t, -s + 2t).
CharacterStd v_to_standard(const CharacterV& chi);

}  // namespace beauville
