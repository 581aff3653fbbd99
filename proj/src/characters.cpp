#include "beauville/characters.hpp"

#include <string>

namespace beauville {

namespace {

void require_v_basis(Modulus n) {
    if (!n.coprime_to(3)) {
        throw PreconditionViolated("v1, v2 form a basis only for gcd(n, 3) = 1; n = " +
                                   std::to_string(n.value()));
    }
}

}  // namespace

CharacterV monomial_character(const Monomial& mon, Modulus n) {
    require_v_basis(n);
    if (mon.a < 0 || mon.b < 0 || mon.c < 0) {
        throw PreconditionViolated("monomial exponents must be nonnegative");
    }
    return {Residue(mon.a - mon.c, n), Residue(mon.b - mon.c, n)};
}

CharacterV standard_to_v(const CharacterStd& chi) {
    const Modulus n = chi.x.modulus();
    require_v_basis(n);
    const Residue two(2, n);
    return {two * chi.x + chi.y, chi.x + two * chi.y};
}

CharacterStd v_to_standard(const CharacterV& chi) {
    const Modulus n = chi.modulus();
    require_v_basis(n);
    const Residue third = inv3(n);
    const Residue two(2, n);
    return {third * (two * chi.s - chi.t), third * (two * chi.t - chi.s)};
}

}  // namespace beauville
