#pragma once

// Exact arithmetic in Z/n: canonical representatives, units, inverses via
// extended Euclid. Every Residue carries its modulus; a binary operation
// that mixes moduli throws ModulusMismatch instead of coercing.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

namespace beauville {

// inverse() of a residue with gcd(value, n) > 1.
struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};

// Binary operation on residues of different moduli.
struct ModulusMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// Curve degree outside [0, n-3]; relations with the Fermat equation are
// not modeled above that window.
struct DegreeOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal consistency failure: (1-g)^2 not divisible by n^2.
struct NonIntegralChi : std::logic_error {
    using std::logic_error::logic_error;
};

// Theorem-mode search exhausted every unit without a passing pair.
struct NoMuFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The ring Z/n. Requires 5 <= n < 2^15, so products of two canonical
// representatives (and small multiples of them) stay far inside the
// 64-bit signed range.
class Modulus {
  public:
    explicit Modulus(std::int64_t n);

    std::int64_t value() const noexcept { return n_; }
    bool coprime_to(std::int64_t k) const noexcept;

    friend bool operator==(Modulus a, Modulus b) noexcept { return a.n_ == b.n_; }
    friend bool operator!=(Modulus a, Modulus b) noexcept { return a.n_ != b.n_; }

  private:
    std::int32_t n_;
};

// An element of Z/n held as its canonical representative in [0, n).
class Residue {
  public:
    Residue(std::int64_t x, Modulus n) noexcept;

    std::int64_t value() const noexcept { return v_; }
    Modulus modulus() const noexcept { return n_; }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_unit() const noexcept;

    Residue operator+(Residue rhs) const;
    Residue operator-(Residue rhs) const;
    Residue operator*(Residue rhs) const;
    Residue operator-() const noexcept;

    // Extended Euclid; n is not assumed prime. Throws NotAUnit.
    Residue inverse() const;

    friend bool operator==(Residue a, Residue b);
    friend bool operator!=(Residue a, Residue b) { return !(a == b); }

  private:
    Modulus n_;
    std::int64_t v_;
};

// x mod n in [0, n), for any signed x.
Residue canonicalize(std::int64_t x, Modulus n) noexcept;

// 3^{-1} mod n. Throws NotAUnit when 3 | n.
Residue inv3(Modulus n);

std::ostream& operator<<(std::ostream& os, Residue r);

}  // namespace beauville
