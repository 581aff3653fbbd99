#include "beauville/arith.hpp"

#include <numeric>
#include <ostream>
#include <string>

namespace beauville {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 15;

std::int64_t canon(std::int64_t x, std::int64_t n) noexcept {
    std::int64_t v = x % n;
    return v < 0 ? v + n : v;
}

void require_same_modulus(Modulus a, Modulus b) {
    if (a != b) {
        throw ModulusMismatch("residues of modulus " + std::to_string(a.value()) +
                              " and " + std::to_string(b.value()) + " mixed");
    }
}

// Returns gcd(a, n) and sets x with a*x === gcd (mod n).
std::int64_t extended_gcd(std::int64_t a, std::int64_t n, std::int64_t& x) {
    std::int64_t old_r = a, r = n;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    x = old_s;
    return old_r;
}

}  // namespace

Modulus::Modulus(std::int64_t n) {
    if (n < 5 || n >= kMaxModulus) {
        throw PreconditionViolated("modulus must satisfy 5 <= n < 2^15, got " +
                                   std::to_string(n));
    }
    n_ = static_cast<std::int32_t>(n);
}

bool Modulus::coprime_to(std::int64_t k) const noexcept {
    return std::gcd(static_cast<std::int64_t>(n_), k) == 1;
}

Residue::Residue(std::int64_t x, Modulus n) noexcept : n_(n), v_(canon(x, n.value())) {}

bool Residue::is_unit() const noexcept {
    return std::gcd(v_, n_.value()) == 1;
}

Residue Residue::operator+(Residue rhs) const {
    require_same_modulus(n_, rhs.n_);
    return Residue(v_ + rhs.v_, n_);
}

Residue Residue::operator-(Residue rhs) const {
    require_same_modulus(n_, rhs.n_);
    return Residue(v_ - rhs.v_, n_);
}

Residue Residue::operator*(Residue rhs) const {
    require_same_modulus(n_, rhs.n_);
    return Residue(v_ * rhs.v_, n_);
}

Residue Residue::operator-() const noexcept {
    return Residue(-v_, n_);
}

Residue Residue::inverse() const {
    std::int64_t x = 0;
    const std::int64_t g = extended_gcd(v_, n_.value(), x);
    if (g != 1) {
        throw NotAUnit(std::to_string(v_) + " is not a unit mod " +
                       std::to_string(n_.value()) + " (gcd " + std::to_string(g) + ")");
    }
    return Residue(x, n_);
}

bool operator==(Residue a, Residue b) {
    require_same_modulus(a.n_, b.n_);
    return a.v_ == b.v_;
}

Residue canonicalize(std::int64_t x, Modulus n) noexcept {
    return Residue(x, n);
}

Residue inv3(Modulus n) {
    return Residue(3, n).inverse();
}

std::ostream& operator<<(std::ostream& os, Residue r) {
    return os << r.value() << " (mod " << r.modulus().value() << ")";
}

}  // namespace beauville
