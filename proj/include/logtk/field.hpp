#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace logtk {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficient field descriptor: char 0 means Q, otherwise F_p for prime p < 2^31.
// Scalars are carried as exact rationals; over F_p they are kept as canonical
// representatives n/1 with 0 <= n < p.
class Field {
public:
    Field() : p_(0) {}

    static Field rationals() { return Field(); }

    static Field prime(unsigned long p) {
        if (p < 2 || p >= (1ul << 31) || !is_prime_ul(p))
            throw std::invalid_argument("field characteristic must be a prime < 2^31");
        Field f;
        f.p_ = p;
        return f;
    }

    unsigned long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    // Canonical form: reduced fraction over Q, representative in [0,p) over F_p.
    Rat reduce(const Rat& x) const {
        if (p_ == 0) {
            Rat r = x;
            r.canonicalize();
            return r;
        }
        Int num = x.get_num(), den = x.get_den();
        Int p(static_cast<unsigned long>(p_));
        Int n = num % p;
        if (n < 0) n += p;
        Int d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw std::domain_error("division by zero in F_p");
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible denominator in F_p");
        Int r = (n * dinv) % p;
        if (r < 0) r += p;
        return Rat(r);
    }

    Rat add(const Rat& a, const Rat& b) const { return reduce(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
    Rat neg(const Rat& a) const { return reduce(-a); }

    Rat inv(const Rat& a) const {
        Rat r = reduce(a);
        if (r == 0) throw std::domain_error("inverse of zero");
        if (p_ == 0) return 1 / r;
        return reduce(Rat(1) / r);
    }

    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

    bool is_zero(const Rat& a) const { return reduce(a) == 0; }

    std::string str() const { return p_ == 0 ? "Q" : "Fp(" + std::to_string(p_) + ")"; }

private:
    static bool is_prime_ul(unsigned long p) {
        Int z(p);
        return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
    }

    unsigned long p_;
};

} // namespace logtk
