#include "cartanjet/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cartanjet {

Rat::Rat(long num, long den)
{
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rat Rat::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("Rat::parse: bad character in '" + s + "'");
    }
    Rat r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("Rat::parse: malformed rational '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

Rat Rat::inverse() const
{
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    mpq_inv(r.q_, q_);
    return r;
}

std::string Rat::str() const
{
    char* raw = mpq_get_str(nullptr, 10, q_);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace cartanjet
