#pragma once

#include "limitvor/errors.hpp"
#include "limitvor/io.hpp"

#include <string>

namespace th {

using namespace limitvor;

inline std::string data(const std::string& name) { return std::string(LIMITVOR_DATA_DIR) + "/" + name; }

inline SiteSet load_sites(const std::string& name) { return siteset_from_json(load_json(data(name))); }

inline const Poly T = Poly::t();

// mpq_class(a, b) is not reduced on construction
inline Rational ratio(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline PolySite site(int label, const Poly& x, const Poly& y) {
    PolySite p;
    p.label = label;
    p.x = x;
    p.y = y;
    return p;
}

inline Poly tp(long c, std::size_t deg) { return Poly::monomial(Rational(c), deg); }

inline Rational q(const char* s) { return parse_rational(s); }

}  // namespace th
