#include "limitvor/sites.hpp"

#include "limitvor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace limitvor {

const PolySite& SiteSet::by_label(int label) const {
    for (const auto& s : sites)
        if (s.label == label) return s;
    throw DomainError(ErrorKind::InvalidInput, "no site with label " + std::to_string(label));
}

std::vector<int> SiteSet::labels() const {
    std::vector<int> r;
    for (const auto& s : sites) r.push_back(s.label);
    return r;
}

void SiteSet::validate() const {
    std::set<int> seen;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        if (sites[i].label <= 0 || !seen.insert(sites[i].label).second)
            throw DomainError(ErrorKind::InvalidInput, "bad or duplicate label " + std::to_string(sites[i].label));
        for (std::size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i].x == sites[j].x && sites[i].y == sites[j].y)
                throw DomainError(ErrorKind::CoincidentSites,
                                  "sites " + std::to_string(sites[i].label) + " and " +
                                      std::to_string(sites[j].label) + " are identical");
    }
}

DirectionVector DirectionVector::primitive(const Rational& x, const Rational& y) {
    if (x == 0 && y == 0) throw DomainError(ErrorKind::CoincidentSites, "zero direction vector");
    Integer l;
    mpz_lcm(l.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Integer a = x.get_num() * (l / x.get_den());
    Integer b = y.get_num() * (l / y.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return DirectionVector{Rational(a / g), Rational(b / g)};
}

double DirectionVector::radians() const { return std::atan2(dy.get_d(), dx.get_d()); }

DirectionVector DirectionVector::undirected() const {
    if (dx > 0 || (dx == 0 && dy > 0)) return *this;
    return negated();
}

std::string DirectionVector::str() const { return "(" + dx.get_str() + "," + dy.get_str() + ")"; }

std::string ExtendedPoint::str() const { return "(" + cx.str() + "," + cy.str() + ")"; }

const char* orientation_name(Orientation o) {
    switch (o) {
    case Orientation::Collinear: return "Collinear";
    case Orientation::Left: return "Left";
    case Orientation::Right: return "Right";
    }
    return "?";
}

const char* incircle_name(InCircle c) {
    switch (c) {
    case InCircle::Inside: return "Inside";
    case InCircle::Outside: return "Outside";
    case InCircle::Cocircular: return "Cocircular";
    }
    return "?";
}

DirectionVector direction(const PolySite& u, const PolySite& v) {
    Poly dx = v.x - u.x, dy = v.y - u.y;
    if (dx.is_zero() && dy.is_zero())
        throw DomainError(ErrorKind::CoincidentSites,
                          "sites " + std::to_string(u.label) + " and " + std::to_string(v.label) + " coincide");
    long m;
    if (dx.is_zero()) m = dy.lowdeg();
    else if (dy.is_zero()) m = dx.lowdeg();
    else m = std::min(dx.lowdeg(), dy.lowdeg());
    return DirectionVector::primitive(dx.coeff(m), dy.coeff(m));
}

Poly collinearity_poly(const PolySite& u, const PolySite& v, const PolySite& w) {
    return (v.x - u.x) * (w.y - u.y) - (v.y - u.y) * (w.x - u.x);
}

Orientation orientation(const PolySite& u, const PolySite& v, const PolySite& w) {
    int s = ruling_sign(collinearity_poly(u, v, w));
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

namespace {

Poly det3(const Poly& a1, const Poly& a2, const Poly& a3, const Poly& b1, const Poly& b2, const Poly& b3,
          const Poly& c1, const Poly& c2, const Poly& c3) {
    return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
}

Poly sq(const PolySite& p) { return p.x * p.x + p.y * p.y; }

std::string triple_str(const PolySite& u, const PolySite& v, const PolySite& w) {
    return std::to_string(u.label) + "," + std::to_string(v.label) + "," + std::to_string(w.label);
}

}  // namespace

CircleCenter circle_center(const PolySite& u, const PolySite& v, const PolySite& w) {
    Poly D = collinearity_poly(u, v, w);
    if (D.is_zero()) throw DomainError(ErrorKind::CollinearTriple, "sites " + triple_str(u, v, w));
    Poly one(1);
    Poly su = sq(u), sv = sq(v), sw = sq(w);
    Poly nx = det3(su, u.y, one, sv, v.y, one, sw, w.y, one);
    Poly ny = det3(u.x, su, one, v.x, sv, one, w.x, sw, one);
    Poly twoD = scale(D, 2);
    CircleCenter c;
    c.center = ExtendedPoint{limit_ratio(nx, twoD), limit_ratio(ny, twoD)};
    c.clockwise = ruling_sign(D) < 0;
    return c;
}

bool positive_radius(const PolySite& u, const PolySite& v, const PolySite& w) {
    auto c = circle_center(u, v, w).center;
    return c.cx.sign() != 0 || c.cy.sign() != 0;
}

Poly incircle_poly(const PolySite& u, const PolySite& v, const PolySite& w, const PolySite& q) {
    auto rel = [&](const PolySite& p) {
        PolySite r{p.label, p.x - q.x, p.y - q.y};
        return r;
    };
    PolySite a = rel(u), b = rel(v), c = rel(w);
    return det3(a.x, a.y, sq(a), b.x, b.y, sq(b), c.x, c.y, sq(c));
}

InCircle in_circle(const PolySite& u, const PolySite& v, const PolySite& w, const PolySite& q) {
    Orientation o = orientation(u, v, w);
    if (o == Orientation::Collinear) throw DomainError(ErrorKind::CollinearTriple, "sites " + triple_str(u, v, w));
    Poly I = o == Orientation::Right ? incircle_poly(u, v, w, q) : incircle_poly(u, w, v, q);
    int s = ruling_sign(I);
    if (s > 0) return InCircle::Outside;
    if (s < 0) return InCircle::Inside;
    return InCircle::Cocircular;
}

std::optional<GPViolation> general_position(const SiteSet& s) {
    const auto& p = s.sites;
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (collinearity_poly(p[i], p[j], p[k]).is_zero())
                    return GPViolation{GPViolation::Kind::Collinear, {p[i].label, p[j].label, p[k].label}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (incircle_poly(p[i], p[j], p[k], p[l]).is_zero())
                        return GPViolation{GPViolation::Kind::Cocircular,
                                           {p[i].label, p[j].label, p[k].label, p[l].label}};
    return std::nullopt;
}

void require_general_position(const SiteSet& s) {
    s.validate();
    if (auto v = general_position(s)) {
        std::string msg = v->kind == GPViolation::Kind::Collinear ? "collinear" : "cocircular";
        for (int l : v->labels) msg += " " + std::to_string(l);
        throw DomainError(ErrorKind::GeneralPositionViolation, msg);
    }
}

int site_order(const PolySite& u, const PolySite& v) {
    int c = series_compare(u.x, v.x);
    return c != 0 ? c : series_compare(u.y, v.y);
}

std::pair<Rational, Rational> site_at_zero(const PolySite& p) { return {p.x.constant(), p.y.constant()}; }

}  // namespace limitvor
