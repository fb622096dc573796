// Exact sparse multivariate arithmetic over GF(p), with monomials ordered
// by the skew-diagonal lexicographic order. Under this order the leading
// term of a minor is the product of the entries on its skew-diagonal,
// which is what every Groebner-theoretic statement downstream relies on.

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ladet/cell.hpp"
#include "ladet/field.hpp"

namespace ladet {

// A monomial is a sparse exponent map, kept sorted with the largest
// variable first. No zero exponents are stored; the empty list is 1.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(const Cell& v, int exponent = 1) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        if (exponent > 0) factors_.push_back({v, exponent});
    }

    static Monomial unit() { return Monomial(); }

    bool is_unit() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    int exponent_of(const Cell& v) const {
        for (const auto& f : factors_)
            if (f.first == v) return f.second;
        return 0;
    }

    bool squarefree() const {
        for (const auto& f : factors_)
            if (f.second > 1) return false;
        return true;
    }

    const std::vector<std::pair<Cell, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && var_less(b->first, a->first)))
                r.factors_.push_back(*a++);
            else if (a == factors_.end() || var_less(a->first, b->first))
                r.factors_.push_back(*b++);
            else {
                r.factors_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        auto b = o.factors_.begin();
        for (const auto& f : factors_) {
            while (b != o.factors_.end() && var_less(f.first, b->first)) ++b;
            if (b == o.factors_.end() || b->first != f.first || b->second < f.second)
                return false;
        }
        return true;
    }

    // Quotient, defined only when o divides *this.
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        auto b = o.factors_.begin();
        for (const auto& f : factors_) {
            if (b != o.factors_.end() && b->first == f.first) {
                int e = f.second - b->second;
                if (e < 0) throw std::invalid_argument("monomial quotient undefined");
                if (e > 0) r.factors_.push_back({f.first, e});
                ++b;
            } else {
                r.factors_.push_back(f);
            }
        }
        if (b != o.factors_.end()) throw std::invalid_argument("monomial quotient undefined");
        return r;
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::pair<Cell, int>> factors_;  // sorted, largest variable first

    friend Monomial lcm(const Monomial&, const Monomial&);
    friend std::strong_ordering mono_compare(const Monomial&, const Monomial&);
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && var_less(j->first, i->first)))
            r.factors_.push_back(*i++);
        else if (i == a.factors_.end() || var_less(i->first, j->first))
            r.factors_.push_back(*j++);
        else {
            r.factors_.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (const auto& f : a.factors())
        for (const auto& g : b.factors())
            if (f.first == g.first) return false;
    return true;
}

// Lexicographic comparison induced by var_compare: walk both exponent
// lists from the largest variable down; the first variable where the
// exponents differ decides.
inline std::strong_ordering mono_compare(const Monomial& a, const Monomial& b) {
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        auto vc = var_compare(i->first, j->first);
        if (vc > 0) return std::strong_ordering::greater;  // a owns the larger variable
        if (vc < 0) return std::strong_ordering::less;
        if (i->second != j->second) return i->second <=> j->second;
        ++i, ++j;
    }
    if (i != a.factors_.end()) return std::strong_ordering::greater;
    if (j != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

inline bool mono_less(const Monomial& a, const Monomial& b) {
    return mono_compare(a, b) < 0;
}

inline std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        s += to_string(f.first);
        if (f.second > 1) s += "^" + std::to_string(f.second);
    }
    return s;
}

struct Term {
    Monomial mono;
    Fp coeff;
};

// A polynomial is a term list in strictly descending monomial order with
// no zero coefficients; the zero polynomial is the empty list. Values are
// immutable once built, so sharing across threads is safe.
class Polynomial {
public:
    explicit Polynomial(std::uint32_t p = kDefaultPrime) : p_(p) {}

    Polynomial(const Monomial& m, const Fp& c) : p_(c.modulus()) {
        if (!c.is_zero()) terms_.push_back({m, c});
    }

    static Polynomial zero(std::uint32_t p) { return Polynomial(p); }

    static Polynomial constant(std::int64_t v, std::uint32_t p) {
        return Polynomial(Monomial::unit(), Fp(v, p));
    }

    static Polynomial variable(const Cell& v, std::uint32_t p) {
        return Polynomial(Monomial(v), Fp(1, p));
    }

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("zero has no leading term");
        return terms_.front();
    }

    const Monomial& leading_monomial() const { return leading_term().mono; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        Polynomial r(p_);
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && mono_compare(a->mono, b->mono) > 0))
                r.terms_.push_back(*a++);
            else if (a == terms_.end() || mono_compare(b->mono, a->mono) > 0)
                r.terms_.push_back(*b++);
            else {
                Fp c = a->coeff + b->coeff;
                if (!c.is_zero()) r.terms_.push_back({a->mono, c});
                ++a, ++b;
            }
        }
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(p_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial scaled(const Fp& c) const {
        if (c.is_zero()) return Polynomial(p_);
        Polynomial r(p_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    // Multiplication by a single term keeps the term order: the monomial
    // order is multiplicative.
    Polynomial times_term(const Monomial& m, const Fp& c) const {
        if (c.is_zero()) return Polynomial(p_);
        Polynomial r(p_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        Polynomial r(p_);
        for (const auto& t : o.terms_)
            r = r + times_term(t.mono, t.coeff);
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_term().coeff.inverse());
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void check(const Polynomial& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed field moduli");
    }

    std::uint32_t p_;
    std::vector<Term> terms_;
};

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        if (t.mono.is_unit())
            s += std::to_string(t.coeff.value());
        else if (t.coeff.value() != 1)
            s += std::to_string(t.coeff.value()) + "*" + to_string(t.mono);
        else
            s += to_string(t.mono);
    }
    return s;
}

// Determinant of the generic submatrix on the given rows and columns, by
// cofactor expansion along the first row. Indices must be strictly
// increasing; the result is canonical by construction.
inline Polynomial generic_minor(const std::vector<int>& rows, const std::vector<int>& cols,
                                std::uint32_t p) {
    if (rows.size() != cols.size() || rows.empty())
        throw std::invalid_argument("minor selection must be square and nonempty");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] >= rows[i] || cols[i - 1] >= cols[i])
            throw std::invalid_argument("minor indices must be strictly increasing");

    struct Rec {
        std::uint32_t p;
        Polynomial run(const std::vector<int>& rs, const std::vector<int>& cs) const {
            if (rs.size() == 1)
                return Polynomial::variable({rs[0], cs[0]}, p);
            Polynomial acc(p);
            std::vector<int> sub_rows(rs.begin() + 1, rs.end());
            for (std::size_t j = 0; j < cs.size(); ++j) {
                std::vector<int> sub_cols;
                sub_cols.reserve(cs.size() - 1);
                for (std::size_t l = 0; l < cs.size(); ++l)
                    if (l != j) sub_cols.push_back(cs[l]);
                Polynomial cof = run(sub_rows, sub_cols)
                                     .times_term(Monomial({rs[0], cs[j]}), Fp(j % 2 == 0 ? 1 : -1, p));
                acc = acc + cof;
            }
            return acc;
        }
    };
    return Rec{p}.run(rows, cols);
}

} // namespace ladet
