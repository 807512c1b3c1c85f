#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ngc/errors.hpp"

namespace ngc {

using Rat = mpq_class;

/// Ring parameters: base dimension d (2..4) and the maximal total
/// differentiation order per jet variable. Exceeding max_order signals a
/// mis-sized ring, not a math error.
struct JetRing {
    int dim = 2;
    int max_order = 4;
};

/// A jet variable: an iterated partial derivative of one of the fields
/// (rho or a Casimir a^k), or a bare base coordinate x^i. Packed into a
/// single 32-bit key so that numeric comparison realizes the canonical
/// order: field first, then the multi-index lexicographically.
class JetVar {
public:
    static constexpr uint32_t kFieldRho = 0;
    static constexpr uint32_t kFieldBase = 8;  // + coordinate index 1..4

    JetVar() : key_(0) {}
    explicit JetVar(uint32_t key) : key_(key) {}

    static JetVar rho() { return JetVar(0); }
    static JetVar casimir(int species) {
        return JetVar(static_cast<uint32_t>(species) << 24);
    }
    static JetVar base(int coord) {
        return JetVar((kFieldBase + static_cast<uint32_t>(coord)) << 24);
    }

    uint32_t key() const { return key_; }
    uint32_t field() const { return key_ >> 24; }
    bool is_base() const { return field() >= kFieldBase; }
    int base_index() const { return static_cast<int>(field() - kFieldBase); }

    int order(int coord) const {
        return static_cast<int>((key_ >> shift(coord)) & 0x3f);
    }
    int total_order() const {
        int t = 0;
        for (int i = 1; i <= 4; ++i) t += order(i);
        return t;
    }

    /// The variable with the multi-index bumped at coord.
    JetVar bumped(int coord) const {
        return JetVar(key_ + (1u << shift(coord)));
    }

    std::string display(int dim) const;

    friend bool operator==(JetVar a, JetVar b) { return a.key_ == b.key_; }
    friend bool operator<(JetVar a, JetVar b) { return a.key_ < b.key_; }

private:
    static int shift(int coord) { return 6 * (4 - coord); }
    uint32_t key_;
};

/// Product of jet variables and base coordinates, kept sorted.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<JetVar> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
    }

    const std::vector<JetVar>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    size_t size() const { return factors_.size(); }

    Monomial times(const Monomial& other) const {
        Monomial r;
        r.factors_.resize(factors_.size() + other.factors_.size());
        std::merge(factors_.begin(), factors_.end(), other.factors_.begin(),
                   other.factors_.end(), r.factors_.begin());
        return r;
    }

    /// Replace the factor at position pos by v, re-sorting.
    Monomial with_replaced(size_t pos, JetVar v) const {
        Monomial r = *this;
        r.factors_[pos] = v;
        std::sort(r.factors_.begin(), r.factors_.end());
        return r;
    }

    Monomial with_erased(size_t pos) const {
        Monomial r = *this;
        r.factors_.erase(r.factors_.begin() + static_cast<long>(pos));
        return r;
    }

    std::string display(int dim) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(),
                                            b.factors_.begin(), b.factors_.end());
    }

private:
    std::vector<JetVar> factors_;
};

/// Exact differential polynomial: finitely many monomials with nonzero
/// rational coefficients. Immutable in spirit; all operations are pure.
class DiffPolynomial {
public:
    DiffPolynomial() = default;

    static DiffPolynomial zero() { return {}; }
    static DiffPolynomial constant(const Rat& c) {
        DiffPolynomial p;
        if (c != 0) p.terms_[Monomial()] = c;
        return p;
    }
    static DiffPolynomial variable(JetVar v) {
        DiffPolynomial p;
        p.terms_[Monomial({v})] = 1;
        return p;
    }
    static DiffPolynomial term(const Monomial& m, const Rat& c) {
        DiffPolynomial p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    DiffPolynomial& operator+=(const DiffPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    DiffPolynomial& operator-=(const DiffPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) {
        a += b;
        return a;
    }
    friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) {
        a -= b;
        return a;
    }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b) {
        DiffPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    friend DiffPolynomial operator*(const DiffPolynomial& a, const Rat& c) {
        DiffPolynomial r;
        if (c == 0) return r;
        for (const auto& [m, cm] : a.terms_) r.terms_[m] = cm * c;
        return r;
    }
    friend DiffPolynomial operator*(const Rat& c, const DiffPolynomial& a) { return a * c; }
    friend DiffPolynomial operator-(const DiffPolynomial& a) { return a * Rat(-1); }

    friend bool operator==(const DiffPolynomial& a, const DiffPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Parallel (monomial, coefficient) views in canonical order.
    std::vector<Monomial> monomials() const;
    std::vector<Rat> coefficients() const;

    std::string display(int dim) const;

private:
    std::map<Monomial, Rat> terms_;
};

/// Total derivative d/dx^coord: Leibniz over the factors of each monomial.
/// Jet factors get their multi-index bumped; a base factor x^i contributes
/// 1 when i == coord and 0 otherwise.
DiffPolynomial total_derivative(const DiffPolynomial& p, int coord, const JetRing& ring);

/// Display name of base coordinate `coord` (1-based) in dimension dim.
char coordinate_name(int coord);

}  // namespace ngc
