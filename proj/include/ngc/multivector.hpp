#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ngc/jetring.hpp"

namespace ngc {

/// Subset of xi indices 1..d, stored as a bitmask (bit i-1 for xi_i).
using XiWord = uint8_t;

int word_size(XiWord w);
std::vector<int> word_indices(XiWord w);

/// Polynomial in the anticommuting symbols xi_1..xi_d with DiffPolynomial
/// coefficients. Houses functions (degree 0), vector fields, bivectors, ...
class Multivector {
public:
    explicit Multivector(int dim = 2) : dim_(dim) {}

    static Multivector zero(int dim) { return Multivector(dim); }
    static Multivector from_function(int dim, const DiffPolynomial& f) {
        Multivector m(dim);
        m.set_component(0, f);
        return m;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<XiWord, DiffPolynomial>& components() const { return comps_; }

    DiffPolynomial component(XiWord w) const {
        auto it = comps_.find(w);
        return it == comps_.end() ? DiffPolynomial::zero() : it->second;
    }

    void set_component(XiWord w, const DiffPolynomial& p) {
        if (p.is_zero())
            comps_.erase(w);
        else
            comps_[w] = p;
    }
    void add_component(XiWord w, const DiffPolynomial& p);

    /// -1 if components of mixed xi-degree, otherwise the common degree
    /// (0 for the zero multivector).
    int degree() const;

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Multivector& a, const Rat& c);
    friend Multivector operator*(const Rat& c, const Multivector& a) { return a * c; }
    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.dim_ == b.dim_ && a.comps_ == b.comps_;
    }

    std::string display() const;

private:
    int dim_;
    std::map<XiWord, DiffPolynomial> comps_;
};

/// Parity sign (+1/-1) of the shuffle merging word a before word b;
/// 0 when the words overlap.
int wedge_sign(XiWord a, XiWord b);

Multivector wedge(const Multivector& a, const Multivector& b);

/// Left odd derivative d/dxi_i: removing xi_i from an ascending word
/// contributes (-1)^position.
Multivector odd_derivative(const Multivector& a, int i);

/// Total derivative d/dx^coord applied componentwise.
Multivector total_derivative(const Multivector& a, int coord, const JetRing& ring);

/// The Schouten bracket on superfunctions. The sign convention is pinned
/// by the 2D Hamiltonian vector field and d_P(phi(Gamma_3)) = 0 fixtures.
Multivector schouten_bracket(const Multivector& a, const Multivector& b, const JetRing& ring);

/// Euler field sum_i x^i xi_i.
Multivector euler_field(int dim);

}  // namespace ngc
