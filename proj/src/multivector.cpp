#include "ngc/multivector.hpp"

#include <bit>
#include <sstream>

#include "ngc/errors.hpp"

namespace ngc {

int word_size(XiWord w) { return std::popcount(w); }

std::vector<int> word_indices(XiWord w) {
    std::vector<int> r;
    for (int i = 1; i <= 8; ++i)
        if (w & (1u << (i - 1))) r.push_back(i);
    return r;
}

void Multivector::add_component(XiWord w, const DiffPolynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = comps_.emplace(w, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

int Multivector::degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [w, p] : comps_) {
        int s = word_size(w);
        if (first) {
            deg = s;
            first = false;
        } else if (s != deg) {
            return -1;
        }
    }
    return deg;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (dim_ != o.dim_) throw DimensionMismatch("multivector dimensions differ");
    for (const auto& [w, p] : o.comps_) add_component(w, p);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (dim_ != o.dim_) throw DimensionMismatch("multivector dimensions differ");
    for (const auto& [w, p] : o.comps_) add_component(w, p * Rat(-1));
    return *this;
}

Multivector operator*(const Multivector& a, const Rat& c) {
    Multivector r(a.dim_);
    if (c == 0) return r;
    for (const auto& [w, p] : a.comps_) r.comps_[w] = p * c;
    return r;
}

std::string Multivector::display() const {
    if (comps_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, p] : comps_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << p.display(dim_) << ")";
        for (int i : word_indices(w)) out << "*xi" << (i - 1);
    }
    return out.str();
}

int wedge_sign(XiWord a, XiWord b) {
    if (a & b) return 0;
    int crossings = 0;
    for (int j = 1; j <= 8; ++j) {
        if (!(b & (1u << (j - 1)))) continue;
        XiWord above = static_cast<XiWord>(a >> j);
        crossings += std::popcount(above);
    }
    return crossings % 2 == 0 ? 1 : -1;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("wedge dimensions differ");
    Multivector r(a.dim());
    for (const auto& [wa, pa] : a.components())
        for (const auto& [wb, pb] : b.components()) {
            int s = wedge_sign(wa, wb);
            if (s == 0) continue;
            r.add_component(wa | wb, s == 1 ? pa * pb : pa * pb * Rat(-1));
        }
    return r;
}

Multivector odd_derivative(const Multivector& a, int i) {
    Multivector r(a.dim());
    XiWord bit = static_cast<XiWord>(1u << (i - 1));
    for (const auto& [w, p] : a.components()) {
        if (!(w & bit)) continue;
        int below = std::popcount(static_cast<XiWord>(w & (bit - 1)));
        r.add_component(static_cast<XiWord>(w & ~bit), below % 2 == 0 ? p : p * Rat(-1));
    }
    return r;
}

Multivector total_derivative(const Multivector& a, int coord, const JetRing& ring) {
    Multivector r(a.dim());
    for (const auto& [w, p] : a.components())
        r.add_component(w, total_derivative(p, coord, ring));
    return r;
}

namespace {

// One homogeneous piece of a multivector.
Multivector homogeneous_part(const Multivector& a, int deg) {
    Multivector r(a.dim());
    for (const auto& [w, p] : a.components())
        if (word_size(w) == deg) r.set_component(w, p);
    return r;
}

Multivector bracket_homogeneous(const Multivector& a, int p, const Multivector& b, int q,
                                const JetRing& ring) {
    // [[A, B]] = sum_i ( dA/dxi_i . dB/dx^i
    //                    - (-1)^{(p-1)(q-1)} dB/dxi_i . dA/dx^i )
    // with *right* xi-derivatives; in terms of the left derivatives used
    // here that costs (-1)^{deg-1} per slot. The orientation is pinned by
    // the reference 2D outputs (the Hamiltonian vector field of [1,2;1,2]
    // and [[P, 2 phi(Gamma_1) + phi(Gamma_2)]] = +Q_tetra).
    Multivector r(a.dim());
    Rat s1((p - 1) % 2 == 0 ? 1 : -1);
    Rat s2((p * (q - 1)) % 2 == 0 ? -1 : 1);
    for (int i = 1; i <= a.dim(); ++i) {
        r += s1 * wedge(odd_derivative(a, i), total_derivative(b, i, ring));
        r += s2 * wedge(odd_derivative(b, i), total_derivative(a, i, ring));
    }
    return r;
}

}  // namespace

Multivector schouten_bracket(const Multivector& a, const Multivector& b, const JetRing& ring) {
    if (a.dim() != b.dim()) throw DimensionMismatch("bracket dimensions differ");
    Multivector r(a.dim());
    for (int p = 0; p <= a.dim(); ++p) {
        Multivector ap = homogeneous_part(a, p);
        if (ap.is_zero()) continue;
        for (int q = 0; q <= b.dim(); ++q) {
            Multivector bq = homogeneous_part(b, q);
            if (bq.is_zero()) continue;
            r += bracket_homogeneous(ap, p, bq, q, ring);
        }
    }
    return r;
}

Multivector euler_field(int dim) {
    Multivector e(dim);
    for (int i = 1; i <= dim; ++i)
        e.set_component(static_cast<XiWord>(1u << (i - 1)),
                        DiffPolynomial::variable(JetVar::base(i)));
    return e;
}

}  // namespace ngc
