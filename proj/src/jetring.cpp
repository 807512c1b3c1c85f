#include "ngc/jetring.hpp"

#include <sstream>

namespace ngc {

char coordinate_name(int coord) {
    static const char names[] = {'x', 'y', 'z', 'w'};
    return names[coord - 1];
}

std::string JetVar::display(int dim) const {
    if (is_base()) return std::string(1, coordinate_name(base_index()));
    std::string s = field() == kFieldRho ? "rho" : "a" + std::to_string(field());
    if (total_order() == 0) return s;
    s += "_";
    for (int i = 1; i <= dim; ++i)
        for (int k = 0; k < order(i); ++k) s += coordinate_name(i);
    return s;
}

std::string Monomial::display(int dim) const {
    if (factors_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size();) {
        size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
        if (!s.empty()) s += "*";
        s += factors_[i].display(dim);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::vector<Monomial> DiffPolynomial::monomials() const {
    std::vector<Monomial> r;
    r.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.push_back(m);
    return r;
}

std::vector<Rat> DiffPolynomial::coefficients() const {
    std::vector<Rat> r;
    r.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.push_back(c);
    return r;
}

std::string DiffPolynomial::display(int dim) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (a != 1 || m.empty()) {
            out << a.get_str();
            if (!m.empty()) out << "*";
        }
        if (!m.empty()) out << m.display(dim);
    }
    return out.str();
}

DiffPolynomial total_derivative(const DiffPolynomial& p, int coord, const JetRing& ring) {
    DiffPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        const auto& fs = m.factors();
        for (size_t i = 0; i < fs.size(); ++i) {
            if (fs[i].is_base()) {
                if (fs[i].base_index() == coord) r.add_term(m.with_erased(i), c);
                continue;
            }
            JetVar b = fs[i].bumped(coord);
            if (b.total_order() > ring.max_order)
                throw MaxOrderExceeded("derivative order " + std::to_string(b.total_order()) +
                                       " exceeds ring max_order " +
                                       std::to_string(ring.max_order));
            r.add_term(m.with_replaced(i, b), c);
        }
    }
    return r;
}

}  // namespace ngc
