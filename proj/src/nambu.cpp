#include "ngc/nambu.hpp"

#include <numeric>

namespace ngc {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace

Multivector nambu_structure(int dim) {
    if (dim < 2 || dim > 4) throw DimensionMismatch("dimension must be 2, 3 or 4");
    Multivector p(dim);
    std::vector<int> perm(static_cast<size_t>(dim));
    std::iota(perm.begin(), perm.end(), 1);
    // Each unordered pair {i, j} of xi indices appears twice (as (i, j) and
    // (j, i), with opposite permutation signs and swapped xi order), hence /2.
    do {
        std::vector<JetVar> factors = {JetVar::rho()};
        for (int m = 1; m <= dim - 2; ++m)
            factors.push_back(JetVar::casimir(m).bumped(perm[static_cast<size_t>(m) + 1]));
        XiWord w = static_cast<XiWord>((1 << (perm[0] - 1)) | (1 << (perm[1] - 1)));
        int sign = permutation_sign(perm) * (perm[0] < perm[1] ? 1 : -1);
        p.add_component(w, DiffPolynomial::term(Monomial(std::move(factors)),
                                                Rat(sign, 2)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

Multivector lichnerowicz(const Multivector& x, const JetRing& ring) {
    return schouten_bracket(nambu_structure(ring.dim), x, ring);
}

bool nambu_is_poisson(int dim, const JetRing& ring) {
    Multivector p = nambu_structure(dim);
    return schouten_bracket(p, p, ring).is_zero();
}

}  // namespace ngc
