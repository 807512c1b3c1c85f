#include "ngc/evalmorphism.hpp"

#include <algorithm>
#include <numeric>

#include "ngc/cache.hpp"

namespace ngc {

namespace {

std::vector<std::vector<int>> permutations_of(int d) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

Multivector evaluate_raw(const MicroGraph& g) {
    const int d = g.dim;
    const JetRing ring = ring_for(g);

    // Vertex contents before differentiation.
    std::vector<Multivector> base(static_cast<size_t>(g.max_vertex_id()) + 1, Multivector(d));
    std::vector<int> present;
    if (g.has_sink) {
        base[0] = euler_field(d);
        present.push_back(0);
    }
    for (int j = 1; j <= g.n_lc; ++j) {
        base[j] = Multivector::from_function(d, DiffPolynomial::variable(JetVar::rho()));
        present.push_back(j);
    }
    for (int k = 1; k <= g.n_species(); ++k)
        for (int j = 1; j <= g.n_lc; ++j) {
            int id = g.casimir_id(j, k);
            base[id] = Multivector::from_function(d, DiffPolynomial::variable(JetVar::casimir(k)));
            present.push_back(id);
        }
    std::sort(present.begin(), present.end());

    const auto perms = permutations_of(d);
    std::vector<int> perm_signs(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) perm_signs[i] = permutation_sign(perms[i]);

    Multivector result(d);
    std::vector<size_t> sel(g.n_lc, 0);
    while (true) {
        int sign = 1;
        for (int j = 0; j < g.n_lc; ++j) sign *= perm_signs[sel[j]];

        std::vector<Multivector> content = base;
        bool dead = false;
        for (int j = 1; j <= g.n_lc && !dead; ++j) {
            const auto& sigma = perms[sel[j - 1]];
            for (int p = 0; p < d; ++p) {
                int t = g.targets[j - 1][p];
                content[t] = total_derivative(content[t], sigma[p], ring);
                if (content[t].is_zero()) {
                    dead = true;
                    break;
                }
            }
        }
        if (!dead) {
            Multivector term = content[present[0]];
            for (size_t v = 1; v < present.size() && !term.is_zero(); ++v)
                term = wedge(term, content[present[v]]);
            result += term * Rat(sign);
        }

        int j = g.n_lc - 1;
        while (j >= 0 && ++sel[j] == perms.size()) sel[j--] = 0;
        if (j < 0) break;
    }
    return result;
}

}  // namespace

JetRing ring_for(const MicroGraph& g) {
    // +1 absorbs one outer Schouten bracket.
    return JetRing{g.dim, g.max_in_degree() + 1};
}

Multivector evaluate(const MicroGraph& g) { return evaluate_mode(g, EvalMode::Plain); }

Multivector evaluate_skew(const MicroGraph& g) { return evaluate_mode(g, EvalMode::Skew); }

Multivector evaluate_sym(const MicroGraph& g) { return evaluate_mode(g, EvalMode::Sym); }

Multivector evaluate_mode(const MicroGraph& g, EvalMode mode) {
    if (mode != EvalMode::Plain && g.dim != 4)
        throw DimensionMismatch("skew/sym evaluation is 4D only");

    CanonicalForm cf = canonical_form(g);
    std::string key = cache::eval_key(cf.encoding, g.dim, mode);
    if (auto hit = cache::get(key, g.dim)) return *hit * Rat(cf.sign);

    MicroGraph canon = parse_encoding(cf.encoding, g.dim, g.has_sink);
    Multivector value(g.dim);
    switch (mode) {
        case EvalMode::Plain:
            value = evaluate_raw(canon);
            break;
        case EvalMode::Skew:
            value = (evaluate(canon) - evaluate(swap_casimirs(canon))) * Rat(1, 2);
            break;
        case EvalMode::Sym:
            value = (evaluate(canon) + evaluate(swap_casimirs(canon))) * Rat(1, 2);
            break;
    }
    cache::put(key, canon, mode, value);
    return value * Rat(cf.sign);
}

Multivector evaluate_combination(const std::vector<Rat>& coeffs,
                                 const std::vector<MicroGraph>& graphs, EvalMode mode) {
    if (coeffs.size() != graphs.size())
        throw std::invalid_argument("coefficient/graph list length mismatch");
    int d = graphs.empty() ? 2 : graphs.front().dim;
    Multivector sum(d);
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        sum += evaluate_mode(graphs[i], mode) * coeffs[i];
    }
    return sum;
}

}  // namespace ngc
