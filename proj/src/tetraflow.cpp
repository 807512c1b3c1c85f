#include "ngc/tetraflow.hpp"

#include <array>

#include "ngc/nambu.hpp"

namespace ngc {

namespace {

// One summand of the tensor product: a homogeneous superfunction per slot.
struct Slot {
    DiffPolynomial f;
    XiWord w = 0;
};

struct TensorTerm {
    Rat c;
    std::vector<Slot> slots;
};

// Apply sum_i (d/dxi_i at slot s) (d/dx^i at slot t) to every term.
std::vector<TensorTerm> apply_edge(const std::vector<TensorTerm>& terms, int s,
                                   int t, const JetRing& ring) {
    std::vector<TensorTerm> out;
    for (const auto& term : terms) {
        // Koszul sign: the odd operator d/dxi_i passes the slots before s.
        int pass = 0;
        for (int u = 0; u < s; ++u) pass += word_size(term.slots[static_cast<size_t>(u)].w);
        for (int i = 1; i <= ring.dim; ++i) {
            const Slot& src = term.slots[static_cast<size_t>(s)];
            XiWord bit = static_cast<XiWord>(1 << (i - 1));
            if (!(src.w & bit)) continue;
            int below = word_size(static_cast<XiWord>(src.w & (bit - 1)));
            DiffPolynomial df =
                total_derivative(term.slots[static_cast<size_t>(t)].f, i, ring);
            if (df.is_zero()) continue;
            TensorTerm next = term;
            next.slots[static_cast<size_t>(s)].w = static_cast<XiWord>(src.w & ~bit);
            next.slots[static_cast<size_t>(t)].f = std::move(df);
            if ((pass + below) % 2 != 0) next.c = -next.c;
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace

DirectedGraph tetrahedron_skeleton() {
    DirectedGraph g;
    g.n = 4;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) g.edges.emplace_back(i, j);
    return g;
}

std::vector<DirectedGraph> oriented_tetrahedra() {
    DirectedGraph base = tetrahedron_skeleton();
    std::vector<DirectedGraph> out;
    for (unsigned mask = 0; mask < (1u << base.edges.size()); ++mask) {
        DirectedGraph g;
        g.n = base.n;
        std::array<int, 5> out_degree{};
        for (size_t e = 0; e < base.edges.size(); ++e) {
            auto [a, b] = base.edges[e];
            if (mask & (1u << e)) std::swap(a, b);
            g.edges.emplace_back(a, b);
            ++out_degree[static_cast<size_t>(a)];
        }
        bool admissible = true;
        for (int v = 1; v <= g.n; ++v)
            if (out_degree[static_cast<size_t>(v)] > 2) admissible = false;
        if (admissible) out.push_back(std::move(g));
    }
    return out;
}

Multivector graph_operation(const DirectedGraph& g,
                            const std::vector<Multivector>& args,
                            const JetRing& ring) {
    if (static_cast<int>(args.size()) != g.n)
        throw DimensionMismatch("graph operation arity mismatch");

    // Expand the tensor product of the arguments into homogeneous terms.
    std::vector<TensorTerm> terms = {{Rat(1), {}}};
    for (const Multivector& arg : args) {
        std::vector<TensorTerm> expanded;
        for (const auto& term : terms)
            for (const auto& [w, f] : arg.components()) {
                TensorTerm next = term;
                next.slots.push_back({f, w});
                expanded.push_back(std::move(next));
            }
        terms = std::move(expanded);
    }

    for (auto [s, t] : g.edges) {
        terms = apply_edge(terms, s - 1, t - 1, ring);
        if (terms.empty()) break;
    }

    Multivector result(ring.dim);
    for (const auto& term : terms) {
        Rat c = term.c;
        DiffPolynomial f = DiffPolynomial::constant(1);
        XiWord w = 0;
        bool dead = false;
        for (const Slot& slot : term.slots) {
            int sign = wedge_sign(w, slot.w);
            if (sign == 0) {
                dead = true;
                break;
            }
            if (sign < 0) c = -c;
            w = static_cast<XiWord>(w | slot.w);
            f = f * slot.f;
        }
        if (!dead) result.add_component(w, f * c);
    }
    return result;
}

Multivector tetrahedral_flow(int dim) {
    JetRing ring{dim, 4};
    Multivector p = nambu_structure(dim);
    std::vector<Multivector> args(4, p);
    Multivector raw(dim);
    for (const DirectedGraph& g : oriented_tetrahedra())
        raw += graph_operation(g, args, ring);
    // Orientation-sum normalization, fixed once against the known 2D flow.
    return raw * Rat(1, 8);
}

}  // namespace ngc
