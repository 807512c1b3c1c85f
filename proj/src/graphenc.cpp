#include "ngc/graphenc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ngc {

int MicroGraph::in_degree(int id) const {
    int deg = 0;
    for (const auto& ts : targets)
        for (int t : ts)
            if (t == id) ++deg;
    return deg;
}

int MicroGraph::max_in_degree() const {
    int m = 0;
    for (int id = 0; id <= max_vertex_id(); ++id) m = std::max(m, in_degree(id));
    return m;
}

MicroGraph parse_encoding(const std::string& text, int dim, bool has_sink) {
    std::string s = text;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("encoding must be bracketed: " + text);
    s = s.substr(1, s.size() - 2);

    MicroGraph g;
    g.dim = dim;
    g.has_sink = has_sink;
    std::stringstream groups(s);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> ts;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size() || v < 0) throw ParseError("bad target: " + item);
                ts.push_back(v);
            } catch (const std::logic_error&) {
                throw ParseError("bad target '" + item + "' in " + text);
            }
        }
        if (static_cast<int>(ts.size()) != dim)
            throw ParseError("vertex group '" + group + "' has " + std::to_string(ts.size()) +
                             " targets, expected " + std::to_string(dim));
        g.targets.push_back(ts);
    }
    g.n_lc = static_cast<int>(g.targets.size());
    if (g.n_lc == 0) throw ParseError("empty encoding: " + text);

    for (int j = 1; j <= g.n_lc; ++j) {
        for (int t : g.targets[j - 1]) {
            if (t == 0 && !has_sink) throw StructureError("edge into absent sink in " + text);
            if (t > g.max_vertex_id()) throw StructureError("target out of range in " + text);
        }
        // Every Levi-Civita vertex carries an edge to each of its own
        // Casimir vertices (in whatever position the encoding puts it).
        for (int k = 1; k <= g.n_species(); ++k) {
            int own = g.casimir_id(j, k);
            if (std::find(g.targets[j - 1].begin(), g.targets[j - 1].end(), own) ==
                g.targets[j - 1].end())
                throw StructureError("vertex " + std::to_string(j) +
                                     " misses its own Casimir in " + text);
        }
    }
    return g;
}

std::string serialize_encoding(const MicroGraph& g) {
    std::string s = "[";
    for (int j = 0; j < g.n_lc; ++j) {
        if (j) s += ";";
        for (int p = 0; p < g.dim; ++p) {
            if (p) s += ",";
            s += std::to_string(g.targets[j][p]);
        }
    }
    return s + "]";
}

namespace {

// Sort a target row ascending, returning the parity of the sort (+1/-1).
int sort_row(std::vector<int>& ts) {
    int parity = 1;
    for (size_t a = 0; a < ts.size(); ++a)
        for (size_t b = a + 1; b < ts.size(); ++b)
            if (ts[a] > ts[b]) parity = -parity;
    std::sort(ts.begin(), ts.end());
    return parity;
}

}  // namespace

CanonicalForm canonical_form(const MicroGraph& g) {
    // The evaluation is invariant under relabeling the Levi-Civita vertices
    // and, independently, the Casimir vertices of each species (their
    // contents are identical), and changes by the parity when the outgoing
    // edges of a vertex are reordered. Minimize the target table over the
    // relabelings, sorting each row (the cheapest edge order).
    int ns = g.n_species();
    std::vector<std::vector<int>> perms(static_cast<size_t>(1 + ns));
    for (auto& p : perms) {
        p.resize(static_cast<size_t>(g.n_lc));
        std::iota(p.begin(), p.end(), 1);
    }

    std::vector<std::vector<int>> best;
    int best_sign = 1;
    while (true) {
        std::vector<std::vector<int>> cand(g.n_lc);
        int sign = 1;
        for (int j = 1; j <= g.n_lc; ++j) {
            std::vector<int> ts = g.targets[j - 1];
            for (int& t : ts) {
                if (t == 0) continue;
                if (g.is_lc(t)) {
                    t = perms[0][static_cast<size_t>(t - 1)];
                } else {
                    auto [owner, species] = g.casimir_owner(t);
                    t = g.casimir_id(
                        perms[static_cast<size_t>(species)][static_cast<size_t>(owner - 1)],
                        species);
                }
            }
            sign *= sort_row(ts);
            cand[perms[0][static_cast<size_t>(j - 1)] - 1] = std::move(ts);
        }
        // Keep only labelings that remain valid encodings (every LC vertex
        // still pointing at its own Casimirs); the identity labeling is one.
        bool valid = true;
        for (int j = 1; j <= g.n_lc && valid; ++j)
            for (int k = 1; k <= ns && valid; ++k)
                if (!std::count(cand[j - 1].begin(), cand[j - 1].end(), g.casimir_id(j, k)))
                    valid = false;
        if (valid && (best.empty() || cand < best)) {
            best = std::move(cand);
            best_sign = sign;
        }
        size_t k = 0;
        while (k < perms.size() && !std::next_permutation(perms[k].begin(), perms[k].end()))
            ++k;
        if (k == perms.size()) break;
    }

    MicroGraph c = g;
    c.targets = best;
    return {serialize_encoding(c), best_sign};
}

std::vector<MicroGraph> dedup_isomorphic(const std::vector<MicroGraph>& gs) {
    std::set<std::string> seen;
    std::vector<MicroGraph> out;
    for (const auto& g : gs) {
        CanonicalForm cf = canonical_form(g);
        if (seen.insert(cf.encoding).second)
            out.push_back(parse_encoding(cf.encoding, g.dim, g.has_sink));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MicroGraph> generate_2d_vector_graphs(int n_lc) {
    std::vector<MicroGraph> raw;
    std::vector<std::pair<int, int>> options;
    for (int a = 0; a <= n_lc; ++a)
        for (int b = 0; b <= n_lc; ++b)
            if (a != b) options.emplace_back(a, b);

    std::vector<size_t> choice(n_lc, 0);
    while (true) {
        MicroGraph g;
        g.dim = 2;
        g.has_sink = true;
        g.n_lc = n_lc;
        int sink_edges = 0;
        for (int j = 0; j < n_lc; ++j) {
            auto [a, b] = options[choice[j]];
            g.targets.push_back({a, b});
            sink_edges += (a == 0) + (b == 0);
        }
        // Connectivity (ignoring edge direction): a detached component
        // would make the graph a product, not a Kontsevich vector field.
        auto connected = [&]() {
            std::vector<int> seen(static_cast<size_t>(n_lc) + 1, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int j = 0; j < n_lc; ++j) {
                    for (int t : g.targets[static_cast<size_t>(j)]) {
                        if (t == v && !seen[static_cast<size_t>(j + 1)]) {
                            seen[static_cast<size_t>(j + 1)] = 1;
                            stack.push_back(j + 1);
                        }
                        if (j + 1 == v && !seen[static_cast<size_t>(t)]) {
                            seen[static_cast<size_t>(t)] = 1;
                            stack.push_back(t);
                        }
                    }
                }
            }
            for (int s : seen)
                if (!s) return false;
            return true;
        };
        if (sink_edges == 1 && connected()) raw.push_back(g);

        int j = n_lc - 1;
        while (j >= 0 && ++choice[j] == options.size()) choice[j--] = 0;
        if (j < 0) break;
    }
    return dedup_isomorphic(raw);
}

std::vector<MicroGraph> generate_hamiltonian_micrographs(int dim) {
    MicroGraph proto;
    proto.dim = dim;
    proto.has_sink = false;
    proto.n_lc = 2;
    std::vector<MicroGraph> raw;
    int max_id = proto.max_vertex_id();

    for (int a1 = 1; a1 <= max_id; ++a1)
        for (int b1 = 1; b1 <= max_id; ++b1)
            for (int a2 = 1; a2 <= max_id; ++a2)
                for (int b2 = 1; b2 <= max_id; ++b2) {
                    MicroGraph g = proto;
                    g.targets = {{a1, b1}, {a2, b2}};
                    for (int j = 1; j <= 2; ++j)
                        for (int k = 1; k <= g.n_species(); ++k)
                            g.targets[j - 1].push_back(g.casimir_id(j, k));
                    bool ok = true;
                    for (const auto& ts : g.targets) {
                        std::set<int> uniq(ts.begin(), ts.end());
                        if (uniq.size() != ts.size()) ok = false;  // double edge
                    }
                    if (ok) raw.push_back(g);
                }
    return dedup_isomorphic(raw);
}

std::vector<MicroGraph> descendants(const MicroGraph& g, int dim) {
    if (g.dim != 2) throw DimensionMismatch("descendants requires a 2D source graph");
    if (dim == 2) return {g};

    MicroGraph proto;
    proto.dim = dim;
    proto.has_sink = g.has_sink;
    proto.n_lc = g.n_lc;

    // Per free edge, the list of admissible targets: the whole structure
    // of the original LC target, or just the sink.
    std::vector<std::vector<int>> edge_options;
    for (int j = 1; j <= g.n_lc; ++j)
        for (int p = 0; p < 2; ++p) {
            int t = g.targets[j - 1][p];
            if (t == 0) {
                edge_options.push_back({0});
            } else {
                std::vector<int> opts = {proto.lc_id(t)};
                for (int k = 1; k <= proto.n_species(); ++k)
                    opts.push_back(proto.casimir_id(t, k));
                edge_options.push_back(opts);
            }
        }

    std::vector<MicroGraph> raw;
    std::vector<size_t> choice(edge_options.size(), 0);
    while (true) {
        MicroGraph h = proto;
        h.targets.assign(g.n_lc, {});
        bool ok = true;
        for (int j = 1; j <= g.n_lc && ok; ++j) {
            auto& ts = h.targets[j - 1];
            ts = {edge_options[2 * (j - 1)][choice[2 * (j - 1)]],
                  edge_options[2 * (j - 1) + 1][choice[2 * (j - 1) + 1]]};
            for (int k = 1; k <= h.n_species(); ++k) ts.push_back(h.casimir_id(j, k));
            std::set<int> uniq(ts.begin(), ts.end());
            if (uniq.size() != ts.size()) ok = false;  // double edge
        }
        if (ok) raw.push_back(h);

        int e = static_cast<int>(choice.size()) - 1;
        while (e >= 0 && ++choice[e] == edge_options[e].size()) choice[e--] = 0;
        if (e < 0) break;
    }
    return dedup_isomorphic(raw);
}

MicroGraph embed(const MicroGraph& g) {
    if (g.dim + 1 > 4) throw DimensionMismatch("embedding beyond dimension 4");
    MicroGraph h = g;
    h.dim = g.dim + 1;
    int new_species = h.n_species();
    for (int j = 1; j <= h.n_lc; ++j) h.targets[j - 1].push_back(h.casimir_id(j, new_species));
    return h;
}

MicroGraph swap_casimirs(const MicroGraph& g) {
    if (g.dim != 4) throw DimensionMismatch("Casimir swap is a 4D operation");
    MicroGraph h = g;
    for (auto& ts : h.targets)
        for (int& t : ts) {
            if (!g.is_casimir(t)) continue;
            auto [owner, species] = g.casimir_owner(t);
            t = g.casimir_id(owner, species == 1 ? 2 : 1);
        }
    return h;
}

}  // namespace ngc
