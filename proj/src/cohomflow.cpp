#include "ngc/cohomflow.hpp"

#include <chrono>
#include <sstream>

#include "ngc/errors.hpp"
#include "ngc/fixtures.hpp"
#include "ngc/json_io.hpp"
#include "ngc/tetraflow.hpp"

namespace ngc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Ring sized for one Schouten bracket on top of any family evaluation.
JetRing bracket_ring(int dim) { return JetRing{dim, 16}; }

void check_deadline(const std::optional<Clock::time_point>& deadline, const char* where) {
    if (deadline && Clock::now() > *deadline)
        throw BudgetExceeded(std::string("time budget exceeded during ") + where);
}

std::vector<Multivector> family_images(const std::vector<MicroGraph>& family, EvalMode mode,
                                       const std::optional<Clock::time_point>& deadline = {}) {
    std::vector<Multivector> phis;
    phis.reserve(family.size());
    for (const auto& g : family) {
        check_deadline(deadline, "family evaluation");
        phis.push_back(evaluate_mode(g, mode));
    }
    return phis;
}

std::vector<Multivector> bracket_images(const Multivector& P, const std::vector<Multivector>& phis,
                                        const JetRing& ring,
                                        const std::optional<Clock::time_point>& deadline = {}) {
    std::vector<Multivector> brs;
    brs.reserve(phis.size());
    for (const auto& p : phis) {
        check_deadline(deadline, "bracket evaluation");
        brs.push_back(schouten_bracket(P, p, ring));
    }
    return brs;
}

/// Solve sum_i x_i targets[i] = rhs in multivector space.
std::optional<Column> solve_linear(const std::vector<Multivector>& targets,
                                   const Multivector& rhs) {
    std::vector<Multivector> all = targets;
    all.push_back(rhs);
    MonomialIndex idx = build_index(all);
    std::vector<Column> cols;
    cols.reserve(targets.size());
    for (const auto& t : targets) cols.push_back(vectorize(t, idx));
    SparseRationalMatrix M = SparseRationalMatrix::from_columns(cols);
    if (M.rows() == 0) M = SparseRationalMatrix(idx.rows(), static_cast<int>(targets.size()));
    return solve_particular(M, vectorize(rhs, idx));
}

json columns_to_json(const std::vector<Column>& cols) {
    json arr = json::array();
    for (const auto& c : cols) {
        json v = json::array();
        for (const auto& r : c) v.push_back(rat_to_string(r));
        arr.push_back(v);
    }
    return arr;
}

json result_to_json(const PipelineResult& r) {
    json j;
    j["dim"] = r.dim;
    j["family"] = r.family;
    j["mode"] = r.mode == EvalMode::Plain ? "plain" : (r.mode == EvalMode::Skew ? "skew" : "sym");
    j["has_solution"] = r.has_solution;
    if (r.has_solution) {
        json v = json::array();
        for (const auto& c : r.solution) v.push_back(rat_to_string(c));
        j["solution"] = v;
    }
    j["kernel"] = columns_to_json(r.kernel);
    json hams = json::array();
    for (const auto& h : r.ham_coeffs) {
        if (!h) {
            hams.push_back(nullptr);
        } else {
            json v = json::array();
            for (const auto& c : *h) v.push_back(rat_to_string(c));
            hams.push_back(v);
        }
    }
    j["hamiltonian_coefficients"] = hams;
    j["seconds"] = r.seconds;
    return j;
}

}  // namespace

std::string PipelineResult::to_json_string() const { return result_to_json(*this).dump(2); }

PipelineResult solve_trivialization(int dim, const std::vector<MicroGraph>& family,
                                    EvalMode mode) {
    auto t0 = Clock::now();
    PipelineResult r;
    r.dim = dim;
    r.mode = mode;
    r.family = "family of " + std::to_string(family.size()) + " graphs";
    JetRing ring = bracket_ring(dim);
    Multivector P = nambu_structure(dim);
    auto phis = family_images(family, mode);
    auto brs = bracket_images(P, phis, ring);
    Multivector Q = tetrahedral_flow(dim);
    if (auto x = solve_linear(brs, Q)) {
        r.has_solution = true;
        r.solution = *x;
    }
    r.seconds = seconds_since(t0);
    return r;
}

PipelineResult homogeneous_kernel(int dim, const std::vector<MicroGraph>& family,
                                  EvalMode mode) {
    auto t0 = Clock::now();
    PipelineResult r;
    r.dim = dim;
    r.mode = mode;
    r.family = "family of " + std::to_string(family.size()) + " graphs";
    JetRing ring = bracket_ring(dim);
    Multivector P = nambu_structure(dim);
    auto phis = family_images(family, mode);
    auto brs = bracket_images(P, phis, ring);

    MonomialIndex bidx = build_index(brs);
    std::vector<Column> bcols;
    for (const auto& b : brs) bcols.push_back(vectorize(b, bidx));
    SparseRationalMatrix B = SparseRationalMatrix::from_columns(bcols);
    if (B.rows() == 0) B = SparseRationalMatrix(bidx.rows(), static_cast<int>(brs.size()));

    MonomialIndex eidx = build_index(phis);
    std::vector<Column> ecols;
    for (const auto& p : phis) ecols.push_back(vectorize(p, eidx));
    SparseRationalMatrix E = SparseRationalMatrix::from_columns(ecols);
    if (E.rows() == 0) E = SparseRationalMatrix(eidx.rows(), static_cast<int>(phis.size()));

    r.kernel = quotient_basis(kernel_basis(B), kernel_basis(E));
    r.seconds = seconds_since(t0);
    return r;
}

PipelineResult express_in_hamiltonians(int dim, const PipelineResult& kernel,
                                       const std::vector<MicroGraph>& family,
                                       const std::vector<MicroGraph>& hams,
                                       EvalMode ham_mode) {
    auto t0 = Clock::now();
    PipelineResult r = kernel;
    r.ham_coeffs.clear();
    JetRing ring = bracket_ring(dim);
    Multivector P = nambu_structure(dim);
    auto ham_images = family_images(hams, ham_mode);
    auto dph = bracket_images(P, ham_images, ring);
    for (const auto& coeffs : kernel.kernel) {
        Multivector Y = evaluate_combination(coeffs, family, kernel.mode);
        r.ham_coeffs.push_back(solve_linear(dph, Y));
    }
    r.seconds = seconds_since(t0);
    return r;
}

std::vector<SynonymClass> detect_synonyms(const std::vector<MicroGraph>& family,
                                          EvalMode mode) {
    auto phis = family_images(family, mode);
    MonomialIndex idx = build_index(phis);
    std::vector<SynonymClass> classes;
    SynonymClass zeros;
    for (size_t i = 0; i < phis.size(); ++i) {
        if (phis[i].is_zero()) {
            zeros.members.push_back(static_cast<int>(i));
            zeros.scales.push_back(Rat(0));
            continue;
        }
        bool placed = false;
        for (auto& cls : classes) {
            const Multivector& rep = phis[static_cast<size_t>(cls.members.front())];
            const auto& [w, poly] = *rep.components().begin();
            const auto& [mono, coeff] = *poly.terms().begin();
            DiffPolynomial comp = phis[i].component(w);
            auto it = comp.terms().find(mono);
            if (it == comp.terms().end()) continue;
            Rat c = it->second / coeff;
            if (phis[i] == c * rep) {
                cls.members.push_back(static_cast<int>(i));
                cls.scales.push_back(c);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({{static_cast<int>(i)}, {Rat(1)}});
    }
    if (!zeros.members.empty()) classes.push_back(std::move(zeros));
    return classes;
}

std::vector<std::pair<int, int>> trivializing_pairs_2d() {
    const auto& encs = fixtures::vector_graphs_2d();
    std::vector<MicroGraph> family;
    for (const auto& e : encs) family.push_back(parse_encoding(e, 2, true));
    JetRing ring = bracket_ring(2);
    Multivector P = nambu_structure(2);
    auto phis = family_images(family, EvalMode::Plain);
    auto brs = bracket_images(P, phis, ring);
    Multivector Q = tetrahedral_flow(2);
    std::vector<std::pair<int, int>> pairs;
    for (int i : fixtures::pair_rows_2d())
        for (int j : fixtures::pair_columns_2d())
            if (solve_linear({brs[static_cast<size_t>(i - 1)], brs[static_cast<size_t>(j - 1)]},
                             Q))
                pairs.emplace_back(i, j);
    return pairs;
}

std::string PairTable::to_csv() const {
    std::ostringstream os;
    os << "pair";
    for (int j : col_graphs) os << ",Gamma_" << j;
    os << "\n";
    for (size_t r = 0; r < row_graphs.size(); ++r) {
        os << "Gamma_" << row_graphs[r];
        for (const auto& cell : cells[r]) os << "," << cell;
        os << "\n";
    }
    return os.str();
}

std::string PairTable::to_json_string() const {
    json j;
    j["dim"] = dim;
    j["rows"] = row_graphs;
    j["columns"] = col_graphs;
    j["cells"] = cells;
    return j.dump(2);
}

PairTable pair_search_table(int dim, double cell_budget_seconds) {
    if (cell_budget_seconds < 0) cell_budget_seconds = dim == 3 ? 3600.0 : 86400.0;
    EvalMode mode = dim == 4 ? EvalMode::Skew : EvalMode::Plain;
    PairTable table;
    table.dim = dim;
    table.row_graphs = fixtures::pair_rows_2d();
    table.col_graphs = fixtures::pair_columns_2d();
    const auto& encs = fixtures::vector_graphs_2d();
    JetRing ring = bracket_ring(dim);
    Multivector P = nambu_structure(dim);
    Multivector Q = tetrahedral_flow(dim);
    for (int i : table.row_graphs) {
        std::vector<std::string> row;
        for (int j : table.col_graphs) {
            auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                               std::chrono::duration<double>(cell_budget_seconds));
            try {
                MicroGraph gi = parse_encoding(encs[static_cast<size_t>(i - 1)], 2, true);
                MicroGraph gj = parse_encoding(encs[static_cast<size_t>(j - 1)], 2, true);
                auto fam = descendants(gi, dim);
                auto dj = descendants(gj, dim);
                fam.insert(fam.end(), dj.begin(), dj.end());
                fam = dedup_isomorphic(fam);
                auto phis = family_images(fam, mode, deadline);
                auto brs = bracket_images(P, phis, ring, deadline);
                check_deadline(deadline, "pair solve");
                row.push_back(solve_linear(brs, Q) ? "yes" : "no");
            } catch (const BudgetExceeded&) {
                row.push_back("timeout");
            }
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

}  // namespace ngc
