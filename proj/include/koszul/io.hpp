#ifndef KOSZUL_IO_HPP
#define KOSZUL_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/field.hpp"
#include "koszul/graded.hpp"
#include "koszul/tensor.hpp"
#include "koszul/twisting.hpp"

namespace koszul {

// Field-agnostic parsed form of a presentation file; coefficients stay as
// strings until a field is chosen (the CLI --field flag may override the
// file's field, so parsing and materialization are separate steps).

struct RelationTerm {
    std::string coeff;
    int g1 = 0, g2 = 0; // generator indices; words have length exactly 2
};

struct SigmaImageTerm {
    std::string coeff;
    int a_out = 0, b_out = 0;
};

struct SigmaEntry {
    int b_in = 0, a_in = 0;
    std::vector<SigmaImageTerm> terms;
};

struct FamilyEntry {
    bool is_scale = true;
    std::string scale_q; // endomorphism a |-> q^{deg a} a
    // per-degree row-major matrices of coefficient strings (when !is_scale)
    std::vector<std::vector<std::vector<std::string>>> mats;
};

struct FamilyInput {
    std::vector<std::vector<FamilyEntry>> sigma;
    std::optional<std::vector<std::vector<FamilyEntry>>> lambda;
};

struct TwistInput {
    std::vector<std::string> generators; // presentation of B
    std::vector<std::vector<RelationTerm>> relations;
    std::optional<std::vector<SigmaEntry>> sigma; // overrides of the flip
    std::optional<FamilyInput> family;
};

struct InputFile {
    int schema_version = 1;
    FieldSpec field;
    std::vector<std::string> generators;
    std::vector<std::vector<RelationTerm>> relations;
    std::optional<TwistInput> twist;
};

// Parses and schema-checks a presentation file. Parse errors carry
// line:column positions; schema violations carry JSON paths.
InputFile parse_input(const std::string& bytes);

// --- materialization over a concrete field ----------------------------------

template <class F>
QuadraticPresentation<F> materialize_presentation(const std::vector<std::string>& generators,
                                                  const std::vector<std::vector<RelationTerm>>& rels,
                                                  F f) {
    QuadraticPresentation<F> p;
    p.field = f;
    p.generator_names = generators;
    std::size_t n = generators.size();
    Mat<F> span(f, n * n, rels.size());
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const RelationTerm& t : rels[r]) {
            std::size_t idx = std::size_t(t.g1) * n + std::size_t(t.g2);
            span.at(idx, r) = f.add(span.at(idx, r), f.parse(t.coeff));
        }
    p.relations = Subspace<F>::from_span(span);
    return p;
}

// Generator-level sigma^{1,1}: B^1 (x) A^1 -> A^1 (x) B^1. Unlisted entries
// default to the flip.
template <class F>
Mat<F> materialize_s11(const TwistInput& t, std::size_t na, std::size_t nb, F f) {
    Mat<F> s = flip_matrix(f, nb, na);
    if (t.sigma) {
        for (const SigmaEntry& e : *t.sigma) {
            std::size_t col = std::size_t(e.b_in) * na + std::size_t(e.a_in);
            for (std::size_t r = 0; r < s.rows(); ++r) s.at(r, col) = f.zero();
            for (const SigmaImageTerm& term : e.terms) {
                std::size_t row = std::size_t(term.a_out) * nb + std::size_t(term.b_out);
                s.at(row, col) = f.add(s.at(row, col), f.parse(term.coeff));
            }
        }
    }
    return s;
}

template <class F>
TwistingMatrixFamily<F> materialize_family(const std::vector<std::vector<FamilyEntry>>& entries,
                                           typename TwistingMatrixFamily<F>::Role role,
                                           const std::vector<std::size_t>& target_dims, F f,
                                           int N) {
    TwistingMatrixFamily<F> fam;
    fam.role = role;
    fam.n = int(entries.size());
    fam.max_degree = N;
    fam.entries.resize(fam.n);
    for (int i = 0; i < fam.n; ++i) {
        if (int(entries[i].size()) != fam.n)
            throw InputError("matrix family: entries must form a square array");
        fam.entries[i].resize(fam.n);
        for (int j = 0; j < fam.n; ++j) {
            const FamilyEntry& e = entries[i][j];
            for (int d = 0; d <= N; ++d) {
                std::size_t td = target_dims[d];
                Mat<F> m(f, td, td);
                if (e.is_scale) {
                    typename F::Elem q = f.parse(e.scale_q);
                    typename F::Elem qd = f.one();
                    for (int k = 0; k < d; ++k) qd = f.mul(qd, q);
                    for (std::size_t r = 0; r < td; ++r) m.at(r, r) = qd;
                } else {
                    if (d >= int(e.mats.size()))
                        throw InputError("matrix family: per-degree matrices missing degree " +
                                         std::to_string(d));
                    const auto& rows = e.mats[d];
                    if (rows.size() != td)
                        throw InputError("matrix family: degree-" + std::to_string(d) +
                                         " matrix must be " + std::to_string(td) + "x" +
                                         std::to_string(td));
                    for (std::size_t r = 0; r < td; ++r) {
                        if (rows[r].size() != td)
                            throw InputError("matrix family: ragged degree-" +
                                             std::to_string(d) + " matrix");
                        for (std::size_t c = 0; c < td; ++c) m.at(r, c) = f.parse(rows[r][c]);
                    }
                }
                fam.entries[i][j].push_back(std::move(m));
            }
        }
    }
    return fam;
}

} // namespace koszul

#endif
