#include "loxo/lattice.hpp"

#include <utility>

#include "loxo/errors.hpp"

namespace loxo {

Signature signature_of(const IntMatrix& gram) {
    if (!gram.is_square()) throw DimensionError("gram matrix must be square");
    if (!gram.is_symmetric()) throw PreconditionError("gram matrix must be symmetric");
    const int n = gram.rows();

    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = mpq_class(gram.at(i, j));

    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int di = -1;
            for (int i = k + 1; i < n && di < 0; ++i)
                if (a[i][i] != 0) di = i;
            if (di >= 0) {
                std::swap(a[k], a[di]);
                for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][di]);
            } else {
                // all remaining diagonal entries vanish; locate any nonzero
                // entry and fold it onto the diagonal (2x2 hyperbolic step)
                int pi = -1, pj = -1;
                for (int i = k; i < n && pi < 0; ++i)
                    for (int j = k; j < n; ++j)
                        if (a[i][j] != 0) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) throw DegenerateFormError("gram matrix is degenerate");
                if (pi != k) {
                    std::swap(a[k], a[pi]);
                    for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][pi]);
                }
                // now a[k][pj] != 0 for some pj > k while a[k][k] = 0:
                // adding row/column pj to row/column k makes the pivot
                // 2 a[k][pj] != 0
                for (int c = 0; c < n; ++c) a[k][c] += a[pj][c];
                for (int r = 0; r < n; ++r) a[r][k] += a[r][pj];
            }
        }
        const mpq_class pivot = a[k][k];
        if (pivot > 0)
            ++sig.positives;
        else
            ++sig.negatives;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const mpq_class f = a[i][k] / pivot;
            for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (int i = k + 1; i < n; ++i) {
            a[i][k] = 0;
            a[k][i] = 0;
        }
    }
    return sig;
}

Lattice::Lattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)), sig_(signature_of(gram_)) {}

mpz_class Lattice::evaluate(const std::vector<mpz_class>& v) const { return pair(v, v); }

mpz_class Lattice::pair(const std::vector<mpz_class>& v, const std::vector<mpz_class>& w) const {
    const int n = rank();
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw DimensionError("vector length does not match lattice rank");
    mpz_class acc = 0;
    for (int i = 0; i < n; ++i) {
        if (v[static_cast<std::size_t>(i)] == 0) continue;
        mpz_class row = 0;
        for (int j = 0; j < n; ++j) row += gram_.at(i, j) * w[static_cast<std::size_t>(j)];
        acc += v[static_cast<std::size_t>(i)] * row;
    }
    return acc;
}

Lattice direct_sum(const Lattice& a, const Lattice& b, std::string label) {
    const int ra = a.rank(), rb = b.rank();
    IntMatrix g(ra + rb, ra + rb);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ra; ++j) g.at(i, j) = a.gram().at(i, j);
    for (int i = 0; i < rb; ++i)
        for (int j = 0; j < rb; ++j) g.at(ra + i, ra + j) = b.gram().at(i, j);
    return Lattice(std::move(g), std::move(label));
}

namespace {

Lattice lattice_U() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

Lattice lattice_E8minus() {
    // negated E8 Cartan matrix; nodes 0..6 form a chain, node 7 hangs off
    // node 4 (the T(2,3,5) tree)
    IntMatrix g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
    auto bond = [&](int i, int j) {
        g.at(i, j) = 1;
        g.at(j, i) = 1;
    };
    for (int i = 0; i + 1 < 7; ++i) bond(i, i + 1);
    bond(4, 7);
    return Lattice(std::move(g), "E8(-1)");
}

Lattice rank_one(const mpz_class& value, std::string label) {
    IntMatrix g(1, 1);
    g.at(0, 0) = value;
    return Lattice(std::move(g), std::move(label));
}

Lattice lattice_K3() {
    Lattice u = lattice_U();
    Lattice e8 = lattice_E8minus();
    Lattice l = direct_sum(direct_sum(u, u), u);
    l = direct_sum(direct_sum(l, e8), e8, "K3");
    return l;
}

void check_full_cohomology_signature(const Lattice& l) {
    if (l.signature() != Signature{3, l.rank() - 3})
        throw PreconditionError("catalog lattice failed its signature check");
}

}  // namespace

Lattice catalog(const std::string& name, std::optional<long> n) {
    if (name == "U") return lattice_U();
    if (name == "E8minus") return lattice_E8minus();
    if (name == "K3") {
        Lattice l = lattice_K3();
        check_full_cohomology_signature(l);
        return l;
    }
    if (name == "K3n") {
        if (!n || *n < 2) throw PreconditionError("catalog K3n requires a parameter n >= 2");
        Lattice l = direct_sum(lattice_K3(), rank_one(-2 * (*n - 1), ""),
                               "K3n(" + std::to_string(*n) + ")");
        check_full_cohomology_signature(l);
        return l;
    }
    if (name == "Kummer") {
        if (!n || *n < 2) throw PreconditionError("catalog Kummer requires a parameter n >= 2");
        Lattice u = lattice_U();
        Lattice l = direct_sum(direct_sum(direct_sum(u, u), u), rank_one(-2 * (*n + 1), ""),
                               "Kummer(" + std::to_string(*n) + ")");
        check_full_cohomology_signature(l);
        return l;
    }
    throw PreconditionError("unknown catalog lattice: " + name);
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"U", "hyperbolic plane, rank 2"},
        {"E8minus", "E8 with negated form, rank 8"},
        {"K3", "U^3 + E8(-1)^2, rank 22"},
        {"K3n", "K3 + <-2(n-1)>, rank 23; requires --n >= 2"},
        {"Kummer", "U^3 + <-2(n+1)>, rank 7; requires --n >= 2"},
    };
}

}  // namespace loxo
