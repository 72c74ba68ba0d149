#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loxo/int_matrix.hpp"

namespace loxo {

struct Signature {
    int positives = 0;
    int negatives = 0;
    bool operator==(const Signature&) const = default;
};

/// Sylvester signature by exact rational congruence diagonalization. Zero
/// diagonal pivots are repaired with a row+column addition before splitting.
/// Throws DegenerateFormError when the form is singular.
Signature signature_of(const IntMatrix& gram);

/// Integral lattice: a nondegenerate symmetric Gram matrix with its
/// signature computed eagerly at construction.
class Lattice {
public:
    explicit Lattice(IntMatrix gram, std::string label = "");

    const IntMatrix& gram() const { return gram_; }
    int rank() const { return gram_.rows(); }
    const std::string& label() const { return label_; }
    const Signature& signature() const { return sig_; }
    bool is_hyperbolic() const { return sig_.positives == 1 && sig_.negatives == rank() - 1; }

    mpz_class evaluate(const std::vector<mpz_class>& v) const;
    mpz_class pair(const std::vector<mpz_class>& v, const std::vector<mpz_class>& w) const;

private:
    IntMatrix gram_;
    std::string label_;
    Signature sig_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b, std::string label = "");

/// Standard lattices by name: "U", "E8minus", "K3", "K3n" (needs n >= 2),
/// "Kummer" (needs n >= 2). The full-cohomology entries are checked against
/// signature (3, rank-3) at construction.
Lattice catalog(const std::string& name, std::optional<long> n = std::nullopt);

/// Names accepted by catalog(), with a note on the parameter requirement.
std::vector<std::pair<std::string, std::string>> catalog_entries();

}  // namespace loxo
