#pragma once

#include <json.hpp>

#include <string>

#include "loxo/algebraic_value.hpp"
#include "loxo/degrees.hpp"
#include "loxo/fibration.hpp"
#include "loxo/isometry.hpp"
#include "loxo/lattice.hpp"

namespace loxo {

using Json = nlohmann::ordered_json;

/// Thrown on structurally invalid input documents (missing keys, ragged
/// rows, unknown catalog names). Maps to CLI exit code 3.
class InputFormatError : public std::runtime_error {
public:
    explicit InputFormatError(const std::string& what) : std::runtime_error(what) {}
};

/// {"label": str?, "gram": [[int,...],...]}  or  {"catalog": name, "n": int?}
Lattice lattice_from_json(const Json& j);
Json lattice_to_json(const Lattice& l);

/// {"lattice": <lattice object or catalog ref>, "matrix": [[int,...],...]}.
/// Validates shape only; form preservation is checked by verify_isometry.
std::pair<Lattice, IntMatrix> isometry_input_from_json(const Json& j);

IntMatrix matrix_from_json(const Json& j, const std::string& what);
Json matrix_to_json(const IntMatrix& m);

/// Decimal digit count that makes a rendering land inside an enclosure of
/// the given width: digits(10^-e) = e + 4, clamped to [6, 64].
int decimal_digits_for(const mpq_class& precision);

/// {"decimal": str, "exact": {"a","b","d","den"} | rational str | null,
///  "enclosure": {"lo","hi"} | null}
Json value_to_json(const AlgebraicValue& v, const mpq_class& precision);

Json classification_to_json(const Classification& c, const mpq_class& precision);
Json degree_sequence_to_json(const DegreeSequence& s, const mpq_class& precision);
Json certificate_to_json(const Certificate& cert);
Json feasibility_to_json(const Feasibility& f, int base_dim, const mpq_class& precision);

}  // namespace loxo
