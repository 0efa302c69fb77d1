#pragma once

#include "hopfcalc/hopf.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcalc {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Malformed HADF input. what() is "line:col: message".
class HadfError : public std::runtime_error {
public:
    HadfError(SourcePos pos, const std::string& message);

    const SourcePos& pos() const noexcept { return pos_; }
    const std::string& message() const noexcept { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

struct ComultEntry {
    std::size_t left = 0;
    std::size_t right = 0;
    mpq_class coeff;

    friend bool operator==(const ComultEntry&, const ComultEntry&) = default;
};

struct NamedVectors {
    std::string name;
    std::vector<std::vector<mpq_class>> vectors;

    friend bool operator==(const NamedVectors&, const NamedVectors&) = default;
};

/// Parsed HADF file. Coefficients are kept as exact rationals so the same
/// document can be built over any field; positions do not take part in equality.
struct DefinitionDocument {
    bool prime_field = false;
    std::uint64_t prime = 0;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<mpq_class> unit;
    /// (i, j) -> coefficients of e_i e_j
    std::map<std::pair<std::size_t, std::size_t>, std::vector<mpq_class>> mult;
    std::map<std::size_t, std::vector<ComultEntry>> comult;
    std::vector<mpq_class> counit;
    std::map<std::size_t, std::vector<mpq_class>> antipode;
    std::vector<NamedVectors> ideals;
    /// Each character holds exactly one vector.
    std::vector<NamedVectors> characters;

    /// Clause key ("mult 0 1", "ideal full", ...) -> position of its keyword.
    std::map<std::string, SourcePos> positions;

    Field field() const;
    const NamedVectors* find_ideal(std::string_view name) const;
    const NamedVectors* find_character(std::string_view name) const;

    friend bool operator==(const DefinitionDocument& a, const DefinitionDocument& b);
};

/// Throws HadfError.
DefinitionDocument parse_hadf(std::string_view text);
/// Canonical text; parse_hadf(serialize_hadf(d)) == d.
std::string serialize_hadf(const DefinitionDocument& doc);

/// Structure tensors over doc.field() or the override. Throws HadfError when a
/// coefficient has no image in the field (denominator divisible by p).
HopfAlgebra build_algebra(const DefinitionDocument& doc, const std::optional<Field>& field_override = std::nullopt);
std::vector<AlgebraElement> build_vectors(const DefinitionDocument& doc, const NamedVectors& named, const Field& field);

/// Document for an algebra with integer or rational coefficients.
DefinitionDocument document_from_algebra(const HopfAlgebra& h);

}  // namespace hopfcalc
