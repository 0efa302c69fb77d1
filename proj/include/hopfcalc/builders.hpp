#pragma once

#include "hopfcalc/hopf.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hopfcalc {

/// Cayley table: table[a][b] is the index of a*b.
using GroupTable = std::vector<std::vector<std::size_t>>;

/// Throws std::invalid_argument unless the table is a finite group (closed,
/// associative, with identity and inverses).
void validate_group_table(const GroupTable& table);
std::size_t group_identity(const GroupTable& table);
std::size_t group_inverse(const GroupTable& table, std::size_t g);

GroupTable cyclic_group(std::size_t order);
/// Pairs (a, b) indexed a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
/// S3 as permutations of {0,1,2}, identity first.
GroupTable symmetric_group_s3();

/// Group algebra kG: Delta g = g (x) g, eps(g) = 1, S(g) = g^-1.
HopfAlgebra group_algebra(const Field& field, const GroupTable& table, std::vector<std::string> names = {});
/// Function algebra k^G on the indicator basis delta_g.
HopfAlgebra function_algebra(const Field& field, const GroupTable& table, std::vector<std::string> names = {});
/// Sweedler's four-dimensional algebra on the basis 1, g, x, gx.
HopfAlgebra sweedler_h4(const Field& field);

/// A named bundled example.
struct BundledAlgebra {
    std::string id;
    HopfAlgebra algebra;
};

/// kC2, kC3, k[C2xC2], k^C2, k^C3, k^S3 and H4 over the given field.
std::vector<BundledAlgebra> bundled_algebras(const Field& field);

}  // namespace hopfcalc
