#include "hopfcalc/builders.hpp"

#include <array>
#include <stdexcept>

namespace hopfcalc {

void validate_group_table(const GroupTable& table)
{
    const std::size_t n = table.size();
    if (n == 0)
        throw std::invalid_argument("group table is empty");
    for (const auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("group table is not square");
        for (auto v : row)
            if (v >= n)
                throw std::invalid_argument("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group table is not associative at (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ", " + std::to_string(c) + ")");
    const std::size_t e = group_identity(table);
    for (std::size_t g = 0; g < n; ++g) {
        bool found = false;
        for (std::size_t h = 0; h < n && !found; ++h)
            found = table[g][h] == e && table[h][g] == e;
        if (!found)
            throw std::invalid_argument("element " + std::to_string(g) + " has no inverse");
    }
}

std::size_t group_identity(const GroupTable& table)
{
    const std::size_t n = table.size();
    for (std::size_t e = 0; e < n; ++e) {
        bool identity = true;
        for (std::size_t g = 0; g < n && identity; ++g)
            identity = table[e][g] == g && table[g][e] == g;
        if (identity)
            return e;
    }
    throw std::invalid_argument("group table has no identity");
}

std::size_t group_inverse(const GroupTable& table, std::size_t g)
{
    const std::size_t e = group_identity(table);
    for (std::size_t h = 0; h < table.size(); ++h) {
        if (table[g][h] == e)
            return h;
    }
    throw std::invalid_argument("element has no inverse");
}

GroupTable cyclic_group(std::size_t order)
{
    GroupTable t(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            t[a][b] = (a + b) % order;
    return t;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b)
{
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    GroupTable t(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
    return t;
}

GroupTable symmetric_group_s3()
{
    using Perm = std::array<std::size_t, 3>;
    const std::array<Perm, 6> perms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
    auto index_of = [&](const Perm& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p)
                return i;
        throw std::logic_error("not a permutation of three points");
    };
    GroupTable t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm composed{};
            for (std::size_t i = 0; i < 3; ++i)
                composed[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(composed);
        }
    return t;
}

namespace {

std::vector<std::string> default_names(std::vector<std::string> names, std::size_t n, const std::string& prefix)
{
    if (names.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(prefix + std::to_string(i));
    }
    if (names.size() != n)
        throw std::invalid_argument("basis name count differs from group order");
    return names;
}

HopfData empty_data(const Field& field, std::vector<std::string> names)
{
    const std::size_t n = names.size();
    HopfData d;
    d.field = field;
    d.basis_names = std::move(names);
    d.mult.assign(n * n * n, Scalar::zero(field));
    d.comult.assign(n * n * n, Scalar::zero(field));
    d.unit = zero_vector(field, n);
    d.counit = zero_vector(field, n);
    d.antipode = Matrix(field, n, n);
    return d;
}

}  // namespace

HopfAlgebra group_algebra(const Field& field, const GroupTable& table, std::vector<std::string> names)
{
    validate_group_table(table);
    const std::size_t n = table.size();
    HopfData d = empty_data(field, default_names(std::move(names), n, "g"));
    const Scalar one = Scalar::one(field);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            d.mult[(a * n + b) * n + table[a][b]] = one;
        d.comult[(a * n + a) * n + a] = one;
        d.counit[a] = one;
        d.antipode(group_inverse(table, a), a) = one;
    }
    d.unit[group_identity(table)] = one;
    return HopfAlgebra(std::move(d));
}

HopfAlgebra function_algebra(const Field& field, const GroupTable& table, std::vector<std::string> names)
{
    validate_group_table(table);
    const std::size_t n = table.size();
    HopfData d = empty_data(field, default_names(std::move(names), n, "d"));
    const Scalar one = Scalar::one(field);
    for (std::size_t a = 0; a < n; ++a) {
        d.mult[(a * n + a) * n + a] = one;
        d.unit[a] = one;
        for (std::size_t b = 0; b < n; ++b)
            d.comult[(table[a][b] * n + a) * n + b] = one;
        d.antipode(group_inverse(table, a), a) = one;
    }
    d.counit[group_identity(table)] = one;
    return HopfAlgebra(std::move(d));
}

HopfAlgebra sweedler_h4(const Field& field)
{
    // basis 0 = 1, 1 = g, 2 = x, 3 = gx; g^2 = 1, x^2 = 0, xg = -gx
    HopfData d = empty_data(field, {"1", "g", "x", "gx"});
    const std::size_t n = 4;
    const Scalar one = Scalar::one(field);
    const Scalar minus = -one;
    auto set_mult = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { d.mult[(i * n + j) * n + k] = c; };
    for (std::size_t b = 0; b < n; ++b) {
        set_mult(0, b, b, one);
        set_mult(b, 0, b, one);
    }
    set_mult(1, 1, 0, one);
    set_mult(1, 2, 3, one);
    set_mult(1, 3, 2, one);
    set_mult(2, 1, 3, minus);
    set_mult(3, 1, 2, minus);
    d.unit[0] = one;
    auto set_comult = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) { d.comult[(i * n + j) * n + k] = c; };
    set_comult(0, 0, 0, one);
    set_comult(1, 1, 1, one);
    set_comult(2, 2, 0, one);  // x (x) 1
    set_comult(2, 1, 2, one);  // g (x) x
    set_comult(3, 3, 1, one);  // gx (x) g
    set_comult(3, 0, 3, one);  // 1 (x) gx
    d.counit[0] = one;
    d.counit[1] = one;
    d.antipode(0, 0) = one;
    d.antipode(1, 1) = one;
    d.antipode(3, 2) = minus;  // S(x) = -gx
    d.antipode(2, 3) = one;    // S(gx) = x
    return HopfAlgebra(std::move(d));
}

std::vector<BundledAlgebra> bundled_algebras(const Field& field)
{
    std::vector<BundledAlgebra> out;
    out.push_back({"kC2", group_algebra(field, cyclic_group(2), {"1", "g"})});
    out.push_back({"kC3", group_algebra(field, cyclic_group(3), {"1", "g", "g2"})});
    out.push_back({"kC2xC2", group_algebra(field, direct_product(cyclic_group(2), cyclic_group(2)), {"1", "b", "a", "ab"})});
    out.push_back({"funC2", function_algebra(field, cyclic_group(2), {"d1", "dg"})});
    out.push_back({"funC3", function_algebra(field, cyclic_group(3), {"d1", "dg", "dg2"})});
    out.push_back({"funS3", function_algebra(field, symmetric_group_s3(), {"d1", "ds1", "ds2", "ds3", "dr", "dr2"})});
    out.push_back({"H4", sweedler_h4(field)});
    return out;
}

}  // namespace hopfcalc
