#include "hopfcalc/fields.hpp"

#include "core/witness.hpp"

#include <stdexcept>

namespace hopfcalc {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

/// E(p, i) stored at p*n + i.
Vector flatten(const Matrix& e)
{
    Vector out;
    out.reserve(e.rows() * e.cols());
    for (std::size_t p = 0; p < e.rows(); ++p)
        for (std::size_t i = 0; i < e.cols(); ++i)
            out.push_back(e(p, i));
    return out;
}

Matrix unflatten(const Field& field, std::size_t n, const Vector& v)
{
    Matrix e(field, n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
            e(p, i) = v[p * n + i];
    return e;
}

std::string pair_name(const HopfAlgebra& h, std::size_t a, std::size_t b)
{
    return "(" + h.name(a) + ", " + h.name(b) + ")";
}

}  // namespace

CartanPair::CartanPair(Fodc fodc) : fodc_(std::move(fodc))
{
    const HopfAlgebra& h = fodc_.algebra();
    const Field& field = h.field();
    const std::size_t n = h.dim();
    const std::size_t m = fodc_.omega_dim();

    generators_ = Matrix(field, m, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            generators_.set_column(i * n + j, fodc_.right_action()[j] * fodc_.d().column(i));
    relations_ = kernel(generators_).basis_vectors();
    for (std::size_t k = 0; k < m; ++k) {
        auto c = solve(generators_, fodc_.basis_form(k));
        if (!c)
            throw ConsistencyError("Omega is not generated by dH as a right module");
        expansions_.push_back(std::move(*c));
    }

    // sum_ij c_ij E(e_i) e_j = 0 for every relation, as equations on the entries of E
    std::vector<Matrix> rmult;
    for (std::size_t j = 0; j < n; ++j)
        rmult.push_back(h.right_multiplication(h.basis(j)));
    Matrix constraints(field, relations_.size() * n, n * n);
    for (std::size_t r = 0; r < relations_.size(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = relations_[r][i * n + j];
                if (c.is_zero())
                    continue;
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        if (!rmult[j](p, q).is_zero())
                            constraints(r * n + p, q * n + i) += c * rmult[j](p, q);
            }
    for (const auto& v : kernel(constraints).basis_vectors()) {
        auto x = field_from_rho(unflatten(field, n, v));
        if (!x)
            throw ConsistencyError("solution of the relation system violates a relation");
        fields_.push_back(std::move(*x));
    }
}

std::optional<std::string> CartanPair::violated_relation(const Matrix& e) const
{
    const HopfAlgebra& h = algebra();
    const std::size_t n = h.dim();
    for (const auto& rel : relations_) {
        AlgebraElement total = h.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!rel[i * n + j].is_zero())
                    add_scaled(total, rel[i * n + j], h.multiply(e.column(i), h.basis(j)));
        if (is_zero(total))
            continue;
        std::string text;
        for (std::size_t i = 0; i < n; ++i) {
            AlgebraElement ci = h.zero();
            for (std::size_t j = 0; j < n; ++j)
                ci[j] = rel[i * n + j];
            if (is_zero(ci))
                continue;
            text += (text.empty() ? "" : " + ") + std::string("d(") + h.name(i) + ")(" + h.describe(ci) + ")";
        }
        return text + " = 0";
    }
    return std::nullopt;
}

std::optional<VectorField> CartanPair::field_from_rho(const Matrix& e) const
{
    const HopfAlgebra& h = algebra();
    const std::size_t n = h.dim();
    require(e.rows() == n && e.cols() == n, "rho must be n x n");
    if (violated_relation(e))
        return std::nullopt;
    Matrix x(h.field(), n, fodc_.omega_dim());
    for (std::size_t k = 0; k < expansions_.size(); ++k) {
        AlgebraElement col = h.zero();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!expansions_[k][i * n + j].is_zero())
                    add_scaled(col, expansions_[k][i * n + j], h.multiply(e.column(i), h.basis(j)));
        x.set_column(k, col);
    }
    return VectorField{std::move(x)};
}

std::optional<Vector> CartanPair::coordinates(const VectorField& x) const
{
    const std::size_t n = algebra().dim();
    std::vector<Vector> cols;
    for (const auto& f : fields_)
        cols.push_back(flatten(rho(f)));
    const Matrix basis = Matrix::from_columns(algebra().field(), n * n, cols);
    auto c = solve(basis, flatten(rho(x)));
    if (!c || !(combine(*c) == x))
        return std::nullopt;
    return c;
}

VectorField CartanPair::combine(const Vector& coords) const
{
    require(coords.size() == fields_.size(), "coordinate length mismatch");
    VectorField out = zero();
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero())
            out.matrix += coords[k] * fields_[k].matrix;
    return out;
}

VectorField CartanPair::zero() const
{
    return VectorField{Matrix(algebra().field(), algebra().dim(), fodc_.omega_dim())};
}

VectorField CartanPair::left_scale(const AlgebraElement& a, const VectorField& x) const
{
    return VectorField{algebra().left_multiplication(a) * x.matrix};
}

VectorField CartanPair::right_scale(const VectorField& x, const AlgebraElement& a) const
{
    return VectorField{x.matrix * fodc_.left_matrix(a)};
}

CheckResult CartanPair::check_right_linear(const VectorField& x) const
{
    const HopfAlgebra& h = algebra();
    WitnessLog log("right H-linearity");
    for (std::size_t j = 0; j < h.dim(); ++j)
        if (!(x.matrix * fodc_.right_action()[j] == h.right_multiplication(h.basis(j)) * x.matrix))
            log.record(h.name(j));
    return log.result();
}

CheckList CartanPair::check() const
{
    const HopfAlgebra& h = algebra();
    const std::size_t n = h.dim();
    CheckList out;

    WitnessLog linear("right H-linearity");
    for (std::size_t k = 0; k < fields_.size(); ++k)
        if (!check_right_linear(fields_[k]).passed())
            linear.record("X" + std::to_string(k));
    out.add(linear.result());

    WitnessLog left("rho(aX) = a rho(X)");
    WitnessLog twisted("rho(X)(rs) = rho(X)(r)s + rho(Xr)(s)");
    for (std::size_t k = 0; k < fields_.size(); ++k) {
        const Matrix e = rho(fields_[k]);
        for (std::size_t a = 0; a < n; ++a) {
            if (!(rho(left_scale(h.basis(a), fields_[k])) == h.left_multiplication(h.basis(a)) * e))
                left.record("X" + std::to_string(k) + ", " + h.name(a));
            const Matrix er = rho(right_scale(fields_[k], h.basis(a)));
            for (std::size_t s = 0; s < n; ++s) {
                const AlgebraElement lhs = e * h.multiply(h.basis(a), h.basis(s));
                const AlgebraElement rhs = h.multiply(e.column(a), h.basis(s)) + er.column(s);
                if (lhs != rhs)
                    twisted.record("X" + std::to_string(k) + " at " + pair_name(h, a, s));
            }
        }
    }
    out.add(left.result());
    out.add(twisted.result());

    std::vector<Vector> flat;
    for (const auto& f : fields_)
        flat.push_back(flatten(rho(f)));
    const std::size_t rank = Subspace::span(h.field(), n * n, flat).dim();
    out.add(rank == fields_.size() ? pass("rho is faithful")
                                   : fail("rho is faithful", "rank " + std::to_string(rank) + " of " +
                                                                 std::to_string(fields_.size())));
    return out;
}

std::string CartanPair::describe(const VectorField& x) const
{
    const HopfAlgebra& h = algebra();
    const Matrix e = rho(x);
    std::string out;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        if (i)
            out += ", ";
        out += "X(d" + h.name(i) + ") = " + h.describe(e.column(i));
    }
    return out;
}

CartanPair vector_fields_basis(const Fodc& f)
{
    CartanPair pair(f);
    const CheckList report = pair.check();
    if (const CheckResult* bad = report.first_failure())
        throw ConsistencyError("Cartan pair fails " + bad->name + ": " + bad->witness);
    return pair;
}

VectorField invariant_vf_from_functional(const CartanPair& pair, const QuantumLieAlgebra& q, const Functional& t)
{
    const HopfAlgebra& h = pair.algebra();
    require(t.size() == h.dim(), "functional length mismatch");
    require(q.chi.contains(t), "functional is not in chi (it must vanish on 1 and on the ideal)");
    const Matrix e = smud_operator(h, t);
    if (auto rel = pair.violated_relation(e))
        throw std::invalid_argument("t * - is not well defined on Omega: it violates " + *rel);
    VectorField x = *pair.field_from_rho(e);
    if (!(pair.rho(x).transpose() * h.counit() == t))
        throw ConsistencyError("eps o rho(V) does not recover t");
    return x;
}

FieldsSpanReport general_fields_span(const CartanPair& pair, const QuantumLieAlgebra& q)
{
    const HopfAlgebra& h = pair.algebra();
    const std::size_t n = h.dim();
    FieldsSpanReport out;
    std::vector<Matrix> v_rho;
    for (const auto& t : q.basis)
        v_rho.push_back(pair.rho(invariant_vf_from_functional(pair, q, t)));
    out.invariant_count = v_rho.size();
    std::vector<Vector> span;
    for (const auto& e : v_rho)
        for (std::size_t s = 0; s < n; ++s)
            span.push_back(flatten(h.left_multiplication(h.basis(s)) * e));
    out.span_dim = Subspace::span(h.field(), n * n, span).dim();
    out.field_dim = pair.dim();
    out.equal = out.span_dim == out.field_dim;

    const std::string name = "X(ab) = X(a)b + a^i sum_j (f_ij * a) V_j(b)";
    if (!q.structure) {
        out.leibniz = {name, CheckStatus::skipped, q.structure_note};
        return out;
    }
    WitnessLog log(name);
    for (std::size_t i = 0; i < v_rho.size(); ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // a^i = 1 suffices: left scaling commutes with both sides
                const AlgebraElement lhs = v_rho[i] * h.multiply(h.basis(a), h.basis(b));
                AlgebraElement rhs = h.multiply(v_rho[i].column(a), h.basis(b));
                for (std::size_t j = 0; j < v_rho.size(); ++j)
                    rhs = rhs + h.multiply(smud_product(h, (*q.structure)[i][j], h.basis(a)), v_rho[j].column(b));
                if (lhs != rhs)
                    log.record("V" + std::to_string(i) + " at " + pair_name(h, a, b));
            }
    out.leibniz = log.result();
    return out;
}

TranslationLift lift_translation(const Fodc& f, const Character& phi)
{
    require(f.is_covariant(), "calculus has no coaction");
    const HopfAlgebra& h = f.algebra();
    const Coaction& lambda = *f.coaction();
    TranslationLift out;
    out.matrix = comodule_lift(h, lambda, phi.translation);
    out.checks.add(check_lift_square(h, lambda, phi.translation, out.matrix));

    WitnessLog twist("L'(a w b) = L(a) L'(w) L(b)");
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const AlgebraElement li = phi.translation * h.basis(i);
        if (!(out.matrix * f.left_action()[i] == f.left_matrix(li) * out.matrix))
            twist.record("left " + h.name(i));
        if (!(out.matrix * f.right_action()[i] == f.right_matrix(li) * out.matrix))
            twist.record("right " + h.name(i));
    }
    out.checks.add(twist.result());

    WitnessLog commute("L'd = dL");
    const Matrix lhs = out.matrix * f.d();
    const Matrix rhs = f.d() * phi.translation;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (lhs.column(i) != rhs.column(i))
            commute.record(h.name(i));
    out.checks.add(commute.result());

    if (const CheckResult* bad = out.checks.first_failure())
        throw ConsistencyError("lifted translation fails " + bad->name + ": " + bad->witness);
    return out;
}

VectorField pullback(const VectorField& x, const TranslationLift& lift) { return VectorField{x.matrix * lift.matrix}; }

namespace {

CheckResult commutes_with_translations(const Matrix& e, const CharacterSet& characters,
                                       const std::string& name)
{
    WitnessLog log(name);
    for (const auto& c : characters.characters)
        if (!(e * c.translation == c.translation * e))
            log.record("translation of " + to_string(c.functional));
    CheckResult r = log.result();
    if (r.passed() && !characters.complete)
        r = {name, CheckStatus::conditional, "character list may be incomplete: " + characters.note};
    return r;
}

CheckResult check_def_a(const HopfAlgebra& h, const Matrix& e)
{
    const std::size_t n = h.dim();
    WitnessLog log("rho(X) = (I (x) eps rho(X)) Delta");
    const Functional psi = e.transpose() * h.counit();
    for (std::size_t i = 0; i < n; ++i)
        if (e.column(i) != smud_product(h, psi, h.basis(i)))
            log.record(h.name(i));
    return log.result();
}

}  // namespace

InvarianceReport is_invariant(const CartanPair& pair, const VectorField& x, const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    const Matrix e = pair.rho(x);
    InvarianceReport out;
    out.def_b = commutes_with_translations(e, characters, "rho(X) commutes with every translation");
    out.def_a = check_def_a(h, e);
    out.separating = separates_points(h, characters);
    const std::string name = "both invariance definitions agree";
    if (!characters.complete || !out.separating) {
        out.agreement = {name, CheckStatus::skipped,
                         characters.complete ? "characters do not separate points" : "character list incomplete"};
    } else if (out.def_a.passed() == out.def_b.passed()) {
        out.agreement = pass(name);
    } else {
        out.agreement = fail(name, std::string("defA ") + (out.def_a.passed() ? "holds" : "fails") + ", defB " +
                                       (out.def_b.passed() ? "holds" : "fails"));
    }
    return out;
}

CheckResult check_coderivation_rule(const HopfAlgebra& h, const Matrix& rho, const Matrix& translation)
{
    const std::size_t n = h.dim();
    WitnessLog log("rho(X)(ab) = L(a) rho(X)(b) + rho(X)(a) b");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const AlgebraElement lhs = rho * h.multiply(h.basis(a), h.basis(b));
            const AlgebraElement rhs =
                h.multiply(translation * h.basis(a), rho.column(b)) + h.multiply(rho.column(a), h.basis(b));
            if (lhs != rhs)
                log.record(pair_name(h, a, b));
        }
    return log.result();
}

CheckList check_coderivation(const CartanPair& pair, const Coderivation& c, const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    const Matrix e = pair.rho(c.field);
    CheckList out;
    out.add(pair.check_right_linear(c.field));
    out.add(check_coderivation_rule(h, e, c.witness.translation));
    WitnessLog twist("Xa = L(a)X");
    for (std::size_t a = 0; a < h.dim(); ++a)
        if (!(pair.right_scale(c.field, h.basis(a)) ==
              pair.left_scale(c.witness.translation * h.basis(a), c.field)))
            twist.record(h.name(a));
    out.add(twist.result());
    out.add(commutes_with_translations(e, characters, "rho(X) commutes with every translation"));
    return out;
}

std::optional<Coderivation> coderivation_witness(const CartanPair& pair, const VectorField& x,
                                                 const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    const Matrix e = pair.rho(x);
    if (commutes_with_translations(e, characters, "invariance").failed())
        return std::nullopt;
    for (const auto& c : characters.characters) {
        if (!check_coderivation_rule(h, e, c.translation).passed())
            continue;
        Coderivation out{x, c};
        const CheckList checks = check_coderivation(pair, out, characters);
        if (const CheckResult* bad = checks.first_failure())
            throw ConsistencyError("coderivation fails " + bad->name + ": " + bad->witness);
        return out;
    }
    return std::nullopt;
}

std::vector<Coderivation> discover_coderivations(const CartanPair& pair, const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    const Field& field = h.field();
    const std::size_t n = h.dim();
    const std::size_t r = pair.dim();
    std::vector<Matrix> rhos;
    for (const auto& f : pair.fields())
        rhos.push_back(pair.rho(f));

    // Invariance rows: (E L - L E) entries, linear in the coordinates.
    Matrix invariance(field, 0, r);
    for (const auto& c : characters.characters) {
        Matrix block(field, n * n, r);
        for (std::size_t k = 0; k < r; ++k)
            block.set_column(k, flatten(rhos[k] * c.translation - c.translation * rhos[k]));
        invariance = Matrix::vstack(invariance, block);
    }

    std::vector<Coderivation> out;
    for (const auto& c : characters.characters) {
        Matrix rule(field, n * n * n, r);
        for (std::size_t k = 0; k < r; ++k) {
            Vector col;
            col.reserve(n * n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const AlgebraElement v = rhos[k] * h.multiply(h.basis(a), h.basis(b)) -
                                             h.multiply(c.translation * h.basis(a), rhos[k].column(b)) -
                                             h.multiply(rhos[k].column(a), h.basis(b));
                    col.insert(col.end(), v.begin(), v.end());
                }
            rule.set_column(k, col);
        }
        for (const auto& coords : kernel(Matrix::vstack(rule, invariance)).basis_vectors()) {
            Coderivation found{pair.combine(coords), c};
            const CheckList checks = check_coderivation(pair, found, characters);
            if (const CheckResult* bad = checks.first_failure())
                throw ConsistencyError("discovered coderivation fails " + bad->name + ": " + bad->witness);
            out.push_back(std::move(found));
        }
    }
    return out;
}

bool witnesses_commute(const Coderivation& x, const Coderivation& y)
{
    return x.witness.translation * y.witness.translation == y.witness.translation * x.witness.translation;
}

Coderivation lie_bracket(const CartanPair& pair, const Coderivation& x, const Coderivation& y,
                         const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    require(witnesses_commute(x, y), "witness translations do not commute (L L' != L' L), so [X, Y] is undefined");
    const Matrix ex = pair.rho(x.field);
    const Matrix ey = pair.rho(y.field);
    const Matrix target = ex * ey - ey * ex;
    auto z = pair.field_from_rho(target);
    require(z.has_value(), "rho(X)rho(Y) - rho(Y)rho(X) is not rho of a vector field");
    Coderivation out{std::move(*z), star_product(h, x.witness, y.witness)};
    if (!(out.witness.translation == x.witness.translation * y.witness.translation))
        throw ConsistencyError("star product does not compose translations");
    const CheckList checks = check_coderivation(pair, out, characters);
    if (const CheckResult* bad = checks.first_failure())
        throw ConsistencyError("[X, Y] fails " + bad->name + ": " + bad->witness);
    const Matrix& d = pair.fodc().d();
    if (!(out.field.matrix * d == x.field.matrix * d * y.field.matrix * d - y.field.matrix * d * x.field.matrix * d))
        throw ConsistencyError("[X, Y](da) differs from X(dY(da)) - Y(dX(da))");
    return out;
}

namespace {

/// w -> X(dY(w)) - Y(dX(w)) as an n x m matrix.
Matrix literal_bracket(const Matrix& d, const Matrix& x, const Matrix& y) { return x * d * y - y * d * x; }

struct BracketContext {
    const HopfAlgebra& h;
    const Fodc& f;
    const Matrix& d;

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const { return h.multiply(a, b); }
    AlgebraElement e(std::size_t i) const { return h.basis(i); }
    /// X(da)
    AlgebraElement on_d(const Matrix& x, std::size_t a) const { return x * d.column(a); }
    /// O(d(Y(db))) pieces
    AlgebraElement x_dy_db(const Matrix& x, const Matrix& y, std::size_t b) const { return x * (d * (y * d.column(b))); }
};

}  // namespace

IdentityReport verify_bracket_identities(const CartanPair& pair, const std::vector<Coderivation>& coderivations,
                                         const CharacterSet& characters)
{
    const HopfAlgebra& h = pair.algebra();
    const Fodc& f = pair.fodc();
    const Matrix& d = f.d();
    const std::size_t n = h.dim();
    const std::size_t count = coderivations.size();
    const BracketContext ctx{h, f, d};
    IdentityReport out;

    auto label = [](std::size_t i) { return "C" + std::to_string(i); };
    std::vector<std::vector<std::optional<Coderivation>>> brackets(count, std::vector<std::optional<Coderivation>>(count));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (!witnesses_commute(coderivations[i], coderivations[j])) {
                if (i < j)
                    out.skipped_pairs.push_back("(" + label(i) + ", " + label(j) + ")");
                continue;
            }
            brackets[i][j] = lie_bracket(pair, coderivations[i], coderivations[j], characters);
            if (i <= j)
                ++out.pairs_checked;
        }

    WitnessLog antisym("[X,Y] = -[Y,X]");
    WitnessLog additive("[X+X',Y] = [X,Y] + [X',Y]");
    WitnessLog jacobi("[X,[Y,Z]] + [Z,[X,Y]] + [Y,[Z,X]] = 0");
    WitnessLog leibniz("[X,Y](d(ab)) = LL'(a)[X,Y](db) + [X,Y](da)b");
    WitnessLog mixed_left("[X,Y](a db) = LL'(a)[X,Y](db) + L'(Xda)Y(db) - L(Yda)X(db)");
    WitnessLog mixed_right("[X,Y](da b) = [X,Y](da)b + L(Yda)X(db) - L'(Xda)Y(db)");
    WitnessLog tw_ax("[aX,Y](db) = aX(dY(db)) - L'(a)Y(d(Xdb)) - Y(da)X(db)");
    WitnessLog tw_xa("[Xa,Y](db) = L(a)X(dY(db)) - L'L(a)Y(d(Xdb)) - L(Y(da))X(db)");
    WitnessLog tw_ay("[X,aY](db) = L(a)X(d(Ydb)) + X(da)Y(db) - aY(d(Xdb))");
    WitnessLog tw_ya("[X,Ya](db) = LL'(a)X(d(Ydb)) + L'(Xda)Y(db) - L'(a)Y(d(Xdb))");
    WitnessLog tw_axby("[aX,bY](dc) = aL(b)X(d(Ydc)) + a(Xdb)(Ydc) - bL'(a)Y(d(Xdc)) - b(Yda)(Xdc)");

    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (!brackets[i][j])
                continue;
            const std::string who = "(" + label(i) + ", " + label(j) + ")";
            const Coderivation& cx = coderivations[i];
            const Coderivation& cy = coderivations[j];
            const Matrix& x = cx.field.matrix;
            const Matrix& y = cy.field.matrix;
            const Matrix& l = cx.witness.translation;
            const Matrix& lp = cy.witness.translation;
            const Matrix z = brackets[i][j]->field.matrix;
            const Matrix rho_z = z * d;

            if (!(z == -Scalar::one(h.field()) * brackets[j][i]->field.matrix))
                antisym.record(who);

            for (std::size_t k = 0; k < count; ++k) {
                if (k == i || !(cx.witness == coderivations[k].witness) || !brackets[k][j])
                    continue;
                // X + X' shares the witness, so it is again a coderivation
                const Coderivation sum{VectorField{x + coderivations[k].field.matrix}, cx.witness};
                const Coderivation lhs = lie_bracket(pair, sum, cy, characters);
                if (!(lhs.field.matrix == z + brackets[k][j]->field.matrix))
                    additive.record("(" + label(i) + " + " + label(k) + ", " + label(j) + ")");
            }

            const Matrix op = literal_bracket(d, x, y);
            for (std::size_t a = 0; a < n; ++a) {
                const AlgebraElement ea = ctx.e(a);
                const AlgebraElement llp_a = l * (lp * ea);
                const AlgebraElement xda = ctx.on_d(x, a);
                const AlgebraElement yda = ctx.on_d(y, a);
                for (std::size_t b = 0; b < n; ++b) {
                    const AlgebraElement eb = ctx.e(b);
                    const AlgebraElement xdb = ctx.on_d(x, b);
                    const AlgebraElement ydb = ctx.on_d(y, b);
                    const AlgebraElement zdb = rho_z.column(b);
                    const std::string at = who + " at " + pair_name(h, a, b);

                    if (rho_z * ctx.mul(ea, eb) != ctx.mul(llp_a, zdb) + ctx.mul(rho_z.column(a), eb))
                        leibniz.record(at);

                    // a db and da b as one-forms, fed to the literal operator
                    const OneForm a_db = f.left_action()[a] * d.column(b);
                    const OneForm da_b = f.right_action()[b] * d.column(a);
                    if (op * a_db != ctx.mul(llp_a, op * d.column(b)) + ctx.mul(lp * xda, ydb) - ctx.mul(l * yda, xdb))
                        mixed_left.record(at);
                    if (op * da_b != ctx.mul(op * d.column(a), eb) + ctx.mul(l * yda, xdb) - ctx.mul(lp * xda, ydb))
                        mixed_right.record(at);

                    const AlgebraElement x_dy_db = ctx.x_dy_db(x, y, b);
                    const AlgebraElement y_dx_db = ctx.x_dy_db(y, x, b);

                    const Matrix ax = pair.left_scale(ea, cx.field).matrix;
                    if (literal_bracket(d, ax, y) * d.column(b) !=
                        ctx.mul(ea, x_dy_db) - ctx.mul(lp * ea, y_dx_db) - ctx.mul(yda, xdb))
                        tw_ax.record(at);

                    const Matrix xa = pair.right_scale(cx.field, ea).matrix;
                    if (literal_bracket(d, xa, y) * d.column(b) !=
                        ctx.mul(l * ea, x_dy_db) - ctx.mul(lp * (l * ea), y_dx_db) - ctx.mul(l * yda, xdb))
                        tw_xa.record(at);

                    const Matrix ay = pair.left_scale(ea, cy.field).matrix;
                    if (literal_bracket(d, x, ay) * d.column(b) !=
                        ctx.mul(l * ea, x_dy_db) + ctx.mul(xda, ydb) - ctx.mul(ea, y_dx_db))
                        tw_ay.record(at);

                    const Matrix ya = pair.right_scale(cy.field, ea).matrix;
                    if (literal_bracket(d, x, ya) * d.column(b) !=
                        ctx.mul(llp_a, x_dy_db) + ctx.mul(lp * xda, ydb) - ctx.mul(lp * ea, y_dx_db))
                        tw_ya.record(at);

                    // [aX, bY](dc)
                    const Matrix by = pair.left_scale(eb, cy.field).matrix;
                    const Matrix lhs_op = literal_bracket(d, ax, by);
                    for (std::size_t c = 0; c < n; ++c) {
                        const AlgebraElement x_dy_dc = ctx.x_dy_db(x, y, c);
                        const AlgebraElement y_dx_dc = ctx.x_dy_db(y, x, c);
                        const AlgebraElement rhs = ctx.mul(ea, ctx.mul(l * eb, x_dy_dc)) +
                                                   ctx.mul(ea, ctx.mul(xdb, ctx.on_d(y, c))) -
                                                   ctx.mul(eb, ctx.mul(lp * ea, y_dx_dc)) -
                                                   ctx.mul(eb, ctx.mul(yda, ctx.on_d(x, c)));
                        if (lhs_op * d.column(c) != rhs)
                            tw_axby.record(who + " at (" + h.name(a) + ", " + h.name(b) + ", " + h.name(c) + ")");
                    }
                }
            }

            for (std::size_t k = 0; k < count; ++k) {
                const auto& yz = brackets[j][k];
                const auto& zx = brackets[k][i];
                const auto& xy = brackets[i][j];
                if (!yz || !zx || !witnesses_commute(cx, *yz) || !witnesses_commute(coderivations[k], *xy) ||
                    !witnesses_commute(cy, *zx))
                    continue;
                const Matrix total = lie_bracket(pair, cx, *yz, characters).field.matrix +
                                     lie_bracket(pair, coderivations[k], *xy, characters).field.matrix +
                                     lie_bracket(pair, cy, *zx, characters).field.matrix;
                if (!total.is_zero())
                    jacobi.record("(" + label(i) + ", " + label(j) + ", " + label(k) + ")");
            }
        }

    for (const auto* log : {&antisym, &additive, &jacobi, &leibniz, &mixed_left, &mixed_right, &tw_ax, &tw_xa, &tw_ay,
                            &tw_ya, &tw_axby})
        out.checks.add(log->result());
    return out;
}

}  // namespace hopfcalc
