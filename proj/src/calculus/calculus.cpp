#include "hopfcalc/calculus.hpp"

#include "core/witness.hpp"

#include <functional>
#include <stdexcept>

namespace hopfcalc {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}

struct ComultTerm {
    std::size_t left;
    std::size_t right;
    Scalar coeff;
};

/// Nonzero terms of Delta(e_i) for each i.
std::vector<std::vector<ComultTerm>> sparse_comult(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    std::vector<std::vector<ComultTerm>> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                const Scalar& c = h.comult_coeff(i, p, q);
                if (!c.is_zero())
                    out[i].push_back({p, q, c});
            }
    return out;
}

/// Universal coaction a (x) b -> a_1 b_1 (x) a_2 (x) b_2, returned as the
/// n components in H (x) H attached to e_0..e_{n-1}.
std::vector<TensorElement> universal_coaction(const HopfAlgebra& h, const std::vector<std::vector<ComultTerm>>& delta,
                                              const TensorElement& x)
{
    const std::size_t n = h.dim();
    std::vector<TensorElement> out(n, h.tensor_zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& xij = x[i * n + j];
            if (xij.is_zero())
                continue;
            for (const auto& a : delta[i])
                for (const auto& b : delta[j]) {
                    const Scalar c = xij * a.coeff * b.coeff;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& m = h.mult_coeff(a.left, b.left, k);
                        if (!m.is_zero())
                            out[k][a.right * n + b.right] += c * m;
                    }
                }
        }
    return out;
}

Matrix combine(const std::vector<Matrix>& basis_ops, const Vector& coeffs, const Field& field, std::size_t dim)
{
    Matrix out(field, dim, dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero())
            out += coeffs[i] * basis_ops[i];
    }
    return out;
}

Subspace grow_until_stable(Subspace s, const std::function<std::vector<Vector>(const Vector&)>& images)
{
    for (;;) {
        std::vector<Vector> vectors = s.basis_vectors();
        const std::size_t before = s.dim();
        for (const auto& v : s.basis_vectors())
            for (auto& w : images(v))
                vectors.push_back(std::move(w));
        s = Subspace::span(s.field(), s.ambient_dim(), vectors);
        if (s.dim() == before)
            return s;
    }
}

Matrix universal_d_matrix(const HopfAlgebra& h)
{
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < h.dim(); ++i)
        cols.push_back(universal_d(h, h.basis(i)));
    return Matrix::from_columns(h.field(), h.dim() * h.dim(), cols);
}

}  // namespace

Subspace kernel_of_multiplication(const HopfAlgebra& h) { return kernel(h.multiplication_map()); }

TensorElement tensor_left(const HopfAlgebra& h, const AlgebraElement& a, const TensorElement& x)
{
    const std::size_t n = h.dim();
    TensorElement out = h.tensor_zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& xij = x[i * n + j];
            if (xij.is_zero())
                continue;
            for (std::size_t s = 0; s < n; ++s) {
                if (a[s].is_zero())
                    continue;
                const Scalar c = a[s] * xij;
                for (std::size_t p = 0; p < n; ++p) {
                    const Scalar& m = h.mult_coeff(s, i, p);
                    if (!m.is_zero())
                        out[p * n + j] += c * m;
                }
            }
        }
    return out;
}

TensorElement tensor_right(const HopfAlgebra& h, const TensorElement& x, const AlgebraElement& b)
{
    const std::size_t n = h.dim();
    TensorElement out = h.tensor_zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& xij = x[i * n + j];
            if (xij.is_zero())
                continue;
            for (std::size_t s = 0; s < n; ++s) {
                if (b[s].is_zero())
                    continue;
                const Scalar c = b[s] * xij;
                for (std::size_t q = 0; q < n; ++q) {
                    const Scalar& m = h.mult_coeff(j, s, q);
                    if (!m.is_zero())
                        out[i * n + q] += c * m;
                }
            }
        }
    return out;
}

TensorElement universal_d(const HopfAlgebra& h, const AlgebraElement& a)
{
    return h.tensor(a, h.unit()) - h.tensor(h.unit(), a);
}

Fodc::Fodc(std::shared_ptr<const HopfAlgebra> algebra, Subspace n_sub) : algebra_(std::move(algebra))
{
    require(algebra_ != nullptr, "null algebra");
    const HopfAlgebra& h = *algebra_;
    const std::size_t n = h.dim();
    require(n_sub.ambient_dim() == n * n, "N must live in H (x) H");
    const Subspace k = kernel_of_multiplication(h);
    for (const auto& v : n_sub.basis_vectors())
        require(k.contains(v), "N is not inside Ker(mu): " + h.describe_tensor(v));
    for (const auto& v : n_sub.basis_vectors())
        for (std::size_t i = 0; i < n; ++i) {
            require(n_sub.contains(tensor_left(h, h.basis(i), v)),
                    "N is not a left submodule: " + h.name(i) + " . (" + h.describe_tensor(v) + ") is outside N");
            require(n_sub.contains(tensor_right(h, v, h.basis(i))),
                    "N is not a right submodule: (" + h.describe_tensor(v) + ") . " + h.name(i) + " is outside N");
        }
    quotient_ = Quotient(k, n_sub);
    const std::size_t m = quotient_.dim();

    std::vector<Vector> dcols;
    for (std::size_t i = 0; i < n; ++i)
        dcols.push_back(project(universal_d(h, h.basis(i))));
    d_ = Matrix::from_columns(h.field(), m, dcols);

    std::vector<TensorElement> lifts;
    for (std::size_t c = 0; c < m; ++c)
        lifts.push_back(lift(basis_form(c)));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vector> lcols;
        std::vector<Vector> rcols;
        for (const auto& x : lifts) {
            lcols.push_back(project(tensor_left(h, h.basis(i), x)));
            rcols.push_back(project(tensor_right(h, x, h.basis(i))));
        }
        left_.push_back(Matrix::from_columns(h.field(), m, lcols));
        right_.push_back(Matrix::from_columns(h.field(), m, rcols));
    }
}

Matrix Fodc::left_matrix(const AlgebraElement& a) const { return combine(left_, a, field(), omega_dim()); }
Matrix Fodc::right_matrix(const AlgebraElement& a) const { return combine(right_, a, field(), omega_dim()); }

Fodc Fodc::with_coaction(Coaction coaction) const
{
    require(coaction.components.size() == algebra_dim() && coaction.comodule_dim() == omega_dim(),
            "coaction shape does not match the calculus");
    Fodc out = *this;
    out.coaction_ = std::move(coaction);
    return out;
}

Fodc Fodc::with_source_ideal(Subspace ideal) const
{
    require(ideal.ambient_dim() == algebra_dim(), "ideal must live in H");
    Fodc out = *this;
    out.source_ideal_ = std::move(ideal);
    return out;
}

Fodc universal_fodc(std::shared_ptr<const HopfAlgebra> h)
{
    require(h != nullptr, "null algebra");
    const std::size_t n = h->dim();
    Fodc f(h, Subspace::zero(h->field(), n * n));
    CoactionAttempt attempt = attach_coaction(f);
    if (!attempt.ok())
        throw ConsistencyError("universal calculus has no coaction: " + attempt.detail);
    return std::move(*attempt.fodc);
}

Subspace subbimodule_closure(const HopfAlgebra& h, const std::vector<TensorElement>& generators)
{
    const std::size_t n = h.dim();
    const Matrix mu = h.multiplication_map();
    for (const auto& g : generators) {
        require(g.size() == n * n, "generator length mismatch");
        require(is_zero(mu * g), "generator outside Ker(mu): " + h.describe_tensor(g));
    }
    return grow_until_stable(Subspace::span(h.field(), n * n, generators), [&](const Vector& v) {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(tensor_left(h, h.basis(i), v));
            out.push_back(tensor_right(h, v, h.basis(i)));
        }
        return out;
    });
}

Fodc quotient_fodc(std::shared_ptr<const HopfAlgebra> h, const Subspace& n_sub) { return Fodc(std::move(h), n_sub); }

Subspace right_ideal_closure(const HopfAlgebra& h, const std::vector<AlgebraElement>& generators)
{
    const std::size_t n = h.dim();
    for (const auto& g : generators)
        require(g.size() == n, "generator length mismatch");
    return grow_until_stable(Subspace::span(h.field(), n, generators), [&](const Vector& v) {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(h.multiply(v, h.basis(i)));
        return out;
    });
}

Subspace woronowicz_subbimodule(const HopfAlgebra& h, const Subspace& ideal)
{
    const std::size_t n = h.dim();
    require(ideal.ambient_dim() == n, "ideal must live in H");
    std::vector<Vector> gens;
    for (const auto& b : ideal.basis_vectors()) {
        const TensorElement db = h.comultiply(b);
        // sum S(b_1) (x) b_2, then left multiples
        TensorElement base = h.tensor_zero();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                if (!db[p * n + q].is_zero())
                    add_scaled(base, db[p * n + q], h.tensor(h.apply_antipode(h.basis(p)), h.basis(q)));
            }
        for (std::size_t a = 0; a < n; ++a)
            gens.push_back(tensor_left(h, h.basis(a), base));
    }
    return Subspace::span(h.field(), n * n, gens);
}

Fodc woronowicz_from_ideal(std::shared_ptr<const HopfAlgebra> h, const std::vector<AlgebraElement>& gens)
{
    require(h != nullptr, "null algebra");
    for (const auto& g : gens) {
        require(g.size() == h->dim(), "generator length mismatch");
        const Scalar e = h->apply_counit(g);
        require(e.is_zero(), "ideal generator " + h->describe(g) + " has counit " + e.to_string() + ", not 0");
    }
    Subspace ideal = right_ideal_closure(*h, gens);
    Fodc f(h, woronowicz_subbimodule(*h, ideal));
    CoactionAttempt attempt = attach_coaction(f);
    if (!attempt.ok())
        throw ConsistencyError("calculus of a right ideal is not covariant: " + attempt.detail);
    return attempt.fodc->with_source_ideal(std::move(ideal));
}

CoactionAttempt attach_coaction(const Fodc& f)
{
    const HopfAlgebra& h = f.algebra();
    const std::size_t n = h.dim();
    const std::size_t m = f.omega_dim();
    const auto delta = sparse_comult(h);
    CoactionAttempt out;

    for (const auto& v : f.n_sub().basis_vectors()) {
        const auto parts = universal_coaction(h, delta, v);
        for (std::size_t k = 0; k < n; ++k) {
            if (!f.n_sub().contains(parts[k])) {
                out.witness = v;
                out.detail = "the coaction of " + h.describe_tensor(v) + " has " + h.name(k) + "-component " +
                             h.describe_tensor(parts[k]) + " outside N";
                return out;
            }
        }
    }

    Coaction lambda;
    lambda.components.assign(n, Matrix(h.field(), m, m));
    for (std::size_t c = 0; c < m; ++c) {
        const auto parts = universal_coaction(h, delta, f.lift(f.basis_form(c)));
        for (std::size_t k = 0; k < n; ++k) {
            if (!f.kernel_mu().contains(parts[k]))
                throw ConsistencyError("coaction component leaves Ker(mu)");
            lambda.components[k].set_column(c, f.project(parts[k]));
        }
    }
    Fodc covariant = f.with_coaction(std::move(lambda));
    CheckList checks = check_fodc(covariant);
    if (const CheckResult* bad = checks.first_failure())
        throw ConsistencyError("induced coaction fails " + bad->name + ": " + bad->witness);
    out.fodc = std::move(covariant);
    return out;
}

Matrix p_inv_matrix(const Fodc& f)
{
    require(f.is_covariant(), "calculus has no coaction");
    const HopfAlgebra& h = f.algebra();
    Matrix p(f.field(), f.omega_dim(), f.omega_dim());
    for (std::size_t k = 0; k < h.dim(); ++k)
        p += f.left_matrix(h.apply_antipode(h.basis(k))) * f.coaction()->components[k];
    return p;
}

OneForm p_inv(const Fodc& f, const OneForm& w) { return p_inv_matrix(f) * w; }

Subspace invariant_forms(const Fodc& f)
{
    require(f.is_covariant(), "calculus has no coaction");
    const HopfAlgebra& h = f.algebra();
    const std::size_t m = f.omega_dim();
    Matrix stacked(f.field(), 0, m);
    for (std::size_t k = 0; k < h.dim(); ++k) {
        Matrix block = f.coaction()->components[k];
        if (!h.unit()[k].is_zero())
            block -= h.unit()[k] * Matrix::identity(f.field(), m);
        stacked = Matrix::vstack(stacked, block);
    }
    return kernel(stacked);
}

Subspace ideal_from_fodc(const Fodc& f)
{
    const HopfAlgebra& h = f.algebra();
    const std::size_t n = h.dim();
    const Matrix pd = p_inv_matrix(f) * f.d();
    const Subspace ideal = kernel(Matrix::vstack(pd, Matrix::from_rows(f.field(), n, {h.counit()})));
    for (const auto& x : ideal.basis_vectors())
        for (std::size_t i = 0; i < n; ++i)
            if (!ideal.contains(h.multiply(x, h.basis(i))))
                throw ConsistencyError("ideal of the calculus is not a right ideal at (" + h.describe(x) + ") " +
                                       h.name(i));
    return ideal;
}

QuantumLieAlgebra quantum_lie(const Fodc& f)
{
    const HopfAlgebra& h = f.algebra();
    const std::size_t n = h.dim();
    QuantumLieAlgebra q;
    q.ideal = ideal_from_fodc(f);
    std::vector<Vector> span = q.ideal.basis_vectors();
    span.push_back(h.unit());
    q.chi = Subspace::span(f.field(), n, span).annihilator();
    q.basis = q.chi.basis_vectors();
    const std::size_t r = q.basis.size();
    if (invariant_forms(f).dim() != r)
        throw ConsistencyError("tangent space dimension " + std::to_string(r) +
                               " differs from the number of invariant forms");

    const Matrix t = Matrix::from_rows(f.field(), n, q.basis);
    const Matrix pd = p_inv_matrix(f) * f.d();
    for (std::size_t i = 0; i < r; ++i) {
        auto x = solve(t, unit_vector(f.field(), r, i));
        if (!x)
            throw ConsistencyError("tangent basis is not independent");
        q.invariant_forms.push_back(pd * *x);
        q.duals.push_back(std::move(*x));
    }

    const CheckResult recon = check_reconstruction(f, q);
    if (!recon.passed())
        throw ConsistencyError("da = sum (t_i * a) omega_i fails at " + recon.witness);

    // Columns t_j(e_b): the system for f_ij(e_s) has a unique solution if any.
    Matrix a(f.field(), n, r);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t j = 0; j < r; ++j)
            a(b, j) = q.basis[j][b];
    std::vector<std::vector<Functional>> structure(r, std::vector<Functional>(r, h.zero()));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t s = 0; s < n; ++s) {
            Vector rhs = h.zero();
            for (std::size_t b = 0; b < n; ++b)
                rhs[b] = evaluate(q.basis[i], h.multiply(h.basis(s), h.basis(b))) -
                         q.basis[i][s] * h.counit()[b];
            const auto sol = solve(a, rhs);
            if (!sol) {
                q.structure_note = "no f_ij: t" + std::to_string(i) + "(" + h.name(s) +
                                   " b) - t" + std::to_string(i) + "(" + h.name(s) +
                                   ") eps(b) is not a combination of the t_j (the ideal is not two-sided)";
                return q;
            }
            for (std::size_t j = 0; j < r; ++j)
                structure[i][j][s] = (*sol)[j];
        }
    q.structure = std::move(structure);
    return q;
}

CheckResult check_schmudgen(const HopfAlgebra& h, const QuantumLieAlgebra& q)
{
    const std::size_t n = h.dim();
    WitnessLog log("Delta t - eps (x) t lies in chi (x) H'");
    for (std::size_t i = 0; i < q.basis.size(); ++i)
        for (std::size_t b = 0; b < n; ++b) {
            // a -> t(ab) - eps(a) t(b)
            Vector col = h.zero();
            for (std::size_t a = 0; a < n; ++a)
                col[a] = evaluate(q.basis[i], h.multiply(h.basis(a), h.basis(b))) - h.counit()[a] * q.basis[i][b];
            if (!q.chi.contains(col))
                log.record("t" + std::to_string(i) + ", second argument " + h.name(b));
        }
    return log.result();
}

CheckResult check_reconstruction(const Fodc& f, const QuantumLieAlgebra& q)
{
    const HopfAlgebra& h = f.algebra();
    WitnessLog log("da = sum (t_i * a) omega_i");
    for (std::size_t s = 0; s < h.dim(); ++s) {
        OneForm sum = f.zero_form();
        for (std::size_t i = 0; i < q.basis.size(); ++i)
            sum = sum + f.left_matrix(smud_product(h, q.basis[i], h.basis(s))) * q.invariant_forms[i];
        if (sum != f.d().column(s))
            log.record(h.name(s));
    }
    return log.result();
}

CheckResult check_structure_functionals(const HopfAlgebra& h, const QuantumLieAlgebra& q)
{
    const std::string name = "t_i(ab) = t_i(a) eps(b) + sum f_ij(a) t_j(b)";
    if (!q.structure)
        return {name, CheckStatus::skipped, q.structure_note};
    const std::size_t n = h.dim();
    WitnessLog log(name);
    for (std::size_t i = 0; i < q.basis.size(); ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Scalar rhs = q.basis[i][a] * h.counit()[b];
                for (std::size_t j = 0; j < q.basis.size(); ++j)
                    rhs += (*q.structure)[i][j][a] * q.basis[j][b];
                if (evaluate(q.basis[i], h.multiply(h.basis(a), h.basis(b))) != rhs)
                    log.record("t" + std::to_string(i) + " at (" + h.name(a) + ", " + h.name(b) + ")");
            }
    return log.result();
}

BimoduleActions algebra_bimodule(const HopfAlgebra& h)
{
    BimoduleActions out;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        out.left.push_back(h.left_multiplication(h.basis(i)));
        out.right.push_back(h.right_multiplication(h.basis(i)));
    }
    return out;
}

BimoduleActions fodc_bimodule(const Fodc& f) { return {f.left_action(), f.right_action()}; }

CheckResult check_derivation(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation)
{
    const std::size_t n = h.dim();
    const std::string name = "Leibniz rule";
    if (derivation.cols() != n || derivation.rows() != target.dim() || target.left.size() != n ||
        target.right.size() != n)
        return fail(name, "shape mismatch");
    WitnessLog log(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector lhs = derivation * h.multiply(h.basis(i), h.basis(j));
            const Vector rhs = target.right[j] * derivation.column(i) + target.left[i] * derivation.column(j);
            if (lhs != rhs)
                log.record("(" + h.name(i) + ", " + h.name(j) + ")");
        }
    return log.result();
}

Matrix factor_derivation(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation)
{
    const CheckResult ok = check_derivation(h, target, derivation);
    require(ok.passed(), "not a derivation, Leibniz fails at " + ok.witness);
    const std::size_t n = h.dim();
    const std::size_t r = target.dim();
    Matrix factor(h.field(), r, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            factor.set_column(i * n + j, -Scalar::one(h.field()) * (target.left[i] * derivation.column(j)));
    const CheckList checks = check_factorization(h, target, derivation, factor);
    if (const CheckResult* bad = checks.first_failure())
        throw ConsistencyError("factorization fails " + bad->name + ": " + bad->witness);
    return factor;
}

CheckList check_factorization(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation,
                              const Matrix& factor)
{
    const std::size_t n = h.dim();
    CheckList out;
    WitnessLog through("D = f o d");
    const Matrix fd = factor * universal_d_matrix(h);
    for (std::size_t i = 0; i < n; ++i)
        if (fd.column(i) != derivation.column(i))
            through.record(h.name(i));
    out.add(through.result());

    WitnessLog bimod("f is a bimodule map on Ker(mu)");
    const Subspace k = kernel_of_multiplication(h);
    for (const auto& v : k.basis_vectors()) {
        const Vector fv = factor * v;
        for (std::size_t i = 0; i < n; ++i) {
            if (factor * tensor_left(h, h.basis(i), v) != target.left[i] * fv)
                bimod.record(h.name(i) + " . (" + h.describe_tensor(v) + ")");
            if (factor * tensor_right(h, v, h.basis(i)) != target.right[i] * fv)
                bimod.record("(" + h.describe_tensor(v) + ") . " + h.name(i));
        }
    }
    out.add(bimod.result());
    return out;
}

CheckList check_fodc(const Fodc& f)
{
    const HopfAlgebra& h = f.algebra();
    const std::size_t n = h.dim();
    const std::size_t m = f.omega_dim();
    CheckList out;

    out.add(is_zero(f.d_of(h.unit())) ? pass("d(1) = 0") : fail("d(1) = 0", to_string(f.d_of(h.unit()))));
    out.add(check_derivation(h, fodc_bimodule(f), f.d()));

    std::vector<Vector> lgen;
    std::vector<Vector> rgen;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            lgen.push_back(f.left_action()[i] * f.d().column(j));
            rgen.push_back(f.right_action()[i] * f.d().column(j));
        }
    const std::size_t lrank = Subspace::span(f.field(), m, lgen).dim();
    const std::size_t rrank = Subspace::span(f.field(), m, rgen).dim();
    out.add(lrank == m ? pass("spanned by a db")
                       : fail("spanned by a db", "rank " + std::to_string(lrank) + " of " + std::to_string(m)));
    out.add(rrank == m ? pass("spanned by da b")
                       : fail("spanned by da b", "rank " + std::to_string(rrank) + " of " + std::to_string(m)));

    WitnessLog bimod("bimodule axioms");
    if (!(f.left_matrix(h.unit()) == Matrix::identity(f.field(), m)) ||
        !(f.right_matrix(h.unit()) == Matrix::identity(f.field(), m)))
        bimod.record("unit");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement ij = h.multiply(h.basis(i), h.basis(j));
            if (!(f.left_matrix(ij) == f.left_action()[i] * f.left_action()[j]))
                bimod.record("left (" + h.name(i) + ", " + h.name(j) + ")");
            if (!(f.right_matrix(ij) == f.right_action()[j] * f.right_action()[i]))
                bimod.record("right (" + h.name(i) + ", " + h.name(j) + ")");
            if (!(f.left_action()[i] * f.right_action()[j] == f.right_action()[j] * f.left_action()[i]))
                bimod.record("commute (" + h.name(i) + ", " + h.name(j) + ")");
        }
    out.add(bimod.result());

    if (!f.is_covariant())
        return out;
    const Coaction& lambda = *f.coaction();
    out.add(check_coassociative(h, lambda));

    Matrix counit_sum(f.field(), m, m);
    for (std::size_t k = 0; k < n; ++k)
        if (!h.counit()[k].is_zero())
            counit_sum += h.counit()[k] * lambda.components[k];
    out.add(counit_sum == Matrix::identity(f.field(), m) ? pass("coaction counit law")
                                                         : fail("coaction counit law", "(eps (x) I) lambda != I"));

    // Delta_l(e_i de_j) = sum e_p e_r (x) e_q d e_s over Delta e_i, Delta e_j.
    const auto delta = sparse_comult(h);
    WitnessLog cov("left covariance");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const OneForm w = f.left_action()[i] * f.d().column(j);
            std::vector<OneForm> rhs(n, f.zero_form());
            for (const auto& a : delta[i])
                for (const auto& b : delta[j]) {
                    const OneForm piece = (a.coeff * b.coeff) * (f.left_action()[a.right] * f.d().column(b.right));
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& c = h.mult_coeff(a.left, b.left, k);
                        if (!c.is_zero())
                            add_scaled(rhs[k], c, piece);
                    }
                }
            for (std::size_t k = 0; k < n; ++k)
                if (lambda.components[k] * w != rhs[k]) {
                    cov.record(h.name(i) + " d" + h.name(j));
                    break;
                }
        }
    out.add(cov.result());
    return out;
}

}  // namespace hopfcalc
