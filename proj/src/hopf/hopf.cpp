#include "hopfcalc/hopf.hpp"

#include "hopfcalc/polynomial.hpp"
#include "core/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcalc {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw std::invalid_argument(message);
}


}  // namespace

HopfAlgebra::HopfAlgebra(HopfData data) : data_(std::move(data))
{
    n_ = data_.basis_names.size();
    require(n_ > 0, "Hopf algebra must have positive dimension");
    require(data_.mult.size() == n_ * n_ * n_, "multiplication tensor must have n^3 entries");
    require(data_.comult.size() == n_ * n_ * n_, "comultiplication tensor must have n^3 entries");
    require(data_.unit.size() == n_, "unit must have n entries");
    require(data_.counit.size() == n_, "counit must have n entries");
    require(data_.antipode.rows() == n_ && data_.antipode.cols() == n_, "antipode must be n x n");
    auto same_field = [&](const Scalar& s) { return s.field() == data_.field; };
    bool ok = data_.antipode.field() == data_.field;
    for (const auto* v : {&data_.mult, &data_.comult, &data_.unit, &data_.counit})
        for (const auto& s : *v)
            ok = ok && same_field(s);
    for (const auto& s : data_.antipode.entries())
        ok = ok && same_field(s);
    require(ok, "structure constants must lie in the declared field");
}

AlgebraElement HopfAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const
{
    require(a.size() == n_ && b.size() == n_, "multiply: element length mismatch");
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b[j].is_zero())
                continue;
            const Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n_; ++k) {
                const Scalar& m = mult_coeff(i, j, k);
                if (!m.is_zero())
                    out[k] += ab * m;
            }
        }
    }
    return out;
}

TensorElement HopfAlgebra::comultiply(const AlgebraElement& a) const
{
    require(a.size() == n_, "comultiply: element length mismatch");
    TensorElement out = tensor_zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t jk = 0; jk < n_ * n_; ++jk) {
            const Scalar& c = data_.comult[i * n_ * n_ + jk];
            if (!c.is_zero())
                out[jk] += a[i] * c;
        }
    }
    return out;
}

Scalar HopfAlgebra::apply_counit(const AlgebraElement& a) const { return dot(data_.counit, a); }

AlgebraElement HopfAlgebra::apply_antipode(const AlgebraElement& a) const { return data_.antipode * a; }

Matrix HopfAlgebra::left_multiplication(const AlgebraElement& a) const
{
    Matrix m(field(), n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        m.set_column(j, multiply(a, basis(j)));
    return m;
}

Matrix HopfAlgebra::right_multiplication(const AlgebraElement& a) const
{
    Matrix m(field(), n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        m.set_column(j, multiply(basis(j), a));
    return m;
}

TensorElement HopfAlgebra::tensor(const AlgebraElement& a, const AlgebraElement& b) const
{
    TensorElement out = tensor_zero();
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!b[j].is_zero())
                out[i * n_ + j] = a[i] * b[j];
        }
    }
    return out;
}

TensorElement HopfAlgebra::tensor_multiply(const TensorElement& x, const TensorElement& y) const
{
    require(x.size() == n_ * n_ && y.size() == n_ * n_, "tensor_multiply: length mismatch");
    TensorElement out = tensor_zero();
    for (std::size_t ij = 0; ij < n_ * n_; ++ij) {
        if (x[ij].is_zero())
            continue;
        const std::size_t i = ij / n_;
        const std::size_t j = ij % n_;
        for (std::size_t kl = 0; kl < n_ * n_; ++kl) {
            if (y[kl].is_zero())
                continue;
            const std::size_t k = kl / n_;
            const std::size_t l = kl % n_;
            const Scalar coeff = x[ij] * y[kl];
            for (std::size_t p = 0; p < n_; ++p) {
                const Scalar& left = mult_coeff(i, k, p);
                if (left.is_zero())
                    continue;
                for (std::size_t q = 0; q < n_; ++q) {
                    const Scalar& right = mult_coeff(j, l, q);
                    if (!right.is_zero())
                        out[p * n_ + q] += coeff * left * right;
                }
            }
        }
    }
    return out;
}

Matrix HopfAlgebra::multiplication_map() const
{
    Matrix m(field(), n_, n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                m(k, i * n_ + j) = mult_coeff(i, j, k);
    return m;
}

namespace {

std::string combination(const Vector& coeffs, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Scalar& c = coeffs[i];
        if (c.is_zero())
            continue;
        std::string text = c.to_string();
        bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
        if (negative)
            text = (-c).to_string();
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (text != "1")
            out += text + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string HopfAlgebra::describe(const AlgebraElement& a) const { return combination(a, data_.basis_names); }

std::string HopfAlgebra::describe_tensor(const TensorElement& t) const
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            names.push_back(name(i) + "(x)" + name(j));
    return combination(t, names);
}

CheckList validate_hopf(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    const Field& field = h.field();
    CheckList out;

    WitnessLog assoc("associativity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto lhs = h.multiply(h.multiply(h.basis(i), h.basis(j)), h.basis(k));
                const auto rhs = h.multiply(h.basis(i), h.multiply(h.basis(j), h.basis(k)));
                if (lhs != rhs)
                    assoc.record("(" + h.name(i) + ", " + h.name(j) + ", " + h.name(k) + ")");
            }
    out.add(assoc.result());

    WitnessLog unit("unit");
    for (std::size_t i = 0; i < n; ++i) {
        if (h.multiply(h.unit(), h.basis(i)) != h.basis(i) || h.multiply(h.basis(i), h.unit()) != h.basis(i))
            unit.record(h.name(i));
    }
    out.add(unit.result());

    // (Delta (x) I) Delta and (I (x) Delta) Delta as n^3 vectors.
    WitnessLog coassoc("coassociativity");
    for (std::size_t i = 0; i < n; ++i) {
        const TensorElement d = h.comultiply(h.basis(i));
        Vector left = zero_vector(field, n * n * n);
        Vector right = zero_vector(field, n * n * n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = d[j * n + k];
                if (c.is_zero())
                    continue;
                const TensorElement dj = h.comultiply(h.basis(j));
                const TensorElement dk = h.comultiply(h.basis(k));
                for (std::size_t pq = 0; pq < n * n; ++pq) {
                    if (!dj[pq].is_zero())
                        left[pq * n + k] += c * dj[pq];
                    if (!dk[pq].is_zero())
                        right[j * n * n + pq] += c * dk[pq];
                }
            }
        if (left != right)
            coassoc.record(h.name(i));
    }
    out.add(coassoc.result());

    WitnessLog counit("counit");
    for (std::size_t i = 0; i < n; ++i) {
        const TensorElement d = h.comultiply(h.basis(i));
        AlgebraElement left = h.zero();
        AlgebraElement right = h.zero();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                left[k] += h.counit()[j] * d[j * n + k];
                right[j] += d[j * n + k] * h.counit()[k];
            }
        if (left != h.basis(i) || right != h.basis(i))
            counit.record(h.name(i));
    }
    out.add(counit.result());

    WitnessLog delta_alg("comultiplication is an algebra map");
    if (h.comultiply(h.unit()) != h.tensor(h.unit(), h.unit()))
        delta_alg.record("Delta(1) != 1(x)1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto lhs = h.comultiply(h.multiply(h.basis(i), h.basis(j)));
            const auto rhs = h.tensor_multiply(h.comultiply(h.basis(i)), h.comultiply(h.basis(j)));
            if (lhs != rhs)
                delta_alg.record("(" + h.name(i) + ", " + h.name(j) + ")");
        }
    out.add(delta_alg.result());

    WitnessLog eps_alg("counit is an algebra map");
    if (!h.apply_counit(h.unit()).is_one())
        eps_alg.record("eps(1) != 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (h.apply_counit(h.multiply(h.basis(i), h.basis(j))) != h.counit()[i] * h.counit()[j])
                eps_alg.record("(" + h.name(i) + ", " + h.name(j) + ")");
        }
    out.add(eps_alg.result());

    WitnessLog antipode("antipode");
    for (std::size_t i = 0; i < n; ++i) {
        const TensorElement d = h.comultiply(h.basis(i));
        AlgebraElement left = h.zero();
        AlgebraElement right = h.zero();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (d[j * n + k].is_zero())
                    continue;
                add_scaled(left, d[j * n + k], h.multiply(h.apply_antipode(h.basis(j)), h.basis(k)));
                add_scaled(right, d[j * n + k], h.multiply(h.basis(j), h.apply_antipode(h.basis(k))));
            }
        const AlgebraElement expected = h.counit()[i] * h.unit();
        if (left != expected || right != expected)
            antipode.record(h.name(i));
    }
    out.add(antipode.result());
    return out;
}

Scalar evaluate(const Functional& f, const AlgebraElement& a) { return dot(f, a); }

AlgebraElement smud_product(const HopfAlgebra& h, const Functional& f, const AlgebraElement& a)
{
    require(f.size() == h.dim(), "functional length mismatch");
    const std::size_t n = h.dim();
    const TensorElement d = h.comultiply(a);
    AlgebraElement out = h.zero();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (!d[j * n + k].is_zero() && !f[k].is_zero())
                out[j] += d[j * n + k] * f[k];
        }
    return out;
}

Matrix smud_operator(const HopfAlgebra& h, const Functional& f)
{
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i)
        m.set_column(i, smud_product(h, f, h.basis(i)));
    return m;
}

Functional convolution(const HopfAlgebra& h, const Functional& f, const Functional& g)
{
    require(f.size() == h.dim() && g.size() == h.dim(), "functional length mismatch");
    const std::size_t n = h.dim();
    Functional out = h.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.comult_coeff(i, j, k);
                if (!c.is_zero())
                    out[i] += c * f[j] * g[k];
            }
    return out;
}

Vector dual_comult(const HopfAlgebra& h, const Functional& t)
{
    require(t.size() == h.dim(), "functional length mismatch");
    const std::size_t n = h.dim();
    Vector out = h.tensor_zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = evaluate(t, h.multiply(h.basis(i), h.basis(j)));
    return out;
}

Matrix translation_matrix(const HopfAlgebra& h, const Functional& phi)
{
    require(phi.size() == h.dim(), "functional length mismatch");
    const std::size_t n = h.dim();
    Matrix m(h.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.comult_coeff(i, j, k);
                if (!c.is_zero() && !phi[j].is_zero())
                    m(k, i) += c * phi[j];
            }
    return m;
}

CheckResult check_character(const HopfAlgebra& h, const Functional& phi)
{
    const std::string name = "character";
    if (phi.size() != h.dim())
        return fail(name, "length " + std::to_string(phi.size()) + " != dim " + std::to_string(h.dim()));
    if (!evaluate(phi, h.unit()).is_one())
        return fail(name, "phi(1) = " + evaluate(phi, h.unit()).to_string());
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (evaluate(phi, h.multiply(h.basis(i), h.basis(j))) != phi[i] * phi[j])
                return fail(name, "phi(" + h.name(i) + " " + h.name(j) + ") != phi(" + h.name(i) + ") phi(" +
                                      h.name(j) + ")");
        }
    return pass(name);
}

Character make_character(const HopfAlgebra& h, const Functional& phi)
{
    const CheckResult r = check_character(h, phi);
    if (!r.passed())
        throw std::invalid_argument("not a character: " + r.witness);
    return Character{phi, translation_matrix(h, phi)};
}

Character counit_character(const HopfAlgebra& h) { return make_character(h, h.counit()); }

std::size_t CharacterSet::index_of(const Functional& phi) const
{
    for (std::size_t i = 0; i < characters.size(); ++i) {
        if (characters[i].functional == phi)
            return i;
    }
    return npos;
}

namespace {

struct ProductConstraint {
    std::size_t i;
    std::size_t j;
};

class CharacterSearch {
public:
    CharacterSearch(const HopfAlgebra& h, std::vector<std::vector<Scalar>> candidates)
        : h_(h), candidates_(std::move(candidates)), by_level_(h.dim()), unit_level_(0)
    {
        const std::size_t n = h.dim();
        auto support_max = [&](const Vector& v) {
            std::size_t m = 0;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    m = k;
            return m;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const std::size_t level = std::max(j, support_max(h.multiply(h.basis(i), h.basis(j))));
                const std::size_t level2 = std::max(j, support_max(h.multiply(h.basis(j), h.basis(i))));
                by_level_[level].push_back({i, j});
                if (i != j)
                    by_level_[level2].push_back({j, i});
            }
        unit_level_ = support_max(h.unit());
        products_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                products_[i * n + j] = h.multiply(h.basis(i), h.basis(j));
    }

    /// False when the node budget ran out.
    bool run(std::vector<Functional>& found)
    {
        Functional phi = h_.zero();
        return descend(0, phi, found);
    }

private:
    static constexpr std::size_t kNodeBudget = 5'000'000;

    bool consistent(std::size_t level, const Functional& phi) const
    {
        const std::size_t n = h_.dim();
        if (level == unit_level_ && !evaluate_prefix(phi, h_.unit()).is_one())
            return false;
        for (const auto& c : by_level_[level]) {
            if (evaluate_prefix(phi, products_[c.i * n + c.j]) != phi[c.i] * phi[c.j])
                return false;
        }
        return true;
    }

    static Scalar evaluate_prefix(const Functional& phi, const AlgebraElement& a) { return dot(phi, a); }

    bool descend(std::size_t level, Functional& phi, std::vector<Functional>& found)
    {
        if (level == h_.dim()) {
            found.push_back(phi);
            return true;
        }
        for (const auto& value : candidates_[level]) {
            if (++nodes_ > kNodeBudget)
                return false;
            phi[level] = value;
            if (consistent(level, phi) && !descend(level + 1, phi, found))
                return false;
        }
        phi[level] = Scalar::zero(h_.field());
        return true;
    }

    const HopfAlgebra& h_;
    std::vector<std::vector<Scalar>> candidates_;
    std::vector<std::vector<ProductConstraint>> by_level_;
    std::size_t unit_level_;
    std::vector<AlgebraElement> products_;
    std::size_t nodes_ = 0;
};

}  // namespace

CharacterSet find_characters(const HopfAlgebra& h)
{
    CharacterSet out;
    std::vector<std::vector<Scalar>> candidates;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        RootSearch roots = roots_in_field(characteristic_polynomial(h.left_multiplication(h.basis(i))));
        if (!roots.complete) {
            out.complete = false;
            out.note = "eigenvalues of left multiplication by " + h.name(i) + " could not be certified";
        }
        candidates.push_back(std::move(roots.roots));
    }
    std::vector<Functional> found;
    CharacterSearch search(h, std::move(candidates));
    if (!search.run(found)) {
        out.complete = false;
        out.note = "search budget exhausted";
    }
    const std::size_t eps = [&] {
        for (std::size_t i = 0; i < found.size(); ++i)
            if (found[i] == h.counit())
                return i;
        return found.size();
    }();
    if (eps < found.size())
        std::rotate(found.begin(), found.begin() + static_cast<std::ptrdiff_t>(eps),
                    found.begin() + static_cast<std::ptrdiff_t>(eps) + 1);
    for (const auto& phi : found)
        out.characters.push_back(make_character(h, phi));
    if (out.complete && out.note.empty())
        out.note = "complete";
    return out;
}

namespace {

void require_same_algebra(const HopfAlgebra& h, const Character& c)
{
    require(c.functional.size() == h.dim() && c.translation.rows() == h.dim() &&
                (h.dim() == 0 || c.functional.front().field() == h.field()),
            "character belongs to a different algebra");
}

}  // namespace

Character star_product(const HopfAlgebra& h, const Character& phi, const Character& psi)
{
    require_same_algebra(h, phi);
    require_same_algebra(h, psi);
    const std::size_t n = h.dim();
    Functional out = h.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.comult_coeff(i, j, k);
                if (!c.is_zero())
                    out[i] += c * psi.functional[j] * phi.functional[k];
            }
    return make_character(h, out);
}

Character character_inverse(const HopfAlgebra& h, const Character& phi)
{
    require_same_algebra(h, phi);
    return make_character(h, h.antipode().transpose() * phi.functional);
}

Matrix right_translation(const HopfAlgebra& h, const Character& phi)
{
    require_same_algebra(h, phi);
    const Functional inverse = character_inverse(h, phi).functional;
    const std::size_t n = h.dim();
    Matrix r(h.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = h.comult_coeff(i, j, k);
                if (!c.is_zero() && !inverse[k].is_zero())
                    r(j, i) += c * inverse[k];
            }
    return r;
}

bool separates_points(const HopfAlgebra& h, const CharacterSet& set)
{
    std::vector<Vector> rows;
    for (const auto& c : set.characters)
        rows.push_back(c.functional);
    return rows.size() >= h.dim() && rref(Matrix::from_rows(h.field(), h.dim(), rows)).rank == h.dim();
}

CheckResult check_coassociative(const HopfAlgebra& h, const Coaction& lambda)
{
    const std::string name = "coaction coassociativity";
    const std::size_t n = h.dim();
    if (lambda.components.size() != n)
        return fail(name, "expected " + std::to_string(n) + " components");
    const std::size_t m = lambda.comodule_dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Matrix lhs(h.field(), m, m);
            for (std::size_t l = 0; l < n; ++l) {
                const Scalar& c = h.comult_coeff(l, j, k);
                if (!c.is_zero())
                    lhs += c * lambda.components[l];
            }
            if (!(lhs == lambda.components[k] * lambda.components[j]))
                return fail(name, "component pair (" + h.name(j) + ", " + h.name(k) + ")");
        }
    return pass(name);
}

Matrix comodule_lift(const HopfAlgebra& h, const Coaction& lambda, const Matrix& translation)
{
    const CheckResult coassoc = check_coassociative(h, lambda);
    if (!coassoc.passed())
        throw std::invalid_argument("invalid coaction: " + coassoc.witness);
    const std::size_t m = lambda.comodule_dim();
    Matrix lift(h.field(), m, m);
    // (eps o L)(e_h) weights component h.
    const Vector eps_of_l = translation.transpose() * h.counit();
    for (std::size_t l = 0; l < h.dim(); ++l) {
        if (!eps_of_l[l].is_zero())
            lift += eps_of_l[l] * lambda.components[l];
    }
    return lift;
}

CheckResult check_lift_square(const HopfAlgebra& h, const Coaction& lambda, const Matrix& translation,
                              const Matrix& lift)
{
    const std::string name = "lifted translation intertwines the coaction";
    for (std::size_t k = 0; k < h.dim(); ++k) {
        Matrix rhs(h.field(), lift.rows(), lift.cols());
        for (std::size_t l = 0; l < h.dim(); ++l) {
            if (!translation(k, l).is_zero())
                rhs += translation(k, l) * lambda.components[l];
        }
        if (!(lambda.components[k] * lift == rhs))
            return fail(name, "component " + h.name(k));
    }
    return pass(name);
}

}  // namespace hopfcalc
