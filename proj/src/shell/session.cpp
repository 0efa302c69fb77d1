#include "shell/session.hpp"

#include "core/witness.hpp"

namespace hopfcalc::shell {

Session::Session(DefinitionDocument doc, std::shared_ptr<const HopfAlgebra> algebra, std::uint64_t seed)
    : doc_(std::move(doc)), algebra_(std::move(algebra)), rng_(seed)
{
}

const CharacterSet& Session::characters()
{
    if (!characters_)
        characters_ = find_characters(*algebra_);
    return *characters_;
}

std::string Session::character_name(const Functional& phi)
{
    for (const auto& declared : doc_.characters) {
        const auto v = build_vectors(doc_, declared, field());
        if (v.front() == phi)
            return declared.name;
    }
    if (phi == algebra_->counit())
        return "eps";
    const std::size_t k = characters().index_of(phi);
    if (k == CharacterSet::npos)
        return "(" + to_string(phi) + ")";
    return "phi" + std::to_string(k);
}

const Character& Session::character_named(const std::string& name)
{
    for (const auto& c : characters().characters)
        if (character_name(c.functional) == name)
            return c;
    if (doc_.find_character(name))
        throw InputError("character '" + name + "' is not an algebra map H -> k",
                         doc_.positions.at("character " + name));
    throw InputError("unknown character '" + name + "'");
}

std::vector<AlgebraElement> Session::ideal_generators(const std::string& name) const
{
    const NamedVectors* ideal = doc_.find_ideal(name);
    if (!ideal)
        throw InputError("unknown ideal '" + name + "'");
    return build_vectors(doc_, *ideal, field());
}

Fodc Session::calculus(const std::optional<std::string>& ideal)
{
    if (!ideal)
        return universal_fodc(algebra_);
    const auto gens = ideal_generators(*ideal);
    try {
        return woronowicz_from_ideal(algebra_, gens);
    } catch (const std::invalid_argument& e) {
        throw InputError("ideal '" + *ideal + "': " + e.what(), doc_.positions.at("ideal " + *ideal));
    }
}

std::string Session::calculus_label(const std::optional<std::string>& ideal)
{
    return ideal ? "woronowicz(" + *ideal + ")" : "universal";
}

Scalar Session::random_scalar()
{
    std::uniform_int_distribution<long> dist(-3, 3);
    return Scalar(field(), dist(rng_));
}

AlgebraElement Session::random_element()
{
    AlgebraElement a = algebra_->zero();
    for (auto& c : a)
        c = random_scalar();
    return a;
}

void add_check(RunReport& report, const std::string& prefix, CheckResult check)
{
    if (!prefix.empty())
        check.name = prefix + ": " + check.name;
    report.checks.add(std::move(check));
}

void add_checks(RunReport& report, const std::string& prefix, const CheckList& checks)
{
    for (const auto& c : checks.checks)
        add_check(report, prefix, c);
}

namespace {

/// (L (x) I) applied to a tensor.
TensorElement translate_left(const HopfAlgebra& h, const Matrix& l, const TensorElement& t)
{
    const std::size_t n = h.dim();
    TensorElement out = h.tensor_zero();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const Scalar& c = t[j * n + k];
            if (c.is_zero())
                continue;
            for (std::size_t r = 0; r < n; ++r)
                if (!l(r, j).is_zero())
                    out[r * n + k] += c * l(r, j);
        }
    return out;
}

}  // namespace

CheckList translation_group_checks(Session& s)
{
    const HopfAlgebra& h = s.algebra();
    const CharacterSet& cs = s.characters();
    const std::size_t n = h.dim();
    CheckList out;

    WitnessLog is_char("every found functional is an algebra map");
    WitnessLog alg("every translation is an algebra map");
    WitnessLog comod("every translation is a right comodule map");
    for (const auto& c : cs.characters) {
        const std::string name = s.character_name(c.functional);
        const CheckResult r = check_character(h, c.functional);
        if (r.failed())
            is_char.record(name + ": " + r.witness);
        if (c.translation * h.unit() != h.unit())
            alg.record(name + ": L(1) != 1");
        for (std::size_t i = 0; i < n; ++i) {
            const AlgebraElement li = c.translation.column(i);
            for (std::size_t j = 0; j < n; ++j)
                if (c.translation * h.multiply(h.basis(i), h.basis(j)) != h.multiply(li, c.translation.column(j)))
                    alg.record(name + " at (" + h.name(i) + ", " + h.name(j) + ")");
            if (h.comultiply(li) != translate_left(h, c.translation, h.comultiply(h.basis(i))))
                comod.record(name + " at " + h.name(i));
        }
    }
    out.add(is_char.result());
    out.add(alg.result());
    out.add(comod.result());

    WitnessLog declared("declared characters are algebra maps");
    for (const auto& d : s.doc().characters) {
        const CheckResult r = check_character(h, build_vectors(s.doc(), d, h.field()).front());
        if (r.failed())
            declared.record(d.name + ": " + r.witness);
    }
    out.add(declared.result());

    const Character eps = counit_character(h);
    WitnessLog closure("star product closes on the found characters");
    WitnessLog identity("eps is a two-sided identity");
    WitnessLog inverse("phi o S is a two-sided inverse");
    WitnessLog assoc("star product is associative");
    WitnessLog composite("L of phi * psi is L_phi L_psi");
    for (const auto& a : cs.characters) {
        const std::string an = s.character_name(a.functional);
        if (star_product(h, eps, a) != a || star_product(h, a, eps) != a)
            identity.record(an);
        const Character inv = character_inverse(h, a);
        if (star_product(h, a, inv) != eps || star_product(h, inv, a) != eps)
            inverse.record(an);
        for (const auto& b : cs.characters) {
            const std::string bn = s.character_name(b.functional);
            const Character ab = star_product(h, a, b);
            if (cs.complete && cs.index_of(ab.functional) == CharacterSet::npos)
                closure.record(an + " * " + bn);
            if (ab.translation != a.translation * b.translation)
                composite.record(an + " * " + bn);
            for (const auto& c : cs.characters)
                if (star_product(h, ab, c) != star_product(h, a, star_product(h, b, c)))
                    assoc.record(an + ", " + bn + ", " + s.character_name(c.functional));
        }
    }
    out.add(closure.result());
    out.add(identity.result());
    out.add(inverse.result());
    out.add(assoc.result());
    out.add(composite.result());
    return out;
}

}  // namespace hopfcalc::shell
